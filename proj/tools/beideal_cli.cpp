#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "beideal/enumerate.hpp"
#include "beideal/errors.hpp"
#include "beideal/families.hpp"
#include "beideal/json_io.hpp"
#include "beideal/structure.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_parse = 2;
constexpr int exit_limit = 3;
constexpr int exit_mismatch = 4;

bei::Graph load_graph(const std::string& input, const std::string& g6) {
    if (!g6.empty()) return bei::parse_graph6(g6);
    if (input.empty()) throw std::invalid_argument("no input graph given (FILE, '-', or --g6)");
    std::string text;
    if (input == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(input);
        if (!in) throw std::invalid_argument("cannot open " + input);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    // a lone graph6 line is accepted as well as edge-list text
    std::string trimmed = text;
    while (!trimmed.empty() && (trimmed.back() == '\n' || trimmed.back() == '\r' ||
                                trimmed.back() == ' ')) {
        trimmed.pop_back();
    }
    if (trimmed.find('\n') == std::string::npos && !trimmed.empty() &&
        !(trimmed[0] >= '0' && trimmed[0] <= '9')) {
        return bei::parse_graph6(trimmed);
    }
    return bei::parse_edge_list_text(text);
}

int env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    return std::atoi(v);
}

long long env_ll(const char* name, long long fallback) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    return std::atoll(v);
}

void print_invariants(const bei::InvariantBundle& b) {
    std::cout << "n        " << b.n << "\n"
              << "edges    (see export-dot)\n"
              << "d        " << b.d << "\n"
              << "f        " << b.f << "\n"
              << "kappa    " << b.kappa << "\n"
              << "iv       " << b.iv << "\n"
              << "omega    " << b.omega << "\n"
              << "chordal  " << (b.chordal ? "yes" : "no") << "\n"
              << "complete " << (b.complete ? "yes" : "no") << "\n"
              << "gap      " << b.gap << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"binomial edge ideal depth toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // allow global flags like --json after the subcommand

    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable JSON");

    std::string input, g6;
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", input, "edge-list file, graph6 file, or '-' for stdin");
        sub->add_option("--g6", g6, "graph6 string");
    };

    auto* cmd_inv = app.add_subcommand("invariants", "diameter, simplicial count, connectivity");
    add_input(cmd_inv);

    auto* cmd_classify = app.add_subcommand("classify", "structural class of the graph");
    add_input(cmd_classify);

    bool with_oracle = false;
    auto* cmd_depth = app.add_subcommand("depth", "predicted depth of S/J_G with certificate");
    add_input(cmd_depth);
    cmd_depth->add_flag("--oracle", with_oracle, "cross-check the prediction exactly");

    bool show_betti = false;
    std::string field_str = "q";
    int var_limit = env_int("BEIDEAL_VAR_LIMIT", 16);
    auto* cmd_oracle = app.add_subcommand("oracle", "exact depth/pd/reg via Groebner + Hochster");
    add_input(cmd_oracle);
    cmd_oracle->add_flag("--betti", show_betti, "print the Betti table of the initial ideal");
    cmd_oracle->add_option("--field", field_str, "coefficient field: q or f2");
    cmd_oracle->add_option("--var-limit", var_limit, "refuse rings with more variables");
    cmd_depth->add_option("--var-limit", var_limit, "refuse rings with more variables");

    std::string family;
    bei::FamilySpec fspec;
    int p_n = -1, p_d = -1, p_f = -1, p_kappa = -1;
    std::vector<int> p_r, p_q;
    auto* cmd_construct = app.add_subcommand("construct", "build a named example family");
    cmd_construct->add_option("family", family,
                              "exk1|sigma|gamma|omega|delta|path|complete|cycle|star|chain")
        ->required();
    cmd_construct->add_option("--n", p_n, "vertex count (path/complete/cycle/star)");
    cmd_construct->add_option("--d", p_d, "diameter parameter");
    cmd_construct->add_option("--f", p_f, "simplicial-vertex parameter");
    cmd_construct->add_option("--kappa", p_kappa, "connectivity parameter");
    cmd_construct->add_option("--r", p_r, "chain clique sizes")->delimiter(',');
    cmd_construct->add_option("--q", p_q, "chain overlap sizes")->delimiter(',');

    int sweep_n = 6, jobs = 1, resume = 0;
    long long budget_ms = env_ll("BEIDEAL_SWEEP_BUDGET_MS", -1);
    bool sweep_oracle = false;
    std::string out_file;
    auto* cmd_sweep = app.add_subcommand("sweep", "classify every connected graph up to n");
    cmd_sweep->add_option("--n", sweep_n, "largest vertex count (3..7)")->required();
    cmd_sweep->add_flag("--oracle", sweep_oracle, "run the exact oracle per graph (n <= 6)");
    cmd_sweep->add_option("--jobs", jobs, "parallel workers");
    cmd_sweep->add_option("--out", out_file, "write JSON-lines records to this file");
    cmd_sweep->add_option("--resume", resume, "resume token from a partial run");
    cmd_sweep->add_option("--budget-ms", budget_ms, "wall-clock budget in milliseconds");
    cmd_sweep->add_option("--var-limit", var_limit, "oracle variable limit");

    auto* cmd_dot = app.add_subcommand("export-dot", "write the graph in DOT format");
    add_input(cmd_dot);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        const bei::Field field = field_str == "f2" ? bei::Field::F2 : bei::Field::Q;

        if (cmd_inv->parsed()) {
            const auto g = load_graph(input, g6);
            const auto b = bei::invariants(g);
            if (as_json) {
                auto j = bei::to_json(b);
                j["graph6"] = bei::to_graph6(g);
                std::cout << j.dump(2) << "\n";
            } else {
                print_invariants(b);
            }
            return exit_ok;
        }

        if (cmd_classify->parsed()) {
            const auto g = load_graph(input, g6);
            const auto label = bei::classify(g);
            if (as_json) {
                nlohmann::json j{{"graph6", bei::to_graph6(g)},
                                 {"class", bei::class_tag_name(label.tag)},
                                 {"invariants", bei::to_json(label.bundle)}};
                if (!label.notes.empty()) j["notes"] = label.notes;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "class " << bei::class_tag_name(label.tag) << "\n";
                for (const auto& note : label.notes) std::cout << "note  " << note << "\n";
            }
            return exit_ok;
        }

        if (cmd_depth->parsed()) {
            const auto g = load_graph(input, g6);
            const auto pred = bei::predict_depth(g);
            std::optional<bei::OracleReport> oracle;
            if (with_oracle) {
                oracle = bei::depth_exact(g, {bei::Field::Q, var_limit});
            }
            if (as_json) {
                auto j = bei::to_json(pred);
                j["graph6"] = bei::to_graph6(g);
                if (oracle) j["oracle_depth"] = oracle->depth;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "class  " << bei::class_tag_name(pred.label.tag) << "\n";
                std::cout << "bounds [" << pred.lower << ", " << pred.upper << "]\n";
                if (pred.exact) {
                    std::cout << "exact  " << *pred.exact << "  (rule " << depth_rule_name(pred.rule)
                              << ")\n";
                }
                for (const auto& line : pred.certificate) std::cout << "  " << line << "\n";
                if (oracle) std::cout << "oracle " << oracle->depth << "\n";
            }
            if (oracle) {
                const bool ok = oracle->depth >= pred.lower && oracle->depth <= pred.upper &&
                                (!pred.exact || *pred.exact == oracle->depth);
                if (!ok) {
                    std::cerr << "consistency mismatch: prediction disagrees with the oracle\n";
                    return exit_mismatch;
                }
            }
            return exit_ok;
        }

        if (cmd_oracle->parsed()) {
            const auto g = load_graph(input, g6);
            const auto rep = bei::depth_exact(g, {field, var_limit});
            if (as_json) {
                auto j = bei::to_json(rep);
                j["graph6"] = bei::to_graph6(g);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "depth " << rep.depth << "\npd    " << rep.pd << "\nreg   "
                          << rep.reg << "\nfield " << bei::field_name(rep.field) << "\n";
                std::cout << "extremal corners:";
                for (const auto& [i, j] : rep.initial_betti.extremal_corners) {
                    std::cout << " (" << i << "," << j << ")";
                }
                std::cout << "\n";
                if (show_betti) {
                    for (const auto& [key, value] : rep.initial_betti.beta) {
                        std::cout << "beta(" << key.first << "," << key.second << ") = " << value
                                  << "\n";
                    }
                }
            }
            return exit_ok;
        }

        if (cmd_construct->parsed()) {
            const auto fam = bei::family_by_name(family);
            if (!fam) throw std::invalid_argument("unknown family: " + family);
            fspec.family = *fam;
            if (p_n >= 0) fspec.n = p_n;
            if (p_d >= 0) fspec.d = p_d;
            if (p_f >= 0) fspec.f = p_f;
            if (p_kappa >= 0) fspec.kappa = p_kappa;
            fspec.r = p_r;
            fspec.q = p_q;
            const auto g = bei::construct(fspec);
            if (as_json) {
                nlohmann::json j{{"graph6", bei::to_graph6(g)},
                                 {"invariants", bei::to_json(bei::invariants(g))},
                                 {"edges", g.edges()}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << bei::to_edge_list_text(g);
            }
            return exit_ok;
        }

        if (cmd_sweep->parsed()) {
            bei::SweepOptions opts;
            opts.n_max = sweep_n;
            opts.with_oracle = sweep_oracle;
            opts.jobs = jobs;
            opts.budget_ms = budget_ms;
            opts.resume_from = resume;
            opts.var_limit = var_limit;
            const auto report = bei::sweep(opts);
            std::ostream* out = &std::cout;
            std::ofstream file;
            if (!out_file.empty()) {
                file.open(out_file);
                if (!file) throw std::invalid_argument("cannot write " + out_file);
                out = &file;
            }
            for (const auto& rec : report.records) *out << bei::to_json(rec).dump() << "\n";
            auto summary = bei::to_json(report.summary);
            summary["timestamp_ms"] =
                std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::system_clock::now().time_since_epoch())
                    .count();
            *out << summary.dump() << "\n";
            if (!out_file.empty()) {
                std::cout << "processed " << report.summary.processed << "/" << report.summary.total
                          << ", mismatches " << report.summary.mismatches << "\n";
                if (report.summary.resume_token) {
                    std::cout << "budget exhausted; resume with --resume "
                              << *report.summary.resume_token << "\n";
                }
            }
            if (report.summary.resume_token) return exit_limit;
            if (report.summary.mismatches > 0) return exit_mismatch;
            return exit_ok;
        }

        if (cmd_dot->parsed()) {
            const auto g = load_graph(input, g6);
            std::cout << bei::to_dot(g);
            return exit_ok;
        }
    } catch (const bei::LimitError& e) {
        std::cerr << "limit exceeded: " << e.what() << "\n";
        return exit_limit;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_parse;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_parse;
    } catch (const std::logic_error& e) {
        std::cerr << "internal consistency error: " << e.what() << "\n";
        return exit_mismatch;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
