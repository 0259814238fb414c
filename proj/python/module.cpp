#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "beideal/depth.hpp"
#include "beideal/errors.hpp"
#include "beideal/enumerate.hpp"
#include "beideal/families.hpp"
#include "beideal/json_io.hpp"
#include "beideal/oracle.hpp"
#include "beideal/structure.hpp"
#include "beideal/sweep.hpp"

namespace py = pybind11;
using namespace bei;

namespace {

Field field_of(const std::string& name) {
    if (name == "q" || name == "Q") return Field::Q;
    if (name == "f2" || name == "F2") return Field::F2;
    throw std::invalid_argument("field must be 'q' or 'f2'");
}

py::dict bundle_dict(const InvariantBundle& b) {
    py::dict d;
    d["n"] = b.n;
    d["d"] = b.d;
    d["f"] = b.f;
    d["kappa"] = b.kappa;
    d["iv"] = b.iv;
    d["omega"] = b.omega;
    d["chordal"] = b.chordal;
    d["connected"] = b.connected;
    d["complete"] = b.complete;
    d["gap"] = b.gap;
    return d;
}

py::dict oracle_dict(const OracleReport& r) {
    py::dict d;
    d["n"] = r.n;
    d["depth"] = r.depth;
    d["pd"] = r.pd;
    d["reg"] = r.reg;
    d["field"] = field_name(r.field);
    d["extremal"] = r.initial_betti.extremal_corners;
    py::dict betti;
    for (const auto& [key, value] : r.initial_betti.beta) {
        betti[py::make_tuple(key.first, key.second)] = value;
    }
    d["betti_initial"] = betti;
    return d;
}

py::dict depth_dict(const DepthResult& r) {
    py::dict d;
    d["lower"] = r.lower;
    d["upper"] = r.upper;
    d["exact"] = r.exact ? py::cast(*r.exact) : py::none();
    d["rule"] = depth_rule_name(r.rule);
    d["class"] = class_tag_name(r.label.tag);
    d["certificate"] = r.certificate;
    return d;
}

}  // namespace

PYBIND11_MODULE(_beideal, m) {
    m.doc() = "binomial edge ideal depth toolkit (C++ core)";

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("n"),
             py::arg("edges"))
        .def_static("from_graph6", &parse_graph6, py::arg("text"))
        .def_property_readonly("n", &Graph::n)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("adjacent", &Graph::adjacent, py::arg("i"), py::arg("j"))
        .def("neighbors", &Graph::neighbors, py::arg("i"))
        .def("graph6", [](const Graph& g) { return to_graph6(g); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.n()) + " m=" + std::to_string(g.edge_count()) +
                   " g6=" + to_graph6(g) + ">";
        });

    m.def("invariants", [](const Graph& g) { return bundle_dict(invariants(g)); });
    m.def("distance", [](const Graph& g, int i, int j) -> py::object {
        const auto d = distance(g, i, j);
        return d ? py::cast(*d) : py::none();
    });
    m.def("diameter", &diameter);
    m.def("simplicial_partition", &simplicial_partition);
    m.def("vertex_connectivity", &vertex_connectivity);
    m.def("components_after",
          [](const Graph& g, const std::vector<int>& t) { return components_after(g, t); });
    m.def("is_cutset", &is_cutset);
    m.def("minimal_cutsets", [](const Graph& g, int max_size) {
        const auto cs = minimal_cutsets(g, max_size);
        py::dict d;
        d["cut_vertices"] = cs.cut_vertices;
        d["minimal_cutsets"] = cs.minimal_cutsets;
        d["a"] = cs.a;
        d["m"] = cs.m;
        return d;
    });
    m.def("maximal_cliques", &maximal_cliques);
    m.def("is_chordal", &is_chordal);
    m.def("induced_cycle_scan", [](const Graph& g) {
        const auto scan = induced_cycle_scan(g);
        py::dict d;
        d["count_c4"] = scan.count_c4;
        d["has_c5_or_longer"] = scan.has_c5_or_longer;
        d["witness"] = scan.witness ? py::cast(*scan.witness) : py::none();
        return d;
    });

    m.def("ohtani_completion", &ohtani_completion);
    m.def("delete_vertex", [](const Graph& g, int v) {
        const auto del = delete_vertex(g, v);
        return py::make_tuple(del.graph, del.old_label);
    });
    m.def("delete_edge", &delete_edge);
    m.def("clique_sum", &clique_sum);
    m.def("is_decomposable", [](const Graph& g) -> py::object {
        const auto dec = is_decomposable(g);
        if (!dec) return py::none();
        py::dict d;
        d["vertex"] = dec->vertex;
        d["part1"] = dec->part1;
        d["part2"] = dec->part2;
        d["part1_labels"] = dec->part1_labels;
        d["part2_labels"] = dec->part2_labels;
        return d;
    });
    m.def("block_profile", [](const Graph& g) {
        const auto bp = block_profile(g);
        py::dict d;
        d["kind"] = bp.kind == BlockKind::BlockGraph          ? "BlockGraph"
                    : bp.kind == BlockKind::GeneralizedBlockGraph ? "GeneralizedBlockGraph"
                                                                  : "Neither";
        d["a"] = bp.a;
        d["m"] = bp.m;
        d["omega"] = bp.omega;
        return d;
    });
    m.def("chain_of_cliques", [](const Graph& g) -> py::object {
        const auto chain = chain_of_cliques(g);
        if (!chain) return py::none();
        py::dict d;
        d["r"] = chain->r;
        d["q"] = chain->q;
        d["overlap_nonempty"] = chain->overlap_nonempty;
        d["facet_order"] = chain->facet_order;
        return d;
    });
    m.def("is_unicyclic", &is_unicyclic);

    m.def("feasibility", &feasibility, py::arg("n"), py::arg("kappa"), py::arg("f"), py::arg("d"));
    m.def("classify", [](const Graph& g) {
        const auto label = classify(g);
        py::dict d;
        d["class"] = class_tag_name(label.tag);
        d["invariants"] = bundle_dict(label.bundle);
        d["notes"] = label.notes;
        return d;
    });
    m.def("check_structural_theorem", &check_structural_theorem);
    m.def("cliques_attached", &cliques_attached);

    m.def("depth_bounds", &depth_bounds);
    m.def("gbg_depth", &gbg_depth);
    m.def("coc_lower_bound", [](const Graph& g) -> py::object {
        const auto b = coc_lower_bound(g);
        return b ? py::cast(*b) : py::none();
    });
    m.def("predict_depth", [](const Graph& g) { return depth_dict(predict_depth(g)); });

    m.def(
        "depth_exact",
        [](const Graph& g, const std::string& field, int var_limit) {
            return oracle_dict(depth_exact(g, {field_of(field), var_limit}));
        },
        py::arg("g"), py::arg("field") = "q", py::arg("var_limit") = 16);
    m.def(
        "ohtani_check",
        [](const Graph& g, int v, const std::string& field) {
            return ohtani_check(g, v, field_of(field));
        },
        py::arg("g"), py::arg("v"), py::arg("field") = "q");

    m.def(
        "construct",
        [](const std::string& family, py::kwargs kwargs) {
            const auto fam = family_by_name(family);
            if (!fam) throw std::invalid_argument("unknown family: " + family);
            FamilySpec spec;
            spec.family = *fam;
            if (kwargs.contains("n")) spec.n = kwargs["n"].cast<int>();
            if (kwargs.contains("d")) spec.d = kwargs["d"].cast<int>();
            if (kwargs.contains("f")) spec.f = kwargs["f"].cast<int>();
            if (kwargs.contains("kappa")) spec.kappa = kwargs["kappa"].cast<int>();
            if (kwargs.contains("r")) spec.r = kwargs["r"].cast<std::vector<int>>();
            if (kwargs.contains("q")) spec.q = kwargs["q"].cast<std::vector<int>>();
            return construct(spec);
        },
        py::arg("family"));

    m.def("enumerate_connected", &enumerate_connected);
    m.def(
        "sweep",
        [](int n_max, bool with_oracle, int jobs) {
            SweepOptions opts;
            opts.n_max = n_max;
            opts.with_oracle = with_oracle;
            opts.jobs = jobs;
            const auto rep = sweep(opts);
            py::list records;
            for (const auto& rec : rep.records) {
                records.append(py::module_::import("json").attr("loads")(to_json(rec).dump()));
            }
            py::dict d;
            d["records"] = records;
            d["summary"] = py::module_::import("json").attr("loads")(
                to_json(rep.summary).dump());
            return d;
        },
        py::arg("n_max"), py::arg("with_oracle") = false, py::arg("jobs") = 1);

    py::register_exception<LimitError>(m, "LimitError");
}
