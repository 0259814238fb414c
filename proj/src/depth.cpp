#include "beideal/depth.hpp"

#include <algorithm>
#include <stdexcept>

#include "beideal/structure.hpp"

namespace bei {

std::string depth_rule_name(DepthRule rule) {
    switch (rule) {
        case DepthRule::HM: return "HM";
        case DepthRule::T45: return "T45";
        case DepthRule::T46: return "T46";
        case DepthRule::P47: return "P47";
        case DepthRule::P48: return "P48";
        case DepthRule::P49: return "P49";
        case DepthRule::P410: return "P410";
        case DepthRule::P411: return "P411";
        case DepthRule::P412: return "P412";
        case DepthRule::R51: return "R51";
        case DepthRule::T52_LB: return "T52-LB";
        case DepthRule::UNI_BOUNDS: return "UNI-BOUNDS";
        case DepthRule::DECOMP: return "DECOMP";
        case DepthRule::GENERIC: return "GENERIC";
    }
    return "?";
}

std::pair<int, int> depth_bounds(const Graph& g) {
    if (!is_connected(g)) throw std::domain_error("depth_bounds: disconnected input");
    if (is_complete(g)) throw std::domain_error("depth_bounds: complete input");
    const auto b = invariants(g);
    int lower = b.d + b.f;
    int upper = b.n + 2 - b.kappa;
    if (is_unicyclic(g) && b.kappa == 1) {  // unicyclic non-cycle
        lower = std::max(lower, b.n);
        upper = std::min(upper, b.n + 1);
    }
    return {lower, upper};
}

int gbg_depth(const Graph& g) {
    const auto bp = block_profile(g);
    if (bp.kind == BlockKind::Neither) {
        throw std::domain_error("gbg_depth: not a generalized block graph");
    }
    int correction = 0;
    for (const auto& [size, count] : bp.a) {
        if (size >= 2) correction += (size - 1) * count;
    }
    return g.n() + 1 - correction;
}

namespace {

/// Induced subgraph on `keep` (sorted), labels compacted.
Graph induced_on(const Graph& g, const std::vector<int>& keep) {
    std::vector<int> new_of(static_cast<std::size_t>(g.n()) + 1, 0);
    for (std::size_t k = 0; k < keep.size(); ++k) {
        new_of[static_cast<std::size_t>(keep[k])] = static_cast<int>(k) + 1;
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& [i, j] : g.edges()) {
        const int a = new_of[static_cast<std::size_t>(i)];
        const int b = new_of[static_cast<std::size_t>(j)];
        if (a && b) edges.emplace_back(a, b);
    }
    return Graph(static_cast<int>(keep.size()), edges);
}

/// True when the chain hypothesis holds for g or for a free-vertex split of
/// it at a size-1 overlap, recursively.
bool chain_bonus(const Graph& g) {
    const auto chain = chain_of_cliques(g);
    if (!chain) return false;
    const auto& q = chain->q;
    const bool all_big = std::all_of(q.begin(), q.end(), [](int x) { return x >= 2; });
    if (all_big) {
        return std::any_of(chain->overlap_nonempty.begin(), chain->overlap_nonempty.end(),
                           [](bool x) { return x; });
    }
    // split at a size-1 overlap; the reduction needs the junction vertex
    // simplicial on both sides, otherwise the theorem is silent
    const auto cut = std::find(q.begin(), q.end(), 1);
    const std::size_t at = static_cast<std::size_t>(cut - q.begin());
    std::vector<int> left, right;
    for (std::size_t i = 0; i <= at; ++i) {
        for (int v : chain->facet_order[i]) left.push_back(v);
    }
    for (std::size_t i = at + 1; i < chain->facet_order.size(); ++i) {
        for (int v : chain->facet_order[i]) right.push_back(v);
    }
    auto dedupe = [](std::vector<int>& vs) {
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    };
    dedupe(left);
    dedupe(right);
    std::vector<int> junction;
    std::set_intersection(left.begin(), left.end(), right.begin(), right.end(),
                          std::back_inserter(junction));
    if (junction.size() != 1) return false;
    const int w = junction.front();
    std::vector<int> right_with_w = right;
    const Graph g1 = induced_on(g, left);
    const Graph g2 = induced_on(g, right_with_w);
    const int w1 = static_cast<int>(std::lower_bound(left.begin(), left.end(), w) - left.begin()) + 1;
    const int w2 = static_cast<int>(std::lower_bound(right.begin(), right.end(), w) - right.begin()) + 1;
    if (!is_simplicial(g1, w1) || !is_simplicial(g2, w2)) return false;
    return chain_bonus(g1) || chain_bonus(g2);
}

}  // namespace

std::optional<int> coc_lower_bound(const Graph& g) {
    if (!chain_of_cliques(g)) return std::nullopt;
    if (!chain_bonus(g)) return std::nullopt;
    const auto b = invariants(g);
    return b.d + b.f + 1;
}

namespace {

struct Candidate {
    DepthRule rule;
    int value;
};

DepthResult predict_impl(const Graph& g);

/// Depth for complete graphs (n + 1), used only inside decompositions.
int depth_of_part(const Graph& part, std::vector<std::string>& cert, const std::string& name) {
    if (is_complete(part)) {
        cert.push_back(name + ": complete on " + std::to_string(part.n()) + " vertices, depth " +
                       std::to_string(part.n() + 1));
        return part.n() + 1;
    }
    const DepthResult r = predict_impl(part);
    if (!r.exact) return -1;
    cert.push_back(name + ": " + depth_rule_name(r.rule) + " gives " + std::to_string(*r.exact));
    return *r.exact;
}

DepthResult predict_impl(const Graph& g) {
    DepthResult res;
    res.label = classify(g);
    const auto& b = res.label.bundle;
    auto [lower, upper] = depth_bounds(g);
    if (is_unicyclic(g) && b.kappa == 1) {
        res.certificate.push_back("UNI-BOUNDS: unicyclic non-cycle, depth in [" +
                                  std::to_string(b.n) + "," + std::to_string(b.n + 1) + "]");
    }

    std::vector<Candidate> exacts;
    switch (res.label.tag) {
        case ClassTag::HibiMadani_G_d:
        case ClassTag::HibiMadani_F_q:
            exacts.push_back({DepthRule::HM, b.d + b.f});
            break;
        case ClassTag::D_minus_D1:
            exacts.push_back({DepthRule::T45, b.n + 1});
            break;
        case ClassTag::D1:
            exacts.push_back({DepthRule::T46, b.n});
            break;
        case ClassTag::NonChordalC4_CutHit:
            exacts.push_back({DepthRule::P47, b.n + 1});
            break;
        case ClassTag::NonChordalC4_CutMiss:
            exacts.push_back({DepthRule::P48, b.n});
            break;
        case ClassTag::Kappa2plus_D2:
            exacts.push_back({DepthRule::P49, b.n + 2 - b.kappa});
            break;
        case ClassTag::Kappa2_D3_Chordal_E23Free:
            exacts.push_back({DepthRule::P410, b.n - 1});
            break;
        case ClassTag::Kappa2_D3_Chordal_Other:
            exacts.push_back({DepthRule::P411, b.n});
            break;
        case ClassTag::Kappa2_D3_NonChordal:
            exacts.push_back({DepthRule::P412, b.n});
            break;
        default:
            break;
    }

    const auto bp = block_profile(g);
    if (bp.kind != BlockKind::Neither) {
        exacts.push_back({DepthRule::R51, gbg_depth(g)});
    }

    if (const auto dec = is_decomposable(g)) {
        std::vector<std::string> cert;
        const int d1 = depth_of_part(dec->part1, cert, "part1");
        const int d2 = depth_of_part(dec->part2, cert, "part2");
        if (d1 > 0 && d2 > 0) {
            exacts.push_back({DepthRule::DECOMP, d1 + d2 - 2});
            res.certificate.push_back("DECOMP at vertex " + std::to_string(dec->vertex));
            for (auto& line : cert) res.certificate.push_back("  " + line);
        }
    }

    if (const auto coc = coc_lower_bound(g)) {
        lower = std::max(lower, *coc);
        res.certificate.push_back("T52-LB: chain of cliques gives depth >= " +
                                  std::to_string(*coc));
    }

    for (const auto& c : exacts) {
        res.certificate.push_back(depth_rule_name(c.rule) + ": depth = " +
                                  std::to_string(c.value));
    }
    for (std::size_t i = 1; i < exacts.size(); ++i) {
        if (exacts[i].value != exacts[0].value) {
            throw std::logic_error(
                "depth rules disagree on one graph: " + depth_rule_name(exacts[0].rule) + "=" +
                std::to_string(exacts[0].value) + " vs " + depth_rule_name(exacts[i].rule) + "=" +
                std::to_string(exacts[i].value) + " (implementation bug)");
        }
    }

    if (!exacts.empty()) {
        res.exact = exacts[0].value;
        res.rule = exacts[0].rule;
        if (*res.exact < lower || *res.exact > upper) {
            throw std::logic_error("exact depth " + std::to_string(*res.exact) +
                                   " escapes bounds [" + std::to_string(lower) + "," +
                                   std::to_string(upper) + "]");
        }
        res.lower = res.upper = *res.exact;
        return res;
    }
    res.lower = lower;
    res.upper = upper;
    if (lower == upper) {
        res.exact = lower;
        res.rule = is_unicyclic(g) && b.kappa == 1 ? DepthRule::UNI_BOUNDS : DepthRule::GENERIC;
        res.certificate.push_back("bounds pinch at " + std::to_string(lower));
    } else {
        res.rule = DepthRule::GENERIC;
    }
    return res;
}

}  // namespace

DepthResult predict_depth(const Graph& g) {
    if (!is_connected(g)) throw std::domain_error("predict_depth: disconnected input");
    if (is_complete(g)) throw std::domain_error("predict_depth: complete input");
    return predict_impl(g);
}

}  // namespace bei
