#pragma once

#include <optional>
#include <string>
#include <vector>

#include "beideal/classify.hpp"
#include "beideal/graph.hpp"

namespace bei {

enum class DepthRule {
    HM,
    T45,
    T46,
    P47,
    P48,
    P49,
    P410,
    P411,
    P412,
    R51,
    T52_LB,
    UNI_BOUNDS,
    DECOMP,
    GENERIC
};

std::string depth_rule_name(DepthRule rule);

struct DepthResult {
    int lower = 0;
    int upper = 0;
    std::optional<int> exact;
    DepthRule rule = DepthRule::GENERIC;
    ClassLabel label;
    std::vector<std::string> certificate;  // every rule that fired, with values
};

/// (d+f, n+2-kappa), tightened to (n, n+1) for unicyclic non-cycle graphs
/// where that is sharper. Connected non-complete input only.
std::pair<int, int> depth_bounds(const Graph& g);

/// depth(S/J_G) = n + 1 - sum_{i=2}^{omega-1} (i-1) a_i for (generalized)
/// block graphs. Throws std::domain_error otherwise.
int gbg_depth(const Graph& g);

/// Theorem lower bound d+f+1 for chains of cliques with two consecutive
/// overlaps of size >= 2 meeting in a vertex (decomposable chains reduce to
/// their indecomposable subchains). nullopt when the hypothesis fails.
std::optional<int> coc_lower_bound(const Graph& g);

/// Exact depth where a rule applies, otherwise the sharpest known bounds.
/// All applicable exact rules are evaluated and must agree; a disagreement
/// throws std::logic_error since it falsifies the implementation.
DepthResult predict_depth(const Graph& g);

}  // namespace bei
