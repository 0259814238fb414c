#pragma once

#include <optional>
#include <vector>

#include "beideal/graph.hpp"

namespace bei {

enum class Pattern { None, H, HPrime, HDoublePrime };

/// A diametral pair with a canonical shortest (hence induced) path, the
/// off-path internal vertex when it is unique, and the local pattern
/// around it. Path positions are 0-based: path[0] = u, path[d] = v; j is
/// the least position adjacent to the off-path vertex (endpoints count).
struct DiametralConfig {
    int u = 0;
    int v = 0;
    std::vector<int> path;
    std::optional<int> off_path_internal;
    std::optional<int> j;
    Pattern pattern = Pattern::None;
    bool endpoints_simplicial = false;
    // kappa = 2, d = 3 only: the labeled square u1,v1,v2,u2 and its edges
    // e1 = {u1,v1}, e2 = {v1,v2}, e3 = {u1,u2}, e4 = {v2,u2}
    std::optional<std::array<int, 4>> h2_square;  // u1, v1, v2, u2
};

enum class ClassTag {
    HibiMadani_G_d,
    HibiMadani_F_q,
    D_minus_D1,
    D1,
    NonChordalC4_CutHit,
    NonChordalC4_CutMiss,
    Kappa2plus_D2,
    Kappa2_D3_Chordal_E23Free,
    Kappa2_D3_Chordal_Other,
    Kappa2_D3_NonChordal,
    GeneralizedBlock,
    ChainOfCliques_Overlap,
    Unclassified
};

std::string class_tag_name(ClassTag tag);

struct ClassLabel {
    ClassTag tag = ClassTag::Unclassified;
    InvariantBundle bundle;
    std::optional<DiametralConfig> config;
    std::vector<std::string> notes;  // certificate witnesses, human-readable
};

/// Theorem feasibility of an invariant tuple: true iff a connected graph on
/// n >= 5 vertices with these exact invariants and d+f+1 = n+2-kappa
/// exists. Tuples failing the equality (or forcing n = 4) are infeasible.
bool feasibility(int n, int kappa, int f, int d);

/// Canonical diametral configuration. Preference: lexicographically
/// smallest diametral pair with both endpoints simplicial when one exists,
/// else the smallest pair; the path is the lexicographically least
/// shortest path. Throws std::domain_error for complete or disconnected
/// input.
DiametralConfig diametral_config(const Graph& g);

/// True iff some maximal clique K with K ∩ base == at exists, K not one of
/// the two mandatory cliques (the unique maximal cliques containing the
/// canonical diametral endpoints).
bool cliques_attached(const Graph& g, const std::vector<int>& base, const std::vector<int>& at);

/// Structural classification of a connected non-complete graph.
ClassLabel classify(const Graph& g);

/// Necessary structural conditions for gap-1 graphs, by (kappa, d) branch.
/// Requires gap(G) = 1.
bool check_structural_theorem(const Graph& g);

}  // namespace bei
