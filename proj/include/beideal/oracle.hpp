#pragma once

#include <map>
#include <vector>

#include "beideal/graph.hpp"
#include "beideal/poly.hpp"

namespace bei {

enum class Field { Q, F2 };

/// Graded Betti numbers of S/I for a squarefree monomial ideal I, plus the
/// invariants read off them. depth + pd = nvars (Auslander-Buchsbaum).
struct BettiTable {
    std::map<std::pair<int, int>, long long> beta;  // (i, j) -> beta_{i,j}
    int nvars = 0;
    int pd = 0;
    int depth = 0;
    int reg = 0;
    std::vector<std::pair<int, int>> extremal_corners;

    long long at(int i, int j) const {
        const auto it = beta.find({i, j});
        return it == beta.end() ? 0 : it->second;
    }
};

struct OracleOptions {
    Field field = Field::Q;
    int var_limit = 16;  // refuse rings with more variables than this
};

/// Exact report for S/J_G: depth, pd and reg are exact for the binomial
/// edge ideal itself (squarefree initial ideal transfer); the full Betti
/// table is the table of the initial ideal, an upper bound for J_G.
struct OracleReport {
    int n = 0;
    int depth = 0;
    int pd = 0;
    int reg = 0;
    Field field = Field::Q;
    std::vector<std::pair<int, int>> extremal;
    BettiTable initial_betti;
    std::vector<Monomial> initial_gens;
};

/// One binomial x_i y_j - x_j y_i per edge (i < j), in 2n variables.
template <class F>
std::vector<Poly<F>> jg_generators(const Graph& g);

extern template std::vector<Poly<Rational>> jg_generators<Rational>(const Graph&);
extern template std::vector<Poly<GF2>> jg_generators<GF2>(const Graph&);

/// Hochster's formula: beta_{i,j}(S/I) = sum over |sigma| = j of
/// dim_K H~_{j-i-1}(Delta|_sigma), Delta the Stanley-Reisner complex of I.
/// Generators are given as squarefree monomials over nvars variables.
BettiTable betti_table(const std::vector<Monomial>& sq_gens, int nvars, Field field = Field::Q);

/// Full pipeline: J_G -> reduced GB under diagonal lex -> squarefree initial
/// ideal -> Hochster -> depth/pd/reg/extremal corners.
OracleReport depth_exact(const Graph& g, const OracleOptions& opts = {});

/// Lemma "J_G = J_{G_v} ∩ ((x_v, y_v) + J_{G \ v})" checked literally,
/// with the deleted-vertex ideal embedded at the original variable indices.
/// Requires v internal (throws std::domain_error otherwise).
bool ohtani_check(const Graph& g, int v, Field field = Field::Q);

std::string field_name(Field f);

}  // namespace bei
