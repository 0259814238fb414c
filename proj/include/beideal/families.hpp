#pragma once

#include <optional>
#include <string>
#include <vector>

#include "beideal/graph.hpp"

namespace bei {

enum class Family { ExK1, Sigma, Gamma, Omega, Delta, Path, Complete, Cycle, Star, ChainOfCliques };

struct FamilySpec {
    Family family = Family::Path;
    std::optional<int> n;
    std::optional<int> d;
    std::optional<int> f;
    std::optional<int> kappa;
    std::vector<int> r;
    std::vector<int> q;
};

std::optional<Family> family_by_name(const std::string& name);
std::string family_name(Family f);

/// Build the named construction; throws std::invalid_argument when a
/// parameter leaves its documented range.
///   ExK1(f >= 3, d >= 2):    (K_f u_e K_3) u_v P_d, v in e
///   Sigma(d >= 3):           K_3 u_e K_3 u_v P_{d-1}, v not in e
///   Gamma(f >= 2):           K_3 u_e K_{f+1} u_e' K_3, |e ^ e'| = 1
///   Omega(f >= 2):           K_3 u_e K_{f+2} u_e' K_3, e ^ e' empty
///   Delta(f >= 2, k >= 3):   K_{k+1} u_{K_k} K_{f+k-1} u_{K'_k} K_{k+1}
///   Path/Complete/Cycle/Star(n)
///   ChainOfCliques(r, q):    interval chain, clique i overlaps i+1 in q_i
Graph construct(const FamilySpec& spec);

}  // namespace bei
