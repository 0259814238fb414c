#pragma once

#include <vector>

#include "beideal/families.hpp"
#include "beideal/graph.hpp"

namespace bei::test {

inline Graph path(int n) {
    FamilySpec s;
    s.family = Family::Path;
    s.n = n;
    return construct(s);
}

inline Graph cycle(int n) {
    FamilySpec s;
    s.family = Family::Cycle;
    s.n = n;
    return construct(s);
}

inline Graph complete(int n) {
    FamilySpec s;
    s.family = Family::Complete;
    s.n = n;
    return construct(s);
}

inline Graph star(int n) {
    FamilySpec s;
    s.family = Family::Star;
    s.n = n;
    return construct(s);
}

inline Graph sigma(int d) {
    FamilySpec s;
    s.family = Family::Sigma;
    s.d = d;
    return construct(s);
}

inline Graph gamma(int f) {
    FamilySpec s;
    s.family = Family::Gamma;
    s.f = f;
    return construct(s);
}

inline Graph omega(int f) {
    FamilySpec s;
    s.family = Family::Omega;
    s.f = f;
    return construct(s);
}

inline Graph delta(int f, int kappa) {
    FamilySpec s;
    s.family = Family::Delta;
    s.f = f;
    s.kappa = kappa;
    return construct(s);
}

inline Graph exk1(int f, int d) {
    FamilySpec s;
    s.family = Family::ExK1;
    s.f = f;
    s.d = d;
    return construct(s);
}

/// Three triangles on the shared edge {1,2}.
inline Graph three_triangles() {
    return Graph(5, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {1, 5}, {2, 5}});
}

/// The minimal pattern-H graph: path 1..5 plus 6 adjacent to 2,3,4.
inline Graph minimal_h() {
    return Graph(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {6, 2}, {6, 3}, {6, 4}});
}

/// H' at d = 4: path 1..5 plus 6 adjacent to 2 and 4 only (one induced C4).
inline Graph h_prime() {
    return Graph(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {6, 2}, {6, 4}});
}

/// Brute-force vertex connectivity for cross-checks.
inline int brute_connectivity(const Graph& g) {
    const int n = g.n();
    if (is_complete(g)) return n - 1;
    for (int size = 0; size < n - 1; ++size) {
        std::vector<int> idx(static_cast<std::size_t>(size));
        for (int k = 0; k < size; ++k) idx[static_cast<std::size_t>(k)] = k + 1;
        while (true) {
            std::uint64_t mask = 0;
            for (int v : idx) mask |= std::uint64_t{1} << (v - 1);
            if (components_after(g, mask) >= 2) return size;
            int k = size - 1;
            while (k >= 0 && idx[static_cast<std::size_t>(k)] == n - (size - 1 - k)) --k;
            if (k < 0) break;
            ++idx[static_cast<std::size_t>(k)];
            for (int j = k + 1; j < size; ++j) {
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
    }
    return n - 1;
}

}  // namespace bei::test
