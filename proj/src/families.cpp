#include "beideal/families.hpp"

#include <stdexcept>

namespace bei {

std::optional<Family> family_by_name(const std::string& name) {
    if (name == "exk1") return Family::ExK1;
    if (name == "sigma") return Family::Sigma;
    if (name == "gamma") return Family::Gamma;
    if (name == "omega") return Family::Omega;
    if (name == "delta") return Family::Delta;
    if (name == "path") return Family::Path;
    if (name == "complete") return Family::Complete;
    if (name == "cycle") return Family::Cycle;
    if (name == "star") return Family::Star;
    if (name == "chain") return Family::ChainOfCliques;
    return std::nullopt;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::ExK1: return "exk1";
        case Family::Sigma: return "sigma";
        case Family::Gamma: return "gamma";
        case Family::Omega: return "omega";
        case Family::Delta: return "delta";
        case Family::Path: return "path";
        case Family::Complete: return "complete";
        case Family::Cycle: return "cycle";
        case Family::Star: return "star";
        case Family::ChainOfCliques: return "chain";
    }
    return "?";
}

namespace {

int require(const std::optional<int>& v, const char* what) {
    if (!v) throw std::invalid_argument(std::string("missing parameter ") + what);
    return *v;
}

void add_clique(std::vector<std::pair<int, int>>& edges, const std::vector<int>& vs) {
    for (std::size_t a = 0; a < vs.size(); ++a) {
        for (std::size_t b = a + 1; b < vs.size(); ++b) edges.emplace_back(vs[a], vs[b]);
    }
}

std::vector<int> range_vec(int lo, int hi) {  // inclusive
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

}  // namespace

Graph construct(const FamilySpec& spec) {
    std::vector<std::pair<int, int>> edges;
    switch (spec.family) {
        case Family::Path: {
            const int n = require(spec.n, "n");
            if (n < 1) throw std::invalid_argument("path: n >= 1");
            for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
            return Graph(n, edges);
        }
        case Family::Complete: {
            const int n = require(spec.n, "n");
            if (n < 1) throw std::invalid_argument("complete: n >= 1");
            add_clique(edges, range_vec(1, n));
            return Graph(n, edges);
        }
        case Family::Cycle: {
            const int n = require(spec.n, "n");
            if (n < 3) throw std::invalid_argument("cycle: n >= 3");
            for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
            edges.emplace_back(n, 1);
            return Graph(n, edges);
        }
        case Family::Star: {
            const int n = require(spec.n, "n");
            if (n < 2) throw std::invalid_argument("star: n >= 2");
            for (int v = 2; v <= n; ++v) edges.emplace_back(1, v);
            return Graph(n, edges);
        }
        case Family::ExK1: {
            const int f = require(spec.f, "f");
            const int d = require(spec.d, "d");
            if (f < 3 || d < 2) throw std::invalid_argument("exk1: f >= 3 and d >= 2");
            const int n = f + d;
            add_clique(edges, range_vec(1, f));         // K_f
            add_clique(edges, {1, 2, f + 1});           // K_3 on e = {1,2}
            edges.emplace_back(1, f + 2);               // path at v = 1
            for (int v = f + 2; v < n; ++v) edges.emplace_back(v, v + 1);
            return Graph(n, edges);
        }
        case Family::Sigma: {
            const int d = require(spec.d, "d");
            if (d < 3) throw std::invalid_argument("sigma: d >= 3");
            const int n = d + 2;
            add_clique(edges, {1, 2, 3});
            add_clique(edges, {2, 3, 4});               // shared edge e = {2,3}, v = 4
            for (int v = 4; v < n; ++v) edges.emplace_back(v, v + 1);
            return Graph(n, edges);
        }
        case Family::Gamma: {
            const int f = require(spec.f, "f");
            if (f < 2) throw std::invalid_argument("gamma: f >= 2");
            const int n = f + 3;
            add_clique(edges, range_vec(1, f + 1));     // K_{f+1}
            add_clique(edges, {1, 2, f + 2});           // K_3 on e = {1,2}
            add_clique(edges, {2, 3, f + 3});           // K_3 on e' = {2,3}
            return Graph(n, edges);
        }
        case Family::Omega: {
            const int f = require(spec.f, "f");
            if (f < 2) throw std::invalid_argument("omega: f >= 2");
            const int n = f + 4;
            add_clique(edges, range_vec(1, f + 2));     // K_{f+2}
            add_clique(edges, {1, 2, f + 3});           // K_3 on e = {1,2}
            add_clique(edges, {3, 4, f + 4});           // K_3 on e' = {3,4}
            return Graph(n, edges);
        }
        case Family::Delta: {
            const int f = require(spec.f, "f");
            const int k = require(spec.kappa, "kappa");
            if (f < 2 || k < 3) throw std::invalid_argument("delta: f >= 2 and kappa >= 3");
            const int n = f + k + 1;
            add_clique(edges, range_vec(1, f + k - 1));  // K_{f+kappa-1}
            auto left = range_vec(1, k);                 // K_kappa
            left.push_back(f + k);
            add_clique(edges, left);
            auto right = range_vec(2, k + 1);            // K'_kappa, overlap kappa-1
            right.push_back(f + k + 1);
            add_clique(edges, right);
            return Graph(n, edges);
        }
        case Family::ChainOfCliques: {
            const auto& r = spec.r;
            const auto& q = spec.q;
            if (r.size() < 2 || q.size() + 1 != r.size()) {
                throw std::invalid_argument("chain: need r_1..r_m and q_1..q_{m-1}");
            }
            int start = 1;
            int total = 0;
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (r[i] < 2) throw std::invalid_argument("chain: clique sizes must be >= 2");
                if (i + 1 < r.size()) {
                    if (q[i] < 1 || q[i] >= r[i] || q[i] >= r[i + 1]) {
                        throw std::invalid_argument("chain: overlaps must satisfy 1 <= q_i < r_i, r_{i+1}");
                    }
                }
                total = start + r[i] - 1;
                add_clique(edges, range_vec(start, total));
                if (i + 1 < r.size()) start = total - q[i] + 1;
            }
            return Graph(total, edges);
        }
    }
    throw std::invalid_argument("construct: unknown family");
}

}  // namespace bei
