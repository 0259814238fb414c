#include "beideal/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace bei {

namespace {

/// Pair slot of (i, j), 1 <= i < j, in column-major order.
int pair_index(int i, int j) { return (j - 1) * (j - 2) / 2 + (i - 1); }

struct CanonSearch {
    const Graph* g = nullptr;
    int n = 0;
    int total_bits = 0;
    std::uint64_t best = ~std::uint64_t{0};
    std::array<int, 8> image{};  // image[pos] = original vertex placed at pos+1

    void run(int pos, std::uint64_t used, std::uint64_t partial) {
        const int prefix_bits = pos * (pos - 1) / 2;
        if (pos > 0) {
            const std::uint64_t best_prefix = best >> (total_bits - prefix_bits);
            if (partial > best_prefix) return;
        }
        if (pos == n) {
            if (partial < best) best = partial;
            return;
        }
        for (int v = 1; v <= n; ++v) {
            const std::uint64_t vb = std::uint64_t{1} << (v - 1);
            if (used & vb) continue;
            std::uint64_t next = partial;
            for (int p = 0; p < pos; ++p) {
                next = (next << 1) | (g->adjacent(image[static_cast<std::size_t>(p)], v) ? 1 : 0);
            }
            image[static_cast<std::size_t>(pos)] = v;
            run(pos + 1, used | vb, next);
        }
    }
};

}  // namespace

std::uint64_t canonical_bits(const Graph& g) {
    const int n = g.n();
    if (n > 8) throw std::invalid_argument("canonical_bits: supported for n <= 8");
    if (n < 2) return 0;
    CanonSearch search;
    search.g = &g;
    search.n = n;
    search.total_bits = n * (n - 1) / 2;
    search.run(0, 0, 0);
    return search.best;
}

Graph graph_from_bits(int n, std::uint64_t bits) {
    const int total = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> edges;
    for (int j = 2; j <= n; ++j) {
        for (int i = 1; i < j; ++i) {
            const int idx = pair_index(i, j);
            if ((bits >> (total - 1 - idx)) & 1u) edges.emplace_back(i, j);
        }
    }
    return Graph(n, edges);
}

std::vector<Graph> enumerate_connected(int n) {
    if (n < 3 || n > 8) throw std::invalid_argument("enumerate_connected: n must be in 3..8");
    // grow by one vertex at a time: every connected graph arises from a
    // connected graph on one vertex less by deleting a non-cut vertex
    std::vector<std::uint64_t> level = {1};  // K_2
    for (int k = 3; k <= n; ++k) {
        std::unordered_set<std::uint64_t> seen;
        std::vector<std::uint64_t> next;
        for (const std::uint64_t bits : level) {
            const Graph base = graph_from_bits(k - 1, bits);
            auto edges = base.edges();
            for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << (k - 1)); ++mask) {
                auto aug = edges;
                for (int v = 1; v < k; ++v) {
                    if ((mask >> (v - 1)) & 1u) aug.emplace_back(v, k);
                }
                const Graph candidate(k, aug);
                const std::uint64_t key = canonical_bits(candidate);
                if (seen.insert(key).second) next.push_back(key);
            }
        }
        std::sort(next.begin(), next.end());
        level = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(level.size());
    for (const std::uint64_t bits : level) out.push_back(graph_from_bits(n, bits));
    return out;
}

}  // namespace bei
