#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <tuple>

#include "beideal/classify.hpp"
#include "beideal/enumerate.hpp"
#include "helpers.hpp"

using namespace bei;
using namespace bei::test;

TEST_CASE("feasibility table") {
    CHECK(feasibility(6, 2, 3, 2));        // realized by Gamma(3)
    CHECK(!feasibility(6, 3, 1, 2));       // f = 1 (and the equality fails)
    CHECK(!feasibility(7, 2, 5, 1));       // d = 1: complete graphs never qualify
    CHECK(!feasibility(4, 1, 2, 2));       // n < 5
    CHECK(!feasibility(5, 1, 2, 2));       // equality fails
    CHECK(feasibility(6, 1, 4, 2));        // kappa = 1 branch
    CHECK(feasibility(6, 1, 2, 4));        // Sigma(4)
    CHECK(feasibility(6, 2, 2, 3));        // Omega(2)
    CHECK(feasibility(6, 3, 2, 2));        // Delta(2,3)
    CHECK(!feasibility(7, 2, 2, 4));       // kappa = 2 forces d <= 3
    CHECK(!feasibility(8, 3, 2, 3));       // kappa >= 3 forces d = 2
    CHECK(!feasibility(7, 1, 2, 2));       // the (1,2,2) tuple forces n = 4
}

TEST_CASE("diametral config on the pattern families") {
    const auto h = diametral_config(minimal_h());
    CHECK(h.pattern == Pattern::H);
    CHECK(*h.j == 1);
    CHECK(h.endpoints_simplicial);
    CHECK(*h.off_path_internal == 6);

    const auto hp = diametral_config(h_prime());
    CHECK(hp.pattern == Pattern::HPrime);
    CHECK(*hp.j == 1);

    // Sigma: the off-path vertex sees u, u_1, u_2 - three consecutive
    // positions counting the endpoint, so the pattern is H with j = 0
    const auto s = diametral_config(sigma(4));
    CHECK(*s.off_path_internal == 3);
    CHECK(s.pattern == Pattern::H);
    CHECK(*s.j == 0);

    CHECK_THROWS_AS(diametral_config(complete(4)), std::domain_error);
}

TEST_CASE("h2 square on Omega") {
    const auto cfg = diametral_config(omega(2));
    CHECK(cfg.pattern == Pattern::HDoublePrime);
    REQUIRE(cfg.h2_square.has_value());
    // square vertices are exactly the four internal vertices
    const auto [simp, internal] = simplicial_partition(omega(2));
    std::vector<int> sq(cfg.h2_square->begin(), cfg.h2_square->end());
    std::sort(sq.begin(), sq.end());
    CHECK(sq == internal);
}

TEST_CASE("cliques_attached") {
    // Omega: no cliques along e2 = {v1, v2}
    const auto cfg = diametral_config(omega(2));
    REQUIRE(cfg.h2_square.has_value());
    const auto sq = *cfg.h2_square;
    const std::vector<int> base{sq[0], sq[1], sq[2], sq[3]};
    CHECK(!cliques_attached(omega(2), base, {sq[1], sq[2]}));  // e2
    CHECK(!cliques_attached(omega(2), base, {sq[0], sq[3]}));  // e3

    // Sigma: v' = 3 lies only in cliques meeting the path
    const auto scfg = diametral_config(sigma(4));
    std::vector<int> sbase = {2, 3, 4, 5};
    CHECK(!cliques_attached(sigma(4), sbase, {3}));

    // three triangles on a shared edge: the third triangle meets the edge exactly
    CHECK(cliques_attached(three_triangles(), {1, 2}, {1, 2}));

    CHECK_THROWS_AS(cliques_attached(sigma(4), {2, 3}, {9}), std::invalid_argument);
}

TEST_CASE("classify tags on the named graphs") {
    CHECK(classify(sigma(4)).tag == ClassTag::D1);  // endpoint-adjacent H pattern
    CHECK(classify(minimal_h()).tag == ClassTag::D1);
    CHECK(classify(exk1(3, 2)).tag == ClassTag::D_minus_D1);  // {u_1} is a cut vertex
    CHECK(classify(gamma(3)).tag == ClassTag::Kappa2plus_D2);
    CHECK(classify(delta(2, 3)).tag == ClassTag::Kappa2plus_D2);
    CHECK(classify(omega(2)).tag == ClassTag::Kappa2_D3_Chordal_E23Free);
    CHECK(classify(h_prime()).tag == ClassTag::NonChordalC4_CutMiss);

    CHECK(classify(path(5)).tag == ClassTag::HibiMadani_G_d);   // gap 0
    CHECK(classify(star(5)).tag == ClassTag::HibiMadani_G_d);   // gap 0
    CHECK_THROWS_AS(classify(complete(4)), std::domain_error);

    // gap 2: falls through to the structure tags
    const Graph c4p = from_edge_list(5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 5}});
    CHECK(classify(c4p).tag == ClassTag::Unclassified);
    // gap-2 tree: a spider with four legs of length two
    const Graph spider = from_edge_list(
        9, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 6}, {3, 7}, {4, 8}, {5, 9}});
    CHECK(classify(spider).tag == ClassTag::GeneralizedBlock);
}

TEST_CASE("structural theorem check") {
    CHECK(check_structural_theorem(sigma(4)));
    CHECK(check_structural_theorem(gamma(3)));
    CHECK(check_structural_theorem(omega(2)));
    CHECK(check_structural_theorem(h_prime()));
    CHECK_THROWS_AS(check_structural_theorem(cycle(5)), std::domain_error);  // gap 3
}

TEST_CASE("every gap-1 graph with n <= 6 passes the structural check") {
    for (int n = 5; n <= 6; ++n) {
        for (const Graph& g : enumerate_connected(n)) {
            const auto b = invariants(g);
            if (b.complete || b.gap != 1) continue;
            CHECK(check_structural_theorem(g));
        }
    }
}

TEST_CASE("classify is isomorphism invariant") {
    std::mt19937 rng(12345);
    for (const Graph& g : enumerate_connected(6)) {
        const auto b = invariants(g);
        if (b.complete || b.gap != 1) continue;
        const auto tag = classify(g).tag;
        std::vector<int> perm(static_cast<std::size_t>(g.n()));
        for (int k = 0; k < g.n(); ++k) perm[static_cast<std::size_t>(k)] = k + 1;
        for (int round = 0; round < 3; ++round) {
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<std::pair<int, int>> edges;
            for (const auto& [i, j] : g.edges()) {
                edges.emplace_back(perm[static_cast<std::size_t>(i - 1)],
                                   perm[static_cast<std::size_t>(j - 1)]);
            }
            CHECK(classify(Graph(g.n(), edges)).tag == tag);
        }
    }
}

TEST_CASE("feasibility matches the n <= 6 enumeration both ways") {
    // collect realized (n, kappa, f, d) tuples among gap-1 graphs
    std::set<std::tuple<int, int, int, int>> realized;
    for (int n = 5; n <= 6; ++n) {
        for (const Graph& g : enumerate_connected(n)) {
            const auto b = invariants(g);
            if (b.complete || b.gap != 1) continue;
            realized.insert({b.n, b.kappa, b.f, b.d});
            CHECK(feasibility(b.n, b.kappa, b.f, b.d));
        }
    }
    for (int n = 5; n <= 6; ++n) {
        for (int kappa = 1; kappa < n; ++kappa) {
            for (int f = 0; f <= n; ++f) {
                for (int d = 1; d <= n; ++d) {
                    if (feasibility(n, kappa, f, d)) {
                        CHECK(realized.count({n, kappa, f, d}) == 1);
                    }
                }
            }
        }
    }
}

namespace {

/// All shortest u-v paths (test-side oracle, independent of the canonical
/// path choice in diametral_config).
void all_shortest_paths(const Graph& g, int v, std::vector<int>& path,
                        const std::vector<int>& dist_to_v,
                        std::vector<std::vector<int>>& out) {
    const int cur = path.back();
    if (cur == v) {
        out.push_back(path);
        return;
    }
    for (int w : g.neighbors(cur)) {
        if (dist_to_v[static_cast<std::size_t>(w)] ==
            dist_to_v[static_cast<std::size_t>(cur)] - 1) {
            path.push_back(w);
            all_shortest_paths(g, v, path, dist_to_v, out);
            path.pop_back();
        }
    }
}

}  // namespace

TEST_CASE("D1 membership is stable across diametral pairs and paths (n <= 6)") {
    for (int n = 5; n <= 6; ++n) {
        for (const Graph& g : enumerate_connected(n)) {
            const auto b = invariants(g);
            if (b.complete || b.gap != 1 || b.kappa != 1 || !b.chordal) continue;
            const auto label = classify(g);
            const bool canonical_d1 = label.tag == ClassTag::D1;

            const auto [simp, internal] = simplicial_partition(g);
            std::set<int> simp_set(simp.begin(), simp.end());
            bool found_pair = false;
            for (int u = 1; u <= n; ++u) {
                for (int v = u + 1; v <= n; ++v) {
                    if (*distance(g, u, v) != b.d) continue;
                    if (!simp_set.count(u) || !simp_set.count(v)) continue;
                    found_pair = true;
                    const auto dist_to_v = bfs_distances(g, v, g.full_mask());
                    std::vector<int> seed = {u};
                    std::vector<std::vector<int>> paths;
                    all_shortest_paths(g, v, seed, dist_to_v, paths);
                    for (const auto& path : paths) {
                        std::set<int> on_path(path.begin(), path.end());
                        std::vector<int> off;
                        for (int w : internal) {
                            if (!on_path.count(w)) off.push_back(w);
                        }
                        bool d1 = false;
                        if (off.size() == 1) {
                            const int vp = off.front();
                            std::vector<int> pos;
                            for (int k = 0; k <= b.d; ++k) {
                                if (g.adjacent(path[static_cast<std::size_t>(k)], vp)) {
                                    pos.push_back(k);
                                }
                            }
                            if (pos.size() == 3 && pos[1] == pos[0] + 1 && pos[2] == pos[0] + 2) {
                                const int mid = path[static_cast<std::size_t>(pos[0]) + 1];
                                const bool cut_vp =
                                    components_after(g, std::vector<int>{vp}) >
                                    components_after(g, std::uint64_t{0});
                                const bool cut_mid =
                                    components_after(g, std::vector<int>{mid}) >
                                    components_after(g, std::uint64_t{0});
                                d1 = !cut_vp && !cut_mid;
                            }
                        }
                        CHECK(d1 == canonical_d1);
                    }
                }
            }
            if (!found_pair) CHECK(!canonical_d1);  // case I graphs never land in D1
        }
    }
}
