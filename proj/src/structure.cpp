#include "beideal/structure.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bei {

namespace {

int lowest_bit(std::uint64_t x) { return std::countr_zero(x); }

std::uint64_t set_mask(const std::vector<int>& vs) {
    std::uint64_t m = 0;
    for (int v : vs) m |= std::uint64_t{1} << (v - 1);
    return m;
}

}  // namespace

Graph ohtani_completion(const Graph& g, int v) {
    if (v < 1 || v > g.n()) throw std::invalid_argument("ohtani_completion: vertex out of range");
    auto edges = g.edges();
    const auto nb = g.neighbors(v);
    for (std::size_t a = 0; a < nb.size(); ++a) {
        for (std::size_t b = a + 1; b < nb.size(); ++b) {
            edges.emplace_back(nb[a], nb[b]);
        }
    }
    return Graph(g.n(), edges);
}

DeletedVertex delete_vertex(const Graph& g, int v) {
    if (v < 1 || v > g.n()) throw std::invalid_argument("delete_vertex: vertex out of range");
    std::vector<int> old_label;
    std::vector<int> new_of(static_cast<std::size_t>(g.n()) + 1, 0);
    for (int u = 1; u <= g.n(); ++u) {
        if (u == v) continue;
        old_label.push_back(u);
        new_of[static_cast<std::size_t>(u)] = static_cast<int>(old_label.size());
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& [i, j] : g.edges()) {
        if (i == v || j == v) continue;
        edges.emplace_back(new_of[static_cast<std::size_t>(i)], new_of[static_cast<std::size_t>(j)]);
    }
    return {Graph(g.n() - 1, edges), old_label};
}

Graph delete_edge(const Graph& g, int i, int j) {
    if (!g.adjacent(i, j)) throw std::invalid_argument("delete_edge: not an edge");
    std::vector<std::pair<int, int>> edges;
    for (const auto& [a, b] : g.edges()) {
        if ((a == i && b == j) || (a == j && b == i)) continue;
        edges.emplace_back(a, b);
    }
    return Graph(g.n(), edges);
}

Graph clique_sum(const Graph& g1, const Graph& g2,
                 const std::vector<int>& glue1, const std::vector<int>& glue2) {
    if (glue1.size() != glue2.size()) throw std::invalid_argument("clique_sum: glue size mismatch");
    auto check_clique = [](const Graph& g, const std::vector<int>& vs) {
        for (std::size_t a = 0; a < vs.size(); ++a) {
            for (std::size_t b = a + 1; b < vs.size(); ++b) {
                if (!g.adjacent(vs[a], vs[b])) {
                    throw std::invalid_argument("clique_sum: glue set is not a clique");
                }
            }
        }
    };
    check_clique(g1, glue1);
    check_clique(g2, glue2);
    const int m = static_cast<int>(glue1.size());
    const int n = g1.n() + g2.n() - m;
    // map g2 labels: glued vertices onto their g1 partners, the rest appended
    std::vector<int> map2(static_cast<std::size_t>(g2.n()) + 1, 0);
    for (int k = 0; k < m; ++k) map2[static_cast<std::size_t>(glue2[static_cast<std::size_t>(k)])] =
        glue1[static_cast<std::size_t>(k)];
    int next = g1.n();
    for (int u = 1; u <= g2.n(); ++u) {
        if (map2[static_cast<std::size_t>(u)] == 0) map2[static_cast<std::size_t>(u)] = ++next;
    }
    auto edges = g1.edges();
    for (const auto& [i, j] : g2.edges()) {
        edges.emplace_back(map2[static_cast<std::size_t>(i)], map2[static_cast<std::size_t>(j)]);
    }
    return Graph(n, edges);
}

std::optional<Decomposition> is_decomposable(const Graph& g) {
    if (!is_connected(g)) return std::nullopt;
    const int n = g.n();
    for (int v = 1; v <= n; ++v) {
        const std::uint64_t vb = std::uint64_t{1} << (v - 1);
        if (components_after(g, vb) < 2) continue;
        // components of G \ v, as masks
        std::vector<std::uint64_t> comps;
        std::uint64_t rest = g.full_mask() & ~vb;
        while (rest) {
            std::uint64_t seen = std::uint64_t{1} << lowest_bit(rest);
            while (true) {
                std::uint64_t grow = seen;
                for (std::uint64_t mm = seen; mm; mm &= mm - 1) grow |= g.row(lowest_bit(mm) + 1);
                grow &= rest;
                if (grow == seen) break;
                seen = grow;
            }
            comps.push_back(seen);
            rest &= ~seen;
        }
        auto part_clique = [&](std::uint64_t part) {
            const std::uint64_t nb = g.row(v) & part;
            for (std::uint64_t mm = nb; mm; mm &= mm - 1) {
                const int u = lowest_bit(mm) + 1;
                if ((nb & ~(std::uint64_t{1} << (u - 1)) & ~g.row(u)) != 0) return false;
            }
            return true;
        };
        // one side must be a single component with N(v) inside it a clique; the
        // other side is everything else, where N(v) must also induce a clique
        for (std::size_t pick = 0; pick < comps.size(); ++pick) {
            std::uint64_t side1 = comps[pick];
            std::uint64_t side2 = 0;
            for (std::size_t k = 0; k < comps.size(); ++k) {
                if (k != pick) side2 |= comps[k];
            }
            if (!part_clique(side1) || !part_clique(side2)) continue;
            auto extract = [&](std::uint64_t side) {
                std::vector<int> labels;
                for (std::uint64_t mm = side | vb; mm; mm &= mm - 1) {
                    labels.push_back(lowest_bit(mm) + 1);
                }
                std::vector<int> new_of(static_cast<std::size_t>(g.n()) + 1, 0);
                for (std::size_t k = 0; k < labels.size(); ++k) {
                    new_of[static_cast<std::size_t>(labels[k])] = static_cast<int>(k) + 1;
                }
                std::vector<std::pair<int, int>> edges;
                for (const auto& [i, j] : g.edges()) {
                    const int a = new_of[static_cast<std::size_t>(i)];
                    const int b = new_of[static_cast<std::size_t>(j)];
                    if (a && b) edges.emplace_back(a, b);
                }
                return std::pair{Graph(static_cast<int>(labels.size()), edges), labels};
            };
            auto [p1, l1] = extract(side1);
            auto [p2, l2] = extract(side2);
            return Decomposition{v, std::move(p1), std::move(p2), std::move(l1), std::move(l2)};
        }
    }
    return std::nullopt;
}

BlockProfile block_profile(const Graph& g) {
    BlockProfile bp;
    bp.omega = clique_number(g);
    if (!is_connected(g) || !is_chordal(g)) {
        bp.kind = BlockKind::Neither;
        return bp;
    }
    const auto facets = maximal_cliques(g);
    std::vector<std::uint64_t> fm;
    fm.reserve(facets.size());
    for (const auto& f : facets) fm.push_back(set_mask(f));

    bool block = true;
    for (std::size_t a = 0; a < fm.size() && block; ++a) {
        for (std::size_t b = a + 1; b < fm.size(); ++b) {
            if (std::popcount(fm[a] & fm[b]) > 1) {
                block = false;
                break;
            }
        }
    }

    bool generalized = true;
    // big overlaps through a common facet must coincide
    for (std::size_t a = 0; a < fm.size() && generalized; ++a) {
        std::uint64_t big = 0;
        bool has_big = false;
        for (std::size_t b = 0; b < fm.size(); ++b) {
            if (b == a) continue;
            const std::uint64_t inter = fm[a] & fm[b];
            if (std::popcount(inter) >= 2) {
                if (has_big && inter != big) {
                    generalized = false;
                    break;
                }
                big = inter;
                has_big = true;
            }
        }
    }
    // triples of facets with a common vertex have pairwise-equal intersections
    for (std::size_t a = 0; a < fm.size() && generalized; ++a) {
        for (std::size_t b = a + 1; b < fm.size() && generalized; ++b) {
            for (std::size_t c = b + 1; c < fm.size(); ++c) {
                if ((fm[a] & fm[b] & fm[c]) == 0) continue;
                const std::uint64_t ab = fm[a] & fm[b];
                const std::uint64_t ac = fm[a] & fm[c];
                const std::uint64_t bc = fm[b] & fm[c];
                if (ab != ac || ab != bc) {
                    generalized = false;
                    break;
                }
            }
        }
    }

    if (block) {
        bp.kind = BlockKind::BlockGraph;
    } else if (generalized) {
        bp.kind = BlockKind::GeneralizedBlockGraph;
    } else {
        bp.kind = BlockKind::Neither;
        return bp;
    }
    const auto cuts = minimal_cutsets(g, std::max(1, bp.omega - 1));
    bp.a = cuts.a;
    bp.m = cuts.m;
    return bp;
}

namespace {

/// Branch of facet `f` within the facet family `alive`: the unique other
/// facet h maximizing containment, i.e. every other facet's intersection
/// with f sits inside h & f. Returns index, or -1 when absent / ambiguous.
int unique_branch(const std::vector<std::uint64_t>& fm, const std::vector<bool>& alive,
                  std::size_t f) {
    int branch = -1;
    for (std::size_t h = 0; h < fm.size(); ++h) {
        if (!alive[h] || h == f) continue;
        bool dominates = true;
        for (std::size_t k = 0; k < fm.size(); ++k) {
            if (!alive[k] || k == f || k == h) continue;
            if ((fm[k] & fm[f] & ~(fm[h] & fm[f])) != 0) {
                dominates = false;
                break;
            }
        }
        if (!dominates) continue;
        if (branch >= 0) return -1;  // two branches: not unique
        branch = static_cast<int>(h);
    }
    return branch;
}

}  // namespace

std::optional<ChainOfCliques> chain_of_cliques(const Graph& g) {
    if (!is_connected(g) || !is_chordal(g)) return std::nullopt;
    const auto facets = maximal_cliques(g);
    const std::size_t m = facets.size();
    if (m < 2) return std::nullopt;
    std::vector<std::uint64_t> fm;
    fm.reserve(m);
    for (const auto& f : facets) fm.push_back(set_mask(f));

    // try each facet as the last element of the leaf order; the predecessor
    // chain is then forced by branch uniqueness
    for (std::size_t last = 0; last < m; ++last) {
        std::vector<bool> alive(m, true);
        std::vector<std::size_t> rev_order;  // F_m, F_{m-1}, ...
        std::size_t cur = last;
        bool ok = true;
        for (std::size_t step = 0; step + 1 < m; ++step) {
            const int br = unique_branch(fm, alive, cur);
            if (br < 0) {
                ok = false;
                break;
            }
            rev_order.push_back(cur);
            alive[cur] = false;
            cur = static_cast<std::size_t>(br);
        }
        if (!ok) continue;
        rev_order.push_back(cur);
        std::vector<std::size_t> order(rev_order.rbegin(), rev_order.rend());

        ChainOfCliques chain;
        for (std::size_t i = 0; i < m; ++i) {
            chain.facet_order.push_back(facets[order[i]]);
            chain.r.push_back(static_cast<int>(facets[order[i]].size()));
        }
        for (std::size_t i = 0; i + 1 < m; ++i) {
            chain.q.push_back(std::popcount(fm[order[i]] & fm[order[i + 1]]));
        }
        for (std::size_t j = 1; j + 1 < m; ++j) {
            const std::uint64_t prev = fm[order[j - 1]] & fm[order[j]];
            const std::uint64_t next = fm[order[j]] & fm[order[j + 1]];
            chain.overlap_nonempty.push_back((prev & next) != 0);
        }
        // canonical direction: lexicographically smaller (r, q) wins
        auto key = [](const ChainOfCliques& c) {
            std::vector<int> k = c.r;
            k.insert(k.end(), c.q.begin(), c.q.end());
            return k;
        };
        ChainOfCliques rev;
        rev.facet_order.assign(chain.facet_order.rbegin(), chain.facet_order.rend());
        rev.r.assign(chain.r.rbegin(), chain.r.rend());
        rev.q.assign(chain.q.rbegin(), chain.q.rend());
        rev.overlap_nonempty.assign(chain.overlap_nonempty.rbegin(), chain.overlap_nonempty.rend());
        return key(rev) < key(chain) ? rev : chain;
    }
    return std::nullopt;
}

bool is_unicyclic(const Graph& g) {
    return is_connected(g) && g.edge_count() == g.n();
}

}  // namespace bei
