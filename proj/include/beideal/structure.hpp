#pragma once

#include <optional>
#include <vector>

#include "beideal/graph.hpp"

namespace bei {

/// G with N(v) completed to a clique (vertex set unchanged).
Graph ohtani_completion(const Graph& g, int v);

/// Induced subgraph on [n] \ {v}; labels are compacted to 1..n-1 and the
/// mapping new -> old is returned alongside.
struct DeletedVertex {
    Graph graph;
    std::vector<int> old_label;  // old_label[k] = original label of new vertex k+1
};
DeletedVertex delete_vertex(const Graph& g, int v);

Graph delete_edge(const Graph& g, int i, int j);

/// Glue g1 and g2 by identifying glue1[k] in g1 with glue2[k] in g2; both
/// glued sets must induce complete subgraphs. Vertices of g1 keep their
/// labels, the unglued part of g2 follows.
Graph clique_sum(const Graph& g1, const Graph& g2,
                 const std::vector<int>& glue1, const std::vector<int>& glue2);

/// A split of G along a cut vertex that is simplicial in both parts, if any.
struct Decomposition {
    int vertex = 0;
    Graph part1;  // with original labels recorded below
    Graph part2;
    std::vector<int> part1_labels;
    std::vector<int> part2_labels;
};
std::optional<Decomposition> is_decomposable(const Graph& g);

enum class BlockKind { BlockGraph, GeneralizedBlockGraph, Neither };

struct BlockProfile {
    BlockKind kind = BlockKind::Neither;
    std::map<int, int> a;  // minimal-cut counts by size, up to omega-1
    int m = 0;
    int omega = 0;
};

/// Block graph: chordal with every two maximal cliques meeting in <= 1
/// vertex. Generalized block graph: chordal where big (>= 2) clique
/// overlaps through a common facet coincide and triples of facets with a
/// common vertex have pairwise-equal intersections.
BlockProfile block_profile(const Graph& g);

struct ChainOfCliques {
    std::vector<int> r;                    // clique sizes r_1..r_m
    std::vector<int> q;                    // overlap sizes q_1..q_{m-1}
    std::vector<bool> overlap_nonempty;    // entry j-2: K_{q_{j-1}} meets K_{q_j}
    std::vector<std::vector<int>> facet_order;
};

/// Leaf order of the clique complex where each facet's branch is unique and
/// equal to its predecessor; nullopt when the facets do not form a chain.
std::optional<ChainOfCliques> chain_of_cliques(const Graph& g);

/// Connected with exactly n edges.
bool is_unicyclic(const Graph& g);

}  // namespace bei
