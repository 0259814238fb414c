#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bei {

/// Simple labeled graph on vertices 1..n, n <= 64. Immutable after
/// construction; adjacency kept as one 64-bit row per vertex.
class Graph {
public:
    static constexpr int max_vertices = 64;

    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    int edge_count() const { return edge_count_; }

    bool adjacent(int i, int j) const { return (row(i) >> (j - 1)) & 1u; }

    /// Adjacency row of vertex i as a bitmask over bits 0..n-1
    /// (bit k set <=> {i, k+1} is an edge).
    std::uint64_t row(int i) const { return rows_[static_cast<std::size_t>(i - 1)]; }

    int degree(int i) const;
    std::vector<int> neighbors(int i) const;
    std::vector<std::pair<int, int>> edges() const;

    /// Mask with bits 0..n-1 set.
    std::uint64_t full_mask() const {
        return n_ == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_) - 1);
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && rows_ == other.rows_;
    }

private:
    int n_ = 0;
    int edge_count_ = 0;
    std::vector<std::uint64_t> rows_;

    void check_vertex(int i) const;
    friend Graph graph_from_rows(int n, std::vector<std::uint64_t> rows);
};

/// Internal constructor from prebuilt rows (symmetry/irreflexivity re-checked).
Graph graph_from_rows(int n, std::vector<std::uint64_t> rows);

/// (n, d, f, kappa, iv, omega, chordal, ...) -- the invariant tuple the
/// depth bounds are stated in. gap = (n+2-kappa) - (d+f).
struct InvariantBundle {
    int n = 0;
    int d = 0;
    int f = 0;
    int kappa = 0;
    int iv = 0;
    int omega = 0;
    bool chordal = false;
    bool connected = false;
    bool complete = false;
    int gap = 0;
};

/// Inclusion-minimal vertex cuts up to a size bound, tallied by size.
struct CutStructure {
    std::vector<int> cut_vertices;               // size-1 cuts, sorted
    std::vector<std::vector<int>> minimal_cutsets;
    std::map<int, int> a;                        // a_i = #minimal cuts of size i
    int m = 0;                                   // sum of a_i
};

struct InducedCycleScan {
    int count_c4 = 0;
    bool has_c5_or_longer = false;
    std::optional<std::vector<int>> witness;     // one induced cycle of length >= 5
};

// -- construction / parsing ------------------------------------------------

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

/// Parse the standard graph6 one-line encoding (n <= 62 header).
Graph parse_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

/// Edge-list text: "n m" on the first line, then m lines "i j";
/// '#' starts a comment.
Graph parse_edge_list_text(const std::string& text);
std::string to_edge_list_text(const Graph& g);
std::string to_dot(const Graph& g);

// -- invariants ------------------------------------------------------------

bool is_connected(const Graph& g);
bool is_complete(const Graph& g);

/// BFS distances from s over the induced subgraph on `allowed`
/// (-1 where unreachable).
std::vector<int> bfs_distances(const Graph& g, int s, std::uint64_t allowed);

/// Shortest path length in edges; nullopt if i and j are in different
/// components.
std::optional<int> distance(const Graph& g, int i, int j);

/// Max pairwise distance. Throws std::domain_error on disconnected input.
int diameter(const Graph& g);

/// v is simplicial iff N[v] induces a clique. Returns (simplicial, internal)
/// as sorted vertex lists.
std::pair<std::vector<int>, std::vector<int>> simplicial_partition(const Graph& g);
bool is_simplicial(const Graph& g, int v);

/// Menger: min over non-adjacent pairs of max internally-disjoint paths.
/// kappa(K_n) = n-1 by convention. Throws on disconnected input.
int vertex_connectivity(const Graph& g);

/// Number of components of the induced subgraph on [n] \ T (0 if T = [n]).
int components_after(const Graph& g, std::uint64_t removed);
int components_after(const Graph& g, const std::vector<int>& removed);

/// The cutset predicate: c(T \ {v}) < c(T) for every v in T. T nonempty.
bool is_cutset(const Graph& g, const std::vector<int>& t);

/// All inclusion-minimal vertex cuts of size <= max_size (these are exactly
/// the cutsets that also contain no smaller disconnecting set).
CutStructure minimal_cutsets(const Graph& g, int max_size);

/// All maximal cliques (Bron-Kerbosch with pivot), each sorted, the list
/// ordered lexicographically.
std::vector<std::vector<int>> maximal_cliques(const Graph& g);
int clique_number(const Graph& g);

/// Maximum-cardinality search + full perfect-elimination-order verification.
bool is_chordal(const Graph& g);

/// Counts induced 4-cycles and looks for an induced cycle of length >= 5.
InducedCycleScan induced_cycle_scan(const Graph& g);

InvariantBundle invariants(const Graph& g);

}  // namespace bei
