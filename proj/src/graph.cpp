#include "beideal/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace bei {

namespace {

int popcount(std::uint64_t x) { return std::popcount(x); }

int lowest_bit(std::uint64_t x) { return std::countr_zero(x); }

}  // namespace

void Graph::check_vertex(int i) const {
    if (i < 1 || i > n_) {
        throw std::invalid_argument("vertex label " + std::to_string(i) +
                                    " out of range 1.." + std::to_string(n_));
    }
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0 || n > max_vertices) {
        throw std::invalid_argument("vertex count must be between 0 and 64");
    }
    n_ = n;
    rows_.assign(static_cast<std::size_t>(n), 0);
    for (const auto& [i, j] : edges) {
        if (i < 1 || i > n || j < 1 || j > n) {
            throw std::invalid_argument("edge endpoint out of range: (" +
                                        std::to_string(i) + "," + std::to_string(j) + ")");
        }
        if (i == j) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(i));
        }
        rows_[static_cast<std::size_t>(i - 1)] |= std::uint64_t{1} << (j - 1);
        rows_[static_cast<std::size_t>(j - 1)] |= std::uint64_t{1} << (i - 1);
    }
    int total = 0;
    for (auto r : rows_) total += popcount(r);
    edge_count_ = total / 2;
}

Graph graph_from_rows(int n, std::vector<std::uint64_t> rows) {
    Graph g;
    g.n_ = n;
    g.rows_ = std::move(rows);
    int total = 0;
    for (int i = 0; i < n; ++i) {
        if ((g.rows_[static_cast<std::size_t>(i)] >> i) & 1u) {
            throw std::invalid_argument("self-loop in adjacency rows");
        }
        total += popcount(g.rows_[static_cast<std::size_t>(i)]);
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (g.adjacent(i, j) != g.adjacent(j, i)) {
                throw std::invalid_argument("adjacency rows not symmetric");
            }
        }
    }
    g.edge_count_ = total / 2;
    return g;
}

int Graph::degree(int i) const {
    check_vertex(i);
    return popcount(row(i));
}

std::vector<int> Graph::neighbors(int i) const {
    check_vertex(i);
    std::vector<int> out;
    for (std::uint64_t m = row(i); m; m &= m - 1) out.push_back(lowest_bit(m) + 1);
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n_; ++i) {
        for (int j = i + 1; j <= n_; ++j) {
            if (adjacent(i, j)) out.emplace_back(i, j);
        }
    }
    return out;
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph(n, edges);
}

// -- graph6 ------------------------------------------------------------------

Graph parse_graph6(const std::string& raw) {
    std::string text = raw;
    if (text.rfind(">>graph6<<", 0) == 0) text = text.substr(10);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
        text.pop_back();
    }
    if (text.empty()) throw std::invalid_argument("empty graph6 string");
    const unsigned char h = static_cast<unsigned char>(text[0]);
    if (h == 126) {
        throw std::invalid_argument("graph6 long-form headers (n > 62) not supported");
    }
    if (h < 63 || h > 125) throw std::invalid_argument("malformed graph6 length header");
    const int n = h - 63;
    const int bits = n * (n - 1) / 2;
    const int want = (bits + 5) / 6;
    if (static_cast<int>(text.size()) - 1 != want) {
        throw std::invalid_argument("graph6 body has wrong length");
    }
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int k = 0; k < want; ++k) {
        const unsigned char c = static_cast<unsigned char>(text[static_cast<std::size_t>(k) + 1]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6 body character out of range");
        const int v = c - 63;
        for (int b = 5; b >= 0; --b, ++bit) {
            const int on = (v >> b) & 1;
            if (bit >= bits) {
                if (on) throw std::invalid_argument("graph6 trailing padding bits nonzero");
                continue;
            }
            if (on) {
                // column-major upper triangle: bit index -> (i, j), j = column
                int j = 1;
                int acc = bit;
                while (acc >= j) { acc -= j; ++j; }
                edges.emplace_back(acc + 1, j + 1);
            }
        }
    }
    return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
    const int n = g.n();
    if (n > 62) throw std::invalid_argument("graph6 encoding supported for n <= 62 only");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int bit = 0;
    int cur = 0;
    for (int j = 2; j <= n; ++j) {
        for (int i = 1; i < j; ++i) {
            cur = (cur << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bit % 6 == 0) {
                out.push_back(static_cast<char>(cur + 63));
                cur = 0;
            }
        }
    }
    if (bit % 6 != 0) {
        cur <<= 6 - bit % 6;
        out.push_back(static_cast<char>(cur + 63));
    }
    return out;
}

// -- edge-list text ----------------------------------------------------------

Graph parse_edge_list_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    auto next_tokens = [&]() -> std::vector<std::string> {
        while (std::getline(in, line)) {
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            std::istringstream ls(line);
            std::vector<std::string> toks;
            std::string t;
            while (ls >> t) toks.push_back(t);
            if (!toks.empty()) return toks;
        }
        return {};
    };
    auto head = next_tokens();
    if (head.size() != 2) throw std::invalid_argument("edge list: expected header \"n m\"");
    const int n = std::stoi(head[0]);
    const int m = std::stoi(head[1]);
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> toks;
    while (static_cast<int>(edges.size()) < m && !(toks = next_tokens()).empty()) {
        if (toks.size() != 2) throw std::invalid_argument("edge list: expected line \"i j\"");
        edges.emplace_back(std::stoi(toks[0]), std::stoi(toks[1]));
    }
    if (static_cast<int>(edges.size()) != m) {
        throw std::invalid_argument("edge list: fewer edges than announced");
    }
    return Graph(n, edges);
}

std::string to_edge_list_text(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.edge_count() << '\n';
    for (const auto& [i, j] : g.edges()) out << i << ' ' << j << '\n';
    return out.str();
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int i = 1; i <= g.n(); ++i) out << "  " << i << ";\n";
    for (const auto& [i, j] : g.edges()) out << "  " << i << " -- " << j << ";\n";
    out << "}\n";
    return out.str();
}

// -- connectivity / distances -------------------------------------------------

std::vector<int> bfs_distances(const Graph& g, int s, std::uint64_t allowed) {
    std::vector<int> dist(static_cast<std::size_t>(g.n()) + 1, -1);
    if (!((allowed >> (s - 1)) & 1u)) return dist;
    dist[static_cast<std::size_t>(s)] = 0;
    std::uint64_t frontier = std::uint64_t{1} << (s - 1);
    std::uint64_t seen = frontier;
    int level = 0;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m; m &= m - 1) {
            next |= g.row(lowest_bit(m) + 1);
        }
        next &= allowed & ~seen;
        ++level;
        for (std::uint64_t m = next; m; m &= m - 1) {
            dist[static_cast<std::size_t>(lowest_bit(m)) + 1] = level;
        }
        seen |= next;
        frontier = next;
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) return false;
    const auto dist = bfs_distances(g, 1, g.full_mask());
    for (int v = 1; v <= g.n(); ++v) {
        if (dist[static_cast<std::size_t>(v)] < 0) return false;
    }
    return true;
}

bool is_complete(const Graph& g) {
    return g.edge_count() == g.n() * (g.n() - 1) / 2;
}

std::optional<int> distance(const Graph& g, int i, int j) {
    if (i < 1 || i > g.n() || j < 1 || j > g.n()) {
        throw std::invalid_argument("distance: vertex label out of range");
    }
    const auto dist = bfs_distances(g, i, g.full_mask());
    const int d = dist[static_cast<std::size_t>(j)];
    if (d < 0) return std::nullopt;
    return d;
}

int diameter(const Graph& g) {
    if (!is_connected(g)) throw std::domain_error("diameter: graph is disconnected");
    int best = 0;
    for (int s = 1; s <= g.n(); ++s) {
        const auto dist = bfs_distances(g, s, g.full_mask());
        for (int v = 1; v <= g.n(); ++v) best = std::max(best, dist[static_cast<std::size_t>(v)]);
    }
    return best;
}

// -- simplicial vertices -------------------------------------------------------

bool is_simplicial(const Graph& g, int v) {
    const std::uint64_t nb = g.row(v);
    for (std::uint64_t m = nb; m; m &= m - 1) {
        const int u = lowest_bit(m) + 1;
        // every other neighbor of v must be adjacent to u
        if ((nb & ~(std::uint64_t{1} << (u - 1)) & ~g.row(u)) != 0) return false;
    }
    return true;
}

std::pair<std::vector<int>, std::vector<int>> simplicial_partition(const Graph& g) {
    std::vector<int> simp, internal;
    for (int v = 1; v <= g.n(); ++v) {
        (is_simplicial(g, v) ? simp : internal).push_back(v);
    }
    return {simp, internal};
}

// -- vertex connectivity (Menger via unit-capacity max flow) -------------------

namespace {

/// Max number of internally vertex-disjoint s-t paths, s,t non-adjacent.
int disjoint_paths(const Graph& g, int s, int t) {
    // split each vertex v into in-node 2v and out-node 2v+1 (0-based v)
    const int n = g.n();
    const int nodes = 2 * n;
    std::vector<std::vector<int>> cap(static_cast<std::size_t>(nodes),
                                      std::vector<int>(static_cast<std::size_t>(nodes), 0));
    auto in_node = [](int v) { return 2 * (v - 1); };
    auto out_node = [](int v) { return 2 * (v - 1) + 1; };
    for (int v = 1; v <= n; ++v) {
        cap[static_cast<std::size_t>(in_node(v))][static_cast<std::size_t>(out_node(v))] =
            (v == s || v == t) ? n : 1;
    }
    for (const auto& [i, j] : g.edges()) {
        cap[static_cast<std::size_t>(out_node(i))][static_cast<std::size_t>(in_node(j))] = 1;
        cap[static_cast<std::size_t>(out_node(j))][static_cast<std::size_t>(in_node(i))] = 1;
    }
    const int src = out_node(s), dst = in_node(t);
    int flow = 0;
    while (true) {
        std::vector<int> prev(static_cast<std::size_t>(nodes), -1);
        prev[static_cast<std::size_t>(src)] = src;
        std::queue<int> q;
        q.push(src);
        while (!q.empty() && prev[static_cast<std::size_t>(dst)] < 0) {
            const int u = q.front();
            q.pop();
            for (int w = 0; w < nodes; ++w) {
                if (prev[static_cast<std::size_t>(w)] < 0 &&
                    cap[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] > 0) {
                    prev[static_cast<std::size_t>(w)] = u;
                    q.push(w);
                }
            }
        }
        if (prev[static_cast<std::size_t>(dst)] < 0) break;
        for (int w = dst; w != src; w = prev[static_cast<std::size_t>(w)]) {
            const int u = prev[static_cast<std::size_t>(w)];
            --cap[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)];
            ++cap[static_cast<std::size_t>(w)][static_cast<std::size_t>(u)];
        }
        ++flow;
    }
    return flow;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
    if (!is_connected(g)) throw std::domain_error("vertex_connectivity: graph is disconnected");
    const int n = g.n();
    if (is_complete(g)) return n - 1;
    int best = n - 1;
    for (int s = 1; s <= n; ++s) {
        for (int t = s + 1; t <= n; ++t) {
            if (!g.adjacent(s, t)) best = std::min(best, disjoint_paths(g, s, t));
        }
    }
    return best;
}

// -- component counting / cutsets ----------------------------------------------

int components_after(const Graph& g, std::uint64_t removed) {
    std::uint64_t rest = g.full_mask() & ~removed;
    int comps = 0;
    while (rest) {
        ++comps;
        std::uint64_t seen = std::uint64_t{1} << lowest_bit(rest);
        while (true) {
            std::uint64_t grow = seen;
            for (std::uint64_t m = seen; m; m &= m - 1) grow |= g.row(lowest_bit(m) + 1);
            grow &= rest;
            if (grow == seen) break;
            seen = grow;
        }
        rest &= ~seen;
    }
    return comps;
}

namespace {

std::uint64_t to_mask(const Graph& g, const std::vector<int>& vs) {
    std::uint64_t m = 0;
    for (int v : vs) {
        if (v < 1 || v > g.n()) throw std::invalid_argument("vertex label out of range");
        m |= std::uint64_t{1} << (v - 1);
    }
    return m;
}

}  // namespace

int components_after(const Graph& g, const std::vector<int>& removed) {
    return components_after(g, to_mask(g, removed));
}

bool is_cutset(const Graph& g, const std::vector<int>& t) {
    if (t.empty()) throw std::invalid_argument("is_cutset: T must be nonempty");
    const std::uint64_t tm = to_mask(g, t);
    const int ct = components_after(g, tm);
    for (int v : t) {
        if (components_after(g, tm & ~(std::uint64_t{1} << (v - 1))) >= ct) return false;
    }
    return true;
}

CutStructure minimal_cutsets(const Graph& g, int max_size) {
    if (max_size > g.n()) max_size = g.n();
    CutStructure cs;
    const int base = components_after(g, std::uint64_t{0});
    std::vector<std::uint64_t> found;
    std::vector<int> subset;
    // enumerate subsets by increasing size; a set is an inclusion-minimal cut
    // iff it disconnects further and contains no smaller minimal cut
    for (int size = 1; size <= max_size; ++size) {
        subset.assign(static_cast<std::size_t>(size), 0);
        std::vector<int> idx(static_cast<std::size_t>(size));
        for (int k = 0; k < size; ++k) idx[static_cast<std::size_t>(k)] = k + 1;
        while (true) {
            std::uint64_t tm = 0;
            for (int v : idx) tm |= std::uint64_t{1} << (v - 1);
            bool contains_smaller = false;
            for (std::uint64_t f : found) {
                if ((f & tm) == f) {
                    contains_smaller = true;
                    break;
                }
            }
            if (!contains_smaller && components_after(g, tm) > base) {
                found.push_back(tm);
                cs.minimal_cutsets.push_back(idx);
                cs.a[size] += 1;
                if (size == 1) cs.cut_vertices.push_back(idx[0]);
            }
            // next combination
            int k = size - 1;
            while (k >= 0 && idx[static_cast<std::size_t>(k)] == g.n() - (size - 1 - k)) --k;
            if (k < 0) break;
            ++idx[static_cast<std::size_t>(k)];
            for (int j = k + 1; j < size; ++j) {
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
    }
    cs.m = 0;
    for (const auto& [sz, count] : cs.a) cs.m += count;
    return cs;
}

// -- maximal cliques -------------------------------------------------------------

namespace {

void bron_kerbosch(const Graph& g, std::uint64_t r, std::uint64_t p, std::uint64_t x,
                   std::vector<std::uint64_t>& out) {
    if (!p && !x) {
        out.push_back(r);
        return;
    }
    // pivot: vertex of p|x with most neighbors in p
    int pivot = -1, best = -1;
    for (std::uint64_t m = p | x; m; m &= m - 1) {
        const int v = lowest_bit(m) + 1;
        const int cnt = popcount(g.row(v) & p);
        if (cnt > best) {
            best = cnt;
            pivot = v;
        }
    }
    std::uint64_t candidates = p & ~g.row(pivot);
    for (std::uint64_t m = candidates; m; m &= m - 1) {
        const int v = lowest_bit(m) + 1;
        const std::uint64_t vb = std::uint64_t{1} << (v - 1);
        bron_kerbosch(g, r | vb, p & g.row(v), x & g.row(v), out);
        p &= ~vb;
        x |= vb;
    }
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
    std::vector<std::uint64_t> masks;
    if (g.n() > 0) bron_kerbosch(g, 0, g.full_mask(), 0, masks);
    std::vector<std::vector<int>> out;
    out.reserve(masks.size());
    for (std::uint64_t m : masks) {
        std::vector<int> clique;
        for (std::uint64_t t = m; t; t &= t - 1) clique.push_back(lowest_bit(t) + 1);
        out.push_back(std::move(clique));
    }
    std::sort(out.begin(), out.end());
    return out;
}

int clique_number(const Graph& g) {
    int best = 0;
    for (const auto& c : maximal_cliques(g)) best = std::max<int>(best, static_cast<int>(c.size()));
    return best;
}

// -- chordality --------------------------------------------------------------------

bool is_chordal(const Graph& g) {
    const int n = g.n();
    if (n <= 3) return true;
    // maximum-cardinality search: repeatedly visit an unvisited vertex with the
    // most visited neighbors; the reverse visit order is a PEO iff chordal
    std::vector<int> weight(static_cast<std::size_t>(n) + 1, 0);
    std::vector<bool> visited(static_cast<std::size_t>(n) + 1, false);
    std::vector<int> order;  // visit order
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 1; v <= n; ++v) {
            if (!visited[static_cast<std::size_t>(v)] &&
                (pick < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(pick)])) {
                pick = v;
            }
        }
        visited[static_cast<std::size_t>(pick)] = true;
        order.push_back(pick);
        for (std::uint64_t m = g.row(pick); m; m &= m - 1) {
            const int u = lowest_bit(m) + 1;
            if (!visited[static_cast<std::size_t>(u)]) ++weight[static_cast<std::size_t>(u)];
        }
    }
    // elimination order = reverse of visit order; verify it is a PEO
    std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);  // elimination position
    for (int i = 0; i < n; ++i) {
        pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = n - 1 - i;
    }
    for (int v = 1; v <= n; ++v) {
        std::uint64_t later = 0;
        for (std::uint64_t m = g.row(v); m; m &= m - 1) {
            const int u = lowest_bit(m) + 1;
            if (pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(v)]) {
                later |= std::uint64_t{1} << (u - 1);
            }
        }
        if (!later) continue;
        int parent = -1;
        for (std::uint64_t m = later; m; m &= m - 1) {
            const int u = lowest_bit(m) + 1;
            if (parent < 0 || pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(parent)]) {
                parent = u;
            }
        }
        const std::uint64_t rest = later & ~(std::uint64_t{1} << (parent - 1));
        if ((rest & ~g.row(parent)) != 0) return false;
    }
    return true;
}

// -- induced cycles -----------------------------------------------------------------

namespace {

/// DFS over chordless paths rooted at the path's minimal vertex; returns one
/// induced cycle of length >= 5 if any exists.
bool long_cycle_dfs(const Graph& g, std::vector<int>& path, std::uint64_t on_path,
                    std::uint64_t forbidden, std::vector<int>& out) {
    const int s = path.front();
    const int u = path.back();
    for (std::uint64_t m = g.row(u) & ~on_path & ~forbidden; m; m &= m - 1) {
        const int y = lowest_bit(m) + 1;
        if (y < s) continue;  // cycles are rooted at their minimal vertex
        const bool closes = g.adjacent(y, s);
        if (closes) {
            if (path.size() + 1 >= 5) {
                out = path;
                out.push_back(y);
                return true;
            }
            continue;  // closing now gives a triangle/C4; y cannot sit inside
                       // a longer chordless cycle through s either
        }
        // extend: everything adjacent to the old interior stays forbidden;
        // u's other neighbors become forbidden once y is appended
        path.push_back(y);
        const std::uint64_t ub = std::uint64_t{1} << (u - 1);
        if (long_cycle_dfs(g, path, on_path | (std::uint64_t{1} << (y - 1)),
                           forbidden | (g.row(u) & ~(std::uint64_t{1} << (y - 1))) | ub, out)) {
            return true;
        }
        path.pop_back();
    }
    return false;
}

}  // namespace

InducedCycleScan induced_cycle_scan(const Graph& g) {
    InducedCycleScan scan;
    const int n = g.n();
    // induced C4s: subsets inducing a 2-regular graph on 4 vertices
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            for (int c = b + 1; c <= n; ++c) {
                for (int d = c + 1; d <= n; ++d) {
                    const std::uint64_t sub = (std::uint64_t{1} << (a - 1)) |
                                              (std::uint64_t{1} << (b - 1)) |
                                              (std::uint64_t{1} << (c - 1)) |
                                              (std::uint64_t{1} << (d - 1));
                    bool regular = true;
                    for (int v : {a, b, c, d}) {
                        if (popcount(g.row(v) & sub) != 2) {
                            regular = false;
                            break;
                        }
                    }
                    if (regular) ++scan.count_c4;
                }
            }
        }
    }
    for (int s = 1; s <= n && !scan.has_c5_or_longer; ++s) {
        for (std::uint64_t m = g.row(s); m; m &= m - 1) {
            const int x = lowest_bit(m) + 1;
            if (x < s) continue;
            std::vector<int> path = {s, x};
            std::vector<int> cycle;
            if (long_cycle_dfs(g, path,
                               (std::uint64_t{1} << (s - 1)) | (std::uint64_t{1} << (x - 1)),
                               0, cycle)) {
                scan.has_c5_or_longer = true;
                scan.witness = cycle;
                break;
            }
        }
    }
    return scan;
}

InvariantBundle invariants(const Graph& g) {
    InvariantBundle b;
    b.n = g.n();
    b.connected = is_connected(g);
    b.complete = is_complete(g) && g.n() >= 1;
    const auto [simp, internal] = simplicial_partition(g);
    b.f = static_cast<int>(simp.size());
    b.iv = static_cast<int>(internal.size());
    b.omega = clique_number(g);
    b.chordal = is_chordal(g);
    if (b.connected) {
        b.d = diameter(g);
        b.kappa = vertex_connectivity(g);
        b.gap = (b.n + 2 - b.kappa) - (b.d + b.f);
    } else {
        b.d = -1;
        b.kappa = -1;
        b.gap = 0;
    }
    return b;
}

}  // namespace bei
