#include "beideal/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "beideal/errors.hpp"
#include "beideal/structure.hpp"

namespace bei {

std::string field_name(Field f) { return f == Field::Q ? "Q" : "F2"; }

template <class F>
std::vector<Poly<F>> jg_generators(const Graph& g) {
    const int nvars = 2 * g.n();
    TermOrder diag{OrderKind::DiagLex, -1};
    std::vector<Poly<F>> out;
    for (const auto& [i, j] : g.edges()) {
        Poly<F> p;
        p.push_back({Monomial::var(nvars, i - 1) * Monomial::var(nvars, g.n() + j - 1), F::one()});
        p.push_back({Monomial::var(nvars, j - 1) * Monomial::var(nvars, g.n() + i - 1),
                     F::zero() - F::one()});
        out.push_back(poly_normalize(std::move(p), diag));
    }
    return out;
}

template std::vector<Poly<Rational>> jg_generators<Rational>(const Graph&);
template std::vector<Poly<GF2>> jg_generators<GF2>(const Graph&);

// -- exact matrix ranks ------------------------------------------------------------

namespace {

/// Rank over Q by fraction-free (Bareiss) elimination in 64-bit integers;
/// falls back to arbitrary precision on overflow.
int rank_q_bareiss(std::vector<std::vector<long long>> m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    long long prev = 1;
    bool overflow = false;
    std::vector<std::vector<long long>> original = m;
    for (std::size_t c = 0; c < cols && r < rows && !overflow; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                const __int128 t = static_cast<__int128>(m[r][c]) * m[i][j] -
                                   static_cast<__int128>(m[i][c]) * m[r][j];
                const __int128 q = t / prev;
                if (q > INT64_MAX || q < INT64_MIN) {
                    overflow = true;
                    break;
                }
                m[i][j] = static_cast<long long>(q);
            }
            m[i][c] = 0;
            if (overflow) break;
        }
        prev = m[r][c];
        ++r;
    }
    if (!overflow) return static_cast<int>(r);

    using big = boost::multiprecision::cpp_int;
    std::vector<std::vector<big>> bm(rows, std::vector<big>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) bm[i][j] = original[i][j];
    }
    std::size_t br = 0;
    big bprev = 1;
    for (std::size_t c = 0; c < cols && br < rows; ++c) {
        std::size_t piv = br;
        while (piv < rows && bm[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(bm[br], bm[piv]);
        for (std::size_t i = br + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                bm[i][j] = (bm[br][c] * bm[i][j] - bm[i][c] * bm[br][j]) / bprev;
            }
            bm[i][c] = 0;
        }
        bprev = bm[br][c];
        ++br;
    }
    return static_cast<int>(br);
}

/// Rank over GF(2) by bitset elimination.
int rank_f2(const std::vector<std::vector<long long>>& m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    const std::size_t words = (cols + 63) / 64;
    std::vector<std::vector<std::uint64_t>> bits(rows, std::vector<std::uint64_t>(words, 0));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            if (m[i][j] & 1) bits[i][j / 64] |= std::uint64_t{1} << (j % 64);
        }
    }
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < rows; ++c) {
        std::size_t piv = row;
        while (piv < rows && !((bits[piv][c / 64] >> (c % 64)) & 1)) ++piv;
        if (piv == rows) continue;
        std::swap(bits[row], bits[piv]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i != row && ((bits[i][c / 64] >> (c % 64)) & 1)) {
                for (std::size_t w = 0; w < words; ++w) bits[i][w] ^= bits[row][w];
            }
        }
        ++row;
        ++rank;
    }
    return rank;
}

int matrix_rank(const std::vector<std::vector<long long>>& m, Field field) {
    return field == Field::Q ? rank_q_bareiss(m) : rank_f2(m);
}

}  // namespace

// -- Hochster ----------------------------------------------------------------------

BettiTable betti_table(const std::vector<Monomial>& sq_gens, int nvars, Field field) {
    if (nvars > 31) throw std::invalid_argument("betti_table: too many variables");
    for (const auto& g : sq_gens) {
        if (!g.squarefree()) throw std::invalid_argument("betti_table: generator not squarefree");
    }
    std::vector<std::uint32_t> gens;
    gens.reserve(sq_gens.size());
    for (const auto& g : sq_gens) gens.push_back(g.support());

    BettiTable table;
    table.nvars = nvars;
    table.beta[{0, 0}] = 1;

    std::vector<std::uint32_t> faces;           // faces of the restricted complex
    std::vector<std::uint32_t> inside;          // generators inside sigma
    for (std::uint32_t sigma = 1; sigma < (std::uint32_t{1} << nvars); ++sigma) {
        inside.clear();
        for (std::uint32_t g : gens) {
            if ((g & sigma) == g) inside.push_back(g);
        }
        // every vertex of sigma must lie in a generator inside sigma,
        // otherwise the restricted complex is a cone and homology vanishes
        std::uint32_t covered = 0;
        for (std::uint32_t g : inside) covered |= g;
        if (covered != sigma) continue;

        // faces: subsets of sigma containing no generator
        faces.clear();
        std::uint32_t tau = sigma;
        while (true) {
            bool face = true;
            for (std::uint32_t g : inside) {
                if ((g & tau) == g) {
                    face = false;
                    break;
                }
            }
            if (face) faces.push_back(tau);
            if (tau == 0) break;
            tau = (tau - 1) & sigma;
        }
        const int svars = std::popcount(sigma);

        // group faces by dimension; dim = popcount - 1, empty face included
        std::vector<std::vector<std::uint32_t>> bydim(static_cast<std::size_t>(svars) + 1);
        for (std::uint32_t f : faces) bydim[static_cast<std::size_t>(std::popcount(f))].push_back(f);
        for (auto& level : bydim) std::sort(level.begin(), level.end());

        // reduced chain complex: C_{-1} = span(empty face)
        std::vector<int> ranks(static_cast<std::size_t>(svars) + 2, 0);
        for (int d = 0; d <= svars; ++d) {
            // boundary: C_{d-1} (faces with d+... popcount d) -> C_{d-2}
            const auto& hi = bydim[static_cast<std::size_t>(d)];
            const auto& lo = d > 0 ? bydim[static_cast<std::size_t>(d - 1)]
                                   : std::vector<std::uint32_t>{};
            if (hi.empty() || (d > 0 && lo.empty())) {
                ranks[static_cast<std::size_t>(d)] = 0;
                continue;
            }
            if (d == 0) {  // d_0 : C_0 is only the empty face level; boundary zero
                ranks[0] = 0;
                continue;
            }
            std::vector<std::vector<long long>> mat(lo.size(),
                                                    std::vector<long long>(hi.size(), 0));
            for (std::size_t col = 0; col < hi.size(); ++col) {
                const std::uint32_t f = hi[col];
                int sign = 1;
                for (std::uint32_t rest = f; rest; rest &= rest - 1) {
                    const std::uint32_t v = rest & ~(rest - 1);
                    const std::uint32_t sub = f & ~v;
                    const auto it = std::lower_bound(lo.begin(), lo.end(), sub);
                    if (it != lo.end() && *it == sub) {
                        mat[static_cast<std::size_t>(it - lo.begin())][col] = sign;
                    }
                    sign = -sign;
                }
            }
            ranks[static_cast<std::size_t>(d)] = matrix_rank(mat, field);
        }
        // H~_r has chain group bydim[r+1]; boundary out is ranks[r+1], in is ranks[r+2]
        for (int r = -1; r < svars; ++r) {
            const long long dim_c = static_cast<long long>(bydim[static_cast<std::size_t>(r + 1)].size());
            if (dim_c == 0) continue;
            const long long h = dim_c - ranks[static_cast<std::size_t>(r + 1)] -
                                ranks[static_cast<std::size_t>(r + 2)];
            if (h > 0) {
                const int i = svars - 1 - r;
                table.beta[{i, svars}] += h;
            }
        }
    }

    table.pd = 0;
    table.reg = 0;
    for (const auto& [key, value] : table.beta) {
        if (value <= 0) continue;
        table.pd = std::max(table.pd, key.first);
        table.reg = std::max(table.reg, key.second - key.first);
    }
    table.depth = nvars - table.pd;
    for (const auto& [key, value] : table.beta) {
        if (value <= 0) continue;
        bool extremal = true;
        for (const auto& [other, ov] : table.beta) {
            if (ov <= 0 || other == key) continue;
            if (other.first >= key.first &&
                other.second - other.first >= key.second - key.first) {
                extremal = false;
                break;
            }
        }
        if (extremal) table.extremal_corners.push_back(key);
    }
    std::sort(table.extremal_corners.begin(), table.extremal_corners.end());
    return table;
}

// -- depth_exact --------------------------------------------------------------------

namespace {

template <class F>
OracleReport run_pipeline(const Graph& g, const OracleOptions& opts) {
    OracleReport rep;
    rep.n = g.n();
    rep.field = opts.field;
    const int nvars = 2 * g.n();
    TermOrder diag{OrderKind::DiagLex, -1};
    auto gens = jg_generators<F>(g);
    if (gens.empty()) {
        // zero ideal: S itself, depth = number of variables
        rep.depth = nvars;
        rep.pd = 0;
        rep.reg = 0;
        rep.initial_betti.nvars = nvars;
        rep.initial_betti.beta[{0, 0}] = 1;
        rep.initial_betti.depth = nvars;
        return rep;
    }
    const auto gb = buchberger(std::move(gens), diag);
    rep.initial_gens = initial_ideal(gb, diag, /*require_squarefree=*/true);
    rep.initial_betti = betti_table(rep.initial_gens, nvars, opts.field);
    rep.depth = rep.initial_betti.depth;
    rep.pd = rep.initial_betti.pd;
    rep.reg = rep.initial_betti.reg;
    rep.extremal = rep.initial_betti.extremal_corners;
    return rep;
}

}  // namespace

OracleReport depth_exact(const Graph& g, const OracleOptions& opts) {
    if (2 * g.n() > opts.var_limit) {
        throw LimitError("oracle: 2n = " + std::to_string(2 * g.n()) +
                                " exceeds the variable limit " + std::to_string(opts.var_limit));
    }
    return opts.field == Field::Q ? run_pipeline<Rational>(g, opts) : run_pipeline<GF2>(g, opts);
}

// -- Ohtani identity -----------------------------------------------------------------

namespace {

template <class F>
bool ohtani_check_impl(const Graph& g, int v) {
    const int nvars = 2 * g.n();
    TermOrder diag{OrderKind::DiagLex, -1};
    const auto jg = jg_generators<F>(g);

    const Graph gv = ohtani_completion(g, v);
    const auto j_gv = jg_generators<F>(gv);

    // (x_v, y_v) + J_{G \ v} with G \ v at the original labels
    std::vector<Poly<F>> rhs;
    rhs.push_back({{Monomial::var(nvars, v - 1), F::one()}});
    rhs.push_back({{Monomial::var(nvars, g.n() + v - 1), F::one()}});
    for (const auto& [i, j] : g.edges()) {
        if (i == v || j == v) continue;
        Poly<F> p;
        p.push_back({Monomial::var(nvars, i - 1) * Monomial::var(nvars, g.n() + j - 1), F::one()});
        p.push_back({Monomial::var(nvars, j - 1) * Monomial::var(nvars, g.n() + i - 1),
                     F::zero() - F::one()});
        rhs.push_back(poly_normalize(std::move(p), diag));
    }

    const auto inter = intersect_ideals(j_gv, rhs, nvars);
    return ideal_equal(jg, inter, diag);
}

}  // namespace

bool ohtani_check(const Graph& g, int v, Field field) {
    if (v < 1 || v > g.n()) throw std::invalid_argument("ohtani_check: vertex out of range");
    if (is_simplicial(g, v)) {
        throw std::domain_error("ohtani_check: vertex " + std::to_string(v) + " is not internal");
    }
    return field == Field::Q ? ohtani_check_impl<Rational>(g, v) : ohtani_check_impl<GF2>(g, v);
}

}  // namespace bei
