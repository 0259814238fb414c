#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace bei {

/// Exponent vector over at most max_vars variables. For a graph on n
/// vertices the ring is K[x_1..x_n, y_1..y_n] (variable k: x_{k+1} for
/// k < n, y_{k-n+1} otherwise); intersections append one auxiliary
/// variable t at index 2n.
struct Monomial {
    static constexpr int max_vars = 20;

    std::array<std::uint8_t, max_vars> e{};
    int nvars = 0;

    static Monomial one(int nvars) {
        Monomial m;
        m.nvars = nvars;
        return m;
    }
    static Monomial var(int nvars, int k, int power = 1) {
        Monomial m = one(nvars);
        m.e[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(power);
        return m;
    }

    int degree() const {
        int d = 0;
        for (int k = 0; k < nvars; ++k) d += e[static_cast<std::size_t>(k)];
        return d;
    }
    bool is_one() const { return degree() == 0; }
    bool squarefree() const {
        for (int k = 0; k < nvars; ++k) {
            if (e[static_cast<std::size_t>(k)] > 1) return false;
        }
        return true;
    }
    /// Support as a bitmask (nvars <= 20 fits in 32 bits).
    std::uint32_t support() const {
        std::uint32_t s = 0;
        for (int k = 0; k < nvars; ++k) {
            if (e[static_cast<std::size_t>(k)]) s |= std::uint32_t{1} << k;
        }
        return s;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial m = *this;
        for (int k = 0; k < nvars; ++k) {
            const int sum = m.e[static_cast<std::size_t>(k)] + o.e[static_cast<std::size_t>(k)];
            if (sum > 255) throw std::overflow_error("monomial exponent overflow");
            m.e[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(sum);
        }
        return m;
    }
    bool divides(const Monomial& o) const {
        for (int k = 0; k < nvars; ++k) {
            if (e[static_cast<std::size_t>(k)] > o.e[static_cast<std::size_t>(k)]) return false;
        }
        return true;
    }
    /// this / o; caller guarantees divisibility.
    Monomial quotient_by(const Monomial& o) const {
        Monomial m = *this;
        for (int k = 0; k < nvars; ++k) {
            m.e[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(
                m.e[static_cast<std::size_t>(k)] - o.e[static_cast<std::size_t>(k)]);
        }
        return m;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial m = a;
        for (int k = 0; k < a.nvars; ++k) {
            m.e[static_cast<std::size_t>(k)] =
                std::max(a.e[static_cast<std::size_t>(k)], b.e[static_cast<std::size_t>(k)]);
        }
        return m;
    }
    static bool coprime(const Monomial& a, const Monomial& b) {
        for (int k = 0; k < a.nvars; ++k) {
            if (a.e[static_cast<std::size_t>(k)] && b.e[static_cast<std::size_t>(k)]) return false;
        }
        return true;
    }

    bool operator==(const Monomial& o) const { return nvars == o.nvars && e == o.e; }
};

/// Name of variable k in the 2n(+1) convention above.
std::string variable_name(int k, int n_vertices);
std::string monomial_to_string(const Monomial& m, int n_vertices);

/// Exact rational with 64-bit numerator/denominator and overflow checks.
/// Binomial-edge-ideal Groebner computations keep coefficients tiny, so a
/// machine-word rational suffices; any overflow throws rather than wraps.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n) {}
    Rational(long long n, long long d);

    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    bool is_zero() const { return num == 0; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational operator-() const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }

    std::string str() const;
};

/// The field with two elements.
struct GF2 {
    unsigned char v = 0;

    GF2() = default;
    GF2(long long n) : v(static_cast<unsigned char>(((n % 2) + 2) % 2)) {}

    static GF2 zero() { return GF2(0); }
    static GF2 one() { return GF2(1); }
    bool is_zero() const { return v == 0; }

    GF2 operator+(const GF2& o) const { return GF2(v ^ o.v); }
    GF2 operator-(const GF2& o) const { return GF2(v ^ o.v); }
    GF2 operator*(const GF2& o) const { return GF2(v & o.v); }
    GF2 operator/(const GF2& o) const {
        if (o.is_zero()) throw std::domain_error("division by zero in GF(2)");
        return *this;
    }
    GF2 operator-() const { return *this; }
    bool operator==(const GF2& o) const { return v == o.v; }

    std::string str() const { return v ? "1" : "0"; }
};

enum class OrderKind {
    DiagLex,     // lex with x_1 > .. > x_n > y_1 > .. > y_n
    DegRevLex,   // cross-check order
    ElimDiagLex  // t (last variable index) first, then DiagLex on the rest
};

/// Total multiplicative monomial order.
struct TermOrder {
    OrderKind kind = OrderKind::DiagLex;
    int elim_var = -1;  // index of t for ElimDiagLex

    /// negative / 0 / positive as a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};

template <class F>
struct Term {
    Monomial mono;
    F coeff;
};

/// Polynomial as a term list kept sorted descending under the active order,
/// no zero coefficients.
template <class F>
using Poly = std::vector<Term<F>>;

template <class F>
Poly<F> poly_normalize(Poly<F> terms, const TermOrder& order) {
    std::sort(terms.begin(), terms.end(), [&](const Term<F>& a, const Term<F>& b) {
        return order.compare(a.mono, b.mono) > 0;
    });
    Poly<F> out;
    for (auto& t : terms) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff = out.back().coeff + t.coeff;
            if (out.back().coeff.is_zero()) out.pop_back();
        } else if (!t.coeff.is_zero()) {
            out.push_back(t);
        }
    }
    return out;
}

/// p + c * m * q, all inputs normalized under `order`.
template <class F>
Poly<F> poly_add_scaled(const Poly<F>& p, const F& c, const Monomial& m, const Poly<F>& q,
                        const TermOrder& order) {
    Poly<F> out;
    out.reserve(p.size() + q.size());
    std::size_t i = 0, j = 0;
    while (i < p.size() || j < q.size()) {
        if (j == q.size()) {
            out.push_back(p[i++]);
            continue;
        }
        const Monomial qm = q[j].mono * m;
        if (i == p.size()) {
            const F c2 = c * q[j].coeff;
            if (!c2.is_zero()) out.push_back({qm, c2});
            ++j;
            continue;
        }
        const int cmp = order.compare(p[i].mono, qm);
        if (cmp > 0) {
            out.push_back(p[i++]);
        } else if (cmp < 0) {
            const F c2 = c * q[j].coeff;
            if (!c2.is_zero()) out.push_back({qm, c2});
            ++j;
        } else {
            const F c2 = p[i].coeff + c * q[j].coeff;
            if (!c2.is_zero()) out.push_back({p[i].mono, c2});
            ++i;
            ++j;
        }
    }
    return out;
}

template <class F>
Poly<F> poly_scale(Poly<F> p, const F& c) {
    for (auto& t : p) t.coeff = t.coeff * c;
    return p;
}

/// Full normal form of p modulo basis (every term reduced).
template <class F>
Poly<F> normal_form(Poly<F> p, const std::vector<Poly<F>>& basis, const TermOrder& order) {
    Poly<F> remainder;
    while (!p.empty()) {
        bool reduced = false;
        for (const auto& b : basis) {
            if (b.empty()) continue;
            if (b.front().mono.divides(p.front().mono)) {
                const Monomial q = p.front().mono.quotient_by(b.front().mono);
                const F c = F::zero() - p.front().coeff / b.front().coeff;
                p = poly_add_scaled(p, c, q, b, order);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder.push_back(p.front());
            p.erase(p.begin());
        }
    }
    return remainder;
}

template <class F>
Poly<F> make_monic(Poly<F> p) {
    if (p.empty()) return p;
    const F inv = F::one() / p.front().coeff;
    return poly_scale(std::move(p), inv);
}

/// Reduced Groebner basis by Buchberger's algorithm: normal pair selection
/// (smallest lcm degree first), coprime and chain criteria, full
/// auto-reduction, monic output sorted ascending by leading monomial.
template <class F>
std::vector<Poly<F>> buchberger(std::vector<Poly<F>> gens, const TermOrder& order);

/// True iff every generator of a reduces to 0 modulo gb(b) and conversely.
template <class F>
bool ideal_equal(const std::vector<Poly<F>>& a, const std::vector<Poly<F>>& b,
                 const TermOrder& order);

/// Generators of (a) ∩ (b) by eliminating t from t*a + (1-t)*b. Inputs live
/// in nvars variables; internally one auxiliary variable is appended.
template <class F>
std::vector<Poly<F>> intersect_ideals(const std::vector<Poly<F>>& a,
                                      const std::vector<Poly<F>>& b, int nvars);

/// Minimal generating set of the leading-term ideal of a Groebner basis.
/// Throws std::domain_error if require_squarefree and some leading term is
/// not squarefree.
template <class F>
std::vector<Monomial> initial_ideal(const std::vector<Poly<F>>& gb, const TermOrder& order,
                                    bool require_squarefree = true);

// explicit instantiations for the two supported fields live in poly.cpp
extern template std::vector<Poly<Rational>> buchberger(std::vector<Poly<Rational>>, const TermOrder&);
extern template std::vector<Poly<GF2>> buchberger(std::vector<Poly<GF2>>, const TermOrder&);
extern template bool ideal_equal(const std::vector<Poly<Rational>>&, const std::vector<Poly<Rational>>&, const TermOrder&);
extern template bool ideal_equal(const std::vector<Poly<GF2>>&, const std::vector<Poly<GF2>>&, const TermOrder&);
extern template std::vector<Poly<Rational>> intersect_ideals(const std::vector<Poly<Rational>>&, const std::vector<Poly<Rational>>&, int);
extern template std::vector<Poly<GF2>> intersect_ideals(const std::vector<Poly<GF2>>&, const std::vector<Poly<GF2>>&, int);
extern template std::vector<Monomial> initial_ideal(const std::vector<Poly<Rational>>&, const TermOrder&, bool);
extern template std::vector<Monomial> initial_ideal(const std::vector<Poly<GF2>>&, const TermOrder&, bool);

}  // namespace bei
