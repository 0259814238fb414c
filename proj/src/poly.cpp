#include "beideal/poly.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace bei {

// -- names ---------------------------------------------------------------------

std::string variable_name(int k, int n_vertices) {
    if (k < n_vertices) return "x" + std::to_string(k + 1);
    if (k < 2 * n_vertices) return "y" + std::to_string(k - n_vertices + 1);
    return "t";
}

std::string monomial_to_string(const Monomial& m, int n_vertices) {
    if (m.is_one()) return "1";
    std::string out;
    for (int k = 0; k < m.nvars; ++k) {
        const int e = m.e[static_cast<std::size_t>(k)];
        if (!e) continue;
        if (!out.empty()) out += "*";
        out += variable_name(k, n_vertices);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

// -- rationals -------------------------------------------------------------------

namespace {

long long checked_ll(__int128 v, const char* what) {
    if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN)) {
        throw std::overflow_error(std::string("rational overflow in ") + what);
    }
    return static_cast<long long>(v);
}

}  // namespace

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::operator+(const Rational& o) const {
    const __int128 n = static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den;
    const __int128 d = static_cast<__int128>(den) * o.den;
    const __int128 g = [](__int128 a, __int128 b) {
        if (a < 0) a = -a;
        while (b) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        return a ? a : 1;
    }(n, d);
    return Rational(checked_ll(n / g, "+"), checked_ll(d / g, "+"));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    const Rational a(num, o.den);   // cross-cancel first
    const Rational b(o.num, den);
    const __int128 n = static_cast<__int128>(a.num) * b.num;
    const __int128 d = static_cast<__int128>(a.den) * b.den;
    return Rational(checked_ll(n, "*"), checked_ll(d, "*"));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    return *this * Rational(o.den, o.num);
}

Rational Rational::operator-() const {
    Rational r;
    r.num = -num;
    r.den = den;
    return r;
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

// -- term orders --------------------------------------------------------------------

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
        case OrderKind::DiagLex: {
            for (int k = 0; k < a.nvars; ++k) {
                const int d = int(a.e[static_cast<std::size_t>(k)]) -
                              int(b.e[static_cast<std::size_t>(k)]);
                if (d) return d;
            }
            return 0;
        }
        case OrderKind::DegRevLex: {
            const int d = a.degree() - b.degree();
            if (d) return d;
            for (int k = a.nvars - 1; k >= 0; --k) {
                const int dd = int(a.e[static_cast<std::size_t>(k)]) -
                               int(b.e[static_cast<std::size_t>(k)]);
                if (dd) return -dd;
            }
            return 0;
        }
        case OrderKind::ElimDiagLex: {
            const int t = elim_var;
            const int dt = int(a.e[static_cast<std::size_t>(t)]) -
                           int(b.e[static_cast<std::size_t>(t)]);
            if (dt) return dt;
            for (int k = 0; k < a.nvars; ++k) {
                if (k == t) continue;
                const int d = int(a.e[static_cast<std::size_t>(k)]) -
                              int(b.e[static_cast<std::size_t>(k)]);
                if (d) return d;
            }
            return 0;
        }
    }
    return 0;
}

// -- Buchberger --------------------------------------------------------------------

namespace {

/// Deterministic total order on monomials used only for tie-breaking queues.
std::array<std::uint8_t, Monomial::max_vars> key_of(const Monomial& m) { return m.e; }

template <class F>
std::vector<Poly<F>> sorted_unique_monic(std::vector<Poly<F>> gens, const TermOrder& order) {
    std::vector<Poly<F>> out;
    for (auto& g : gens) {
        g = poly_normalize(std::move(g), order);
        if (!g.empty()) out.push_back(make_monic(std::move(g)));
    }
    std::sort(out.begin(), out.end(), [&](const Poly<F>& a, const Poly<F>& b) {
        const int c = order.compare(a.front().mono, b.front().mono);
        if (c) return c < 0;
        return a.size() < b.size();
    });
    out.erase(std::unique(out.begin(), out.end(), [](const Poly<F>& a, const Poly<F>& b) {
                  if (a.size() != b.size()) return false;
                  for (std::size_t k = 0; k < a.size(); ++k) {
                      if (!(a[k].mono == b[k].mono) || !(a[k].coeff == b[k].coeff)) return false;
                  }
                  return true;
              }),
              out.end());
    return out;
}

}  // namespace

template <class F>
std::vector<Poly<F>> buchberger(std::vector<Poly<F>> gens, const TermOrder& order) {
    std::vector<Poly<F>> basis = sorted_unique_monic(std::move(gens), order);
    if (basis.empty()) return basis;

    using PairKey = std::tuple<int, std::array<std::uint8_t, Monomial::max_vars>, std::size_t,
                               std::size_t>;
    std::set<PairKey> queue;
    std::set<std::pair<std::size_t, std::size_t>> done;
    auto push_pair = [&](std::size_t i, std::size_t j) {
        if (i > j) std::swap(i, j);
        const Monomial l = Monomial::lcm(basis[i].front().mono, basis[j].front().mono);
        queue.insert({l.degree(), key_of(l), i, j});
    };
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) push_pair(i, j);
    }

    while (!queue.empty()) {
        const auto [deg, key, i, j] = *queue.begin();
        queue.erase(queue.begin());
        done.insert({i, j});
        const Monomial& lti = basis[i].front().mono;
        const Monomial& ltj = basis[j].front().mono;
        if (Monomial::coprime(lti, ltj)) continue;  // first criterion
        const Monomial l = Monomial::lcm(lti, ltj);
        bool chained = false;  // second (chain) criterion
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == i || k == j) continue;
            if (!basis[k].front().mono.divides(l)) continue;
            const auto p1 = std::minmax(i, k);
            const auto p2 = std::minmax(j, k);
            if (done.count({p1.first, p1.second}) && done.count({p2.first, p2.second})) {
                chained = true;
            }
        }
        if (chained) continue;
        // S-polynomial, fully reduced
        Poly<F> s = poly_add_scaled(Poly<F>{}, F::one(), l.quotient_by(lti), basis[i], order);
        s = poly_add_scaled(s, F::zero() - F::one(), l.quotient_by(ltj), basis[j], order);
        s = normal_form(std::move(s), basis, order);
        if (s.empty()) continue;
        basis.push_back(make_monic(std::move(s)));
        const std::size_t idx = basis.size() - 1;
        for (std::size_t k = 0; k < idx; ++k) push_pair(k, idx);
    }

    // minimalize: drop elements whose leading term another leading term divides
    std::vector<Poly<F>> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            const Monomial& a = basis[j].front().mono;
            const Monomial& b = basis[i].front().mono;
            if (a.divides(b) && !(a == b)) {
                keep = false;
                break;
            }
            if (a == b && j < i) {  // duplicate leading terms: keep the first
                keep = false;
                break;
            }
        }
        if (keep) minimal.push_back(basis[i]);
    }
    // inter-reduce tails
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Poly<F>> others;
            for (std::size_t j = 0; j < minimal.size(); ++j) {
                if (j != i) others.push_back(minimal[j]);
            }
            Poly<F> red = normal_form(minimal[i], others, order);
            red = make_monic(std::move(red));
            if (red.size() != minimal[i].size() ||
                !std::equal(red.begin(), red.end(), minimal[i].begin(),
                            [](const Term<F>& a, const Term<F>& b) {
                                return a.mono == b.mono && a.coeff == b.coeff;
                            })) {
                minimal[i] = std::move(red);
                changed = true;
            }
        }
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Poly<F>& a, const Poly<F>& b) {
        return order.compare(a.front().mono, b.front().mono) < 0;
    });
    return minimal;
}

template <class F>
bool ideal_equal(const std::vector<Poly<F>>& a, const std::vector<Poly<F>>& b,
                 const TermOrder& order) {
    const auto ga = buchberger(a, order);
    const auto gb = buchberger(b, order);
    for (const auto& p : a) {
        if (!normal_form(poly_normalize(p, order), gb, order).empty()) return false;
    }
    for (const auto& p : b) {
        if (!normal_form(poly_normalize(p, order), ga, order).empty()) return false;
    }
    return true;
}

template <class F>
std::vector<Poly<F>> intersect_ideals(const std::vector<Poly<F>>& a,
                                      const std::vector<Poly<F>>& b, int nvars) {
    if (nvars + 1 > Monomial::max_vars) throw std::invalid_argument("too many variables");
    const int tvar = nvars;
    TermOrder elim{OrderKind::ElimDiagLex, tvar};
    auto widen = [&](const Poly<F>& p) {
        Poly<F> out = p;
        for (auto& t : out) t.mono.nvars = nvars + 1;
        return out;
    };
    const Monomial t = Monomial::var(nvars + 1, tvar);
    std::vector<Poly<F>> gens;
    for (const auto& p : a) {
        // t * p
        Poly<F> q = widen(p);
        for (auto& tm : q) tm.mono = tm.mono * t;
        gens.push_back(poly_normalize(std::move(q), elim));
    }
    for (const auto& p : b) {
        // (1 - t) * p
        Poly<F> q = widen(p);
        Poly<F> tq = q;
        for (auto& tm : tq) {
            tm.mono = tm.mono * t;
            tm.coeff = F::zero() - tm.coeff;
        }
        q.insert(q.end(), tq.begin(), tq.end());
        gens.push_back(poly_normalize(std::move(q), elim));
    }
    const auto gb = buchberger(std::move(gens), elim);
    TermOrder diag{OrderKind::DiagLex, -1};
    std::vector<Poly<F>> out;
    for (const auto& p : gb) {
        if (p.front().mono.e[static_cast<std::size_t>(tvar)] != 0) continue;
        Poly<F> q = p;  // t-free leading term under the block order => t-free tail
        for (auto& tm : q) {
            if (tm.mono.e[static_cast<std::size_t>(tvar)] != 0) {
                throw std::logic_error("elimination produced a mixed polynomial");
            }
            tm.mono.nvars = nvars;
        }
        out.push_back(poly_normalize(std::move(q), diag));
    }
    return out;
}

template <class F>
std::vector<Monomial> initial_ideal(const std::vector<Poly<F>>& gb, const TermOrder& order,
                                    bool require_squarefree) {
    std::vector<Monomial> lts;
    for (const auto& p : gb) {
        if (p.empty()) continue;
        lts.push_back(p.front().mono);
        if (require_squarefree && !p.front().mono.squarefree()) {
            throw std::domain_error("non-squarefree leading term: order or basis is wrong");
        }
    }
    std::vector<Monomial> minimal;
    for (std::size_t i = 0; i < lts.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < lts.size(); ++j) {
            if (i == j) continue;
            if (lts[j].divides(lts[i]) && !(lts[j] == lts[i])) {
                keep = false;
                break;
            }
            if (lts[j] == lts[i] && j < i) {
                keep = false;
                break;
            }
        }
        if (keep) minimal.push_back(lts[i]);
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Monomial& a, const Monomial& b) {
        return order.compare(a, b) < 0;
    });
    return minimal;
}

template std::vector<Poly<Rational>> buchberger(std::vector<Poly<Rational>>, const TermOrder&);
template std::vector<Poly<GF2>> buchberger(std::vector<Poly<GF2>>, const TermOrder&);
template bool ideal_equal(const std::vector<Poly<Rational>>&, const std::vector<Poly<Rational>>&,
                          const TermOrder&);
template bool ideal_equal(const std::vector<Poly<GF2>>&, const std::vector<Poly<GF2>>&,
                          const TermOrder&);
template std::vector<Poly<Rational>> intersect_ideals(const std::vector<Poly<Rational>>&,
                                                      const std::vector<Poly<Rational>>&, int);
template std::vector<Poly<GF2>> intersect_ideals(const std::vector<Poly<GF2>>&,
                                                 const std::vector<Poly<GF2>>&, int);
template std::vector<Monomial> initial_ideal(const std::vector<Poly<Rational>>&, const TermOrder&,
                                             bool);
template std::vector<Monomial> initial_ideal(const std::vector<Poly<GF2>>&, const TermOrder&,
                                             bool);

}  // namespace bei
