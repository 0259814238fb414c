#include <doctest.h>

#include "beideal/oracle.hpp"
#include "beideal/poly.hpp"
#include "helpers.hpp"

using namespace bei;
using namespace bei::test;

namespace {

const TermOrder diag{OrderKind::DiagLex, -1};

Poly<Rational> binom(int nvars, int a, int b, int c, int d) {
    // x-style monomial pair: var a * var b - var c * var d (indices 0-based)
    Poly<Rational> p;
    p.push_back({Monomial::var(nvars, a) * Monomial::var(nvars, b), Rational::one()});
    p.push_back({Monomial::var(nvars, c) * Monomial::var(nvars, d), Rational(-1)});
    return poly_normalize(std::move(p), diag);
}

std::vector<Monomial> lead_monos(const std::vector<Poly<Rational>>& gb) {
    std::vector<Monomial> out;
    for (const auto& p : gb) out.push_back(p.front().mono);
    return out;
}

}  // namespace

TEST_CASE("rational arithmetic") {
    const Rational a(1, 2), b(1, 3);
    CHECK((a + b) == Rational(5, 6));
    CHECK((a - b) == Rational(1, 6));
    CHECK((a * b) == Rational(1, 6));
    CHECK((a / b) == Rational(3, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    const Rational big(INT64_MAX / 2, 1);
    CHECK_THROWS_AS(big * Rational(8), std::overflow_error);
}

TEST_CASE("diagonal lex picks x_i y_j as the leading term") {
    // K_2 generator in 4 variables: x1 y2 - x2 y1; x1 y2 has the smaller x index
    const auto p = binom(4, 0, 3, 1, 2);
    CHECK(p.front().mono == Monomial::var(4, 0) * Monomial::var(4, 3));
    CHECK(p.front().coeff == Rational::one());
}

TEST_CASE("degrevlex and elimination orders are total") {
    const TermOrder drl{OrderKind::DegRevLex, -1};
    const Monomial a = Monomial::var(4, 0) * Monomial::var(4, 3);
    const Monomial b = Monomial::var(4, 1) * Monomial::var(4, 2);
    CHECK(drl.compare(a, b) != 0);
    CHECK(drl.compare(a, a) == 0);
    const TermOrder elim{OrderKind::ElimDiagLex, 3};
    const Monomial t2 = Monomial::var(4, 3, 2);
    CHECK(elim.compare(t2, Monomial::var(4, 0)) > 0);  // t beats everything
}

TEST_CASE("buchberger on tiny ideals") {
    // J_{K_2}: a single binomial is its own reduced basis
    const auto k2 = buchberger(jg_generators<Rational>(complete(2)), diag);
    CHECK(k2.size() == 1);

    // {x1, x1 + y1} reduces to {x1, y1}
    Poly<Rational> x1{{Monomial::var(2, 0), Rational::one()}};
    Poly<Rational> x1y1{{Monomial::var(2, 0), Rational::one()},
                        {Monomial::var(2, 1), Rational::one()}};
    const auto lin = buchberger(std::vector<Poly<Rational>>{x1, poly_normalize(x1y1, diag)}, diag);
    REQUIRE(lin.size() == 2);
    CHECK(lin[0].front().mono == Monomial::var(2, 1));
    CHECK(lin[1].front().mono == Monomial::var(2, 0));
}

TEST_CASE("J_{K_3} is already a Groebner basis") {
    const auto gb = buchberger(jg_generators<Rational>(complete(3)), diag);
    CHECK(gb.size() == 3);
    const auto in = initial_ideal(gb, diag);
    REQUIRE(in.size() == 3);
    // in(J_{K_3}) = (x1 y2, x1 y3, x2 y3)
    CHECK(in[0] == Monomial::var(6, 1) * Monomial::var(6, 5));
    CHECK(in[1] == Monomial::var(6, 0) * Monomial::var(6, 5));
    CHECK(in[2] == Monomial::var(6, 0) * Monomial::var(6, 4));
}

TEST_CASE("path with center 3 produces the admissible-path element") {
    // edges {1,3}, {2,3}: the S-pair yields x1 x3 y2 - x2 x3 y1
    const Graph p = from_edge_list(3, {{1, 3}, {2, 3}});
    const auto gb = buchberger(jg_generators<Rational>(p), diag);
    CHECK(gb.size() == 3);
    const auto leads = lead_monos(gb);
    const Monomial extra = Monomial::var(6, 0) * Monomial::var(6, 2) * Monomial::var(6, 4);
    CHECK(std::count(leads.begin(), leads.end(), extra) == 1);

    // edges {1,2}, {2,3}: the two edge binomials already form the basis
    const auto gb2 = buchberger(jg_generators<Rational>(path(3)), diag);
    CHECK(gb2.size() == 2);
}

TEST_CASE("buchberger output is a fixed point") {
    for (const Graph& g : {path(4), cycle(4), complete(4), three_triangles()}) {
        const auto gb = buchberger(jg_generators<Rational>(g), diag);
        const auto again = buchberger(gb, diag);
        REQUIRE(gb.size() == again.size());
        for (std::size_t k = 0; k < gb.size(); ++k) {
            CHECK(gb[k].size() == again[k].size());
            for (std::size_t t = 0; t < gb[k].size(); ++t) {
                CHECK(gb[k][t].mono == again[k][t].mono);
                CHECK(gb[k][t].coeff == again[k][t].coeff);
            }
        }
    }
}

TEST_CASE("ideal equality") {
    const auto jp3 = jg_generators<Rational>(path(3));
    CHECK(ideal_equal(jp3, buchberger(jp3, diag), diag));
    CHECK(!ideal_equal(jp3, jg_generators<Rational>(complete(3)), diag));

    Poly<Rational> x{{Monomial::var(2, 0), Rational::one()}};
    Poly<Rational> x2{{Monomial::var(2, 0), Rational(2)}};
    CHECK(ideal_equal(std::vector<Poly<Rational>>{x}, std::vector<Poly<Rational>>{x2}, diag));
}

TEST_CASE("lex and degrevlex bases generate the same ideal") {
    const TermOrder drl{OrderKind::DegRevLex, -1};
    for (const Graph& g : {path(4), cycle(5), three_triangles()}) {
        const auto lex_gb = buchberger(jg_generators<Rational>(g), diag);
        const auto drl_gb = buchberger(jg_generators<Rational>(g), drl);
        CHECK(ideal_equal(lex_gb, drl_gb, diag));
    }
}

TEST_CASE("intersection of principal ideals") {
    Poly<Rational> x{{Monomial::var(2, 0), Rational::one()}};
    Poly<Rational> y{{Monomial::var(2, 1), Rational::one()}};
    const auto xy = intersect_ideals<Rational>({x}, {y}, 2);
    REQUIRE(xy.size() == 1);
    CHECK(xy[0].front().mono == Monomial::var(2, 0) * Monomial::var(2, 1));

    const auto same = intersect_ideals<Rational>({x}, {x}, 2);
    REQUIRE(same.size() == 1);
    CHECK(same[0].front().mono == Monomial::var(2, 0));
}

TEST_CASE("squarefree initial ideal sanity") {
    // x1^2 leads a non-squarefree basis and must be rejected
    Poly<Rational> sq{{Monomial::var(2, 0, 2), Rational::one()}};
    CHECK_THROWS_AS(initial_ideal<Rational>({sq}, diag, true), std::domain_error);
    CHECK(initial_ideal<Rational>({sq}, diag, false).size() == 1);
}

TEST_CASE("GF(2) pipeline produces a basis too") {
    const auto gb = buchberger(jg_generators<GF2>(complete(3)), diag);
    CHECK(gb.size() == 3);
    const auto in = initial_ideal(gb, diag);
    CHECK(in.size() == 3);
}
