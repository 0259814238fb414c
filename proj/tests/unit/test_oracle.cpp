#include <doctest.h>

#include "beideal/classify.hpp"
#include "beideal/enumerate.hpp"
#include "beideal/oracle.hpp"
#include "beideal/structure.hpp"
#include "helpers.hpp"

using namespace bei;
using namespace bei::test;

namespace {

const TermOrder diag{OrderKind::DiagLex, -1};

Monomial xvar(int n, int i) { return Monomial::var(2 * n, i - 1); }
Monomial yvar(int n, int i) { return Monomial::var(2 * n, n + i - 1); }

}  // namespace

TEST_CASE("jg generators") {
    const auto k2 = jg_generators<Rational>(complete(2));
    REQUIRE(k2.size() == 1);
    CHECK(k2[0].front().mono == xvar(2, 1) * yvar(2, 2));
    CHECK(k2[0].front().coeff == Rational::one());
    CHECK(k2[0].back().coeff == Rational(-1));

    CHECK(jg_generators<Rational>(path(3)).size() == 2);
    CHECK(jg_generators<Rational>(Graph(3, {})).empty());
}

TEST_CASE("initial ideal of K_2") {
    const auto gb = buchberger(jg_generators<Rational>(complete(2)), diag);
    const auto in = initial_ideal(gb, diag);
    REQUIRE(in.size() == 1);
    CHECK(in[0] == xvar(2, 1) * yvar(2, 2));
}

TEST_CASE("betti table of a hypersurface") {
    const auto table = betti_table({xvar(2, 1) * yvar(2, 2)}, 4);
    CHECK(table.at(0, 0) == 1);
    CHECK(table.at(1, 2) == 1);
    CHECK(table.pd == 1);
    CHECK(table.depth == 3);
}

TEST_CASE("betti table of in(J_{K_3})") {
    const auto gb = buchberger(jg_generators<Rational>(complete(3)), diag);
    const auto table = betti_table(initial_ideal(gb, diag), 6);
    CHECK(table.at(1, 2) == 3);
    CHECK(table.at(2, 3) == 2);
    CHECK(table.pd == 2);
    CHECK(table.depth == 4);
    CHECK(table.reg == 1);
}

TEST_CASE("betti convolution for variable-disjoint generators") {
    // two hypersurfaces on disjoint variables behave like a tensor product
    const auto table = betti_table({xvar(4, 1) * yvar(4, 2), xvar(4, 3) * yvar(4, 4)}, 8);
    CHECK(table.pd == 2);
    CHECK(table.depth == 6);
    CHECK(table.at(1, 2) == 2);
    CHECK(table.at(2, 4) == 1);
}

TEST_CASE("depth_exact frozen values") {
    struct Case {
        Graph g;
        int depth;
        int pd;
        int reg;
    };
    const std::vector<Case> cases = {
        {path(3), 4, 2, 2},
        {complete(3), 4, 2, 1},
        {cycle(4), 4, 4, 2},
        {from_edge_list(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}), 4, 4, 2},  // diamond
        {star(4), 5, 3, 2},
        {cycle(5), 5, 5, 3},
        {three_triangles(), 5, 5, 2},
    };
    for (const auto& c : cases) {
        const auto rep = depth_exact(c.g);
        CHECK(rep.depth == c.depth);
        CHECK(rep.pd == c.pd);
        CHECK(rep.reg == c.reg);
        CHECK(rep.depth + rep.pd == 2 * c.g.n());  // Auslander-Buchsbaum bookkeeping
        CHECK(rep.initial_betti.at(1, 2) == c.g.edge_count());
    }
}

TEST_CASE("depth_exact on the paper families") {
    CHECK(depth_exact(sigma(4)).depth == 6);
    CHECK(depth_exact(gamma(3)).depth == 6);
    CHECK(depth_exact(omega(2)).depth == 5);
    CHECK(depth_exact(delta(2, 3)).depth == 5);
}

TEST_CASE("minimal pattern-H graph: projective dimension witness") {
    const auto rep = depth_exact(minimal_h());
    CHECK(rep.depth == 6);
    CHECK(rep.pd == 6);
    CHECK(rep.initial_betti.at(6, 10) == 1);
}

TEST_CASE("variable limit is enforced") {
    OracleOptions opts;
    opts.var_limit = 10;
    CHECK_THROWS(depth_exact(cycle(6), opts));
    opts.var_limit = 16;
    CHECK(depth_exact(cycle(6), opts).depth == 6);
}

TEST_CASE("characteristic 2 agrees on small free-homology cases") {
    for (const Graph& g : {path(3), complete(3), cycle(4), star(4)}) {
        const auto q = depth_exact(g, {Field::Q, 16});
        const auto f2 = depth_exact(g, {Field::F2, 16});
        CHECK(q.depth == f2.depth);
        CHECK(q.pd == f2.pd);
    }
}

TEST_CASE("ohtani identity") {
    CHECK(ohtani_check(path(3), 2));
    CHECK(ohtani_check(cycle(4), 1));
    CHECK(ohtani_check(cycle(4), 3));
    CHECK_THROWS_AS(ohtani_check(path(3), 1), std::domain_error);
}

TEST_CASE("intersection realizes the ohtani decomposition for P_3") {
    // J_{P_3} = J_{(P_3)_2} cap ((x_2, y_2) + J_{P_3 - 2})
    const Graph p3 = path(3);
    const auto lhs = jg_generators<Rational>(p3);
    const auto j_gv = jg_generators<Rational>(ohtani_completion(p3, 2));
    std::vector<Poly<Rational>> rhs;
    rhs.push_back({{xvar(3, 2), Rational::one()}});
    rhs.push_back({{yvar(3, 2), Rational::one()}});
    const auto inter = intersect_ideals(j_gv, rhs, 6);
    CHECK(ideal_equal(lhs, inter, diag));
}

TEST_CASE("oracle depth sits inside the combinatorial bounds (n <= 5)") {
    for (int n = 3; n <= 5; ++n) {
        for (const Graph& g : enumerate_connected(n)) {
            const auto b = invariants(g);
            const auto rep = depth_exact(g);
            if (!b.complete) {
                CHECK(rep.depth >= b.d + b.f);
                CHECK(rep.depth <= b.n + 2 - b.kappa);
            } else {
                CHECK(rep.depth == b.n + 1);
            }
        }
    }
}

TEST_CASE("every D1 graph with n <= 6 has pd = n and a beta(n, n+d) witness") {
    int found = 0;
    for (int n = 5; n <= 6; ++n) {
        for (const Graph& g : enumerate_connected(n)) {
            const auto b = invariants(g);
            if (b.complete || b.gap != 1) continue;
            if (classify(g).tag != ClassTag::D1) continue;
            ++found;
            const auto rep = depth_exact(g);
            CHECK(rep.pd == b.n);
            CHECK(rep.initial_betti.at(b.n, b.n + b.d) != 0);
        }
    }
    CHECK(found == 9);  // 1 class at n=5 plus 8 at n=6
}

TEST_CASE("characteristic-2 recomputation report (n <= 5)") {
    // char dependence is reported, never asserted: this records any
    // disagreement loudly while only requiring both runs to complete
    int disagreements = 0;
    for (int n = 3; n <= 5; ++n) {
        for (const Graph& g : enumerate_connected(n)) {
            const auto q = depth_exact(g, {Field::Q, 16});
            const auto f2 = depth_exact(g, {Field::F2, 16});
            if (q.depth != f2.depth) {
                ++disagreements;
                MESSAGE("char-2 depth differs on ", to_graph6(g), ": Q=", q.depth,
                        " F2=", f2.depth);
            }
            CHECK(q.depth + q.pd == 2 * g.n());
            CHECK(f2.depth + f2.pd == 2 * g.n());
        }
    }
    MESSAGE("characteristic-2 disagreements at n <= 5: ", disagreements);
}
