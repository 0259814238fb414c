#include <doctest.h>

#include "beideal/enumerate.hpp"
#include "beideal/errors.hpp"
#include "beideal/json_io.hpp"
#include "beideal/sweep.hpp"
#include "helpers.hpp"

using namespace bei;
using namespace bei::test;

TEST_CASE("enumeration counts match the known census") {
    CHECK(enumerate_connected(3).size() == 2);
    CHECK(enumerate_connected(4).size() == 6);
    CHECK(enumerate_connected(5).size() == 21);
    CHECK(enumerate_connected(6).size() == 112);
    CHECK_THROWS_AS(enumerate_connected(2), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_connected(9), std::invalid_argument);
}

TEST_CASE("canonical bits identify isomorphic graphs") {
    const Graph a = from_edge_list(4, {{1, 2}, {2, 3}, {3, 4}});
    const Graph b = from_edge_list(4, {{3, 1}, {1, 4}, {4, 2}});  // relabeled path
    CHECK(canonical_bits(a) == canonical_bits(b));
    const Graph c = from_edge_list(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
    CHECK(canonical_bits(a) != canonical_bits(c));
    CHECK(graph_from_bits(4, canonical_bits(a)).edge_count() == 3);
}

TEST_CASE("constructed families reproduce the stated invariants") {
    const auto bs = invariants(sigma(4));
    CHECK(bs.n == 6);
    CHECK(bs.kappa == 1);
    CHECK(bs.f == 2);
    CHECK(bs.d == 4);
    CHECK(bs.gap == 1);

    const auto bg = invariants(gamma(3));
    CHECK(bg.n == 6);
    CHECK(bg.kappa == 2);
    CHECK(bg.f == 3);
    CHECK(bg.d == 2);
    CHECK(bg.gap == 1);

    const auto bo = invariants(omega(2));
    CHECK(bo.n == 6);
    CHECK(bo.kappa == 2);
    CHECK(bo.f == 2);
    CHECK(bo.d == 3);
    CHECK(bo.gap == 1);

    const auto bd = invariants(delta(2, 3));
    CHECK(bd.n == 6);
    CHECK(bd.d == 2);
    CHECK(bd.f == 2);
    CHECK(bd.kappa == 3);
    CHECK(bd.gap == 1);

    const auto be = invariants(exk1(3, 2));
    CHECK(be.n == 5);
    CHECK(be.kappa == 1);
    CHECK(be.f == 3);
    CHECK(be.d == 2);
    CHECK(be.gap == 1);

    CHECK_THROWS_AS(construct(FamilySpec{Family::Sigma, {}, 2, {}, {}, {}, {}}),
                    std::invalid_argument);
}

TEST_CASE("family parameters sweep to feasible tuples") {
    for (int d = 3; d <= 6; ++d) {
        const auto b = invariants(sigma(d));
        CHECK(b.gap == 1);
        CHECK(feasibility(b.n, b.kappa, b.f, b.d));
    }
    for (int f = 2; f <= 4; ++f) {
        CHECK(invariants(gamma(f)).gap == 1);
        CHECK(invariants(omega(f)).gap == 1);
    }
    for (int k = 3; k <= 4; ++k) {
        const auto b = invariants(delta(2, k));
        CHECK(b.gap == 1);
        CHECK(b.kappa == k);
    }
}

TEST_CASE("sweep without oracle is deterministic") {
    SweepOptions opts;
    opts.n_max = 5;
    const auto a = sweep(opts);
    const auto b = sweep(opts);
    REQUIRE(a.records.size() == b.records.size());
    CHECK(a.records.size() == 29);  // 2 + 6 + 21
    for (std::size_t k = 0; k < a.records.size(); ++k) {
        CHECK(to_json(a.records[k]).dump() == to_json(b.records[k]).dump());
    }
    CHECK(a.summary.mismatches == 0);
}

TEST_CASE("sweep with jobs matches single-threaded") {
    SweepOptions seq, par;
    seq.n_max = 5;
    par.n_max = 5;
    par.jobs = 4;
    const auto a = sweep(seq);
    const auto b = sweep(par);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t k = 0; k < a.records.size(); ++k) {
        CHECK(to_json(a.records[k]).dump() == to_json(b.records[k]).dump());
    }
}

TEST_CASE("oracle sweep at n = 4 has zero mismatches") {
    SweepOptions opts;
    opts.n_max = 4;
    opts.with_oracle = true;
    const auto rep = sweep(opts);
    CHECK(rep.summary.mismatches == 0);
    CHECK(rep.summary.with_oracle == 8);
    for (const auto& rec : rep.records) CHECK(rec.consistent);
}

TEST_CASE("sweep guards") {
    SweepOptions opts;
    opts.n_max = 8;
    CHECK_THROWS_AS(sweep(opts), LimitError);
    opts.n_max = 7;
    opts.with_oracle = true;
    CHECK_THROWS_AS(sweep(opts), LimitError);
}

TEST_CASE("resume round trip reproduces the uninterrupted report") {
    SweepOptions full;
    full.n_max = 5;
    const auto whole = sweep(full);

    std::vector<GraphRecord> stitched;
    int token = 0;
    for (int guard = 0; guard < 100; ++guard) {
        SweepOptions part;
        part.n_max = 5;
        part.resume_from = token;
        part.budget_ms = 0;  // forces at most a handful of records per round
        const auto piece = sweep(part);
        stitched.insert(stitched.end(), piece.records.begin(), piece.records.end());
        if (!piece.summary.resume_token) break;
        token = *piece.summary.resume_token;
        if (token >= static_cast<int>(whole.records.size())) break;
    }
    REQUIRE(stitched.size() == whole.records.size());
    for (std::size_t k = 0; k < stitched.size(); ++k) {
        CHECK(to_json(stitched[k]).dump() == to_json(whole.records[k]).dump());
    }
}

TEST_CASE("record json carries the report fields") {
    const auto rec = process_graph(gamma(3), 7, true, {});
    const auto j = to_json(rec);
    CHECK(j["graph6"] == to_graph6(gamma(3)));
    CHECK(j["class"] == "Kappa2plus_D2");
    CHECK(j["predicted"]["exact"] == 6);
    CHECK(j["oracle"]["depth"] == 6);
    CHECK(j["consistent"] == true);
}
