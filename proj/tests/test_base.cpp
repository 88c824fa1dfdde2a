#include "doctest.h"
#include "tambcat/base.hpp"
#include "tambcat/solve.hpp"

#include <random>

using namespace tambcat;

namespace {

BaseMap rmap(long rows, long cols, std::vector<long> entries) {
    std::vector<Rational> e(entries.begin(), entries.end());
    return rat_map(rat_object(cols), rat_object(rows), std::move(e));
}

// independent oracle: rank by plain fraction-free elimination over a copy
long rank_oracle(std::vector<std::vector<Rational>> rows, long width) {
    long r = 0;
    for (long c = 0; c < width && r < (long)rows.size(); ++c) {
        long p = -1;
        for (long i = r; i < (long)rows.size(); ++i)
            if (rows[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(rows[r], rows[p]);
        for (long i = 0; i < (long)rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rational f = rows[i][c] / rows[r][c];
            for (long j = 0; j < width; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

} // namespace

TEST_CASE("rational round trip") {
    CHECK(rational_to_string(rational_from_string("6/4")) == "3/2");
    CHECK(rational_to_string(rational_from_string("-3")) == "-3");
    CHECK_THROWS_AS(rational_from_string("1/0"), Error);
}

TEST_CASE("bool maps reject true -> false") {
    CHECK_THROWS_AS(bool_map(bool_object(true), bool_object(false)), Error);
    CHECK(bool_map(bool_object(false), bool_object(true)).base == Base::Bool);
    // composition of Bool maps is conjunction of implications
    BaseMap f = bool_map(bool_object(false), bool_object(true));
    BaseMap g = bool_map(bool_object(true), bool_object(true));
    CHECK(compose(g, f).dom == bool_object(false));
}

TEST_CASE("kronecker and permutation conventions") {
    BaseMap a = rmap(2, 2, {1, 2, 3, 4});
    BaseMap b = rmap(2, 2, {0, 1, 1, 0});
    BaseMap t = tensor(a, b);
    CHECK(t.at(0, 1) == Rational(1)); // a00*b01
    CHECK(t.at(2, 1) == Rational(3));
    BaseMap sw = swap_factors(rat_object(2), rat_object(3));
    CHECK(sw.at(0 * 2 + 0, 0 * 3 + 0) == 1);
    CHECK(sw.at(1 * 2 + 0, 0 * 3 + 1) == 1); // (i=0,j=1) -> (j=1,i=0)
    // permuting middle pair of four factors is an involution
    std::vector<BaseObject> fs = {rat_object(2), rat_object(3), rat_object(2), rat_object(2)};
    BaseMap p = permute_factors(fs, {0, 2, 1, 3});
    std::vector<BaseObject> fs2 = {rat_object(2), rat_object(2), rat_object(3), rat_object(2)};
    BaseMap p2 = permute_factors(fs2, {0, 2, 1, 3});
    CHECK(maps_equal(compose(p2, p), identity_map(p.dom)));
}

TEST_CASE("coequalizer: parallel equal pair gives identity quotient") {
    BaseMap f = rmap(3, 2, {1, 0, 0, 1, 2, 2});
    QuotientPresentation q = coequalizer_presentation(f, f);
    CHECK(q.quot.dim == 3);
    CHECK(maps_equal(q.projection, identity_map(rat_object(3))));
}

TEST_CASE("coequalizer: surjective difference kills everything") {
    BaseMap f = rmap(1, 1, {1});
    BaseMap g = rmap(1, 1, {0});
    QuotientPresentation q = coequalizer_presentation(f, g);
    CHECK(q.quot.dim == 0);
}

TEST_CASE("coequalizer: rank-1 difference on 3x2, derived from row-reduction oracle") {
    // f - g has rank 1, so quotient dimension = 3 - 1 = 2
    BaseMap f = rmap(3, 2, {1, 2, 2, 4, 3, 6});
    BaseMap g = rmap(3, 2, {0, 1, 0, 2, 0, 3});
    std::vector<std::vector<Rational>> cols;
    BaseMap d = sub(f, g);
    for (long j = 0; j < 2; ++j) {
        std::vector<Rational> col(3);
        for (long i = 0; i < 3; ++i) col[i] = d.at(i, j);
        cols.push_back(col);
    }
    CHECK(rank_oracle(cols, 3) == 1);
    QuotientPresentation q = coequalizer_presentation(f, g);
    CHECK(q.quot.dim == 2);
    CHECK(maps_equal(compose(q.projection, q.section), identity_map(q.quot)));
    CHECK(maps_equal(compose(q.projection, f), compose(q.projection, g)));
}

TEST_CASE("coequalizer invariants on random matrices") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 25; ++trial) {
        long rows = 1 + rng() % 4, cols = 1 + rng() % 4;
        auto rnd = [&]() { return Rational((long)(rng() % 7) - 3); };
        BaseMap f = zero_map(rat_object(cols), rat_object(rows));
        BaseMap g = zero_map(rat_object(cols), rat_object(rows));
        for (auto& x : f.a) x = rnd();
        for (auto& x : g.a) x = rnd();
        QuotientPresentation q = coequalizer_presentation(f, g);
        CHECK(maps_equal(compose(q.projection, q.section), identity_map(q.quot)));
        CHECK(maps_equal(compose(q.projection, f), compose(q.projection, g)));
        // rank-nullity: ambient = quotient + rank(relation span)
        std::vector<std::vector<Rational>> rel = q.relation_generators;
        CHECK(q.ambient.dim == q.quot.dim + rank_oracle(rel, q.ambient.dim));
    }
}

TEST_CASE("is_isomorphism") {
    CHECK(is_isomorphism(identity_map(rat_object(3))));
    CHECK_FALSE(is_isomorphism(rmap(2, 3, {1, 0, 0, 0, 1, 0})));
    CHECK_FALSE(is_isomorphism(rmap(2, 2, {1, 2, 2, 4}))); // rank 1 by row reduction
    CHECK(is_isomorphism(bool_map(bool_object(true), bool_object(true))));
    CHECK_FALSE(is_isomorphism(bool_map(bool_object(false), bool_object(true))));
}

TEST_CASE("inverse and nullspace") {
    BaseMap m = rmap(2, 2, {2, 1, 1, 1});
    auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(maps_equal(compose(*inv, m), identity_map(rat_object(2))));
    BaseMap s = rmap(1, 2, {1, -1});
    auto ns = nullspace(s);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0][0] == ns[0][1]);
}

TEST_CASE("solve_map_space basics") {
    // no constraints on a 1-dim unknown -> 1-dim solution space
    MapSpaceProblem p(Base::Rat);
    p.add_unknown(rat_object(1), rat_object(1));
    CHECK(p.solve().dim() == 1);

    // constraint forcing the unknown to zero -> empty basis
    MapSpaceProblem p2(Base::Rat);
    int u = p2.add_unknown(rat_object(1), rat_object(1));
    p2.add_equation({MapSpaceProblem::term(1, identity_map(rat_object(1)), u, identity_map(rat_object(1)))});
    CHECK(p2.solve().dim() == 0);

    // X . A = B . X with A = B = diag(1,2) forces X diagonal (2-dim space)
    MapSpaceProblem p3(Base::Rat);
    int x = p3.add_unknown(rat_object(2), rat_object(2));
    BaseMap d = rmap(2, 2, {1, 0, 0, 2});
    p3.add_equation({MapSpaceProblem::term(1, identity_map(rat_object(2)), x, d),
                     MapSpaceProblem::term(-1, d, x, identity_map(rat_object(2)))});
    auto sol = p3.solve();
    CHECK(sol.dim() == 2);
    CHECK(p3.satisfies(sol.basis[0]));

    // embedded unknown: (I_2 (x) X) with X 1x1 scalar, trace-like constraint
    MapSpaceProblem p4(Base::Rat);
    int y = p4.add_unknown(rat_object(1), rat_object(1));
    BaseMap row = rmap(1, 2, {1, 1});
    BaseMap col = rmap(2, 1, {1, -1});
    p4.add_equation({MapSpaceProblem::term_id_tensor(1, row, rat_object(2), y, col)});
    CHECK(p4.solve().dim() == 1); // the constraint is identically zero

    MapSpaceProblem pb(Base::Bool);
    pb.add_unknown(bool_object(true), bool_object(true));
    pb.add_unknown(bool_object(false), bool_object(true));
    CHECK(pb.solve().bool_feasible);
    pb.add_unknown(bool_object(true), bool_object(false));
    CHECK_FALSE(pb.solve().bool_feasible);
}
