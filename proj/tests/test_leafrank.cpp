#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "poissonkit/leafrank.hpp"
#include "poissonkit/linalg.hpp"
#include "poissonkit/parse.hpp"

using namespace poissonkit;

TEST_CASE("inversions and minimal transposition counts") {
    CHECK(inversions({1, 2, 3}) == 0);
    CHECK(inversions({3, 2, 1}) == 3);
    CHECK(min_transpositions({1, 2, 3}) == 0);
    CHECK(min_transpositions({2, 3, 1}) == 2);     // 3-cycle
    CHECK(min_transpositions({2, 1, 3, 4}) == 1);  // transposition in S4
    CHECK(min_transpositions({3, 2, 1}) == 1);     // reversal of S3 is a transposition
}

TEST_CASE("permutation algebra") {
    PermWord p = {2, 3, 1};
    CHECK(compose(p, inverse(p)) == PermWord{1, 2, 3});
    CHECK(compose(inverse(p), p) == PermWord{1, 2, 3});
    CHECK(inverse(PermWord{3, 1, 2}) == PermWord{2, 3, 1});
}

TEST_CASE("leaf dimensions") {
    PermWord e = {1, 2, 3};
    PermWord rev = {3, 2, 1};
    CHECK(leaf_dimension(e, e) == 0);
    CHECK(leaf_dimension(rev, rev) == 6);
    CHECK(leaf_dimension(rev, e) == 4); // 3 + 0 + 1
}

TEST_CASE("exhaustive maxima over the Weyl group") {
    for (int n = 2; n <= 4; ++n) {
        WeylReport rep = max_leaf_dimension(n);
        CHECK(rep.max_dimension == n * (n - 1));
        CHECK(rep.attained_at_longest);
        CHECK(rep.bound_holds);
        CHECK(rep.bound_max == n * (n - 1));
        CHECK(rep.pass);
    }
    CHECK_THROWS_AS(max_leaf_dimension(6), ResourceLimitError);
}

TEST_CASE("the bracket matrix") {
    VarContext ctx = VarContext::matrix(2);
    auto sem = bracket_matrix(BracketTable::semiclassical(2));
    int a = ctx.var(1, 1), d = ctx.var(2, 2);
    CHECK(sem[static_cast<std::size_t>(a)][static_cast<std::size_t>(d)] ==
          poly_parse("2*x[1,2]*x[2,1]", ctx));
    CHECK(sem[static_cast<std::size_t>(d)][static_cast<std::size_t>(a)] ==
          poly_parse("-2*x[1,2]*x[2,1]", ctx));
    for (int v = 0; v < 4; ++v)
        CHECK(sem[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)].is_zero());

    auto kks = bracket_matrix(BracketTable::kks(2));
    int b = ctx.var(1, 2), c = ctx.var(2, 1);
    CHECK(kks[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] ==
          poly_parse("x[1,1] - x[2,2]", ctx));
}

TEST_CASE("sampled ranks on SL reach n(n-1)") {
    RankReport r2 = sampled_rank(2, SpaceTag::SL, BracketTable::semiclassical(2), 50, 7);
    CHECK(r2.max_rank == 2);
    CHECK(r2.pass);
    CHECK_FALSE(r2.parity_discrepancy);
    CHECK(r2.literature_rank == 2);
}

TEST_CASE("sampled rank on M2 caps at the even value below the literature count") {
    RankReport rep = sampled_rank(2, SpaceTag::M, BracketTable::semiclassical(2), 100, 11);
    CHECK(rep.max_rank == 2);            // the 4x4 matrix has identically vanishing pfaffian
    CHECK(rep.expected_rank == 2);
    CHECK(rep.literature_rank == 3);
    CHECK(rep.parity_discrepancy);
    CHECK(rep.pass);
}

TEST_CASE("identical seeds reproduce identical reports") {
    RankReport a = sampled_rank(2, SpaceTag::GL, BracketTable::semiclassical(2), 20, 99);
    RankReport b = sampled_rank(2, SpaceTag::GL, BracketTable::semiclassical(2), 20, 99);
    CHECK(a.max_rank == b.max_rank);
    CHECK(a.pass == b.pass);
}

TEST_CASE("evaluated bracket matrices have even rank") {
    std::mt19937_64 rng(71);
    for (int n = 2; n <= 3; ++n) {
        auto m = bracket_matrix(BracketTable::semiclassical(n));
        const int nvars = n * n;
        for (int round = 0; round < 10; ++round) {
            std::vector<Rational> point;
            for (int v = 0; v < nvars; ++v)
                point.emplace_back(static_cast<long>(rng() % 11) - 5);
            std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(nvars),
                                                    std::vector<Rational>(static_cast<std::size_t>(nvars)));
            for (int i = 0; i < nvars; ++i)
                for (int j = 0; j < nvars; ++j)
                    rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].eval(point);
            int rank = exact_rank(clear_denominators(rows, nvars));
            CHECK(rank % 2 == 0);
            CHECK(rank <= n * (n - 1)); // never exceeds the attainable value
        }
    }
}

TEST_CASE("integrability gaps") {
    IntegrabilityReport sl3 = integrability_gap(3, SpaceTag::SL);
    CHECK(sl3.space_dim == 8);
    CHECK(sl3.rank == 6);
    CHECK(sl3.required_dim == 5);
    CHECK(sl3.actual_dim == 2);
    CHECK_FALSE(sl3.integrable);

    IntegrabilityReport sl2 = integrability_gap(2, SpaceTag::SL);
    CHECK(sl2.required_dim == 2);
    CHECK(sl2.actual_dim == 1);
    CHECK_FALSE(sl2.integrable);

    IntegrabilityReport m2 = integrability_gap(2, SpaceTag::M);
    CHECK(m2.space_dim == 4);
    CHECK(m2.rank == 3);
    CHECK(m2.required_dim == Rational(5, 2)); // non-integral requirement, exact
    CHECK(m2.actual_dim == 2);
    CHECK_FALSE(m2.integrable);
}

TEST_CASE("space tags") {
    CHECK(space_from_name("m") == SpaceTag::M);
    CHECK(space_from_name("gl") == SpaceTag::GL);
    CHECK(space_from_name("sl") == SpaceTag::SL);
    CHECK_THROWS_AS(space_from_name("su"), ContextMismatchError);
    CHECK(space_name(SpaceTag::GL) == "gl");
}
