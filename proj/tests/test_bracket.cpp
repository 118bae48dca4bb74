#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "poissonkit/invariants.hpp"
#include "poissonkit/parse.hpp"
#include "oracles.hpp"

using namespace poissonkit;

namespace {

const VarContext ctx2 = VarContext::matrix(2);
const VarContext ctx3 = VarContext::matrix(3);

Polynomial entry_or_zero(const BracketTable& t, int a, int b) {
    const Polynomial* e = t.entry(a, b);
    return e ? *e : Polynomial::zero(t.context());
}

} // namespace

TEST_CASE("semiclassical table entries") {
    BracketTable t = BracketTable::semiclassical(2);
    CHECK(entry_or_zero(t, ctx2.var(1, 1), ctx2.var(2, 2)) ==
          poly_parse("2*x[1,2]*x[2,1]", ctx2));
    CHECK(entry_or_zero(t, ctx2.var(1, 1), ctx2.var(1, 2)) ==
          poly_parse("x[1,1]*x[1,2]", ctx2));
    CHECK(entry_or_zero(t, ctx2.var(1, 2), ctx2.var(2, 1)).is_zero());
    // every entry homogeneous of degree 2
    for (const auto& [pair, value] : t.entries())
        CHECK(value.homogeneous_degree() == 2);
}

TEST_CASE("kks table equals matrix-unit commutators") {
    for (int n = 2; n <= 3; ++n) {
        BracketTable t = BracketTable::kks(n);
        const VarContext& ctx = t.context();
        for (int a = 0; a < ctx.var_count(); ++a) {
            for (int b = a + 1; b < ctx.var_count(); ++b) {
                auto [i, j] = ctx.entry_of(a);
                auto [k, l] = ctx.entry_of(b);
                CHECK(entry_or_zero(t, a, b) == oracles::matrix_unit_commutator(n, i, j, k, l));
            }
        }
        for (const auto& [pair, value] : t.entries()) {
            auto deg = value.homogeneous_degree();
            CHECK((!deg || *deg == 1));
        }
    }
    BracketTable t2 = BracketTable::kks(2);
    CHECK(entry_or_zero(t2, ctx2.var(1, 1), ctx2.var(1, 2)) == poly_parse("x[1,2]", ctx2));
    CHECK(entry_or_zero(t2, ctx2.var(1, 1), ctx2.var(2, 2)).is_zero());
    CHECK(entry_or_zero(t2, ctx2.var(1, 2), ctx2.var(2, 1)) ==
          poly_parse("x[1,1] - x[2,2]", ctx2));
}

TEST_CASE("gr table") {
    BracketTable g2 = BracketTable::gr(2);
    CHECK(entry_or_zero(g2, ctx2.var(1, 1), ctx2.var(2, 2)).is_zero());
    CHECK(entry_or_zero(g2, ctx2.var(1, 1), ctx2.var(1, 2)) ==
          poly_parse("x[1,1]*x[1,2]", ctx2));

    BracketTable g3 = BracketTable::gr(3);
    CHECK(entry_or_zero(g3, ctx3.var(2, 2), ctx3.var(3, 3)) ==
          poly_parse("2*x[2,3]*x[3,2]", ctx3));
    CHECK(entry_or_zero(g3, ctx3.var(1, 1), ctx3.var(3, 1)) ==
          poly_parse("x[1,1]*x[3,1]", ctx3));
    CHECK(entry_or_zero(g3, ctx3.var(1, 1), ctx3.var(2, 3)).is_zero());

    // away from the corner row the two tables agree
    BracketTable s3 = BracketTable::semiclassical(3);
    for (int a = 1; a < ctx3.var_count(); ++a)
        for (int b = a + 1; b < ctx3.var_count(); ++b)
            CHECK(entry_or_zero(g3, a, b) == entry_or_zero(s3, a, b));

    for (const auto& [pair, value] : g3.entries())
        CHECK(value.homogeneous_degree() == 2);
}

TEST_CASE("gr table matches top-degree extraction from the filtration") {
    // {x_a, x_b}_gr must be the x[1,1]-degree (p+q) component of {x_a, x_b}
    for (int n = 2; n <= 3; ++n) {
        BracketTable sem = BracketTable::semiclassical(n);
        BracketTable grt = BracketTable::gr(n);
        const VarContext& ctx = sem.context();
        int corner = ctx.var(1, 1);
        for (int a = 0; a < ctx.var_count(); ++a) {
            for (int b = a + 1; b < ctx.var_count(); ++b) {
                int p = (a == corner ? 1 : 0) + (b == corner ? 1 : 0);
                Polynomial full = entry_or_zero(sem, a, b);
                Polynomial top = Polynomial::zero(ctx);
                for (const auto& [m, c] : full.terms())
                    if (m.exponent_of(corner) == p)
                        top.add_term(m, c);
                CHECK(top == entry_or_zero(grt, a, b));
            }
        }
    }
}

TEST_CASE("bracket engine vs frozen and oracle values") {
    BracketTable t = BracketTable::semiclassical(2);
    Polynomial a = poly_parse("x[1,1]", ctx2);
    Polynomial dd = poly_parse("x[2,2]", ctx2);
    CHECK(bracket(t, a, dd) == poly_parse("2*x[1,2]*x[2,1]", ctx2));

    // {c1, x12 x21}: the Leibniz oracle gives 2 x11 x12 x21 - 2 x12 x21 x22,
    // consistent with {c1, c2} = 0 and c2 = x11 x22 - x12 x21.
    Polynomial c1 = a + dd;
    Polynomial bc = poly_parse("x[1,2]*x[2,1]", ctx2);
    Polynomial frozen = poly_parse("2*x[1,1]*x[1,2]*x[2,1] - 2*x[1,2]*x[2,1]*x[2,2]", ctx2);
    CHECK(oracles::naive_bracket(t, c1, bc) == frozen);
    CHECK(bracket(t, c1, bc) == frozen);
    Polynomial c2 = poly_parse("x[1,1]*x[2,2] - x[1,2]*x[2,1]", ctx2);
    CHECK(bracket(t, c1, c2).is_zero());
    CHECK(bracket(t, c1, c2 - bc) == -frozen);
}

TEST_CASE("bracket engine agrees with the recursive-Leibniz oracle") {
    std::mt19937_64 rng(23);
    for (int n = 2; n <= 3; ++n) {
        std::vector<BracketTable> tables;
        tables.push_back(BracketTable::semiclassical(n));
        tables.push_back(BracketTable::kks(n));
        tables.push_back(BracketTable::gr(n));
        for (const BracketTable& t : tables) {
            for (int round = 0; round < 25; ++round) {
                Polynomial f = oracles::random_polynomial(t.context(), rng);
                Polynomial g = oracles::random_polynomial(t.context(), rng);
                CHECK(bracket(t, f, g) == oracles::naive_bracket(t, f, g));
            }
        }
    }
}

TEST_CASE("antisymmetry, Leibniz, bilinearity") {
    std::mt19937_64 rng(29);
    BracketTable t = BracketTable::semiclassical(2);
    for (int round = 0; round < 60; ++round) {
        Polynomial f = oracles::random_polynomial(ctx2, rng);
        Polynomial g = oracles::random_polynomial(ctx2, rng);
        Polynomial h = oracles::random_polynomial(ctx2, rng);
        CHECK((bracket(t, f, g) + bracket(t, g, f)).is_zero());
        CHECK(bracket(t, f, f).is_zero());
        CHECK(bracket(t, f * g, h) == f * bracket(t, g, h) + bracket(t, f, h) * g);
        CHECK(bracket(t, f + g, h) == bracket(t, f, h) + bracket(t, g, h));
    }
}

TEST_CASE("jacobi defect vanishes on all generator triples") {
    for (int n = 2; n <= 3; ++n) {
        for (const char* name : {"semiclassical", "kks", "gr"}) {
            BracketTable t = BracketTable::by_name(name, n);
            const VarContext& ctx = t.context();
            for (int a = 0; a < ctx.var_count(); ++a)
                for (int b = a + 1; b < ctx.var_count(); ++b)
                    for (int c = b + 1; c < ctx.var_count(); ++c)
                        CHECK(jacobi_defect(t, Polynomial::variable(ctx, a),
                                            Polynomial::variable(ctx, b),
                                            Polynomial::variable(ctx, c))
                                  .is_zero());
        }
    }
}

TEST_CASE("jacobi defect with a repeated argument vanishes") {
    std::mt19937_64 rng(31);
    BracketTable t = BracketTable::semiclassical(2);
    for (int round = 0; round < 30; ++round) {
        Polynomial f = oracles::random_polynomial(ctx2, rng);
        Polynomial g = oracles::random_polynomial(ctx2, rng);
        CHECK(jacobi_defect(t, f, f, g).is_zero());
    }
}

TEST_CASE("the quadratic structures are graded") {
    std::mt19937_64 rng(37);
    for (const char* name : {"semiclassical", "gr"}) {
        BracketTable t = BracketTable::by_name(name, 2);
        for (int round = 0; round < 60; ++round) {
            int p = static_cast<int>(rng() % 4), q = static_cast<int>(rng() % 4);
            Polynomial f = oracles::random_polynomial(ctx2, rng, 4, 5).homogeneous_component(p);
            Polynomial g = oracles::random_polynomial(ctx2, rng, 4, 5).homogeneous_component(q);
            Polynomial b = bracket(t, f, g);
            if (!b.is_zero())
                CHECK(b.homogeneous_degree() == p + q);
        }
    }
}

TEST_CASE("kks centrality of the characteristic coefficients") {
    for (int n = 2; n <= 3; ++n) {
        BracketTable t = BracketTable::kks(n);
        const VarContext& ctx = t.context();
        for (int i = 1; i <= n; ++i) {
            Polynomial ci = char_coeff(n, i);
            for (int v = 0; v < ctx.var_count(); ++v)
                CHECK(bracket(t, ci, Polynomial::variable(ctx, v)).is_zero());
        }
    }
}

TEST_CASE("phi kills the border and relabels") {
    VarContext b1 = VarContext::matrix_with_t(1); // target of phi at n=2
    CHECK(phi(poly_parse("x[1,2]", ctx2)).is_zero());
    CHECK(phi(char_coeff(2, 1)) == poly_parse("x[1,1] + t", b1));
    CHECK(phi(poly_parse("x[1,1]*x[2,2] - x[1,2]*x[2,1]", ctx2)) == poly_parse("t*x[1,1]", b1));

    VarContext b2 = VarContext::matrix_with_t(2);
    CHECK(phi(char_coeff(3, 1)) == poly_parse("x[1,1] + x[2,2] + t", b2));
}

TEST_CASE("phi is a Poisson map onto the bracket with central t") {
    std::mt19937_64 rng(41);
    for (int n = 2; n <= 3; ++n) {
        BracketTable src = BracketTable::semiclassical(n);
        BracketTable dst = BracketTable::semiclassical_with_central_t(n - 1);
        for (int round = 0; round < 40; ++round) {
            Polynomial f = oracles::random_polynomial(src.context(), rng);
            Polynomial g = oracles::random_polynomial(src.context(), rng);
            CHECK(phi(bracket(src, f, g)) == bracket(dst, phi(f), phi(g)));
        }
    }
}

TEST_CASE("delta evaluates diagonals and annihilates brackets") {
    VarContext d3 = VarContext::diagonal(3);
    CHECK(delta_phi(char_coeff(3, 1)) == poly_parse("t_1 + t_2 + t_3", d3));
    CHECK(delta_phi(char_coeff(2, 2)) == poly_parse("t_1*t_2", VarContext::diagonal(2)));
    CHECK(delta(phi(char_coeff(3, 2))) == delta_phi(char_coeff(3, 2)));

    // off-diagonal annihilation
    std::mt19937_64 rng(43);
    Polynomial anything = oracles::random_polynomial(ctx2, rng);
    CHECK(delta_phi(poly_parse("x[1,2]", ctx2) * anything).is_zero());

    // diagonal variables Poisson-commute downstream of delta
    BracketTable dst = BracketTable::semiclassical_with_central_t(2);
    for (int round = 0; round < 40; ++round) {
        Polynomial f = oracles::random_polynomial(dst.context(), rng);
        Polynomial g = oracles::random_polynomial(dst.context(), rng);
        CHECK(delta(bracket(dst, f, g)).is_zero());
    }
}

TEST_CASE("corner-degree filtration is respected and tops out at the gr bracket") {
    std::mt19937_64 rng(47);
    BracketTable sem = BracketTable::semiclassical(2);
    BracketTable grt = BracketTable::gr(2);
    int corner = ctx2.var(1, 1);
    auto corner_component = [&](const Polynomial& f, int k) {
        Polynomial r = Polynomial::zero(ctx2);
        for (const auto& [m, c] : f.terms())
            if (m.exponent_of(corner) == k)
                r.add_term(m, c);
        return r;
    };
    for (int round = 0; round < 80; ++round) {
        Polynomial f = oracles::random_polynomial(ctx2, rng);
        Polynomial g = oracles::random_polynomial(ctx2, rng);
        if (f.is_zero() || g.is_zero())
            continue;
        int p = f.degree_in(corner), q = g.degree_in(corner);
        Polynomial b = bracket(sem, f, g);
        CHECK(b.degree_in(corner) <= p + q);
        // top filtration component equals the gr bracket of top components
        Polynomial ftop = corner_component(f, p), gtop = corner_component(g, q);
        CHECK(corner_component(b, p + q) == bracket(grt, ftop, gtop));
    }
}

TEST_CASE("the anti-diagonal flip is a Poisson antimap") {
    std::mt19937_64 rng(53);
    for (int n = 2; n <= 3; ++n) {
        BracketTable t = BracketTable::semiclassical(n);
        for (int round = 0; round < 40; ++round) {
            Polynomial f = oracles::random_polynomial(t.context(), rng);
            Polynomial g = oracles::random_polynomial(t.context(), rng);
            CHECK(bracket(t, offdiagonal_flip(f), offdiagonal_flip(g)) ==
                  -offdiagonal_flip(bracket(t, f, g)));
        }
        // it fixes the trace
        CHECK(offdiagonal_flip(char_coeff(n, 1)) == char_coeff(n, 1));
    }
}
