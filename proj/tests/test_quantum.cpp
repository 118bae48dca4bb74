#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "poissonkit/bracket.hpp"
#include "poissonkit/invariants.hpp"
#include "poissonkit/parse.hpp"
#include "poissonkit/quantum.hpp"

using namespace poissonkit;

namespace {

NCPolynomial gen(int n, int i, int j) { return NCPolynomial::generator(n, i, j); }

LaurentScalar L(const char* text) { return laurent_parse(text); }

} // namespace

TEST_CASE("straightening the three relation cases") {
    QuantumAlgebra alg(2);
    // x[2,2] x[1,1] = x[1,1] x[2,2] - (t - t^-1) x[1,2] x[2,1]
    NCPolynomial p = nc_mul(alg, gen(2, 2, 2), gen(2, 1, 1));
    NCPolynomial expected =
        nc_parse("x[1,1].x[2,2] - (t - t^-1)*x[1,2].x[2,1]", 2);
    CHECK(p == expected);

    // x[1,2] x[1,1] = t^-1 x[1,1] x[1,2]
    CHECK(nc_mul(alg, gen(2, 1, 2), gen(2, 1, 1)) ==
          nc_parse("t^-1*x[1,1].x[1,2]", 2));

    // x[2,1] x[1,2] = x[1,2] x[2,1]
    CHECK(nc_mul(alg, gen(2, 2, 1), gen(2, 1, 2)) == nc_parse("x[1,2].x[2,1]", 2));

    // already-normal words pass through
    CHECK(nc_mul(alg, gen(2, 1, 1), gen(2, 2, 2)) == nc_parse("x[1,1].x[2,2]", 2));
    CHECK(nc_mul(alg, NCPolynomial::one(2), gen(2, 1, 2)) == gen(2, 1, 2));

    // (x[1,1] x[2,2]) x[1,2]: one same-column swap, so a t^-1 appears
    NCPolynomial ad = nc_mul(alg, gen(2, 1, 1), gen(2, 2, 2));
    CHECK(nc_mul(alg, ad, gen(2, 1, 2)) == nc_parse("t^-1*x[1,1].x[1,2].x[2,2]", 2));
}

TEST_CASE("commutators of generators") {
    QuantumAlgebra alg(2);
    // [x11, x12] = (1 - t^-1) x11 x12
    CHECK(nc_commutator(alg, gen(2, 1, 1), gen(2, 1, 2)) ==
          nc_parse("(1 - t^-1)*x[1,1].x[1,2]", 2));
    CHECK(nc_commutator(alg, gen(2, 1, 2), gen(2, 1, 2)).is_zero());
}

TEST_CASE("rewriting is confluent under randomized strategies") {
    std::mt19937_64 rng(61);
    for (int n = 2; n <= 3; ++n) {
        QuantumAlgebra alg(n);
        for (int round = 0; round < 60; ++round) {
            int len = 1 + static_cast<int>(rng() % 5);
            NCWord w;
            for (int q = 0; q < len; ++q)
                w.push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(n * n)));
            NCPolynomial raw = NCPolynomial::word(n, w);
            NCPolynomial leftmost = nc_normal_form(alg, raw);
            for (int trial = 0; trial < 3; ++trial)
                CHECK(nc_normal_form_random_order(alg, raw, rng) == leftmost);
            // every output word is sorted
            for (const auto& [word, coeff] : leftmost.terms())
                CHECK(std::is_sorted(word.begin(), word.end()));
        }
    }
}

TEST_CASE("multiplication is associative through normalization") {
    std::mt19937_64 rng(67);
    for (int n = 2; n <= 3; ++n) {
        QuantumAlgebra alg(n);
        for (int round = 0; round < 25; ++round) {
            auto random_poly = [&]() {
                NCPolynomial p(n);
                int terms = 1 + static_cast<int>(rng() % 2);
                for (int t = 0; t < terms; ++t) {
                    NCWord w;
                    int len = static_cast<int>(rng() % 3);
                    for (int q = 0; q < len; ++q)
                        w.push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(n * n)));
                    p.add_term(w, LaurentScalar::t_power(static_cast<int>(rng() % 3) - 1,
                                                         Rational(1 + static_cast<long>(rng() % 3))));
                }
                return nc_normal_form(alg, p);
            };
            NCPolynomial a = random_poly(), b = random_poly(), c = random_poly();
            CHECK(nc_mul(alg, nc_mul(alg, a, b), c) == nc_mul(alg, a, nc_mul(alg, b, c)));
        }
    }
}

TEST_CASE("quantum determinant") {
    QuantumAlgebra alg2(2);
    CHECK(quantum_det(alg2) == nc_parse("x[1,1].x[2,2] - t*x[1,2].x[2,1]", 2));

    QuantumAlgebra alg1(1);
    CHECK(quantum_det(alg1) == nc_parse("x[1,1]", 1));

    QuantumAlgebra alg3(3);
    NCPolynomial det3 = quantum_det(alg3);
    CHECK(det3.terms().size() == 6);
    // the reversal permutation has three inversions: coefficient (-t)^3
    NCWord antidiag = {alg3.letter(1, 3), alg3.letter(2, 2), alg3.letter(3, 1)};
    CHECK(det3.terms().at(antidiag) == L("-t^3"));
    NCWord diag = {alg3.letter(1, 1), alg3.letter(2, 2), alg3.letter(3, 3)};
    CHECK(det3.terms().at(diag) == L("1"));
}

TEST_CASE("principal quantum minor sums") {
    QuantumAlgebra alg3(3);
    CHECK(quantum_minor_sum(alg3, 1) ==
          nc_parse("x[1,1] + x[2,2] + x[3,3]", 3));

    // sigma_2 is the sum of the three principal 2x2 quantum minors
    // x[i,i].x[j,j] - t*x[i,j].x[j,i] for i < j
    NCPolynomial expected = nc_parse("x[1,1].x[2,2] - t*x[1,2].x[2,1]"
                                     " + x[1,1].x[3,3] - t*x[1,3].x[3,1]"
                                     " + x[2,2].x[3,3] - t*x[2,3].x[3,2]",
                                     3);
    CHECK(quantum_minor_sum(alg3, 2) == expected);

    // the top minor sum is the quantum determinant
    CHECK(quantum_minor_sum(alg3, 3) == quantum_det(alg3));
    QuantumAlgebra alg2(2);
    CHECK(quantum_minor_sum(alg2, 2) == quantum_det(alg2));
}

TEST_CASE("minor sums commute") {
    for (int n = 2; n <= 3; ++n) {
        QuantumAlgebra alg(n);
        std::vector<NCPolynomial> sigma;
        for (int i = 1; i <= n; ++i)
            sigma.push_back(quantum_minor_sum(alg, i));
        for (std::size_t i = 0; i < sigma.size(); ++i)
            for (std::size_t j = i + 1; j < sigma.size(); ++j)
                CHECK(nc_commutator(alg, sigma[i], sigma[j]).is_zero());
    }
}

TEST_CASE("the quantum determinant is central") {
    for (int n = 2; n <= 3; ++n) {
        QuantumAlgebra alg(n);
        NCPolynomial det = quantum_det(alg);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                CHECK(nc_commutator(alg, det, gen(n, i, j)).is_zero());
    }
}

TEST_CASE("t -> 1 sends sigma_i to the characteristic coefficient") {
    for (int n = 1; n <= 3; ++n) {
        QuantumAlgebra alg(n);
        for (int i = 1; i <= n; ++i)
            CHECK(t1_image(quantum_minor_sum(alg, i)) == char_coeff(n, i));
    }
}

TEST_CASE("semiclassical limits of generator pairs match the table") {
    QuantumAlgebra alg(2);
    VarContext ctx = VarContext::matrix(2);
    CHECK(semiclassical_limit_pair(alg, gen(2, 1, 1), gen(2, 2, 2)) ==
          poly_parse("2*x[1,2]*x[2,1]", ctx));
    CHECK(semiclassical_limit_pair(alg, gen(2, 1, 1), gen(2, 1, 2)) ==
          poly_parse("x[1,1]*x[1,2]", ctx));
    CHECK(semiclassical_limit_pair(alg, gen(2, 1, 2), gen(2, 2, 1)).is_zero());

    // exhaustively against the bracket engine
    BracketTable table = BracketTable::semiclassical(2);
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            NCPolynomial qa = NCPolynomial::word(2, {a});
            NCPolynomial qb = NCPolynomial::word(2, {b});
            CHECK(semiclassical_limit_pair(alg, qa, qb) ==
                  bracket(table, t1_image(qa), t1_image(qb)));
        }
    }
}

TEST_CASE("limit of the commuting minor sums is zero") {
    QuantumAlgebra alg(2);
    CHECK(semiclassical_limit_pair(alg, quantum_minor_sum(alg, 1), quantum_minor_sum(alg, 2))
              .is_zero());
}

TEST_CASE("nc printing and parsing round trip") {
    QuantumAlgebra alg(2);
    NCPolynomial det = quantum_det(alg);
    CHECK(det.to_string() == "x[1,1].x[2,2] - t*x[1,2].x[2,1]");
    CHECK(nc_parse(det.to_string(), 2) == det);

    NCPolynomial comm = nc_commutator(alg, gen(2, 1, 1), gen(2, 1, 2));
    CHECK(comm.to_string() == "(1 - t^-1)*x[1,1].x[1,2]");
    CHECK(nc_parse(comm.to_string(), 2) == comm);

    CHECK(nc_parse("0", 2).is_zero());
    CHECK(nc_parse("x[1,1] - x[1,1]", 2).is_zero());
    CHECK_THROWS_AS(nc_parse("x[5,1]", 2), ParseError);
    CHECK_THROWS_AS(nc_parse("x[1,1]..x[2,2]", 2), ParseError);
}
