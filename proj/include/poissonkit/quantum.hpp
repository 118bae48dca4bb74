#pragma once

#include <array>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "poissonkit/laurent.hpp"
#include "poissonkit/polynomial.hpp"

namespace poissonkit {

/// Word in the n^2 generators; letter = (i-1)*n + (j-1) in row-major order.
/// A word is normal iff its letters are nondecreasing.
using NCWord = std::vector<int>;

/// The quantized matrix algebra of size n over Q[t,t^-1]. Holds the
/// straightening rules for every out-of-order letter pair:
///   x_kl x_ij = x_ij x_kl - (t - t^-1) x_il x_kj   (i<k, j<l)
///   x_kl x_ij = t^-1 x_ij x_kl                     (same row or column)
///   x_kl x_ij = x_ij x_kl                          (i<k, j>l)
/// for (i,j) < (k,l) row-major.
class QuantumAlgebra {
public:
    struct RuleTerm {
        LaurentScalar coeff;
        std::array<int, 2> letters; // in normal order
    };

    explicit QuantumAlgebra(int n);

    int n() const { return n_; }
    int letter_count() const { return n_ * n_; }
    int letter(int i, int j) const { return (i - 1) * n_ + (j - 1); } // 1-based
    std::pair<int, int> entry(int letter) const { return {letter / n_ + 1, letter % n_ + 1}; }

    /// Rewrite of x_hi x_lo for hi > lo; one or two terms.
    const std::vector<RuleTerm>& pair_rule(int hi, int lo) const;

private:
    int n_;
    std::vector<std::vector<RuleTerm>> rules_;
};

/// Element of the quantized matrix algebra: words with Laurent coefficients.
/// Values produced by the operations below are always in PBW normal form
/// (only normal words); raw words can be staged via add_term and normalized
/// explicitly.
class NCPolynomial {
public:
    explicit NCPolynomial(int n) : n_(n) {}

    static NCPolynomial one(int n) { return word(n, {}); }
    static NCPolynomial word(int n, const NCWord& w, const LaurentScalar& c = LaurentScalar(1));
    static NCPolynomial generator(int n, int i, int j); // 1-based entry

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<NCWord, LaurentScalar>& terms() const { return terms_; }

    void add_term(const NCWord& w, const LaurentScalar& c);

    NCPolynomial operator+(const NCPolynomial& o) const;
    NCPolynomial operator-(const NCPolynomial& o) const;
    NCPolynomial operator-() const;
    NCPolynomial scaled(const LaurentScalar& c) const;

    bool operator==(const NCPolynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    /// Words joined by '.', Laurent coefficients parenthesized when needed,
    /// e.g. "x[1,1].x[2,2] - t*x[1,2].x[2,1]".
    std::string to_string() const;

private:
    int n_;
    std::map<NCWord, LaurentScalar> terms_;
};

/// Straightens every word, leftmost out-of-order pair first.
NCPolynomial nc_normal_form(const QuantumAlgebra& alg, const NCPolynomial& p);

/// Same result through a randomized choice of reduction site; exists to
/// test confluence of the rewriting system.
NCPolynomial nc_normal_form_random_order(const QuantumAlgebra& alg, const NCPolynomial& p,
                                         std::mt19937_64& rng);

NCPolynomial nc_mul(const QuantumAlgebra& alg, const NCPolynomial& a, const NCPolynomial& b);
NCPolynomial nc_commutator(const QuantumAlgebra& alg, const NCPolynomial& a, const NCPolynomial& b);

/// det_t = sum_s (-t)^len(s) x[1,s(1)] ... x[n,s(n)].
NCPolynomial quantum_det(const QuantumAlgebra& alg);

/// sigma_i: sum over principal i x i quantum minors,
/// sum_{|I|=i} sum_s (-t)^len(s) x[i_1, i_s(1)] ... x[i_k, i_s(k)].
/// sigma_n equals quantum_det and the t -> 1 image of sigma_i is c_i.
NCPolynomial quantum_minor_sum(const QuantumAlgebra& alg, int i);

/// t -> 1 specialization onto the commutative Matrix(n) ring; input must be
/// in normal form.
Polynomial t1_image(const NCPolynomial& p);

/// ([a,b] / (t-1)) at t = 1; the commutator of any two elements is always
/// divisible by (t-1), so an inexact division indicates a normalization bug
/// and throws.
Polynomial semiclassical_limit_pair(const QuantumAlgebra& alg, const NCPolynomial& a,
                                    const NCPolynomial& b);

/// Parses "x[1,1].x[2,2] - t*x[1,2].x[2,1]" style input; coefficients are
/// Laurent factors, parenthesized when they are sums.
NCPolynomial nc_parse(const std::string& text, int n);

} // namespace poissonkit
