#pragma once

#include <vector>

#include "poissonkit/bracket.hpp"

namespace poissonkit {

/// O(SL_2) machinery. Generators are named through the Matrix(2) context,
///   a = x[1,1], b = x[1,2], c = x[2,1], d = x[2,2],
/// with the relation ad = 1 + bc. Reduced form means no monomial contains
/// both a and d, which gives the monomial basis
///   a^i b^k c^l, b^k c^l d^j, b^k c^l   (i,j >= 1, k,l >= 0).

/// Rewrites each a^i d^j factor as a^(i-m) d^(j-m) (1+bc)^m with
/// m = min(i,j); idempotent on reduced input.
Polynomial sl2_reduce(const Polynomial& f);

/// Reduced element of O(SL_2).
class SL2Element {
public:
    explicit SL2Element(const Polynomial& raw) : poly_(sl2_reduce(raw)) {}

    const Polynomial& poly() const { return poly_; }
    bool operator==(const SL2Element& o) const { return poly_ == o.poly_; }
    std::string to_string() const { return poly_.to_string(); }

private:
    Polynomial poly_;
};

/// {a+d, e} under the SL_2 bracket ({a,b}=ab, {a,c}=ac, {a,d}=2bc, {b,c}=0,
/// {b,d}=bd, {c,d}=cd), reduced to the monomial basis.
SL2Element sl2_ad_trace(const SL2Element& e);

/// Basis monomials of total degree <= d, descending graded-lex.
std::vector<ExponentVector> sl2_basis_upto(int d);

// Closed-form expansions of {a+d, .} on the three basis families, with
// m = k + l; used as symbolic oracles against sl2_ad_trace.
//   a-case   (i >= 1): m a^{i+1}b^k c^l - (2i+m) a^{i-1}b^{k+1}c^{l+1} - m a^{i-1}b^k c^l
//   d-case   (j >= 1): -m b^k c^l d^{j+1} + (m+2j) b^{k+1}c^{l+1}d^{j-1} + m b^k c^l d^{j-1}
//   flat case        : m (a - d) b^k c^l
Polynomial sl2_rhs_a_case(int i, int k, int l);
Polynomial sl2_rhs_d_case(int k, int l, int j);
Polynomial sl2_rhs_flat_case(int k, int l);

struct SL2CentralizerReport {
    int degree = 0;
    long basis_size = 0;
    long nullspace_dim = 0;
    long expected_dim = 0; // d + 1, spanned by 1, tr, ..., tr^d
    bool pass = false;
};

/// Exact nullspace of f -> {a+d, f} on the span of basis monomials of total
/// degree <= d.
SL2CentralizerReport sl2_centralizer_dimension(int d);

} // namespace poissonkit
