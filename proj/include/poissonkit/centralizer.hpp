#pragma once

#include <vector>

#include "poissonkit/bracket.hpp"
#include "poissonkit/linalg.hpp"

namespace poissonkit {

/// All degree-d monomials of the context in descending graded-lex order
/// (x[1,1]^d first). Count is C(vars + d - 1, d).
std::vector<ExponentVector> graded_monomials(const VarContext& ctx, int d);

/// Number of monomials c_1^{a_1} ... c_n^{a_n} of weighted degree d with
/// deg c_i = i, i.e. partitions of d into parts <= n.
long expected_dimension(int n, int d);

/// Sum of the exponents of the first-row and first-column off-diagonal
/// variables x[1,j], x[i,1] (i,j >= 2). The gr bracket acts on a monomial m
/// as {x[1,1], m}_gr = gr_weight(m) * x[1,1] * m.
int gr_weight(const VarContext& ctx, const ExponentVector& m);

struct CentralizerOptions {
    long ambient_cap = 20000; // largest monomial-space dimension without --force
    bool force = false;
    bool with_basis = true;
};

struct CentralizerReport {
    int n = 0;
    int degree = 0;
    long ambient_dim = 0;   // degree-d monomial space
    long target_dim = 0;    // degree-(d+1) monomial space
    long nullspace_dim = 0;
    long expected_dim = 0;
    bool dims_match = false;
    bool span_ok = false;
    bool pass = false; // dims_match && span_ok
    std::vector<Polynomial> basis; // integer-primitive nullspace witnesses
};

/// Exact nullspace of m -> {c_1, m} on the degree-d monomial space.
/// The matrix splits into independent blocks along the conserved
/// row-minus-column degree vector of monomials (asserted per bracket, not
/// assumed); each block is eliminated by fraction-free Bareiss with
/// first-nonzero pivoting in graded-lex column order.
CentralizerReport centralizer_dimension(int n, int d, const BracketTable& table,
                                        const CentralizerOptions& opts = {});

struct SpanCheckDetail {
    long candidate_count = 0;
    bool independent = false;
    bool all_centralize = false;
    bool count_matches = false;
    bool ok = false;
};

/// Expands every c-monomial of weighted degree d and verifies independence,
/// membership in the centralizer of c_1, and the count against
/// expected_dimension.
SpanCheckDetail c_monomial_span_detail(int n, int d);
bool c_monomial_span_check(int n, int d);

/// True when the symbol of every basis polynomial (its top x[1,1]-degree
/// component, i.e. its class in the associated graded algebra of the corner
/// filtration) gr-commutes with x[1,1]. Full centralizer elements need not:
/// already {x[1,1], c_2}_gr = -2 x[1,1] x[1,2] x[2,1] at n = 2, while the
/// symbol of c_2 is the corner-degree-1 part x[1,1] x[2,2].
bool gr_containment_check(const std::vector<Polynomial>& basis);

/// True when the delta_phi images of the basis are linearly independent.
bool delta_phi_full_rank(const std::vector<Polynomial>& basis);

} // namespace poissonkit
