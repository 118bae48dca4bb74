#pragma once

#include <string>
#include <vector>

#include "poissonkit/bracket.hpp"

namespace poissonkit {

/// Strictly increasing 1-based row/column indices.
using IndexSet = std::vector<int>;

/// The k x k minor [I|J] = sum_s sgn(s) x[i_1, j_s(1)] ... x[i_k, j_s(k)]
/// of the generic n x n matrix. |I| must equal |J|.
Polynomial minor_det(const IndexSet& rows, const IndexSet& cols, int n);

/// i-th characteristic coefficient as the sum of all i x i principal
/// minors, subsets enumerated in lexicographic order. c_1 is the trace,
/// c_n the determinant.
Polynomial char_coeff(int n, int i);

/// Independent route: expands det(A - t*Id) over MatrixWithT(n) and reads
/// off c_i as (-1)^i times the coefficient of t^(n-i). Kept separate from
/// char_coeff as a consistency oracle.
Polynomial char_coeff_via_charpoly(int n, int i);

/// Elementary symmetric polynomial e_i(t_1..t_n) in Diagonal(n).
Polynomial elementary_symmetric(int n, int i);

struct InvolutivityPair {
    int i, j;
    bool zero;
    std::string value; // printed bracket, "0" on success
};

struct InvolutivityReport {
    int n;
    std::string structure;
    std::vector<InvolutivityPair> pairs;
    bool pass; // all brackets {c_i, c_j} vanish
};

/// Computes {c_i, c_j} for all 1 <= i < j <= n under the given table.
InvolutivityReport involutivity_check(int n, const BracketTable& table);

} // namespace poissonkit
