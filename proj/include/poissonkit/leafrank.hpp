#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "poissonkit/bracket.hpp"
#include "poissonkit/rational.hpp"

namespace poissonkit {

/// Permutation of {1..n} in one-line notation.
using PermWord = std::vector<int>;

int inversions(const PermWord& w);

/// Least number of (not necessarily adjacent) transpositions whose product
/// is w: n minus the number of cycles.
int min_transpositions(const PermWord& w);

PermWord compose(const PermWord& p, const PermWord& q); // (p*q)(x) = p(q(x))
PermWord inverse(const PermWord& p);

/// len(w+) + len(w-) + min_transpositions(w+ * w-^-1).
int leaf_dimension(const PermWord& w_plus, const PermWord& w_minus);

struct WeylReport {
    int n = 0;
    int max_dimension = 0;      // exhaustive max of leaf_dimension over S_n x S_n
    int expected = 0;           // n(n-1)
    bool attained_at_longest = false; // maximum reached at w+ = w- = reversal
    bool bound_holds = false;   // leaf_dimension <= len+len+len at every pair
    int bound_max = 0;          // exhaustive max of the length bound
    bool pass = false;
};

/// Exhaustive enumeration over S_n x S_n; n is capped (default 5) since the
/// search is quadratic in n!.
WeylReport max_leaf_dimension(int n, int cap = 5);

/// The n^2 x n^2 antisymmetric matrix of generator brackets.
std::vector<std::vector<Polynomial>> bracket_matrix(const BracketTable& table);

enum class SpaceTag { M, GL, SL };

std::string space_name(SpaceTag s);
SpaceTag space_from_name(const std::string& name); // "m" | "gl" | "sl"

struct RankReport {
    SpaceTag space = SpaceTag::M;
    int n = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    int max_rank = 0;      // largest exact rank seen at the sample points
    int expected_rank = 0; // attainable target: n(n-1) for every space
    int literature_rank = 0;    // n(n-1) for SL, n(n-1)+1 for M/GL
    bool parity_discrepancy = false; // literature value is odd, bracket matrices
                                     // are antisymmetric (even rank); set for M/GL
    bool pass = false; // max_rank == expected_rank
};

/// Evaluates the bracket matrix at seeded random rational points of the
/// space (M: integer matrices; GL: det != 0 by resampling; SL: unipotent *
/// diagonal * unipotent with diagonal determinant 1) and takes the maximal
/// exact rank. A Monte Carlo lower-bound search: max_rank never exceeds the
/// true generic rank.
RankReport sampled_rank(int n, SpaceTag space, const BracketTable& table, int samples,
                        std::uint64_t seed);

struct IntegrabilityReport {
    SpaceTag space = SpaceTag::M;
    int n = 0;
    long space_dim = 0;
    int rank = 0;          // the reported rank value for the space
    Rational required_dim; // space_dim - rank/2, exact
    int actual_dim = 0;    // n-1 for SL, n for M/GL
    bool integrable = false;
};

IntegrabilityReport integrability_gap(int n, SpaceTag space);

} // namespace poissonkit
