#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "poissonkit/context.hpp"
#include "poissonkit/rational.hpp"

namespace poissonkit {

/// Sparse monomial: sorted (variable index, exponent > 0) pairs.
class ExponentVector {
public:
    ExponentVector() = default;

    static ExponentVector variable(int v, int exp = 1);

    bool is_constant() const { return entries_.empty(); }
    int degree() const;
    int exponent_of(int v) const;
    const std::vector<std::pair<int, int>>& entries() const { return entries_; }

    ExponentVector times(const ExponentVector& o) const;

    /// Removes one power of v; empty if v does not occur.
    std::optional<ExponentVector> divided_by_var(int v) const;

    /// Graded-lex: total degree first, then at the first differing variable
    /// (in variable order) the larger exponent wins. Returns <0, 0, >0.
    static int compare(const ExponentVector& a, const ExponentVector& b);

    bool operator==(const ExponentVector& o) const { return entries_ == o.entries_; }
    bool operator!=(const ExponentVector& o) const { return !(*this == o); }

private:
    std::vector<std::pair<int, int>> entries_;
};

/// Orders monomials descending, so map iteration yields the leading term
/// first and printing follows the canonical graded-lex order.
struct GradedLexDescending {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        return ExponentVector::compare(a, b) > 0;
    }
};

/// Exact sparse multivariate polynomial over Q in the variables of a
/// VarContext. Immutable value type: every operation returns a fresh
/// canonical polynomial (no zero coefficients stored).
class Polynomial {
public:
    using TermMap = std::map<ExponentVector, Rational, GradedLexDescending>;

    explicit Polynomial(const VarContext& ctx) : ctx_(ctx) {}

    static Polynomial zero(const VarContext& ctx) { return Polynomial(ctx); }
    static Polynomial constant(const VarContext& ctx, const Rational& c);
    static Polynomial variable(const VarContext& ctx, int v);
    static Polynomial monomial(const VarContext& ctx, const ExponentVector& m,
                               const Rational& c = Rational(1));

    const VarContext& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    int degree_in(int v) const;

    /// Degree when all terms share one total degree (zero counts as
    /// homogeneous of any degree and reports std::nullopt).
    std::optional<int> homogeneous_degree() const;

    Rational coefficient_of(const ExponentVector& m) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const Rational& c) const;
    Polynomial pow(unsigned k) const;

    Polynomial derivative(int v) const;

    /// Extracts the part of given total degree.
    Polynomial homogeneous_component(int d) const;

    /// Terms whose exponent in v is exactly k, with v stripped.
    Polynomial coefficient_in_var(int v, int k) const;

    Rational eval(const std::vector<Rational>& point) const;

    /// Substitutes each variable by a target variable or by zero
    /// (std::nullopt kills every term containing that variable).
    Polynomial apply_variable_map(const VarContext& target,
                                  const std::vector<std::optional<int>>& image) const;

    bool operator==(const Polynomial& o) const { return ctx_ == o.ctx_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Canonical form: graded-lex descending, explicit signs, '*' between
    /// factors, e.g. "x[1,1]*x[2,2] - x[1,2]*x[2,1]".
    std::string to_string() const;

    void add_term(const ExponentVector& m, const Rational& c);

private:
    void require_same_context(const Polynomial& o) const;

    VarContext ctx_;
    TermMap terms_;
};

} // namespace poissonkit
