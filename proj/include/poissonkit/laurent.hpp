#pragma once

#include <map>
#include <optional>
#include <string>

#include "poissonkit/rational.hpp"

namespace poissonkit {

/// Element of Q[t, t^-1]: finitely many integer powers of t with rational
/// coefficients. No zero coefficients are ever stored.
class LaurentScalar {
public:
    LaurentScalar() = default;
    LaurentScalar(int numerator) { add_term(0, Rational(numerator)); }
    explicit LaurentScalar(const Rational& c) { add_term(0, c); }

    static LaurentScalar t_power(int k, const Rational& c = Rational(1)) {
        LaurentScalar s;
        s.add_term(k, c);
        return s;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    const std::map<int, Rational>& terms() const { return terms_; }

    LaurentScalar operator+(const LaurentScalar& o) const;
    LaurentScalar operator-(const LaurentScalar& o) const;
    LaurentScalar operator*(const LaurentScalar& o) const;
    LaurentScalar operator-() const;
    LaurentScalar& operator+=(const LaurentScalar& o) { return *this = *this + o; }
    LaurentScalar& operator-=(const LaurentScalar& o) { return *this = *this - o; }

    /// Multiplies by t^k.
    LaurentScalar shifted(int k) const;

    /// Ring homomorphism t -> 1: the sum of all coefficients.
    Rational eval_at_one() const;

    /// Exact synthetic division by (t - 1). Empty when the remainder is
    /// nonzero, which happens precisely when eval_at_one() != 0.
    std::optional<LaurentScalar> divided_by_t_minus_one() const;

    bool operator==(const LaurentScalar& o) const { return terms_ == o.terms_; }

    /// Descending powers, e.g. "t^2 - 3 + t^-1".
    std::string to_string() const;

private:
    void add_term(int k, const Rational& c);

    std::map<int, Rational> terms_;
};

} // namespace poissonkit
