#include "poissonkit/laurent.hpp"

#include <sstream>

namespace poissonkit {

void LaurentScalar::add_term(int k, const Rational& c) {
    if (c == 0)
        return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

bool LaurentScalar::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

LaurentScalar LaurentScalar::operator+(const LaurentScalar& o) const {
    LaurentScalar r = *this;
    for (const auto& [k, c] : o.terms_)
        r.add_term(k, c);
    return r;
}

LaurentScalar LaurentScalar::operator-(const LaurentScalar& o) const {
    LaurentScalar r = *this;
    for (const auto& [k, c] : o.terms_)
        r.add_term(k, Rational(-c));
    return r;
}

LaurentScalar LaurentScalar::operator*(const LaurentScalar& o) const {
    LaurentScalar r;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_)
            r.add_term(k1 + k2, Rational(c1 * c2));
    return r;
}

LaurentScalar LaurentScalar::operator-() const {
    LaurentScalar r;
    for (const auto& [k, c] : terms_)
        r.terms_.emplace(k, Rational(-c));
    return r;
}

LaurentScalar LaurentScalar::shifted(int k) const {
    LaurentScalar r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e + k, c);
    return r;
}

Rational LaurentScalar::eval_at_one() const {
    Rational s;
    for (const auto& [k, c] : terms_)
        s += c;
    return s;
}

std::optional<LaurentScalar> LaurentScalar::divided_by_t_minus_one() const {
    if (terms_.empty())
        return LaurentScalar();
    // (t-1)*q has coefficient q_{k-1} - q_k at t^k; solve top-down.
    const int lo = terms_.begin()->first;
    const int hi = terms_.rbegin()->first;
    LaurentScalar q;
    Rational carry; // q_k, starting from q_hi = 0
    for (int k = hi; k > lo; --k) {
        auto it = terms_.find(k);
        Rational a = (it == terms_.end()) ? Rational() : it->second;
        Rational qk = a + carry; // q_{k-1}
        q.add_term(k - 1, qk);
        carry = qk;
    }
    // Remainder: coefficient at t^lo must satisfy -q_lo == a_lo.
    Rational a_lo = terms_.begin()->second;
    if (a_lo + carry != 0)
        return std::nullopt;
    return q;
}

std::string LaurentScalar::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    // descending powers
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const int k = it->first;
        const Rational& c = it->second;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0)
                out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            out << mag.get_str();
        } else {
            if (mag != 1)
                out << mag.get_str() << "*";
            out << "t";
            if (k != 1)
                out << "^" << k;
        }
    }
    return out.str();
}

} // namespace poissonkit
