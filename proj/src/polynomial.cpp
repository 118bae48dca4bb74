#include "poissonkit/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace poissonkit {

ExponentVector ExponentVector::variable(int v, int exp) {
    ExponentVector m;
    if (exp > 0)
        m.entries_.emplace_back(v, exp);
    return m;
}

int ExponentVector::degree() const {
    int d = 0;
    for (const auto& [v, e] : entries_)
        d += e;
    return d;
}

int ExponentVector::exponent_of(int v) const {
    for (const auto& [w, e] : entries_)
        if (w == v)
            return e;
    return 0;
}

ExponentVector ExponentVector::times(const ExponentVector& o) const {
    ExponentVector r;
    r.entries_.reserve(entries_.size() + o.entries_.size());
    auto a = entries_.begin(), b = o.entries_.begin();
    while (a != entries_.end() || b != o.entries_.end()) {
        if (b == o.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            r.entries_.push_back(*a++);
        } else if (a == entries_.end() || b->first < a->first) {
            r.entries_.push_back(*b++);
        } else {
            r.entries_.emplace_back(a->first, a->second + b->second);
            ++a, ++b;
        }
    }
    return r;
}

std::optional<ExponentVector> ExponentVector::divided_by_var(int v) const {
    ExponentVector r;
    bool found = false;
    for (const auto& [w, e] : entries_) {
        if (w == v) {
            found = true;
            if (e > 1)
                r.entries_.emplace_back(w, e - 1);
        } else {
            r.entries_.emplace_back(w, e);
        }
    }
    if (!found)
        return std::nullopt;
    return r;
}

int ExponentVector::compare(const ExponentVector& a, const ExponentVector& b) {
    int da = a.degree(), db = b.degree();
    if (da != db)
        return da < db ? -1 : 1;
    auto ia = a.entries_.begin(), ib = b.entries_.begin();
    while (ia != a.entries_.end() && ib != b.entries_.end()) {
        if (ia->first != ib->first) {
            // the one with a positive exponent on the earlier variable is larger
            return ia->first < ib->first ? 1 : -1;
        }
        if (ia->second != ib->second)
            return ia->second < ib->second ? -1 : 1;
        ++ia, ++ib;
    }
    if (ia != a.entries_.end())
        return 1;
    if (ib != b.entries_.end())
        return -1;
    return 0;
}

Polynomial Polynomial::constant(const VarContext& ctx, const Rational& c) {
    Polynomial p(ctx);
    p.add_term(ExponentVector(), c);
    return p;
}

Polynomial Polynomial::variable(const VarContext& ctx, int v) {
    return monomial(ctx, ExponentVector::variable(v));
}

Polynomial Polynomial::monomial(const VarContext& ctx, const ExponentVector& m, const Rational& c) {
    Polynomial p(ctx);
    p.add_term(m, c);
    return p;
}

void Polynomial::add_term(const ExponentVector& m, const Rational& c) {
    if (c == 0)
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void Polynomial::require_same_context(const Polynomial& o) const {
    if (!(ctx_ == o.ctx_))
        throw ContextMismatchError("polynomial operands use different variable rosters");
}

int Polynomial::degree() const {
    if (terms_.empty())
        return -1;
    return terms_.begin()->first.degree(); // leading term has maximal degree
}

int Polynomial::degree_in(int v) const {
    int d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.exponent_of(v));
    return d;
}

std::optional<int> Polynomial::homogeneous_degree() const {
    if (terms_.empty())
        return std::nullopt;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d)
            return std::nullopt;
    return d;
}

Rational Polynomial::coefficient_of(const ExponentVector& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational() : it->second;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_context(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    require_same_context(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, Rational(-c));
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_context(o);
    Polynomial r(ctx_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_)
            r.add_term(m1.times(m2), Rational(c1 * c2));
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, Rational(-c));
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(ctx_);
    if (c == 0)
        return r;
    for (const auto& [m, coeff] : terms_)
        r.terms_.emplace(m, Rational(coeff * c));
    return r;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial r = constant(ctx_, Rational(1));
    for (unsigned i = 0; i < k; ++i)
        r = r * *this;
    return r;
}

Polynomial Polynomial::derivative(int v) const {
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_) {
        int e = m.exponent_of(v);
        if (e == 0)
            continue;
        r.add_term(*m.divided_by_var(v), Rational(c * e));
    }
    return r;
}

Polynomial Polynomial::homogeneous_component(int d) const {
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == d)
            r.terms_.emplace(m, c);
    return r;
}

Polynomial Polynomial::coefficient_in_var(int v, int k) const {
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_) {
        if (m.exponent_of(v) != k)
            continue;
        ExponentVector stripped;
        for (const auto& [w, e] : m.entries())
            if (w != v)
                stripped = stripped.times(ExponentVector::variable(w, e));
        r.add_term(stripped, c);
    }
    return r;
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
    Rational total;
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (const auto& [v, e] : m.entries()) {
            Rational p(1);
            for (int i = 0; i < e; ++i)
                p *= point.at(static_cast<std::size_t>(v));
            term *= p;
        }
        total += term;
    }
    return total;
}

Polynomial Polynomial::apply_variable_map(const VarContext& target,
                                          const std::vector<std::optional<int>>& image) const {
    Polynomial r(target);
    for (const auto& [m, c] : terms_) {
        ExponentVector mapped;
        bool killed = false;
        for (const auto& [v, e] : m.entries()) {
            const auto& img = image.at(static_cast<std::size_t>(v));
            if (!img) {
                killed = true;
                break;
            }
            mapped = mapped.times(ExponentVector::variable(*img, e));
        }
        if (!killed)
            r.add_term(mapped, c);
    }
    return r;
}

std::string Polynomial::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0)
                out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (m.is_constant()) {
            out << mag.get_str();
            continue;
        }
        bool need_star = false;
        if (mag != 1) {
            out << mag.get_str();
            need_star = true;
        }
        for (const auto& [v, e] : m.entries()) {
            if (need_star)
                out << "*";
            out << ctx_.var_name(v);
            if (e > 1)
                out << "^" << e;
            need_star = true;
        }
    }
    return out.str();
}

} // namespace poissonkit
