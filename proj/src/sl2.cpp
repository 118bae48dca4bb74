#include "poissonkit/sl2.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "poissonkit/centralizer.hpp"
#include "poissonkit/linalg.hpp"

namespace poissonkit {

namespace {

const VarContext& sl2_ctx() {
    static const VarContext ctx = VarContext::matrix(2);
    return ctx;
}

int var_a() { return sl2_ctx().var(1, 1); }
int var_b() { return sl2_ctx().var(1, 2); }
int var_c() { return sl2_ctx().var(2, 1); }
int var_d() { return sl2_ctx().var(2, 2); }

ExponentVector monomial_abcd(int ea, int eb, int ec, int ed) {
    ExponentVector m;
    if (ea > 0)
        m = m.times(ExponentVector::variable(var_a(), ea));
    if (eb > 0)
        m = m.times(ExponentVector::variable(var_b(), eb));
    if (ec > 0)
        m = m.times(ExponentVector::variable(var_c(), ec));
    if (ed > 0)
        m = m.times(ExponentVector::variable(var_d(), ed));
    return m;
}

long binomial(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace

Polynomial sl2_reduce(const Polynomial& f) {
    const VarContext& ctx = sl2_ctx();
    if (!(f.context() == ctx))
        throw ContextMismatchError("sl2_reduce expects a Matrix(2) polynomial");
    Polynomial out = Polynomial::zero(ctx);
    for (const auto& [m, coeff] : f.terms()) {
        int ea = m.exponent_of(var_a());
        int ed = m.exponent_of(var_d());
        int cut = std::min(ea, ed);
        if (cut == 0) {
            out.add_term(m, coeff);
            continue;
        }
        // a^i d^j = a^(i-cut) d^(j-cut) (1+bc)^cut, expanded binomially
        int eb = m.exponent_of(var_b());
        int ec = m.exponent_of(var_c());
        for (int r = 0; r <= cut; ++r)
            out.add_term(monomial_abcd(ea - cut, eb + r, ec + r, ed - cut),
                         Rational(coeff * binomial(cut, r)));
    }
    return out;
}

SL2Element sl2_ad_trace(const SL2Element& e) {
    static const BracketTable table = BracketTable::semiclassical(2);
    const VarContext& ctx = sl2_ctx();
    Polynomial trace = Polynomial::variable(ctx, var_a()) + Polynomial::variable(ctx, var_d());
    return SL2Element(bracket(table, trace, e.poly()));
}

std::vector<ExponentVector> sl2_basis_upto(int d) {
    std::vector<ExponentVector> out;
    for (int deg = 0; deg <= d; ++deg)
        for (const ExponentVector& m : graded_monomials(sl2_ctx(), deg))
            if (m.exponent_of(var_a()) == 0 || m.exponent_of(var_d()) == 0)
                out.push_back(m);
    return out;
}

Polynomial sl2_rhs_a_case(int i, int k, int l) {
    const int m = k + l;
    Polynomial p = Polynomial::zero(sl2_ctx());
    p.add_term(monomial_abcd(i + 1, k, l, 0), Rational(m));
    p.add_term(monomial_abcd(i - 1, k + 1, l + 1, 0), Rational(-(2 * i + m)));
    p.add_term(monomial_abcd(i - 1, k, l, 0), Rational(-m));
    return p;
}

Polynomial sl2_rhs_d_case(int k, int l, int j) {
    const int m = k + l;
    Polynomial p = Polynomial::zero(sl2_ctx());
    p.add_term(monomial_abcd(0, k, l, j + 1), Rational(-m));
    p.add_term(monomial_abcd(0, k + 1, l + 1, j - 1), Rational(m + 2 * j));
    p.add_term(monomial_abcd(0, k, l, j - 1), Rational(m));
    return p;
}

Polynomial sl2_rhs_flat_case(int k, int l) {
    const int m = k + l;
    Polynomial p = Polynomial::zero(sl2_ctx());
    p.add_term(monomial_abcd(1, k, l, 0), Rational(m));
    p.add_term(monomial_abcd(0, k, l, 1), Rational(-m));
    return p;
}

SL2CentralizerReport sl2_centralizer_dimension(int d) {
    SL2CentralizerReport report;
    report.degree = d;
    report.expected_dim = d + 1;

    std::vector<ExponentVector> source = sl2_basis_upto(d);
    report.basis_size = static_cast<long>(source.size());

    std::map<ExponentVector, int, GradedLexDescending> row_index;
    std::vector<Polynomial> images;
    images.reserve(source.size());
    for (const ExponentVector& m : source) {
        SL2Element e(Polynomial::monomial(sl2_ctx(), m));
        Polynomial im = sl2_ad_trace(e).poly();
        for (const auto& [mono, coeff] : im.terms())
            row_index.emplace(mono, 0);
        images.push_back(std::move(im));
    }
    int next = 0;
    for (auto& [mono, idx] : row_index)
        idx = next++;

    ZMatrix mat(next, static_cast<int>(source.size()));
    for (int col = 0; col < static_cast<int>(source.size()); ++col) {
        for (const auto& [mono, coeff] : images[static_cast<std::size_t>(col)].terms()) {
            if (!is_integer(coeff))
                throw std::logic_error("non-integer coefficient in the sl2 adjoint matrix");
            mat.at(row_index.at(mono), col) = coeff.get_num();
        }
    }
    report.nullspace_dim =
        static_cast<long>(source.size()) - bareiss_echelon(std::move(mat)).rank;
    report.pass = report.nullspace_dim == report.expected_dim;
    return report;
}

} // namespace poissonkit
