#include "poissonkit/invariants.hpp"

#include <algorithm>
#include <numeric>

namespace poissonkit {

namespace {

int permutation_inversions(const std::vector<int>& p) {
    int count = 0;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b)
            if (p[a] > p[b])
                ++count;
    return count;
}

void validate_index_set(const IndexSet& s, int n, const char* what) {
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] < 1 || s[k] > n)
            throw ContextMismatchError(std::string(what) + " index out of range");
        if (k > 0 && s[k] <= s[k - 1])
            throw ContextMismatchError(std::string(what) + " indices must be strictly increasing");
    }
}

// All size-k subsets of {1..n} in lexicographic order.
std::vector<IndexSet> subsets(int n, int k) {
    std::vector<IndexSet> out;
    IndexSet cur(static_cast<std::size_t>(k));
    std::iota(cur.begin(), cur.end(), 1);
    while (true) {
        out.push_back(cur);
        int pos = k - 1;
        while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == n - (k - 1 - pos))
            --pos;
        if (pos < 0)
            break;
        ++cur[static_cast<std::size_t>(pos)];
        for (int q = pos + 1; q < k; ++q)
            cur[static_cast<std::size_t>(q)] = cur[static_cast<std::size_t>(q - 1)] + 1;
    }
    return out;
}

} // namespace

Polynomial minor_det(const IndexSet& rows, const IndexSet& cols, int n) {
    if (rows.size() != cols.size())
        throw ContextMismatchError("minor needs |I| = |J|");
    validate_index_set(rows, n, "row");
    validate_index_set(cols, n, "column");
    VarContext ctx = VarContext::matrix(n);
    const int k = static_cast<int>(rows.size());
    Polynomial result = Polynomial::zero(ctx);
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        ExponentVector m;
        for (int a = 0; a < k; ++a)
            m = m.times(ExponentVector::variable(
                ctx.var(rows[static_cast<std::size_t>(a)], cols[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])])));
        int sign = permutation_inversions(perm) % 2 == 0 ? 1 : -1;
        result.add_term(m, Rational(sign));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

Polynomial char_coeff(int n, int i) {
    if (i < 1 || i > n)
        throw ContextMismatchError("char_coeff index out of range");
    Polynomial sum = Polynomial::zero(VarContext::matrix(n));
    for (const IndexSet& I : subsets(n, i))
        sum += minor_det(I, I, n);
    return sum;
}

Polynomial char_coeff_via_charpoly(int n, int i) {
    if (i < 1 || i > n)
        throw ContextMismatchError("char_coeff index out of range");
    VarContext ext = VarContext::matrix_with_t(n);
    const Polynomial lambda = Polynomial::variable(ext, ext.t_var());
    // det(A - t*Id) by the Leibniz formula over the extended roster.
    Polynomial det = Polynomial::zero(ext);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        Polynomial prod = Polynomial::constant(ext, Rational(1));
        for (int r = 1; r <= n; ++r) {
            int c = perm[static_cast<std::size_t>(r - 1)];
            Polynomial entry = Polynomial::variable(ext, ext.var(r, c));
            if (r == c)
                entry -= lambda;
            prod *= entry;
        }
        int sign = permutation_inversions(perm) % 2 == 0 ? 1 : -1;
        det += prod.scaled(Rational(sign));
    } while (std::next_permutation(perm.begin(), perm.end()));
    // det(A - t*Id) = (-1)^n det(t*Id - A) = sum_i (-1)^(n+i) c_i t^(n-i),
    // the sign convention under which c_1 is the trace and c_n the determinant
    Polynomial coeff = det.coefficient_in_var(ext.t_var(), n - i);
    VarContext dst = VarContext::matrix(n);
    std::vector<std::optional<int>> identity;
    for (int v = 0; v < dst.var_count(); ++v)
        identity.emplace_back(v);
    return coeff.apply_variable_map(dst, identity).scaled(Rational((n + i) % 2 == 0 ? 1 : -1));
}

Polynomial elementary_symmetric(int n, int i) {
    if (i < 1 || i > n)
        throw ContextMismatchError("elementary symmetric index out of range");
    VarContext ctx = VarContext::diagonal(n);
    Polynomial sum = Polynomial::zero(ctx);
    for (const IndexSet& I : subsets(n, i)) {
        ExponentVector m;
        for (int t : I)
            m = m.times(ExponentVector::variable(ctx.t_i(t)));
        sum.add_term(m, Rational(1));
    }
    return sum;
}

InvolutivityReport involutivity_check(int n, const BracketTable& table) {
    InvolutivityReport report{n, table.name(), {}, true};
    std::vector<Polynomial> c;
    for (int i = 1; i <= n; ++i)
        c.push_back(char_coeff(n, i));
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            Polynomial b = bracket(table, c[static_cast<std::size_t>(i - 1)], c[static_cast<std::size_t>(j - 1)]);
            bool zero = b.is_zero();
            report.pairs.push_back({i, j, zero, b.to_string()});
            report.pass = report.pass && zero;
        }
    }
    return report;
}

} // namespace poissonkit
