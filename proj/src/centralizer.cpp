#include "poissonkit/centralizer.hpp"

#include <map>
#include <stdexcept>

#include "poissonkit/errors.hpp"
#include "poissonkit/invariants.hpp"

namespace poissonkit {

namespace {

// Matrix entries are always integral (derivative exponents times table
// coefficients); anything else is a bug upstream, not a rounding candidate.
const Integer& integral_num(const Rational& q) {
    if (!is_integer(q))
        throw std::logic_error("non-integer coefficient in an exact integer matrix");
    return q.get_num();
}

} // namespace

std::vector<ExponentVector> graded_monomials(const VarContext& ctx, int d) {
    const int nvars = ctx.var_count();
    std::vector<ExponentVector> out;
    if (d < 0)
        return out;
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    e[0] = d;
    while (true) {
        ExponentVector m;
        for (int v = 0; v < nvars; ++v)
            if (e[static_cast<std::size_t>(v)] > 0)
                m = m.times(ExponentVector::variable(v, e[static_cast<std::size_t>(v)]));
        out.push_back(m);
        // next composition in descending lex order
        int last = e[static_cast<std::size_t>(nvars - 1)];
        int p = -1;
        for (int v = nvars - 2; v >= 0; --v) {
            if (e[static_cast<std::size_t>(v)] > 0) {
                p = v;
                break;
            }
        }
        if (p < 0)
            break;
        --e[static_cast<std::size_t>(p)];
        for (int v = p + 1; v < nvars; ++v)
            e[static_cast<std::size_t>(v)] = 0;
        e[static_cast<std::size_t>(p + 1)] = last + 1;
    }
    return out;
}

long expected_dimension(int n, int d) {
    if (d < 0)
        return 0;
    std::vector<long> ways(static_cast<std::size_t>(d + 1), 0);
    ways[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int s = part; s <= d; ++s)
            ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - part)];
    return ways[static_cast<std::size_t>(d)];
}

int gr_weight(const VarContext& ctx, const ExponentVector& m) {
    int w = 0;
    for (const auto& [v, e] : m.entries()) {
        if (!ctx.is_matrix_entry(v))
            continue;
        auto [i, j] = ctx.entry_of(v);
        if ((i == 1) != (j == 1)) // first row or first column, not the corner
            w += e;
    }
    return w;
}

namespace {

// Per-index row-degree minus column-degree of a monomial. Conserved by
// m -> {c_1, m} because every table entry preserves the row and column
// multiset of its pair and c_1 is diagonal.
std::vector<int> difference_weight(const VarContext& ctx, const ExponentVector& m) {
    std::vector<int> w(static_cast<std::size_t>(ctx.n()), 0);
    for (const auto& [v, e] : m.entries()) {
        auto [i, j] = ctx.entry_of(v);
        w[static_cast<std::size_t>(i - 1)] += e;
        w[static_cast<std::size_t>(j - 1)] -= e;
    }
    return w;
}

// {c_1, m} for a single monomial, using the cached fact that the partials
// of c_1 are 1 at diagonal variables and 0 elsewhere.
Polynomial ad_c1_monomial(const BracketTable& table, const ExponentVector& m) {
    const VarContext& ctx = table.context();
    Polynomial r = Polynomial::zero(ctx);
    for (const auto& [pair, value] : table.entries()) {
        auto [a, b] = pair;
        auto [ai, aj] = ctx.entry_of(a);
        if (ai == aj) {
            int e = m.exponent_of(b);
            if (e != 0)
                r += value * Polynomial::monomial(ctx, *m.divided_by_var(b), Rational(e));
        }
        auto [bi, bj] = ctx.entry_of(b);
        if (bi == bj) {
            int e = m.exponent_of(a);
            if (e != 0)
                r -= value * Polynomial::monomial(ctx, *m.divided_by_var(a), Rational(e));
        }
    }
    return r;
}

} // namespace

CentralizerReport centralizer_dimension(int n, int d, const BracketTable& table,
                                        const CentralizerOptions& opts) {
    const VarContext& ctx = table.context();
    if (ctx.kind() != ContextKind::Matrix || ctx.n() != n)
        throw ContextMismatchError("centralizer_dimension needs a Matrix(n) table");

    CentralizerReport report;
    report.n = n;
    report.degree = d;
    report.expected_dim = expected_dimension(n, d);

    std::vector<ExponentVector> source = graded_monomials(ctx, d);
    std::vector<ExponentVector> target = graded_monomials(ctx, d + 1);
    report.ambient_dim = static_cast<long>(source.size());
    report.target_dim = static_cast<long>(target.size());

    long largest = std::max(report.ambient_dim, report.target_dim);
    if (largest > opts.ambient_cap && !opts.force)
        throw ResourceLimitError("monomial space of dimension " + std::to_string(largest) +
                                 " exceeds the cap " + std::to_string(opts.ambient_cap) +
                                 " (use force to override)");

    // Group source columns by conserved weight; keep global enumeration order
    // inside each block.
    std::map<std::vector<int>, std::vector<int>> blocks;
    for (int col = 0; col < static_cast<int>(source.size()); ++col)
        blocks[difference_weight(ctx, source[static_cast<std::size_t>(col)])].push_back(col);

    report.nullspace_dim = 0;
    for (const auto& [weight, cols] : blocks) {
        // compute all bracket columns of this block first
        std::vector<Polynomial> images;
        images.reserve(cols.size());
        std::map<ExponentVector, int, GradedLexDescending> row_index;
        for (int col : cols) {
            Polynomial im = ad_c1_monomial(table, source[static_cast<std::size_t>(col)]);
            for (const auto& [mono, coeff] : im.terms()) {
                if (difference_weight(ctx, mono) != weight)
                    throw std::logic_error("bracket output left its weight block; "
                                           "the table violates the conservation law");
                row_index.emplace(mono, 0);
            }
            images.push_back(std::move(im));
        }
        int next = 0;
        for (auto& [mono, idx] : row_index)
            idx = next++;

        ZMatrix mat(next, static_cast<int>(cols.size()));
        for (int local = 0; local < static_cast<int>(cols.size()); ++local) {
            for (const auto& [mono, coeff] : images[static_cast<std::size_t>(local)].terms()) {
                mat.at(row_index.at(mono), local) = integral_num(coeff);
            }
        }

        std::vector<std::vector<Integer>> null = nullspace_primitive(mat);
        report.nullspace_dim += static_cast<long>(null.size());
        if (opts.with_basis) {
            for (const auto& vec : null) {
                Polynomial p = Polynomial::zero(ctx);
                for (int local = 0; local < static_cast<int>(cols.size()); ++local) {
                    const Integer& z = vec[static_cast<std::size_t>(local)];
                    if (z != 0)
                        p.add_term(source[static_cast<std::size_t>(cols[static_cast<std::size_t>(local)])],
                                   Rational(z));
                }
                report.basis.push_back(std::move(p));
            }
        }
    }

    report.dims_match = report.nullspace_dim == report.expected_dim;
    report.span_ok = c_monomial_span_check(n, d);
    report.pass = report.dims_match && report.span_ok;
    return report;
}

SpanCheckDetail c_monomial_span_detail(int n, int d) {
    SpanCheckDetail detail;
    VarContext ctx = VarContext::matrix(n);
    BracketTable table = BracketTable::semiclassical(n);

    std::vector<Polynomial> c;
    for (int i = 1; i <= n; ++i)
        c.push_back(char_coeff(n, i));

    // every (a_1..a_n) with sum i*a_i = d
    std::vector<Polynomial> candidates;
    std::vector<int> exps(static_cast<std::size_t>(n + 1), 0);
    auto recurse = [&](auto&& self, int i, int remaining) -> void {
        if (i > n) {
            if (remaining != 0)
                return;
            Polynomial p = Polynomial::constant(ctx, Rational(1));
            for (int k = 1; k <= n; ++k)
                p *= c[static_cast<std::size_t>(k - 1)].pow(
                    static_cast<unsigned>(exps[static_cast<std::size_t>(k)]));
            candidates.push_back(std::move(p));
            return;
        }
        for (int a = 0; a * i <= remaining; ++a) {
            exps[static_cast<std::size_t>(i)] = a;
            self(self, i + 1, remaining - a * i);
        }
        exps[static_cast<std::size_t>(i)] = 0;
    };
    recurse(recurse, 1, d);

    detail.candidate_count = static_cast<long>(candidates.size());
    detail.count_matches = detail.candidate_count == expected_dimension(n, d);

    detail.all_centralize = true;
    Polynomial c1 = c[0];
    for (const Polynomial& p : candidates)
        detail.all_centralize = detail.all_centralize && bracket(table, c1, p).is_zero();

    // independence over the degree-d monomial space
    std::map<ExponentVector, int, GradedLexDescending> col_index;
    for (const Polynomial& p : candidates)
        for (const auto& [mono, coeff] : p.terms())
            col_index.emplace(mono, 0);
    int next = 0;
    for (auto& [mono, idx] : col_index)
        idx = next++;
    ZMatrix mat(static_cast<int>(candidates.size()), next);
    for (int r = 0; r < static_cast<int>(candidates.size()); ++r)
        for (const auto& [mono, coeff] : candidates[static_cast<std::size_t>(r)].terms())
            mat.at(r, col_index.at(mono)) = coeff.get_num();
    detail.independent = exact_rank(std::move(mat)) == static_cast<int>(candidates.size());

    detail.ok = detail.independent && detail.all_centralize && detail.count_matches;
    return detail;
}

bool c_monomial_span_check(int n, int d) { return c_monomial_span_detail(n, d).ok; }

bool gr_containment_check(const std::vector<Polynomial>& basis) {
    if (basis.empty())
        return true;
    const VarContext& ctx = basis.front().context();
    BracketTable grt = BracketTable::gr(ctx.n());
    const int corner_var = ctx.var(1, 1);
    Polynomial corner = Polynomial::variable(ctx, corner_var);
    for (const Polynomial& p : basis) {
        // symbol of p in the corner filtration: top x[1,1]-degree part
        int top = p.degree_in(corner_var);
        Polynomial symbol = Polynomial::zero(ctx);
        for (const auto& [m, c] : p.terms())
            if (m.exponent_of(corner_var) == top)
                symbol.add_term(m, c);
        if (!bracket(grt, corner, symbol).is_zero())
            return false;
    }
    return true;
}

bool delta_phi_full_rank(const std::vector<Polynomial>& basis) {
    if (basis.empty())
        return true;
    std::vector<Polynomial> images;
    images.reserve(basis.size());
    for (const Polynomial& p : basis)
        images.push_back(delta_phi(p));
    std::map<ExponentVector, int, GradedLexDescending> col_index;
    for (const Polynomial& p : images)
        for (const auto& [mono, coeff] : p.terms())
            col_index.emplace(mono, 0);
    int next = 0;
    for (auto& [mono, idx] : col_index)
        idx = next++;
    ZMatrix mat(static_cast<int>(images.size()), next);
    for (int r = 0; r < static_cast<int>(images.size()); ++r) {
        for (const auto& [mono, coeff] : images[static_cast<std::size_t>(r)].terms()) {
            mat.at(r, col_index.at(mono)) = integral_num(coeff);
        }
    }
    return exact_rank(std::move(mat)) == static_cast<int>(images.size());
}

} // namespace poissonkit
