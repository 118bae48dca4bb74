#include "poissonkit/leafrank.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "poissonkit/errors.hpp"
#include "poissonkit/linalg.hpp"

namespace poissonkit {

int inversions(const PermWord& w) {
    int count = 0;
    for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t b = a + 1; b < w.size(); ++b)
            if (w[a] > w[b])
                ++count;
    return count;
}

int min_transpositions(const PermWord& w) {
    const int n = static_cast<int>(w.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    int cycles = 0;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)])
            continue;
        ++cycles;
        int x = s;
        while (!seen[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = true;
            x = w[static_cast<std::size_t>(x)] - 1;
        }
    }
    return n - cycles;
}

PermWord compose(const PermWord& p, const PermWord& q) {
    PermWord r(p.size());
    for (std::size_t x = 0; x < p.size(); ++x)
        r[x] = p[static_cast<std::size_t>(q[x] - 1)];
    return r;
}

PermWord inverse(const PermWord& p) {
    PermWord r(p.size());
    for (std::size_t x = 0; x < p.size(); ++x)
        r[static_cast<std::size_t>(p[x] - 1)] = static_cast<int>(x) + 1;
    return r;
}

int leaf_dimension(const PermWord& w_plus, const PermWord& w_minus) {
    if (w_plus.size() != w_minus.size())
        throw ContextMismatchError("leaf_dimension needs permutations of the same set");
    return inversions(w_plus) + inversions(w_minus) +
           min_transpositions(compose(w_plus, inverse(w_minus)));
}

WeylReport max_leaf_dimension(int n, int cap) {
    if (n > cap)
        throw ResourceLimitError("Weyl enumeration capped at n = " + std::to_string(cap));
    WeylReport report;
    report.n = n;
    report.expected = n * (n - 1);

    PermWord longest(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        longest[static_cast<std::size_t>(i)] = n - i;

    std::vector<PermWord> all;
    PermWord p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    do {
        all.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    report.bound_holds = true;
    for (const PermWord& wp : all) {
        for (const PermWord& wm : all) {
            int dim = leaf_dimension(wp, wm);
            int bound = inversions(wp) + inversions(wm) + inversions(compose(wp, inverse(wm)));
            report.max_dimension = std::max(report.max_dimension, dim);
            report.bound_max = std::max(report.bound_max, bound);
            if (dim > bound)
                report.bound_holds = false;
        }
    }
    report.attained_at_longest = leaf_dimension(longest, longest) == report.max_dimension;
    report.pass = report.max_dimension == report.expected && report.attained_at_longest &&
                  report.bound_holds && report.bound_max == report.expected;
    return report;
}

std::vector<std::vector<Polynomial>> bracket_matrix(const BracketTable& table) {
    const VarContext& ctx = table.context();
    const int nvars = ctx.var_count();
    std::vector<std::vector<Polynomial>> m(static_cast<std::size_t>(nvars),
                                           std::vector<Polynomial>(static_cast<std::size_t>(nvars),
                                                                   Polynomial::zero(ctx)));
    for (const auto& [pair, value] : table.entries()) {
        auto [a, b] = pair;
        m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = value;
        m[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = -value;
    }
    return m;
}

std::string space_name(SpaceTag s) {
    switch (s) {
    case SpaceTag::M: return "m";
    case SpaceTag::GL: return "gl";
    case SpaceTag::SL: return "sl";
    }
    return "?";
}

SpaceTag space_from_name(const std::string& name) {
    if (name == "m")
        return SpaceTag::M;
    if (name == "gl")
        return SpaceTag::GL;
    if (name == "sl")
        return SpaceTag::SL;
    throw ContextMismatchError("unknown space '" + name + "' (use m, gl or sl)");
}

namespace {

// Deterministic across platforms: raw mt19937_64 output reduced by modulus.
struct SeededRng {
    std::mt19937_64 gen;
    explicit SeededRng(std::uint64_t seed) : gen(seed) {}
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

Rational det_laplace(const std::vector<std::vector<Rational>>& a) {
    const std::size_t n = a.size();
    if (n == 1)
        return a[0][0];
    Rational det;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[0][k] == 0)
            continue;
        std::vector<std::vector<Rational>> sub(n - 1, std::vector<Rational>(n - 1));
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == k)
                    continue;
                sub[i - 1][cc++] = a[i][j];
            }
        }
        Rational term = a[0][k] * det_laplace(sub);
        det += (k % 2 == 0) ? term : Rational(-term);
    }
    return det;
}

// Point of the requested space, as values of the n^2 coordinate functions.
std::vector<Rational> sample_point(int n, SpaceTag space, SeededRng& rng) {
    auto matrix_point = [&](bool nonsingular) {
        while (true) {
            std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n),
                                                 std::vector<Rational>(static_cast<std::size_t>(n)));
            for (auto& row : a)
                for (Rational& q : row)
                    q = Rational(rng.uniform(-5, 5));
            if (nonsingular && det_laplace(a) == 0)
                continue;
            std::vector<Rational> flat;
            for (const auto& row : a)
                for (const Rational& q : row)
                    flat.push_back(q);
            return flat;
        }
    };
    if (space == SpaceTag::M)
        return matrix_point(false);
    if (space == SpaceTag::GL)
        return matrix_point(true);

    // SL: L * D * U with unipotent triangular factors and det(D) = 1.
    auto small_rational = [&](bool nonzero) {
        while (true) {
            Rational q(rng.uniform(-5, 5), rng.uniform(1, 3));
            q.canonicalize();
            if (!nonzero || q != 0)
                return q;
        }
    };
    std::vector<std::vector<Rational>> L(static_cast<std::size_t>(n),
                                         std::vector<Rational>(static_cast<std::size_t>(n)));
    std::vector<std::vector<Rational>> U = L, D = L;
    Rational dprod(1);
    for (int i = 0; i < n; ++i) {
        L[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        U[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        for (int j = 0; j < i; ++j)
            L[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = small_rational(false);
        for (int j = i + 1; j < n; ++j)
            U[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = small_rational(false);
        if (i < n - 1) {
            Rational di = small_rational(true);
            D[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = di;
            dprod *= di;
        }
    }
    D[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)] = 1 / dprod;

    auto mul = [n](const auto& A, const auto& B) {
        std::vector<std::vector<Rational>> C(static_cast<std::size_t>(n),
                                             std::vector<Rational>(static_cast<std::size_t>(n)));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                for (int j = 0; j < n; ++j)
                    C[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                        A[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                        B[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        return C;
    };
    auto prod = mul(mul(L, D), U);
    std::vector<Rational> flat;
    for (const auto& row : prod)
        for (const Rational& q : row)
            flat.push_back(q);
    return flat;
}

} // namespace

RankReport sampled_rank(int n, SpaceTag space, const BracketTable& table, int samples,
                        std::uint64_t seed) {
    RankReport report;
    report.space = space;
    report.n = n;
    report.samples = samples;
    report.seed = seed;
    report.expected_rank = n * (n - 1);
    report.literature_rank = space == SpaceTag::SL ? n * (n - 1) : n * (n - 1) + 1;
    report.parity_discrepancy = space != SpaceTag::SL;

    auto poly_matrix = bracket_matrix(table);
    const int nvars = table.context().var_count();
    SeededRng rng(seed);
    report.samples = 0;
    for (int s = 0; s < samples; ++s) {
        std::vector<Rational> point = sample_point(n, space, rng);
        std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(nvars),
                                                std::vector<Rational>(static_cast<std::size_t>(nvars)));
        for (int i = 0; i < nvars; ++i)
            for (int j = 0; j < nvars; ++j)
                rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    poly_matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].eval(point);
        int rank = exact_rank(clear_denominators(rows, nvars));
        report.max_rank = std::max(report.max_rank, rank);
        ++report.samples;
        if (report.max_rank >= report.expected_rank)
            break; // lower-bound search already reached the target
    }
    report.pass = report.max_rank == report.expected_rank;
    return report;
}

IntegrabilityReport integrability_gap(int n, SpaceTag space) {
    IntegrabilityReport report;
    report.space = space;
    report.n = n;
    report.space_dim = space == SpaceTag::SL ? static_cast<long>(n) * n - 1
                                             : static_cast<long>(n) * n;
    report.rank = space == SpaceTag::SL ? n * (n - 1) : n * (n - 1) + 1;
    report.required_dim = Rational(report.space_dim) - Rational(report.rank, 2);
    report.required_dim.canonicalize();
    report.actual_dim = space == SpaceTag::SL ? n - 1 : n;
    report.integrable = Rational(report.actual_dim) == report.required_dim;
    return report;
}

} // namespace poissonkit
