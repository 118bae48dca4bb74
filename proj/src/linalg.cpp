#include "poissonkit/linalg.hpp"

#include <cstdlib>
#include <string>

#include "poissonkit/errors.hpp"

namespace poissonkit {

void ZMatrix::swap_rows(int i, int j) {
    if (i == j)
        return;
    for (int c = 0; c < cols_; ++c)
        std::swap(at(i, c), at(j, c));
}

namespace {

void check_memory_cap(int rows, int cols) {
    const char* env = std::getenv("POISSON_KIT_CAP_MB");
    if (!env)
        return;
    long cap_mb = std::atol(env);
    if (cap_mb <= 0)
        return;
    // Coarse estimate: limb storage dominates; 48 bytes per entry headroom.
    long long bytes = static_cast<long long>(rows) * cols * 48;
    if (bytes > cap_mb * 1024LL * 1024LL)
        throw ResourceLimitError("elimination on a " + std::to_string(rows) + "x" +
                                 std::to_string(cols) + " matrix exceeds POISSON_KIT_CAP_MB=" +
                                 std::to_string(cap_mb));
}

} // namespace

EchelonForm bareiss_echelon(ZMatrix m) {
    check_memory_cap(m.rows(), m.cols());
    EchelonForm ech{std::move(m), {}, 0};
    ZMatrix& a = ech.m;
    Integer prev(1);
    int r = 0;
    for (int col = 0; col < a.cols() && r < a.rows(); ++col) {
        int pivot = -1;
        for (int i = r; i < a.rows(); ++i) {
            if (a.at(i, col) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0)
            continue;
        a.swap_rows(r, pivot);
        for (int i = r + 1; i < a.rows(); ++i) {
            if (a.at(i, col) == 0) {
                // still must rescale the row to keep the Bareiss invariant
                for (int j = col + 1; j < a.cols(); ++j) {
                    if (a.at(i, j) == 0)
                        continue;
                    Integer num = a.at(r, col) * a.at(i, j);
                    mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                }
                continue;
            }
            for (int j = col + 1; j < a.cols(); ++j) {
                Integer num = a.at(r, col) * a.at(i, j) - a.at(i, col) * a.at(r, j);
                if (num == 0) {
                    a.at(i, j) = 0;
                } else {
                    mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                }
            }
            a.at(i, col) = 0;
        }
        prev = a.at(r, col);
        ech.pivot_cols.push_back(col);
        ++r;
    }
    ech.rank = r;
    return ech;
}

int exact_rank(ZMatrix m) { return bareiss_echelon(std::move(m)).rank; }

std::vector<std::vector<Integer>> nullspace_primitive(const ZMatrix& m) {
    EchelonForm ech = bareiss_echelon(m);
    const ZMatrix& e = ech.m;
    const int cols = e.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int p : ech.pivot_cols)
        is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<std::vector<Integer>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)])
            continue;
        std::vector<Rational> x(static_cast<std::size_t>(cols));
        x[static_cast<std::size_t>(f)] = 1;
        // back-substitute pivot coordinates; columns beyond f stay zero
        for (int k = ech.rank - 1; k >= 0; --k) {
            int p = ech.pivot_cols[static_cast<std::size_t>(k)];
            if (p > f)
                continue;
            Rational s;
            for (int j = p + 1; j <= f; ++j) {
                if (x[static_cast<std::size_t>(j)] != 0 && e.at(k, j) != 0)
                    s += Rational(e.at(k, j)) * x[static_cast<std::size_t>(j)];
            }
            x[static_cast<std::size_t>(p)] = -s / Rational(e.at(k, p));
        }
        // scale to a primitive integer vector
        Integer lcm(1);
        for (const Rational& q : x)
            if (q != 0)
                mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        std::vector<Integer> v(static_cast<std::size_t>(cols));
        Integer content(0);
        for (int j = 0; j < cols; ++j) {
            Rational scaled = x[static_cast<std::size_t>(j)] * Rational(lcm);
            v[static_cast<std::size_t>(j)] = scaled.get_num();
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(),
                    v[static_cast<std::size_t>(j)].get_mpz_t());
        }
        if (content > 1)
            for (Integer& z : v)
                mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), content.get_mpz_t());
        basis.push_back(std::move(v));
    }
    return basis;
}

ZMatrix clear_denominators(const std::vector<std::vector<Rational>>& rows, int cols) {
    ZMatrix m(static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.rows(); ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        Integer lcm(1);
        for (const Rational& q : row)
            if (q != 0)
                mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        for (int j = 0; j < cols; ++j) {
            Rational scaled = row[static_cast<std::size_t>(j)] * Rational(lcm);
            m.at(i, j) = scaled.get_num();
        }
    }
    return m;
}

} // namespace poissonkit
