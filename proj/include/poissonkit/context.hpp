#pragma once

#include <string>
#include <utility>

#include "poissonkit/errors.hpp"

namespace poissonkit {

enum class ContextKind { Matrix, MatrixWithT, Diagonal };

/// Variable roster a polynomial lives over. Three shapes cover every algebra
/// in the toolkit:
///   Matrix(n)      x[1,1] .. x[n,n], row-major order
///   MatrixWithT(n) x[1,1] .. x[n,n] followed by a single central t
///   Diagonal(n)    t_1 .. t_n
/// Variable order is the listed order; it fixes the graded-lex monomial
/// order and the canonical printing order everywhere.
class VarContext {
public:
    static VarContext matrix(int n) { return VarContext(ContextKind::Matrix, n); }
    static VarContext matrix_with_t(int n) { return VarContext(ContextKind::MatrixWithT, n); }
    static VarContext diagonal(int n) { return VarContext(ContextKind::Diagonal, n); }

    ContextKind kind() const { return kind_; }
    int n() const { return n_; }

    int var_count() const {
        switch (kind_) {
        case ContextKind::Matrix: return n_ * n_;
        case ContextKind::MatrixWithT: return n_ * n_ + 1;
        case ContextKind::Diagonal: return n_;
        }
        return 0;
    }

    /// 1-based matrix entry (i,j) -> variable index.
    int var(int i, int j) const {
        require(kind_ != ContextKind::Diagonal && 1 <= i && i <= n_ && 1 <= j && j <= n_,
                "matrix entry out of range");
        return (i - 1) * n_ + (j - 1);
    }

    /// The trailing central variable of a MatrixWithT context.
    int t_var() const {
        require(kind_ == ContextKind::MatrixWithT, "context has no central t");
        return n_ * n_;
    }

    /// 1-based diagonal variable t_i.
    int t_i(int i) const {
        require(kind_ == ContextKind::Diagonal && 1 <= i && i <= n_, "t_i out of range");
        return i - 1;
    }

    bool is_matrix_entry(int v) const {
        return kind_ != ContextKind::Diagonal && v < n_ * n_;
    }

    /// Inverse of var(): variable index -> (i,j), 1-based.
    std::pair<int, int> entry_of(int v) const {
        require(is_matrix_entry(v), "not a matrix-entry variable");
        return {v / n_ + 1, v % n_ + 1};
    }

    std::string var_name(int v) const;

    bool operator==(const VarContext&) const = default;

private:
    VarContext(ContextKind kind, int n) : kind_(kind), n_(n) {
        require(n >= 1, "context size must be positive");
    }

    static void require(bool ok, const char* what) {
        if (!ok)
            throw ContextMismatchError(what);
    }

    ContextKind kind_;
    int n_;
};

inline std::string VarContext::var_name(int v) const {
    if (kind_ == ContextKind::Diagonal)
        return "t_" + std::to_string(v + 1);
    if (kind_ == ContextKind::MatrixWithT && v == n_ * n_)
        return "t";
    auto [i, j] = entry_of(v);
    return "x[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

} // namespace poissonkit
