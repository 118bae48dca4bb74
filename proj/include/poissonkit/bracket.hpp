#pragma once

#include <map>
#include <string>
#include <utility>

#include "poissonkit/polynomial.hpp"

namespace poissonkit {

/// A Poisson structure on a polynomial context, given by its values on
/// ordered generator pairs (a < b in variable order); the bracket of
/// arbitrary polynomials is recovered through bilinearity and Leibniz.
/// Only nonzero entries are stored; the sign for a > b comes from
/// antisymmetry.
class BracketTable {
public:
    const VarContext& context() const { return ctx_; }
    const std::string& name() const { return name_; }
    int n() const { return ctx_.n(); }

    /// Entry for a < b; nullptr when the pair brackets to zero.
    const Polynomial* entry(int a, int b) const;

    const std::map<std::pair<int, int>, Polynomial>& entries() const { return entries_; }

    /// Quadratic structure on x[i,j]:
    ///   {x[i,j], x[k,l]} = 2 x[i,l] x[k,j]   if i<k and j<l
    ///                    = x[i,j] x[k,l]     if same row or same column
    ///                    = 0                 otherwise
    static BracketTable semiclassical(int n);

    /// Linear structure from the matrix-unit commutators of gl_n:
    ///   {x[i,j], x[k,l]} = d_{jk} x[i,l] - d_{li} x[k,j]
    static BracketTable kks(int n);

    /// Same as semiclassical away from x[1,1]; the x[1,1] row becomes
    ///   {x[1,1], x[1,j]} = x[1,1] x[1,j],  {x[1,1], x[i,1]} = x[1,1] x[i,1],
    ///   {x[1,1], x[i,j]} = 0 for 2<=i,j<=n.
    static BracketTable gr(int n);

    /// Semiclassical structure of size m on a MatrixWithT(m) context with
    /// the trailing t central (the bracket carried by the first-row/column
    /// quotient of a size m+1 matrix algebra).
    static BracketTable semiclassical_with_central_t(int m);

    /// The zero bracket on any context.
    static BracketTable zero(const VarContext& ctx, const std::string& name = "zero");

    /// Lookup by the structure names accepted on the command line:
    /// "semiclassical", "kks", "gr".
    static BracketTable by_name(const std::string& name, int n);

private:
    BracketTable(const VarContext& ctx, std::string name) : ctx_(ctx), name_(std::move(name)) {}

    void set(int a, int b, Polynomial value);

    VarContext ctx_;
    std::string name_;
    std::map<std::pair<int, int>, Polynomial> entries_;
};

/// {f, g} = sum_{a<b} table(a,b) (df/dx_a dg/dx_b - df/dx_b dg/dx_a).
Polynomial bracket(const BracketTable& table, const Polynomial& f, const Polynomial& g);

/// {f,{g,h}} + {g,{h,f}} + {h,{f,g}}; identically zero for a valid table.
Polynomial jacobi_defect(const BracketTable& table, const Polynomial& f, const Polynomial& g,
                         const Polynomial& h);

/// Quotient by the ideal (x[1,j], x[i,1] : 2<=i,j<=n) followed by the
/// relabeling x[i,j] -> x[i-1,j-1], x[1,1] -> t. Maps Matrix(n) to
/// MatrixWithT(n-1); a Poisson map onto semiclassical_with_central_t(n-1).
Polynomial phi(const Polynomial& f);

/// Diagonal evaluation MatrixWithT(m) -> Diagonal(m+1): t -> t_1,
/// x[k,k] -> t_{k+1}, off-diagonal variables -> 0.
Polynomial delta(const Polynomial& f);

/// The composite Matrix(n) -> Diagonal(n): x[i,i] -> t_i, off-diagonal -> 0.
Polynomial delta_phi(const Polynomial& f);

/// Reflection across the anti-diagonal, x[i,j] -> x[n+1-i,n+1-j];
/// an algebra automorphism and a Poisson antimap for the semiclassical
/// bracket.
Polynomial offdiagonal_flip(const Polynomial& f);

} // namespace poissonkit
