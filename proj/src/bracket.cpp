#include "poissonkit/bracket.hpp"

#include <vector>

namespace poissonkit {

const Polynomial* BracketTable::entry(int a, int b) const {
    auto it = entries_.find({a, b});
    return it == entries_.end() ? nullptr : &it->second;
}

void BracketTable::set(int a, int b, Polynomial value) {
    if (!value.is_zero())
        entries_.emplace(std::make_pair(a, b), std::move(value));
}

BracketTable BracketTable::semiclassical(int n) {
    VarContext ctx = VarContext::matrix(n);
    BracketTable t(ctx, "semiclassical");
    for (int a = 0; a < ctx.var_count(); ++a) {
        for (int b = a + 1; b < ctx.var_count(); ++b) {
            auto [i, j] = ctx.entry_of(a);
            auto [k, l] = ctx.entry_of(b);
            // a < b row-major means i < k, or i == k and j < l
            if (i < k && j < l) {
                t.set(a, b,
                      Polynomial::variable(ctx, ctx.var(i, l)) *
                          Polynomial::variable(ctx, ctx.var(k, j)) * Polynomial::constant(ctx, 2));
            } else if ((i == k && j < l) || (j == l && i < k)) {
                t.set(a, b, Polynomial::variable(ctx, a) * Polynomial::variable(ctx, b));
            }
        }
    }
    return t;
}

BracketTable BracketTable::kks(int n) {
    VarContext ctx = VarContext::matrix(n);
    BracketTable t(ctx, "kks");
    for (int a = 0; a < ctx.var_count(); ++a) {
        for (int b = a + 1; b < ctx.var_count(); ++b) {
            auto [i, j] = ctx.entry_of(a);
            auto [k, l] = ctx.entry_of(b);
            Polynomial value = Polynomial::zero(ctx);
            if (j == k)
                value += Polynomial::variable(ctx, ctx.var(i, l));
            if (l == i)
                value -= Polynomial::variable(ctx, ctx.var(k, j));
            t.set(a, b, value);
        }
    }
    return t;
}

BracketTable BracketTable::gr(int n) {
    if (n < 2)
        throw ContextMismatchError("gr table needs n >= 2");
    BracketTable t = semiclassical(n);
    t.name_ = "gr";
    const VarContext& ctx = t.ctx_;
    int corner = ctx.var(1, 1);
    for (int b = corner + 1; b < ctx.var_count(); ++b) {
        auto [k, l] = ctx.entry_of(b);
        t.entries_.erase({corner, b});
        if (k == 1 || l == 1)
            t.set(corner, b, Polynomial::variable(ctx, corner) * Polynomial::variable(ctx, b));
        // {x[1,1], x[k,l]}_gr = 0 for 2 <= k,l <= n
    }
    return t;
}

BracketTable BracketTable::semiclassical_with_central_t(int m) {
    VarContext ctx = VarContext::matrix_with_t(m);
    BracketTable inner = semiclassical(m);
    BracketTable t(ctx, "semiclassical+t");
    const VarContext mctx = VarContext::matrix(m);
    std::vector<std::optional<int>> identity;
    for (int v = 0; v < mctx.var_count(); ++v)
        identity.emplace_back(v); // matrix variables share indices in both contexts
    for (const auto& [pair, value] : inner.entries())
        t.set(pair.first, pair.second, value.apply_variable_map(ctx, identity));
    return t; // every pair involving t is absent, i.e. t is central
}

BracketTable BracketTable::zero(const VarContext& ctx, const std::string& name) {
    return BracketTable(ctx, name);
}

BracketTable BracketTable::by_name(const std::string& name, int n) {
    if (name == "semiclassical")
        return semiclassical(n);
    if (name == "kks")
        return kks(n);
    if (name == "gr")
        return gr(n);
    throw ContextMismatchError("unknown structure '" + name + "' (use semiclassical, kks or gr)");
}

Polynomial bracket(const BracketTable& table, const Polynomial& f, const Polynomial& g) {
    if (!(f.context() == table.context()) || !(g.context() == table.context()))
        throw ContextMismatchError("bracket operands do not match the table's roster");
    const int nvars = table.context().var_count();
    // Partials are reused across table entries.
    std::vector<Polynomial> df, dg;
    df.reserve(nvars), dg.reserve(nvars);
    for (int v = 0; v < nvars; ++v) {
        df.push_back(f.derivative(v));
        dg.push_back(g.derivative(v));
    }
    Polynomial r = Polynomial::zero(table.context());
    for (const auto& [pair, value] : table.entries()) {
        auto [a, b] = pair;
        if (!df[a].is_zero() && !dg[b].is_zero())
            r += value * df[a] * dg[b];
        if (!df[b].is_zero() && !dg[a].is_zero())
            r -= value * df[b] * dg[a];
    }
    return r;
}

Polynomial jacobi_defect(const BracketTable& table, const Polynomial& f, const Polynomial& g,
                         const Polynomial& h) {
    return bracket(table, f, bracket(table, g, h)) + bracket(table, g, bracket(table, h, f)) +
           bracket(table, h, bracket(table, f, g));
}

Polynomial phi(const Polynomial& f) {
    const VarContext& src = f.context();
    if (src.kind() != ContextKind::Matrix || src.n() < 2)
        throw ContextMismatchError("phi expects a Matrix(n) polynomial with n >= 2");
    const int n = src.n();
    VarContext dst = VarContext::matrix_with_t(n - 1);
    std::vector<std::optional<int>> image(static_cast<std::size_t>(src.var_count()));
    for (int v = 0; v < src.var_count(); ++v) {
        auto [i, j] = src.entry_of(v);
        if (i == 1 && j == 1)
            image[v] = dst.t_var();
        else if (i == 1 || j == 1)
            image[v] = std::nullopt; // the quotient ideal
        else
            image[v] = dst.var(i - 1, j - 1);
    }
    return f.apply_variable_map(dst, image);
}

Polynomial delta(const Polynomial& f) {
    const VarContext& src = f.context();
    if (src.kind() != ContextKind::MatrixWithT)
        throw ContextMismatchError("delta expects a MatrixWithT polynomial");
    const int m = src.n();
    VarContext dst = VarContext::diagonal(m + 1);
    std::vector<std::optional<int>> image(static_cast<std::size_t>(src.var_count()));
    for (int v = 0; v < src.var_count(); ++v) {
        if (v == src.t_var()) {
            image[v] = dst.t_i(1);
            continue;
        }
        auto [i, j] = src.entry_of(v);
        image[v] = (i == j) ? std::optional<int>(dst.t_i(i + 1)) : std::nullopt;
    }
    return f.apply_variable_map(dst, image);
}

Polynomial delta_phi(const Polynomial& f) {
    const VarContext& src = f.context();
    if (src.kind() != ContextKind::Matrix)
        throw ContextMismatchError("delta_phi expects a Matrix(n) polynomial");
    const int n = src.n();
    VarContext dst = VarContext::diagonal(n);
    std::vector<std::optional<int>> image(static_cast<std::size_t>(src.var_count()));
    for (int v = 0; v < src.var_count(); ++v) {
        auto [i, j] = src.entry_of(v);
        image[v] = (i == j) ? std::optional<int>(dst.t_i(i)) : std::nullopt;
    }
    return f.apply_variable_map(dst, image);
}

Polynomial offdiagonal_flip(const Polynomial& f) {
    const VarContext& src = f.context();
    if (src.kind() != ContextKind::Matrix)
        throw ContextMismatchError("offdiagonal_flip expects a Matrix(n) polynomial");
    const int n = src.n();
    std::vector<std::optional<int>> image(static_cast<std::size_t>(src.var_count()));
    for (int v = 0; v < src.var_count(); ++v) {
        auto [i, j] = src.entry_of(v);
        image[v] = src.var(n + 1 - i, n + 1 - j);
    }
    return f.apply_variable_map(src, image);
}

} // namespace poissonkit
