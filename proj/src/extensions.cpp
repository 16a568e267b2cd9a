#include "bolkit/extensions.hpp"

#include <stdexcept>

namespace bolkit {

Cocycle23 Cocycle23::zero(std::size_t n)
{
    return {Tensor3(n, n, n), Tensor4(n, n, n, n)};
}

CheckReport validate_cocycle_shape(const Cocycle23& c)
{
    const std::size_t n = c.nu.dim0();
    if (c.nu.dim1() != n || c.nu.dim2() != n || c.omega.dim0() != n ||
        c.omega.dim1() != n || c.omega.dim2() != n || c.omega.dim3() != n)
        throw std::invalid_argument("cocycle tensor shapes disagree");

    CheckReport rep;
    rep.begin_identity("nu-antisym");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                rep.record("nu-antisym", {i, j, k}, {c.nu.at(i, j, k)}, {-c.nu.at(j, i, k)});

    rep.begin_identity("omega-antisym-12");
    rep.begin_identity("omega-cyclic");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    rep.record("omega-antisym-12", {i, j, k, l}, {c.omega.at(i, j, k, l)},
                               {-c.omega.at(j, i, k, l)});
                    rep.record("omega-cyclic", {i, j, k, l},
                               {c.omega.at(i, j, k, l) + c.omega.at(j, k, i, l) +
                                c.omega.at(k, i, j, l)},
                               {Rational(0)});
                }
    return rep;
}

TStarExtension tstar_extend(const BolAlgebra& a, const SymForm& b, const Cocycle23& c,
                            BtildeVariant variant, bool run_check)
{
    QuadraticVerdict q = check_quadratic(a, b);
    if (!q.pass)
        throw std::invalid_argument("tstar_extend: (A,b) is not quadratic: " + q.reason);
    if (c.dim() != a.dim)
        throw std::invalid_argument("tstar_extend: cocycle dimension mismatch");
    if (!validate_cocycle_shape(c).pass())
        throw std::invalid_argument("tstar_extend: cocycle fails the shape conditions");

    const std::size_t n = a.dim;
    TStarExtension ext;
    ext.base_dim = n;
    ext.variant = variant;
    ext.algebra = BolAlgebra::zero(2 * n);
    Tensor3& bt = ext.algebra.binary;
    Tensor4& ct = ext.algebra.ternary;

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                // e_i * e_j = x*y + nu(x,y)
                bt.at(i, j, k) = a.binary.at(i, j, k);
                bt.at(i, j, n + k) = c.nu.at(i, j, k);
                // e_i * f_j = -f_j l(e_i);  f_i * e_j = f_i l(e_j)
                bt.at(i, n + j, n + k) = -a.binary.at(i, k, j);
                bt.at(n + i, j, n + k) = a.binary.at(j, k, i);

                for (std::size_t l = 0; l < n; ++l) {
                    ct.at(i, j, k, l) = a.ternary.at(i, j, k, l);
                    ct.at(i, j, k, n + l) = c.omega.at(i, j, k, l);
                    // [[f_i, e_j, e_k]] = f_i R(e_k, e_j)
                    ct.at(n + i, j, k, n + l) = a.ternary.at(l, k, j, i);
                    // [[e_j, f_i, e_k]] = -f_i R(e_k, e_j)
                    ct.at(j, n + i, k, n + l) = -a.ternary.at(l, k, j, i);
                    // [[e_j, e_k, f_i]] = f_i L(e_k, e_j)
                    ct.at(j, k, n + i, n + l) = a.ternary.at(k, j, l, i);
                }
            }

    Matrix g(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        g.at(i, n + i) = 1;
        g.at(n + i, i) = 1;
    }
    if (variant == BtildeVariant::Paper)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                g.at(i, j) = b.gram.at(i, j);
    ext.btilde = SymForm{std::move(g)};

    if (run_check)
        ext.bol_report = check_bol(ext.algebra);
    return ext;
}

BtildeInvariance check_btilde_invariance(const TStarExtension& ext, const Cocycle23& c)
{
    const std::size_t n = ext.base_dim;
    if (c.dim() != n || ext.algebra.dim != 2 * n)
        throw std::invalid_argument("check_btilde_invariance: extension/cocycle mismatch");

    BtildeInvariance out;
    out.invariant = check_associative(ext.algebra, ext.btilde).pass() &&
                    check_right_invariant(ext.algebra, ext.btilde).pass();
    out.holds45 = true;
    for (std::size_t x = 0; x < n && out.holds45; ++x)
        for (std::size_t y = 0; y < n && out.holds45; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (c.nu.at(x, y, z) != c.nu.at(y, z, x)) {
                    out.holds45 = false;
                    break;
                }
    out.holds46 = true;
    for (std::size_t x = 0; x < n && out.holds46; ++x)
        for (std::size_t y = 0; y < n && out.holds46; ++y)
            for (std::size_t z = 0; z < n && out.holds46; ++z)
                for (std::size_t u = 0; u < n; ++u)
                    if (c.omega.at(x, y, z, u) != c.omega.at(u, z, y, x)) {
                        out.holds46 = false;
                        break;
                    }
    return out;
}

std::pair<std::vector<Vec>, std::vector<Vec>> prop42_spaces(std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("prop42_spaces: n must be positive");
    const std::size_t nv = n * n * n * n;
    auto var = [n](std::size_t x, std::size_t y, std::size_t z, std::size_t u) {
        return ((x * n + y) * n + z) * n + u;
    };

    std::vector<Vec> shape_rows;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t u = 0; u < n; ++u) {
                    Vec r1(nv);
                    r1[var(x, y, z, u)] += 1;
                    r1[var(y, x, z, u)] += 1;
                    if (!vec_is_zero(r1))
                        shape_rows.push_back(std::move(r1));
                    Vec r2(nv);
                    r2[var(x, y, z, u)] += 1;
                    r2[var(y, z, x, u)] += 1;
                    r2[var(z, x, y, u)] += 1;
                    if (!vec_is_zero(r2))
                        shape_rows.push_back(std::move(r2));
                }

    auto solve_with = [&](bool cond46) {
        std::vector<Vec> rows = shape_rows;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z)
                    for (std::size_t u = 0; u < n; ++u) {
                        Vec r(nv);
                        r[var(x, y, z, u)] += 1;
                        if (cond46)
                            r[var(u, z, y, x)] -= 1;
                        else
                            r[var(x, y, u, z)] += 1;
                        if (!vec_is_zero(r))
                            rows.push_back(std::move(r));
                    }
        return nullspace(stack_rows(rows));
    };

    return {solve_with(true), solve_with(false)};
}

std::vector<TStarExtension> extension_chain(const BolAlgebra& a, const SymForm& b,
                                            std::size_t depth, BtildeVariant variant,
                                            bool run_check)
{
    if (depth == 0)
        throw std::invalid_argument("extension_chain: depth must be >= 1");
    std::vector<TStarExtension> chain;
    BolAlgebra cur = a;
    SymForm form = b;
    for (std::size_t k = 0; k < depth; ++k) {
        TStarExtension ext =
            tstar_extend(cur, form, Cocycle23::zero(cur.dim), variant, run_check);
        ext.provenance = "chain link " + std::to_string(k + 1);
        cur = ext.algebra;
        form = ext.btilde;
        chain.push_back(std::move(ext));
    }
    return chain;
}

} // namespace bolkit
