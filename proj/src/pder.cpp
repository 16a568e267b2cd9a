#include "bolkit/pder.hpp"

#include <stdexcept>

namespace bolkit {

Vec pder_coords(const PseudoDer& p)
{
    const std::size_t n = p.chi.size();
    Vec v(n * n + n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            v[r * n + c] = p.pi.at(r, c);
    for (std::size_t k = 0; k < n; ++k)
        v[n * n + k] = p.chi[k];
    return v;
}

PseudoDer pder_from_coords(std::size_t n, const Vec& v)
{
    PseudoDer p{Matrix(n, n), Vec(n)};
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            p.pi.at(r, c) = v[r * n + c];
    for (std::size_t k = 0; k < n; ++k)
        p.chi[k] = v[n * n + k];
    return p;
}

CheckReport is_pseudoderivation(const BolAlgebra& a, const PseudoDer& p)
{
    a.require_well_shaped();
    const std::size_t n = a.dim;
    if (p.pi.rows() != n || p.pi.cols() != n || p.chi.size() != n)
        throw std::invalid_argument("pseudoderivation shape mismatch");

    CheckReport rep;
    rep.begin_identity("pder-binary");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec xy = a.basis_product(i, j);
            Vec lhs = p.pi.apply(xy);
            Vec rhs = a.product(p.pi.apply(basis_vec(n, i)), basis_vec(n, j));
            rhs = vec_add(rhs, a.product(basis_vec(n, i), p.pi.apply(basis_vec(n, j))));
            rhs = vec_add(rhs, a.triple(basis_vec(n, i), basis_vec(n, j), p.chi));
            rhs = vec_sub(rhs, a.product(xy, p.chi));
            rep.record("pder-binary", {i, j}, std::move(lhs), std::move(rhs));
        }

    rep.begin_identity("pder-ternary");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec lhs = p.pi.apply(a.basis_triple(i, j, k));
                Vec rhs = a.triple(p.pi.apply(basis_vec(n, i)), basis_vec(n, j), basis_vec(n, k));
                rhs = vec_add(rhs, a.triple(basis_vec(n, i), p.pi.apply(basis_vec(n, j)),
                                            basis_vec(n, k)));
                rhs = vec_add(rhs, a.triple(basis_vec(n, i), basis_vec(n, j),
                                            p.pi.apply(basis_vec(n, k))));
                rep.record("pder-ternary", {i, j, k}, std::move(lhs), std::move(rhs));
            }
    return rep;
}

std::vector<PseudoDer> pder_space(const BolAlgebra& a)
{
    a.require_well_shaped();
    const std::size_t n = a.dim;
    const std::size_t nv = n * n + n;
    auto pi_var = [n](std::size_t r, std::size_t c) { return r * n + c; };
    auto chi_var = [n](std::size_t m) { return n * n + m; };

    std::vector<Vec> rows;
    // binary identity, component l at basis pair (i,j)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                Vec row(nv);
                for (std::size_t m = 0; m < n; ++m) {
                    row[pi_var(l, m)] += a.binary.at(i, j, m);
                    row[chi_var(m)] -= a.ternary.at(i, j, m, l);
                }
                for (std::size_t r = 0; r < n; ++r) {
                    row[pi_var(r, i)] -= a.binary.at(r, j, l);
                    row[pi_var(r, j)] -= a.binary.at(i, r, l);
                }
                for (std::size_t m = 0; m < n; ++m) {
                    if (a.binary.at(i, j, m).is_zero())
                        continue;
                    for (std::size_t q = 0; q < n; ++q)
                        row[chi_var(q)] += a.binary.at(i, j, m) * a.binary.at(m, q, l);
                }
                if (!vec_is_zero(row))
                    rows.push_back(std::move(row));
            }
    // ternary identity, component l at basis triple (i,j,k)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    Vec row(nv);
                    for (std::size_t m = 0; m < n; ++m)
                        row[pi_var(l, m)] += a.ternary.at(i, j, k, m);
                    for (std::size_t r = 0; r < n; ++r) {
                        row[pi_var(r, i)] -= a.ternary.at(r, j, k, l);
                        row[pi_var(r, j)] -= a.ternary.at(i, r, k, l);
                        row[pi_var(r, k)] -= a.ternary.at(i, j, r, l);
                    }
                    if (!vec_is_zero(row))
                        rows.push_back(std::move(row));
                }

    std::vector<Vec> sols;
    if (rows.empty()) {
        for (std::size_t v = 0; v < nv; ++v)
            sols.push_back(basis_vec(nv, v));
    } else {
        sols = nullspace(stack_rows(rows));
    }

    std::vector<PseudoDer> basis;
    for (const Vec& s : sols)
        basis.push_back(pder_from_coords(n, s));
    return basis;
}

PseudoDer inner_pder(const BolAlgebra& a, std::size_t i, std::size_t j)
{
    return {L_matrix(a, i, j), a.basis_product(i, j)};
}

SymForm phi(const SymForm& b, const PseudoDer& p)
{
    if (b.gram.rows() != p.pi.rows())
        throw std::invalid_argument("phi: shape mismatch");
    return SymForm{p.pi.transpose() * b.gram + b.gram * p.pi};
}

bool is_b_symmetric(const SymForm& b, const Matrix& f)
{
    return f.transpose() * b.gram == b.gram * f;
}

bool is_b_skew(const SymForm& b, const Matrix& f)
{
    return f.transpose() * b.gram == -(b.gram * f);
}

Matrix rchi_matrix(const BolAlgebra& a, const Vec& chi, std::size_t w)
{
    const std::size_t n = a.dim;
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        Vec col = a.triple(basis_vec(n, k), basis_vec(n, w), chi);
        col = vec_sub(col, a.product(a.basis_product(k, w), chi));
        for (std::size_t l = 0; l < n; ++l)
            m.at(l, k) = col[l];
    }
    return m;
}

Prop25Flags check_prop25(const BolAlgebra& a, const SymForm& b, const PseudoDer& p)
{
    QuadraticVerdict q = check_quadratic(a, b);
    if (!q.pass)
        throw std::invalid_argument("check_prop25: (A,b) is not quadratic: " + q.reason);
    if (!is_pseudoderivation(a, p).pass())
        throw std::invalid_argument("check_prop25: (Pi,chi) is not a pseudoderivation");

    SymForm f = phi(b, p);
    Prop25Flags flags;
    flags.phi_satisfies_24 = check_left_invariant(a, f).pass();
    flags.phi_satisfies_22 = check_associative(a, f).pass();
    flags.rchi_all_skew = true;
    for (std::size_t w = 0; w < a.dim; ++w)
        if (!is_b_skew(b, rchi_matrix(a, p.chi, w))) {
            flags.rchi_all_skew = false;
            break;
        }
    return flags;
}

ExactSequenceDims exact_sequence_dims(const BolAlgebra& a, const SymForm& b)
{
    QuadraticVerdict q = check_quadratic(a, b);
    if (!q.pass)
        throw std::invalid_argument("exact_sequence_dims: (A,b) is not quadratic: " + q.reason);

    std::vector<PseudoDer> basis = pder_space(a);
    ExactSequenceDims dims;
    dims.dim_pder = basis.size();
    if (basis.empty())
        return dims;

    std::vector<Vec> images;
    for (const PseudoDer& p : basis) {
        SymForm f = phi(b, p);
        images.push_back(f.gram.data());
    }
    Matrix img = stack_rows(images);
    dims.dim_image = rank(img);
    std::vector<Vec> kernel_coeffs = nullspace(img.transpose());
    dims.dim_kernel = kernel_coeffs.size();
    const std::size_t n = a.dim;
    for (const Vec& c : kernel_coeffs) {
        Vec acc(n * n + n);
        for (std::size_t s = 0; s < basis.size(); ++s)
            if (!c[s].is_zero())
                acc = vec_add(acc, vec_scale(c[s], pder_coords(basis[s])));
        dims.kernel_basis.push_back(pder_from_coords(n, acc));
    }
    return dims;
}

} // namespace bolkit
