#include "bolkit/reps.hpp"

#include <stdexcept>

namespace bolkit {

Representation Representation::zero(std::size_t n, std::size_t m)
{
    Representation rep;
    rep.n = n;
    rep.m = m;
    rep.rho.assign(n, Matrix(m, m));
    rep.theta.assign(n, std::vector<Matrix>(n, Matrix(m, m)));
    rep.d.assign(n, std::vector<Matrix>(n, Matrix(m, m)));
    return rep;
}

bool Representation::well_shaped() const
{
    if (n == 0 || m == 0 || rho.size() != n || theta.size() != n || d.size() != n)
        return false;
    for (const Matrix& r : rho)
        if (r.rows() != m || r.cols() != m)
            return false;
    for (const auto& row : theta) {
        if (row.size() != n)
            return false;
        for (const Matrix& t : row)
            if (t.rows() != m || t.cols() != m)
                return false;
    }
    for (const auto& row : d) {
        if (row.size() != n)
            return false;
        for (const Matrix& t : row)
            if (t.rows() != m || t.cols() != m)
                return false;
    }
    return true;
}

Matrix Representation::rho_of(const Vec& x) const
{
    Matrix r(m, m);
    for (std::size_t i = 0; i < n; ++i)
        if (!x[i].is_zero())
            r = r + rho[i].scaled(x[i]);
    return r;
}

Matrix Representation::theta_of(std::size_t i, const Vec& y) const
{
    Matrix r(m, m);
    for (std::size_t j = 0; j < n; ++j)
        if (!y[j].is_zero())
            r = r + theta[i][j].scaled(y[j]);
    return r;
}

Matrix Representation::theta_of(const Vec& x, std::size_t j) const
{
    Matrix r(m, m);
    for (std::size_t i = 0; i < n; ++i)
        if (!x[i].is_zero())
            r = r + theta[i][j].scaled(x[i]);
    return r;
}

Matrix Representation::d_of(const Vec& x, std::size_t j) const
{
    Matrix r(m, m);
    for (std::size_t i = 0; i < n; ++i)
        if (!x[i].is_zero())
            r = r + d[i][j].scaled(x[i]);
    return r;
}

namespace {

void record_matrix(CheckReport& rep, const std::string& identity,
                   std::vector<std::size_t> indices, const Matrix& lhs, const Matrix& rhs)
{
    rep.record(identity, std::move(indices), lhs.data(), rhs.data());
}

Matrix d_of_second(const Representation& rep, std::size_t i, const Vec& y)
{
    Matrix r(rep.m, rep.m);
    for (std::size_t j = 0; j < rep.n; ++j)
        if (!y[j].is_zero())
            r = r + rep.d[i][j].scaled(y[j]);
    return r;
}

} // namespace

CheckReport check_representation(const BolAlgebra& a, const Representation& rep)
{
    a.require_well_shaped();
    if (!rep.well_shaped() || rep.n != a.dim)
        throw std::invalid_argument("representation shape mismatch");
    const std::size_t n = a.dim;
    CheckReport out;

    out.begin_identity("R1");
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            record_matrix(out, "R1", {x, y}, rep.d[x][y] + rep.theta[x][y],
                          rep.theta[y][x]);

    out.begin_identity("R21");
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                Vec xy = a.basis_product(x, y);
                Matrix lhs = rep.d[x][y] * rep.rho[z] - rep.rho[z] * rep.d[x][y];
                Matrix rhs = rep.rho_of(a.basis_triple(x, y, z)) +
                             rep.rho_of(xy) * rep.rho[z] - rep.theta_of(z, xy);
                record_matrix(out, "R21", {x, y, z}, lhs, rhs);
            }

    out.begin_identity("R22");
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                Vec yz = a.basis_product(y, z);
                Matrix lhs = rep.theta_of(x, yz);
                Matrix rhs = rep.rho[y] * rep.theta[x][z] - rep.rho[z] * rep.theta[x][y] -
                             (rep.d[y][z] - rep.rho_of(yz)) * rep.rho[x];
                record_matrix(out, "R22", {x, y, z}, lhs, rhs);
            }

    out.begin_identity("R31");
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y) {
                    Matrix lhs = rep.d[u][v] * rep.d[x][y] - rep.d[x][y] * rep.d[u][v];
                    Matrix rhs = rep.d_of(a.basis_triple(u, v, x), y) +
                                 d_of_second(rep, x, a.basis_triple(u, v, y));
                    record_matrix(out, "R31", {u, v, x, y}, lhs, rhs);
                }

    out.begin_identity("R32");
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y) {
                    Matrix lhs = rep.d[u][v] * rep.theta[x][y] - rep.theta[x][y] * rep.d[u][v];
                    Matrix rhs = rep.theta_of(a.basis_triple(u, v, x), y) +
                                 rep.theta_of(x, a.basis_triple(u, v, y));
                    record_matrix(out, "R32", {u, v, x, y}, lhs, rhs);
                }

    out.begin_identity("R33");
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z) {
                    Matrix lhs = rep.theta_of(u, a.basis_triple(x, y, z));
                    Matrix rhs = rep.theta[y][z] * rep.theta[u][x] -
                                 rep.theta[x][z] * rep.theta[u][y] +
                                 rep.d[x][y] * rep.theta[u][z];
                    record_matrix(out, "R33", {u, x, y, z}, lhs, rhs);
                }
    return out;
}

Representation adjoint_rep(const BolAlgebra& a)
{
    a.require_well_shaped();
    const std::size_t n = a.dim;
    Representation rep = Representation::zero(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        rep.rho[i] = l_matrix(a, i);
        for (std::size_t j = 0; j < n; ++j) {
            rep.theta[i][j] = R_matrix(a, i, j);
            rep.d[i][j] = L_matrix(a, i, j);
        }
    }
    return rep;
}

Representation dual_rep(const Representation& rep)
{
    if (!rep.well_shaped())
        throw std::invalid_argument("dual_rep: malformed representation");
    const std::size_t n = rep.n;
    Representation out = Representation::zero(n, rep.m);
    for (std::size_t i = 0; i < n; ++i) {
        out.rho[i] = -rep.rho[i].transpose();
        for (std::size_t j = 0; j < n; ++j)
            out.theta[i][j] = rep.theta[j][i].transpose();
    }
    // D of the dual always derived through (R1)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.d[i][j] = out.theta[j][i] - out.theta[i][j];
    return out;
}

Representation coadjoint_rep(const BolAlgebra& a)
{
    return dual_rep(adjoint_rep(a));
}

Thm34Flags check_thm34_conditions(const BolAlgebra& a, const Representation& rep)
{
    a.require_well_shaped();
    if (!rep.well_shaped() || rep.n != a.dim)
        throw std::invalid_argument("representation shape mismatch");
    const std::size_t n = a.dim;
    Thm34Flags flags{true, true};
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            Vec uv = a.basis_product(u, v);
            Matrix ruv = rep.rho_of(uv);
            for (std::size_t w = 0; w < n; ++w) {
                if (flags.cond34) {
                    Matrix lhs = ruv * rep.rho[w] + rep.rho[w] * ruv;
                    Matrix rhs = rep.theta_of(uv, w) + rep.theta_of(w, uv);
                    if (!(lhs == rhs))
                        flags.cond34 = false;
                }
                if (flags.cond35) {
                    Matrix lhs = rep.theta[u][v] * rep.rho[w] - rep.rho[w] * rep.theta[v][u];
                    if (!lhs.is_zero())
                        flags.cond35 = false;
                }
            }
        }
    return flags;
}

bool check_rep_hom(const Representation& rep1, const Representation& rep2, const Matrix& psi)
{
    if (rep1.n != rep2.n || psi.rows() != rep2.m || psi.cols() != rep1.m)
        throw std::invalid_argument("check_rep_hom: shape mismatch");
    for (std::size_t i = 0; i < rep1.n; ++i)
        if (!(psi * rep1.rho[i] == rep2.rho[i] * psi))
            return false;
    for (std::size_t i = 0; i < rep1.n; ++i)
        for (std::size_t j = 0; j < rep1.n; ++j)
            if (!(psi * rep1.theta[i][j] == rep2.theta[i][j] * psi))
                return false;
    return true;
}

bool check_rep_iso(const Representation& rep1, const Representation& rep2, const Matrix& psi)
{
    return rep1.m == rep2.m && !determinant(psi).is_zero() &&
           check_rep_hom(rep1, rep2, psi);
}

Matrix b_sharp(const SymForm& b)
{
    if (!b.is_symmetric())
        throw std::invalid_argument("b_sharp: form is not symmetric");
    return b.gram;
}

} // namespace bolkit
