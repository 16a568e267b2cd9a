#include "bolkit/algebra.hpp"

#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace bolkit {

std::string CheckReport::first_failed_identity() const
{
    for (const auto& [name, count] : identity_counts)
        if (count > 0)
            return name;
    return {};
}

void CheckReport::begin_identity(const std::string& name)
{
    identity_counts.emplace_back(name, 0);
}

void CheckReport::record(const std::string& identity, std::vector<std::size_t> indices,
                         Vec lhs, Vec rhs)
{
    Vec residual = vec_sub(lhs, rhs);
    if (vec_is_zero(residual))
        return;
    ++total_violations;
    bool counted = false;
    for (auto& [name, count] : identity_counts)
        if (name == identity) {
            ++count;
            counted = true;
            break;
        }
    if (!counted) // partial reports filled by worker threads start empty
        identity_counts.emplace_back(identity, 1);
    if (violations.size() < kMaxRecorded)
        violations.push_back({identity, std::move(indices), std::move(lhs),
                              std::move(rhs), std::move(residual)});
}

void CheckReport::merge(const CheckReport& other)
{
    total_violations += other.total_violations;
    for (const auto& [name, count] : other.identity_counts) {
        bool found = false;
        for (auto& [n, c] : identity_counts)
            if (n == name) {
                c += count;
                found = true;
                break;
            }
        if (!found)
            identity_counts.emplace_back(name, count);
    }
    for (const Violation& v : other.violations) {
        if (violations.size() >= kMaxRecorded)
            break;
        violations.push_back(v);
    }
}

namespace {

std::size_t configured_threads()
{
    const char* env = std::getenv("BOLKIT_THREADS");
    if (!env)
        return 0;
    long v = std::strtol(env, nullptr, 10);
    return v > 1 ? static_cast<std::size_t>(v) : 0;
}

// Splits [0, n) across workers; fn(first, last, report) fills a partial
// report. Partials are merged in index order, keeping violation order
// deterministic.
template <typename Fn>
void sweep(std::size_t n, CheckReport& out, Fn&& fn)
{
    std::size_t workers = configured_threads();
    if (workers <= 1 || n < 2) {
        fn(0, n, out);
        return;
    }
    if (workers > n)
        workers = n;
    std::vector<CheckReport> parts(workers);
    std::vector<std::thread> pool;
    std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t first = w * chunk;
        std::size_t last = std::min(n, first + chunk);
        pool.emplace_back([&, w, first, last] { fn(first, last, parts[w]); });
    }
    for (auto& t : pool)
        t.join();
    for (auto& p : parts)
        out.merge(p);
}

} // namespace

BolAlgebra BolAlgebra::zero(std::size_t n)
{
    BolAlgebra a;
    a.dim = n;
    a.binary = Tensor3(n, n, n);
    a.ternary = Tensor4(n, n, n, n);
    return a;
}

bool BolAlgebra::well_shaped() const
{
    return dim > 0 && binary.dim0() == dim && binary.dim1() == dim &&
           binary.dim2() == dim && ternary.dim0() == dim && ternary.dim1() == dim &&
           ternary.dim2() == dim && ternary.dim3() == dim;
}

void BolAlgebra::require_well_shaped() const
{
    if (!well_shaped())
        throw std::invalid_argument("algebra tensors do not match the stated dimension");
}

Vec BolAlgebra::basis_product(std::size_t i, std::size_t j) const
{
    Vec v(dim);
    for (std::size_t k = 0; k < dim; ++k)
        v[k] = binary.at(i, j, k);
    return v;
}

Vec BolAlgebra::basis_triple(std::size_t i, std::size_t j, std::size_t k) const
{
    Vec v(dim);
    for (std::size_t l = 0; l < dim; ++l)
        v[l] = ternary.at(i, j, k, l);
    return v;
}

Vec BolAlgebra::product(const Vec& x, const Vec& y) const
{
    Vec r(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (y[j].is_zero())
                continue;
            Rational c = x[i] * y[j];
            for (std::size_t k = 0; k < dim; ++k) {
                const Rational& s = binary.at(i, j, k);
                if (!s.is_zero())
                    r[k] += c * s;
            }
        }
    }
    return r;
}

Vec BolAlgebra::triple(const Vec& x, const Vec& y, const Vec& z) const
{
    Vec r(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (y[j].is_zero())
                continue;
            Rational c = x[i] * y[j];
            for (std::size_t k = 0; k < dim; ++k) {
                if (z[k].is_zero())
                    continue;
                Rational d = c * z[k];
                for (std::size_t l = 0; l < dim; ++l) {
                    const Rational& s = ternary.at(i, j, k, l);
                    if (!s.is_zero())
                        r[l] += d * s;
                }
            }
        }
    }
    return r;
}

Vec basis_vec(std::size_t n, std::size_t i)
{
    Vec v(n);
    v[i] = 1;
    return v;
}

Matrix l_matrix(const BolAlgebra& a, std::size_t i)
{
    Matrix m(a.dim, a.dim);
    for (std::size_t c = 0; c < a.dim; ++c)
        for (std::size_t r = 0; r < a.dim; ++r)
            m.at(r, c) = a.binary.at(i, c, r);
    return m;
}

Matrix L_matrix(const BolAlgebra& a, std::size_t i, std::size_t j)
{
    Matrix m(a.dim, a.dim);
    for (std::size_t c = 0; c < a.dim; ++c)
        for (std::size_t r = 0; r < a.dim; ++r)
            m.at(r, c) = a.ternary.at(i, j, c, r);
    return m;
}

Matrix R_matrix(const BolAlgebra& a, std::size_t i, std::size_t j)
{
    Matrix m(a.dim, a.dim);
    for (std::size_t c = 0; c < a.dim; ++c)
        for (std::size_t r = 0; r < a.dim; ++r)
            m.at(r, c) = a.ternary.at(c, i, j, r);
    return m;
}

OperatorViews operator_views(const BolAlgebra& a)
{
    OperatorViews v;
    const std::size_t n = a.dim;
    v.l.reserve(n);
    v.r.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        v.l.push_back(l_matrix(a, i));
        Matrix r(n, n);
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t rr = 0; rr < n; ++rr)
                r.at(rr, c) = a.binary.at(c, i, rr);
        v.r.push_back(std::move(r));
    }
    v.L.resize(n);
    v.R.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            v.L[i].push_back(L_matrix(a, i, j));
            v.R[i].push_back(R_matrix(a, i, j));
        }
    return v;
}

namespace {

void check_t01(const BolAlgebra& a, CheckReport& rep)
{
    rep.begin_identity("T01");
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            Vec lhs = a.basis_product(i, j);
            Vec rhs = vec_scale(Rational(-1), a.basis_product(j, i));
            rep.record("T01", {i, j}, std::move(lhs), std::move(rhs));
        }
}

void check_t02(const BolAlgebra& a, CheckReport& rep)
{
    rep.begin_identity("T02");
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k) {
                Vec lhs = a.basis_triple(i, j, k);
                Vec rhs = vec_scale(Rational(-1), a.basis_triple(j, i, k));
                rep.record("T02", {i, j, k}, std::move(lhs), std::move(rhs));
            }
}

void check_t1(const BolAlgebra& a, CheckReport& rep)
{
    rep.begin_identity("T1");
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k) {
                Vec lhs = vec_add(a.basis_triple(i, j, k),
                                  vec_add(a.basis_triple(j, k, i), a.basis_triple(k, i, j)));
                rep.record("T1", {i, j, k}, std::move(lhs), vec_zero(a.dim));
            }
}

// T2 per (u,v,x,y) as the operator identity in z:
//   L(u,v)L(x,y) - L(x,y)L(u,v) = L([[u,v,x]], e_y) + L(e_x, [[u,v,y]])
void check_t2(const BolAlgebra& a, const OperatorViews& ops, CheckReport& rep)
{
    const std::size_t n = a.dim;
    rep.begin_identity("T2");
    sweep(n, rep, [&](std::size_t u0, std::size_t u1, CheckReport& part) {
        for (std::size_t u = u0; u < u1; ++u)
            for (std::size_t v = 0; v < n; ++v) {
                const Matrix& luv = ops.L[u][v];
                bool luv_zero = luv.is_zero();
                Vec cuv_any(n);
                for (std::size_t x = 0; x < n; ++x)
                    for (std::size_t y = 0; y < n; ++y) {
                        const Matrix& lxy = ops.L[x][y];
                        Matrix resid(n, n);
                        if (!luv_zero && !lxy.is_zero())
                            resid = luv * lxy - lxy * luv;
                        Vec w1 = a.basis_triple(u, v, x);
                        for (std::size_t i = 0; i < n; ++i)
                            if (!w1[i].is_zero())
                                resid = resid - ops.L[i][y].scaled(w1[i]);
                        Vec w2 = a.basis_triple(u, v, y);
                        for (std::size_t j = 0; j < n; ++j)
                            if (!w2[j].is_zero())
                                resid = resid - ops.L[x][j].scaled(w2[j]);
                        if (resid.is_zero())
                            continue;
                        for (std::size_t z = 0; z < n; ++z) {
                            Vec col(n);
                            for (std::size_t l = 0; l < n; ++l)
                                col[l] = resid.at(l, z);
                            if (vec_is_zero(col))
                                continue;
                            Vec lhs = luv.apply(a.basis_triple(x, y, z));
                            Vec rhs = vec_sub(lhs, col);
                            part.record("T2", {u, v, x, y, z}, std::move(lhs), std::move(rhs));
                        }
                    }
            }
    });
}

// T3: [[u,v,x*y]] = [[u,v,x]]*y + x*[[u,v,y]] + [[x,y,u*v]] - (x*y)*(u*v)
void check_t3(const BolAlgebra& a, const OperatorViews& ops, CheckReport& rep)
{
    const std::size_t n = a.dim;
    rep.begin_identity("T3");
    sweep(n, rep, [&](std::size_t u0, std::size_t u1, CheckReport& part) {
        for (std::size_t u = u0; u < u1; ++u)
            for (std::size_t v = 0; v < n; ++v) {
                const Matrix& luv = ops.L[u][v];
                Vec uv = a.basis_product(u, v);
                for (std::size_t x = 0; x < n; ++x)
                    for (std::size_t y = 0; y < n; ++y) {
                        Vec xy = a.basis_product(x, y);
                        Vec lhs = luv.apply(xy);
                        Vec rhs = a.product(a.basis_triple(u, v, x), basis_vec(n, y));
                        rhs = vec_add(rhs, a.product(basis_vec(n, x), a.basis_triple(u, v, y)));
                        rhs = vec_add(rhs, a.triple(basis_vec(n, x), basis_vec(n, y), uv));
                        rhs = vec_sub(rhs, a.product(xy, uv));
                        part.record("T3", {u, v, x, y}, std::move(lhs), std::move(rhs));
                    }
            }
    });
}

} // namespace

CheckReport check_bol(const BolAlgebra& a)
{
    a.require_well_shaped();
    CheckReport rep;
    OperatorViews ops = operator_views(a);
    check_t01(a, rep);
    check_t02(a, rep);
    check_t1(a, rep);
    check_t2(a, ops, rep);
    check_t3(a, ops, rep);
    return rep;
}

CheckReport check_lts(const BolAlgebra& a)
{
    a.require_well_shaped();
    CheckReport rep;
    OperatorViews ops = operator_views(a);
    check_t02(a, rep);
    check_t1(a, rep);
    check_t2(a, ops, rep);
    return rep;
}

CheckReport check_maltsev(const Tensor3& binary)
{
    const std::size_t n = binary.dim0();
    if (binary.dim1() != n || binary.dim2() != n)
        throw std::invalid_argument("maltsev tensor must be cubic");
    BolAlgebra a = BolAlgebra::zero(n);
    a.binary = binary;

    CheckReport rep;
    rep.begin_identity("anticommutativity");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rep.record("anticommutativity", {i, j}, a.basis_product(i, j),
                       vec_scale(Rational(-1), a.basis_product(j, i)));

    // Linearization of (x*y)(x*z) = ((x*y)z)x + ((y*z)x)x + ((z*x)x)y in x
    // (replace the two occurrences of x by x, w symmetrically); over Q the
    // linearized identity on basis tuples is equivalent to the original.
    rep.begin_identity("maltsev");
    auto prod = [&](const Vec& p, const Vec& q) { return a.product(p, q); };
    for (std::size_t xi = 0; xi < n; ++xi) {
        Vec x = basis_vec(n, xi);
        for (std::size_t wi = 0; wi < n; ++wi) {
            Vec w = basis_vec(n, wi);
            for (std::size_t yi = 0; yi < n; ++yi) {
                Vec y = basis_vec(n, yi);
                for (std::size_t zi = 0; zi < n; ++zi) {
                    Vec z = basis_vec(n, zi);
                    Vec lhs = vec_add(prod(prod(x, y), prod(w, z)),
                                      prod(prod(w, y), prod(x, z)));
                    Vec rhs = prod(prod(prod(x, y), z), w);
                    rhs = vec_add(rhs, prod(prod(prod(w, y), z), x));
                    rhs = vec_add(rhs, prod(prod(prod(y, z), x), w));
                    rhs = vec_add(rhs, prod(prod(prod(y, z), w), x));
                    rhs = vec_add(rhs, prod(prod(prod(z, x), w), y));
                    rhs = vec_add(rhs, prod(prod(prod(z, w), x), y));
                    rep.record("maltsev", {xi, wi, yi, zi}, std::move(lhs), std::move(rhs));
                }
            }
        }
    }
    return rep;
}

BolAlgebra to_right_bol(const BolAlgebra& a)
{
    a.require_well_shaped();
    const std::size_t n = a.dim;
    BolAlgebra r = BolAlgebra::zero(n);
    r.labels = a.labels;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                r.binary.at(i, j, k) = -a.binary.at(i, j, k);
                for (std::size_t l = 0; l < n; ++l)
                    r.ternary.at(i, j, k, l) = -a.ternary.at(j, k, i, l);
            }
    return r;
}

BolAlgebra to_left_bol(const BolAlgebra& a)
{
    a.require_well_shaped();
    const std::size_t n = a.dim;
    BolAlgebra r = BolAlgebra::zero(n);
    r.labels = a.labels;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                r.binary.at(i, j, k) = -a.binary.at(i, j, k);
                for (std::size_t l = 0; l < n; ++l)
                    r.ternary.at(i, j, k, l) = -a.ternary.at(k, i, j, l);
            }
    return r;
}

Tensor4 lts_from_maltsev(const Tensor3& binary)
{
    const std::size_t n = binary.dim0();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (binary.at(i, j, k) != -binary.at(j, i, k))
                    throw std::invalid_argument("lts_from_maltsev: binary is not anticommutative");

    BolAlgebra a = BolAlgebra::zero(n);
    a.binary = binary;
    Tensor4 t(n, n, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec x = basis_vec(n, i), y = basis_vec(n, j), z = basis_vec(n, k);
                Vec v = vec_scale(Rational(2), a.product(a.product(x, y), z));
                v = vec_sub(v, a.product(a.product(y, z), x));
                v = vec_sub(v, a.product(a.product(z, x), y));
                for (std::size_t l = 0; l < n; ++l)
                    t.at(i, j, k, l) = v[l];
            }
    return t;
}

BolAlgebra bol_from_maltsev(const Tensor3& binary)
{
    Tensor4 lts = lts_from_maltsev(binary);
    BolAlgebra a = BolAlgebra::zero(binary.dim0());
    a.binary = binary;
    a.ternary = lts;
    for (Rational& q : a.ternary.data())
        q /= 3;
    return a;
}

namespace {

// Fills the forced antisymmetric completions of a two-dimensional table
//   e1*e2 = b2 e2 (and b1 e1), [[e1,e2,e1]] = p, [[e1,e2,e2]] = q.
BolAlgebra table_2d(const Rational& prod_e2, const Vec& p, const Vec& q)
{
    BolAlgebra a = BolAlgebra::zero(2);
    a.binary.at(0, 1, 1) = prod_e2;
    a.binary.at(1, 0, 1) = -prod_e2;
    for (std::size_t l = 0; l < 2; ++l) {
        a.ternary.at(0, 1, 0, l) = p[l];
        a.ternary.at(1, 0, 0, l) = -p[l];
        a.ternary.at(0, 1, 1, l) = q[l];
        a.ternary.at(1, 0, 1, l) = -q[l];
    }
    return a;
}

} // namespace

BolAlgebra canonical_2d(CanonicalType type, const Rational& p1, const Rational& p2)
{
    switch (type) {
    case CanonicalType::I: {
        bool ok = (p1 == 0 && p2 == 0) || (p1 == 1 && p2 == 0) || (p1 == -1 && p2 == 0) ||
                  (p1 == 1 && p2 == 1) || (p1 == 1 && p2 == -1) || (p1 == -1 && p2 == -1);
        if (!ok)
            throw std::invalid_argument("canonical_2d type I: (eps1, eps2) outside the catalog ranges");
        return table_2d(Rational(0), {Rational(0), p2}, {-p1, Rational(0)});
    }
    case CanonicalType::IIi: {
        if (!(p2 == 0 || p2 == 1 || p2 == -1))
            throw std::invalid_argument("canonical_2d type II(i): eps must be 0 or +-1");
        return table_2d(Rational(-1), {Rational(0), p1}, {-p2, Rational(0)});
    }
    case CanonicalType::IIii:
        return table_2d(Rational(-1), {Rational(1), Rational(0)}, {Rational(0), Rational(-1)});
    }
    throw std::invalid_argument("canonical_2d: unknown type");
}

Matrix binary_trace_form(const Tensor3& binary)
{
    const std::size_t n = binary.dim0();
    BolAlgebra a = BolAlgebra::zero(n);
    a.binary = binary;
    std::vector<Matrix> l;
    for (std::size_t i = 0; i < n; ++i)
        l.push_back(l_matrix(a, i));
    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Matrix p = l[i] * l[j];
            Rational tr = 0;
            for (std::size_t k = 0; k < n; ++k)
                tr += p.at(k, k);
            g.at(i, j) = tr;
            g.at(j, i) = tr;
        }
    return g;
}

namespace {

Tensor3 sl2_table()
{
    // Basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
    Tensor3 b(3, 3, 3);
    b.at(0, 1, 1) = 2;
    b.at(1, 0, 1) = -2;
    b.at(0, 2, 2) = -2;
    b.at(2, 0, 2) = 2;
    b.at(1, 2, 0) = 1;
    b.at(2, 1, 0) = -1;
    return b;
}

Tensor3 m7_table()
{
    // Commutators of the imaginary octonions, Fano triples (i, i+1, i+3)
    // mod 7: [e_i, e_j] = 2 e_k for each cyclic rotation of a triple.
    Tensor3 b(7, 7, 7);
    const int triples[7][3] = {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7},
                               {5, 6, 1}, {6, 7, 2}, {7, 1, 3}};
    for (const auto& t : triples)
        for (int r = 0; r < 3; ++r) {
            std::size_t i = static_cast<std::size_t>(t[r] - 1);
            std::size_t j = static_cast<std::size_t>(t[(r + 1) % 3] - 1);
            std::size_t k = static_cast<std::size_t>(t[(r + 2) % 3] - 1);
            b.at(i, j, k) = 2;
            b.at(j, i, k) = -2;
        }
    return b;
}

CatalogEntry make_entry(std::string name, std::string desc, BolAlgebra a,
                        std::optional<Matrix> form = std::nullopt)
{
    return CatalogEntry{std::move(name), std::move(desc), std::move(a), std::move(form)};
}

} // namespace

std::vector<std::string> catalog_names()
{
    return {"zero_2",      "example_2_3", "example_2_8", "type_I_0_0",  "type_I_1_0",
            "type_I_m1_0", "type_I_1_1",  "type_I_1_m1", "type_I_m1_m1", "type_II_i",
            "type_II_ii",  "sl2_bol",     "m7_bol"};
}

CatalogEntry catalog(const std::string& name)
{
    if (name == "zero_2")
        return make_entry(name, "two-dimensional abelian algebra", BolAlgebra::zero(2),
                          Matrix::identity(2));
    if (name == "example_2_3")
        return make_entry(name, "e1*e2=-e2, [[e1,e2,e1]]=e2, [[e1,e2,e2]]=-e1",
                          canonical_2d(CanonicalType::IIi, Rational(1), Rational(1)));
    if (name == "example_2_8") {
        BolAlgebra a = BolAlgebra::zero(2);
        a.ternary.at(0, 1, 0, 0) = 1;
        a.ternary.at(1, 0, 0, 0) = -1;
        a.ternary.at(0, 1, 1, 1) = -1;
        a.ternary.at(1, 0, 1, 1) = 1;
        Matrix g(2, 2);
        g.at(0, 1) = 1;
        g.at(1, 0) = 1;
        return make_entry(name, "LTS [[e1,e2,e1]]=e1, [[e1,e2,e2]]=-e2 with b(e1,e2)=1",
                          std::move(a), std::move(g));
    }
    if (name.rfind("type_I_", 0) == 0) {
        auto eps = [](const std::string& s) -> Rational {
            if (s == "0") return Rational(0);
            if (s == "1") return Rational(1);
            if (s == "m1") return Rational(-1);
            throw std::invalid_argument("unknown catalog name");
        };
        std::string rest = name.substr(7);
        auto sep = rest.find('_');
        if (sep == std::string::npos)
            throw std::invalid_argument("unknown catalog name: " + name);
        return make_entry(name, "canonical type I table",
                          canonical_2d(CanonicalType::I, eps(rest.substr(0, sep)),
                                       eps(rest.substr(sep + 1))));
    }
    if (name == "type_II_i")
        return make_entry(name, "canonical type II(i) table, beta=0, eps=1",
                          canonical_2d(CanonicalType::IIi, Rational(0), Rational(1)));
    if (name == "type_II_ii")
        return make_entry(name, "canonical type II(ii) table", canonical_2d(CanonicalType::IIii));
    if (name == "sl2_bol") {
        Tensor3 b = sl2_table();
        return make_entry(name, "Bol algebra of sl2 with its Killing form",
                          bol_from_maltsev(b), binary_trace_form(b));
    }
    if (name == "m7_bol") {
        Tensor3 b = m7_table();
        return make_entry(name, "Bol algebra of the 7-dim octonion commutator Maltsev algebra",
                          bol_from_maltsev(b), binary_trace_form(b));
    }
    throw std::invalid_argument("unknown catalog name: " + name);
}

} // namespace bolkit
