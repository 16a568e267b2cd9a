#include "bolkit/forms.hpp"

#include <stdexcept>

namespace bolkit {

namespace {

void require_shapes(const BolAlgebra& a, const SymForm& b)
{
    a.require_well_shaped();
    if (b.gram.rows() != a.dim || b.gram.cols() != a.dim)
        throw std::invalid_argument("form dimension does not match the algebra");
}

Rational pair_with_form(const Matrix& g, const Vec& v, std::size_t u)
{
    // b(v, e_u) for a coordinate vector v
    Rational s = 0;
    for (std::size_t l = 0; l < v.size(); ++l)
        if (!v[l].is_zero())
            s += v[l] * g.at(l, u);
    return s;
}

} // namespace

CheckReport check_associative(const BolAlgebra& a, const SymForm& b)
{
    require_shapes(a, b);
    const std::size_t n = a.dim;
    const Matrix& g = b.gram;
    CheckReport rep;
    rep.begin_identity("associative");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Rational lhs = pair_with_form(g, a.basis_product(i, j), k);
                Rational rhs = 0;
                for (std::size_t l = 0; l < n; ++l)
                    rhs += g.at(i, l) * a.binary.at(j, k, l);
                rep.record("associative", {i, j, k}, {lhs}, {rhs});
            }
    return rep;
}

CheckReport check_right_invariant(const BolAlgebra& a, const SymForm& b)
{
    require_shapes(a, b);
    const std::size_t n = a.dim;
    CheckReport rep;
    rep.begin_identity("right-invariant");
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t u = 0; u < n; ++u) {
                    Rational lhs = pair_with_form(b.gram, a.basis_triple(x, y, z), u);
                    Rational rhs = pair_with_form(b.gram, a.basis_triple(z, u, x), y);
                    rep.record("right-invariant", {x, y, z, u}, {lhs}, {rhs});
                }
    return rep;
}

CheckReport check_left_invariant(const BolAlgebra& a, const SymForm& b)
{
    require_shapes(a, b);
    const std::size_t n = a.dim;
    CheckReport rep;
    rep.begin_identity("left-invariant");
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t u = 0; u < n; ++u) {
                    Rational lhs = pair_with_form(b.gram, a.basis_triple(x, y, z), u);
                    Rational rhs = -pair_with_form(b.gram, a.basis_triple(x, y, u), z);
                    rep.record("left-invariant", {x, y, z, u}, {lhs}, {rhs});
                }
    return rep;
}

QuadraticVerdict check_quadratic(const BolAlgebra& a, const SymForm& b)
{
    require_shapes(a, b);
    if (!b.is_symmetric())
        return {false, "form is not symmetric"};
    if (!b.is_nondegenerate())
        return {false, "form is degenerate"};
    if (!check_associative(a, b).pass())
        return {false, "associative condition (2.2) fails"};
    if (!check_right_invariant(a, b).pass())
        return {false, "right invariant condition (2.3) fails"};
    return {true, {}};
}

std::vector<Matrix> symmetric_basis(std::size_t n)
{
    std::vector<Matrix> basis;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p; q < n; ++q) {
            Matrix m(n, n);
            m.at(p, q) = 1;
            m.at(q, p) = 1;
            basis.push_back(std::move(m));
        }
    return basis;
}

namespace {

// Variables are the upper-triangle entries G(p,q), p <= q.
std::size_t sym_index(std::size_t n, std::size_t p, std::size_t q)
{
    if (p > q)
        std::swap(p, q);
    return p * n - p * (p - 1) / 2 + (q - p);
}

enum class Condition { Associative, RightInvariant, LeftInvariant };

void append_rows(const BolAlgebra& a, Condition cond, std::vector<Vec>& rows)
{
    const std::size_t n = a.dim;
    const std::size_t nv = n * (n + 1) / 2;
    if (cond == Condition::Associative) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    Vec row(nv);
                    for (std::size_t l = 0; l < n; ++l) {
                        row[sym_index(n, l, k)] += a.binary.at(i, j, l);
                        row[sym_index(n, i, l)] -= a.binary.at(j, k, l);
                    }
                    if (!vec_is_zero(row))
                        rows.push_back(std::move(row));
                }
        return;
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t u = 0; u < n; ++u) {
                    Vec row(nv);
                    for (std::size_t l = 0; l < n; ++l) {
                        row[sym_index(n, l, u)] += a.ternary.at(x, y, z, l);
                        if (cond == Condition::RightInvariant)
                            row[sym_index(n, l, y)] -= a.ternary.at(z, u, x, l);
                        else
                            row[sym_index(n, z, l)] += a.ternary.at(x, y, u, l);
                    }
                    if (!vec_is_zero(row))
                        rows.push_back(std::move(row));
                }
}

std::vector<SymForm> solve_form_space(const BolAlgebra& a, const std::vector<Condition>& conds)
{
    const std::size_t n = a.dim;
    const std::size_t nv = n * (n + 1) / 2;
    std::vector<Vec> rows;
    for (Condition c : conds)
        append_rows(a, c, rows);

    std::vector<Vec> sols;
    if (rows.empty()) {
        for (std::size_t v = 0; v < nv; ++v)
            sols.push_back(basis_vec(nv, v));
    } else {
        sols = nullspace(stack_rows(rows));
    }

    std::vector<SymForm> basis;
    for (const Vec& s : sols) {
        Matrix g(n, n);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p; q < n; ++q) {
                g.at(p, q) = s[sym_index(n, p, q)];
                g.at(q, p) = g.at(p, q);
            }
        basis.push_back(SymForm{std::move(g)});
    }
    return basis;
}

} // namespace

FormSpace invariant_form_space(const BolAlgebra& a)
{
    a.require_well_shaped();
    FormSpace fs;
    fs.basis = solve_form_space(a, {Condition::Associative, Condition::RightInvariant});
    std::vector<Matrix> grams;
    for (const SymForm& f : fs.basis)
        grams.push_back(f.gram);
    fs.exists_nondeg = exists_nondegenerate(grams);
    return fs;
}

std::pair<std::vector<SymForm>, std::vector<SymForm>>
lemma22_solution_spaces(const BolAlgebra& a)
{
    if (!check_lts(a).pass())
        throw std::invalid_argument("lemma22_solution_spaces: input is not a Lie triple system");
    return {solve_form_space(a, {Condition::RightInvariant}),
            solve_form_space(a, {Condition::LeftInvariant})};
}

CheckReport k_tensor_checks(const BolAlgebra& a, const SymForm& b)
{
    require_shapes(a, b);
    if (!check_left_invariant(a, b).pass())
        throw std::invalid_argument("k_tensor_checks: b does not satisfy the left invariant condition");

    const std::size_t n = a.dim;
    Tensor4 k(n, n, n, n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t u = 0; u < n; ++u)
                    k.at(x, y, z, u) = pair_with_form(b.gram, a.basis_triple(x, y, z), u);

    CheckReport rep;
    rep.begin_identity("K-antisym-12");
    rep.begin_identity("K-antisym-34");
    rep.begin_identity("K-cyclic");
    rep.begin_identity("K-pair-exchange");
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t u = 0; u < n; ++u) {
                    rep.record("K-antisym-12", {x, y, z, u}, {k.at(x, y, z, u)},
                               {-k.at(y, x, z, u)});
                    rep.record("K-antisym-34", {x, y, z, u}, {k.at(x, y, z, u)},
                               {-k.at(x, y, u, z)});
                    rep.record("K-cyclic", {x, y, z, u},
                               {k.at(x, y, z, u) + k.at(y, z, x, u) + k.at(z, x, y, u)},
                               {Rational(0)});
                    rep.record("K-pair-exchange", {x, y, z, u}, {k.at(x, y, z, u)},
                               {k.at(z, u, x, y)});
                }
    return rep;
}

SymForm lts_trace_form(const BolAlgebra& a)
{
    if (!check_lts(a).pass())
        throw std::invalid_argument("lts_trace_form: input is not a Lie triple system");
    const std::size_t n = a.dim;
    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t w = 0; w < n; ++w)
                g.at(i, j) += a.ternary.at(i, w, j, w);
    SymForm f{std::move(g)};
    if (!f.is_symmetric())
        throw std::logic_error("lts_trace_form: trace form not symmetric on LTS input");
    return f;
}

Vec inner_pair_coords(const BolAlgebra& a, std::size_t i, std::size_t j)
{
    const std::size_t n = a.dim;
    Vec v(n * n + n);
    Matrix L = L_matrix(a, i, j);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            v[r * n + c] = L.at(r, c);
    for (std::size_t k = 0; k < n; ++k)
        v[n * n + k] = a.binary.at(i, j, k);
    return v;
}

BetaExtension beta_extension(const BolAlgebra& a, const SymForm& b)
{
    QuadraticVerdict q = check_quadratic(a, b);
    if (!q.pass)
        throw std::invalid_argument("beta_extension: (A,b) is not quadratic: " + q.reason);

    const std::size_t n = a.dim;
    BetaExtension ext;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            ext.generators.emplace_back(i, j);

    std::vector<Vec> gen_coords;
    for (auto [i, j] : ext.generators)
        gen_coords.push_back(inner_pair_coords(a, i, j));

    const std::size_t ng = ext.generators.size();
    ext.beta_gram = Matrix(ng, ng);
    for (std::size_t s = 0; s < ng; ++s) {
        auto [i, j] = ext.generators[s];
        for (std::size_t t = 0; t < ng; ++t) {
            auto [x, y] = ext.generators[t];
            // beta(L(e_i,e_j), L(e_x,e_y)) = b(L(e_i,e_j)(e_x), e_y)
            ext.beta_gram.at(s, t) = pair_with_form(b.gram, a.basis_triple(i, j, x), y);
        }
    }
    ext.symmetric = ext.beta_gram.is_symmetric();

    // beta is well-defined on h iff it kills every linear relation among
    // the generators, on either side.
    ext.well_defined = true;
    if (ng > 0) {
        std::vector<Vec> relations = nullspace(stack_rows(gen_coords).transpose());
        for (const Vec& r : relations) {
            Vec left = ext.beta_gram.transpose().apply(r);
            Vec right = ext.beta_gram.apply(r);
            if (!vec_is_zero(left) || !vec_is_zero(right)) {
                ext.well_defined = false;
                break;
            }
        }
        // independent spanning subset of the generators
        Matrix m = stack_rows(gen_coords);
        row_reduce(m);
        for (std::size_t rr = 0; rr < m.rows(); ++rr) {
            Vec row(m.cols());
            for (std::size_t c = 0; c < m.cols(); ++c)
                row[c] = m.at(rr, c);
            if (!vec_is_zero(row))
                ext.h_basis.push_back(std::move(row));
        }
    }
    return ext;
}

} // namespace bolkit
