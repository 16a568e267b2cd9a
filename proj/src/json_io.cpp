#include "bolkit/json_io.hpp"

#include <stdexcept>

namespace bolkit {

json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j)
{
    if (j.is_number_integer())
        return Rational(static_cast<long long>(j.get<long long>()));
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw std::invalid_argument("expected rational as string or integer, got " + j.dump());
}

json vec_to_json(const Vec& v)
{
    json arr = json::array();
    for (const Rational& q : v)
        arr.push_back(rational_to_json(q));
    return arr;
}

Vec vec_from_json(const json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("expected array of rationals");
    Vec v;
    for (const json& e : j)
        v.push_back(rational_from_json(e));
    return v;
}

json matrix_to_json(const Matrix& m)
{
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(rational_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& j)
{
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw std::invalid_argument("expected matrix as array of arrays");
    Matrix m(j.size(), j[0].size());
    for (std::size_t r = 0; r < j.size(); ++r) {
        if (j[r].size() != m.cols())
            throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < m.cols(); ++c)
            m.at(r, c) = rational_from_json(j[r][c]);
    }
    return m;
}

json tensor3_to_json(const Tensor3& t)
{
    json a = json::array();
    for (std::size_t i = 0; i < t.dim0(); ++i) {
        json b = json::array();
        for (std::size_t jj = 0; jj < t.dim1(); ++jj) {
            json c = json::array();
            for (std::size_t k = 0; k < t.dim2(); ++k)
                c.push_back(rational_to_json(t.at(i, jj, k)));
            b.push_back(std::move(c));
        }
        a.push_back(std::move(b));
    }
    return a;
}

Tensor3 tensor3_from_json(const json& j)
{
    if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty() || !j[0][0].is_array())
        throw std::invalid_argument("expected rank-3 tensor as nested arrays");
    Tensor3 t(j.size(), j[0].size(), j[0][0].size());
    for (std::size_t i = 0; i < t.dim0(); ++i) {
        if (j[i].size() != t.dim1())
            throw std::invalid_argument("ragged tensor");
        for (std::size_t jj = 0; jj < t.dim1(); ++jj) {
            if (j[i][jj].size() != t.dim2())
                throw std::invalid_argument("ragged tensor");
            for (std::size_t k = 0; k < t.dim2(); ++k)
                t.at(i, jj, k) = rational_from_json(j[i][jj][k]);
        }
    }
    return t;
}

json tensor4_to_json(const Tensor4& t)
{
    json a = json::array();
    for (std::size_t i = 0; i < t.dim0(); ++i) {
        json b = json::array();
        for (std::size_t jj = 0; jj < t.dim1(); ++jj) {
            json c = json::array();
            for (std::size_t k = 0; k < t.dim2(); ++k) {
                json d = json::array();
                for (std::size_t l = 0; l < t.dim3(); ++l)
                    d.push_back(rational_to_json(t.at(i, jj, k, l)));
                c.push_back(std::move(d));
            }
            b.push_back(std::move(c));
        }
        a.push_back(std::move(b));
    }
    return a;
}

Tensor4 tensor4_from_json(const json& j)
{
    if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty() ||
        !j[0][0].is_array() || j[0][0].empty() || !j[0][0][0].is_array())
        throw std::invalid_argument("expected rank-4 tensor as nested arrays");
    Tensor4 t(j.size(), j[0].size(), j[0][0].size(), j[0][0][0].size());
    for (std::size_t i = 0; i < t.dim0(); ++i)
        for (std::size_t jj = 0; jj < t.dim1(); ++jj) {
            if (j[i].size() != t.dim1() || j[i][jj].size() != t.dim2())
                throw std::invalid_argument("ragged tensor");
            for (std::size_t k = 0; k < t.dim2(); ++k) {
                if (j[i][jj][k].size() != t.dim3())
                    throw std::invalid_argument("ragged tensor");
                for (std::size_t l = 0; l < t.dim3(); ++l)
                    t.at(i, jj, k, l) = rational_from_json(j[i][jj][k][l]);
            }
        }
    return t;
}

json algebra_to_json(const BolAlgebra& a, const std::optional<Matrix>& form)
{
    json j;
    j["dimension"] = a.dim;
    j["binary"] = tensor3_to_json(a.binary);
    j["ternary"] = tensor4_to_json(a.ternary);
    if (form)
        j["form"] = matrix_to_json(*form);
    if (!a.labels.empty())
        j["labels"] = a.labels;
    return j;
}

AlgebraFile algebra_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("dimension") || !j["dimension"].is_number_integer() ||
        j["dimension"].get<long long>() <= 0)
        throw std::invalid_argument("algebra JSON needs a positive \"dimension\"");
    std::size_t n = j["dimension"].get<std::size_t>();

    AlgebraFile out;
    out.algebra = BolAlgebra::zero(n);
    if (j.contains("binary"))
        out.algebra.binary = tensor3_from_json(j["binary"]);
    if (j.contains("ternary"))
        out.algebra.ternary = tensor4_from_json(j["ternary"]);
    if (!out.algebra.well_shaped())
        throw std::invalid_argument("algebra tensors do not match \"dimension\"");
    if (j.contains("labels"))
        out.algebra.labels = j["labels"].get<std::vector<std::string>>();
    if (j.contains("form")) {
        Matrix g = matrix_from_json(j["form"]);
        if (g.rows() != n || g.cols() != n)
            throw std::invalid_argument("form shape does not match \"dimension\"");
        out.form = std::move(g);
    }
    return out;
}

json pder_to_json(const PseudoDer& p)
{
    return {{"pi", matrix_to_json(p.pi)}, {"chi", vec_to_json(p.chi)}};
}

PseudoDer pder_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("pi") || !j.contains("chi"))
        throw std::invalid_argument("pseudoderivation JSON needs \"pi\" and \"chi\"");
    PseudoDer p{matrix_from_json(j["pi"]), vec_from_json(j["chi"])};
    if (p.pi.rows() != p.pi.cols() || p.chi.size() != p.pi.rows())
        throw std::invalid_argument("pseudoderivation shapes disagree");
    return p;
}

json representation_to_json(const Representation& rep)
{
    json j;
    j["dimension"] = rep.m;
    json rho = json::array();
    for (const Matrix& r : rep.rho)
        rho.push_back(matrix_to_json(r));
    j["rho"] = std::move(rho);
    json theta = json::array(), d = json::array();
    for (std::size_t i = 0; i < rep.n; ++i) {
        json trow = json::array(), drow = json::array();
        for (std::size_t k = 0; k < rep.n; ++k) {
            trow.push_back(matrix_to_json(rep.theta[i][k]));
            drow.push_back(matrix_to_json(rep.d[i][k]));
        }
        theta.push_back(std::move(trow));
        d.push_back(std::move(drow));
    }
    j["theta"] = std::move(theta);
    j["d"] = std::move(d);
    return j;
}

Representation representation_from_json(const json& j, std::size_t algebra_dim)
{
    if (!j.is_object() || !j.contains("dimension") || !j.contains("rho") || !j.contains("theta"))
        throw std::invalid_argument("representation JSON needs \"dimension\", \"rho\", \"theta\"");
    std::size_t m = j["dimension"].get<std::size_t>();
    Representation rep = Representation::zero(algebra_dim, m);
    if (j["rho"].size() != algebra_dim || j["theta"].size() != algebra_dim)
        throw std::invalid_argument("representation map families must match the algebra dimension");
    for (std::size_t i = 0; i < algebra_dim; ++i)
        rep.rho[i] = matrix_from_json(j["rho"][i]);
    for (std::size_t i = 0; i < algebra_dim; ++i) {
        if (j["theta"][i].size() != algebra_dim)
            throw std::invalid_argument("theta family must be n x n");
        for (std::size_t k = 0; k < algebra_dim; ++k)
            rep.theta[i][k] = matrix_from_json(j["theta"][i][k]);
    }
    if (j.contains("d")) {
        for (std::size_t i = 0; i < algebra_dim; ++i)
            for (std::size_t k = 0; k < algebra_dim; ++k)
                rep.d[i][k] = matrix_from_json(j["d"][i][k]);
    } else {
        // (R1) determines d from theta
        for (std::size_t i = 0; i < algebra_dim; ++i)
            for (std::size_t k = 0; k < algebra_dim; ++k)
                rep.d[i][k] = rep.theta[k][i] - rep.theta[i][k];
    }
    if (!rep.well_shaped())
        throw std::invalid_argument("representation matrices have inconsistent shapes");
    return rep;
}

json cocycle_to_json(const Cocycle23& c)
{
    return {{"nu", tensor3_to_json(c.nu)}, {"omega", tensor4_to_json(c.omega)}};
}

Cocycle23 cocycle_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("nu") || !j.contains("omega"))
        throw std::invalid_argument("cocycle JSON needs \"nu\" and \"omega\"");
    Cocycle23 c{tensor3_from_json(j["nu"]), tensor4_from_json(j["omega"])};
    if (c.nu.dim1() != c.dim() || c.nu.dim2() != c.dim() || c.omega.dim0() != c.dim() ||
        c.omega.dim1() != c.dim() || c.omega.dim2() != c.dim() || c.omega.dim3() != c.dim())
        throw std::invalid_argument("cocycle tensor shapes disagree");
    return c;
}

json report_to_json(const CheckReport& rep)
{
    json j;
    j["pass"] = rep.pass();
    j["total_violations"] = rep.total_violations;
    json counts = json::object();
    for (const auto& [name, count] : rep.identity_counts)
        counts[name] = count;
    j["identity_counts"] = std::move(counts);
    json viols = json::array();
    for (const Violation& v : rep.violations) {
        json e;
        e["identity"] = v.identity;
        e["indices"] = v.indices;
        e["lhs"] = vec_to_json(v.lhs);
        e["rhs"] = vec_to_json(v.rhs);
        e["residual"] = vec_to_json(v.residual);
        viols.push_back(std::move(e));
    }
    j["violations"] = std::move(viols);
    return j;
}

} // namespace bolkit
