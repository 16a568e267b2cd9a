#ifndef BOLKIT_ALGEBRA_HPP
#define BOLKIT_ALGEBRA_HPP

#include "bolkit/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bolkit {

// One violated identity instance, with exact residual.
struct Violation {
    std::string identity;
    std::vector<std::size_t> indices;
    Vec lhs;
    Vec rhs;
    Vec residual;
};

// Result of an identity check. Only the first few violations are kept in
// full; counts cover everything.
struct CheckReport {
    static constexpr std::size_t kMaxRecorded = 10;

    std::vector<Violation> violations;
    std::size_t total_violations = 0;
    // (identity name, violation count) in check order.
    std::vector<std::pair<std::string, std::size_t>> identity_counts;

    bool pass() const { return total_violations == 0; }
    std::string first_failed_identity() const;

    void begin_identity(const std::string& name);
    void record(const std::string& identity, std::vector<std::size_t> indices,
                Vec lhs, Vec rhs);
    void merge(const CheckReport& other);
};

// Structure-constant model of (T, *, [[,,]]):
//   e_i * e_j         = sum_k binary(i,j,k) e_k
//   [[e_i, e_j, e_k]] = sum_l ternary(i,j,k,l) e_l
// Tensors are stored raw; the identities are verified by the checkers,
// never normalized away.
struct BolAlgebra {
    std::size_t dim = 0;
    Tensor3 binary;
    Tensor4 ternary;
    std::vector<std::string> labels;

    static BolAlgebra zero(std::size_t n);

    bool well_shaped() const;
    void require_well_shaped() const;

    Vec basis_product(std::size_t i, std::size_t j) const;
    Vec basis_triple(std::size_t i, std::size_t j, std::size_t k) const;
    Vec product(const Vec& x, const Vec& y) const;
    Vec triple(const Vec& x, const Vec& y, const Vec& z) const;
};

Vec basis_vec(std::size_t n, std::size_t i);

// Left/right multiplication and triple-product operator matrices.
struct OperatorViews {
    std::vector<Matrix> l;               // l(e_i): y -> e_i * y
    std::vector<Matrix> r;               // r(e_i): y -> y * e_i
    std::vector<std::vector<Matrix>> L;  // L(e_i,e_j): z -> [[e_i,e_j,z]]
    std::vector<std::vector<Matrix>> R;  // R(e_i,e_j): z -> [[z,e_i,e_j]]
};

OperatorViews operator_views(const BolAlgebra& a);
Matrix l_matrix(const BolAlgebra& a, std::size_t i);
Matrix L_matrix(const BolAlgebra& a, std::size_t i, std::size_t j);
Matrix R_matrix(const BolAlgebra& a, std::size_t i, std::size_t j);

// Verifies T01, T02, T1, T2, T3 on all basis tuples (multilinearity makes
// basis tuples sufficient). Honors BOLKIT_THREADS for the T2/T3 sweeps.
CheckReport check_bol(const BolAlgebra& a);

// Lie-triple-system axioms T02, T1, T2 on the ternary tensor only.
CheckReport check_lts(const BolAlgebra& a);

// Anticommutativity plus the (linearized) Maltsev identity.
CheckReport check_maltsev(const Tensor3& binary);

// x . y := -x*y, <z,x,y> := -[[x,y,z]].
BolAlgebra to_right_bol(const BolAlgebra& a);
// Inverse of to_right_bol; exact round trip.
BolAlgebra to_left_bol(const BolAlgebra& a);

// <x,y,z> = 2(x*y)*z - (y*z)*x - (z*x)*y. Throws if the binary is not
// anticommutative.
Tensor4 lts_from_maltsev(const Tensor3& binary);

// Binary kept, ternary = (1/3) * lts_from_maltsev.
BolAlgebra bol_from_maltsev(const Tensor3& binary);

enum class CanonicalType { I, IIi, IIii };

// Two-dimensional canonical tables. Type I takes (eps1, eps2) from
// {(0,0),(1,0),(-1,0),(1,1),(1,-1),(-1,-1)}; type II(i) takes (beta, eps)
// with eps in {0,1,-1}; type II(ii) ignores the parameters.
BolAlgebra canonical_2d(CanonicalType type, const Rational& p1 = Rational(0),
                        const Rational& p2 = Rational(0));

// kappa(x,y) = tr(l(x) l(y)); the Killing form when the binary is a Lie
// bracket.
Matrix binary_trace_form(const Tensor3& binary);

struct CatalogEntry {
    std::string name;
    std::string description;
    BolAlgebra algebra;
    std::optional<Matrix> form;
};

CatalogEntry catalog(const std::string& name);
std::vector<std::string> catalog_names();

} // namespace bolkit

#endif
