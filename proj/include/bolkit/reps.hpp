#ifndef BOLKIT_REPS_HPP
#define BOLKIT_REPS_HPP

#include "bolkit/forms.hpp"

namespace bolkit {

// A quadruple (V, rho, theta, D_theta) in coordinates: n = algebra
// dimension, m = module dimension.
struct Representation {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<Matrix> rho;                 // rho(e_i), m x m
    std::vector<std::vector<Matrix>> theta;  // theta(e_i, e_j)
    std::vector<std::vector<Matrix>> d;      // D_theta(e_i, e_j)

    static Representation zero(std::size_t n, std::size_t m);
    bool well_shaped() const;

    Matrix rho_of(const Vec& x) const;
    Matrix theta_of(std::size_t i, const Vec& y) const;   // theta(e_i, y)
    Matrix theta_of(const Vec& x, std::size_t j) const;   // theta(x, e_j)
    Matrix d_of(const Vec& x, std::size_t j) const;
};

// All six axioms (R1), (R21), (R22), (R31), (R32), (R33) on basis tuples.
CheckReport check_representation(const BolAlgebra& a, const Representation& rep);

// (T, l, R, L): rho = l, theta = R, D = L.
Representation adjoint_rep(const BolAlgebra& a);

// (V*, rho*, -theta* iota, D), matrices in the dual basis:
//   rho'(x) = -rho(x)^T, theta'(x,y) = theta(y,x)^T,
//   d' derived from (R1): d'(x,y) = theta'(y,x) - theta'(x,y).
Representation dual_rep(const Representation& rep);

// dual_rep(adjoint_rep(a)); a genuine representation when the algebra
// carries a quadratic form.
Representation coadjoint_rep(const BolAlgebra& a);

struct Thm34Flags {
    bool cond34 = false;  // rho(u*v)rho(w) + rho(w)rho(u*v) = theta(u*v,w) + theta(w,u*v)
    bool cond35 = false;  // theta(u,v)rho(w) - rho(w)theta(v,u) = 0
};

Thm34Flags check_thm34_conditions(const BolAlgebra& a, const Representation& rep);

// psi rho1(x) = rho2(x) psi and psi theta1(x,y) = theta2(x,y) psi.
bool check_rep_hom(const Representation& rep1, const Representation& rep2, const Matrix& psi);
bool check_rep_iso(const Representation& rep1, const Representation& rep2, const Matrix& psi);

// The Gram matrix viewed as the map T -> T*, x -> b(x, .).
Matrix b_sharp(const SymForm& b);

} // namespace bolkit

#endif
