#ifndef BOLKIT_FORMS_HPP
#define BOLKIT_FORMS_HPP

#include "bolkit/algebra.hpp"

namespace bolkit {

// A candidate symmetric bilinear form, stored as its Gram matrix
// gram(i, j) = b(e_i, e_j).
struct SymForm {
    Matrix gram;

    std::size_t dim() const { return gram.rows(); }
    bool is_symmetric() const { return gram.is_symmetric(); }
    bool is_nondegenerate() const { return !determinant(gram).is_zero(); }
};

// Solution space of a set of linear conditions on symmetric forms.
struct FormSpace {
    std::vector<SymForm> basis;
    bool exists_nondeg = false;
};

struct QuadraticVerdict {
    bool pass = false;
    std::string reason; // first failing requirement, empty on pass
};

// b(x*y, z) = b(x, y*z) on basis triples.
CheckReport check_associative(const BolAlgebra& a, const SymForm& b);

// b([[x,y,z]], u) = b([[z,u,x]], y) on basis 4-tuples.
CheckReport check_right_invariant(const BolAlgebra& a, const SymForm& b);

// b([[x,y,z]], u) = -b(z, [[x,y,u]]) on basis 4-tuples.
CheckReport check_left_invariant(const BolAlgebra& a, const SymForm& b);

// Symmetry, nondegeneracy, the associative condition, and the right
// invariant condition, in that order.
QuadraticVerdict check_quadratic(const BolAlgebra& a, const SymForm& b);

// Basis of the symmetric forms satisfying both invariance conditions,
// plus the generic-nondegeneracy decision.
FormSpace invariant_form_space(const BolAlgebra& a);

// The two invariance conditions solved independently over symmetric
// forms; for a Lie triple system the spans must coincide.
std::pair<std::vector<SymForm>, std::vector<SymForm>>
lemma22_solution_spaces(const BolAlgebra& a);

// Given b left-invariant on the ternary part, verifies the quadrilinear
// form K(x,y,z,u) = b([[x,y,z]], u): antisymmetry in slots (1,2) and
// (3,4), the cyclic identity, and pair exchange. Throws if b fails the
// precondition.
CheckReport k_tensor_checks(const BolAlgebra& a, const SymForm& b);

// kappa(x,y) = trace of w -> [[x,w,y]]; a candidate form, its invariance
// is decided by the checkers. Throws on non-LTS input.
SymForm lts_trace_form(const BolAlgebra& a);

// The span h of the pairs (L(e_i,e_j), e_i*e_j) inside End(T)+T, with the
// form beta(g1, g2) = b(L(u,v)(x), y) evaluated on generators.
struct BetaExtension {
    std::vector<Vec> h_basis;      // coordinates in End(T)+T, length n^2+n
    Matrix beta_gram;              // on the ordered generators (i<j)
    std::vector<std::pair<std::size_t, std::size_t>> generators;
    bool well_defined = false;     // beta vanishes on all generator relations
    bool symmetric = false;
};

BetaExtension beta_extension(const BolAlgebra& a, const SymForm& b);

// Flattened coordinates of (L(e_i,e_j), e_i*e_j) in End(T)+T.
Vec inner_pair_coords(const BolAlgebra& a, std::size_t i, std::size_t j);

// Basis of the n(n+1)/2-dimensional space of all symmetric Gram matrices.
std::vector<Matrix> symmetric_basis(std::size_t n);

} // namespace bolkit

#endif
