#ifndef BOLKIT_PDER_HPP
#define BOLKIT_PDER_HPP

#include "bolkit/forms.hpp"

namespace bolkit {

// A linear map with companion vector, candidate for the two
// pseudoderivation identities.
struct PseudoDer {
    Matrix pi;
    Vec chi;
};

// Verifies
//   Pi(x*y) = Pi(x)*y + x*Pi(y) + [[x,y,chi]] - (x*y)*chi
//   Pi([[x,y,z]]) = [[Pi(x),y,z]] + [[x,Pi(y),z]] + [[x,y,Pi(z)]]
// on all basis pairs / triples.
CheckReport is_pseudoderivation(const BolAlgebra& a, const PseudoDer& p);

// Basis of the joint solution space in (Pi, chi); both identities are
// linear, so this is one nullspace over n^2 + n unknowns.
std::vector<PseudoDer> pder_space(const BolAlgebra& a);

// The inner pair (L(e_i,e_j), e_i*e_j).
PseudoDer inner_pder(const BolAlgebra& a, std::size_t i, std::size_t j);

// phi(Pi)(x,y) = b(Pi(x),y) + b(x,Pi(y)); Gram matrix Pi^T G + G Pi.
SymForm phi(const SymForm& b, const PseudoDer& p);

bool is_b_symmetric(const SymForm& b, const Matrix& f);
bool is_b_skew(const SymForm& b, const Matrix& f);

// The content of Proposition 2.5: phi(Pi) always satisfies the left
// invariant condition; it satisfies the associative condition iff every
// R_chi(w) = R(w,chi) - r(chi) r(w) is b-skew-symmetric.
struct Prop25Flags {
    bool phi_satisfies_24 = false;
    bool phi_satisfies_22 = false;
    bool rchi_all_skew = false;
};

Prop25Flags check_prop25(const BolAlgebra& a, const SymForm& b, const PseudoDer& p);

// Matrix of z -> [[z, e_w, chi]] - (z * e_w) * chi.
Matrix rchi_matrix(const BolAlgebra& a, const Vec& chi, std::size_t w);

// Rank-nullity data of phi on the pseudoderivation space.
struct ExactSequenceDims {
    std::size_t dim_pder = 0;
    std::size_t dim_kernel = 0;
    std::size_t dim_image = 0;
    std::vector<PseudoDer> kernel_basis;
};

ExactSequenceDims exact_sequence_dims(const BolAlgebra& a, const SymForm& b);

// Flattened (Pi, chi) coordinates, length n^2 + n.
Vec pder_coords(const PseudoDer& p);
PseudoDer pder_from_coords(std::size_t n, const Vec& v);

} // namespace bolkit

#endif
