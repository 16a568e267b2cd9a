#ifndef BOLKIT_EXTENSIONS_HPP
#define BOLKIT_EXTENSIONS_HPP

#include "bolkit/forms.hpp"

namespace bolkit {

// (2,3)-cocycle data feeding the T*-extension:
//   nu(e_i, e_j)      = sum_k nu(i,j,k) f_k      (values in T*)
//   omega(e_i,e_j,e_k) = sum_l omega(i,j,k,l) f_l
struct Cocycle23 {
    Tensor3 nu;
    Tensor4 omega;

    static Cocycle23 zero(std::size_t n);
    std::size_t dim() const { return nu.dim0(); }
};

// Tensor symmetries: omega antisymmetric in slots 1,2; cyclic sum of
// omega over slots 1-3 zero; nu antisymmetric. The full cocycle axiom
// list is not checked here; extensions are validated a posteriori by
// check_bol.
CheckReport validate_cocycle_shape(const Cocycle23& c);

enum class BtildeVariant { Paper, Hyperbolic };

struct TStarExtension {
    BolAlgebra algebra;   // dimension 2n, basis (e_1..e_n, f_1..f_n)
    SymForm btilde;
    std::size_t base_dim = 0;
    BtildeVariant variant = BtildeVariant::Paper;
    std::string provenance;
    CheckReport bol_report;  // check_bol of the extension
};

// The double-dimension algebra on T + T*:
//   (x+f) * (y+g)      = x*y + nu(x,y) + f l(y) - g l(x)
//   [[x+f, y+g, z+h]]  = [[x,y,z]] + omega(x,y,z) + f R(z,y) - g R(z,x) + h L(y,x)
// with btilde hyperbolic (f(y)+g(x)) or paper (b(x,y)+f(y)+g(x)).
// Throws on non-quadratic (A,b) or malformed cocycle.
TStarExtension tstar_extend(const BolAlgebra& a, const SymForm& b, const Cocycle23& c,
                            BtildeVariant variant = BtildeVariant::Paper,
                            bool run_check = true);

struct BtildeInvariance {
    bool invariant = false;  // associative + right invariant on the 2n pair
    bool holds45 = false;    // nu(x,y)(z) = nu(y,z)(x)
    bool holds46 = false;    // omega(x,y,z)(u) = omega(u,z,y)(x)
};

// Theorem content: invariant == (holds45 && holds46).
BtildeInvariance check_btilde_invariance(const TStarExtension& ext, const Cocycle23& c);

// Inside the linear space of omega tensors satisfying the two shape
// conditions, the solution subspaces of
//   (4.6) omega(x,y,z)(u) = omega(u,z,y)(x)
//   (4.7) omega(x,y,z)(u) = -omega(x,y,u)(z)
// returned as flattened n^4 coordinate bases. The spans must agree.
std::pair<std::vector<Vec>, std::vector<Vec>> prop42_spaces(std::size_t n);

// Iterated trivial extensions; dimensions n * 2^k.
std::vector<TStarExtension> extension_chain(const BolAlgebra& a, const SymForm& b,
                                            std::size_t depth,
                                            BtildeVariant variant = BtildeVariant::Paper,
                                            bool run_check = true);

} // namespace bolkit

#endif
