#ifndef BOLKIT_TESTS_HELPERS_HPP
#define BOLKIT_TESTS_HELPERS_HPP

#include "bolkit/algebra.hpp"

#include <random>

namespace testutil {

using namespace bolkit;

inline Rational rnd_rational(std::mt19937_64& rng, long lo = -3, long hi = 3,
                             unsigned long maxden = 3)
{
    std::uniform_int_distribution<long> num(lo, hi);
    std::uniform_int_distribution<unsigned long> den(1, maxden);
    return Rational(num(rng), den(rng));
}

inline Matrix rnd_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c)
{
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.at(i, j) = rnd_rational(rng);
    return m;
}

inline Matrix rnd_symmetric(std::mt19937_64& rng, std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            m.at(i, j) = m.at(j, i) = rnd_rational(rng);
    return m;
}

// Solvable Lie bracket: e_1 acts on the abelian ideal span(e_2..e_n) by a
// random matrix; Jacobi holds automatically, but callers should re-verify
// with jacobi_holds.
inline Tensor3 rnd_solvable_lie(std::mt19937_64& rng, std::size_t n)
{
    Tensor3 b(n, n, n);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t k = 1; k < n; ++k) {
            Rational c = rnd_rational(rng);
            b.at(0, i, k) = c;
            b.at(i, 0, k) = -c;
        }
    return b;
}

inline bool jacobi_holds(const Tensor3& b)
{
    const std::size_t n = b.dim0();
    BolAlgebra a = BolAlgebra::zero(n);
    a.binary = b;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec s = vec_add(a.product(a.basis_product(i, j), basis_vec(n, k)),
                                a.product(a.basis_product(j, k), basis_vec(n, i)));
                s = vec_add(s, a.product(a.basis_product(k, i), basis_vec(n, j)));
                if (!vec_is_zero(s))
                    return false;
            }
    return true;
}

// [[x,y,z]] = [x,y] z written out on structure constants.
inline Tensor4 lts_tensor_from_lie(const Tensor3& b)
{
    const std::size_t n = b.dim0();
    Tensor4 c(n, n, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    Rational s = 0;
                    for (std::size_t m = 0; m < n; ++m)
                        s += b.at(i, j, m) * b.at(m, k, l);
                    c.at(i, j, k, l) = s;
                }
    return c;
}

inline BolAlgebra rnd_solvable_lts(std::mt19937_64& rng, std::size_t n)
{
    Tensor3 b = rnd_solvable_lie(rng, n);
    BolAlgebra a = BolAlgebra::zero(n);
    a.ternary = lts_tensor_from_lie(b);
    return a;
}

} // namespace testutil

#endif
