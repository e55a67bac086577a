#pragma once

#include "qortho/poly.hpp"

namespace qortho {

/// [n] = 1 + q + ... + q^(n-1); [0] = 0.
Scalar q_int(int n);
/// [n]! = [1][2]...[n].
Scalar q_factorial(int n);
/// Gaussian binomial [n choose k]; 0 when k < 0 or k > n. Memoized.
Scalar q_binomial(int n, int k);
/// (x; q)_n = (1-x)(1-qx)...(1-q^(n-1)x), expanded in x.
Poly q_pochhammer(int n);
/// (a; q)_n evaluated at a scalar argument.
Scalar q_pochhammer_at(const Scalar& a, int n);
/// (q; q)_n.
Scalar q_q_pochhammer(int n);
/// q^binomial(k,2) = q^(k(k-1)/2); k may be negative (the exponent is still
/// a nonnegative integer).
Scalar q_triangular(long k);

/// Ordinary binomial coefficient; 0 when k < 0 or k > n.
mpz_class binom(long n, long k);
/// (2n-1)!! with the empty-product convention (-1)!! = 1.
mpz_class double_factorial_odd(long n);
mpz_class factorial(long n);
mpz_class catalan(long n);

}  // namespace qortho
