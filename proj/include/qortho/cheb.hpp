#pragma once

#include "qortho/poly.hpp"

#include <map>

namespace qortho {

enum class ChebBasis { T, U, Monomial };

/// Polynomial held in the Chebyshev-T, Chebyshev-U, or monomial basis with
/// Scalar (Laurent-in-v) coefficients. Indices are nonnegative; zero
/// coefficients are never stored.
class ChebPoly {
public:
    explicit ChebPoly(ChebBasis b = ChebBasis::T) : basis_(b) {}
    static ChebPoly unit(ChebBasis b, int n);

    ChebBasis basis() const { return basis_; }
    bool is_zero() const { return c_.empty(); }
    int max_index() const { return c_.empty() ? -1 : c_.rbegin()->first; }
    const Scalar& coeff(int n) const;
    void add(int n, const Scalar& c);

    ChebPoly operator-() const;
    ChebPoly& operator+=(const ChebPoly& o);
    ChebPoly& operator-=(const ChebPoly& o);
    friend ChebPoly operator+(ChebPoly a, const ChebPoly& b) { return a += b; }
    friend ChebPoly operator-(ChebPoly a, const ChebPoly& b) { return a -= b; }
    friend bool operator==(const ChebPoly& a, const ChebPoly& b) {
        return a.basis_ == b.basis_ && a.c_ == b.c_;
    }
    ChebPoly scaled(const Scalar& k) const;

    /// Multiplication by 2x, staying in the T basis (2x T_m = T_{m+1} + T_{|m-1|}).
    ChebPoly mul_2x_T() const;

    const std::map<int, Scalar>& coeffs() const { return c_; }

private:
    ChebBasis basis_;
    std::map<int, Scalar> c_;
};

/// Exact basis conversion; round-trips exactly.
ChebPoly cheb_convert(const ChebPoly& p, ChebBasis to);
/// The monomial-basis ChebPoly of a univariate Poly in x (no s allowed).
ChebPoly cheb_from_poly(const Poly& p);
Poly cheb_to_poly(const ChebPoly& p);

/// T_n / U_n as Poly in x (recurrence-generated, cached).
const Poly& chebyshev_T(int n);
const Poly& chebyshev_U(int n);

}  // namespace qortho
