#pragma once

#include "qortho/poly.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qortho {

/// Every polynomial family, identified by the stable id the CLI uses.
enum class Family {
    hermite_classical,
    hermite_bivar_tilde,
    q_hermite,
    cont_q_hermite,
    physicists_q_hermite,
    fibonacci,
    lucas,
    lucas_star,
    chebyshev_t,
    chebyshev_t_star,
    chebyshev_u,
    rogers_szego,
    q_fibonacci,
    q_lucas,
    monomials,  // x^n; convenience basis for coefficient matrices
};

std::optional<Family> family_from_string(std::string_view id);
std::string_view family_to_string(Family f);
/// The fourteen named families (monomials excluded).
const std::vector<Family>& all_families();

bool family_uses_s(Family f);
/// Fibonacci-style indexing: deg p_n = n - 1 instead of n.
bool family_shifted_degree(Family f);
/// p_n, generated by the family recurrence; memoized and safe to call from
/// several threads.
Poly family_poly(Family f, int n);
/// The same polynomial built directly from the closed-form coefficient rule.
Poly family_closed_form(Family f, int n);
/// Coefficient of s^k x^(n-2k) in the bivariate q-Hermite polynomial.
Scalar q_hermite_coeff(int n, int k);

/// The basis row used for moment functionals and basis expansions: row n has
/// degree exactly n (Fibonacci families shift to F_{n+1}; the Lucas families
/// use the star normalization at n = 0).
Poly functional_row(Family f, int n);

enum class SpecialValueKind { gauss, rs_q2, rs_negq, qh_q2, qh_negq };
std::optional<SpecialValueKind> special_value_from_string(std::string_view id);

/// Both sides of a special evaluation, computed independently (series/
/// recurrence side vs product side).
struct SpecialValue {
    Scalar lhs;
    Scalar rhs;
    bool equal;
};
SpecialValue special_value(SpecialValueKind kind, int n);

}  // namespace qortho
