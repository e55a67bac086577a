#pragma once

#include "qortho/families.hpp"
#include "qortho/poly.hpp"

#include <optional>
#include <vector>

namespace qortho {

/// Lower-triangular coefficient matrix: entry(n, k) is the coefficient of
/// x^k in row polynomial n, carried as a polynomial in s (a plain Scalar when
/// the family has no s). Diagonal entries are nonzero scalars.
class CoeffMatrix {
public:
    explicit CoeffMatrix(int n_max) : rows_(n_max + 1) {
        for (int n = 0; n <= n_max; ++n) rows_[n].resize(n + 1);
    }

    int n_max() const { return static_cast<int>(rows_.size()) - 1; }
    const Poly& entry(int n, int k) const;
    Poly& entry(int n, int k) { return rows_[n][k]; }
    /// Row n reassembled as a polynomial in x (and s).
    Poly row_poly(int n) const;

    friend bool operator==(const CoeffMatrix& a, const CoeffMatrix& b) {
        return a.rows_ == b.rows_;
    }

private:
    std::vector<std::vector<Poly>> rows_;
};

/// Expands rows 0..N of the family's functional basis in the monomial basis.
/// Throws std::domain_error on degree deficiency.
CoeffMatrix coeff_matrix(Family f, int N);
/// Matrix from explicit row polynomials (row n must have degree exactly n).
CoeffMatrix coeff_matrix_from_rows(const std::vector<Poly>& rows);
/// Exact triangular inverse; throws std::domain_error on a zero or
/// non-scalar diagonal entry.
CoeffMatrix umbral_inverse(const CoeffMatrix& m);
/// y(n) = sum_k entry(n,k) x(k).
std::vector<Poly> matrix_apply(const CoeffMatrix& m, const std::vector<Poly>& x);

/// Moment functional: lambda[n] = Lambda(x^n) as a polynomial in s.
struct MomentFunctional {
    Family id;
    std::vector<Poly> lambda;
};

/// Solves Lambda(p_n) = [n = 0] by forward triangular substitution over the
/// family's functional rows; an s value may be substituted first (the
/// Fibonacci/Lucas functionals with integer moment sequences live at s = -1).
MomentFunctional moments(Family f, int N, const std::optional<Scalar>& s_value = std::nullopt);
/// Applies the functional to an arbitrary polynomial in x and s.
Poly apply_functional(const MomentFunctional& mf, const Poly& p);

/// The closed moment formula attached to the family (constant in s when the
/// defining functional fixes s = -1). Throws std::invalid_argument when the
/// family has none.
Poly closed_moment(Family f, int n);
bool has_closed_moment(Family f);
/// The s at which the family's closed moments are stated (nullopt: symbolic).
std::optional<Scalar> closed_moment_s(Family f);

bool family_orthogonal(Family f);

struct GramResult {
    std::vector<Poly> diagonal;   // Lambda(p_n^2), n = 0..N
    bool off_diagonal_zero;       // all Lambda(p_m p_n), m != n, vanish
};
GramResult gram_diagonal(Family f, int N, const std::optional<Scalar>& s_value = std::nullopt);

}  // namespace qortho
