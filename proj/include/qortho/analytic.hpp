#pragma once

#include "qortho/poly.hpp"
#include "qortho/series.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace qortho {

/// Parameters for every numeric evaluation: the (rational) value of q, the
/// infinite-product and series truncation depths, the quadrature panel
/// budget, and the convergence tolerance.
struct NumericConfig {
    mpq_class q = mpq_class(1, 2);
    int trunc_K = 60;   // factors kept of every infinite product
    int trunc_J = 40;   // terms kept of every series
    int panels = 1 << 20;  // quadrature panel budget
    double tol = 1e-10;

    void validate() const;  // throws std::domain_error
    double qd() const { return q.get_d(); }
};

enum class SeriesIdentity { eq_2_16, eq_2_17, eq_2_25, eq_2_26, eq_6_18 };
std::optional<SeriesIdentity> series_identity_from_string(std::string_view id);

struct SeriesVerdict {
    bool pass;
    std::string detail;
};
/// Exact coefficient-wise verification through order N.
SeriesVerdict series_identity_check(SeriesIdentity id, int N);

/// Exact Laurent-polynomial form of the finite triple-product step: both
/// sides multiplied by x^n so everything is an ordinary polynomial.
bool finite_jacobi_check(int n);
/// |partial theta sum - truncated triple product| at the given point.
double jacobi_numeric_residual(const NumericConfig& cfg, double x);

enum class ProductGfId { eq_5_10, eq_6_2 };
struct GfParams {
    double x = 0.0;
    double s = 0.0;
    double t = 0.0;
    double theta = 0.0;
    int n = 0;
};
/// Residual of the generating-function identity at the given numeric point;
/// throws std::domain_error when |t| >= 1.
double product_gf_check(ProductGfId id, const NumericConfig& cfg, const GfParams& p);

/// w(x;q) = (2/pi) sqrt(1-x^2) sum_k (-1)^k q^(C(k+1,2)) U_2k(x), truncated
/// at cfg.trunc_K terms. Throws std::domain_error for x outside [-1,1].
double weight_density(double x, const NumericConfig& cfg);

enum class MeasureKind { qhermite_weight, qhermite_circle, gauss, semicircle, arcsine, wigner };
enum class Integrand { x_power, cheb_t, cheb_u, cosine };
std::optional<MeasureKind> measure_from_string(std::string_view id);

/// Numeric integral of the selected integrand (x^n, T_n, U_n, or cos(n .))
/// against the selected measure, converged by panel doubling; throws
/// std::domain_error on non-convergence within the panel budget.
double quadrature_moment(MeasureKind kind, Integrand f, int n, const NumericConfig& cfg,
                         double s_param = 1.0);

/// Fourier coefficient of the wrapped Gaussian with q = e^(-s):
/// integral of cos(n theta) against the wrapped density over [0, 2pi).
double wrapped_gauss_moment(int n, const NumericConfig& cfg);

/// Pointwise residual of the q-Rodrigues lowering identity at angle theta;
/// throws std::domain_error when sin(theta) is too small.
double q_rodrigues_pointwise(int n, double theta, const NumericConfig& cfg);

/// Composite-Simpson integration with panel doubling until successive
/// estimates differ by less than tol.
double integrate(const std::function<double(double)>& f, double a, double b, double tol,
                 int max_panels);

/// Smallest number of product factors K with tail bound q^K/(1-q) < target.
int factors_for_tail(double q, double target);

}  // namespace qortho
