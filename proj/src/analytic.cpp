#include "qortho/analytic.hpp"

#include "qortho/families.hpp"
#include "qortho/qcore.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace qortho {

namespace {
using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
}

void NumericConfig::validate() const {
    if (!(q > 0 && q < 1)) throw std::domain_error("NumericConfig: q must lie in (0,1)");
    if (trunc_K < 1 || trunc_J < 1 || panels < 1)
        throw std::domain_error("NumericConfig: truncation parameters must be >= 1");
    if (!(tol > 0)) throw std::domain_error("NumericConfig: tol must be positive");
}

std::optional<SeriesIdentity> series_identity_from_string(std::string_view id) {
    if (id == "eq_2_16") return SeriesIdentity::eq_2_16;
    if (id == "eq_2_17") return SeriesIdentity::eq_2_17;
    if (id == "eq_2_25") return SeriesIdentity::eq_2_25;
    if (id == "eq_2_26") return SeriesIdentity::eq_2_26;
    if (id == "eq_6_18") return SeriesIdentity::eq_6_18;
    return std::nullopt;
}

namespace {

SeriesVerdict verdict(bool pass, const std::string& ok, const std::string& bad) {
    return SeriesVerdict{pass, pass ? ok : bad};
}

// w(n) = sum_k (-1)^k [n,k] q^((k^2+3k)/2 - nk); the exponent may be negative.
Scalar w_coefficient(int n) {
    Scalar acc;
    for (int k = 0; k <= n; ++k) {
        long e = static_cast<long>(k) * (k + 3) / 2 - static_cast<long>(n) * k;
        Scalar term = q_binomial(n, k) * Scalar::v_power(2 * e);
        acc += (k % 2 != 0) ? -term : term;
    }
    return acc;
}

}  // namespace

SeriesVerdict series_identity_check(SeriesIdentity id, int N) {
    switch (id) {
        case SeriesIdentity::eq_2_16: {
            // sum R_n t^n/[n]! = e(xt) e(st)
            TruncSeries lhs(N);
            for (int n = 0; n <= N; ++n)
                lhs.at(n) = family_poly(Family::rogers_szego, n).scaled(q_factorial(n).inverse());
            TruncSeries rhs = q_exp_of(N, Poly::x()) * q_exp_of(N, Poly::s());
            return verdict(lhs == rhs, "coefficients match through order " + std::to_string(N),
                           "coefficient mismatch");
        }
        case SeriesIdentity::eq_2_17: {
            // e(t) * sum (-1)^n q^C(n,2) t^n/[n]! = 1
            TruncSeries alt(N);
            for (int n = 0; n <= N; ++n) {
                Scalar c = q_triangular(n) / q_factorial(n);
                alt.at(n) = Poly(n % 2 != 0 ? -c : c);
            }
            TruncSeries prod = q_exp_series(N) * alt;
            return verdict(prod == TruncSeries::constant(N, Poly(1)),
                           "product telescopes to 1 through order " + std::to_string(N),
                           "product is not 1");
        }
        case SeriesIdentity::eq_2_25: {
            // (t;q)_k * sum t^n/(q;q)_n = sum (q^k t)^n/(q;q)_n for k = 1..4
            TruncSeries base = euler_series(N);
            for (int k = 1; k <= 4; ++k) {
                TruncSeries lhs = pochhammer_t_series(k, N) * base;
                TruncSeries rhs = base.scale_t(Scalar::q_power(k));
                if (!(lhs == rhs)) return verdict(false, "", "telescoping fails at k=" + std::to_string(k));
            }
            return verdict(true, "telescoping holds for k <= 4, order " + std::to_string(N), "");
        }
        case SeriesIdentity::eq_2_26: {
            // S(t) = (t;q)_k S(q^k t) for S = sum (-1)^n q^C(n,2) t^n/(q;q)_n
            TruncSeries base = euler_alt_series(N);
            for (int k = 1; k <= 4; ++k) {
                TruncSeries rhs = pochhammer_t_series(k, N) * base.scale_t(Scalar::q_power(k));
                if (!(base == rhs)) return verdict(false, "", "product form fails at k=" + std::to_string(k));
            }
            return verdict(true, "product functional equation holds for k <= 4, order " + std::to_string(N), "");
        }
        case SeriesIdentity::eq_6_18: {
            if (!(w_coefficient(0) == Scalar(1))) return verdict(false, "", "w(0) != 1");
            if (!(w_coefficient(1) == Scalar(1) - Scalar::q())) return verdict(false, "", "w(1) != 1-q");
            for (int n = 2; n <= N; ++n)
                if (!w_coefficient(n).is_zero())
                    return verdict(false, "", "w(" + std::to_string(n) + ") != 0");
            return verdict(true, "w(0)=1, w(1)=1-q, w(n)=0 for 2<=n<=" + std::to_string(N), "");
        }
    }
    throw std::invalid_argument("series_identity_check: unknown identity");
}

bool finite_jacobi_check(int n) {
    // x^n * prod_{l=1..n} (1 - q^l/x) * prod_{l=0..n-1} (1 - q^l x)
    //   = sum_{j=-n..n} (-1)^j q^C(j,2) [2n, n+j] x^(n+j)
    Poly lhs(1);
    for (int l = 1; l <= n; ++l) lhs *= Poly::x() - Poly(Scalar::q_power(l));
    for (int l = 0; l < n; ++l) lhs *= Poly(1) - Poly::x().scaled(Scalar::q_power(l));
    Poly rhs;
    for (int j = -n; j <= n; ++j) {
        Scalar c = q_triangular(j) * q_binomial(2 * n, n + j);
        if ((j % 2 + 2) % 2 == 1) c = -c;
        rhs += Poly::monomial(c, n + j);
    }
    return lhs == rhs;
}

namespace {

double pochhammer_real(double a, double q, int K) {
    double p = 1.0;
    double f = a;
    for (int i = 0; i < K; ++i) {
        p *= 1.0 - f;
        f *= q;
    }
    return p;
}

cplx pochhammer_cplx(cplx a, double q, int K) {
    cplx p = 1.0;
    cplx f = a;
    for (int i = 0; i < K; ++i) {
        p *= 1.0 - f;
        f *= q;
    }
    return p;
}

// H_n(x, s, q) by the recurrence, complex argument allowed.
template <typename T>
T q_hermite_num(int n, T x, T s, double q) {
    T p0 = 1.0, p1 = x;
    if (n == 0) return p0;
    double qn = q;
    for (int m = 2; m <= n; ++m) {
        T next = x * p1 - (1.0 - qn) * s * p0;
        p0 = p1;
        p1 = next;
        qn *= q;
    }
    return p1;
}

// H_n(x | q) = H_n(2x, 1, q).
template <typename T>
T cont_q_hermite_num(int n, T x, double q) {
    return q_hermite_num<T>(n, 2.0 * x, T(1.0), q);
}

double cheb_t_num(int n, double x) {
    double p0 = 1.0, p1 = x;
    if (n == 0) return p0;
    for (int m = 2; m <= n; ++m) {
        double next = 2.0 * x * p1 - p0;
        p0 = p1;
        p1 = next;
    }
    return p1;
}

double cheb_u_num(int n, double x) {
    double p0 = 1.0, p1 = 2.0 * x;
    if (n < 0) return 0.0;
    if (n == 0) return p0;
    for (int m = 2; m <= n; ++m) {
        double next = 2.0 * x * p1 - p0;
        p0 = p1;
        p1 = next;
    }
    return p1;
}

}  // namespace

double jacobi_numeric_residual(const NumericConfig& cfg, double x) {
    cfg.validate();
    const double q = cfg.qd();
    double sum = 0.0;
    for (int k = -cfg.trunc_K; k <= cfg.trunc_K; ++k) {
        double term = std::pow(q, 0.5 * k * (k - 1)) * std::pow(x, k);
        if (k % 2 != 0) term = -term;
        sum += term;
    }
    double prod = pochhammer_real(x, q, cfg.trunc_K) * pochhammer_real(q / x, q, cfg.trunc_K) *
                  pochhammer_real(q, q, cfg.trunc_K);
    return std::abs(sum - prod);
}

double product_gf_check(ProductGfId id, const NumericConfig& cfg, const GfParams& p) {
    cfg.validate();
    const double q = cfg.qd();
    switch (id) {
        case ProductGfId::eq_5_10: {
            if (std::abs(p.t) >= 1.0)
                throw std::domain_error("product_gf_check: |t| must be < 1");
            double prod = 1.0;
            double qn = 1.0;
            for (int k = 0; k < cfg.trunc_K; ++k) {
                prod /= 1.0 - qn * p.x * p.t + qn * qn * p.s * p.t * p.t;
                qn *= q;
            }
            double sum = 0.0;
            double tn = 1.0, qq = 1.0, qpow = 1.0;
            for (int n = 0; n <= cfg.trunc_J; ++n) {
                if (n > 0) {
                    tn *= p.t;
                    qq *= 1.0 - qpow * q;
                    qpow *= q;
                }
                sum += q_hermite_num<double>(n, p.x, p.s, q) * tn / qq;
            }
            return std::abs(prod - sum);
        }
        case ProductGfId::eq_6_2: {
            double lhs = cont_q_hermite_num<double>(p.n, std::cos(p.theta), q);
            cplx rhs = 0.0;
            for (int k = 0; k <= p.n; ++k) {
                double b = q_binomial(p.n, k).eval_double_q(q);
                rhs += b * std::exp(cplx(0.0, (p.n - 2.0 * k) * p.theta));
            }
            return std::abs(cplx(lhs) - rhs);
        }
    }
    throw std::invalid_argument("product_gf_check: unknown identity");
}

namespace {

// sum_k (-1)^k q^C(k+1,2) sin((2k+1) theta), truncated when the q-power
// underflows; q^C(k+1,2) decays like q^(k^2/2).
double weight_sine_series(double theta, double q, int K) {
    double acc = 0.0;
    for (int k = 0; k <= K; ++k) {
        double w = std::pow(q, 0.5 * k * (k + 1));
        if (w < 1e-300) break;
        double term = w * std::sin((2 * k + 1) * theta);
        acc += (k % 2 != 0) ? -term : term;
    }
    return acc;
}

}  // namespace

double weight_density(double x, const NumericConfig& cfg) {
    // q = 0 is admitted here (the series collapses to the semicircle term);
    // everything else follows the shared config contract.
    if (!(cfg.q >= 0 && cfg.q < 1)) throw std::domain_error("weight_density: q outside [0, 1)");
    if (cfg.trunc_K < 1) throw std::domain_error("weight_density: trunc_K must be >= 1");
    if (x < -1.0 || x > 1.0) throw std::domain_error("weight_density: x outside [-1, 1]");
    const double q = cfg.qd();
    double acc = 0.0;
    for (int k = 0; k <= cfg.trunc_K; ++k) {
        double w = std::pow(q, 0.5 * k * (k + 1));
        if (w < 1e-300) break;
        double term = w * cheb_u_num(2 * k, x);
        acc += (k % 2 != 0) ? -term : term;
    }
    return 2.0 / kPi * std::sqrt(1.0 - x * x) * acc;
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol,
                 int max_panels) {
    auto simpson = [&](int panels) {
        const double h = (b - a) / panels;
        double acc = f(a) + f(b);
        for (int i = 1; i < panels; ++i) acc += f(a + i * h) * (i % 2 == 0 ? 2.0 : 4.0);
        return acc * h / 3.0;
    };
    int panels = 8;
    double prev = simpson(panels);
    while (panels < max_panels) {
        panels *= 2;
        double cur = simpson(panels);
        if (std::abs(cur - prev) < tol) return cur;
        prev = cur;
    }
    throw std::domain_error("integrate: no convergence within panel budget");
}

int factors_for_tail(double q, double target) {
    if (!(q > 0 && q < 1) || !(target > 0)) throw std::domain_error("factors_for_tail: bad arguments");
    int k = static_cast<int>(std::ceil(std::log(target * (1.0 - q)) / std::log(q)));
    return std::max(k, 1);
}

std::optional<MeasureKind> measure_from_string(std::string_view id) {
    if (id == "qhermite_weight") return MeasureKind::qhermite_weight;
    if (id == "qhermite_circle") return MeasureKind::qhermite_circle;
    if (id == "gauss") return MeasureKind::gauss;
    if (id == "semicircle") return MeasureKind::semicircle;
    if (id == "arcsine") return MeasureKind::arcsine;
    if (id == "wigner") return MeasureKind::wigner;
    return std::nullopt;
}

namespace {

// Evaluates the integrand at measure coordinate x (theta supplied for the
// cosine kind).
double integrand_eval(Integrand f, int n, double x, double theta) {
    switch (f) {
        case Integrand::x_power: return std::pow(x, n);
        case Integrand::cheb_t: return cheb_t_num(n, x);
        case Integrand::cheb_u: return cheb_u_num(n, x);
        case Integrand::cosine: return std::cos(n * theta);
    }
    return 0.0;
}

}  // namespace

double quadrature_moment(MeasureKind kind, Integrand f, int n, const NumericConfig& cfg,
                         double s_param) {
    cfg.validate();
    const double q = cfg.qd();
    const double tol = std::min(cfg.tol, 1e-10);
    switch (kind) {
        case MeasureKind::qhermite_weight: {
            auto g = [&](double theta) {
                double x = std::cos(theta);
                return integrand_eval(f, n, x, theta) * 2.0 / kPi * std::sin(theta) *
                       weight_sine_series(theta, q, cfg.trunc_K);
            };
            return integrate(g, 0.0, kPi, tol, cfg.panels);
        }
        case MeasureKind::qhermite_circle: {
            double qq_inf = pochhammer_real(q, q, cfg.trunc_K);
            auto g = [&](double theta) {
                cplx z2 = std::exp(cplx(0.0, 2.0 * theta));
                double carrier =
                    std::real(pochhammer_cplx(z2, q, cfg.trunc_K) *
                              pochhammer_cplx(std::conj(z2), q, cfg.trunc_K));
                return integrand_eval(f, n, std::cos(theta), theta) * carrier;
            };
            return qq_inf / (2.0 * kPi) * integrate(g, 0.0, kPi, tol, cfg.panels);
        }
        case MeasureKind::gauss: {
            const double L = 12.0 * std::max(1.0, std::sqrt(s_param));
            auto g = [&](double x) {
                return integrand_eval(f, n, x, 0.0) * std::exp(-x * x / (2.0 * s_param)) /
                       std::sqrt(2.0 * kPi * s_param);
            };
            return integrate(g, -L, L, tol, cfg.panels);
        }
        case MeasureKind::semicircle: {
            auto g = [&](double theta) {
                double sin_t = std::sin(theta);
                return integrand_eval(f, n, 2.0 * std::cos(theta), theta) * 2.0 / kPi * sin_t *
                       sin_t;
            };
            return integrate(g, 0.0, kPi, tol, cfg.panels);
        }
        case MeasureKind::arcsine: {
            auto g = [&](double theta) {
                return integrand_eval(f, n, std::cos(theta), theta) / kPi;
            };
            return integrate(g, 0.0, kPi, tol, cfg.panels);
        }
        case MeasureKind::wigner: {
            auto g = [&](double theta) {
                double sin_t = std::sin(theta);
                return integrand_eval(f, n, std::cos(theta), theta) * 2.0 / kPi * sin_t * sin_t;
            };
            return integrate(g, 0.0, kPi, tol, cfg.panels);
        }
    }
    throw std::invalid_argument("quadrature_moment: unknown measure");
}

double wrapped_gauss_moment(int n, const NumericConfig& cfg) {
    cfg.validate();
    const double q = cfg.qd();
    const double s = -std::log(q);
    const int images = std::max(3, static_cast<int>(std::ceil(std::sqrt(2.0 * s * 50.0) / (2.0 * kPi))) + 2);
    auto density = [&](double theta) {
        double acc = 0.0;
        for (int j = -images; j <= images; ++j) {
            double d = theta - 2.0 * kPi * j;
            acc += std::exp(-d * d / (2.0 * s));
        }
        return acc / std::sqrt(2.0 * kPi * s);
    };
    auto g = [&](double theta) { return std::cos(n * theta) * density(theta); };
    return integrate(g, 0.0, 2.0 * kPi, std::min(cfg.tol, 1e-10), cfg.panels);
}

double q_rodrigues_pointwise(int n, double theta, const NumericConfig& cfg) {
    cfg.validate();
    if (std::abs(std::sin(theta)) < 1e-6)
        throw std::domain_error("q_rodrigues_pointwise: theta too close to 0 or pi");
    const double q = cfg.qd();
    const double v = std::sqrt(q);
    const cplx i(0.0, 1.0);
    auto carrier = [&](cplx z) {
        cplx z2 = z * z;
        cplx sin_z = (z - 1.0 / z) / (2.0 * i);
        return pochhammer_cplx(z2, q, cfg.trunc_K) * pochhammer_cplx(1.0 / z2, q, cfg.trunc_K) /
               sin_z;
    };
    auto F = [&](cplx z) {
        cplx x = (z + 1.0 / z) / 2.0;
        return carrier(z) * q_hermite_num<cplx>(n, 2.0 * x, cplx(1.0), q);
    };
    cplx z = std::exp(i * theta);
    cplx delta = F(v * z) - F(z / v);
    cplx lhs = delta / (i * (v - 1.0 / v) * std::sin(theta));
    cplx x0 = (z + 1.0 / z) / 2.0;
    cplx rhs = -2.0 / (1.0 - q) * carrier(z) *
               q_hermite_num<cplx>(n + 1, 2.0 * x0, cplx(1.0), q) / std::pow(q, 0.5 * n);
    return std::abs(lhs - rhs);
}

}  // namespace qortho
