#pragma once

#include "qortho/poly.hpp"

#include <vector>

namespace qortho {

/// Truncated formal power series in t with Poly coefficients (symbolic x and
/// s permitted); every operation is exact modulo t^(order+1).
class TruncSeries {
public:
    explicit TruncSeries(int order) : c_(order + 1) {}
    static TruncSeries constant(int order, Poly c0);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Poly& at(int k) const { return c_[k]; }
    Poly& at(int k) { return c_[k]; }

    TruncSeries operator-() const;
    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

    TruncSeries scaled(const Scalar& k) const;
    /// t -> a*t (coefficient n picks up a^n).
    TruncSeries scale_t(const Scalar& a) const;

private:
    std::vector<Poly> c_;
};

/// e_q(t): coefficients 1/[n]!.
TruncSeries q_exp_series(int N);
/// e_q(a t): coefficients a^n/[n]!.
TruncSeries q_exp_of(int N, const Poly& a);
/// sum t^n/(q;q)_n.
TruncSeries euler_series(int N);
/// sum (-1)^n q^(C(n,2)) t^n/(q;q)_n.
TruncSeries euler_alt_series(int N);
/// (t;q)_k as a (finite) series.
TruncSeries pochhammer_t_series(int k, int N);

}  // namespace qortho
