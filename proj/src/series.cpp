#include "qortho/series.hpp"

#include "qortho/qcore.hpp"

namespace qortho {

TruncSeries TruncSeries::constant(int order, Poly c0) {
    TruncSeries s(order);
    s.c_[0] = std::move(c0);
    return s;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    for (int i = 0; i <= std::min(order(), o.order()); ++i) c_[i] += o.c_[i];
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
    for (int i = 0; i <= std::min(order(), o.order()); ++i) c_[i] -= o.c_[i];
    return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; i + j <= r.order() && j <= b.order(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

TruncSeries TruncSeries::scaled(const Scalar& k) const {
    TruncSeries r(order());
    for (int i = 0; i <= order(); ++i) r.c_[i] = c_[i].scaled(k);
    return r;
}

TruncSeries TruncSeries::scale_t(const Scalar& a) const {
    TruncSeries r(order());
    Scalar an(1);
    for (int i = 0; i <= order(); ++i) {
        r.c_[i] = c_[i].scaled(an);
        an *= a;
    }
    return r;
}

TruncSeries q_exp_series(int N) { return q_exp_of(N, Poly(1)); }

TruncSeries q_exp_of(int N, const Poly& a) {
    TruncSeries s(N);
    Poly an(1);
    Scalar fact(1);
    for (int n = 0; n <= N; ++n) {
        if (n > 0) {
            an *= a;
            fact *= q_int(n);
        }
        s.at(n) = an.scaled(fact.inverse());
    }
    return s;
}

TruncSeries euler_series(int N) {
    TruncSeries s(N);
    Scalar qq(1);
    for (int n = 0; n <= N; ++n) {
        if (n > 0) qq *= Scalar(1) - Scalar::q_power(n);
        s.at(n) = Poly(qq.inverse());
    }
    return s;
}

TruncSeries euler_alt_series(int N) {
    TruncSeries s(N);
    Scalar qq(1);
    for (int n = 0; n <= N; ++n) {
        if (n > 0) qq *= Scalar(1) - Scalar::q_power(n);
        Scalar c = q_triangular(n) / qq;
        if (n % 2 != 0) c = -c;
        s.at(n) = Poly(c);
    }
    return s;
}

TruncSeries pochhammer_t_series(int k, int N) {
    TruncSeries s = TruncSeries::constant(N, Poly(1));
    for (int i = 0; i < k; ++i) {
        TruncSeries factor = TruncSeries::constant(N, Poly(1));
        if (N >= 1) factor.at(1) = Poly(-Scalar::q_power(i));
        s = s * factor;
    }
    return s;
}

}  // namespace qortho
