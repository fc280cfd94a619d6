#include "munits/qseries.hpp"

#include <algorithm>
#include <stdexcept>

#include "munits/ntharith.hpp"

namespace munits {

namespace {

void check_compatible(const QSeries& x, const QSeries& y, const char* op) {
    if (!(x.level() == y.level()))
        throw std::invalid_argument(std::string(op) + ": operands have different levels");
}

}  // namespace

QSeries::QSeries(const Level& level, long long trunc)
    : lv_(level), n_(trunc), a_(trunc + 1, CycNumber::zero(level)) {
    if (trunc < 0) throw std::invalid_argument("QSeries: negative truncation");
}

QSeries QSeries::one(const Level& level, long long trunc) {
    QSeries s(level, trunc);
    s.a_[0] = CycNumber::one(level);
    return s;
}

QSeries QSeries::monomial(const Level& level, const CycNumber& coeff, long long k,
                          long long trunc) {
    QSeries s(level, trunc);
    if (k <= trunc) s.a_[k] = coeff;
    return s;
}

QSeries operator+(const QSeries& x, const QSeries& y) {
    check_compatible(x, y, "QSeries::add");
    QSeries out(x.lv_, std::min(x.n_, y.n_));
    for (long long k = 0; k <= out.n_; ++k) out.a_[k] = x.a_[k] + y.a_[k];
    return out;
}

QSeries operator-(const QSeries& x, const QSeries& y) {
    check_compatible(x, y, "QSeries::sub");
    QSeries out(x.lv_, std::min(x.n_, y.n_));
    for (long long k = 0; k <= out.n_; ++k) out.a_[k] = x.a_[k] - y.a_[k];
    return out;
}

QSeries operator*(const QSeries& x, const QSeries& y) {
    check_compatible(x, y, "QSeries::mul");
    QSeries out(x.lv_, std::min(x.n_, y.n_));
    for (long long i = 0; i <= std::min(x.n_, out.n_); ++i) {
        if (x.a_[i].is_zero()) continue;
        for (long long j = 0; i + j <= out.n_ && j <= y.n_; ++j) {
            if (y.a_[j].is_zero()) continue;
            out.a_[i + j] += x.a_[i] * y.a_[j];
        }
    }
    return out;
}

QSeries QSeries::operator-() const {
    QSeries out(lv_, n_);
    for (long long k = 0; k <= n_; ++k) out.a_[k] = -a_[k];
    return out;
}

void QSeries::mul_one_minus(const CycNumber& coeff, long long k) {
    if (k < 0 || k > n_) throw std::invalid_argument("mul_one_minus: degree out of range");
    if (k == 0) {
        CycNumber factor = CycNumber::one(lv_) - coeff;
        for (auto& c : a_) c *= factor;
        return;
    }
    for (long long n = n_; n >= k; --n) {
        if (a_[n - k].is_zero()) continue;
        a_[n] -= coeff * a_[n - k];
    }
}

QSeries QSeries::inverse() const {
    QSeries out(lv_, n_);
    CycNumber lead = a_[0].inverse();  // throws on zero constant term
    out.a_[0] = lead;
    for (long long n = 1; n <= n_; ++n) {
        CycNumber acc = CycNumber::zero(lv_);
        for (long long k = 1; k <= n; ++k) {
            if (a_[k].is_zero() || out.a_[n - k].is_zero()) continue;
            acc += a_[k] * out.a_[n - k];
        }
        out.a_[n] = -(lead * acc);
    }
    return out;
}

QSeries QSeries::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    QSeries acc = one(lv_, n_);
    QSeries base = *this;
    unsigned long long u = static_cast<unsigned long long>(e);
    while (u > 0) {
        if (u & 1ULL) acc = acc * base;
        if (u >>= 1) base = base * base;
    }
    return acc;
}

QSeries QSeries::theta() const {
    QSeries out(lv_, n_);
    for (long long k = 1; k <= n_; ++k) {
        out.a_[k] = a_[k];
        out.a_[k] *= make_rat(k, 1);
    }
    return out;
}

bool QSeries::operator==(const QSeries& o) const {
    return lv_ == o.lv_ && n_ == o.n_ && a_ == o.a_;
}

QSeries siegel_factor(const Level& level, const TorsionPoint& a, long long trunc) {
    auto [canon, sign] = canonicalize(level, a.r, a.s);
    (void)sign;
    if (!(canon == a))
        throw std::invalid_argument("siegel_factor: point must be a canonical representative");
    QSeries out = QSeries::one(level, trunc);
    CycNumber zs = CycNumber::root_of_unity(level, a.s);
    CycNumber zs_inv = CycNumber::root_of_unity(level, -a.s);
    for (long long k = a.r; k <= trunc; k += level.ell) out.mul_one_minus(zs, k);
    for (long long k = level.ell - a.r; k <= trunc; k += level.ell) out.mul_one_minus(zs_inv, k);
    return out;
}

QSeries unit_series(const ExponentVector& v, long long trunc, bool require_valid) {
    if (require_valid && !validate(v).valid)
        throw std::domain_error("unit_series: exponent vector fails the validity congruences");
    QSeries acc = QSeries::one(v.level(), trunc);
    for (const auto& [pt, m] : v.entries())
        acc = acc * siegel_factor(v.level(), pt, trunc).pow(m);
    return acc;
}

std::vector<CycNumber> oracle_c(const ExponentVector& v, long long nmax) {
    if (nmax < 1) throw std::invalid_argument("oracle_c: nmax must be positive");
    QSeries u = unit_series(v, nmax);
    QSeries g = -(u.theta() * u.inverse());
    if (!g[0].is_zero())
        throw std::logic_error("oracle_c: logarithmic derivative has a constant term");
    std::vector<CycNumber> cs;
    cs.reserve(nmax);
    for (long long n = 1; n <= nmax; ++n) {
        CycNumber acc = g[n];
        for (const Int& d : divisors(Int(static_cast<long>(n)))) {
            long long dd = d.get_si();
            if (dd == n) continue;
            CycNumber part = cs[dd - 1];
            part *= make_rat(dd, 1);
            acc -= part;
        }
        acc *= make_rat(1, n);
        cs.push_back(std::move(acc));
    }
    return cs;
}

}  // namespace munits
