#pragma once

#include <vector>

#include "munits/cyclofield.hpp"
#include "munits/unitvec.hpp"

namespace munits {

// Truncated power series in q with exact cyclotomic coefficients, carrying
// terms q^0 .. q^N for its truncation order N.
class QSeries {
  public:
    QSeries(const Level& level, long long trunc);  // the zero series
    static QSeries one(const Level& level, long long trunc);
    static QSeries monomial(const Level& level, const CycNumber& coeff, long long k,
                            long long trunc);

    const Level& level() const { return lv_; }
    long long truncation() const { return n_; }
    const CycNumber& operator[](long long k) const { return a_.at(k); }
    void set(long long k, CycNumber coeff) { a_.at(k) = std::move(coeff); }

    // Binary operations truncate to the shorter operand.
    friend QSeries operator+(const QSeries& x, const QSeries& y);
    friend QSeries operator-(const QSeries& x, const QSeries& y);
    friend QSeries operator*(const QSeries& x, const QSeries& y);
    QSeries operator-() const;

    // In-place multiplication by (1 - coeff * q^k), 0 <= k <= truncation.
    void mul_one_minus(const CycNumber& coeff, long long k);

    // Multiplicative inverse at the same truncation; requires an invertible
    // constant term.
    QSeries inverse() const;
    // Integer power, square-and-multiply; negative exponents go through
    // inverse().
    QSeries pow(long long e) const;
    // The operator q d/dq: multiplies the q^k coefficient by k.
    QSeries theta() const;

    bool operator==(const QSeries& o) const;

  private:
    Level lv_;
    long long n_;
    std::vector<CycNumber> a_;
};

// The truncated double product attached to one canonical order-ell point
// (r, s): factors (1 - q^(ell*(n-1)+r) z^s)(1 - q^(ell*n-r) z^-s) over
// n >= 1, expanded through q^trunc. The r = 0 case includes the constant
// factor (1 - z^s). No fractional-power prefactor is included.
QSeries siegel_factor(const Level& level, const TorsionPoint& a, long long trunc);

// Product of siegel_factor(a)^m(a) over the vector's support. When
// require_valid is set (the default) the vector must pass validate();
// otherwise throws std::domain_error.
QSeries unit_series(const ExponentVector& v, long long trunc, bool require_valid = true);

// Independent route to the product exponents: reads c(1..nmax) off the
// logarithmic derivative of unit_series(v, nmax) by divisor recursion.
// Index i of the result holds c(i + 1).
std::vector<CycNumber> oracle_c(const ExponentVector& v, long long nmax);

}  // namespace munits
