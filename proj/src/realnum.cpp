#include "munits/realnum.hpp"

#include <algorithm>

namespace munits {

namespace {
mpfr_prec_t joint(const Real& a, const Real& b) {
    return std::max(a.precision(), b.precision());
}
}  // namespace

Real Real::from_rat(const Rat& q, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

Real Real::from_int(const Int& n, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_z(r.v_, n.get_mpz_t(), MPFR_RNDN);
    return r;
}

Real Real::from_ll(long long n, mpfr_prec_t prec) {
    return from_int(Int(static_cast<long>(n)), prec);
}

Real Real::pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

Real operator+(const Real& a, const Real& b) {
    Real r(joint(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b) {
    Real r(joint(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b) {
    Real r(joint(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b) {
    Real r(joint(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real Real::operator-() const {
    Real r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

Real Real::abs() const {
    Real r(precision());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

Real Real::sqrt() const {
    Real r(precision());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
}

Real Real::log() const {
    Real r(precision());
    mpfr_log(r.v_, v_, MPFR_RNDN);
    return r;
}

Real Real::cos() const {
    Real r(precision());
    mpfr_cos(r.v_, v_, MPFR_RNDN);
    return r;
}

Real Real::sin() const {
    Real r(precision());
    mpfr_sin(r.v_, v_, MPFR_RNDN);
    return r;
}

Real Real::mul_2si(long e) const {
    Real r(precision());
    mpfr_mul_2si(r.v_, v_, e, MPFR_RNDN);
    return r;
}

Real ComplexReal::abs() const {
    return (re * re + im * im).sqrt();
}

ComplexReal operator+(const ComplexReal& a, const ComplexReal& b) {
    return {a.re + b.re, a.im + b.im};
}

ComplexReal operator-(const ComplexReal& a, const ComplexReal& b) {
    return {a.re - b.re, a.im - b.im};
}

ComplexReal operator*(const ComplexReal& a, const ComplexReal& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

}  // namespace munits
