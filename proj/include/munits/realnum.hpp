#pragma once

#include <mpfr.h>

#include "munits/ntharith.hpp"

namespace munits {

// Thin RAII wrapper over an mpfr_t. Binary operations round to nearest at
// the larger precision of the two operands.
class Real {
  public:
    explicit Real(mpfr_prec_t prec = 128) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real from_rat(const Rat& q, mpfr_prec_t prec);
    static Real from_int(const Int& n, mpfr_prec_t prec);
    static Real from_ll(long long n, mpfr_prec_t prec);
    static Real pi(mpfr_prec_t prec);

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    Real operator-() const;

    Real abs() const;
    Real sqrt() const;
    Real log() const;
    Real cos() const;
    Real sin() const;
    // Exact scaling by 2^e.
    Real mul_2si(long e) const;

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }

    int cmp(const Real& o) const { return mpfr_cmp(v_, o.v_); }
    friend bool operator<(const Real& a, const Real& b) { return a.cmp(b) < 0; }
    friend bool operator<=(const Real& a, const Real& b) { return a.cmp(b) <= 0; }
    friend bool operator>(const Real& a, const Real& b) { return a.cmp(b) > 0; }
    friend bool operator>=(const Real& a, const Real& b) { return a.cmp(b) >= 0; }

  private:
    mpfr_t v_;
};

struct ComplexReal {
    Real re, im;
    Real abs() const;
};

ComplexReal operator+(const ComplexReal& a, const ComplexReal& b);
ComplexReal operator-(const ComplexReal& a, const ComplexReal& b);
ComplexReal operator*(const ComplexReal& a, const ComplexReal& b);

}  // namespace munits
