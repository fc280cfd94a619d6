#pragma once

#include <string>
#include <vector>

#include "munits/ntharith.hpp"
#include "munits/realnum.hpp"
#include "munits/torsion.hpp"

namespace munits {

// Exact element of the degree-phi(ell) cyclotomic field of level ell = p^f,
// stored on the power basis 1, z, ..., z^(phi-1) where z is a primitive
// ell-th root of unity. All arithmetic is exact rational.
class CycNumber {
  public:
    static CycNumber zero(const Level& level);
    static CycNumber one(const Level& level);
    static CycNumber from_rat(const Level& level, const Rat& q);
    // z^k for any integer k.
    static CycNumber root_of_unity(const Level& level, long long k);
    // Takes coefficients on the power basis (size phi) verbatim.
    static CycNumber from_coeffs(const Level& level, std::vector<Rat> coeffs);

    const Level& level() const { return level_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;  // all basis coefficients beyond the constant vanish

    CycNumber& operator+=(const CycNumber& o);
    CycNumber& operator-=(const CycNumber& o);
    CycNumber& operator*=(const CycNumber& o);
    CycNumber& operator*=(const Rat& q);
    CycNumber operator-() const;

    friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
    friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
    friend CycNumber operator*(CycNumber a, const CycNumber& b) { return a *= b; }
    friend CycNumber operator*(CycNumber a, const Rat& q) { return a *= q; }
    friend CycNumber operator*(const Rat& q, CycNumber a) { return a *= q; }

    bool operator==(const CycNumber& o) const { return level_ == o.level_ && c_ == o.c_; }

    // Galois conjugation z -> z^-1.
    CycNumber conjugate() const;
    // Multiplicative inverse; throws std::domain_error on zero.
    CycNumber inverse() const;
    CycNumber pow(long long e) const;

    // Numerical image under z -> exp(2*pi*i/ell) at the given precision.
    ComplexReal embed(mpfr_prec_t bits) const;

    // Debug/diagnostic rendering "[a0, a1, ...]".
    std::string to_string() const;

  private:
    CycNumber(Level level, std::vector<Rat> c) : level_(level), c_(std::move(c)) {}
    // Folds coefficients of z^e for e >= phi down onto the power basis using
    // z^ell = 1 and the minimal polynomial of z.
    static void reduce(const Level& level, std::vector<Rat>& raw);

    Level level_;
    std::vector<Rat> c_;
};

}  // namespace munits
