#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "munits/cyclofield.hpp"
#include "munits/unitvec.hpp"

namespace munits {

// Evaluates the closed-form product exponents of the modular unit attached
// to an exponent vector. Interior sums over the second coordinate are
// memoized per (residue rep, phase); the cache is mutex-guarded so a single
// instance may be shared across threads.
class ExponentCalculator {
  public:
    explicit ExponentCalculator(ExponentVector v);

    const ExponentVector& vec() const { return v_; }

    // The single-index kernel t_m(n), m >= 1, n >= 1. Splits on how n sits
    // relative to the level: coprime to p, divisible by p but not by ell,
    // or divisible by ell (where conjugate pairs of the r = 0 entries enter).
    CycNumber t(long long m, long long n) const;

    // F(n) = sum over d | n of t_d(n/d).
    CycNumber aggregate(long long n) const;

    // Product exponent c(n) = (1/n) * sum over d | n of mu(d) F(n/d).
    CycNumber c(long long n) const;

    // (alpha, beta): the fractional order alpha = (1/2) sum m_a B2(r_a/ell)
    // of the unit at the cusp and the leading q-exponent beta = ell * alpha.
    std::pair<Rat, Rat> leading_order() const;

  private:
    const CycNumber& phase_sum(long long key_r, long long phase) const;

    ExponentVector v_;
    Level lv_;
    // support grouped by first coordinate, as (s, m) lists
    std::map<long long, std::vector<std::pair<long long, long long>>> by_r_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<long long, long long>, CycNumber> cache_;
};

// Table of c(1), ..., c(nmax) for one vector.
struct ExponentTable {
    ExponentVector vector;
    long long nmax = 0;
    std::vector<CycNumber> values;  // values[i] = c(i + 1)

    const CycNumber& at(long long n) const { return values.at(n - 1); }
};

ExponentTable compute_table(const ExponentVector& v, long long nmax);

}  // namespace munits
