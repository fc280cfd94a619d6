#pragma once

#include <optional>
#include <vector>

#include "munits/closedform.hpp"
#include "munits/realnum.hpp"

namespace munits {

// Growth-bound chain for one index n:
//   |c(n)| <= b1 (triangle inequality over the divisor sums, exact terms
//                 embedded at the working precision)
//        <= b2 = ell * max|m| * sum over d | n of sigma1(n/d)   (exact integer)
//   and for n >= 16, b3 = 4 * ell * max|m| * (log log n)^2.
// chain_ok records |c(n)| <= b1 <= b2 up to a rounding allowance of
// 2^(20 - bits) * b2.
struct BoundReport {
    long long n = 0;
    Real abs_c;
    Real b1;
    Int b2;
    std::optional<Real> b3;
    bool chain_ok = false;
};

struct EnvelopeSummary {
    std::vector<long long> violations;  // n >= 16 with |c(n)| > b3
    Real max_ratio;                     // max of |c(n)| / (log log n)^2 over n >= 16
    long long argmax_n = 0;             // 0 when nmax < 16
};

BoundReport bound_chain(const ExponentVector& v, long long n, mpfr_prec_t bits = 128);

// Reports for n = 1..nmax plus the envelope summary over 16 <= n <= nmax.
std::pair<std::vector<BoundReport>, EnvelopeSummary> envelope_scan(const ExponentVector& v,
                                                                   long long nmax,
                                                                   mpfr_prec_t bits = 128);

}  // namespace munits
