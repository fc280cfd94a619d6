#include "munits/bounds.hpp"

#include <stdexcept>

namespace munits {

namespace {

BoundReport chain_for(const ExponentCalculator& calc, long long n, mpfr_prec_t bits) {
    const Level& lv = calc.vec().level();
    BoundReport rep;
    rep.n = n;
    rep.abs_c = calc.c(n).embed(bits).abs();

    Real b1(bits);
    for (const Int& d : divisors(Int(static_cast<long>(n)))) {
        long long dd = d.get_si();
        for (const Int& k : divisors(Int(static_cast<long>(n / dd)))) {
            long long kk = k.get_si();
            b1 = b1 + calc.t(n / (dd * kk), kk).embed(bits).abs();
        }
    }
    rep.b1 = b1 / Real::from_ll(n, bits);

    long long mu = calc.vec().is_empty() ? 0 : calc.vec().max_abs();
    Int b2 = 0;
    for (const Int& d : divisors(Int(static_cast<long>(n)))) b2 += sigma1(Int(static_cast<long>(n)) / d);
    b2 *= Int(static_cast<long>(lv.ell)) * Int(static_cast<long>(mu));
    rep.b2 = b2;

    if (n >= 16) {
        Real loglog = Real::from_ll(n, bits).log().log();
        rep.b3 = Real::from_ll(4 * lv.ell * mu, bits) * loglog * loglog;
    }

    Real tol = Real::from_int(rep.b2, bits).mul_2si(20 - static_cast<long>(bits));
    Real b2r = Real::from_int(rep.b2, bits);
    rep.chain_ok = rep.abs_c <= rep.b1 + tol && rep.b1 <= b2r + tol;
    return rep;
}

}  // namespace

BoundReport bound_chain(const ExponentVector& v, long long n, mpfr_prec_t bits) {
    if (n < 1) throw std::invalid_argument("bound_chain: n must be positive");
    ExponentCalculator calc(v);
    return chain_for(calc, n, bits);
}

std::pair<std::vector<BoundReport>, EnvelopeSummary> envelope_scan(const ExponentVector& v,
                                                                   long long nmax,
                                                                   mpfr_prec_t bits) {
    if (nmax < 1) throw std::invalid_argument("envelope_scan: nmax must be positive");
    ExponentCalculator calc(v);
    std::vector<BoundReport> reports;
    reports.reserve(nmax);
    EnvelopeSummary summary;
    summary.max_ratio = Real(bits);
    for (long long n = 1; n <= nmax; ++n) {
        reports.push_back(chain_for(calc, n, bits));
        const BoundReport& rep = reports.back();
        if (n >= 16) {
            if (rep.abs_c > *rep.b3) summary.violations.push_back(n);
            Real loglog = Real::from_ll(n, bits).log().log();
            Real ratio = rep.abs_c / (loglog * loglog);
            if (summary.argmax_n == 0 || ratio > summary.max_ratio) {
                summary.max_ratio = ratio;
                summary.argmax_n = n;
            }
        }
    }
    return {reports, summary};
}

}  // namespace munits
