#include "munits/closedform.hpp"

#include <stdexcept>

namespace munits {

ExponentCalculator::ExponentCalculator(ExponentVector v)
    : v_(std::move(v)), lv_(v_.level()) {
    for (const auto& [pt, m] : v_.entries()) by_r_[pt.r].emplace_back(pt.s, m);
}

// key_r >= 1: sum of m(key_r, s) * z^(phase * s) over the stored support.
// key_r == 0: sum of m(0, s) * (z^(phase * s) + z^(-phase * s)).
const CycNumber& ExponentCalculator::phase_sum(long long key_r, long long phase) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(key_r, phase);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    CycNumber acc = CycNumber::zero(lv_);
    auto bucket = by_r_.find(key_r);
    if (bucket != by_r_.end()) {
        for (const auto& [s, m] : bucket->second) {
            CycNumber term = CycNumber::root_of_unity(lv_, phase * s);
            if (key_r == 0) term += CycNumber::root_of_unity(lv_, -phase * s);
            term *= make_rat(m, 1);
            acc += term;
        }
    }
    return cache_.emplace(key, std::move(acc)).first->second;
}

CycNumber ExponentCalculator::t(long long m, long long n) const {
    if (m < 1 || n < 1) throw std::invalid_argument("t: indices must be positive");
    auto cls = classify(lv_, n);
    long long phase;
    long long key_r;
    if (cls.kind == ResidueKind::EllDivides) {
        key_r = 0;
        phase = m % lv_.ell;
    } else {
        key_r = cls.rep;
        phase = (epsilon(lv_, n) * m) % lv_.ell;
        if (phase < 0) phase += lv_.ell;
    }
    CycNumber out = phase_sum(key_r, phase);
    out *= make_rat(n, 1);
    return out;
}

CycNumber ExponentCalculator::aggregate(long long n) const {
    if (n < 1) throw std::invalid_argument("aggregate: index must be positive");
    CycNumber acc = CycNumber::zero(lv_);
    for (const Int& d : divisors(Int(static_cast<long>(n)))) {
        long long dd = d.get_si();
        acc += t(dd, n / dd);
    }
    return acc;
}

CycNumber ExponentCalculator::c(long long n) const {
    if (n < 1) throw std::invalid_argument("c: index must be positive");
    CycNumber acc = CycNumber::zero(lv_);
    for (const Int& d : divisors(Int(static_cast<long>(n)))) {
        int mu = mobius(d);
        if (mu == 0) continue;
        long long dd = d.get_si();
        CycNumber part = aggregate(n / dd);
        if (mu < 0)
            acc -= part;
        else
            acc += part;
    }
    acc *= make_rat(1, n);
    return acc;
}

std::pair<Rat, Rat> ExponentCalculator::leading_order() const {
    Rat alpha(0);
    for (const auto& [pt, m] : v_.entries())
        alpha += make_rat(m, 2) * bernoulli2(make_rat(pt.r, lv_.ell));
    Rat beta = alpha * make_rat(lv_.ell, 1);
    return {alpha, beta};
}

ExponentTable compute_table(const ExponentVector& v, long long nmax) {
    if (nmax < 1) throw std::invalid_argument("compute_table: nmax must be positive");
    ExponentCalculator calc(v);
    ExponentTable table{v, nmax, {}};
    table.values.reserve(nmax);
    for (long long n = 1; n <= nmax; ++n) table.values.push_back(calc.c(n));
    return table;
}

}  // namespace munits
