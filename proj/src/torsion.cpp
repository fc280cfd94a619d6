#include "munits/torsion.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace munits {

namespace {

constexpr long long kMaxLevel = 1LL << 22;  // keeps ell^2 and phi-sized work sane

bool is_prime_ll(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long long mod_nonneg(long long x, long long m) {
    long long r = x % m;
    return r < 0 ? r + m : r;
}

}  // namespace

Level Level::make(long long p, long long f) {
    if (p == 2 || p == 3 || !is_prime_ll(p))
        throw std::invalid_argument("Level: p must be a prime >= 5, got " + std::to_string(p));
    if (f < 1) throw std::invalid_argument("Level: f must be >= 1");
    long long ell = 1;
    for (long long i = 0; i < f; ++i) {
        if (ell > kMaxLevel / p)
            throw std::invalid_argument("Level: p^f too large");
        ell *= p;
    }
    return Level{p, f, ell};
}

TorsionPoint make_point(const Level& level, long long r, long long s) {
    long long rr = mod_nonneg(r, level.ell);
    long long ss = mod_nonneg(s, level.ell);
    Sector sec;
    if (rr == 0)
        sec = Sector::ZeroR;
    else if (rr % level.p == 0)
        sec = Sector::CompositeR;
    else
        sec = Sector::UnitR;
    return TorsionPoint{rr, ss, sec};
}

long long point_order(const Level& level, long long r, long long s) {
    long long g = std::gcd(std::gcd(mod_nonneg(r, level.ell), mod_nonneg(s, level.ell)), level.ell);
    return level.ell / g;
}

int epsilon(const Level& level, long long n) {
    long long j = mod_nonneg(n, level.ell);
    if (j == 0)
        throw std::invalid_argument("epsilon: undefined when the level divides the argument");
    return j <= level.half() ? 1 : -1;
}

std::pair<TorsionPoint, int> canonicalize(const Level& level, long long r, long long s) {
    if (point_order(level, r, s) != level.ell)
        throw std::invalid_argument("canonicalize: point does not have exact order " +
                                    std::to_string(level.ell));
    long long rr = mod_nonneg(r, level.ell);
    long long ss = mod_nonneg(s, level.ell);
    bool canon = rr != 0 ? rr <= level.half() : ss <= level.half();
    if (canon) return {make_point(level, rr, ss), 1};
    return {make_point(level, level.ell - rr, mod_nonneg(-ss, level.ell)), -1};
}

std::vector<TorsionPoint> representatives(const Level& level) {
    std::vector<TorsionPoint> out;
    long long ell = level.ell, half = level.half();
    for (long long r = 1; r <= half; ++r) {
        if (std::gcd(r, ell) != 1) continue;
        for (long long s = 0; s < ell; ++s) out.push_back(make_point(level, r, s));
    }
    for (long long r = 1; r <= half; ++r) {
        if (std::gcd(r, ell) == 1) continue;
        for (long long s = 0; s < ell; ++s)
            if (std::gcd(s, ell) == 1) out.push_back(make_point(level, r, s));
    }
    for (long long s = 1; s <= half; ++s)
        if (std::gcd(s, ell) == 1) out.push_back(make_point(level, 0, s));
    return out;
}

ResidueClass classify(const Level& level, long long n) {
    if (n < 1) throw std::invalid_argument("classify: argument must be positive");
    long long j = mod_nonneg(n, level.ell);
    if (j == 0) return ResidueClass{ResidueKind::EllDivides, 0};
    long long rep = j <= level.half() ? j : level.ell - j;
    ResidueKind kind = n % level.p == 0 ? ResidueKind::PDividesNotEll : ResidueKind::Coprime;
    return ResidueClass{kind, rep};
}

}  // namespace munits
