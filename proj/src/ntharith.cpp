#include "munits/ntharith.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace munits {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat make_rat(long long num, long long den) {
    return make_rat(Int(static_cast<long>(num)), Int(static_cast<long>(den)));
}

namespace {

std::mutex factor_mutex;
std::map<Int, std::vector<std::pair<Int, int>>> factor_cache;

std::vector<std::pair<Int, int>> factorize_uncached(Int n) {
    std::vector<std::pair<Int, int>> out;
    auto strip = [&](const Int& d) {
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e > 0) out.emplace_back(d, e);
    };
    strip(2);
    strip(3);
    for (Int d = 5; d * d <= n; d += 6) {
        strip(d);
        strip(d + 2);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

}  // namespace

std::vector<std::pair<Int, int>> factorize(const Int& n) {
    if (n < 1) throw std::invalid_argument("factorize: argument must be positive");
    std::lock_guard<std::mutex> lock(factor_mutex);
    auto it = factor_cache.find(n);
    if (it != factor_cache.end()) return it->second;
    auto fac = factorize_uncached(n);
    factor_cache.emplace(n, fac);
    return fac;
}

int mobius(const Int& n) {
    auto fac = factorize(n);
    for (const auto& [p, e] : fac)
        if (e > 1) return 0;
    return fac.size() % 2 == 0 ? 1 : -1;
}

std::vector<Int> divisors(const Int& n) {
    auto fac = factorize(n);
    std::vector<Int> out{1};
    for (const auto& [p, e] : fac) {
        size_t old = out.size();
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < old; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int sigma1(const Int& n) {
    Int s = 1;
    for (const auto& [p, e] : factorize(n)) {
        Int pk = p, geom = 1 + p;
        for (int k = 2; k <= e; ++k) {
            pk *= p;
            geom += pk;
        }
        s *= geom;
    }
    return s;
}

Rat bernoulli2(const Rat& x) {
    return x * x - x + make_rat(1, 6);
}

}  // namespace munits
