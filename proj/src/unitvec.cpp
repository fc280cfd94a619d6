#include "munits/unitvec.hpp"

#include "munits/ntharith.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace munits {

namespace {

long long mod_nonneg(long long x, long long m) {
    long long r = x % m;
    return r < 0 ? r + m : r;
}

}  // namespace

ExponentVector ExponentVector::empty(const Level& level) {
    return ExponentVector(level);
}

ExponentVector ExponentVector::from_entries(const Level& level,
                                            const std::vector<RawEntry>& entries,
                                            std::vector<std::string>* warnings) {
    ExponentVector v(level);
    for (const auto& e : entries) {
        auto [pt, sign] = canonicalize(level, e.r, e.s);
        (void)sign;  // the exponent is attached to the orbit, not the representative
        v.m_[pt] += e.m;
    }
    for (auto it = v.m_.begin(); it != v.m_.end();) {
        if (it->second == 0) {
            if (warnings)
                warnings->push_back("entries at orbit (" + std::to_string(it->first.r) + ", " +
                                    std::to_string(it->first.s) + ") sum to zero; dropped");
            it = v.m_.erase(it);
        } else {
            ++it;
        }
    }
    return v;
}

long long ExponentVector::lookup(const ResidueClass& cls, long long s) const {
    const long long ell = level_.ell;
    long long key_r, key_s;
    switch (cls.kind) {
        case ResidueKind::Coprime:
            key_r = cls.rep;
            key_s = mod_nonneg(s, ell);
            break;
        case ResidueKind::PDividesNotEll:
            key_s = mod_nonneg(s, ell);
            if (std::gcd(key_s, ell) != 1)
                throw std::invalid_argument("lookup: s must be invertible mod ell here");
            key_r = cls.rep;
            break;
        case ResidueKind::EllDivides:
            if (s < 1 || s > level_.half() || std::gcd(s, ell) != 1)
                throw std::invalid_argument(
                    "lookup: s must be a canonical invertible residue here");
            key_r = 0;
            key_s = s;
            break;
        default:
            throw std::logic_error("lookup: bad residue kind");
    }
    auto it = m_.find(TorsionPoint{key_r, key_s});
    return it == m_.end() ? 0 : it->second;
}

long long ExponentVector::max_abs() const {
    if (m_.empty()) throw std::invalid_argument("max_abs: empty vector");
    long long best = 0;
    for (const auto& [pt, m] : m_) best = std::max(best, std::abs(m));
    return best;
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
    if (!(a.level_ == b.level_))
        throw std::invalid_argument("ExponentVector::add: level mismatch");
    ExponentVector out = a;
    for (const auto& [pt, m] : b.m_) {
        auto [it, inserted] = out.m_.try_emplace(pt, m);
        if (!inserted) {
            it->second += m;
            if (it->second == 0) out.m_.erase(it);
        }
    }
    return out;
}

ValidityReport validate(const ExponentVector& v) {
    const long long ell = v.level().ell;
    Int r2 = 0, s2 = 0, rs = 0, total = 0;
    for (const auto& [pt, m] : v.entries()) {
        Int mm(static_cast<long>(m));
        long r = static_cast<long>(pt.r), s = static_cast<long>(pt.s);
        r2 += mm * r * r;
        s2 += mm * s * s;
        rs += mm * r * s;
        total += mm;
    }
    ValidityReport rep;
    rep.sum_r2 = mpz_fdiv_ui(r2.get_mpz_t(), static_cast<unsigned long>(ell));
    rep.sum_s2 = mpz_fdiv_ui(s2.get_mpz_t(), static_cast<unsigned long>(ell));
    rep.sum_rs = mpz_fdiv_ui(rs.get_mpz_t(), static_cast<unsigned long>(ell));
    rep.sum_m = mpz_fdiv_ui(total.get_mpz_t(), 12);
    rep.valid = rep.sum_r2 == 0 && rep.sum_s2 == 0 && rep.sum_rs == 0 && rep.sum_m == 0;
    return rep;
}

std::vector<ExponentVector> search_valid(const Level& level,
                                         const std::vector<TorsionPoint>& support,
                                         long long bound) {
    if (support.size() > 6)
        throw std::invalid_argument("search_valid: support limited to 6 points");
    if (bound < 0 || bound > 120)
        throw std::invalid_argument("search_valid: bound must be in [0, 120]");
    std::vector<TorsionPoint> canon;
    for (const auto& pt : support) {
        auto [cp, sign] = canonicalize(level, pt.r, pt.s);
        (void)sign;
        if (std::find(canon.begin(), canon.end(), cp) != canon.end())
            throw std::invalid_argument("search_valid: support points must be distinct orbits");
        canon.push_back(cp);
    }

    const long long kmax = bound / 12;
    std::vector<long long> assign(canon.size(), 0);
    std::vector<ExponentVector> found;
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == canon.size()) {
            bool all_zero = std::all_of(assign.begin(), assign.end(),
                                        [](long long m) { return m == 0; });
            if (all_zero) return;
            std::vector<RawEntry> raws;
            for (size_t j = 0; j < canon.size(); ++j)
                raws.push_back(RawEntry{canon[j].r, canon[j].s, assign[j]});
            auto v = ExponentVector::from_entries(level, raws);
            if (validate(v).valid) found.push_back(std::move(v));
            return;
        }
        for (long long k = -kmax; k <= kmax; ++k) {
            assign[i] = 12 * k;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return found;
}

}  // namespace munits
