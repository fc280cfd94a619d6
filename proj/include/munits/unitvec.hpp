#pragma once

#include <map>
#include <string>
#include <vector>

#include "munits/torsion.hpp"

namespace munits {

// One input entry before canonicalization.
struct RawEntry {
    long long r = 0;
    long long s = 0;
    long long m = 0;
};

// The four congruences a vector of exponents must satisfy to define a
// modular unit: the three quadratic sums mod ell and the total mod 12.
// The stored sums are already reduced to [0, modulus).
struct ValidityReport {
    long long sum_r2 = 0;
    long long sum_s2 = 0;
    long long sum_rs = 0;
    long long sum_m = 0;
    bool valid = false;
};

// Finitely supported integer-valued map on canonical order-ell orbit
// representatives. Entries with value zero are never stored.
class ExponentVector {
  public:
    static ExponentVector empty(const Level& level);
    // Canonicalizes each entry's point (keeping m unchanged under the
    // orbit flip), merges duplicates by summing, and drops zero sums.
    // Appends a note to *warnings for every dropped key if provided.
    static ExponentVector from_entries(const Level& level, const std::vector<RawEntry>& entries,
                                       std::vector<std::string>* warnings = nullptr);

    const Level& level() const { return level_; }
    bool is_empty() const { return m_.empty(); }
    size_t size() const { return m_.size(); }
    const std::map<TorsionPoint, long long>& entries() const { return m_; }

    // Exponent attached to the orbit of (rep(cls), s), where s is
    // interpreted per the residue kind:
    //   Coprime       -- any integer, reduced mod ell;
    //   PDividesNotEll -- must be invertible mod ell;
    //   EllDivides    -- must already be a canonical invertible residue
    //                    in [1, (ell-1)/2].
    long long lookup(const ResidueClass& cls, long long s) const;

    // Largest |m| over the support; throws on the empty vector.
    long long max_abs() const;

    friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
    bool operator==(const ExponentVector&) const = default;

  private:
    explicit ExponentVector(const Level& level) : level_(level) {}
    Level level_;
    std::map<TorsionPoint, long long> m_;
};

ValidityReport validate(const ExponentVector& v);

// All valid vectors supported on the given points (each canonicalized;
// must be distinct) with every exponent a multiple of 12 in [-bound, bound].
// The all-zero assignment is excluded. Results are ordered by the exponent
// tuple, ascending. Preconditions: at most 6 support points, bound <= 120.
std::vector<ExponentVector> search_valid(const Level& level,
                                         const std::vector<TorsionPoint>& support,
                                         long long bound);

}  // namespace munits
