#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace munits {

// Prime-power level ell = p^f with p >= 5 prime.
struct Level {
    long long p = 0;
    long long f = 0;
    long long ell = 0;

    static Level make(long long p, long long f);

    long long phi() const { return ell - ell / p; }          // p^(f-1) * (p-1)
    long long half() const { return (ell - 1) / 2; }
    bool operator==(const Level&) const = default;
};

// Which part of the order-ell torsion a representative (r, s) lives in,
// according to gcd(r, ell): invertible r, noninvertible nonzero r, or r = 0.
enum class Sector { UnitR, CompositeR, ZeroR };

struct TorsionPoint {
    long long r = 0;
    long long s = 0;
    Sector sector = Sector::UnitR;

    friend bool operator==(const TorsionPoint& a, const TorsionPoint& b) {
        return a.r == b.r && a.s == b.s;
    }
    friend auto operator<=>(const TorsionPoint& a, const TorsionPoint& b) {
        if (auto c = a.r <=> b.r; c != 0) return c;
        return a.s <=> b.s;
    }
};

// Builds a point from residues mod ell (any integers), deriving the sector.
TorsionPoint make_point(const Level& level, long long r, long long s);

// Order of (r/ell, s/ell) in (Q/Z)^2, i.e. ell / gcd(r, s, ell).
long long point_order(const Level& level, long long r, long long s);

// Sign attached to residues n with ell not dividing n: +1 on the lower
// half-range [1, (ell-1)/2], -1 on the upper. Throws if ell | n.
int epsilon(const Level& level, long long n);

// The chosen representative of the {+-1}-orbit of (r, s) (must have exact
// order ell), together with the sign carrying (r, s) onto it.
// Representative convention: r in [1, (ell-1)/2] when r != 0, otherwise
// s in [1, (ell-1)/2].
std::pair<TorsionPoint, int> canonicalize(const Level& level, long long r, long long s);

// All canonical representatives of order-ell orbits, UnitR block first,
// then CompositeR, then ZeroR; deterministic order within each block.
std::vector<TorsionPoint> representatives(const Level& level);

enum class ResidueKind { Coprime, PDividesNotEll, EllDivides };

// Classification of an index n >= 1 relative to the level, with the
// canonical residue rep of +-n mod ell (rep = 0 for the EllDivides case).
struct ResidueClass {
    ResidueKind kind = ResidueKind::Coprime;
    long long rep = 0;
    bool operator==(const ResidueClass&) const = default;
};

ResidueClass classify(const Level& level, long long n);

}  // namespace munits
