#include "munits/cyclofield.hpp"

#include <sstream>
#include <stdexcept>

namespace munits {

namespace {

void check_same_level(const Level& a, const Level& b, const char* op) {
    if (!(a == b))
        throw std::invalid_argument(std::string(op) + ": operands have different levels");
}

}  // namespace

CycNumber CycNumber::zero(const Level& level) {
    return CycNumber(level, std::vector<Rat>(level.phi()));
}

CycNumber CycNumber::one(const Level& level) {
    auto x = zero(level);
    x.c_[0] = 1;
    return x;
}

CycNumber CycNumber::from_rat(const Level& level, const Rat& q) {
    auto x = zero(level);
    x.c_[0] = q;
    return x;
}

CycNumber CycNumber::from_coeffs(const Level& level, std::vector<Rat> coeffs) {
    if (static_cast<long long>(coeffs.size()) != level.phi())
        throw std::invalid_argument("from_coeffs: expected phi(ell) coefficients");
    return CycNumber(level, std::move(coeffs));
}

void CycNumber::reduce(const Level& level, std::vector<Rat>& raw) {
    const long long phi = level.phi();
    const long long ell = level.ell;
    const long long step = ell / level.p;  // p^(f-1)
    if (static_cast<long long>(raw.size()) < phi) raw.resize(phi);
    for (long long e = static_cast<long long>(raw.size()) - 1; e >= phi; --e) {
        if (raw[e] == 0) continue;
        Rat c = std::move(raw[e]);
        raw[e] = 0;
        if (e >= ell) {
            raw[e - ell] += c;
        } else {
            // z^e = -(z^(e-phi) + z^(e-phi+step) + ... ), p-1 terms
            for (long long j = 0; j < level.p - 1; ++j) raw[e - phi + j * step] -= c;
        }
    }
    raw.resize(phi);
}

CycNumber CycNumber::root_of_unity(const Level& level, long long k) {
    long long kk = k % level.ell;
    if (kk < 0) kk += level.ell;
    std::vector<Rat> raw(std::max<long long>(level.phi(), kk + 1));
    raw[kk] = 1;
    reduce(level, raw);
    return CycNumber(level, std::move(raw));
}

bool CycNumber::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

bool CycNumber::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
    check_same_level(level_, o.level_, "CycNumber::add");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& o) {
    check_same_level(level_, o.level_, "CycNumber::sub");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycNumber& CycNumber::operator*=(const CycNumber& o) {
    check_same_level(level_, o.level_, "CycNumber::mul");
    const size_t phi = c_.size();
    std::vector<Rat> raw(2 * phi - 1);
    for (size_t i = 0; i < phi; ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < phi; ++j) {
            if (o.c_[j] == 0) continue;
            raw[i + j] += c_[i] * o.c_[j];
        }
    }
    reduce(level_, raw);
    c_ = std::move(raw);
    return *this;
}

CycNumber& CycNumber::operator*=(const Rat& q) {
    for (auto& x : c_) x *= q;
    return *this;
}

CycNumber CycNumber::operator-() const {
    CycNumber r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycNumber CycNumber::conjugate() const {
    const long long ell = level_.ell;
    std::vector<Rat> raw(ell);
    raw[0] = c_[0];
    for (size_t j = 1; j < c_.size(); ++j) raw[ell - j] += c_[j];
    reduce(level_, raw);
    return CycNumber(level_, std::move(raw));
}

CycNumber CycNumber::inverse() const {
    if (is_zero()) throw std::domain_error("CycNumber::inverse: division by zero");
    const long long phi = level_.phi();
    // Solve (x * y) = 1 for y: columns of the system are x * z^j on the basis.
    std::vector<std::vector<Rat>> m(phi, std::vector<Rat>(phi + 1));
    std::vector<Rat> col = c_;
    for (long long j = 0; j < phi; ++j) {
        for (long long i = 0; i < phi; ++i) m[i][j] = col[i];
        if (j + 1 < phi) {
            // multiply column by z: shift up one degree and fold
            std::vector<Rat> raw(phi + 1);
            for (long long i = 0; i < phi; ++i) raw[i + 1] = std::move(col[i]);
            reduce(level_, raw);
            col = std::move(raw);
        }
    }
    m[0][phi] = 1;
    // Gaussian elimination with nonzero pivot selection.
    for (long long k = 0; k < phi; ++k) {
        long long piv = -1;
        for (long long i = k; i < phi; ++i)
            if (m[i][k] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw std::logic_error("CycNumber::inverse: singular system for nonzero element");
        std::swap(m[k], m[piv]);
        Rat inv_piv = make_rat(Int(1), Int(1)) / m[k][k];
        for (long long j = k; j <= phi; ++j) m[k][j] *= inv_piv;
        for (long long i = 0; i < phi; ++i) {
            if (i == k || m[i][k] == 0) continue;
            Rat factor = m[i][k];
            for (long long j = k; j <= phi; ++j) m[i][j] -= factor * m[k][j];
        }
    }
    std::vector<Rat> y(phi);
    for (long long i = 0; i < phi; ++i) y[i] = std::move(m[i][phi]);
    return CycNumber(level_, std::move(y));
}

CycNumber CycNumber::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    CycNumber acc = one(level_);
    CycNumber base = *this;
    unsigned long long u = static_cast<unsigned long long>(e);
    while (u > 0) {
        if (u & 1ULL) acc *= base;
        if (u >>= 1) base *= base;
    }
    return acc;
}

ComplexReal CycNumber::embed(mpfr_prec_t bits) const {
    Real angle = Real::pi(bits) * Real::from_ll(2, bits) / Real::from_ll(level_.ell, bits);
    ComplexReal zeta{angle.cos(), angle.sin()};
    ComplexReal acc{Real(bits), Real(bits)};
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * zeta;
        acc.re = acc.re + Real::from_rat(c_[i], bits);
    }
    return acc;
}

std::string CycNumber::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ", ";
        os << c_[i].get_str();
    }
    os << "]";
    return os.str();
}

}  // namespace munits
