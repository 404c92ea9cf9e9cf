#include "rns/natbig.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rns {

namespace {
constexpr std::uint32_t kLimbBits = 16;
constexpr std::uint32_t kLimbBase = 1u << kLimbBits;
constexpr std::uint32_t kLimbMask = kLimbBase - 1;
}  // namespace

void NatBig::normalize() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

NatBig NatBig::from_u64(std::uint64_t n) {
    NatBig r;
    while (n != 0) {
        r.limbs_.push_back(static_cast<std::uint16_t>(n & kLimbMask));
        n >>= kLimbBits;
    }
    return r;
}

NatBig NatBig::from_decimal(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty decimal string");
    if (s.size() > 1 && s.front() == '0')
        throw std::invalid_argument("leading zeros in decimal string");
    NatBig r;
    for (char ch : s) {
        if (ch < '0' || ch > '9')
            throw std::invalid_argument(std::string("not a decimal digit: '") + ch + "'");
        r.mul_add_small(10, static_cast<std::uint32_t>(ch - '0'));
    }
    return r;
}

void NatBig::mul_add_small(std::uint32_t mul, std::uint32_t add) {
    std::uint32_t carry = add;
    for (auto& limb : limbs_) {
        std::uint32_t t = static_cast<std::uint32_t>(limb) * mul + carry;
        limb = static_cast<std::uint16_t>(t & kLimbMask);
        carry = t >> kLimbBits;
    }
    while (carry != 0) {
        limbs_.push_back(static_cast<std::uint16_t>(carry & kLimbMask));
        carry >>= kLimbBits;
    }
    normalize();
}

std::string NatBig::to_decimal() const {
    if (is_zero()) return "0";
    // Peel four decimal digits per division by 10^4.
    std::string out;
    NatBig cur = *this;
    while (!cur.is_zero()) {
        auto [q, r] = cur.divmod_small(10000);
        bool last = q.is_zero();
        for (int i = 0; i < 4; ++i) {
            out.push_back(static_cast<char>('0' + r % 10));
            r /= 10;
            if (last && r == 0) break;
        }
        cur = std::move(q);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

double NatBig::to_double() const {
    double x = 0.0;
    for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it)
        x = x * static_cast<double>(kLimbBase) + static_cast<double>(*it);
    return x;
}

std::size_t NatBig::bit_length() const {
    if (is_zero()) return 0;
    return (limbs_.size() - 1) * kLimbBits +
           static_cast<std::size_t>(std::bit_width(static_cast<std::uint32_t>(limbs_.back())));
}

std::pair<NatBig, std::uint32_t> NatBig::divmod_small(std::uint32_t d) const {
    if (d == 0) throw std::domain_error("division by zero");
    if (d >= kLimbBase) throw std::invalid_argument("divisor must be below 2^16");
    NatBig q;
    q.limbs_.resize(limbs_.size());
    std::uint32_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint32_t cur = (rem << kLimbBits) | limbs_[i];
        q.limbs_[i] = static_cast<std::uint16_t>(cur / d);
        rem = cur % d;
    }
    q.normalize();
    return {std::move(q), rem};
}

std::uint32_t NatBig::mod_small(std::uint32_t m) const {
    if (m < 2) throw std::invalid_argument("modulus must be at least 2");
    if (m >= kLimbBase) throw std::invalid_argument("modulus must be below 2^16");
    std::uint32_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;)
        rem = ((rem << kLimbBits) | limbs_[i]) % m;
    return rem;
}

NatBig operator+(const NatBig& a, const NatBig& b) {
    NatBig r;
    std::size_t n = std::max(a.limbs_.size(), b.limbs_.size());
    r.limbs_.reserve(n + 1);
    std::uint32_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t t = carry;
        if (i < a.limbs_.size()) t += a.limbs_[i];
        if (i < b.limbs_.size()) t += b.limbs_[i];
        r.limbs_.push_back(static_cast<std::uint16_t>(t & kLimbMask));
        carry = t >> kLimbBits;
    }
    if (carry) r.limbs_.push_back(static_cast<std::uint16_t>(carry));
    return r;
}

NatBig operator-(const NatBig& a, const NatBig& b) {
    if (a < b) throw std::domain_error("subtraction underflow: minuend is smaller");
    NatBig r;
    r.limbs_.resize(a.limbs_.size());
    std::int32_t borrow = 0;
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::int32_t t = static_cast<std::int32_t>(a.limbs_[i]) - borrow;
        if (i < b.limbs_.size()) t -= b.limbs_[i];
        borrow = t < 0;
        if (borrow) t += kLimbBase;
        r.limbs_[i] = static_cast<std::uint16_t>(t);
    }
    r.normalize();
    return r;
}

NatBig operator*(const NatBig& a, const NatBig& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // Each 32-bit partial product splits as p0 + 2^16*p1; the halves land in
    // adjacent columns and a single carry sweep canonicalizes at the end.
    std::vector<std::uint64_t> acc(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            std::uint32_t p = static_cast<std::uint32_t>(a.limbs_[i]) * b.limbs_[j];
            acc[i + j] += p & kLimbMask;
            acc[i + j + 1] += p >> kLimbBits;
        }
    }
    NatBig r;
    r.limbs_.resize(acc.size());
    std::uint64_t carry = 0;
    for (std::size_t k = 0; k < acc.size(); ++k) {
        std::uint64_t t = acc[k] + carry;
        r.limbs_[k] = static_cast<std::uint16_t>(t & kLimbMask);
        carry = t >> kLimbBits;
    }
    r.normalize();
    return r;
}

std::strong_ordering operator<=>(const NatBig& a, const NatBig& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() <=> b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
    }
    return std::strong_ordering::equal;
}

}  // namespace rns
