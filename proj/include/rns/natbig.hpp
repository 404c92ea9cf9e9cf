#pragma once
// natbig.hpp - Schoolbook multiprecision unsigned integers on 16-bit limbs.
//
// Limbs are little-endian and the canonical zero is the empty limb vector;
// every operation strips trailing zero limbs so value equality is limb
// equality. Carries and borrows propagate sequentially, and multiplication
// is the O(N^2) cross-term method with 32-bit partial products. This is the
// carry-propagating baseline that residue arithmetic is measured against,
// and the exact carrier for reconstruction output.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rns {

class NatBig {
public:
    NatBig() = default;  // zero

    static NatBig from_u64(std::uint64_t n);
    // Decimal digits only: nonempty, no sign, no separators, no leading
    // zeros except "0" itself. Throws std::invalid_argument otherwise.
    static NatBig from_decimal(std::string_view s);

    std::string to_decimal() const;
    double to_double() const;

    bool is_zero() const { return limbs_.empty(); }
    std::size_t limb_count() const { return limbs_.size(); }
    const std::vector<std::uint16_t>& limbs() const { return limbs_; }
    std::size_t bit_length() const;  // 0 for zero

    // Quotient and remainder by a single-limb divisor d in [1, 2^16).
    std::pair<NatBig, std::uint32_t> divmod_small(std::uint32_t d) const;
    // Remainder by a modulus m in [2, 2^16).
    std::uint32_t mod_small(std::uint32_t m) const;

    friend NatBig operator+(const NatBig& a, const NatBig& b);
    // Unsigned-only: throws std::domain_error when a < b.
    friend NatBig operator-(const NatBig& a, const NatBig& b);
    friend NatBig operator*(const NatBig& a, const NatBig& b);

    friend bool operator==(const NatBig& a, const NatBig& b) {
        return a.limbs_ == b.limbs_;
    }
    friend std::strong_ordering operator<=>(const NatBig& a, const NatBig& b);

private:
    // In-place a = a*mul + add with mul, add < 2^16.
    void mul_add_small(std::uint32_t mul, std::uint32_t add);
    void normalize();

    std::vector<std::uint16_t> limbs_;
};

}  // namespace rns
