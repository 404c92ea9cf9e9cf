#pragma once
// modulus.hpp - Pairwise-coprime modulus sets and modular reciprocals.

#include <cstdint>
#include <memory>
#include <vector>

#include "rns/natbig.hpp"

namespace rns {

// Moduli live in [2, 2^16) so that any two residues multiply without
// overflow in 32-bit arithmetic.
inline constexpr std::uint32_t kModulusMin = 2;
inline constexpr std::uint32_t kModulusLimit = 1u << 16;  // exclusive

// gcd(a, b) together with Bezout coefficients: a*x + b*y == g, exactly.
// The coefficients are signed and left unnormalized; their magnitudes are
// bounded by max(a, b), so for inputs below 2^63 they fit in 64 bits.
struct Bezout {
    std::uint64_t g;
    std::int64_t x;
    std::int64_t y;
};

// Iterative extended Euclidean algorithm. Rejects (0, 0), which has no
// gcd for this purpose.
Bezout extended_gcd(std::uint64_t a, std::uint64_t b);

// Multiplicative inverse of a modulo m, normalized into [0, m). a is first
// reduced into [0, m), so negative inputs are accepted. Throws
// std::domain_error when gcd(a mod m, m) != 1 (this includes a == 0 mod m).
std::uint32_t mod_inverse(std::int64_t a, std::uint32_t m);

class ModulusSet;
using ModulusSetPtr = std::shared_ptr<const ModulusSet>;

// An ordered list of pairwise-coprime moduli m_1..m_R, with the product M
// and the reciprocal table c_jk = m_j^-1 mod m_k (j < k) precomputed.
// Order is significant: reconstruction depends on it. Instances are
// immutable once built and safe to share across threads.
class ModulusSet {
public:
    // Validates range and pairwise coprimality; the error names the
    // offending modulus or pair.
    static ModulusSetPtr create(const std::vector<std::uint32_t>& moduli);
    // The 5 largest primes below 2^16; M = 1204964463846332731259513.
    static ModulusSetPtr defaults();

    std::size_t size() const { return moduli_.size(); }  // R
    std::uint32_t modulus(std::size_t j) const { return moduli_[j]; }
    const std::vector<std::uint32_t>& moduli() const { return moduli_; }
    const NatBig& product() const { return product_; }  // M

    // c_jk for 0-based indices j < k.
    std::uint32_t reciprocal(std::size_t j, std::size_t k) const;

    // Identity is by value: the same ordered modulus list.
    friend bool operator==(const ModulusSet& a, const ModulusSet& b) {
        return a.moduli_ == b.moduli_;
    }

private:
    explicit ModulusSet(std::vector<std::uint32_t> moduli);

    std::vector<std::uint32_t> moduli_;
    NatBig product_;
    std::vector<std::uint32_t> recip_;  // entry (j, k) at k*(k-1)/2 + j
};

}  // namespace rns
