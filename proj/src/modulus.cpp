// modulus.cpp - Extended Euclid, modular inverses, modulus-set validation.

#include "rns/modulus.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace rns {

Bezout extended_gcd(std::uint64_t a, std::uint64_t b) {
    if (a == 0 && b == 0)
        throw std::domain_error("extended_gcd(0, 0) is undefined");
    std::uint64_t r0 = a, r1 = b;
    std::int64_t x0 = 1, x1 = 0;
    std::int64_t y0 = 0, y1 = 1;
    while (r1 != 0) {
        std::uint64_t q = r0 / r1;
        std::uint64_t r = r0 % r1;
        r0 = r1;
        r1 = r;
        auto sq = static_cast<std::int64_t>(q);
        std::int64_t x = x0 - sq * x1;
        x0 = x1;
        x1 = x;
        std::int64_t y = y0 - sq * y1;
        y0 = y1;
        y1 = y;
    }
    return Bezout{r0, x0, y0};
}

std::uint32_t mod_inverse(std::int64_t a, std::uint32_t m) {
    if (m < kModulusMin)
        throw std::domain_error("modulus must be at least 2, got " +
                                std::to_string(m));
    auto mm = static_cast<std::int64_t>(m);
    std::int64_t r = a % mm;
    if (r < 0) r += mm;
    // gcd(0, m) = m, so a = 0 mod m falls out of the same check.
    Bezout bz = extended_gcd(static_cast<std::uint64_t>(r), m);
    if (bz.g != 1)
        throw std::domain_error("no inverse of " + std::to_string(a) +
                                " modulo " + std::to_string(m) + ": gcd is " +
                                std::to_string(bz.g));
    std::int64_t c = bz.x % mm;
    if (c < 0) c += mm;
    return static_cast<std::uint32_t>(c);
}

ModulusSet::ModulusSet(std::vector<std::uint32_t> moduli)
    : moduli_(std::move(moduli)) {
    product_ = NatBig::from_u64(1);
    for (std::uint32_t m : moduli_) product_ = product_ * NatBig::from_u64(m);
    recip_.reserve(moduli_.size() * (moduli_.size() - 1) / 2);
    for (std::size_t k = 1; k < moduli_.size(); ++k)
        for (std::size_t j = 0; j < k; ++j)
            recip_.push_back(mod_inverse(moduli_[j], moduli_[k]));
}

ModulusSetPtr ModulusSet::create(const std::vector<std::uint32_t>& moduli) {
    if (moduli.empty())
        throw std::invalid_argument("modulus set must be nonempty");
    for (std::size_t j = 0; j < moduli.size(); ++j) {
        if (moduli[j] < kModulusMin || moduli[j] >= kModulusLimit) {
            std::ostringstream msg;
            msg << "modulus " << moduli[j] << " at position " << j + 1
                << " is outside [2, 2^16)";
            throw std::domain_error(msg.str());
        }
    }
    for (std::size_t k = 1; k < moduli.size(); ++k) {
        for (std::size_t j = 0; j < k; ++j) {
            std::uint32_t g = std::gcd(moduli[j], moduli[k]);
            if (g != 1) {
                std::ostringstream msg;
                msg << "moduli " << moduli[j] << " and " << moduli[k]
                    << " (positions " << j + 1 << " and " << k + 1
                    << ") are not coprime: gcd is " << g;
                throw std::domain_error(msg.str());
            }
        }
    }
    return ModulusSetPtr(new ModulusSet(moduli));
}

ModulusSetPtr ModulusSet::defaults() {
    static const ModulusSetPtr set =
        create({65449, 65479, 65497, 65519, 65521});
    return set;
}

std::uint32_t ModulusSet::reciprocal(std::size_t j, std::size_t k) const {
    if (j >= k || k >= moduli_.size())
        throw std::invalid_argument("reciprocal indices must satisfy j < k < R");
    return recip_[k * (k - 1) / 2 + j];
}

}  // namespace rns
