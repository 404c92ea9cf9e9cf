// reconstruct.cpp - Mixed-radix conversion and evaluation.

#include "rns/reconstruct.hpp"

#include <stdexcept>
#include <utility>

namespace rns {

std::string SignedBig::to_decimal() const {
    std::string s = magnitude.to_decimal();
    return negative ? "-" + s : s;
}

MixedRadixDigits to_mixed_radix(const ResidueInt& u) {
    const ModulusSet& set = *u.set();
    std::vector<std::uint32_t> v = u.residues();
    std::size_t r = v.size();
    for (std::size_t j = 0; j + 1 < r; ++j) {
        for (std::size_t k = j + 1; k < r; ++k) {
            std::uint32_t mk = set.modulus(k);
            std::uint32_t d = (v[k] + mk - v[j] % mk) % mk;
            v[k] = (d * set.reciprocal(j, k)) % mk;
        }
    }
    return MixedRadixDigits{u.set(), std::move(v)};
}

NatBig from_mixed_radix(const MixedRadixDigits& d) {
    if (!d.set) throw std::invalid_argument("modulus set is null");
    const ModulusSet& set = *d.set;
    if (d.digits.size() != set.size())
        throw std::domain_error(
            "expected " + std::to_string(set.size()) + " digits, got " +
            std::to_string(d.digits.size()));
    for (std::size_t j = 0; j < d.digits.size(); ++j) {
        if (d.digits[j] >= set.modulus(j))
            throw std::domain_error(
                "digit " + std::to_string(d.digits[j]) + " at position " +
                std::to_string(j + 1) + " is out of range for modulus " +
                std::to_string(set.modulus(j)));
    }
    std::size_t r = d.digits.size();
    NatBig u = NatBig::from_u64(d.digits[r - 1]);
    for (std::size_t j = r - 1; j-- > 0;)
        u = u * NatBig::from_u64(set.modulus(j)) +
            NatBig::from_u64(d.digits[j]);
    return u;
}

NatBig decode(const ResidueInt& u) { return from_mixed_radix(to_mixed_radix(u)); }

SignedBig decode_signed(const ResidueInt& u) {
    NatBig value = decode(u);
    const NatBig& m = u.set()->product();
    NatBig half = (m - NatBig::from_u64(1)).divmod_small(2).first;
    if (value <= half) return SignedBig{false, std::move(value)};
    return SignedBig{true, m - value};
}

double approx_float(const ResidueInt& u) {
    MixedRadixDigits d = to_mixed_radix(u);
    const ModulusSet& set = *d.set;
    std::size_t r = d.digits.size();
    long double x = static_cast<long double>(d.digits[r - 1]);
    for (std::size_t j = r - 1; j-- > 0;)
        x = x * set.modulus(j) + d.digits[j];
    return static_cast<double>(x);
}

ResidueInt encode_big(const NatBig& n, ModulusSetPtr set) {
    if (!set) throw std::invalid_argument("modulus set is null");
    std::vector<std::uint32_t> residues;
    residues.reserve(set->size());
    for (std::uint32_t m : set->moduli()) residues.push_back(n.mod_small(m));
    return ResidueInt::from_residues(std::move(residues), std::move(set));
}

}  // namespace rns
