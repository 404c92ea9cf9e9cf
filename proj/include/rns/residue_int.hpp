#pragma once
// residue_int.hpp - Carry-free large integers as residue vectors.
//
// A ResidueInt stores one residue per modulus of its ModulusSet and
// represents the unique value in [0, M) with those residues. Addition,
// subtraction, and multiplication act componentwise; no carries cross
// components, so overflow past M wraps silently (odometer semantics).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rns/modulus.hpp"

namespace rns {

class ResidueInt {
public:
    // Residues n mod m_j for every modulus. Any nonnegative machine
    // integer encodes; values >= M alias modulo M.
    static ResidueInt encode(std::uint64_t n, ModulusSetPtr set);
    // Adopts an explicit residue vector. Throws std::domain_error when the
    // length is not R or some residue is out of [0, m_j).
    static ResidueInt from_residues(std::vector<std::uint32_t> residues,
                                    ModulusSetPtr set);

    // Canonical text form, e.g. "(9,2,0,0) mod (13,11,9,7)".
    std::string str() const;
    // Inverse of str(). Interior whitespace is tolerated. Malformed text
    // throws std::invalid_argument; a residue >= its modulus or an invalid
    // modulus list throws std::domain_error.
    static ResidueInt parse(std::string_view text);

    const std::vector<std::uint32_t>& residues() const { return residues_; }
    const ModulusSetPtr& set() const { return set_; }

    friend ResidueInt operator+(const ResidueInt& a, const ResidueInt& b);
    friend ResidueInt operator-(const ResidueInt& a, const ResidueInt& b);
    friend ResidueInt operator*(const ResidueInt& a, const ResidueInt& b);

    // Scalar forms reduce k mod m_j per component, so any uint64 scalar
    // works without materializing encode(k).
    friend ResidueInt operator+(const ResidueInt& a, std::uint64_t k);
    friend ResidueInt operator+(std::uint64_t k, const ResidueInt& a);
    friend ResidueInt operator*(const ResidueInt& a, std::uint64_t k);
    friend ResidueInt operator*(std::uint64_t k, const ResidueInt& a);

    // Equality of represented values mod M. Like the arithmetic operators,
    // requires both operands to share one modulus set (by value) and
    // throws std::invalid_argument otherwise.
    friend bool operator==(const ResidueInt& a, const ResidueInt& b);

private:
    ResidueInt(std::vector<std::uint32_t> residues, ModulusSetPtr set)
        : residues_(std::move(residues)), set_(std::move(set)) {}

    static void require_same_set(const ResidueInt& a, const ResidueInt& b);

    std::vector<std::uint32_t> residues_;
    ModulusSetPtr set_;
};

}  // namespace rns
