#pragma once
// reconstruct.hpp - From residue vectors back to exact integers.
//
// The route is residues -> mixed-radix digits -> value. The digit pass
// works entirely in machine words using the precomputed reciprocals; only
// the final evaluation u = v1 + v2*m1 + v3*m2*m1 + ... needs multiprecision
// arithmetic, and a floating-point variant of the same evaluation gives a
// fast magnitude estimate.

#include <cstdint>
#include <string>
#include <vector>

#include "rns/modulus.hpp"
#include "rns/natbig.hpp"
#include "rns/residue_int.hpp"

namespace rns {

// Digits v_1..v_R with 0 <= v_j < m_j. The represented value is
// v_1 + v_2*m_1 + v_3*m_2*m_1 + ... + v_R*m_{R-1}*...*m_1, always in [0, M).
struct MixedRadixDigits {
    ModulusSetPtr set;
    std::vector<std::uint32_t> digits;
};

// Sign-and-magnitude integer produced by the symmetric-range decode.
// Zero is never negative.
struct SignedBig {
    bool negative = false;
    NatBig magnitude;

    std::string to_decimal() const;
};

// Digit pass: v starts as the residues; for each j in order, every later
// v_k becomes ((v_k - v_j) * c_jk) mod m_k, with the difference normalized
// into [0, m_k) first so all arithmetic stays in nonnegative 32-bit words.
MixedRadixDigits to_mixed_radix(const ResidueInt& u);

// Horner evaluation of the digit expansion into an exact integer.
// Validates digit count and ranges; throws std::domain_error on violation.
NatBig from_mixed_radix(const MixedRadixDigits& d);

// The unique integer in [0, M) with the given residues.
NatBig decode(const ResidueInt& u);

// Symmetric-range interpretation: values up to floor((M-1)/2) are
// themselves, larger ones represent decode(u) - M.
SignedBig decode_signed(const ResidueInt& u);

// Floating-point evaluation of the digit expansion. Relative error is
// below R*2^-50 for nonzero values.
double approx_float(const ResidueInt& u);

// Componentwise reduction of a multiprecision value, the large-input
// counterpart of ResidueInt::encode. Values >= M alias modulo M.
ResidueInt encode_big(const NatBig& n, ModulusSetPtr set);

}  // namespace rns
