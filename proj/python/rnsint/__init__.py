"""Carry-free big integers on pairwise-coprime residue systems."""

from ._core import (
    CrtTable,
    MixedRadixDigits,
    ModulusSet,
    NatBig,
    ResidueInt,
    SignedBig,
    approx_float,
    decode,
    decode_signed,
    encode_big,
    extended_gcd,
    from_mixed_radix,
    mod_inverse,
    to_mixed_radix,
)

__all__ = [
    "CrtTable",
    "MixedRadixDigits",
    "ModulusSet",
    "NatBig",
    "ResidueInt",
    "SignedBig",
    "approx_float",
    "decode",
    "decode_signed",
    "encode_big",
    "extended_gcd",
    "from_mixed_radix",
    "mod_inverse",
    "to_mixed_radix",
]
