#pragma once
// crt_table.hpp - Rectangular residue table for a two-modulus system.

#include <cstdint>
#include <string>
#include <vector>

#include "rns/modulus.hpp"

namespace rns {

// The m2-row by m1-column table T with T[u mod m2][u mod m1] = u for all
// u in [0, m1*m2). Coprimality makes the placement a bijection: every cell
// is filled exactly once, tracing diagonals that wrap on both edges.
class CrtTable {
public:
    // Requires both moduli in [2, 2^16) and coprime; throws
    // std::domain_error otherwise.
    static CrtTable build(std::uint32_t m1, std::uint32_t m2);

    std::uint32_t columns() const { return m1_; }  // m1
    std::uint32_t rows() const { return m2_; }     // m2
    std::uint32_t at(std::uint32_t row, std::uint32_t col) const;

    // Plain-text grid with row/column residue headers. When m1 = 12 the
    // columns also carry note names C, C#, ... B, and for m2 <= 12 the
    // rows carry interval names (tonic, minor 2nd, ...).
    std::string render() const;

private:
    CrtTable(std::uint32_t m1, std::uint32_t m2)
        : m1_(m1), m2_(m2),
          cells_(static_cast<std::size_t>(m1) * m2, 0) {}

    std::uint32_t m1_;
    std::uint32_t m2_;
    std::vector<std::uint32_t> cells_;  // row-major
};

}  // namespace rns
