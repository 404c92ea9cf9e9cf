// crt_table.cpp - Building and rendering the two-modulus residue table.

#include "rns/crt_table.hpp"

#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rns {

namespace {

const char* const kNoteNames[12] = {"C",  "C#", "D",  "D#", "E",  "F",
                                    "F#", "G",  "G#", "A",  "A#", "B"};

const char* const kIntervalNames[12] = {
    "tonic",     "minor 2nd", "major 2nd", "minor 3rd",
    "major 3rd", "4th",       "minor 5th", "5th",
    "minor 6th", "major 6th", "minor 7th", "major 7th"};

}  // namespace

CrtTable CrtTable::build(std::uint32_t m1, std::uint32_t m2) {
    for (std::uint32_t m : {m1, m2}) {
        if (m < kModulusMin || m >= kModulusLimit)
            throw std::domain_error("modulus " + std::to_string(m) +
                                    " is outside [2, 2^16)");
    }
    std::uint32_t g = std::gcd(m1, m2);
    if (g != 1)
        throw std::domain_error("moduli " + std::to_string(m1) + " and " +
                                std::to_string(m2) +
                                " are not coprime: gcd is " +
                                std::to_string(g));
    CrtTable t(m1, m2);
    std::size_t total = static_cast<std::size_t>(m1) * m2;
    for (std::size_t u = 0; u < total; ++u)
        t.cells_[(u % m2) * m1 + (u % m1)] = static_cast<std::uint32_t>(u);
    return t;
}

std::uint32_t CrtTable::at(std::uint32_t row, std::uint32_t col) const {
    if (row >= m2_ || col >= m1_)
        throw std::invalid_argument("cell (" + std::to_string(row) + ", " +
                                    std::to_string(col) +
                                    ") is outside the table");
    return cells_[static_cast<std::size_t>(row) * m1_ + col];
}

std::string CrtTable::render() const {
    std::size_t total = static_cast<std::size_t>(m1_) * m2_;
    int cellw = static_cast<int>(std::to_string(total - 1).size());
    int roww = static_cast<int>(std::to_string(m2_ - 1).size());
    bool notes = (m1_ == 12);
    bool intervals = notes && m2_ <= 12;
    int labelw = intervals ? 10 : 0;

    std::ostringstream out;
    std::string margin(static_cast<std::size_t>(labelw + roww), ' ');
    if (notes) {
        out << margin;
        for (std::uint32_t c = 0; c < m1_; ++c)
            out << "  " << std::setw(cellw) << kNoteNames[c];
        out << '\n';
    }
    out << margin;
    for (std::uint32_t c = 0; c < m1_; ++c)
        out << "  " << std::setw(cellw) << c;
    out << '\n';
    for (std::uint32_t r = 0; r < m2_; ++r) {
        if (intervals)
            out << std::left << std::setw(labelw) << kIntervalNames[r]
                << std::right;
        out << std::setw(roww) << r;
        for (std::uint32_t c = 0; c < m1_; ++c)
            out << "  " << std::setw(cellw)
                << cells_[static_cast<std::size_t>(r) * m1_ + c];
        out << '\n';
    }
    return out.str();
}

}  // namespace rns
