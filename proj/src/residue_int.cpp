// residue_int.cpp - Componentwise residue arithmetic and the text format.

#include "rns/residue_int.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace rns {

namespace {

// Cursor over the canonical text form "(u1,...,uR) mod (m1,...,mR)".
struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() &&
               std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }

    bool eat(char c) {
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::uint32_t number() {
        if (pos >= s.size() ||
            !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw std::invalid_argument(
                "expected a number at offset " + std::to_string(pos) +
                " of residue text");
        std::uint64_t value = 0;
        while (pos < s.size() &&
               std::isdigit(static_cast<unsigned char>(s[pos]))) {
            value = value * 10 + static_cast<std::uint64_t>(s[pos] - '0');
            if (value > 0xFFFFFFFFull)
                throw std::domain_error("number in residue text is too large");
            ++pos;
        }
        return static_cast<std::uint32_t>(value);
    }

    std::vector<std::uint32_t> tuple() {
        skip_ws();
        if (!eat('('))
            throw std::invalid_argument("expected '(' at offset " +
                                        std::to_string(pos) +
                                        " of residue text");
        std::vector<std::uint32_t> out;
        for (;;) {
            skip_ws();
            out.push_back(number());
            skip_ws();
            if (eat(',')) continue;
            if (eat(')')) break;
            throw std::invalid_argument("expected ',' or ')' at offset " +
                                        std::to_string(pos) +
                                        " of residue text");
        }
        return out;
    }
};

}  // namespace

ResidueInt ResidueInt::encode(std::uint64_t n, ModulusSetPtr set) {
    if (!set) throw std::invalid_argument("modulus set is null");
    std::vector<std::uint32_t> residues;
    residues.reserve(set->size());
    for (std::uint32_t m : set->moduli())
        residues.push_back(static_cast<std::uint32_t>(n % m));
    return ResidueInt(std::move(residues), std::move(set));
}

ResidueInt ResidueInt::from_residues(std::vector<std::uint32_t> residues,
                                     ModulusSetPtr set) {
    if (!set) throw std::invalid_argument("modulus set is null");
    if (residues.size() != set->size())
        throw std::domain_error(
            "expected " + std::to_string(set->size()) + " residues, got " +
            std::to_string(residues.size()));
    for (std::size_t j = 0; j < residues.size(); ++j) {
        if (residues[j] >= set->modulus(j))
            throw std::domain_error(
                "residue " + std::to_string(residues[j]) + " at position " +
                std::to_string(j + 1) + " is out of range for modulus " +
                std::to_string(set->modulus(j)));
    }
    return ResidueInt(std::move(residues), std::move(set));
}

std::string ResidueInt::str() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t j = 0; j < residues_.size(); ++j) {
        if (j) out << ',';
        out << residues_[j];
    }
    out << ") mod (";
    for (std::size_t j = 0; j < set_->size(); ++j) {
        if (j) out << ',';
        out << set_->modulus(j);
    }
    out << ')';
    return out.str();
}

ResidueInt ResidueInt::parse(std::string_view text) {
    Cursor cur{text};
    std::vector<std::uint32_t> residues = cur.tuple();
    cur.skip_ws();
    if (!(cur.eat('m') && cur.eat('o') && cur.eat('d')))
        throw std::invalid_argument("expected 'mod' between residue tuple "
                                    "and modulus tuple");
    std::vector<std::uint32_t> moduli = cur.tuple();
    cur.skip_ws();
    if (cur.pos != text.size())
        throw std::invalid_argument("trailing characters after residue text");
    if (residues.size() != moduli.size())
        throw std::domain_error(
            "residue tuple has " + std::to_string(residues.size()) +
            " entries but modulus tuple has " + std::to_string(moduli.size()));
    return from_residues(std::move(residues), ModulusSet::create(moduli));
}

void ResidueInt::require_same_set(const ResidueInt& a, const ResidueInt& b) {
    if (a.set_ == b.set_ || *a.set_ == *b.set_) return;
    throw std::invalid_argument("operands use different modulus sets: " +
                                a.str() + " vs " + b.str());
}

ResidueInt operator+(const ResidueInt& a, const ResidueInt& b) {
    ResidueInt::require_same_set(a, b);
    std::vector<std::uint32_t> out(a.residues_.size());
    for (std::size_t j = 0; j < out.size(); ++j) {
        std::uint32_t m = a.set_->modulus(j);
        out[j] = (a.residues_[j] + b.residues_[j]) % m;
    }
    return ResidueInt(std::move(out), a.set_);
}

ResidueInt operator-(const ResidueInt& a, const ResidueInt& b) {
    ResidueInt::require_same_set(a, b);
    std::vector<std::uint32_t> out(a.residues_.size());
    for (std::size_t j = 0; j < out.size(); ++j) {
        std::uint32_t m = a.set_->modulus(j);
        out[j] = (a.residues_[j] + m - b.residues_[j]) % m;
    }
    return ResidueInt(std::move(out), a.set_);
}

ResidueInt operator*(const ResidueInt& a, const ResidueInt& b) {
    ResidueInt::require_same_set(a, b);
    std::vector<std::uint32_t> out(a.residues_.size());
    for (std::size_t j = 0; j < out.size(); ++j) {
        std::uint32_t m = a.set_->modulus(j);
        // Residues are below 2^16, so the product fits in 32 bits.
        out[j] = (a.residues_[j] * b.residues_[j]) % m;
    }
    return ResidueInt(std::move(out), a.set_);
}

ResidueInt operator+(const ResidueInt& a, std::uint64_t k) {
    std::vector<std::uint32_t> out(a.residues_.size());
    for (std::size_t j = 0; j < out.size(); ++j) {
        std::uint32_t m = a.set_->modulus(j);
        auto kj = static_cast<std::uint32_t>(k % m);
        out[j] = (a.residues_[j] + kj) % m;
    }
    return ResidueInt(std::move(out), a.set_);
}

ResidueInt operator+(std::uint64_t k, const ResidueInt& a) { return a + k; }

ResidueInt operator*(const ResidueInt& a, std::uint64_t k) {
    std::vector<std::uint32_t> out(a.residues_.size());
    for (std::size_t j = 0; j < out.size(); ++j) {
        std::uint32_t m = a.set_->modulus(j);
        auto kj = static_cast<std::uint32_t>(k % m);
        out[j] = (a.residues_[j] * kj) % m;
    }
    return ResidueInt(std::move(out), a.set_);
}

ResidueInt operator*(std::uint64_t k, const ResidueInt& a) { return a * k; }

bool operator==(const ResidueInt& a, const ResidueInt& b) {
    ResidueInt::require_same_set(a, b);
    return a.residues_ == b.residues_;
}

}  // namespace rns
