// acceptance.cpp - End-to-end checks, one printed line per check.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "rns/rns.hpp"
#include "support/oracle.hpp"
#include "support/run_cmd.hpp"

using rns::approx_float;
using rns::CrtTable;
using rns::decode;
using rns::decode_signed;
using rns::encode_big;
using rns::MixedRadixDigits;
using rns::mod_inverse;
using rns::ModulusSet;
using rns::NatBig;
using rns::ResidueInt;
using rns::to_mixed_radix;
using testsupport::mod_big;
using testsupport::random_below;
using testsupport::run_cli;

namespace {

using U32s = std::vector<std::uint32_t>;
using Clock = std::chrono::steady_clock;

int g_failures = 0;

void report(int idx, const std::string& name, bool ok,
            const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << "  [" << std::setw(2) << idx
              << "] " << name;
    if (!ok && !detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++g_failures;
}

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0)
        .count();
}

void check_factorial_stages() {
    auto set = ModulusSet::create({13, 11, 9, 7});
    auto enc = [&](std::uint64_t n) { return ResidueInt::encode(n, set); };

    // Warm pass, then the timed pass.
    bool ok = true;
    double elapsed_ms = 0.0;
    for (int round = 0; round < 2; ++round) {
        auto t0 = Clock::now();
        ResidueInt p25 = enc(2) * enc(5);
        ResidueInt p34 = enc(3) * enc(4);
        ResidueInt p2345 = p25 * p34;
        ResidueInt f6 = p2345 * enc(6);
        ResidueInt f7 = f6 * 7u;
        NatBig value = decode(f7);
        elapsed_ms = ms_since(t0);
        ok = p25.residues() == U32s{10, 10, 1, 3} &&
             p34.residues() == U32s{12, 1, 3, 5} &&
             p2345.residues() == U32s{3, 10, 3, 1} &&
             f6.residues() == U32s{5, 5, 0, 6} &&
             f7.residues() == U32s{9, 2, 0, 0} &&
             decode(ResidueInt::from_residues({9, 2, 0, 0}, set)) ==
                 NatBig::from_u64(5040) &&
             value == NatBig::from_u64(5040);
    }
    bool fast = elapsed_ms < 1.0;
    report(1, "7! staged products and decode under (13,11,9,7), under 1 ms",
           ok && fast,
           ok ? "took " + std::to_string(elapsed_ms) + " ms" : "wrong value");
}

void check_recurrence() {
    auto t0 = Clock::now();
    auto d = ModulusSet::defaults();
    const NatBig& m = d->product();

    const char* const expected[7] = {"1",
                                     "5",
                                     "75",
                                     "6975",
                                     "48845925",
                                     "2385926342942625",
                                     "773286871560558962038650"};

    ResidueInt a = ResidueInt::encode(1, d);
    NatBig direct = NatBig::from_u64(1);
    bool ok = true;
    std::string detail;
    for (std::uint32_t n = 0; n < 8; ++n) {
        std::uint64_t k = (static_cast<std::uint64_t>(n) + 3) * n;
        a = a * a + a * k;
        direct = direct * direct + NatBig::from_u64(k) * direct;
        NatBig decoded = decode(a);
        // The residue walk always equals the direct recomputation mod M.
        if (!(decoded == mod_big(direct, m))) {
            ok = false;
            detail = "a" + std::to_string(n + 1) + " drifted from the oracle";
        }
        if (n + 1 <= 7 && decoded.to_decimal() != expected[n]) {
            ok = false;
            detail = "a" + std::to_string(n + 1) + " = " +
                     decoded.to_decimal() + ", want " + expected[n];
        }
    }
    if (decode(a).to_decimal() != "155842400488849330774094") {
        ok = false;
        detail = "a8 mod M mismatch";
    }

    // A sixteen-prime set is wide enough to hold a8 exactly.
    auto wide = ModulusSet::create({65353, 65357, 65371, 65381, 65393, 65407,
                                    65413, 65419, 65423, 65437, 65447, 65449,
                                    65479, 65497, 65519, 65521});
    ResidueInt aw = ResidueInt::encode(1, wide);
    NatBig dw = NatBig::from_u64(1);
    for (std::uint32_t n = 0; n < 8; ++n) {
        std::uint64_t k = (static_cast<std::uint64_t>(n) + 3) * n;
        aw = aw * aw + aw * k;
        dw = dw * dw + NatBig::from_u64(k) * dw;
        if (!(decode(aw) == dw)) {
            ok = false;
            detail = "wide-set a" + std::to_string(n + 1) + " mismatch";
        }
    }
    if (decode(aw).to_decimal() !=
        "32406201562178816446780055667981084047163520943188247113606875") {
        ok = false;
        detail = "wide-set a8 value mismatch";
    }

    double elapsed_ms = ms_since(t0);
    bool fast = elapsed_ms < 1000.0;
    if (ok && !fast) detail = "took " + std::to_string(elapsed_ms) + " ms";
    report(2, "recurrence terms a1..a8 track the direct recomputation, "
              "under 1 s",
           ok && fast, detail);
}

void check_bijection() {
    const U32s sets[] = {{12, 7}, {13, 11, 9, 7}, {2, 3, 5}};
    bool ok = true;
    std::string detail;
    for (const U32s& moduli : sets) {
        auto set = ModulusSet::create(moduli);
        std::uint64_t m = 1;
        for (std::uint32_t v : moduli) m *= v;
        std::vector<bool> seen(m, false);
        for (std::uint64_t n = 0; n < m && ok; ++n) {
            ResidueInt u = ResidueInt::encode(n, set);
            std::uint64_t idx = 0;
            for (std::size_t j = moduli.size(); j-- > 0;)
                idx = idx * moduli[j] + u.residues()[j];
            if (idx >= m || seen[idx] ||
                !(decode(u) == NatBig::from_u64(n))) {
                ok = false;
                detail = "failure at n = " + std::to_string(n) + " with M = " +
                         std::to_string(m);
            }
            seen[idx] = true;
        }
    }
    report(3, "encode is a bijection and decode inverts it for M = 84, "
              "9009, 30",
           ok, detail);
}

void check_z84_table() {
    const std::uint32_t want[7][12] = {
        {0, 49, 14, 63, 28, 77, 42, 7, 56, 21, 70, 35},
        {36, 1, 50, 15, 64, 29, 78, 43, 8, 57, 22, 71},
        {72, 37, 2, 51, 16, 65, 30, 79, 44, 9, 58, 23},
        {24, 73, 38, 3, 52, 17, 66, 31, 80, 45, 10, 59},
        {60, 25, 74, 39, 4, 53, 18, 67, 32, 81, 46, 11},
        {12, 61, 26, 75, 40, 5, 54, 19, 68, 33, 82, 47},
        {48, 13, 62, 27, 76, 41, 6, 55, 20, 69, 34, 83}};
    CrtTable t = CrtTable::build(12, 7);
    bool ok = t.columns() == 12 && t.rows() == 7;
    std::string detail;
    for (std::uint32_t r = 0; r < 7 && ok; ++r)
        for (std::uint32_t c = 0; c < 12 && ok; ++c)
            if (t.at(r, c) != want[r][c]) {
                ok = false;
                detail = "cell (" + std::to_string(r) + ", " +
                         std::to_string(c) + ") = " +
                         std::to_string(t.at(r, c)) + ", want " +
                         std::to_string(want[r][c]);
            }
    report(4, "Z_84 residue table matches all 84 printed cells", ok, detail);
}

void check_homomorphism() {
    bool ok = true;
    std::string detail;

    auto s = ModulusSet::create({12, 7});
    std::vector<ResidueInt> enc;
    enc.reserve(84);
    for (std::uint64_t n = 0; n < 84; ++n)
        enc.push_back(ResidueInt::encode(n, s));
    for (std::uint64_t a = 0; a < 84 && ok; ++a)
        for (std::uint64_t b = 0; b < 84 && ok; ++b) {
            if (!(enc[a] + enc[b] == enc[(a + b) % 84]) ||
                !(enc[a] - enc[b] == enc[(a + 84 - b) % 84]) ||
                !(enc[a] * enc[b] == enc[a * b % 84])) {
                ok = false;
                detail = "Z_84 pair (" + std::to_string(a) + ", " +
                         std::to_string(b) + ")";
            }
        }

    auto d = ModulusSet::defaults();
    const NatBig& m = d->product();
    std::mt19937_64 rng(0xacce5501);
    for (int i = 0; i < 10000 && ok; ++i) {
        NatBig a = random_below(rng, m);
        NatBig b = random_below(rng, m);
        ResidueInt ra = encode_big(a, d);
        ResidueInt rb = encode_big(b, d);
        NatBig diff = a < b ? (a + m) - b : a - b;
        if (!(ra + rb == encode_big(mod_big(a + b, m), d)) ||
            !(ra * rb == encode_big(mod_big(a * b, m), d)) ||
            !(ra - rb == encode_big(diff, d))) {
            ok = false;
            detail = "default-set random pair " + std::to_string(i);
        }
    }
    report(5, "homomorphism for +, -, x: Z_84 exhaustive and 10^4 random "
              "default-set pairs",
           ok, detail);
}

void check_default_set() {
    auto d = ModulusSet::defaults();
    bool ok = d->moduli() == U32s{65449, 65479, 65497, 65519, 65521} &&
              d->product().to_decimal() == "1204964463846332731259513";
    bool threw = false;
    try {
        ModulusSet::create(d->moduli());
    } catch (const std::exception&) {
        threw = true;
    }
    report(6, "default set lists the five primes and renders M exactly",
           ok && !threw);
}

void check_reciprocals() {
    bool ok = mod_inverse(12, 7) == 3 && mod_inverse(7, 12) == 7;
    std::string detail = ok ? "" : "mod_inverse worked examples";
    const U32s sets[] = {
        {12, 7}, {13, 11, 9, 7}, {2, 3, 5},
        {65449, 65479, 65497, 65519, 65521}};
    for (const U32s& moduli : sets) {
        auto set = ModulusSet::create(moduli);
        for (std::size_t k = 1; k < set->size() && ok; ++k)
            for (std::size_t j = 0; j < k && ok; ++j) {
                std::uint64_t c = set->reciprocal(j, k);
                if (c * set->modulus(j) % set->modulus(k) != 1) {
                    ok = false;
                    detail = "identity fails at (" + std::to_string(j) + ", " +
                             std::to_string(k) + ")";
                }
            }
    }
    report(7, "reciprocal identities hold in every tested set", ok, detail);
}

void check_reconstruction_example() {
    auto s = ModulusSet::create({12, 7});
    MixedRadixDigits digits =
        to_mixed_radix(ResidueInt::from_residues({6, 4}, s));
    bool ok = digits.digits == U32s{6, 1} &&
              decode(ResidueInt::from_residues({6, 4}, s)) ==
                  NatBig::from_u64(18);
    report(8, "decode((6,4)) under (12,7) passes through v2 = 1 to 18", ok);
}

void check_signed_decode() {
    auto s = ModulusSet::create({12, 7});
    auto signed_str = [&](std::uint64_t n) {
        return decode_signed(ResidueInt::encode(n, s)).to_decimal();
    };
    bool ok = signed_str(83) == "-1" && signed_str(42) == "-42" &&
              signed_str(41) == "41";
    std::string detail;
    for (std::uint64_t n = 0; n < 84 && ok; ++n) {
        std::string want = n <= 41 ? std::to_string(n)
                                   : "-" + std::to_string(84 - n);
        if (signed_str(n) != want) {
            ok = false;
            detail = "n = " + std::to_string(n);
        }
    }
    report(9, "symmetric-range decode maps all 84 values correctly", ok,
           detail);
}

void check_float_approx() {
    auto d = ModulusSet::defaults();
    const NatBig& m = d->product();
    std::mt19937_64 rng(0xacce5502);
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 1000 && ok; ++i) {
        NatBig r = random_below(rng, m);
        ResidueInt u = encode_big(r, d);
        double approx = approx_float(u);
        double exact = decode(u).to_double();
        double err = exact == 0.0 ? std::abs(approx)
                                  : std::abs(approx - exact) / exact;
        if (err > 1e-12) {
            ok = false;
            detail = "relative error " + std::to_string(err);
        }
    }
    report(10, "approx_float within relative 1e-12 on 10^3 random values",
           ok, detail);
}

void check_oracle_soundness() {
    bool ok = true;
    std::string detail;
    std::mt19937_64 rng(0xacce5503);
    for (int i = 0; i < 100000 && ok; ++i) {
        std::uint64_t a = rng();
        std::uint64_t b = rng();
        unsigned __int128 wa = a, wb = b;
        NatBig na = NatBig::from_u64(a);
        NatBig nb = NatBig::from_u64(b);
        if (!(na + nb == testsupport::nat_from_u128(wa + wb)) ||
            !(na * nb == testsupport::nat_from_u128(wa * wb)) ||
            !((a < b ? nb - na : na - nb) ==
              NatBig::from_u64(a < b ? b - a : a - b))) {
            ok = false;
            detail = "random case " + std::to_string(i);
        }
    }
    NatBig v = NatBig::from_u64(5040);
    const std::pair<std::uint32_t, std::pair<std::uint64_t, std::uint32_t>>
        checks[] = {{13, {387, 9}}, {11, {458, 2}}, {9, {560, 0}},
                    {7, {720, 0}}};
    for (const auto& [div, want] : checks) {
        auto [q, r] = v.divmod_small(div);
        if (!(q == NatBig::from_u64(want.first)) || r != want.second) {
            ok = false;
            detail = "5040 / " + std::to_string(div);
        }
    }
    report(11, "oracle add/sub/mul match machine words; 5040 check column",
           ok, detail);
}

void check_bench_structure() {
    bool ok = true;
    std::string detail;

    testsupport::CmdResult grow = run_cli("bench --trials 15 --json");
    if (grow.status != 0) {
        ok = false;
        detail = "bench exited " + std::to_string(grow.status);
    } else {
        auto doc = nlohmann::json::parse(grow.out);
        auto sizes = doc["outputs"]["sizes"];
        double prev = 0.0;
        for (const auto& row : sizes) {
            double ns = row["schoolbook_ns"].get<double>();
            if (ns <= prev) {
                ok = false;
                detail = "schoolbook time not monotone at " +
                         std::to_string(row["limbs"].get<int>()) + " limbs";
            }
            prev = ns;
        }
        if (sizes.size() < 3) {
            ok = false;
            detail = "expected three sizes";
        }
    }

    testsupport::CmdResult fixed = run_cli(
        "bench --digits 2,3,4 --moduli 65449,65479,65497,65519,65521 "
        "--trials 15 --json");
    if (fixed.status != 0) {
        ok = false;
        detail = "fixed-set bench exited " + std::to_string(fixed.status);
    } else {
        auto doc = nlohmann::json::parse(fixed.out);
        for (const auto& row : doc["outputs"]["sizes"]) {
            if (row["components"].get<int>() != 5) {
                ok = false;
                detail = "component count varied with operand size";
            }
        }
    }
    report(12, "bench: schoolbook time grows with limbs; rns component "
               "count fixed by the set",
           ok, detail);
}

}  // namespace

int main() {
    check_factorial_stages();
    check_recurrence();
    check_bijection();
    check_z84_table();
    check_homomorphism();
    check_default_set();
    check_reciprocals();
    check_reconstruction_example();
    check_signed_decode();
    check_float_approx();
    check_oracle_soundness();
    check_bench_structure();

    if (g_failures == 0) {
        std::cout << "all acceptance checks passed" << std::endl;
        return 0;
    }
    std::cout << g_failures << " acceptance check(s) failed" << std::endl;
    return 1;
}
