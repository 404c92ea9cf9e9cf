// rnscalc.cpp - Command-line calculator for residue number arithmetic.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rns/rns.hpp"

using Json = nlohmann::ordered_json;

namespace {

enum class Mode { decimal, residues, floating, signed_range };

std::vector<std::uint32_t> parse_csv(const std::string& csv) {
    std::vector<std::uint32_t> out;
    std::istringstream in(csv);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token.empty() ||
            token.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad entry '" + token +
                                        "' in list '" + csv + "'");
        if (token.size() > 10 || std::stoull(token) > 0xFFFFFFFFull)
            throw std::domain_error("entry " + token +
                                    " is out of range in list '" + csv + "'");
        out.push_back(static_cast<std::uint32_t>(std::stoull(token)));
    }
    if (out.empty())
        throw std::invalid_argument("empty list '" + csv + "'");
    return out;
}

struct Config {
    std::string moduli_csv;
    bool want_residues = false;
    bool want_signed = false;
    bool want_float = false;
    bool want_json = false;

    bool has_moduli() const { return !moduli_csv.empty(); }

    rns::ModulusSetPtr set() const {
        if (!has_moduli()) return rns::ModulusSet::defaults();
        return rns::ModulusSet::create(parse_csv(moduli_csv));
    }

    Mode mode(Mode fallback) const {
        if (want_residues) return Mode::residues;
        if (want_signed) return Mode::signed_range;
        if (want_float) return Mode::floating;
        return fallback;
    }
};

std::string sci15(double x) {
    std::ostringstream out;
    out << std::scientific << std::setprecision(14) << x;
    return out.str();
}

std::string render_value(const rns::ResidueInt& v, Mode mode) {
    switch (mode) {
        case Mode::residues:
            return v.str();
        case Mode::floating:
            return sci15(rns::approx_float(v));
        case Mode::signed_range:
            return rns::decode_signed(v).to_decimal();
        case Mode::decimal:
        default:
            return rns::decode(v).to_decimal();
    }
}

void emit(const Config& cfg, const Json& doc, const std::string& plain) {
    if (cfg.want_json)
        std::cout << doc.dump(2) << '\n';
    else
        std::cout << plain;
}

void run_factorial(std::uint64_t n, const Config& cfg) {
    auto set = cfg.set();
    rns::ResidueInt r = rns::ResidueInt::encode(1, set);
    rns::NatBig oracle = rns::NatBig::from_u64(1);
    bool aliased = false;
    for (std::uint64_t i = 2; i <= n; ++i) {
        r = r * i;
        // Once the direct product passes M every later one does too, so
        // the expensive recomputation stops at the first overflow.
        if (!aliased) {
            oracle = oracle * rns::NatBig::from_u64(i);
            if (!(oracle < set->product())) aliased = true;
        }
    }
    if (aliased)
        std::cerr << "warning: " << n
                  << "! is not below the modulus product M = "
                  << set->product().to_decimal()
                  << "; the result aliases modulo M\n";
    Mode mode = cfg.mode(Mode::decimal);
    Json doc = {{"command", "factorial"},
                {"inputs", {{"n", n}, {"moduli", set->moduli()}}},
                {"outputs",
                 {{"residues", r.str()},
                  {"decimal", rns::decode(r).to_decimal()},
                  {"aliased", aliased}}}};
    if (cfg.want_signed)
        doc["outputs"]["signed"] = rns::decode_signed(r).to_decimal();
    if (cfg.want_float)
        doc["outputs"]["float"] = sci15(rns::approx_float(r));
    emit(cfg, doc, render_value(r, mode) + "\n");
}

void run_recurrence(std::uint32_t n_max, const Config& cfg) {
    auto set = cfg.set();
    const rns::NatBig& m = set->product();
    Mode mode = cfg.mode(Mode::decimal);

    rns::ResidueInt a = rns::ResidueInt::encode(1, set);
    rns::NatBig direct = rns::NatBig::from_u64(1);
    std::ostringstream plain;
    Json terms = Json::array();
    auto record = [&](std::uint32_t n, const rns::ResidueInt& v,
                      const rns::NatBig& check) {
        if (!(rns::decode(v) == check))
            throw std::runtime_error(
                "internal: residue recurrence disagrees with the direct "
                "recomputation at a" +
                std::to_string(n));
        plain << 'a' << n << " = " << render_value(v, mode) << '\n';
        terms.push_back({{"n", n},
                         {"residues", v.str()},
                         {"decimal", rns::decode(v).to_decimal()}});
    };
    record(0, a, direct);
    for (std::uint32_t n = 0; n < n_max; ++n) {
        std::uint64_t k =
            (static_cast<std::uint64_t>(n) + 3) * static_cast<std::uint64_t>(n);
        rns::NatBig next = direct * direct + rns::NatBig::from_u64(k) * direct;
        if (!(next < m))
            throw std::domain_error(
                "a" + std::to_string(n + 1) +
                " does not fit below the modulus product M = " +
                m.to_decimal() + "; rerun with a larger --moduli set");
        a = a * a + a * k;
        direct = std::move(next);
        record(n + 1, a, direct);
    }
    Json doc = {{"command", "recurrence"},
                {"inputs", {{"n_max", n_max}, {"moduli", set->moduli()}}},
                {"outputs", {{"terms", terms}}}};
    emit(cfg, doc, plain.str());
}

void run_encode(const std::string& value, const Config& cfg) {
    auto set = cfg.set();
    rns::NatBig v = rns::NatBig::from_decimal(value);
    bool aliased = !(v < set->product());
    if (aliased)
        std::cerr << "warning: value is not below the modulus product M = "
                  << set->product().to_decimal()
                  << "; encoding aliases modulo M\n";
    rns::ResidueInt r = rns::encode_big(v, set);
    Json doc = {{"command", "encode"},
                {"inputs", {{"value", value}, {"moduli", set->moduli()}}},
                {"outputs", {{"residues", r.str()}, {"aliased", aliased}}}};
    emit(cfg, doc, r.str() + "\n");
}

void run_decode(const std::string& text, const Config& cfg) {
    rns::ResidueInt r = rns::ResidueInt::parse(text);
    if (cfg.has_moduli()) {
        auto expect = cfg.set();
        if (!(*expect == *r.set())) {
            std::string got;
            for (std::uint32_t mv : r.set()->moduli())
                got += (got.empty() ? "" : ",") + std::to_string(mv);
            throw std::domain_error("residue text uses moduli (" + got +
                                    ") but --moduli requested (" +
                                    cfg.moduli_csv + ")");
        }
    }
    Mode mode = cfg.mode(Mode::decimal);
    Json doc = {{"command", "decode"},
                {"inputs", {{"text", text}, {"moduli", r.set()->moduli()}}},
                {"outputs",
                 {{"residues", r.str()},
                  {"decimal", rns::decode(r).to_decimal()}}}};
    if (cfg.want_signed)
        doc["outputs"]["signed"] = rns::decode_signed(r).to_decimal();
    if (cfg.want_float)
        doc["outputs"]["float"] = sci15(rns::approx_float(r));
    emit(cfg, doc, render_value(r, mode) + "\n");
}

void run_crt_table(std::uint32_t m1, std::uint32_t m2, const Config& cfg) {
    for (std::uint32_t m : {m1, m2}) {
        if (m < rns::kModulusMin || m >= rns::kModulusLimit)
            throw std::domain_error("modulus " + std::to_string(m) +
                                    " is outside [2, 2^16)");
    }
    std::uint32_t g = std::gcd(m1, m2);
    if (g != 1)
        throw std::domain_error(
            "moduli " + std::to_string(m1) + " and " + std::to_string(m2) +
            " share the factor " + std::to_string(g) +
            ": the wrapping diagonal returns to its start without ever "
            "visiting the other notes");
    std::uint64_t cells = static_cast<std::uint64_t>(m1) * m2;
    if (cells > 10000)
        throw std::domain_error("table would have " + std::to_string(cells) +
                                " cells; the limit is 10000");
    rns::CrtTable table = rns::CrtTable::build(m1, m2);
    Json rows = Json::array();
    for (std::uint32_t r = 0; r < table.rows(); ++r) {
        Json row = Json::array();
        for (std::uint32_t c = 0; c < table.columns(); ++c)
            row.push_back(table.at(r, c));
        rows.push_back(std::move(row));
    }
    Json doc = {{"command", "crt-table"},
                {"inputs", {{"m1", m1}, {"m2", m2}}},
                {"outputs",
                 {{"columns", table.columns()},
                  {"rows", table.rows()},
                  {"cells", rows}}}};
    emit(cfg, doc, table.render());
}

// The five default moduli plus enough extra primes below 2^16 to cover
// benchmark operands up to 39 limbs. Kept as data: the library does not
// generate primes.
constexpr std::uint32_t kPrimeTable[40] = {
    65521, 65519, 65497, 65479, 65449, 65447, 65437, 65423, 65419, 65413,
    65407, 65393, 65381, 65371, 65357, 65353, 65327, 65323, 65309, 65293,
    65287, 65269, 65267, 65257, 65239, 65213, 65203, 65183, 65179, 65173,
    65171, 65167, 65147, 65141, 65129, 65123, 65119, 65111, 65101, 65099};

void keep(std::uint64_t v) { asm volatile("" : : "r"(v) : "memory"); }

rns::ModulusSetPtr bench_set(std::size_t limbs, const Config& cfg) {
    if (cfg.has_moduli()) return cfg.set();
    std::size_t need = limbs + 1;
    if (need > std::size(kPrimeTable))
        throw std::domain_error(
            "operands of " + std::to_string(limbs) + " limbs need " +
            std::to_string(need) + " moduli; the bundled table has " +
            std::to_string(std::size(kPrimeTable)) + ", pass --moduli");
    std::vector<std::uint32_t> mods(kPrimeTable, kPrimeTable + need);
    std::sort(mods.begin(), mods.end());
    return rns::ModulusSet::create(mods);
}

rns::NatBig random_limbs(std::mt19937_64& rng, std::size_t limbs) {
    rns::NatBig v;
    const rns::NatBig base = rns::NatBig::from_u64(1u << 16);
    for (std::size_t i = 0; i < limbs; ++i) {
        std::uint32_t limb = static_cast<std::uint32_t>(rng() & 0xFFFF);
        if (i == 0) limb = 1 + limb % 65535;  // top limb stays nonzero
        v = v * base + rns::NatBig::from_u64(limb);
    }
    return v;
}

double median(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    return xs[xs.size() / 2];
}

template <typename Body>
double time_batch_ns(Body&& body, int batch, int trials) {
    using Clock = std::chrono::steady_clock;
    body();
    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(trials));
    for (int t = 0; t < trials; ++t) {
        auto t0 = Clock::now();
        for (int i = 0; i < batch; ++i) body();
        auto t1 = Clock::now();
        auto ns =
            std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0);
        samples.push_back(static_cast<double>(ns.count()) / batch);
    }
    return median(std::move(samples));
}

std::vector<std::uint32_t> parallel_mul(const std::vector<std::uint32_t>& a,
                                        const std::vector<std::uint32_t>& b,
                                        const std::vector<std::uint32_t>& mods,
                                        unsigned threads) {
    std::vector<std::uint32_t> out(a.size());
    std::vector<std::thread> pool;
    std::size_t chunk = (a.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        std::size_t lo = t * chunk;
        std::size_t hi = std::min(a.size(), lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            for (std::size_t j = lo; j < hi; ++j)
                out[j] = a[j] * b[j] % mods[j];
        });
    }
    for (std::thread& th : pool) th.join();
    return out;
}

void run_bench(const std::string& digits_csv, int trials, unsigned parallel,
               const Config& cfg) {
    std::vector<std::uint32_t> sizes = parse_csv(digits_csv);
    for (std::uint32_t s : sizes)
        if (s == 0)
            throw std::invalid_argument("bench sizes must be at least 1 limb");
    const int kBatch = 64;
    const int kPairs = 16;
    std::mt19937_64 rng(0xbe7c4);

    std::ostringstream plain;
    plain << "multiply, median of " << trials << " trials, batch of "
          << kBatch << " ops\n";
    plain << std::setw(6) << "limbs" << std::setw(7) << "bits"
          << std::setw(16) << "schoolbook" << std::setw(12) << "rns"
          << std::setw(12) << "components";
    if (parallel > 0) plain << std::setw(16) << "rns-parallel";
    plain << '\n';

    Json rows = Json::array();
    for (std::uint32_t limbs : sizes) {
        auto set = bench_set(limbs, cfg);
        std::size_t bits = static_cast<std::size_t>(limbs) * 16;
        if (bits >= set->product().bit_length())
            throw std::domain_error(
                "operands of " + std::to_string(limbs) + " limbs (" +
                std::to_string(bits) +
                " bits) exceed the capacity of the modulus set (M has " +
                std::to_string(set->product().bit_length()) + " bits)");

        std::vector<rns::NatBig> lhs, rhs;
        std::vector<rns::ResidueInt> rl, rr;
        for (int i = 0; i < kPairs; ++i) {
            lhs.push_back(random_limbs(rng, limbs));
            rhs.push_back(random_limbs(rng, limbs));
            rl.push_back(rns::encode_big(lhs.back(), set));
            rr.push_back(rns::encode_big(rhs.back(), set));
        }

        int i = 0;
        double school_ns = time_batch_ns(
            [&] {
                keep((lhs[i % kPairs] * rhs[i % kPairs]).limb_count());
                ++i;
            },
            kBatch, trials);
        i = 0;
        double rns_ns = time_batch_ns(
            [&] {
                keep((rl[i % kPairs] * rr[i % kPairs]).residues()[0]);
                ++i;
            },
            kBatch, trials);

        double par_ns = 0.0;
        if (parallel > 0) {
            for (int p = 0; p < kPairs; ++p) {
                auto serial = (rl[p] * rr[p]).residues();
                auto par = parallel_mul(rl[p].residues(), rr[p].residues(),
                                        set->moduli(), parallel);
                if (serial != par)
                    throw std::runtime_error(
                        "internal: parallel component multiply disagrees "
                        "with the serial result");
            }
            i = 0;
            par_ns = time_batch_ns(
                [&] {
                    keep(parallel_mul(rl[i % kPairs].residues(),
                                      rr[i % kPairs].residues(),
                                      set->moduli(), parallel)[0]);
                    ++i;
                },
                kBatch, trials);
        }

        plain << std::setw(6) << limbs << std::setw(7) << bits
              << std::setw(13) << std::fixed << std::setprecision(0)
              << school_ns << " ns" << std::setw(9) << rns_ns << " ns"
              << std::setw(12) << set->size();
        if (parallel > 0) plain << std::setw(13) << par_ns << " ns";
        plain << '\n';

        Json row = {{"limbs", limbs},
                    {"bits", bits},
                    {"components", set->size()},
                    {"schoolbook_ns", school_ns},
                    {"rns_ns", rns_ns}};
        if (parallel > 0) row["rns_parallel_ns"] = par_ns;
        rows.push_back(std::move(row));
    }
    plain << "rns cost tracks the component count, not the operand size\n";

    Json inputs = {{"digits", sizes}, {"trials", trials},
                   {"parallel", parallel}};
    if (cfg.has_moduli()) inputs["moduli"] = cfg.set()->moduli();
    Json doc = {{"command", "bench"},
                {"inputs", inputs},
                {"outputs", {{"batch", kBatch}, {"sizes", rows}}}};
    emit(cfg, doc, plain.str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Carry-free big-integer calculator on residue number "
                 "systems"};
    app.require_subcommand(1);

    Config cfg;
    app.add_option("--moduli", cfg.moduli_csv,
                   "Comma-separated pairwise-coprime moduli (default: the "
                   "five largest primes below 2^16)");
    auto* opt_res =
        app.add_flag("--residues", cfg.want_residues, "Print residue vectors");
    auto* opt_signed = app.add_flag("--signed", cfg.want_signed,
                                    "Decode into the symmetric range");
    auto* opt_float = app.add_flag("--float", cfg.want_float,
                                   "Print a floating-point approximation");
    opt_res->excludes(opt_signed);
    opt_res->excludes(opt_float);
    opt_signed->excludes(opt_float);
    app.add_flag("--json", cfg.want_json,
                 "Emit a JSON object instead of plain text");

    std::uint64_t fact_n = 0;
    auto* fact =
        app.add_subcommand("factorial", "Compute n! in residue arithmetic");
    fact->add_option("n", fact_n, "Factorial argument")->required();
    fact->fallthrough();
    fact->callback([&] { run_factorial(fact_n, cfg); });

    std::uint32_t rec_n = 1;
    auto* rec = app.add_subcommand(
        "recurrence", "Walk a(n+1) = a(n)^2 + (n+3)*n*a(n) from a(0) = 1");
    rec->add_option("n_max", rec_n, "Last index to compute")
        ->required()
        ->check(CLI::PositiveNumber);
    rec->fallthrough();
    rec->callback([&] { run_recurrence(rec_n, cfg); });

    std::string enc_value;
    auto* enc = app.add_subcommand("encode",
                                   "Encode a decimal value into residues");
    enc->add_option("value", enc_value, "Nonnegative decimal integer")
        ->required();
    enc->fallthrough();
    enc->callback([&] { run_encode(enc_value, cfg); });

    std::string dec_text;
    auto* dec = app.add_subcommand(
        "decode", "Decode residue text like \"(9,2,0,0) mod (13,11,9,7)\"");
    dec->add_option("text", dec_text, "Residue text")->required();
    dec->fallthrough();
    dec->callback([&] { run_decode(dec_text, cfg); });

    std::uint32_t tab_m1 = 0, tab_m2 = 0;
    auto* tab = app.add_subcommand("crt-table",
                                   "Print the residue table of two moduli");
    tab->add_option("m1", tab_m1, "Column modulus")->required();
    tab->add_option("m2", tab_m2, "Row modulus")->required();
    tab->fallthrough();
    tab->callback([&] { run_crt_table(tab_m1, tab_m2, cfg); });

    std::string bench_digits = "8,16,32";
    int bench_trials = 11;
    unsigned bench_parallel = 0;
    auto* bench = app.add_subcommand(
        "bench", "Time rns multiply against schoolbook multiply");
    bench->add_option("--digits", bench_digits,
                      "Comma-separated operand sizes in 16-bit limbs");
    bench->add_option("--trials", bench_trials, "Samples per median")
        ->check(CLI::PositiveNumber);
    bench->add_option("--parallel", bench_parallel,
                      "Also time component-parallel rns multiply with this "
                      "many threads");
    bench->fallthrough();
    bench->callback(
        [&] { run_bench(bench_digits, bench_trials, bench_parallel, cfg); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
