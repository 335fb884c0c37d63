#include "commat/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "commat/dispatch.hpp"
#include "commat/matrix_io.hpp"
#include "commat/mutants.hpp"
#include "commat/verify.hpp"

namespace commat::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

/// "int", "int:BITS" or "mod:P".
struct RingSpec {
    bool modular = false;
    std::uint64_t modulus = 0;
    unsigned bits = 64;
};

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError(what + " must be a non-negative integer, got '" + s + "'");
    }
    try {
        return std::stoull(s);
    } catch (const std::out_of_range&) {
        throw ParseError(what + " is out of range: '" + s + "'");
    }
}

RingSpec parse_ring(const std::string& text, bool allow_bits) {
    RingSpec spec;
    if (text == "int") return spec;
    if (text.rfind("int:", 0) == 0 && allow_bits) {
        const std::uint64_t bits = parse_u64(text.substr(4), "ring bit size");
        if (bits < 1 || bits > (1u << 20)) throw ParseError("ring bit size must lie in [1, 2^20]");
        spec.bits = static_cast<unsigned>(bits);
        return spec;
    }
    if (text.rfind("mod:", 0) == 0) {
        spec.modular = true;
        spec.modulus = parse_u64(text.substr(4), "modulus");
        if (spec.modulus < 2 || spec.modulus > ModInt::max_modulus) throw ParseError("modulus must lie in [2, 2^62]");
        return spec;
    }
    throw ParseError("unknown ring '" + text + "' (expected " + (allow_bits ? "int:BITS" : "int") + " or mod:P)");
}

std::vector<std::uint64_t> parse_triple(const std::string& text, const std::string& what) {
    std::vector<std::uint64_t> out;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) out.push_back(parse_u64(part, what));
    if (out.size() != 3) throw ParseError(what + " must be three comma-separated integers, got '" + text + "'");
    for (std::uint64_t v : out) {
        if (v < 1) throw ParseError(what + " entries must be positive");
    }
    return out;
}

ordered_json report_json(const CostReport& r) {
    ordered_json j;
    j["strategy"] = std::string(strategy_name(r.strategy));
    j["l"] = r.l;
    j["n"] = r.n;
    j["m"] = r.m;
    j["predicted"] = r.predicted;
    j["observed"] = r.observed;
    return j;
}

/// Maps library errors onto exit codes.
template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const ExactHalveUnavailable& e) {
        err << "error: " << e.what() << "\n";
        return kCapabilityError;
    } catch (const RingMismatch& e) {
        err << "error: " << e.what() << "\n";
        return kCapabilityError;
    } catch (const ShapeError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const UnsupportedShape& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

// mul ------------------------------------------------------------------------

struct MulOptions {
    std::string a_path;
    std::string b_path;
    std::string strategy = "auto";
    std::string ring;
    std::string out_path;
    bool report = false;
};

int cmd_mul(const MulOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        const Strategy strategy = parse_strategy(opt.strategy);
        const MatrixFile fa = read_matrix_file(opt.a_path);
        const MatrixFile fb = read_matrix_file(opt.b_path);

        std::optional<std::uint64_t> modulus = fa.modulus ? fa.modulus : fb.modulus;
        if (fa.modulus && fb.modulus && *fa.modulus != *fb.modulus) {
            throw ParseError("input files carry different moduli (" + std::to_string(*fa.modulus) + " and " +
                             std::to_string(*fb.modulus) + ")");
        }
        if (!opt.ring.empty()) {
            const RingSpec spec = parse_ring(opt.ring, false);
            if (!spec.modular && modulus) throw ParseError("--ring int conflicts with the modulus stored in the input");
            if (spec.modular && modulus && *modulus != spec.modulus) {
                throw ParseError("--ring mod:" + std::to_string(spec.modulus) + " conflicts with modulus " +
                                 std::to_string(*modulus) + " stored in the input");
            }
            if (spec.modular) modulus = spec.modulus;
        }

        Matrix<Integer> product = fa.entries;
        CostReport report;
        if (modulus) {
            const std::uint64_t p = *modulus;
            auto to_mod = [p](const Integer& x) { return ModInt::from_integer(x, p); };
            auto [c, r] = multiply(fa.entries.map(to_mod), fb.entries.map(to_mod), strategy);
            product = c.map([](const ModInt& x) { return Integer(static_cast<std::int64_t>(x.residue())); });
            report = r;
        } else {
            auto [c, r] = multiply(fa.entries, fb.entries, strategy);
            product = std::move(c);
            report = r;
        }

        const std::string text = format_matrix_json(product, modulus);
        if (opt.out_path.empty()) {
            out << text;
        } else {
            std::ofstream f(opt.out_path, std::ios::binary);
            if (!f) throw ParseError("cannot write " + opt.out_path);
            f << text;
        }
        if (opt.report) out << report_json(report).dump() << "\n";
        return kOk;
    });
}

// table ----------------------------------------------------------------------

int cmd_table(std::int64_t lmax, std::int64_t nmax, std::int64_t mmax, const std::string& format, std::ostream& out,
              std::ostream& err) {
    if (lmax < 1 || nmax < 1 || mmax < 1) {
        err << "error: --lmax, --nmax and --mmax must be at least 1\n";
        return kInputError;
    }
    const auto rows = count_table(lmax, nmax, mmax);
    if (format == "json") {
        auto doc = ordered_json::array();
        for (const CountRow& r : rows) {
            ordered_json j;
            j["l"] = r.l;
            j["n"] = r.n;
            j["m"] = r.m;
            j["paper"] = r.paper;
            j["waksman_odd"] = r.waksman_odd;
            j["naive"] = r.naive;
            j["delta"] = r.delta;
            doc.push_back(std::move(j));
        }
        out << doc.dump() << "\n";
    } else {
        out << "l,n,m,paper,waksman_odd,naive,delta\n";
        for (const CountRow& r : rows) {
            out << r.l << ',' << r.n << ',' << r.m << ',' << r.paper << ',' << r.waksman_odd << ',' << r.naive << ','
                << r.delta << '\n';
        }
    }
    return kOk;
}

// verify ---------------------------------------------------------------------

struct VerifyOptions {
    std::string suite = "all";
    std::uint64_t seed = 0;
    std::string max_shape = "3,7,7";
    std::size_t trials = 20;
    std::string mutant;
};

struct SuiteTally {
    std::size_t checks = 0;
    std::size_t failures = 0;
};

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        const auto shape = parse_triple(opt.max_shape, "--max-shape");
        const std::uint64_t lmax = shape[0], nmax = shape[1], mmax = shape[2];
        const bool all = opt.suite == "all";

        ordered_json suites = ordered_json::object();
        auto failures = ordered_json::array();
        auto record = [&](const std::string& suite, SuiteTally t) {
            ordered_json j;
            j["checks"] = t.checks;
            j["failures"] = t.failures;
            suites[suite] = j;
        };

        if (!opt.mutant.empty()) {
            const auto registry = mutants::registry();
            const auto it = std::find_if(registry.begin(), registry.end(),
                                         [&](const mutants::Mutant& mu) { return mu.name == opt.mutant; });
            if (it == registry.end()) throw ParseError("unknown mutant '" + opt.mutant + "'");
            const SymbolicResult r = symbolic_verify_kernel(it->name, it->kernel, it->l, it->n, it->m);
            SuiteTally t{1, r.pass ? 0u : 1u};
            if (!r.pass) {
                ordered_json f;
                f["suite"] = "symbolic";
                f["strategy"] = it->name;
                f["shape"] = {it->l, it->n, it->m};
                f["entry"] = {r.mismatch->row + 1, r.mismatch->col + 1};
                f["monomial"] = r.mismatch->monomial;
                f["coefficient"] = r.mismatch->coefficient;
                failures.push_back(std::move(f));
            }
            record("symbolic", t);
        } else {
            if (all || opt.suite == "symbolic") {
                SuiteTally t;
                for (Strategy s : kConcreteStrategies) {
                    for (std::uint64_t l = 1; l <= lmax; ++l) {
                        for (std::uint64_t n = 1; n <= nmax; ++n) {
                            for (std::uint64_t m = 1; m <= mmax; ++m) {
                                if (!supports(s, l, n, m)) continue;
                                const SymbolicResult r = symbolic_verify(s, l, n, m);
                                ++t.checks;
                                if (r.pass) continue;
                                ++t.failures;
                                ordered_json f;
                                f["suite"] = "symbolic";
                                f["strategy"] = std::string(strategy_name(s));
                                f["shape"] = {l, n, m};
                                f["entry"] = {r.mismatch->row + 1, r.mismatch->col + 1};
                                f["monomial"] = r.mismatch->monomial;
                                f["coefficient"] = r.mismatch->coefficient;
                                failures.push_back(std::move(f));
                            }
                        }
                    }
                }
                record("symbolic", t);
            }
            if (all || opt.suite == "random") {
                SuiteTally t;
                const IntegerRing integers;
                const ModularRing mod101(101);
                auto note = [&](const RandomCheckReport& r, const std::string& ring) {
                    ++t.checks;
                    if (r.pass()) return;
                    ++t.failures;
                    ordered_json f;
                    f["suite"] = "random";
                    f["strategy"] = std::string(strategy_name(r.strategy));
                    f["ring"] = ring;
                    f["shape"] = {r.l, r.n, r.m};
                    f["equal"] = r.equal;
                    f["trials"] = r.trials;
                    f["witness"] = *r.first_mismatch;
                    failures.push_back(std::move(f));
                };
                for (Strategy s : kConcreteStrategies) {
                    for (std::uint64_t l = 1; l <= lmax; ++l) {
                        for (std::uint64_t n = 1; n <= nmax; ++n) {
                            for (std::uint64_t m = 1; m <= mmax; ++m) {
                                if (!supports(s, l, n, m)) continue;
                                note(randomized_check(s, l, n, m, integers, opt.trials, opt.seed), "int");
                                note(randomized_check(s, l, n, m, mod101, opt.trials, opt.seed), "mod:101");
                            }
                        }
                    }
                }
                record("random", t);
            }
            if (all || opt.suite == "counts") {
                SuiteTally t;
                for (Strategy s : kConcreteStrategies) {
                    for (std::uint64_t l = 1; l <= lmax; ++l) {
                        for (std::uint64_t n = 1; n <= nmax; ++n) {
                            for (std::uint64_t m = 1; m <= mmax; ++m) {
                                if (!supports(s, l, n, m)) continue;
                                ++t.checks;
                                try {
                                    count_audit(s, l, n, m, opt.seed);
                                } catch (const CountMismatch& e) {
                                    ++t.failures;
                                    ordered_json f;
                                    f["suite"] = "counts";
                                    f["strategy"] = std::string(strategy_name(s));
                                    f["shape"] = {l, n, m};
                                    f["predicted"] = e.predicted;
                                    f["observed"] = e.observed;
                                    failures.push_back(std::move(f));
                                }
                            }
                        }
                    }
                }
                record("counts", t);
            }
            if (all || opt.suite == "taint") {
                SuiteTally t;
                for (Strategy s : {Strategy::Core3, Strategy::PaperGeneral}) {
                    for (std::uint64_t l = 1; l <= lmax; ++l) {
                        for (std::uint64_t n = 1; n <= nmax; ++n) {
                            for (std::uint64_t m = 1; m <= mmax; ++m) {
                                if (!supports(s, l, n, m)) continue;
                                ++t.checks;
                                const TaintReport r = taint_audit(s, l, n, m, opt.seed);
                                if (r.constant_operand == 0) continue;
                                ++t.failures;
                                ordered_json f;
                                f["suite"] = "taint";
                                f["strategy"] = std::string(strategy_name(s));
                                f["shape"] = {l, n, m};
                                f["constant_operand_multiplications"] = r.constant_operand;
                                failures.push_back(std::move(f));
                            }
                        }
                    }
                }
                record("taint", t);
            }
        }

        ordered_json summary;
        summary["pass"] = failures.empty();
        summary["seed"] = opt.seed;
        summary["max_shape"] = {lmax, nmax, mmax};
        summary["suites"] = std::move(suites);
        summary["failures"] = failures;
        out << summary.dump() << "\n";
        return failures.empty() ? kOk : kVerificationFailed;
    });
}

// bench ----------------------------------------------------------------------

struct BenchOptions {
    std::string shape;
    std::string ring = "int:64";
    std::size_t reps = 10;
    std::string format = "csv";
    std::string strategy;
};

struct BenchRow {
    Strategy strategy;
    std::uint64_t multiplications;
    double median_ns;
    double min_ns;
    double max_ns;
};

template <RingElement T>
std::vector<BenchRow> time_strategies(const std::vector<Strategy>& strategies, const Matrix<T>& a, const Matrix<T>& b,
                                      std::size_t reps) {
    std::vector<BenchRow> rows;
    for (Strategy s : strategies) {
        std::vector<double> samples;
        samples.reserve(reps);
        for (std::size_t r = 0; r < reps; ++r) {
            const auto t0 = std::chrono::steady_clock::now();
            const Matrix<T> c = run_strategy(s, a, b);
            const auto t1 = std::chrono::steady_clock::now();
            samples.push_back(std::chrono::duration<double, std::nano>(t1 - t0).count());
            if (c.rows() == 0) std::abort();  // keeps the product alive
        }
        std::sort(samples.begin(), samples.end());
        const std::size_t k = samples.size();
        const double median = k % 2 == 1 ? samples[k / 2] : (samples[k / 2 - 1] + samples[k / 2]) / 2;
        rows.push_back({s, predict_count(s, a.rows(), a.cols(), b.cols()), median, samples.front(), samples.back()});
    }
    return rows;
}

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        const auto shape = parse_triple(opt.shape, "--shape");
        const std::uint64_t l = shape[0], n = shape[1], m = shape[2];
        const RingSpec ring = parse_ring(opt.ring, true);
        if (opt.reps < 1) throw ParseError("--reps must be at least 1");
        const RingCaps caps{!ring.modular || ring.modulus % 2 == 1};

        std::vector<Strategy> strategies;
        if (!opt.strategy.empty() && opt.strategy != "auto") {
            const Strategy s = parse_strategy(opt.strategy);
            if (!supports(s, l, n, m)) {
                throw UnsupportedShape(opt.strategy + " does not cover (" + std::to_string(l) + ", " +
                                       std::to_string(n) + ", " + std::to_string(m) + ")");
            }
            if (!applicable(s, l, n, m, caps)) throw ExactHalveUnavailable(opt.strategy + " needs exact halving");
            strategies.push_back(s);
        } else {
            for (Strategy s : kConcreteStrategies) {
                if (applicable(s, l, n, m, caps)) strategies.push_back(s);
            }
        }

        std::vector<BenchRow> rows;
        std::string ring_name;
        if (ring.modular) {
            const ModularRing r(ring.modulus);
            std::mt19937_64 rng(0);
            rows = time_strategies(strategies, random_matrix(r, l, n, rng), random_matrix(r, n, m, rng), opt.reps);
            ring_name = r.name();
        } else {
            gmp_randclass g(gmp_randinit_default);
            g.seed(0);
            auto gen = [&](std::size_t, std::size_t) {
                mpz_class v = g.get_z_bits(ring.bits);
                if (g.get_z_bits(1) == 1) v = -v;
                return Integer(std::move(v));
            };
            const auto a = Matrix<Integer>::generate(l, n, gen);
            const auto b = Matrix<Integer>::generate(n, m, gen);
            rows = time_strategies(strategies, a, b, opt.reps);
            ring_name = "int:" + std::to_string(ring.bits);
        }

        if (opt.format == "json") {
            auto doc = ordered_json::array();
            for (const BenchRow& r : rows) {
                ordered_json j;
                j["strategy"] = std::string(strategy_name(r.strategy));
                j["l"] = l;
                j["n"] = n;
                j["m"] = m;
                j["ring"] = ring_name;
                j["reps"] = opt.reps;
                j["multiplications"] = r.multiplications;
                j["median_ns"] = r.median_ns;
                j["min_ns"] = r.min_ns;
                j["max_ns"] = r.max_ns;
                doc.push_back(std::move(j));
            }
            out << doc.dump() << "\n";
        } else {
            out << "strategy,l,n,m,ring,reps,multiplications,median_ns,min_ns,max_ns\n";
            for (const BenchRow& r : rows) {
                out << strategy_name(r.strategy) << ',' << l << ',' << n << ',' << m << ',' << ring_name << ','
                    << opt.reps << ',' << r.multiplications << ',' << static_cast<std::uint64_t>(r.median_ns) << ','
                    << static_cast<std::uint64_t>(r.min_ns) << ',' << static_cast<std::uint64_t>(r.max_ns) << '\n';
            }
        }
        return kOk;
    });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact commutative matrix multiplication with multiplication counting", "commat"};
    app.require_subcommand(1);

    MulOptions mul;
    auto* mul_cmd = app.add_subcommand("mul", "Multiply two matrix files");
    mul_cmd->add_option("--a", mul.a_path, "Left factor (JSON or text)")->required();
    mul_cmd->add_option("--b", mul.b_path, "Right factor (JSON or text)")->required();
    mul_cmd->add_option("--strategy", mul.strategy,
                        "auto, naive, winograd-even, waksman-even, waksman-odd, core3 or paper-general");
    mul_cmd->add_option("--ring", mul.ring, "int or mod:P (default: taken from the files, else int)");
    mul_cmd->add_option("--out", mul.out_path, "Output file (default: standard output)");
    mul_cmd->add_flag("--report", mul.report, "Print the cost report as JSON");

    std::int64_t lmax = 8, nmax = 9, mmax = 8;
    std::string table_format = "csv";
    auto* table_cmd = app.add_subcommand("table", "Multiplication counts for odd inner dimension");
    table_cmd->add_option("--lmax", lmax);
    table_cmd->add_option("--nmax", nmax);
    table_cmd->add_option("--mmax", mmax);
    table_cmd->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run the verification suites");
    verify_cmd->add_option("--suite", verify.suite)->check(CLI::IsMember({"symbolic", "random", "counts", "taint", "all"}));
    verify_cmd->add_option("--seed", verify.seed);
    verify_cmd->add_option("--max-shape", verify.max_shape, "Largest l,n,m to check");
    verify_cmd->add_option("--trials", verify.trials, "Random trials per shape and ring");
    verify_cmd->add_option("--mutant", verify.mutant, "Check a deliberately broken schedule instead");

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "Wall-clock comparison of the applicable strategies");
    bench_cmd->add_option("--shape", bench.shape, "l,n,m")->required();
    bench_cmd->add_option("--ring", bench.ring, "int:BITS or mod:P");
    bench_cmd->add_option("--reps", bench.reps);
    bench_cmd->add_option("--format", bench.format)->check(CLI::IsMember({"csv", "json"}));
    bench_cmd->add_option("--strategy", bench.strategy);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    if (mul_cmd->parsed()) return cmd_mul(mul, out, err);
    if (table_cmd->parsed()) return cmd_table(lmax, nmax, mmax, table_format, out, err);
    if (verify_cmd->parsed()) return cmd_verify(verify, out, err);
    return cmd_bench(bench, out, err);
}

}  // namespace commat::cli
