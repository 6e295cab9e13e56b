#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "stcore/anderson.hpp"
#include "stcore/enumeration.hpp"
#include "stcore/sampling.hpp"
#include "stcore/watson.hpp"

namespace stcore::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt_double(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

void require_pair(std::uint64_t s, std::uint64_t t) {
    try {
        require_coprime(s, t);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void require_budget(std::uint64_t s, std::uint64_t t, std::uint64_t max_count) {
    const BigInt n = rational_catalan(s, t);
    if (n > max_count) {
        throw BudgetError("enumerating (" + std::to_string(s) + "," + std::to_string(t) + ") visits " +
                          n.str() + " ballot words, over the budget of " +
                          std::to_string(max_count) + " (raise --max-count)");
    }
}

// Writes to --out when given, else to the caller's stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback, bool binary) {
        if (path.empty() || path == "-") {
            os_ = &fallback;
            return;
        }
        file_ = std::make_unique<std::ofstream>(
            path, binary ? std::ios::out | std::ios::binary : std::ios::out);
        if (!*file_) throw UsageError("cannot open output file '" + path + "'");
        os_ = file_.get();
    }
    std::ostream& stream() { return *os_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* os_ = nullptr;
};

// ---------------------------------------------------------------- enumerate

struct EnumerateOpts {
    std::uint64_t s = 0, t = 0;
    std::string format = "csv";
    std::string out;
    std::uint64_t max_count = 100000000;
    unsigned threads = 1;
};

int cmd_enumerate(const EnumerateOpts& o, std::ostream& out) {
    require_pair(o.s, o.t);
    require_budget(o.s, o.t, o.max_count);
    const auto dist = exact_size_distribution(o.s, o.t, o.threads);
    Sink sink(o.out, out, false);
    if (o.format == "json") {
        sink.stream() << to_json(dist) << '\n';
    } else {
        write_csv(sink.stream(), dist);
    }
    return kOk;
}

// ---------------------------------------------------------------- sample

struct SampleOpts {
    std::uint64_t s = 0, t = 0, n = 0, seed = 0;
    std::string emit = "all";
    std::string format = "csv";
    std::string out;
    unsigned shards = 1;
};

int cmd_sample(const SampleOpts& o, std::ostream& out) {
    require_pair(o.s, o.t);
    if (o.n == 0) throw UsageError("--n must be at least 1");
    if (o.shards == 0) throw UsageError("--shards must be at least 1");
    if (o.format == "binary" && o.emit != "all" && o.emit != "sizes") {
        throw UsageError("--format binary carries raw sizes only; use --emit sizes");
    }
    const auto samples = monte_carlo_normalized({o.s, o.t, o.n, o.seed, o.shards});
    Sink sink(o.out, out, o.format == "binary");
    std::ostream& os = sink.stream();
    if (o.format == "binary") {
        write_samples_binary(os, o.s, o.t, samples);
        return kOk;
    }
    if (o.emit == "all") {
        write_samples_csv(os, samples);
        return kOk;
    }
    const std::string column = o.emit == "sizes" ? "raw_size" : o.emit;
    os << "index," << column << '\n';
    for (std::size_t i = 0; i < samples.size(); ++i) {
        os << i << ',';
        if (o.emit == "sizes") {
            os << to_string(samples[i].raw_size);
        } else if (o.emit == "normalized") {
            os << fmt_double("%.17g", samples[i].normalized);
        } else {
            const Rational u2 = u2_from_core_size(o.s, o.t, samples[i].raw_size);
            os << fmt_double("%.17g", u2.convert_to<double>());
        }
        os << '\n';
    }
    return kOk;
}

// ---------------------------------------------------------------- moments

struct MomentsOpts {
    std::uint64_t s = 0, t = 0;
    unsigned order = 4;
    std::uint64_t max_count = 100000000;
    std::string out;
};

int cmd_moments(const MomentsOpts& o, std::ostream& out, std::ostream& err) {
    require_pair(o.s, o.t);
    if (o.order == 0) throw UsageError("--order must be at least 1");
    require_budget(o.s, o.t, o.max_count);
    const auto m = exact_moments(exact_size_distribution(o.s, o.t), o.order);
    const Rational mean_cf = closed_form_mean(o.s, o.t);
    const Rational var_cf = closed_form_variance(o.s, o.t);
    const bool mean_ok = m.mean == mean_cf;
    const bool var_ok = m.variance == var_cf;

    Sink sink(o.out, out, false);
    std::ostream& os = sink.stream();
    os << "quantity,enumerated,closed_form,match\n";
    os << "mean," << to_string(m.mean) << ',' << to_string(mean_cf) << ',' << (mean_ok ? "yes" : "no") << '\n';
    os << "variance," << to_string(m.variance) << ',' << to_string(var_cf) << ','
       << (var_ok ? "yes" : "no") << '\n';
    for (unsigned k = 1; k <= o.order; ++k) os << "raw_" << k << ',' << to_string(m.raw[k - 1]) << ",,\n";
    for (unsigned k = 1; k <= o.order; ++k) {
        os << "central_" << k << ',' << to_string(m.central[k - 1]) << ",,\n";
    }
    if (!mean_ok || !var_ok) {
        err << "moments: enumerated moments disagree with the closed forms\n";
        return kVerifyFailed;
    }
    return kOk;
}

// ---------------------------------------------------------------- limit

struct LimitOpts {
    std::vector<double> eval;
    std::string table;
    std::string out;
};

std::vector<double> parse_table(const std::string& spec) {
    double a = 0, b = 0, step = 0;
    char c1 = 0, c2 = 0;
    int consumed = 0;
    if (std::sscanf(spec.c_str(), "%lf%c%lf%c%lf%n", &a, &c1, &b, &c2, &step, &consumed) != 5 ||
        c1 != ':' || c2 != ':' || consumed != static_cast<int>(spec.size())) {
        throw UsageError("--table expects start:stop:step, got '" + spec + "'");
    }
    if (!(step > 0) || b < a) throw UsageError("--table needs step > 0 and stop >= start");
    const auto rows = static_cast<std::uint64_t>(std::floor((b - a) / step + 1e-9)) + 1;
    if (rows > 10000000) throw UsageError("--table would emit more than 10^7 rows");
    std::vector<double> xs(rows);
    for (std::uint64_t i = 0; i < rows; ++i) xs[i] = a + static_cast<double>(i) * step;
    return xs;
}

int cmd_limit(const LimitOpts& o, std::ostream& out) {
    std::vector<double> xs = o.eval;
    if (!o.table.empty()) {
        const auto grid = parse_table(o.table);
        xs.insert(xs.end(), grid.begin(), grid.end());
    }
    if (xs.empty()) throw UsageError("limit needs --eval or --table");
    const U2Limit law;
    Sink sink(o.out, out, false);
    std::ostream& os = sink.stream();
    os << "x,tail,cdf\n";
    for (double x : xs) {
        const double tail = law.tail(x);
        os << fmt_double("%.10g", x) << ',' << fmt_double("%.15e", tail) << ','
           << fmt_double("%.15e", 1.0 - tail) << '\n';
    }
    return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyOpts {
    std::uint64_t max_sum = 8;
    std::uint64_t max_count = 1000000;
};

class Battery {
public:
    explicit Battery(std::ostream& os) : os_(os) {}

    void check(std::uint64_t s, std::uint64_t t, const std::string& name, bool ok,
               const std::string& detail) {
        os_ << (ok ? "PASS" : "FAIL") << " (" << s << "," << t << ") " << name << ": " << detail << '\n';
        failed_ = failed_ || !ok;
    }
    bool failed() const { return failed_; }

private:
    std::ostream& os_;
    bool failed_ = false;
};

void verify_pair(std::uint64_t s, std::uint64_t t, Battery& bat) {
    const auto words = enumerate_ballot_words(s, t);
    const auto cores = brute_force_cores(s, t);
    const BigInt catalan = rational_catalan(s, t);
    bat.check(s, t, "count", catalan == cores.size() && catalan == words.size(),
              "catalan " + catalan.str() + ", brute force " + std::to_string(cores.size()) +
                  ", ballot words " + std::to_string(words.size()));

    std::optional<std::string> roundtrip_bad, prop1_bad, ts_bad, core_bad, bridge_bad;
    std::vector<std::uint64_t> bijection_sizes;
    for (const auto& w : words) {
        const Downset a = word_to_downset(w);
        const Partition p = partition_from_hookset(a.elements());
        if (!roundtrip_bad && (!(downset_to_word(a) == w) || !(partition_to_word(p, s, t) == w))) {
            roundtrip_bad = w.str();
        }
        const Count size = size_from_word(w);
        if (!prop1_bad && size != p.size()) {
            prop1_bad = w.str() + " formula " + to_string(size) + " vs boxes " + std::to_string(p.size());
        }
        if (const auto c = ts_count_identity_check(w); !ts_bad && c.predicted != c.actual) {
            ts_bad = w.str();
        }
        if (!core_bad && !(is_p_core(p, s) && is_p_core(p, t))) core_bad = w.str() + " -> " + p.str();
        if (!bridge_bad && size_u2_bridge(w).residual != 0) bridge_bad = w.str();
        bijection_sizes.push_back(p.size());
    }
    auto report = [&](const std::string& name, const std::optional<std::string>& bad) {
        bat.check(s, t, name, !bad, bad ? "counterexample " + *bad : std::to_string(words.size()) + " words");
    };
    report("bijection-roundtrip", roundtrip_bad);
    report("size-formula", prop1_bad);
    report("downset-cardinality", ts_bad);
    report("core-property", core_bad);
    report("u2-bridge", bridge_bad);

    std::vector<std::uint64_t> brute_sizes;
    for (const auto& p : cores) brute_sizes.push_back(p.size());
    std::sort(brute_sizes.begin(), brute_sizes.end());
    std::sort(bijection_sizes.begin(), bijection_sizes.end());
    bat.check(s, t, "size-multiset", brute_sizes == bijection_sizes,
              "brute force vs bijection over " + std::to_string(cores.size()) + " cores");

    const auto m = exact_moments(exact_size_distribution(s, t), 2);
    const bool mean_ok = m.mean == closed_form_mean(s, t);
    const bool var_ok = m.variance == closed_form_variance(s, t);
    bat.check(s, t, "moments", mean_ok && var_ok,
              "mean " + to_string(m.mean) + ", variance " + to_string(m.variance));
}

int cmd_verify(const VerifyOpts& o, std::ostream& out) {
    if (o.max_sum < 2) throw UsageError("--max-sum must be at least 2");
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    for (std::uint64_t total = 2; total <= o.max_sum; ++total) {
        for (std::uint64_t s = 1; s < total; ++s) {
            if (coprime(s, total - s)) pairs.emplace_back(s, total - s);
        }
    }
    // refuse before printing anything
    for (auto [s, t] : pairs) {
        require_budget(s, t, o.max_count);
        if (max_core_size(s, t) > 100000) {
            throw BudgetError("brute-force core search for (" + std::to_string(s) + "," +
                              std::to_string(t) + ") is too large; lower --max-sum");
        }
    }
    Battery bat(out);
    for (auto [s, t] : pairs) verify_pair(s, t, bat);
    out << (bat.failed() ? "verify: FAILED" : "verify: all checks passed") << '\n';
    return bat.failed() ? kVerifyFailed : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Simultaneous (s,t)-core partitions: exact enumeration, sampling and the U^2 limit"};
    app.require_subcommand(1);

    EnumerateOpts en;
    auto* enumerate = app.add_subcommand("enumerate", "exact size distribution of all (s,t)-cores");
    enumerate->add_option("--s", en.s, "first parameter")->required();
    enumerate->add_option("--t", en.t, "second parameter")->required();
    enumerate->add_option("--format", en.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    enumerate->add_option("--out", en.out, "output path (default: stdout)");
    enumerate->add_option("--max-count", en.max_count, "refuse to visit more ballot words than this");
    enumerate->add_option("--threads", en.threads, "worker threads")->check(CLI::PositiveNumber);

    SampleOpts sa;
    auto* sample = app.add_subcommand("sample", "Monte Carlo sizes of uniform random (s,t)-cores");
    sample->add_option("--s", sa.s, "first parameter")->required();
    sample->add_option("--t", sa.t, "second parameter")->required();
    sample->add_option("--n", sa.n, "number of samples")->required();
    sample->add_option("--seed", sa.seed, "64-bit RNG seed")->required();
    sample->add_option("--emit", sa.emit, "all, sizes, normalized or u2")
        ->check(CLI::IsMember({"all", "sizes", "normalized", "u2"}));
    sample->add_option("--format", sa.format, "csv or binary")->check(CLI::IsMember({"csv", "binary"}));
    sample->add_option("--out", sa.out, "output path (default: stdout)");
    sample->add_option("--shards", sa.shards, "independent RNG shards (part of the reproducibility key)");

    MomentsOpts mo;
    auto* moments = app.add_subcommand("moments", "exact moments next to the closed forms");
    moments->add_option("--s", mo.s, "first parameter")->required();
    moments->add_option("--t", mo.t, "second parameter")->required();
    moments->add_option("--order", mo.order, "highest moment order");
    moments->add_option("--max-count", mo.max_count, "refuse to visit more ballot words than this");
    moments->add_option("--out", mo.out, "output path (default: stdout)");

    LimitOpts li;
    auto* limit = app.add_subcommand("limit", "tail and CDF of the limiting U^2 law");
    limit->add_option("--eval", li.eval, "evaluation point (repeatable)");
    limit->add_option("--table", li.table, "start:stop:step grid");
    limit->add_option("--out", li.out, "output path (default: stdout)");

    VerifyOpts ve;
    auto* verify = app.add_subcommand("verify", "cross-check brute force, bijection and formulas");
    verify->add_option("--max-sum", ve.max_sum, "check every coprime pair with s + t <= this");
    verify->add_option("--max-count", ve.max_count, "per-pair ballot word budget (default 10^6)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*enumerate) return cmd_enumerate(en, out);
        if (*sample) return cmd_sample(sa, out);
        if (*moments) return cmd_moments(mo, out, err);
        if (*limit) return cmd_limit(li, out);
        if (*verify) return cmd_verify(ve, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << '\n';
        return kOverBudget;
    }
    return kUsage;
}

}  // namespace stcore::cli
