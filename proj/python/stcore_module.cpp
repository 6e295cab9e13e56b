#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "stcore/anderson.hpp"
#include "stcore/enumeration.hpp"
#include "stcore/sampling.hpp"
#include "stcore/watson.hpp"

namespace py = pybind11;
using namespace stcore;

namespace {

// Exact integers and rationals cross the boundary as decimal strings.
py::object py_int(const std::string& digits) { return py::module_::import("builtins").attr("int")(digits); }
py::object py_int(Count v) { return py_int(to_string(v)); }
py::object py_int(const BigInt& v) { return py_int(v.str()); }
py::object py_fraction(const Rational& q) { return py::module_::import("fractions").attr("Fraction")(to_string(q)); }

BallotWord ballot(const std::string& text) { return BallotWord::parse(text); }

}  // namespace

PYBIND11_MODULE(stcore, m) {
    m.doc() = "Simultaneous core partitions, ballot words and the U^2 limit law";

    py::register_exception<std::overflow_error>(m, "OverflowError", PyExc_OverflowError);

    m.def("is_ballot", [](const std::string& w, std::uint64_t s, std::uint64_t t) {
        return is_ballot(Word::parse(w), s, t);
    });
    m.def("pattern_counts", [](const std::string& w) {
        const auto c = pattern_counts(Word::parse(w));
        py::dict d;
        d["STST"] = py_int(c.stst);
        d["TSTS"] = py_int(c.tsts);
        d["ST"] = py_int(c.st);
        d["TS"] = py_int(c.ts);
        return d;
    });
    m.def("count_subsequence", [](const std::string& w, const std::string& pattern) {
        return py_int(count_subsequence(Word::parse(w), Word::parse(pattern)));
    });
    m.def(
        "rotate_to_ballot",
        [](const std::string& text) {
            const Word w = Word::parse(text);
            const auto r = rotate_to_ballot(w, w.s_count(), w.t_count());
            return py::make_tuple(r.word.str(), r.offset);
        },
        "Unique ballot rotation of a word with coprime letter counts, and its offset.");

    m.def("hook_lengths", [](const std::vector<std::uint64_t>& rows) { return hook_lengths(Partition(rows)); });
    m.def("is_p_core", [](const std::vector<std::uint64_t>& rows, std::uint64_t q) {
        return is_p_core(Partition(rows), q);
    });
    m.def("first_column_hooks", [](const std::vector<std::uint64_t>& rows) {
        return first_column_hooks(Partition(rows));
    });
    m.def("partition_from_hookset", [](const std::vector<std::uint64_t>& a) {
        return partition_from_hookset(a).rows();
    });

    m.def("word_to_downset", [](const std::string& w) { return word_to_downset(ballot(w)).elements(); });
    m.def("downset_to_word", [](const std::vector<std::uint64_t>& a, std::uint64_t s, std::uint64_t t) {
        return downset_to_word(Downset(normalize_hookset(a), s, t)).str();
    });
    m.def("word_to_partition", [](const std::string& w) { return word_to_partition(ballot(w)).rows(); });
    m.def("partition_to_word", [](const std::vector<std::uint64_t>& rows, std::uint64_t s, std::uint64_t t) {
        return partition_to_word(Partition(rows), s, t).str();
    });
    m.def("size_from_word", [](const std::string& w) { return py_int(size_from_word(ballot(w))); });
    m.def("max_core_size", [](std::uint64_t s, std::uint64_t t) { return py_int(max_core_size(s, t)); });

    m.def("rational_catalan", [](std::uint64_t s, std::uint64_t t) { return py_int(rational_catalan(s, t)); });
    m.def("enumerate_ballot_words", [](std::uint64_t s, std::uint64_t t) {
        std::vector<std::string> out;
        for_each_ballot_word(s, t, [&](const BallotWord& w) { out.push_back(w.str()); });
        return out;
    });
    m.def(
        "exact_size_distribution",
        [](std::uint64_t s, std::uint64_t t, unsigned threads) {
            SizeDistribution d;
            {
                py::gil_scoped_release release;
                d = exact_size_distribution(s, t, threads);
            }
            py::dict out;
            for (const auto& [size, count] : d.counts) out[py::int_(size)] = py_int(count);
            return out;
        },
        py::arg("s"), py::arg("t"), py::arg("threads") = 1);
    m.def(
        "exact_moments",
        [](std::uint64_t s, std::uint64_t t, unsigned order) {
            const auto mo = exact_moments(exact_size_distribution(s, t), order);
            py::dict out;
            out["mean"] = py_fraction(mo.mean);
            out["variance"] = py_fraction(mo.variance);
            py::list raw, central;
            for (const auto& q : mo.raw) raw.append(py_fraction(q));
            for (const auto& q : mo.central) central.append(py_fraction(q));
            out["raw"] = raw;
            out["central"] = central;
            return out;
        },
        py::arg("s"), py::arg("t"), py::arg("order") = 4);
    m.def("closed_form_mean", [](std::uint64_t s, std::uint64_t t) { return py_fraction(closed_form_mean(s, t)); });
    m.def("closed_form_variance",
          [](std::uint64_t s, std::uint64_t t) { return py_fraction(closed_form_variance(s, t)); });
    m.def("brute_force_cores", [](std::uint64_t s, std::uint64_t t) {
        std::vector<std::vector<std::uint64_t>> out;
        for (const auto& p : brute_force_cores(s, t)) out.push_back(p.rows());
        return out;
    });

    m.def(
        "sample",
        [](std::uint64_t s, std::uint64_t t, std::uint64_t n, std::uint64_t seed, unsigned shards) {
            std::vector<NormalizedSample> xs;
            {
                py::gil_scoped_release release;
                xs = monte_carlo_normalized({s, t, n, seed, shards});
            }
            py::list sizes;
            std::vector<double> normalized;
            normalized.reserve(xs.size());
            for (const auto& x : xs) {
                sizes.append(py_int(x.raw_size));
                normalized.push_back(x.normalized);
            }
            return py::make_tuple(sizes, normalized);
        },
        py::arg("s"), py::arg("t"), py::arg("n"), py::arg("seed"), py::arg("shards") = 1,
        "Seeded uniform core sizes: (raw sizes, normalized sizes).");
    m.def(
        "sample_core_partition",
        [](std::uint64_t s, std::uint64_t t, std::uint64_t seed) {
            Rng rng(seed);
            return sample_core_partition(s, t, rng).rows();
        },
        py::arg("s"), py::arg("t"), py::arg("seed"));

    m.def("persson_u2", [](const std::string& w) { return py_fraction(persson_u2(Word::parse(w))); });
    m.def("size_u2_bridge", [](const std::string& w) {
        const auto b = size_u2_bridge(ballot(w));
        return py::make_tuple(py_int(b.size), py_fraction(b.u2), py_fraction(b.residual));
    });
    m.def("u2_tail", &u2_tail);
    m.def("u2_cdf", &u2_cdf);
    m.def("u2_quantile", [](double p) { return U2Limit{}.quantile(p); });
    m.def("ks_against_limit", [](const std::vector<double>& xs) { return ks_against_limit(xs).ks_distance; });

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, py::bytes(out.str()), err.str());
        },
        "Runs the command line in-process: (exit code, stdout bytes, stderr text).");
}
