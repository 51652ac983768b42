/**
 * @file acceptance.cpp
 * @brief Acceptance runner: one PASS/FAIL line per criterion.
 *
 * Exit status is 0 when every criterion passes or fails only as a recorded
 * known failure, and 1 otherwise (including a known failure that starts
 * passing).
 */

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support/catalogue.hpp"
#include "support/oracle.hpp"
#include "troprec/detector.hpp"
#include "troprec/entropy.hpp"
#include "troprec/json_io.hpp"
#include "troprec/recurrence.hpp"
#include "troprec/witnesses.hpp"

using namespace troprec;
using troprec::test::q;
using troprec::test::vec;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

struct outcome {
    bool pass = true;
    std::string detail;
    std::optional<std::string> known_failure;  ///< sub-check expected to fail; reported, strict
    bool known_failure_passed = false;
};

struct runner {
    int unexpected = 0;

    void report(int id, const std::string& title, const std::function<outcome()>& body) {
        outcome o;
        const auto t0 = clock_type::now();
        try {
            o = body();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double elapsed = seconds_since(t0);
        const bool known = o.known_failure.has_value();
        const bool pass = o.pass && !known;
        std::string line = pass ? "PASS" : "FAIL";
        line += " [" + std::to_string(id) + "] " + title + " (" + fmt_seconds(elapsed) + ")";
        if (!o.detail.empty()) line += ": " + o.detail;
        if (known) line += " | known failure: " + *o.known_failure;
        if (o.known_failure_passed) line += " | a known failure now passes: update the record";
        std::cout << line << std::endl;
        if (!o.pass || o.known_failure_passed) ++unexpected;
    }
};

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::set<std::size_t> cycle_lengths(const detector_verdict& v) {
    std::set<std::size_t> out;
    for (const auto& c : v.cycles) out.insert(c.size());
    return out;
}

std::string join(const std::set<std::size_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return "{" + s + "}";
}

bool arrows_ok(const coefficient_vector& a, const window_graph& g, std::uint64_t& count) {
    const auto& v = g.letters();
    for (vertex_id x = 0; x < g.vertex_count(); ++x) {
        const auto base = window_word(v, g.vertices()[x]);
        for (vertex_id y : g.successors(x)) {
            auto z = base;
            z.values.push_back(v.value(g.vertices()[y].back()));
            if (!satisfies_and_minimal(a, z)) return false;
            ++count;
        }
    }
    return true;
}

bool witness_ok(const coefficient_vector& a, const detection& d, std::size_t& length) {
    if (!d.verdict.witness) return false;
    const std::size_t min_length = 4 * static_cast<std::size_t>(2 * a.n() + 1);
    for (int variant = 0; variant < 2; ++variant) {
        auto w = unroll_witness(d.pruned, *d.verdict.witness, min_length, variant);
        length = w.size();
        if (w.size() < min_length || !satisfies_and_minimal(a, w)) return false;
    }
    return true;
}

equalize_grids random_grids(const finite_word& y, std::mt19937_64& rng) {
    std::vector<rational> fr{q(0)};
    for (const auto& v : y.values) fr.push_back(v.frac());
    std::uniform_int_distribution<int> extra(0, 3), pos(1, 47);
    for (int i = extra(rng); i > 0; --i) fr.push_back(q(pos(rng), 48));
    std::sort(fr.begin(), fr.end());
    fr.erase(std::unique(fr.begin(), fr.end()), fr.end());
    std::bernoulli_distribution keep(0.7);
    equalize_grids g;
    for (const auto& f : fr)
        if (f == q(0) || keep(rng)) g.c.push_back(f);
    std::set<int> picks;
    std::uniform_int_distribution<int> pick(1, 95);
    while (picks.size() + 1 < g.c.size()) picks.insert(pick(rng));
    g.e.push_back(q(0));
    for (int p : picks) g.e.push_back(q(p, 96));
    return g;
}

}  // namespace

int main() {
    runner r;

    // Detector runs shared by criteria 1, 2 and 9.
    struct run {
        std::string text;
        std::optional<detection> d;
        double seconds = 0;
        std::optional<std::string> limit;
    };
    const std::vector<std::string> suite{"0,0", "0,1,0", "0,2,0", "0,1,2,0", "0,1,3,0"};
    std::map<std::string, run> runs;
    auto run_detect = [&](const std::string& s, std::optional<std::uint64_t> budget) {
        run x{s, std::nullopt, 0, std::nullopt};
        const auto t0 = clock_type::now();
        try {
            x.d = detect(vec(s), {budget, 1});
        } catch (const error& e) {
            if (e.code() != errc::state_limit_exceeded) throw;
            x.limit = e.what();
        }
        x.seconds = seconds_since(t0);
        runs[s] = std::move(x);
    };

    r.report(1, "verdict suite", [&] {
        outcome o;
        for (const auto& s : suite) run_detect(s, std::nullopt);
        struct expect {
            verdict_kind kind;
            std::set<std::size_t> allowed;
            double budget;
        };
        const std::map<std::string, expect> want{
            {"0,0", {verdict_kind::all_periodic, {1}, 10}},
            {"0,1,0", {verdict_kind::all_periodic, {1, 2}, 10}},
            {"0,2,0", {verdict_kind::all_periodic, {1, 2}, 10}},
            {"0,1,2,0", {verdict_kind::all_periodic, {1, 3}, 600}},
            {"0,1,3,0", {verdict_kind::non_periodic_exists, {}, 600}},
        };
        for (const auto& s : suite) {
            const auto& x = runs[s];
            const auto& e = want.at(s);
            const auto& v = x.d->verdict;
            const auto lengths = cycle_lengths(v);
            bool ok = v.verdict == e.kind && x.seconds <= e.budget;
            if (e.kind == verdict_kind::all_periodic)
                for (auto len : lengths) ok = ok && e.allowed.count(len);
            o.pass = o.pass && ok;
            o.detail += "(" + s + ") " + std::string(to_string(v.verdict));
            if (e.kind == verdict_kind::all_periodic) o.detail += " cycles " + join(lengths);
            o.detail += " " + fmt_seconds(x.seconds) + "; ";
        }
        // Stretch target: a verdict or a clean state-limit abort are both acceptable.
        run_detect("0,1,0,2,0", 60'000'000);
        const auto& st = runs["0,1,0,2,0"];
        if (st.limit) {
            o.detail += "(0,1,0,2,0) StateLimitExceeded at 60000000 " + fmt_seconds(st.seconds);
        } else {
            const bool ok = st.d->verdict.verdict == verdict_kind::non_periodic_exists && st.seconds <= 3600;
            o.pass = o.pass && ok;
            o.detail += "(0,1,0,2,0) " + std::string(to_string(st.d->verdict.verdict)) + " " + fmt_seconds(st.seconds);
        }
        return o;
    });

    r.report(2, "witness certification", [&] {
        outcome o;
        int checked = 0;
        for (auto& [s, x] : runs) {
            if (!x.d || x.d->verdict.verdict != verdict_kind::non_periodic_exists) continue;
            std::size_t len = 0;
            const bool ok = witness_ok(vec(s), *x.d, len);
            o.pass = o.pass && ok;
            ++checked;
            o.detail += "(" + s + ") " + (x.d->verdict.witness->type == witness_structure::kind::branching ? "Branching" : "TwoCycles") +
                        " word length " + std::to_string(len) + (ok ? " ok; " : " FAILED; ");
        }
        if (checked == 0) o.pass = false;
        return o;
    });


    r.report(3, "oracle equivalence", [&] {
        outcome o;
        for (auto s : {"0,0", "0,1,0", "0,2,0"}) {
            auto a = vec(s);
            auto v = build_alphabet(a);
            auto fast = enumerate_windows(a, v);
            auto brute = oracle::brute_windows(a, v);
            bool ok = fast.size() == brute.size();
            for (std::size_t i = 0; ok && i < brute.size(); ++i)
                ok = std::equal(brute[i].begin(), brute[i].end(), fast[i].begin(), fast[i].end());
            o.pass = o.pass && ok;
            o.detail += "windows (" + std::string(s) + ") " + std::to_string(brute.size()) + (ok ? "; " : " MISMATCH; ");
        }
        int cases = 0, mismatches = 0;
        for (const auto& s : troprec::test::small_catalogue()) {
            auto a = vec(s);
            for (auto mode : {entropy_mode::satisfy, entropy_mode::minimal})
                for (int len = a.n() + 1; len <= 8; ++len) {
                    ++cases;
                    if (dimension_search(a, len, mode).value != oracle::brute_dimension(a, len, mode)) ++mismatches;
                }
        }
        o.pass = o.pass && mismatches == 0;
        o.detail += "dimensions " + std::to_string(cases - mismatches) + "/" + std::to_string(cases) + " agree";
        return o;
    });

    r.report(4, "entropy brackets", [&] {
        outcome o;
        const auto t0 = clock_type::now();
        std::map<std::pair<std::string, entropy_mode>, dimension_table> tables;
        for (const auto& s : troprec::test::small_catalogue())
            for (auto mode : {entropy_mode::satisfy, entropy_mode::minimal}) tables[{s, mode}] = entropy_report(vec(s), 9, mode);
        const double table_seconds = seconds_since(t0);
        auto values = [](const dimension_table& t) {
            std::vector<int> v;
            for (const auto& row : t.rows) v.push_back(row.value);
            return v;
        };

        const auto& z = tables[{"0,0,0", entropy_mode::satisfy}];
        bool ok = true;
        for (const auto& row : z.rows) ok = ok && row.ratio >= q(1, 3);
        o.detail += "(0,0,0) d_3..d_9=" + join(values(z)) + (ok ? " >= s/3" : " BELOW s/3");
        o.pass = o.pass && ok;

        const auto& o1 = tables[{"0,1,0", entropy_mode::satisfy}];
        ok = true;
        for (const auto& row : o1.rows) ok = ok && row.ratio >= q(1, 4) && row.value <= row.s - row.s / 2;
        o.detail += "; (0,1,0) d_3..d_9=" + join(values(o1)) + (ok ? " >= s/4 and <= s-floor(s/2)" : " OUT OF BRACKET");
        o.pass = o.pass && ok;

        const auto& p3 = tables[{"0,1,3,0", entropy_mode::minimal}];
        ok = true;
        for (const auto& row : p3.rows) ok = ok && row.ratio >= q(1, 9);
        o.detail += "; (0,1,3,0) m_4..m_9=" + join(values(p3)) + (ok ? " >= s/9" : " BELOW s/9");
        o.pass = o.pass && ok;

        auto reg = entropy_report(vec("0,0"), 10, entropy_mode::satisfy);
        ok = true;
        for (const auto& row : reg.rows) ok = ok && row.value == 1;
        o.detail += "; (0,0) d_2..d_10=" + join(values(reg));
        o.pass = o.pass && ok;

        ok = table_seconds <= 600;
        o.detail += "; all tables to s=9 in " + fmt_seconds(table_seconds);
        o.pass = o.pass && ok;

        const auto& zm = tables[{"0,0,0", entropy_mode::minimal}];
        bool ones = true;
        for (const auto& row : zm.rows) ones = ones && row.value == 1;
        if (ones)
            o.known_failure_passed = true;
        else
            o.known_failure = "m_s = 1 for (0,0,0) does not hold for finite words: m_3..m_9=" + join(values(zm)) +
                              " (e.g. (5,0,0,0,5) tight at every interior position spans a 3-dimensional cell)";
        return o;
    });

    r.report(5, "subadditivity", [&] {
        outcome o;
        int checks = 0, violations = 0;
        for (const auto& s : troprec::test::small_catalogue())
            for (auto mode : {entropy_mode::satisfy, entropy_mode::minimal}) {
                auto t = entropy_report(vec(s), 9, mode);
                const int lo = t.rows.front().s;
                for (int i = lo; i <= 9; ++i)
                    for (int j = lo; i + j <= 9; ++j) {
                        ++checks;
                        if (t.row(i + j)->value > t.row(i)->value + t.row(j)->value) ++violations;
                    }
                if (!t.subadditive) ++violations;
            }
        o.pass = violations == 0;
        o.detail = std::to_string(checks) + " inequalities, " + std::to_string(violations) + " violations";
        return o;
    });

    r.report(6, "construction suite", [&] {
        outcome o;
        const auto t0 = clock_type::now();
        const index_range range{-30, 30};
        auto note = [&](const std::string& name, const coefficient_vector& a, const finite_word& w, bool need_minimal) {
            const bool ok = w.size() >= 50 && (need_minimal ? satisfies_and_minimal(a, w) : satisfies(a, w));
            o.pass = o.pass && ok;
            o.detail += name + (ok ? " ok; " : " FAILED; ");
        };
        auto b = vec("0,0,inf,0");
        note("bump (0,0,inf,0)", b, generate_bump_witness(b, {-20, 0, 12}, {q(1), q(1, 2), q(3)}, range), true);
        auto p = vec("0,1,0,2,0");
        for (auto qq : {q(1, 2), q(1)}) note("parity q=" + qq.str(), p, generate_parity_witness(p, qq, range), true);
        auto t = vec("0,1,3,0");
        for (auto e : {q(1, 2), q(1)}) note("period-3 e=" + e.str(), t, generate_period3_witness(t, e, range), true);
        auto g = vec("2,0,0,2");
        note("polygon (2,0,0,2)", g, generate_polygon_witness(g, {3, 2, 3}, range), false);
        const double elapsed = seconds_since(t0);
        o.pass = o.pass && elapsed <= 5;
        o.detail += "range length " + std::to_string(range.length());
        return o;
    });

    r.report(7, "equalizing map", [&] {
        outcome o;
        const auto t0 = clock_type::now();
        std::mt19937_64 rng(7);
        const auto& cat = troprec::test::integer_catalogue();
        int done = 0, bad = 0;
        for (std::size_t i = 0; done < 500; ++i) {
            auto a = vec(cat[i % cat.size()]);
            std::uniform_int_distribution<int> len(2 * a.n() + 2, 24);
            for (auto& y : oracle::random_satisfying_words(a, len(rng), 10, rng(), true)) {
                if (!satisfies_and_minimal(a, equalize(y, random_grids(y, rng)))) ++bad;
                ++done;
            }
        }
        const double elapsed = seconds_since(t0);
        o.pass = bad == 0 && elapsed <= 60;
        o.detail = std::to_string(done) + " minimal words, " + std::to_string(bad) + " failures";
        return o;
    });

    r.report(8, "closure under min", [&] {
        outcome o;
        std::mt19937_64 rng(8);
        std::uniform_int_distribution<int> shift(-16, 16);
        const auto& cat = troprec::test::small_catalogue();
        int done = 0, bad = 0;
        for (std::size_t i = 0; done < 500; ++i) {
            auto a = vec(cat[i % cat.size()]);
            std::uniform_int_distribution<int> len(a.n() + 1, 24);
            const int l = len(rng);
            auto ws = oracle::random_satisfying_words(a, l, 20, rng());
            for (std::size_t k = 0; k + 1 < ws.size(); k += 2) {
                if (!satisfies(a, pointwise_min(ws[k], ws[k + 1], q(shift(rng), 4), q(shift(rng), 4)))) ++bad;
                ++done;
            }
        }
        o.pass = bad == 0;
        o.detail = std::to_string(done) + " pairs, " + std::to_string(bad) + " failures";
        return o;
    });

    r.report(9, "arrow condition", [&] {
        outcome o;
        for (auto& [s, x] : runs) {
            if (!x.d) continue;
            std::uint64_t count = 0;
            const bool ok = arrows_ok(vec(s), x.d->full, count);
            o.pass = o.pass && ok && count == x.d->full.arrow_count();
            o.detail += "(" + s + ") " + std::to_string(count) + " arrows" + (ok ? "; " : " FAILED; ");
        }
        return o;
    });
    runs.clear();

    r.report(10, "determinism", [&] {
        outcome o;
        int compared = 0;
        for (auto s : {"0,1,0", "0,1,2,0", "0,1,3,0"}) {
            std::set<std::string> json, dot;
            for (unsigned threads : {1u, 1u, 2u, 4u}) {
                auto d = detect(vec(s), {std::nullopt, threads});
                json.insert(json_io::detect_report(d).dump(2));
                dot.insert(to_dot(d.full) + to_dot(d.pruned));
                ++compared;
            }
            o.pass = o.pass && json.size() == 1 && dot.size() == 1;
        }
        for (auto s : {"0,1,3,0", "0,0,0"}) {
            for (auto mode : {entropy_mode::satisfy, entropy_mode::minimal}) {
                std::set<std::string> json;
                for (unsigned threads : {1u, 1u, 3u, 8u}) {
                    json.insert(json_io::entropy_report_json(entropy_report(vec(s), 9, mode, threads)).dump(2));
                    ++compared;
                }
                o.pass = o.pass && json.size() == 1;
            }
        }
        o.detail = std::to_string(compared) + " runs over thread counts 1-8, outputs " + (o.pass ? "identical" : "DIFFER");
        return o;
    });

    std::cout << (r.unexpected ? "acceptance: unexpected results" : "acceptance: all criteria as recorded") << std::endl;
    return r.unexpected ? 1 : 0;
}
