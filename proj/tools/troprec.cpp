/**
 * @file troprec.cpp
 * @brief Command-line front end: analyze, detect, entropy, check, witness.
 *
 * Exit codes: 0 success (detect: AllPeriodic), 2 invalid input or
 * inapplicable request, 3 NonPeriodicExists, 4 StateLimitExceeded,
 * 1 unexpected failure.
 */

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "troprec/coefficient_vector.hpp"
#include "troprec/detector.hpp"
#include "troprec/entropy.hpp"
#include "troprec/error.hpp"
#include "troprec/json_io.hpp"
#include "troprec/newton_polygon.hpp"
#include "troprec/recurrence.hpp"
#include "troprec/witnesses.hpp"

namespace {

using namespace troprec;

constexpr int exit_ok = 0;
constexpr int exit_unexpected = 1;
constexpr int exit_input = 2;
constexpr int exit_nonperiodic = 3;
constexpr int exit_state_limit = 4;

std::string set_str(const std::vector<int>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s + "}";
}

std::string point_str(const lattice_point& p) { return "(" + std::to_string(p.index) + "," + p.value.str() + ")"; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string progression_str(const std::vector<int>& xs) {
    int d = 0;
    if (is_arithmetic_progression(xs, &d)) return "arithmetic progression, difference " + std::to_string(d);
    return "not an arithmetic progression";
}

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string tok; std::getline(ss, tok, sep);) out.push_back(tok);
    return out;
}

index_range parse_range(const std::string& text) {
    auto parts = split(text, ':');
    if (parts.size() != 2) throw error(errc::malformed_token, "range must be 'lo:hi', got '" + text + "'");
    auto lo = rational::parse(parts[0]);
    auto hi = rational::parse(parts[1]);
    if (!lo.is_integer() || !hi.is_integer() || hi < lo)
        throw error(errc::malformed_token, "range must be integers lo <= hi, got '" + text + "'");
    return {lo.num(), hi.num()};
}

// Axis-normalizes a when P(a) has one bounded edge or when edge is given.
std::pair<coefficient_vector, std::optional<affine_normalization>> maybe_normalize(const coefficient_vector& a,
                                                                                  std::optional<int> edge) {
    const auto poly = compute_newton_polygon(a);
    if (!edge) {
        if (poly.edges.size() != 1)
            throw error(errc::edge_index_out_of_range, "P(a) has " + std::to_string(poly.edges.size()) +
                                                           " bounded edges; choose one with --edge");
        edge = 0;
    }
    auto [b, t] = normalize_edge(a, *edge);
    if (b == a) return {b, std::nullopt};
    return {b, t};
}

void print_normalization(const coefficient_vector& b, const std::optional<affine_normalization>& t) {
    if (!t) return;
    std::cout << "normalized vector: " << b.str() << "  (a'_i = " << t->scale << "*(a_i + " << t->alpha.str()
              << "*i + " << t->beta.str() << "))\n";
}

void print_check(const word_check& c) {
    std::cout << "satisfies: " << yes_no(c.satisfies) << "\n";
    if (!c.satisfies) {
        std::cout << "failing windows: " << set_str(c.failing_windows) << "\n";
        return;
    }
    std::cout << "minimal: " << yes_no(c.minimal) << "\n";
    if (!c.minimal) std::cout << "non-minimal positions: " << set_str(c.non_minimal_positions) << "\n";
}

int cmd_analyze(const std::string& text, bool as_json) {
    auto a = coefficient_vector::parse(text);
    if (as_json) {
        std::cout << json_io::vector_report(a).dump(2) << "\n";
        return exit_ok;
    }
    const auto poly = compute_newton_polygon(a);
    const auto reg = classify_regular(a);
    std::cout << "vector: " << a.str() << "\n"
              << "n: " << a.n() << "\n"
              << "M: " << a.max_finite().str() << "\n"
              << "support J: " << set_str(a.support()) << " (" << progression_str(a.support()) << ")\n"
              << "zero set S: " << set_str(a.zero_set()) << " (" << progression_str(a.zero_set()) << ")\n"
              << "hull vertices:";
    for (const auto& v : poly.hull_vertices) std::cout << " " << point_str(v);
    std::cout << "\n";
    for (std::size_t e = 0; e < poly.edges.size(); ++e) {
        const auto& g = poly.edges[e];
        std::cout << "edge " << e << ": " << point_str(g.start) << " -> " << point_str(g.end) << ", slope "
                  << g.slope.str() << ", on-edge " << set_str(g.on_edge) << " (" << progression_str(g.on_edge) << ")\n";
    }
    std::cout << "regular: " << (reg.is_regular ? "yes" : "no") << " (J " << (reg.j_is_progression ? "is" : "is not")
              << " a progression; " << (reg.all_points_are_vertices ? "every" : "not every")
              << " support point is a hull vertex)\n";
    if (!reg.is_regular) std::cout << "verdict: not regular\n";
    return exit_ok;
}

struct detect_args {
    std::string vector;
    std::optional<std::uint64_t> max_states;
    std::string dot;
    bool json = false;
    bool list_cycles = false;
    std::optional<int> edge;
    unsigned threads = 0;
};

int cmd_detect(const detect_args& args) {
    auto a = coefficient_vector::parse(args.vector);
    for (int i = 0; i <= a.n(); ++i)
        if (!a.finite(i))
            throw error(errc::infinite_coefficient, "a_" + std::to_string(i) +
                                                        " is infinite; the detector needs finite entries "
                                                        "(see `troprec witness --family prop1` for such vectors)");
    auto [b, t] = maybe_normalize(a, args.edge);

    enumeration_options opt;
    opt.threads = args.threads ? args.threads : default_threads();
    opt.max_states = args.max_states;
    if (!opt.max_states)
        if (const char* env = std::getenv("TROPREC_MAX_STATES"); env && *env) {
            auto v = rational::parse(env);
            if (!v.is_integer() || v <= rational(0))
                throw error(errc::malformed_token, "TROPREC_MAX_STATES must be a positive integer");
            opt.max_states = static_cast<std::uint64_t>(v.num());
        }

    const auto d = detect(b, opt);
    if (!args.dot.empty()) export_dot(d.pruned, args.dot);
    const auto& v = d.verdict;
    const int code = v.verdict == verdict_kind::all_periodic ? exit_ok : exit_nonperiodic;

    if (args.json) {
        std::cout << json_io::detect_report(d, t).dump(2) << "\n";
        return code;
    }
    std::cout << "vector: " << a.str() << "\n";
    print_normalization(b, t);
    const auto& s = v.stats;
    std::cout << "alphabet: " << s.alphabet_size << " letters, step 1/" << d.full.letters().denom << "\n"
              << "G0: " << s.g0_vertices << " windows, " << s.g0_arrows << " arrows\n"
              << "G:  " << s.g_vertices << " windows, " << s.g_arrows << " arrows after " << s.prune_rounds
              << " pruning round(s), " << s.components << " strongly connected component(s)\n"
              << "verdict: " << to_string(v.verdict) << "\n"
              << "stable periodic only: " << yes_no(v.stable_periodic_only) << "\n";
    if (v.verdict == verdict_kind::all_periodic) {
        std::map<std::size_t, std::size_t> hist;
        for (const auto& c : v.cycles) ++hist[c.size()];
        std::cout << "cycles: " << v.cycles.size() << " (";
        bool first = true;
        for (auto [len, cnt] : hist) {
            std::cout << (first ? "" : ", ") << cnt << " of length " << len;
            first = false;
        }
        std::cout << ")\n";
        if (args.list_cycles)
            for (const auto& p : periodic_solutions(d.pruned, v)) {
                finite_word w;
                w.values = p.values;
                std::cout << "  period " << p.period << ": " << w.str() << "\n";
            }
    } else if (v.witness) {
        const auto& w = *v.witness;
        const auto& g = d.pruned;
        auto label = [&](vertex_id x) { return "(" + window_label(g.letters(), g.vertices()[x]) + ")"; };
        if (w.type == witness_structure::kind::branching) {
            std::cout << "witness: Branching at " << label(w.v0) << " -> " << label(w.v1) << " | " << label(w.v2)
                      << "\n";
        } else {
            std::cout << "witness: TwoCycles, cycle lengths " << w.cycle_a.size() << " and " << w.cycle_b.size()
                      << ", connector of " << w.connector.size() << " window(s)\n";
        }
        auto word = unroll_witness(g, w, static_cast<std::size_t>(4 * (2 * b.n() + 1)));
        std::cout << "unrolled word (normalized frame): " << word.str() << "\n";
        print_check(check_word(b, word));
    }
    if (!args.dot.empty()) std::cout << "DOT written to " << args.dot << "\n";
    return code;
}

int cmd_entropy(const std::string& text, int s_max, bool minimal, bool as_json, unsigned threads) {
    auto a = coefficient_vector::parse(text);
    const auto t = entropy_report(a, s_max, minimal ? entropy_mode::minimal : entropy_mode::satisfy,
                                  threads ? threads : default_threads());
    if (as_json) {
        std::cout << json_io::entropy_report_json(t).dump(2) << "\n";
        return exit_ok;
    }
    const char* sym = minimal ? "m_s" : "d_s";
    std::cout << "vector: " << a.str() << "\nmode: " << to_string(t.mode) << "\n"
              << "   s  " << sym << "  ratio   cap s-floor(s/n)\n";
    for (const auto& r : t.rows) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%4d  %3d  %-7s %d\n", r.s, r.value, r.ratio.str().c_str(),
                      dimension_cap(r.s, a.n()));
        std::cout << buf;
    }
    std::cout << "h_upper: " << t.h_upper.str() << "\n"
              << "h_lower: " << (t.h_lower ? t.h_lower->str() : std::string("none")) << "\n";
    if (!t.lower_family.empty()) std::cout << "lower bound family: " << t.lower_family << "\n";
    std::cout << "subadditive: " << yes_no(t.subadditive) << "\n"
              << "within cap: " << yes_no(t.within_cap) << "\n"
              << "residue deltas " << sym << " - " << sym << "[s-" << a.n() + 1 << "]:";
    for (auto [s, delta] : t.residue_deltas) std::cout << " s=" << s << ":" << delta;
    std::cout << "\n";
    return exit_ok;
}

int cmd_check(const std::string& text, const std::string& word, const std::string& period, bool as_json) {
    auto a = coefficient_vector::parse(text);
    if (word.empty() == period.empty()) throw error(errc::malformed_token, "give exactly one of --word, --period");
    if (!word.empty()) {
        auto c = check_word(a, finite_word::parse(word));
        if (as_json)
            std::cout << json_io::check_report(c).dump(2) << "\n";
        else
            print_check(c);
        return exit_ok;
    }
    auto c = verify_periodic(a, periodic_sequence::parse(period));
    if (as_json) {
        std::cout << json_io::check_report(c).dump(2) << "\n";
        return exit_ok;
    }
    std::cout << "satisfies: " << yes_no(c.satisfies) << "\n";
    if (!c.satisfies) {
        std::cout << "failing window residues: " << set_str(c.failing_windows) << "\n";
        return exit_ok;
    }
    std::cout << "minimal: " << yes_no(c.minimal) << "\n";
    if (!c.minimal) std::cout << "non-minimal residues: " << set_str(c.non_minimal_positions) << "\n";
    return exit_ok;
}

struct witness_args {
    std::string vector;
    std::string family;
    std::string q, e, shifts = "0", bumps, lengths, range = "-30:30";
    std::optional<int> edge;
};

int cmd_witness(const witness_args& args) {
    auto a = coefficient_vector::parse(args.vector);
    const auto range = parse_range(args.range);
    std::string family = args.family;
    if (family == "bump") family = "prop1";
    if (family == "parity") family = "thm2";
    if (family == "period3") family = "prop3";

    coefficient_vector target = a;
    std::optional<affine_normalization> t;
    finite_word w;
    if (family == "prop1" || family == "thm2") {
        std::tie(target, t) = maybe_normalize(a, args.edge);
        if (family == "prop1") {
            std::vector<std::int64_t> shifts;
            for (const auto& s : split(args.shifts, ',')) {
                auto r = rational::parse(s);
                if (!r.is_integer()) throw error(errc::malformed_token, "shifts must be integers");
                shifts.push_back(r.num());
            }
            std::vector<rational> bumps;
            if (args.bumps.empty()) {
                std::optional<rational> low;
                for (int i : target.support())
                    if (target.value(i) > rational(0) && (!low || target.value(i) < *low)) low = target.value(i);
                for (std::size_t l = 0; l < shifts.size(); ++l)
                    bumps.push_back(low ? *low / rational(2) : rational(static_cast<std::int64_t>(l) + 1));
            } else {
                for (const auto& s : split(args.bumps, ',')) bumps.push_back(rational::parse(s));
            }
            w = generate_bump_witness(target, shifts, bumps, range);
        } else {
            rational q(1);
            if (!args.q.empty()) {
                q = rational::parse(args.q);
            } else {
                std::vector<rational> odd;
                for (int i = 1; i < target.n(); i += 2)
                    if (target.finite(i)) odd.push_back(target.value(i));
                std::sort(odd.begin(), odd.end());
                odd.erase(std::unique(odd.begin(), odd.end()), odd.end());
                if (odd.size() >= 2) q = odd[1] - odd[0];
            }
            w = generate_parity_witness(target, q, range);
        }
    } else if (family == "prop3") {
        rational e(1);
        if (!args.e.empty()) {
            e = rational::parse(args.e);
        } else if (a.n() == 3 && a.all_finite()) {
            const rational b = a.value(1), c = a.value(2);
            if (c > rational(2) * b) e = c - rational(2) * b;
            if (b > rational(2) * c) e = b - rational(2) * c;
        }
        w = generate_period3_witness(a, e, range);
    } else if (family == "polygon") {
        std::vector<int> lengths;
        if (args.lengths.empty()) {
            for (const auto& g : compute_newton_polygon(a).edges) lengths.push_back(g.horizontal_length());
        } else {
            for (const auto& s : split(args.lengths, ',')) {
                auto r = rational::parse(s);
                if (!r.is_integer() || r <= rational(0)) throw error(errc::malformed_token, "lengths must be positive integers");
                lengths.push_back(static_cast<int>(r.num()));
            }
        }
        w = generate_polygon_witness(a, lengths, range);
    } else {
        throw error(errc::malformed_token, "unknown family '" + args.family + "'");
    }

    std::cout << "vector: " << a.str() << "\n";
    print_normalization(target, t);
    std::cout << "family: " << family << "\n"
              << "range: " << range.lo << ".." << range.hi << "\n"
              << "word: " << w.str() << "\n";
    print_check(check_word(target, w));
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"troprec: tropical (min-plus) linear recurrences"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "troprec 1.0");

    std::string vec;
    bool as_json = false;

    auto* analyze = app.add_subcommand("analyze", "Newton polygon, progressions and regularity");
    analyze->add_option("vector", vec, "comma-separated entries, e.g. 0,1,0 or 0,0,inf,0")->required();
    analyze->add_flag("--json", as_json, "JSON output");

    detect_args da;
    std::uint64_t max_states = 0;
    int edge = -1;
    auto* det = app.add_subcommand("detect", "decide whether non-periodic minimal sequences exist");
    det->add_option("vector", da.vector, "coefficient vector")->required();
    det->add_option("--max-states", max_states, "abort after this many windows (default: $TROPREC_MAX_STATES)");
    det->add_option("--dot", da.dot, "write the pruned graph G as Graphviz DOT");
    det->add_flag("--json", da.json, "JSON output");
    det->add_flag("--cycles", da.list_cycles, "list every periodic solution");
    det->add_option("--edge", edge, "bounded edge to normalize (required when P(a) has several)");
    det->add_option("--threads", da.threads, "worker threads (default: all cores)");

    std::string ent_vec;
    int s_max = 0;
    bool minimal = false, ent_json = false;
    unsigned ent_threads = 0;
    auto* ent = app.add_subcommand("entropy", "dimensions d_s or m_s and entropy brackets");
    ent->add_option("vector", ent_vec, "coefficient vector")->required();
    ent->add_option("--s-max", s_max, "largest word length")->required();
    ent->add_flag("--minimal", minimal, "compute m_s instead of d_s");
    ent->add_flag("--json", ent_json, "JSON output");
    ent->add_option("--threads", ent_threads, "worker threads (default: all cores)");

    std::string chk_vec, word, period;
    bool chk_json = false;
    auto* chk = app.add_subcommand("check", "satisfaction and minimality of a word or periodic sequence");
    chk->add_option("vector", chk_vec, "coefficient vector")->required();
    chk->add_option("--word", word, "comma-separated rationals z_0,...,z_N");
    chk->add_option("--period", period, "d:v0,...,v(d-1)[:drift]");
    chk->add_flag("--json", chk_json, "JSON output");

    witness_args wa;
    int w_edge = -1;
    auto* wit = app.add_subcommand("witness", "build and verify a constructive witness family");
    wit->add_option("vector", wa.vector, "coefficient vector")->required();
    wit->add_option("--family", wa.family, "prop1|thm2|prop3|polygon (aliases bump|parity|period3)")->required();
    wit->add_option("--q", wa.q, "thm2 bump, 0 < q <= e-c (default e-c)");
    wit->add_option("--e", wa.e, "prop3 bump, 0 < e <= c-2b (default c-2b)");
    wit->add_option("--shifts", wa.shifts, "prop1 shifts, comma-separated (default 0)");
    wit->add_option("--bumps", wa.bumps, "prop1 bump heights, one per shift");
    wit->add_option("--lengths", wa.lengths, "polygon block lengths, one per bounded edge");
    wit->add_option("--range", wa.range, "index range lo:hi (default -30:30)");
    wit->add_option("--edge", w_edge, "bounded edge to normalize for prop1/thm2");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    try {
        if (*analyze) return cmd_analyze(vec, as_json);
        if (*det) {
            if (max_states) da.max_states = max_states;
            if (edge >= 0) da.edge = edge;
            return cmd_detect(da);
        }
        if (*ent) return cmd_entropy(ent_vec, s_max, minimal, ent_json, ent_threads);
        if (*chk) return cmd_check(chk_vec, word, period, chk_json);
        if (*wit) {
            if (w_edge >= 0) wa.edge = w_edge;
            return cmd_witness(wa);
        }
    } catch (const state_limit_error& e) {
        std::cerr << "error: " << e.what() << " (" << e.count_so_far() << " windows accepted before the abort)\n";
        return exit_state_limit;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::exception& e) {
        std::cerr << "unexpected failure: " << e.what() << "\n";
        return exit_unexpected;
    }
    return exit_unexpected;
}
