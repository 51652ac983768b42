#include <gtest/gtest.h>

#include <random>

#include "support/catalogue.hpp"
#include "support/oracle.hpp"
#include "troprec/recurrence.hpp"

using namespace troprec;
using troprec::test::q;
using troprec::test::vec;
using troprec::test::word;

namespace {

template <typename F>
errc code_of(F&& f) {
    try {
        f();
    } catch (const error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no troprec::error thrown";
    return errc::io_error;
}

equalize_grids random_grids(const finite_word& y, std::mt19937_64& rng) {
    std::vector<rational> fr;
    for (const auto& v : y.values) fr.push_back(v.frac());
    fr.push_back(q(0));
    std::sort(fr.begin(), fr.end());
    fr.erase(std::unique(fr.begin(), fr.end()), fr.end());
    std::bernoulli_distribution keep(0.7);
    equalize_grids g;
    for (const auto& f : fr)
        if (f == q(0) || keep(rng)) g.c.push_back(f);
    std::vector<int> picks;
    std::uniform_int_distribution<int> pick(1, 95);
    while (picks.size() + 1 < g.c.size()) {
        int p = pick(rng);
        if (std::find(picks.begin(), picks.end(), p) == picks.end()) picks.push_back(p);
    }
    std::sort(picks.begin(), picks.end());
    g.e.push_back(q(0));
    for (int p : picks) g.e.push_back(q(p, 96));
    return g;
}

}  // namespace

TEST(WindowReport, ReferenceExamples) {
    auto a = vec("0,1,0");
    auto z = word("0,1,0,1,0");
    auto w1 = evaluate_window(a, z, 1);
    EXPECT_EQ(*w1.min_value, q(1));
    EXPECT_EQ(w1.argmin, (std::vector<int>{0, 1, 2}));
    auto w0 = evaluate_window(a, z, 0);
    EXPECT_EQ(*w0.min_value, q(0));
    EXPECT_EQ(w0.argmin, (std::vector<int>{0, 2}));
    auto w = evaluate_window(vec("0,0,inf,0"), word("5,5,5,5"), 0);
    EXPECT_EQ(*w.min_value, q(5));
    EXPECT_EQ(w.argmin, (std::vector<int>{0, 1, 3}));
    EXPECT_EQ(code_of([&] { evaluate_window(a, z, 3); }), errc::window_out_of_range);
    EXPECT_EQ(code_of([&] { evaluate_window(a, z, -1); }), errc::window_out_of_range);
}

TEST(Satisfies, ReferenceExamples) {
    EXPECT_TRUE(satisfies(vec("0,1,0"), word("0,1,0,1,0")));
    auto c = check_word(vec("0,1,0"), word("0,5,0,5,0"));
    EXPECT_FALSE(c.satisfies);
    EXPECT_EQ(c.failing_windows, (std::vector<int>{1}));
    for (auto v : {q(0), q(-3, 2), q(7)}) {
        finite_word z;
        z.values.assign(6, v);
        EXPECT_TRUE(satisfies(vec("0,0"), z));
    }
    EXPECT_EQ(code_of([] { satisfies(vec("0,1,0"), word("0,1")); }), errc::word_too_short);
}

TEST(IsMinimal, ReferenceExamples) {
    auto m = is_minimal(vec("0,0,0"), word("0,0,1,0,0"));
    EXPECT_FALSE(m.minimal);
    EXPECT_EQ(m.failing_positions, (std::vector<int>{2}));
    auto ok = is_minimal(vec("0,1,0"), word("0,1,0,1,0"));
    EXPECT_TRUE(ok.minimal);
    ASSERT_EQ(ok.witnesses.size(), 1u);
    EXPECT_EQ(ok.witnesses[0], (std::pair<int, int>{2, 0}));
    EXPECT_TRUE(is_minimal(vec("0,0"), word("4,4,4")).minimal);
    EXPECT_EQ(code_of([] { is_minimal(vec("0,1,0"), word("0,5,0,5,0")); }), errc::not_satisfying);
}

TEST(VerifyPeriodic, ReferenceExamples) {
    periodic_sequence p{2, {q(0), q(1)}, q(0)};
    auto r = verify_periodic(vec("0,1,0"), p);
    EXPECT_TRUE(r.satisfies);
    EXPECT_TRUE(r.minimal);
    auto c = verify_periodic(vec("0,0,0"), periodic_sequence{1, {q(5, 3)}, q(0)});
    EXPECT_TRUE(c.satisfies && c.minimal);
    auto t = verify_periodic(vec("0,1,3,0"), periodic_sequence::parse("3:0,2,1"));
    EXPECT_TRUE(t.satisfies && t.minimal);
    EXPECT_EQ(code_of([] { periodic_sequence::parse("0:"); }), errc::invalid_period);
    EXPECT_EQ(code_of([] { periodic_sequence::parse("2:0"); }), errc::invalid_period);
    EXPECT_EQ(code_of([] { verify_periodic(vec("0,0"), periodic_sequence{0, {}, q(0)}); }), errc::invalid_period);
}

TEST(VerifyPeriodic, SlopedSolution) {
    // Edge of slope -2 for (2,0,0,2): y_i = 2i, drift 2 per period 1.
    auto r = verify_periodic(vec("2,0,0,2"), periodic_sequence{1, {q(0)}, q(2)});
    EXPECT_TRUE(r.satisfies);
    EXPECT_TRUE(r.minimal);
    EXPECT_EQ(periodic_sequence::parse("1:0:2").at(-3), q(-6));
}

TEST(VerifyPeriodic, AgreesWithMaterializedWords) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> per(1, 4), val(0, 8), pick(0, static_cast<int>(troprec::test::small_catalogue().size()) - 1);
    std::bernoulli_distribution drift(0.2);
    int agree_sat = 0;
    for (int it = 0; it < 200; ++it) {
        auto a = vec(troprec::test::small_catalogue()[static_cast<std::size_t>(pick(rng))]);
        periodic_sequence p;
        p.period = per(rng);
        for (int r = 0; r < p.period; ++r) p.values.push_back(q(val(rng), 2));
        p.drift = drift(rng) ? q(val(rng) - 4) : q(0);
        auto fast = verify_periodic(a, p);
        const int len = 10 * (p.period + a.n());
        auto slow = check_word(a, p.materialize(-len, len));
        EXPECT_EQ(fast.satisfies, slow.satisfies) << a.str();
        if (fast.satisfies && slow.satisfies) {
            EXPECT_EQ(fast.minimal, slow.minimal) << a.str();
            ++agree_sat;
        }
    }
    EXPECT_GT(agree_sat, 0);
}

TEST(Equalize, ReferenceExamples) {
    equalize_grids g{{q(0), q(1, 2)}, {q(0), q(1, 6)}};
    EXPECT_EQ(equalize(word("0,1/2,0,1/2,0"), g), word("0,1/6,0,1/6,0"));
    EXPECT_TRUE(satisfies_and_minimal(vec("0,1,0"), equalize(word("0,1/2,0,1/2,0"), g)));
    auto ints = word("3,-1,0,2");
    EXPECT_EQ(equalize(ints, g), ints);
    equalize_grids h{{q(0), q(3, 10), q(7, 10)}, {q(0), q(1, 8), q(2, 8)}};
    EXPECT_EQ(equalize(word("7/10"), h), word("1/4"));
}

TEST(Equalize, GridValidation) {
    EXPECT_EQ(code_of([] { equalize(word("0"), equalize_grids{{q(1, 2)}, {q(0)}}); }), errc::invalid_grid);
    EXPECT_EQ(code_of([] { equalize(word("0"), equalize_grids{{q(0), q(1)}, {q(0), q(1, 2)}}); }), errc::invalid_grid);
    EXPECT_EQ(code_of([] { equalize(word("0"), equalize_grids{{q(0), q(1, 2)}, {q(0)}}); }), errc::invalid_grid);
    EXPECT_EQ(code_of([] { equalize(word("0"), equalize_grids{{q(0), q(1, 2), q(1, 3)}, {q(0), q(1, 5), q(1, 4)}}); }),
              errc::invalid_grid);
}

TEST(Equalize, MonotoneMap) {
    std::mt19937_64 rng(5);
    auto y = word("0,1/8,1/4,3/8,1/2,5/8,3/4,7/8,1,9/8,-1/8,-7/8");
    for (int it = 0; it < 50; ++it) {
        auto g = random_grids(y, rng);
        auto x = equalize(y, g);
        for (std::size_t i = 0; i < y.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j)
                if (y[i] <= y[j]) { EXPECT_LE(x[i], x[j]); }
    }
}

TEST(Equalize, PreservesSatisfyingMinimalWords) {
    std::mt19937_64 rng(3);
    int checked = 0;
    for (const auto& s : troprec::test::integer_catalogue()) {
        auto a = vec(s);
        auto words = oracle::random_satisfying_words(a, 14, 25, 100 + checked, true);
        for (const auto& y : words) {
            ASSERT_TRUE(satisfies_and_minimal(a, y));
            auto x = equalize(y, random_grids(y, rng));
            EXPECT_TRUE(satisfies_and_minimal(a, x)) << s << " y=" << y.str() << " x=" << x.str();
            ++checked;
        }
    }
    EXPECT_EQ(checked, 200);
}

TEST(PointwiseMin, ReferenceExamples) {
    auto z = word("0,1,0,1");
    EXPECT_EQ(pointwise_min(z, z, q(0), q(0)), z);
    EXPECT_EQ(pointwise_min(word("0,0,0"), word("1,1,1"), q(0), q(0)), word("0,0,0"));
    EXPECT_EQ(code_of([] { pointwise_min(word("0,0"), word("0"), q(0), q(0)); }), errc::length_mismatch);
}

TEST(PointwiseMin, ClosureProperty) {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> b(-12, 12);
    int checked = 0;
    for (const auto& s : troprec::test::small_catalogue()) {
        auto a = vec(s);
        auto w1 = oracle::random_satisfying_words(a, 12, 20, 1 + checked);
        auto w2 = oracle::random_satisfying_words(a, 12, 20, 2 + checked);
        for (std::size_t i = 0; i < w1.size(); ++i) {
            auto m = pointwise_min(w1[i], w2[i], q(b(rng), 4), q(b(rng), 4));
            EXPECT_TRUE(satisfies(a, m)) << s;
            ++checked;
        }
    }
    EXPECT_EQ(checked, 200);
}

TEST(Invariance, ConstantShiftAndAffineChange) {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> r(-9, 9);
    for (const auto& s : troprec::test::small_catalogue()) {
        auto a = vec(s);
        for (const auto& z : oracle::random_satisfying_words(a, 10, 10, 77)) {
            auto base = check_word(a, z);
            const rational c = q(r(rng), 3), alpha = q(r(rng), 2), beta = q(r(rng));
            finite_word shifted = z, affine = z;
            std::vector<trop_scalar> e;
            for (int i = 0; i <= a.n(); ++i)
                e.push_back(a.finite(i) ? trop_scalar(a.value(i) + alpha * q(i) + beta) : trop_scalar::infinity());
            coefficient_vector b(e);
            for (std::size_t m = 0; m < z.size(); ++m) {
                shifted.values[m] = z[m] + c;
                affine.values[m] = z[m] - alpha * q(static_cast<std::int64_t>(m));
            }
            auto cs = check_word(a, shifted);
            auto ca = check_word(b, affine);
            EXPECT_EQ(cs.satisfies, base.satisfies);
            EXPECT_EQ(cs.minimal, base.minimal);
            EXPECT_EQ(ca.satisfies, base.satisfies);
            EXPECT_EQ(ca.minimal, base.minimal);
        }
    }
}

TEST(FiniteWord, ParseRender) {
    auto w = word("0, 1/2,-3");
    EXPECT_EQ(w.size(), 3u);
    EXPECT_EQ(w.str(), "0,1/2,-3");
    EXPECT_EQ(code_of([] { word("0,,1"); }), errc::malformed_token);
}
