#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <set>

#include "brute.hpp"
#include "fibgap/kernel.hpp"
#include "fibgap/oracle.hpp"
#include "fibgap/singular.hpp"

using namespace fibgap;

namespace {

std::int64_t f(int k) { return static_cast<std::int64_t>(fib_number(k)); }

ErrorCode code_of(const std::function<void()>& body) {
    try {
        body();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::invalid_argument;
}

std::map<FactorType, std::uint64_t> closed_form_counts(std::int64_t n) {
    const int k = fib_floor_index(static_cast<std::uint64_t>(n));
    if (f(k) == n) {
        return {{FactorType::T1_1, 1},
                {FactorType::T1_2, f(k - 2) + 1},
                {FactorType::T1_3, f(k - 1) - 1}};
    }
    return {{FactorType::T2_1, n - f(k) + 1},
            {FactorType::T2_2, n - f(k - 1) + 1},
            {FactorType::T2_3, f(k + 1) - n - 1}};
}

/// Inclusive range of the offset parameter for each type.
std::pair<std::int64_t, std::int64_t> offset_range(const Classification& c) {
    const int k = c.k;
    const auto n = static_cast<std::int64_t>(c.n);
    switch (c.type) {
        case FactorType::T1_1: return {0, 0};
        case FactorType::T1_2: return {f(k - 1) - 1, f(k) - 1};
        case FactorType::T1_3: return {0, f(k - 1) - 2};
        case FactorType::T2_1: return {0, n - f(k)};
        case FactorType::T2_2: return {0, n - f(k - 1)};
        case FactorType::T2_3: return {0, f(k + 1) - n - 2};
    }
    return {1, 0};
}

}  // namespace

TEST(IsFactor, Examples) {
    EXPECT_TRUE(is_factor(Word("babaabab")));
    EXPECT_FALSE(is_factor(Word("bb")));
    EXPECT_FALSE(is_factor(Word("aaa")));
    EXPECT_TRUE(is_factor(Word("")));
}

TEST(IsFactor, AgreesWithExhaustiveFactorSets) {
    std::mt19937_64 rng(17);
    for (std::size_t n = 1; n <= 30; ++n) {
        const auto truth = brute::factors(n);
        for (int trial = 0; trial < 40; ++trial) {
            std::string w(n, 'a');
            std::bernoulli_distribution coin(0.7);
            for (char& c : w) c = coin(rng) ? 'a' : 'b';
            EXPECT_EQ(is_factor(Word(w)), truth.count(w) == 1) << w;
        }
        for (const auto& w : truth) EXPECT_TRUE(is_factor(Word(w))) << w;
    }
}

TEST(SingularKernel, Examples) {
    EXPECT_EQ(singular_kernel(Word("baabaa")), (KernelHit{3, 2}));
    EXPECT_EQ(singular_kernel(Word("aababa")), (KernelHit{2, 3}));
    EXPECT_EQ(singular_kernel(Word("abaa")), (KernelHit{1, 3}));
}

TEST(SingularKernel, ErrorPaths) {
    EXPECT_EQ(code_of([] { singular_kernel(Word("ab")); }), ErrorCode::special_word);
    EXPECT_EQ(code_of([] { singular_kernel(Word("aba")); }), ErrorCode::special_word);
    EXPECT_EQ(code_of([] { singular_kernel(Word("")); }), ErrorCode::special_word);
    EXPECT_EQ(code_of([] { singular_kernel(Word("bb")); }), ErrorCode::not_a_factor);
    EXPECT_EQ(code_of([] { classify(Word("aaa")); }), ErrorCode::not_a_factor);
    EXPECT_EQ(code_of([] { decompose(Word("ba")); }), ErrorCode::special_word);
}

TEST(SingularKernel, AgreesWithBruteForce) {
    for (std::size_t n = 4; n <= 100; ++n) {
        for (const Word& w : enumerate_factors(n)) EXPECT_EQ(singular_kernel(w), oracle::brute_force_kernel(w)) << w.str();
    }
}

TEST(Classify, Examples) {
    EXPECT_EQ(classify(Word("babaabab")), (Classification{FactorType::T1_1, 8, 4, 0}));
    EXPECT_EQ(classify(Word("baabaaba")), (Classification{FactorType::T1_2, 8, 4, 6}));
    EXPECT_EQ(classify(Word("baababaab")), (Classification{FactorType::T2_3, 9, 4, 1}));
}

TEST(Decompose, Examples) {
    EXPECT_EQ(decompose(Word("baabaaba")), (Decomposition{Word("b"), 3, Word("ba")}));
    EXPECT_EQ(decompose(Word("abaabaaba")), (Decomposition{Word("ab"), 3, Word("ba")}));
    EXPECT_EQ(decompose(Word("babaabab")), (Decomposition{Word(""), 4, Word("")}));
}

TEST(ConjugateIndex, Examples) {
    EXPECT_EQ(conjugate_index(Word("baabaaba")), std::optional<std::int64_t>(6));
    EXPECT_EQ(conjugate_index(Word("abaababa")), std::optional<std::int64_t>(0));
    EXPECT_EQ(conjugate_index(Word("babaabab")), std::nullopt);
    EXPECT_EQ(code_of([] { conjugate_index(Word("abaa")); }), ErrorCode::invalid_argument);
}

TEST(EnumerateFactors, Examples) {
    EXPECT_EQ(enumerate_factors(1), (std::set<Word>{Word("a"), Word("b")}));
    EXPECT_EQ(enumerate_factors(2), (std::set<Word>{Word("aa"), Word("ab"), Word("ba")}));
    const auto eight = enumerate_factors(8);
    EXPECT_EQ(eight.size(), 9u);
    for (const char* w : {"babaabab", "baabaaba", "baababaa"}) EXPECT_EQ(eight.count(Word(w)), 1u) << w;
    EXPECT_THROW(enumerate_factors(0), Error);
}

TEST(EnumerateFactors, MatchesExhaustiveWindows) {
    for (std::size_t n = 1; n <= 200; ++n) {
        std::set<std::string> got;
        for (const Word& w : enumerate_factors(n)) got.insert(w.str());
        EXPECT_EQ(got, brute::factors(n)) << n;
        EXPECT_EQ(got.size(), n + 1) << n;
    }
}

TEST(TypeCensus, Examples) {
    EXPECT_EQ(type_census(8), (std::map<FactorType, std::uint64_t>{
                                  {FactorType::T1_1, 1}, {FactorType::T1_2, 4}, {FactorType::T1_3, 4}}));
    EXPECT_EQ(type_census(9), (std::map<FactorType, std::uint64_t>{
                                  {FactorType::T2_1, 2}, {FactorType::T2_2, 5}, {FactorType::T2_3, 3}}));
    EXPECT_EQ(type_census(5), (std::map<FactorType, std::uint64_t>{
                                  {FactorType::T1_1, 1}, {FactorType::T1_2, 3}, {FactorType::T1_3, 2}}));
    EXPECT_THROW(type_census(2), Error);
}

TEST(Partition, CensusMatchesClosedFormAndClassification) {
    for (std::size_t n = 4; n <= 200; ++n) {
        std::map<FactorType, std::uint64_t> counted;
        for (FactorType t : all_factor_types) {
            if (is_fibonacci_length(t) == (fib_number(fib_floor_index(n)) == n)) counted[t] = 0;
        }
        std::uint64_t total = 0;
        for (const Word& w : enumerate_factors(n)) {
            ++counted[classify(w).type];
            ++total;
        }
        EXPECT_EQ(total, n + 1);
        EXPECT_EQ(counted, type_census(n)) << n;
        EXPECT_EQ(type_census(n), closed_form_counts(static_cast<std::int64_t>(n))) << n;
    }
}

TEST(Partition, OffsetsFillTheirRangesBijectively) {
    for (std::size_t n = 4; n <= 200; ++n) {
        std::map<FactorType, std::set<std::int64_t>> seen;
        for (const Word& w : enumerate_factors(n)) {
            const Classification c = classify(w);
            const auto [lo, hi] = offset_range(c);
            EXPECT_LE(lo, c.i) << w.str();
            EXPECT_LE(c.i, hi) << w.str();
            if (c.type != FactorType::T1_1) EXPECT_TRUE(seen[c.type].insert(c.i).second) << w.str();
        }
        for (const auto& [type, offsets] : seen) {
            const auto [lo, hi] = offset_range(Classification{type, n, fib_floor_index(n), 0});
            EXPECT_EQ(static_cast<std::int64_t>(offsets.size()), hi - lo + 1) << n << " " << to_string(type);
        }
    }
}

TEST(Reconstruction, KernelSplitsEveryFactor) {
    for (std::size_t n = 4; n <= 200; ++n) {
        for (const Word& w : enumerate_factors(n)) {
            const Decomposition d = decompose(w);
            const Word s = singular_word(d.kernel_order);
            EXPECT_EQ(d.mu1 + s + d.mu2, w);
            EXPECT_EQ(brute::occurrences(w.str(), s.str()).size(), 1u) << w.str();
            EXPECT_EQ(decomposition_from_classification(classify(w)), d) << w.str();
            EXPECT_EQ(d.kernel_order, classify(w).k - kernel_drop(classify(w).type));
        }
    }
}

TEST(WindowContainment, EveryFactorSitsOnceInItsWindow) {
    std::map<int, std::string> windows;
    for (int k = 0; k <= 10; ++k) windows[k] = theta(k).str();
    for (std::size_t n = 1; n < fib_number(12); ++n) {
        for (const Word& w : enumerate_factors(n)) {
            if (is_special_word(w)) continue;
            const int order = singular_kernel(w).order;
            if (order < 0 || order > 10) continue;
            EXPECT_EQ(brute::occurrences(windows[order], w.str()).size(), 1u) << w.str();
        }
    }
}

TEST(ConjugateLaw, RotationsOfStandardWords) {
    for (int k = 2; k <= 10; ++k) {
        for (const Word& w : enumerate_factors(fib_number(k))) {
            if (is_special_word(w)) continue;
            const Classification c = classify(w);
            const auto idx = conjugate_index(w);
            const bool rotation = c.type == FactorType::T1_2 || c.type == FactorType::T1_3;
            EXPECT_EQ(idx.has_value(), rotation) << w.str();
            if (idx) {
                EXPECT_EQ(*idx, c.i) << w.str();
                EXPECT_EQ(conjugate(fib_standard_word(k), *idx), w);
            }
        }
    }
}

TEST(FactorType, NamesRoundTrip) {
    for (FactorType t : all_factor_types) EXPECT_EQ(parse_factor_type(to_string(t)), t);
    EXPECT_THROW(parse_factor_type("T3.1"), Error);
}
