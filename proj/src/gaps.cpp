#include "fibgap/gaps.hpp"

#include <cmath>

#include "fibgap/singular.hpp"

namespace fibgap {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t isqrt(u128 x) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
    while (static_cast<u128>(r) * r > x) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= x) ++r;
    return r;
}

std::int64_t f(int k) { return static_cast<std::int64_t>(fib_number(k)); }

/// F_k extended by F_{-1} = b, the only value consistent with F_1 = F_0 F_{-1}.
Word standard_word_ext(int k) { return k == -1 ? trusted_word("b") : fib_standard_word(k); }

void require_occurrence_index(std::uint64_t p) {
    if (p < 1) fail(ErrorCode::invalid_argument, "invalid argument: occurrence index must be >= 1");
}

}  // namespace

std::uint64_t floor_p_xi(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 62)) fail(ErrorCode::invalid_argument, "invalid argument: index too large");
    const u128 five_p2 = static_cast<u128>(5) * p * p;
    const std::uint64_t s = isqrt(five_p2);
    // 5p^2 is never a square for p >= 1, so s < p sqrt5 < s + 1.
    const u128 numerator = static_cast<u128>(3) * p - s;
    return numerator == 0 ? 0 : static_cast<std::uint64_t>((numerator - 1) / 2);
}

Letter letter_at(std::uint64_t p) {
    require_occurrence_index(p);
    return floor_p_xi(p + 1) == floor_p_xi(p) ? Letter::a : Letter::b;
}

GapPair gap_pair(const Word& w) {
    const Classification c = classify(w);
    const int k = c.k;
    const std::int64_t i = c.i;
    const auto n = static_cast<std::int64_t>(c.n);
    switch (c.type) {
        case FactorType::T1_1:
            return {SignedWord::positive(singular_word(k + 1)), SignedWord::positive(singular_word(k - 1))};
        case FactorType::T1_2:
            return {SignedWord::positive(conjugate(standard_word_ext(k - 1), i - f(k - 1))), SignedWord()};
        case FactorType::T1_3:
            return {SignedWord(), SignedWord::inverse(conjugate(standard_word_ext(k - 2), i))};
        case FactorType::T2_1:
            return {SignedWord::positive(subword(singular_word(k + 1), n - f(k) - i + 1, f(k + 1) - i)),
                    SignedWord::positive(subword(singular_word(k - 1), n - f(k) - i + 1, f(k - 1) - i))};
        case FactorType::T2_2:
            return {SignedWord::positive(subword(singular_word(k), n - f(k - 1) - i + 1, f(k) - i)),
                    SignedWord::inverse(subword(fib_standard_word(k + 1), f(k) - i, n - i - 1))};
        case FactorType::T2_3:
            return {SignedWord::inverse(subword(singular_word(k - 1), f(k + 1) - n - i, f(k - 1) - i - 1)),
                    SignedWord::inverse(subword(fib_standard_word(k), f(k + 1) - n - i - 1, f(k) - i - 2))};
    }
    fail(ErrorCode::invalid_argument, "invalid argument: unknown factor type");
}

GapPair gap_pair_by_reduction(const Word& w) {
    const Decomposition d = decompose(w);
    // letter_at(1) = a and letter_at(2) = b select the two kernel gaps.
    return {signed_reduce(d.mu2, SignedWord::positive(singular_gap(d.kernel_order, 1)), d.mu1),
            signed_reduce(d.mu2, SignedWord::positive(singular_gap(d.kernel_order, 2)), d.mu1)};
}

SignedWord gap_at(const Word& w, std::uint64_t p) {
    require_occurrence_index(p);
    GapPair pair = gap_pair(w);
    return letter_at(p) == Letter::a ? std::move(pair.nu1) : std::move(pair.nu2);
}

std::uint64_t occurrence_position(const Word& w, std::uint64_t p) {
    require_occurrence_index(p);
    const Decomposition d = decompose(w);
    return singular_position(d.kernel_order, p) - d.mu1.size();
}

std::vector<SignedWord> gap_sequence(const Word& w, std::uint64_t count) {
    if (count < 1) fail(ErrorCode::invalid_argument, "invalid argument: count must be >= 1");
    const GapPair pair = gap_pair(w);
    std::vector<SignedWord> out;
    out.reserve(count);
    for (std::uint64_t p = 1; p <= count; ++p) out.push_back(letter_at(p) == Letter::a ? pair.nu1 : pair.nu2);
    return out;
}

}  // namespace fibgap
