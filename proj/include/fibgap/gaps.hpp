#pragma once

#include <cstdint>
#include <vector>

#include "fibgap/kernel.hpp"
#include "fibgap/word.hpp"

namespace fibgap {

/// floor(p * xi) for xi = (3 - sqrt 5) / 2, in exact integer arithmetic:
/// floor((3p - isqrt(5 p^2) - 1) / 2). Valid for p < 2^62.
std::uint64_t floor_p_xi(std::uint64_t p);

/// p-th letter (1-based) of the Fibonacci word: a iff
/// floor((p+1) xi) == floor(p xi).
Letter letter_at(std::uint64_t p);

struct GapPair {
    SignedWord nu1;  // gap after occurrences p with letter_at(p) == a
    SignedWord nu2;  // gap after occurrences p with letter_at(p) == b
    friend bool operator==(const GapPair&, const GapPair&) = default;
};

/// The two gaps of a non-special factor from the per-type closed forms.
GapPair gap_pair(const Word& w);

/// Same pair computed as mu2^{-1} * gap(s_k) * mu1^{-1}; an independent route
/// used for cross-checking.
GapPair gap_pair_by_reduction(const Word& w);

SignedWord gap_at(const Word& w, std::uint64_t p);

/// 1-based start of the p-th occurrence of w.
std::uint64_t occurrence_position(const Word& w, std::uint64_t p);

std::vector<SignedWord> gap_sequence(const Word& w, std::uint64_t count);

}  // namespace fibgap
