#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fibgap/gaps.hpp"
#include "fibgap/word.hpp"

namespace fibgap::oracle {

/// Every start of `word` (1-based, increasing) inside fib_prefix(prefix_len).
struct OccurrenceList {
    Word word;
    std::vector<std::uint64_t> positions;
    std::size_t prefix_len = 0;
};

/// Knuth-Morris-Pratt scan of the explicitly generated prefix.
OccurrenceList find_occurrences(const Word& w, std::size_t prefix_len);

/// Brute-force scan; the second implementation for differential tests.
OccurrenceList find_occurrences_naive(const Word& w, std::size_t prefix_len);

/// Smallest prefix (doubling from `initial`) holding at least `count`
/// occurrences of w. Throws not_a_factor when w never appears in a prefix
/// that already contains every factor of its length.
OccurrenceList first_occurrences(const Word& w, std::uint64_t count, std::size_t initial = 0);

/// Gap trichotomy on consecutive occurrences: adjacent gives the empty
/// gap, separated the letters in between, overlapped the inverse of the
/// shared letters.
std::vector<SignedWord> extract_gaps(const OccurrenceList& occ);

/// The two distinct gaps of ab, ba or aba in order of first appearance.
GapPair special_word_gaps(const Word& w);

/// Kernel by exhaustive scan of every singular word up to |w|; the longest
/// singular factor, with its (unique) start.
KernelHit brute_force_kernel(const Word& w);

struct Mismatch {
    std::string check;
    std::string word;
    std::uint64_t p = 0;
    std::string expected;
    std::string actual;
};

struct CheckTally {
    std::string check;
    std::uint64_t comparisons = 0;
    std::uint64_t mismatches = 0;
};

struct Report {
    std::size_t max_len = 0;
    std::uint64_t p_max = 0;
    std::uint64_t factors = 0;
    std::vector<CheckTally> tallies;
    std::vector<Mismatch> first_mismatches;  // first counterexample per check

    std::uint64_t total_mismatches() const;
    std::string to_text() const;
    /// One JSON object per line: per-check summaries then mismatch records
    /// {check, word, p, expected, actual}.
    std::string to_json_lines() const;
};

/// Compares classification, decomposition, gap pairs, per-occurrence gaps and
/// positions against brute force for every factor with 4 <= |w| <= max_len
/// and p <= p_max.
Report verify_range(std::size_t max_len, std::uint64_t p_max);

}  // namespace fibgap::oracle
