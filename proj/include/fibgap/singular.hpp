#pragma once

#include <cstdint>
#include <utility>

#include "fibgap/word.hpp"

namespace fibgap {

/// (alpha, beta): alpha is the last letter of F_k, beta the other one.
std::pair<Letter, Letter> alpha_beta(int k);

/// s_{-1} = a, s_0 = b, s_k = beta F_k alpha^{-1} for k >= 1.
Word singular_word(int k);

/// s_{-1} s_0 ... s_{k-1}, which is s_{k+1} without its first letter.
Word singular_prefix_product(int k);

/// Gap between the p-th and (p+1)-th occurrences of s_k: s_{k+1} when the
/// p-th letter of the Fibonacci word is a, s_{k-1} otherwise.
///
/// k = -1 is accepted with the conventions s_{-2} = (empty), matching
/// f_{-2} = 0; it only arises for the one-letter factor "a".
Word singular_gap(int k, std::uint64_t p);

/// 1-based start of the p-th occurrence of s_k in the Fibonacci word.
std::uint64_t singular_position(int k, std::uint64_t p);

/// alpha^{-1} s_{k+1} s_k s_{k+1} alpha^{-1}: every factor whose kernel is
/// s_k sits inside this window exactly once.
Word theta(int k);

}  // namespace fibgap
