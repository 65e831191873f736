#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "fibgap/word.hpp"

namespace fibgap {

/// The six factor classes. T1.x: |w| = f_k; T2.x: f_k < |w| < f_{k+1};
/// the kernel order is k, k-1, k-2 for x = 1, 2, 3.
enum class FactorType { T1_1, T1_2, T1_3, T2_1, T2_2, T2_3 };

inline constexpr std::array<FactorType, 6> all_factor_types{
    FactorType::T1_1, FactorType::T1_2, FactorType::T1_3,
    FactorType::T2_1, FactorType::T2_2, FactorType::T2_3,
};

std::string_view to_string(FactorType t);
FactorType parse_factor_type(std::string_view text);

/// Offset from the length index k down to the kernel order (0, 1 or 2).
constexpr int kernel_drop(FactorType t) noexcept { return static_cast<int>(t) % 3; }
constexpr bool is_fibonacci_length(FactorType t) noexcept { return static_cast<int>(t) < 3; }

struct KernelHit {
    int order;               // j with sk(w) = s_j
    std::uint64_t start;     // 1-based start of s_j inside w
    friend bool operator==(const KernelHit&, const KernelHit&) = default;
};

struct Classification {
    FactorType type;
    std::uint64_t n;
    int k;           // f_k <= n < f_{k+1}
    std::int64_t i;  // offset parameter; 0 and unused for T1.1
    friend bool operator==(const Classification&, const Classification&) = default;
};

struct Decomposition {
    Word mu1;
    int kernel_order;
    Word mu2;
    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Words excluded from kernel theory: empty, ab, ba, aba.
bool is_special_word(const Word& w);

bool is_factor(const Word& w);

/// Smallest prefix length in the doubling sequence 4n+64, 2(4n+64), ...
/// whose window holds all n+1 factors of length n.
std::size_t complete_prefix_length(std::size_t n);

KernelHit singular_kernel(const Word& w);
Classification classify(const Word& w);
Decomposition decompose(const Word& w);

/// mu1/mu2 rebuilt from the per-type closed forms alone.
Decomposition decomposition_from_classification(const Classification& c);

/// The i with w = C_i(F_k), found by rotation search; empty when w is not a
/// rotation of F_k (the T1.1 case). Throws if |w| is not a Fibonacci number
/// f_k with k >= 2.
std::optional<std::int64_t> conjugate_index(const Word& w);

/// All distinct factors of length n, ordered lexicographically.
std::set<Word> enumerate_factors(std::size_t n);

/// Type counts obtained by classifying every factor of length n >= 3. The
/// special word aba (n = 3) is counted as T1.3 through its conjugate form
/// aba = C_0(F_2).
std::map<FactorType, std::uint64_t> type_census(std::size_t n);

}  // namespace fibgap
