#include "fibgap/kernel.hpp"

#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "fibgap/singular.hpp"

namespace fibgap {

namespace {

constexpr std::array<std::string_view, 6> type_names{"T1.1", "T1.2", "T1.3", "T2.1", "T2.2", "T2.3"};

std::int64_t f(int k) { return static_cast<std::int64_t>(fib_number(k)); }

std::size_t count_distinct_windows(std::string_view text, std::size_t n) {
    std::unordered_set<std::string_view> seen;
    for (std::size_t start = 0; start + n <= text.size(); ++start) seen.insert(text.substr(start, n));
    return seen.size();
}

}  // namespace

std::string_view to_string(FactorType t) { return type_names[static_cast<std::size_t>(t)]; }

FactorType parse_factor_type(std::string_view text) {
    for (std::size_t idx = 0; idx < type_names.size(); ++idx) {
        if (type_names[idx] == text) return static_cast<FactorType>(idx);
    }
    fail(ErrorCode::invalid_argument, "invalid argument: unknown factor type '" + std::string(text) + "'");
}

bool is_special_word(const Word& w) {
    const auto& s = w.str();
    return s.empty() || s == "ab" || s == "ba" || s == "aba";
}

std::size_t complete_prefix_length(std::size_t n) {
    static std::mutex mutex;
    static std::unordered_map<std::size_t, std::size_t> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    std::size_t length = 4 * n + 64;
    for (;;) {
        auto text = fib_prefix_text(length);
        if (count_distinct_windows(std::string_view(*text).substr(0, length), n) == n + 1) break;
        length *= 2;
    }
    std::lock_guard lock(mutex);
    cache.emplace(n, length);
    return length;
}

bool is_factor(const Word& w) {
    if (w.empty()) return true;
    const std::size_t length = complete_prefix_length(w.size());
    auto text = fib_prefix_text(length);
    return std::string_view(*text).substr(0, length).find(w.view()) != std::string_view::npos;
}

KernelHit singular_kernel(const Word& w) {
    if (is_special_word(w)) {
        fail(ErrorCode::special_word, "special word: use oracle-backed gaps (" +
                                          (w.empty() ? std::string("empty word") : w.str()) + ")");
    }
    if (!is_factor(w)) fail(ErrorCode::not_a_factor, "not a factor of the Fibonacci word: " + w.str());

    // |s_j| strictly increases for j >= 1, so the first hit from the top is the kernel.
    for (int j = fib_floor_index(w.size()); j >= 1; --j) {
        const Word s = singular_word(j);
        if (auto at = w.view().find(s.view()); at != std::string_view::npos) {
            return {j, static_cast<std::uint64_t>(at) + 1};
        }
    }
    // Only the one-letter factors remain.
    return {w.front() == Letter::a ? -1 : 0, 1};
}

Classification classify(const Word& w) {
    const KernelHit hit = singular_kernel(w);
    const auto n = static_cast<std::int64_t>(w.size());
    const int k = fib_floor_index(w.size());
    const int drop = k - hit.order;
    if (drop < 0 || drop > 2) {
        fail(ErrorCode::invalid_argument, "internal: kernel order outside the three admissible values");
    }
    const bool exact = f(k) == n;
    const auto type = static_cast<FactorType>((exact ? 0 : 3) + drop);
    const auto mu1 = static_cast<std::int64_t>(hit.start) - 1;

    std::int64_t i = 0;
    switch (type) {
        case FactorType::T1_1: i = 0; break;
        case FactorType::T1_2: i = f(k) - 1 - mu1; break;
        case FactorType::T1_3: i = f(k - 1) - 1 - mu1; break;
        case FactorType::T2_1:
        case FactorType::T2_2: i = mu1; break;
        case FactorType::T2_3: i = f(k) - n - 1 + mu1; break;
    }
    return {type, static_cast<std::uint64_t>(n), k, i};
}

Decomposition decompose(const Word& w) {
    const KernelHit hit = singular_kernel(w);
    const auto start = static_cast<std::int64_t>(hit.start);
    const auto len = static_cast<std::int64_t>(fib_number(hit.order));
    return {subword(w, 1, start - 1), hit.order,
            subword(w, start + len, static_cast<std::int64_t>(w.size()))};
}

Decomposition decomposition_from_classification(const Classification& c) {
    const int k = c.k;
    const std::int64_t i = c.i;
    const auto n = static_cast<std::int64_t>(c.n);
    switch (c.type) {
        case FactorType::T1_1:
            return {Word(), k, Word()};
        case FactorType::T1_2: {
            if (k < 2) fail(ErrorCode::invalid_argument, "invalid argument: T1.2 closed form needs k >= 2");
            const Word s = singular_word(k - 2);
            return {subword(s, i - f(k - 1) + 2, f(k - 2)), k - 1, subword(s, 1, i - f(k - 1) + 1)};
        }
        case FactorType::T1_3: {
            const Word s = singular_word(k - 1);
            return {subword(s, i + 2, f(k - 1)), k - 2, subword(s, 1, i + 1)};
        }
        case FactorType::T2_1: {
            const Word s = singular_word(k - 1);
            return {subword(s, f(k - 1) - i + 1, f(k - 1)), k, subword(s, 1, n - f(k) - i)};
        }
        case FactorType::T2_2: {
            const Word s = singular_word(k);
            return {subword(s, f(k) - i + 1, f(k)), k - 1, subword(s, 1, n - f(k - 1) - i)};
        }
        case FactorType::T2_3: {
            const Word s = singular_word(k - 1);
            return {subword(s, f(k + 1) - n - i, f(k - 1)), k - 2, subword(s, 1, f(k - 1) - i - 1)};
        }
    }
    fail(ErrorCode::invalid_argument, "invalid argument: unknown factor type");
}

std::optional<std::int64_t> conjugate_index(const Word& w) {
    if (w.empty()) fail(ErrorCode::invalid_argument, "invalid argument: length not a Fibonacci number");
    const int k = fib_floor_index(w.size());
    if (k < 2 || fib_number(k) != w.size()) {
        fail(ErrorCode::invalid_argument, "invalid argument: length not a Fibonacci number (f_k, k >= 2)");
    }
    if (!is_factor(w)) fail(ErrorCode::not_a_factor, "not a factor of the Fibonacci word: " + w.str());
    const std::string standard = fib_standard_word(k).str();
    const std::string doubled = standard + standard;
    const auto at = doubled.find(w.str());
    if (at == std::string::npos || at >= standard.size()) return std::nullopt;
    return static_cast<std::int64_t>(at);
}

std::set<Word> enumerate_factors(std::size_t n) {
    if (n == 0) fail(ErrorCode::invalid_argument, "invalid argument: factor length must be >= 1");
    const std::size_t length = complete_prefix_length(n);
    auto text = fib_prefix_text(length);
    std::set<Word> out;
    for (std::size_t start = 0; start + n <= length; ++start) out.insert(trusted_word(text->substr(start, n)));
    return out;
}

std::map<FactorType, std::uint64_t> type_census(std::size_t n) {
    if (n < 3) fail(ErrorCode::invalid_argument, "invalid argument: census needs n >= 3");
    std::map<FactorType, std::uint64_t> counts;
    const bool exact = fib_number(fib_floor_index(n)) == n;
    for (FactorType t : all_factor_types) {
        if (is_fibonacci_length(t) == exact) counts[t] = 0;
    }
    for (const Word& w : enumerate_factors(n)) {
        if (is_special_word(w)) {
            ++counts[FactorType::T1_3];  // aba = C_0(F_2)
        } else {
            ++counts[classify(w).type];
        }
    }
    return counts;
}

}  // namespace fibgap
