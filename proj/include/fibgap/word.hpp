#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "fibgap/error.hpp"

namespace fibgap {

enum class Letter : char { a = 'a', b = 'b' };

constexpr Letter other(Letter x) noexcept { return x == Letter::a ? Letter::b : Letter::a; }
constexpr char to_char(Letter x) noexcept { return static_cast<char>(x); }

/// Immutable finite word over {a, b}. Positions are 1-based at the interface.
class Word {
public:
    Word() = default;

    /// Throws Error(invalid_argument) on any character other than 'a' or 'b'.
    explicit Word(std::string_view letters);

    static Word parse(std::string_view letters) { return Word(letters); }

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    /// 1-based letter access; throws on out-of-range.
    Letter at(std::size_t position) const;

    std::size_t count(Letter x) const noexcept;

    const std::string& str() const noexcept { return letters_; }
    std::string_view view() const noexcept { return letters_; }

    Letter front() const { return at(1); }
    Letter back() const { return at(size()); }

    friend Word operator+(const Word& lhs, const Word& rhs);
    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) {
        return lhs.letters_ <=> rhs.letters_;
    }

private:
    struct Trusted {};
    Word(Trusted, std::string letters) : letters_(std::move(letters)) {}
    friend Word trusted_word(std::string letters);

    std::string letters_;
};

/// Builds a Word from text already known to be over {a, b}; internal fast path.
Word trusted_word(std::string letters);

enum class Sign { negative = -1, empty = 0, positive = 1 };

/// A gap word: positive (separated), empty (adjacent) or the inverse of an
/// overlap (negative). The magnitude is empty exactly when the sign is empty.
class SignedWord {
public:
    SignedWord() = default;
    SignedWord(Sign sign, Word magnitude);

    static SignedWord positive(Word w) { return w.empty() ? SignedWord() : SignedWord(Sign::positive, std::move(w)); }
    static SignedWord inverse(Word w) { return w.empty() ? SignedWord() : SignedWord(Sign::negative, std::move(w)); }

    /// Parses "", "w" or "-w".
    static SignedWord parse(std::string_view text);

    Sign sign() const noexcept { return sign_; }
    const Word& magnitude() const noexcept { return magnitude_; }
    std::int64_t signed_length() const noexcept {
        return static_cast<std::int64_t>(sign_) * static_cast<std::int64_t>(magnitude_.size());
    }

    std::string to_string() const;

    friend bool operator==(const SignedWord&, const SignedWord&) = default;

private:
    Sign sign_ = Sign::empty;
    Word magnitude_;
};

/// Fibonacci numbers with f(-1) = f(0) = 1, f(1) = 2. Throws for k < -1 and
/// when the value would overflow 64 bits.
std::uint64_t fib_number(int k);

/// Largest k with fib_number(k) <= n, for n >= 1 (k >= 0).
int fib_floor_index(std::uint64_t n);

Word morphism_apply(const Word& w);

/// F_k = sigma^k(a), k >= 0.
Word fib_standard_word(int k);

/// First `length` letters of the infinite Fibonacci word.
Word fib_prefix(std::size_t length);

/// Shared, read-only text of some F_k with at least `length` letters. Avoids
/// copying large prefixes in scanning code.
std::shared_ptr<const std::string> fib_prefix_text(std::size_t length);

/// Letters i..j inclusive, 1-based; j = i - 1 yields the empty word.
Word subword(const Word& w, std::int64_t i, std::int64_t j);

/// C_j(w), rotating left by j mod |w|. Negative j is reduced the same way.
Word conjugate(const Word& w, std::int64_t j);

/// left^{-1} * mid * right^{-1} reduced in the free group on {a, b}. Throws
/// Error(incomplete_cancellation) when the result mixes positive and inverse
/// letters.
SignedWord signed_reduce(const Word& left, const SignedWord& mid, const Word& right);

}  // namespace fibgap
