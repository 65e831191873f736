#include "fibgap/word.hpp"

#include <algorithm>
#include <mutex>
#include <vector>

namespace fibgap {

Word::Word(std::string_view letters) : letters_(letters) {
    for (char c : letters_) {
        if (c != 'a' && c != 'b') {
            fail(ErrorCode::invalid_argument,
                 "invalid argument: word contains '" + std::string(1, c) + "', expected only 'a' and 'b'");
        }
    }
}

Word trusted_word(std::string letters) { return Word(Word::Trusted{}, std::move(letters)); }

Letter Word::at(std::size_t position) const {
    if (position < 1 || position > letters_.size()) {
        fail(ErrorCode::invalid_argument, "invalid argument: letter index out of range");
    }
    return static_cast<Letter>(letters_[position - 1]);
}

std::size_t Word::count(Letter x) const noexcept {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), to_char(x)));
}

Word operator+(const Word& lhs, const Word& rhs) { return trusted_word(lhs.letters_ + rhs.letters_); }

SignedWord::SignedWord(Sign sign, Word magnitude) : sign_(sign), magnitude_(std::move(magnitude)) {
    if ((sign_ == Sign::empty) != magnitude_.empty()) {
        fail(ErrorCode::invalid_argument, "invalid argument: sign and magnitude of a gap disagree");
    }
}

SignedWord SignedWord::parse(std::string_view text) {
    if (text.empty()) return {};
    if (text.front() == '-') {
        if (text.size() == 1) fail(ErrorCode::invalid_argument, "invalid argument: '-' without a word");
        return SignedWord(Sign::negative, Word(text.substr(1)));
    }
    return SignedWord(Sign::positive, Word(text));
}

std::string SignedWord::to_string() const {
    switch (sign_) {
        case Sign::empty: return {};
        case Sign::positive: return magnitude_.str();
        case Sign::negative: return "-" + magnitude_.str();
    }
    return {};
}

std::uint64_t fib_number(int k) {
    if (k < -1) fail(ErrorCode::invalid_argument, "invalid argument: Fibonacci index below -1");
    std::uint64_t prev = 1;  // f(-1)
    std::uint64_t cur = 1;   // f(0)
    for (int j = 0; j < k; ++j) {
        if (cur > UINT64_MAX - prev) fail(ErrorCode::invalid_argument, "invalid argument: Fibonacci index too large");
        std::uint64_t next = cur + prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

int fib_floor_index(std::uint64_t n) {
    if (n < 1) fail(ErrorCode::invalid_argument, "invalid argument: length must be positive");
    int k = 0;
    std::uint64_t cur = 1;
    std::uint64_t next = 2;
    while (next <= n) {
        std::uint64_t after = cur + next;
        cur = next;
        next = after;
        ++k;
        if (next < cur) break;  // overflow guard, unreachable for realistic n
    }
    return k;
}

namespace {

std::string apply_sigma(std::string_view w) {
    std::string out;
    out.reserve(w.size() * 2);
    for (char c : w) {
        if (c == 'a') {
            out += "ab";
        } else {
            out += 'a';
        }
    }
    return out;
}

/// Write-once cache of F_0, F_1, ... built by repeated morphism application.
class StandardWordCache {
public:
    std::shared_ptr<const std::string> get(int k) {
        std::lock_guard lock(mutex_);
        grow_to(k);
        return words_[static_cast<std::size_t>(k)];
    }

    std::shared_ptr<const std::string> covering(std::size_t length) {
        std::lock_guard lock(mutex_);
        if (words_.empty()) grow_to(0);
        while (words_.back()->size() < length) grow_to(static_cast<int>(words_.size()));
        return words_.back();
    }

private:
    void grow_to(int k) {
        if (words_.empty()) words_.push_back(std::make_shared<const std::string>("a"));
        while (static_cast<int>(words_.size()) <= k) {
            words_.push_back(std::make_shared<const std::string>(apply_sigma(*words_.back())));
        }
    }

    std::mutex mutex_;
    std::vector<std::shared_ptr<const std::string>> words_;
};

StandardWordCache& standard_cache() {
    static StandardWordCache cache;
    return cache;
}

}  // namespace

Word morphism_apply(const Word& w) { return trusted_word(apply_sigma(w.view())); }

Word fib_standard_word(int k) {
    if (k < 0) fail(ErrorCode::invalid_argument, "invalid argument: standard word index must be >= 0");
    if (k > 60) fail(ErrorCode::invalid_argument, "invalid argument: standard word index too large");
    return trusted_word(*standard_cache().get(k));
}

std::shared_ptr<const std::string> fib_prefix_text(std::size_t length) {
    return standard_cache().covering(length);
}

Word fib_prefix(std::size_t length) {
    if (length == 0) return {};
    auto text = fib_prefix_text(length);
    return trusted_word(text->substr(0, length));
}

Word subword(const Word& w, std::int64_t i, std::int64_t j) {
    const auto n = static_cast<std::int64_t>(w.size());
    if (i < 1 || j < i - 1 || j > n) {
        fail(ErrorCode::invalid_argument,
             "invalid argument: subword [" + std::to_string(i) + "," + std::to_string(j) + "] of a word of length " +
                 std::to_string(n));
    }
    return trusted_word(w.str().substr(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - i + 1)));
}

Word conjugate(const Word& w, std::int64_t j) {
    if (w.empty()) fail(ErrorCode::invalid_argument, "invalid argument: conjugate of the empty word");
    const auto n = static_cast<std::int64_t>(w.size());
    const auto shift = static_cast<std::size_t>(((j % n) + n) % n);
    const std::string& s = w.str();
    return trusted_word(s.substr(shift) + s.substr(0, shift));
}

SignedWord signed_reduce(const Word& left, const SignedWord& mid, const Word& right) {
    // Free-group letters: +c is the letter c, -c its inverse.
    struct GroupLetter {
        char letter;
        int exponent;
    };
    std::vector<GroupLetter> stack;
    stack.reserve(left.size() + mid.magnitude().size() + right.size());

    auto push = [&stack](char c, int e) {
        if (!stack.empty() && stack.back().letter == c && stack.back().exponent == -e) {
            stack.pop_back();
        } else {
            stack.push_back({c, e});
        }
    };
    auto push_inverse = [&push](const std::string& s) {
        for (auto it = s.rbegin(); it != s.rend(); ++it) push(*it, -1);
    };

    push_inverse(left.str());
    if (mid.sign() == Sign::negative) {
        push_inverse(mid.magnitude().str());
    } else {
        for (char c : mid.magnitude().str()) push(c, +1);
    }
    push_inverse(right.str());

    if (stack.empty()) return {};
    const int e = stack.front().exponent;
    std::string letters;
    letters.reserve(stack.size());
    for (const auto& g : stack) {
        if (g.exponent != e) {
            fail(ErrorCode::incomplete_cancellation,
                 "incomplete cancellation: reduced gap mixes letters and inverse letters");
        }
        letters += g.letter;
    }
    if (e > 0) return SignedWord(Sign::positive, trusted_word(std::move(letters)));
    // x_n^{-1} ... x_1^{-1} is the inverse of x_1 ... x_n.
    std::reverse(letters.begin(), letters.end());
    return SignedWord(Sign::negative, trusted_word(std::move(letters)));
}

}  // namespace fibgap
