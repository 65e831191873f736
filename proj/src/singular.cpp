#include "fibgap/singular.hpp"

#include "fibgap/gaps.hpp"

namespace fibgap {

std::pair<Letter, Letter> alpha_beta(int k) {
    if (k < 0) fail(ErrorCode::invalid_argument, "invalid argument: alpha/beta need k >= 0");
    const Letter alpha = (k % 2 == 0) ? Letter::a : Letter::b;
    return {alpha, other(alpha)};
}

Word singular_word(int k) {
    if (k < -1) fail(ErrorCode::invalid_argument, "invalid argument: singular word index below -1");
    if (k == -1) return trusted_word("a");
    if (k == 0) return trusted_word("b");
    const auto [alpha, beta] = alpha_beta(k);
    const Word standard = fib_standard_word(k);
    std::string s;
    s.reserve(standard.size());
    s += to_char(beta);
    s.append(standard.str(), 0, standard.size() - 1);
    return trusted_word(std::move(s));
}

Word singular_prefix_product(int k) {
    if (k < 0) fail(ErrorCode::invalid_argument, "invalid argument: prefix product needs k >= 0");
    std::string out;
    for (int j = -1; j <= k - 1; ++j) out += singular_word(j).str();
    return trusted_word(std::move(out));
}

namespace {

std::uint64_t singular_length(int k) { return k == -2 ? 0 : fib_number(k); }

}  // namespace

Word singular_gap(int k, std::uint64_t p) {
    if (k < -1) fail(ErrorCode::invalid_argument, "invalid argument: singular gap index below -1");
    if (p < 1) fail(ErrorCode::invalid_argument, "invalid argument: occurrence index must be >= 1");
    if (letter_at(p) == Letter::a) return singular_word(k + 1);
    return k == -1 ? Word() : singular_word(k - 1);
}

std::uint64_t singular_position(int k, std::uint64_t p) {
    if (k < -1) fail(ErrorCode::invalid_argument, "invalid argument: singular position index below -1");
    if (p < 1) fail(ErrorCode::invalid_argument, "invalid argument: occurrence index must be >= 1");
    const std::uint64_t len = fib_number(k);
    const std::uint64_t long_gap = singular_length(k + 1);
    const std::uint64_t short_gap = singular_length(k - 1);
    std::uint64_t pos = fib_number(k + 1);
    for (std::uint64_t q = 1; q < p; ++q) {
        pos += len + (letter_at(q) == Letter::a ? long_gap : short_gap);
    }
    return pos;
}

Word theta(int k) {
    if (k < 0) fail(ErrorCode::invalid_argument, "invalid argument: theta needs k >= 0");
    const char alpha = to_char(alpha_beta(k).first);
    const std::string outer = singular_word(k + 1).str();
    // s_{k+1} is a palindrome that starts (and ends) with alpha.
    if (outer.front() != alpha || outer.back() != alpha) {
        fail(ErrorCode::invalid_argument, "internal: s_{k+1} does not start and end with alpha");
    }
    std::string out = outer.substr(1);
    out += singular_word(k).str();
    out.append(outer, 0, outer.size() - 1);
    return trusted_word(std::move(out));
}

}  // namespace fibgap
