#include "fibgap/oracle.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "fibgap/kernel.hpp"
#include "fibgap/singular.hpp"

#include "json.hpp"

namespace fibgap::oracle {

namespace {

std::string_view prefix_view(const std::shared_ptr<const std::string>& text, std::size_t length) {
    return std::string_view(*text).substr(0, length);
}

}  // namespace

OccurrenceList find_occurrences(const Word& w, std::size_t prefix_len) {
    if (w.empty()) fail(ErrorCode::invalid_argument, "invalid argument: cannot search for the empty word");
    OccurrenceList out{w, {}, prefix_len};
    auto text_owner = fib_prefix_text(prefix_len);
    const std::string_view text = prefix_view(text_owner, prefix_len);
    const std::string_view pattern = w.view();
    const std::size_t m = pattern.size();

    std::vector<std::size_t> border(m, 0);
    for (std::size_t q = 1, len = 0; q < m; ++q) {
        while (len > 0 && pattern[q] != pattern[len]) len = border[len - 1];
        if (pattern[q] == pattern[len]) ++len;
        border[q] = len;
    }
    for (std::size_t t = 0, matched = 0; t < text.size(); ++t) {
        while (matched > 0 && text[t] != pattern[matched]) matched = border[matched - 1];
        if (text[t] == pattern[matched]) ++matched;
        if (matched == m) {
            out.positions.push_back(t + 2 - m);
            matched = border[m - 1];
        }
    }
    return out;
}

OccurrenceList find_occurrences_naive(const Word& w, std::size_t prefix_len) {
    if (w.empty()) fail(ErrorCode::invalid_argument, "invalid argument: cannot search for the empty word");
    OccurrenceList out{w, {}, prefix_len};
    auto text_owner = fib_prefix_text(prefix_len);
    const std::string_view text = prefix_view(text_owner, prefix_len);
    const std::size_t m = w.size();
    for (std::size_t start = 0; start + m <= text.size(); ++start) {
        if (text.substr(start, m) == w.view()) out.positions.push_back(start + 1);
    }
    return out;
}

OccurrenceList first_occurrences(const Word& w, std::uint64_t count, std::size_t initial) {
    std::size_t length = std::max<std::size_t>(initial, 4 * w.size() + 64);
    const std::size_t complete = complete_prefix_length(w.size());
    for (;;) {
        OccurrenceList occ = find_occurrences(w, length);
        if (occ.positions.size() >= count) return occ;
        if (occ.positions.empty() && length >= complete) {
            fail(ErrorCode::not_a_factor, "not a factor of the Fibonacci word: " + w.str());
        }
        length *= 2;
    }
}

std::vector<SignedWord> extract_gaps(const OccurrenceList& occ) {
    std::vector<SignedWord> gaps;
    if (occ.positions.size() < 2) return gaps;
    auto text_owner = fib_prefix_text(occ.prefix_len);
    const std::string_view text = prefix_view(text_owner, occ.prefix_len);
    const std::uint64_t n = occ.word.size();
    gaps.reserve(occ.positions.size() - 1);
    for (std::size_t q = 0; q + 1 < occ.positions.size(); ++q) {
        // The p-th occurrence covers x_{i+1}..x_{i+n}, the next x_{j+1}..x_{j+n}.
        const std::uint64_t i = occ.positions[q] - 1;
        const std::uint64_t j = occ.positions[q + 1] - 1;
        if (i + n == j) {
            gaps.emplace_back();
        } else if (i + n < j) {
            gaps.push_back(SignedWord::positive(trusted_word(std::string(text.substr(i + n, j - i - n)))));
        } else {
            gaps.push_back(SignedWord::inverse(trusted_word(std::string(text.substr(j, i + n - j)))));
        }
    }
    return gaps;
}

GapPair special_word_gaps(const Word& w) {
    if (w.empty() || !is_special_word(w)) {
        fail(ErrorCode::invalid_argument, "invalid argument: special_word_gaps expects ab, ba or aba");
    }
    const auto occ = find_occurrences(w, 1000);
    const auto gaps = extract_gaps(occ);
    std::vector<SignedWord> distinct;
    for (const auto& g : gaps) {
        if (std::find(distinct.begin(), distinct.end(), g) == distinct.end()) distinct.push_back(g);
    }
    if (distinct.size() != 2) {
        fail(ErrorCode::invalid_argument, "internal: expected two distinct gaps for " + w.str());
    }
    return {distinct[0], distinct[1]};
}

KernelHit brute_force_kernel(const Word& w) {
    std::vector<Word> singular;
    for (int j = -1; fib_number(j) <= w.size(); ++j) singular.push_back(singular_word(j));
    std::size_t best_len = 0;
    KernelHit best{-2, 0};
    for (std::size_t idx = 0; idx < singular.size(); ++idx) {
        const Word& s = singular[idx];
        for (std::size_t start = 0; start + s.size() <= w.size(); ++start) {
            if (w.view().substr(start, s.size()) == s.view() && s.size() > best_len) {
                best_len = s.size();
                best = {static_cast<int>(idx) - 1, start + 1};
            }
        }
    }
    return best;
}

std::uint64_t Report::total_mismatches() const {
    std::uint64_t total = 0;
    for (const auto& t : tallies) total += t.mismatches;
    return total;
}

std::string Report::to_text() const {
    std::ostringstream out;
    out << "verify max_len=" << max_len << " p_max=" << p_max << " factors=" << factors << '\n';
    for (const auto& t : tallies) {
        out << "  " << t.check << ": " << t.comparisons << " comparisons, " << t.mismatches << " mismatches\n";
    }
    for (const auto& m : first_mismatches) {
        out << "  first mismatch [" << m.check << "] word=" << m.word << " p=" << m.p << " expected=\"" << m.expected
            << "\" actual=\"" << m.actual << "\"\n";
    }
    out << total_mismatches() << " mismatches\n";
    return out.str();
}

std::string Report::to_json_lines() const {
    std::ostringstream out;
    for (const auto& t : tallies) {
        nlohmann::ordered_json j;
        j["check"] = t.check;
        j["comparisons"] = t.comparisons;
        j["mismatches"] = t.mismatches;
        out << j.dump() << '\n';
    }
    for (const auto& m : first_mismatches) {
        nlohmann::ordered_json j;
        j["check"] = m.check;
        j["word"] = m.word;
        j["p"] = m.p;
        j["expected"] = m.expected;
        j["actual"] = m.actual;
        out << j.dump() << '\n';
    }
    nlohmann::ordered_json summary;
    summary["factors"] = factors;
    summary["max_len"] = max_len;
    summary["p_max"] = p_max;
    summary["mismatches"] = total_mismatches();
    out << summary.dump() << '\n';
    return out.str();
}

namespace {

class Recorder {
public:
    explicit Recorder(Report& report) : report_(report) {}

    template <typename T>
    void compare(const std::string& check, const Word& w, std::uint64_t p, const T& expected, const T& actual) {
        record(check, w, p, expected == actual, [&] { return std::pair{show(expected), show(actual)}; });
    }

    void flag(const std::string& check, const Word& w, std::uint64_t p, bool ok, const std::string& detail) {
        record(check, w, p, ok, [&] { return std::pair{std::string("true"), detail}; });
    }

    void finish() {
        for (const auto& name : order_) report_.tallies.push_back(tallies_[name]);
    }

private:
    template <typename Describe>
    void record(const std::string& check, const Word& w, std::uint64_t p, bool ok, Describe describe) {
        auto [it, inserted] = tallies_.try_emplace(check, CheckTally{check, 0, 0});
        if (inserted) order_.push_back(check);
        ++it->second.comparisons;
        if (ok) return;
        if (it->second.mismatches++ == 0) {
            auto [expected, actual] = describe();
            report_.first_mismatches.push_back({check, w.str(), p, expected, actual});
        }
    }

    static std::string show(const SignedWord& s) { return s.to_string(); }
    static std::string show(std::uint64_t v) { return std::to_string(v); }
    static std::string show(const Decomposition& d) {
        return d.mu1.str() + "|s" + std::to_string(d.kernel_order) + "|" + d.mu2.str();
    }
    static std::string show(const KernelHit& h) {
        return "s" + std::to_string(h.order) + "@" + std::to_string(h.start);
    }
    static std::string show(const GapPair& g) { return g.nu1.to_string() + "," + g.nu2.to_string(); }
    static std::string show(const std::string& s) { return s; }

    Report& report_;
    std::map<std::string, CheckTally> tallies_;
    std::vector<std::string> order_;
};

bool offset_in_range(const Classification& c) {
    const auto f = [](int k) { return static_cast<std::int64_t>(fib_number(k)); };
    const auto n = static_cast<std::int64_t>(c.n);
    const int k = c.k;
    switch (c.type) {
        case FactorType::T1_1: return c.i == 0;
        case FactorType::T1_2: return f(k - 1) - 1 <= c.i && c.i <= f(k) - 1;
        case FactorType::T1_3: return 0 <= c.i && c.i <= f(k - 1) - 2;
        case FactorType::T2_1: return 0 <= c.i && c.i <= n - f(k);
        case FactorType::T2_2: return 0 <= c.i && c.i <= n - f(k - 1);
        case FactorType::T2_3: return 0 <= c.i && c.i <= f(k + 1) - n - 2;
    }
    return false;
}

void verify_factor(const Word& w, std::uint64_t p_max, Recorder& rec) {
    const std::uint64_t n = w.size();

    // Kernel and decomposition, split at the brute-force kernel.
    const KernelHit truth = brute_force_kernel(w);
    rec.compare("kernel", w, 0, truth, singular_kernel(w));
    const auto kernel_len = fib_number(truth.order);
    const Decomposition split{subword(w, 1, static_cast<std::int64_t>(truth.start) - 1), truth.order,
                              subword(w, static_cast<std::int64_t>(truth.start + kernel_len),
                                      static_cast<std::int64_t>(n))};
    std::size_t occurrences_in_word = 0;
    const Word kernel_word = singular_word(truth.order);
    for (std::size_t s = 0; s + kernel_word.size() <= n; ++s) {
        if (w.view().substr(s, kernel_word.size()) == kernel_word.view()) ++occurrences_in_word;
    }
    rec.flag("kernel_unique", w, 0, occurrences_in_word == 1, std::to_string(occurrences_in_word) + " occurrences");

    const Classification c = classify(w);
    const int k = fib_floor_index(n);
    const bool exact = fib_number(k) == n;
    const auto expected_type = static_cast<FactorType>((exact ? 0 : 3) + (k - truth.order));
    rec.compare("classify", w, 0, std::string(to_string(expected_type)), std::string(to_string(c.type)));
    rec.flag("offset_range", w, 0, offset_in_range(c), "i=" + std::to_string(c.i));
    rec.compare("decompose", w, 0, split, decompose(w));
    rec.compare("decompose_formula", w, 0, split, decomposition_from_classification(c));

    if (exact) {
        const auto idx = conjugate_index(w);
        const bool rotational = c.type == FactorType::T1_2 || c.type == FactorType::T1_3;
        const bool ok = idx.has_value() == rotational && (!idx || *idx == c.i);
        rec.flag("conjugate_index", w, 0, ok, idx ? "i=" + std::to_string(*idx) : std::string("absent"));
    }

    // Occurrences and gaps against the explicit prefix.
    const std::uint64_t want = p_max + 1;
    const std::size_t predicted =
        static_cast<std::size_t>(occurrence_position(w, want) + n + fib_number(fib_floor_index(n) + 2));
    const OccurrenceList occ = first_occurrences(w, want, predicted);
    const auto observed = extract_gaps(occ);

    const GapPair pair = gap_pair(w);
    rec.compare("gap_pair_two_routes", w, 0, pair, gap_pair_by_reduction(w));
    rec.compare("gap_pair_oracle", w, 0, GapPair{observed[0], observed[1]}, pair);

    std::vector<SignedWord> distinct;
    for (std::uint64_t p = 1; p <= p_max; ++p) {
        rec.compare("position", w, p, occ.positions[p - 1], occurrence_position(w, p));
        rec.compare("gap_at", w, p, observed[p - 1], gap_at(w, p));
        if (std::find(distinct.begin(), distinct.end(), observed[p - 1]) == distinct.end()) {
            distinct.push_back(observed[p - 1]);
        }
    }
    const std::size_t expected_distinct = p_max >= 2 ? 2 : 1;
    rec.compare("distinct_gaps", w, 0, std::uint64_t{expected_distinct}, std::uint64_t{distinct.size()});
}

}  // namespace

Report verify_range(std::size_t max_len, std::uint64_t p_max) {
    Report report;
    report.max_len = max_len;
    report.p_max = p_max;
    if (max_len < 4 || p_max < 1) return report;
    Recorder rec(report);
    for (std::size_t n = 4; n <= max_len; ++n) {
        for (const Word& w : enumerate_factors(n)) {
            ++report.factors;
            try {
                verify_factor(w, p_max, rec);
            } catch (const Error& e) {
                rec.flag("exception", w, 0, false, e.what());
            }
        }
    }
    rec.finish();
    return report;
}

}  // namespace fibgap::oracle
