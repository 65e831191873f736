// fibgap: one-shot queries about factors of the Fibonacci word.
//
// Exit status: 0 success, 2 usage error or invalid argument, 3 domain error.

#include <array>
#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fibgap/fibgap.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int exit_usage = 2;
constexpr int exit_domain = 3;

const std::vector<std::string> all_properties{"P1", "P2", "P3", "S1", "S2", "S3", "Sinf", "O1", "O2", "Oinf"};

struct Failure {
    fg_status status;
    std::string message;
};

void check(fg_status status) {
    if (status != FG_OK) throw Failure{status, fg_last_error()};
}

struct StringDeleter {
    void operator()(fg_string* s) const { fg_string_free(s); }
};
struct FactorDeleter {
    void operator()(fg_factor* f) const { fg_factor_free(f); }
};
struct OccurrencesDeleter {
    void operator()(fg_occurrences* o) const { fg_occurrences_free(o); }
};
struct ListDeleter {
    void operator()(fg_word_list* l) const { fg_word_list_free(l); }
};
struct ReportDeleter {
    void operator()(fg_report* r) const { fg_report_free(r); }
};

using StringPtr = std::unique_ptr<fg_string, StringDeleter>;
using FactorPtr = std::unique_ptr<fg_factor, FactorDeleter>;
using OccurrencesPtr = std::unique_ptr<fg_occurrences, OccurrencesDeleter>;
using ListPtr = std::unique_ptr<fg_word_list, ListDeleter>;
using ReportPtr = std::unique_ptr<fg_report, ReportDeleter>;

bool is_special(const std::string& w) { return w.empty() || w == "ab" || w == "ba" || w == "aba"; }

FactorPtr make_factor(const std::string& w) {
    fg_factor* raw = nullptr;
    check(fg_factor_create(w.c_str(), &raw));
    return FactorPtr(raw);
}

OccurrencesPtr oracle_occurrences(const std::string& w, std::uint64_t prefix_len, std::uint64_t min_count) {
    fg_occurrences* raw = nullptr;
    check(fg_find_occurrences(w.c_str(), prefix_len, min_count, &raw));
    return OccurrencesPtr(raw);
}

/// Rejects non-factors before taking the oracle route (which would search forever).
void require_factor(const std::string& w) {
    int factor = 0;
    check(fg_is_factor(w.c_str(), &factor));
    if (!factor) throw Failure{FG_ERR_NOT_FACTOR, "not a factor of the Fibonacci word: " + w};
}

struct Options {
    bool json = false;
    std::string word;
    std::uint64_t number = 0;
    std::uint64_t count = 10;
    std::uint64_t prefix_len = 0;
    std::uint64_t max_len = 30;
    std::uint64_t p_max = 20;
    std::vector<std::string> props;
};

void run_prefix(const Options& o) {
    fg_string* raw = nullptr;
    check(fg_fib_prefix(o.number, &raw));
    StringPtr s(raw);
    if (o.json) {
        std::cout << json{{"length", o.number}, {"prefix", fg_string_data(s.get())}}.dump() << '\n';
    } else {
        std::cout << fg_string_data(s.get()) << '\n';
    }
}

void run_classify(const Options& o) {
    auto f = make_factor(o.word);
    fg_classification c{};
    check(fg_factor_classification(f.get(), &c));
    const std::string type = fg_factor_type_name(c.type);
    if (o.json) {
        std::cout << json{{"type", type}, {"n", c.n}, {"k", c.k}, {"i", c.i}}.dump() << '\n';
    } else {
        std::cout << "type=" << type << " n=" << c.n << " k=" << c.k << " i=" << c.i << '\n';
    }
}

void run_decompose(const Options& o) {
    auto f = make_factor(o.word);
    const std::string mu1 = fg_factor_mu1(f.get());
    const std::string mu2 = fg_factor_mu2(f.get());
    const int order = fg_factor_kernel_order(f.get());
    if (o.json) {
        std::cout << json{{"mu1", mu1}, {"k", order}, {"mu2", mu2}}.dump() << '\n';
    } else {
        std::cout << "mu1=" << mu1 << " k=" << order << " mu2=" << mu2 << '\n';
    }
}

std::pair<std::string, std::string> gap_pair_of(const std::string& w) {
    if (is_special(w) && !w.empty()) {
        fg_string* a = nullptr;
        fg_string* b = nullptr;
        check(fg_special_word_gaps(w.c_str(), &a, &b));
        StringPtr nu1(a), nu2(b);
        return {fg_string_data(nu1.get()), fg_string_data(nu2.get())};
    }
    auto f = make_factor(w);
    const char* nu1 = nullptr;
    const char* nu2 = nullptr;
    check(fg_factor_gap(f.get(), 1, &nu1));
    check(fg_factor_gap(f.get(), 2, &nu2));
    return {nu1, nu2};
}

void run_gaps(const Options& o) {
    const auto [nu1, nu2] = gap_pair_of(o.word);
    if (o.json) {
        std::cout << json{{"nu1", nu1}, {"nu2", nu2}}.dump() << '\n';
    } else {
        std::cout << "nu1=" << nu1 << " nu2=" << nu2 << '\n';
    }
}

void emit_position(const Options& o, std::uint64_t p, std::uint64_t position) {
    if (o.json) {
        std::cout << json{{"p", p}, {"position", position}}.dump() << '\n';
    } else {
        std::cout << "p=" << p << " position=" << position << '\n';
    }
}

void run_occurrences(const Options& o) {
    if (o.prefix_len != 0 || is_special(o.word)) {
        if (o.prefix_len == 0) require_factor(o.word);
        auto occ = oracle_occurrences(o.word, o.prefix_len, o.count);
        const std::size_t shown = std::min<std::size_t>(fg_occurrences_size(occ.get()), o.count);
        for (std::size_t idx = 0; idx < shown; ++idx) emit_position(o, idx + 1, fg_occurrences_position(occ.get(), idx));
        return;
    }
    auto f = make_factor(o.word);
    for (std::uint64_t p = 1; p <= o.count; ++p) {
        std::uint64_t position = 0;
        check(fg_factor_position(f.get(), p, &position));
        emit_position(o, p, position);
    }
}

void run_gapseq(const Options& o) {
    std::vector<std::string> gaps;
    std::string first;
    if (is_special(o.word)) {
        require_factor(o.word);
        auto occ = oracle_occurrences(o.word, 0, o.count + 1);
        for (std::size_t idx = 0; idx < o.count; ++idx) gaps.emplace_back(fg_occurrences_gap(occ.get(), idx));
        first = gaps.front();
    } else {
        auto f = make_factor(o.word);
        const char* nu[2] = {nullptr, nullptr};
        check(fg_factor_gap(f.get(), 1, &nu[0]));
        check(fg_factor_gap(f.get(), 2, &nu[1]));
        first = nu[0];
        for (std::uint64_t p = 1; p <= o.count; ++p) {
            int which = 0;
            check(fg_factor_gap_index_at(f.get(), p, &which));
            gaps.emplace_back(nu[which - 1]);
        }
    }
    for (std::size_t idx = 0; idx < gaps.size(); ++idx) {
        const std::string label = gaps[idx] == first ? "A" : "B";
        if (o.json) {
            std::cout << json{{"p", idx + 1}, {"gap", gaps[idx]}, {"label", label}}.dump() << '\n';
        } else {
            std::cout << "p=" << idx + 1 << " gap=" << gaps[idx] << " label=" << label << '\n';
        }
    }
}

void run_spectrum(const Options& o) {
    const auto& props = o.props.empty() ? all_properties : o.props;
    if (is_special(o.word)) require_factor(o.word);
    for (std::uint64_t p = 1; p <= o.count; ++p) {
        json record;
        record["p"] = p;
        std::string line = "p=" + std::to_string(p);
        for (const auto& prop : props) {
            int member = 0;
            check(fg_in_spectrum(o.word.c_str(), p, prop.c_str(), &member));
            record[prop] = member != 0;
            line += " " + prop + "=" + (member ? "true" : "false");
        }
        std::cout << (o.json ? record.dump() : line) << '\n';
    }
}

void run_complexity(const Options& o) {
    fg_word_list* raw = nullptr;
    check(fg_enumerate_factors(o.number, &raw));
    ListPtr list(raw);
    std::vector<std::string> factors;
    for (std::size_t idx = 0; idx < fg_word_list_size(list.get()); ++idx) factors.emplace_back(fg_word_list_at(list.get(), idx));

    std::optional<std::array<std::uint64_t, 6>> census;
    if (o.number >= 3) {
        std::array<std::uint64_t, 6> counts{};
        check(fg_type_census(o.number, counts.data()));
        census = counts;
    }
    if (o.json) {
        json record{{"n", o.number}, {"count", factors.size()}, {"factors", factors}};
        if (census) {
            json types = json::object();
            for (int t = 0; t < 6; ++t) {
                if ((*census)[t] != 0) types[fg_factor_type_name(static_cast<fg_factor_type>(t))] = (*census)[t];
            }
            record["census"] = types;
        }
        std::cout << record.dump() << '\n';
        return;
    }
    std::cout << "n=" << o.number << " count=" << factors.size() << '\n';
    if (census) {
        std::cout << "census";
        for (int t = 0; t < 6; ++t) {
            if ((*census)[t] != 0) std::cout << ' ' << fg_factor_type_name(static_cast<fg_factor_type>(t)) << '=' << (*census)[t];
        }
        std::cout << '\n';
    }
    for (const auto& w : factors) std::cout << w << '\n';
}

int run_verify(const Options& o) {
    fg_report* raw = nullptr;
    check(fg_verify_range(o.max_len, o.p_max, &raw));
    ReportPtr report(raw);
    std::cout << (o.json ? fg_report_json_lines(report.get()) : fg_report_text(report.get()));
    return fg_report_mismatches(report.get()) == 0 ? 0 : exit_domain;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gap words, kernels and occurrences of factors of the Fibonacci word"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    app.add_flag("--json", o.json, "Emit one JSON record per result");

    auto add_word = [&o](CLI::App* cmd) { cmd->add_option("word", o.word, "Word over {a,b}")->required(); };

    auto* prefix = app.add_subcommand("prefix", "Print the first N letters of the Fibonacci word");
    prefix->add_option("length", o.number, "Prefix length")->required();

    auto* classify = app.add_subcommand("classify", "Type T1.1..T2.3 with n, k, i");
    add_word(classify);
    auto* decompose = app.add_subcommand("decompose", "Split as mu1 * s_k * mu2");
    add_word(decompose);
    auto* gaps = app.add_subcommand("gaps", "The two distinct gaps");
    add_word(gaps);

    auto* occurrences = app.add_subcommand("occurrences", "Start positions of the first occurrences");
    add_word(occurrences);
    occurrences->add_option("-p,--count", o.count, "Number of occurrences")->check(CLI::PositiveNumber);
    occurrences->add_option("--prefix-len", o.prefix_len, "Search this prefix with the brute-force oracle");

    auto* gapseq = app.add_subcommand("gapseq", "Gap sequence with A/B labels");
    add_word(gapseq);
    gapseq->add_option("-p,--count", o.count, "Number of gaps")->check(CLI::PositiveNumber);

    auto* spectrum = app.add_subcommand("spectrum", "Power/separated/overlapped membership per occurrence");
    add_word(spectrum);
    spectrum->add_option("-p,--count", o.count, "Occurrences 1..count")->check(CLI::PositiveNumber);
    spectrum->add_option("--prop", o.props, "Properties (P1 P2 P3 S1 S2 S3 Sinf O1 O2 Oinf)");

    auto* complexity = app.add_subcommand("complexity", "Factors of length n and their type census");
    complexity->add_option("n", o.number, "Factor length")->required()->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "Cross-check closed forms against brute force");
    verify->add_option("--max-len", o.max_len, "Largest factor length");
    verify->add_option("--p-max", o.p_max, "Occurrences per factor");

    // spectrum defaults to the first occurrence only
    spectrum->preparse_callback([&o](std::size_t) { o.count = 1; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (*prefix) run_prefix(o);
        if (*classify) run_classify(o);
        if (*decompose) run_decompose(o);
        if (*gaps) run_gaps(o);
        if (*occurrences) run_occurrences(o);
        if (*gapseq) run_gapseq(o);
        if (*spectrum) run_spectrum(o);
        if (*complexity) run_complexity(o);
        if (*verify) return run_verify(o);
    } catch (const Failure& f) {
        std::cerr << "error: " << (f.message.empty() ? fg_status_name(f.status) : f.message) << '\n';
        return f.status == FG_ERR_INVALID_ARGUMENT ? exit_usage : exit_domain;
    }
    return 0;
}
