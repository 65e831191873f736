// extern "C" surface over the C++ core. Exceptions never cross this boundary.

#include "fibgap/fibgap.h"

#include <exception>
#include <new>
#include <string>
#include <vector>

#include "fibgap/gaps.hpp"
#include "fibgap/kernel.hpp"
#include "fibgap/oracle.hpp"
#include "fibgap/singular.hpp"
#include "fibgap/spectra.hpp"
#include "fibgap/word.hpp"

struct fg_string {
    std::string text;
};

struct fg_factor {
    fibgap::Word word;
    fibgap::KernelHit kernel;
    fibgap::Classification classification;
    fibgap::Decomposition decomposition;
    std::string nu1;
    std::string nu2;
};

struct fg_word_list {
    std::vector<std::string> words;
};

struct fg_occurrences {
    fibgap::oracle::OccurrenceList list;
    std::vector<std::string> gaps;
};

struct fg_report {
    fibgap::oracle::Report report;
    std::string text;
    std::string json;
};

namespace {

thread_local std::string last_error;

fg_status to_status(fibgap::ErrorCode code) {
    switch (code) {
        case fibgap::ErrorCode::invalid_argument: return FG_ERR_INVALID_ARGUMENT;
        case fibgap::ErrorCode::not_a_factor: return FG_ERR_NOT_FACTOR;
        case fibgap::ErrorCode::special_word: return FG_ERR_SPECIAL_WORD;
        case fibgap::ErrorCode::incomplete_cancellation: return FG_ERR_INCOMPLETE_CANCELLATION;
    }
    return FG_ERR_INTERNAL;
}

template <typename Body>
fg_status guarded(Body&& body) {
    try {
        body();
        last_error.clear();
        return FG_OK;
    } catch (const fibgap::Error& e) {
        last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return FG_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return FG_ERR_INTERNAL;
    }
}

fg_status null_argument() {
    last_error = "invalid argument: null pointer";
    return FG_ERR_INVALID_ARGUMENT;
}

fibgap::Word word_arg(const char* w) { return fibgap::Word(w); }

fg_string* own(std::string s) { return new fg_string{std::move(s)}; }

}  // namespace

extern "C" {

const char* fg_last_error(void) { return last_error.c_str(); }

const char* fg_status_name(fg_status status) {
    switch (status) {
        case FG_OK: return "ok";
        case FG_ERR_INVALID_ARGUMENT: return "invalid argument";
        case FG_ERR_NOT_FACTOR: return "not a factor of the Fibonacci word";
        case FG_ERR_SPECIAL_WORD: return "special word: use oracle-backed gaps";
        case FG_ERR_INCOMPLETE_CANCELLATION: return "incomplete cancellation";
        case FG_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* fg_factor_type_name(fg_factor_type type) {
    if (type < FG_T1_1 || type > FG_T2_3) return "";
    return fibgap::to_string(static_cast<fibgap::FactorType>(type)).data();
}

const char* fg_string_data(const fg_string* s) { return s ? s->text.c_str() : ""; }
size_t fg_string_size(const fg_string* s) { return s ? s->text.size() : 0; }
void fg_string_free(fg_string* s) { delete s; }

fg_status fg_fib_number(int k, uint64_t* out) {
    if (!out) return null_argument();
    return guarded([&] { *out = fibgap::fib_number(k); });
}

fg_status fg_fib_prefix(uint64_t length, fg_string** out) {
    if (!out) return null_argument();
    return guarded([&] { *out = own(fibgap::fib_prefix(length).str()); });
}

fg_status fg_fib_standard_word(int k, fg_string** out) {
    if (!out) return null_argument();
    return guarded([&] { *out = own(fibgap::fib_standard_word(k).str()); });
}

fg_status fg_singular_word(int k, fg_string** out) {
    if (!out) return null_argument();
    return guarded([&] { *out = own(fibgap::singular_word(k).str()); });
}

fg_status fg_letter_at(uint64_t p, char* out) {
    if (!out) return null_argument();
    return guarded([&] { *out = fibgap::to_char(fibgap::letter_at(p)); });
}

fg_status fg_is_factor(const char* word, int* out) {
    if (!word || !out) return null_argument();
    return guarded([&] { *out = fibgap::is_factor(word_arg(word)) ? 1 : 0; });
}

fg_status fg_factor_create(const char* word, fg_factor** out) {
    if (!word || !out) return null_argument();
    return guarded([&] {
        fibgap::Word w = word_arg(word);
        auto kernel = fibgap::singular_kernel(w);
        auto classification = fibgap::classify(w);
        auto decomposition = fibgap::decompose(w);
        auto pair = fibgap::gap_pair(w);
        *out = new fg_factor{std::move(w),           kernel, classification, std::move(decomposition),
                             pair.nu1.to_string(), pair.nu2.to_string()};
    });
}

void fg_factor_free(fg_factor* f) { delete f; }

const char* fg_factor_word(const fg_factor* f) { return f ? f->word.str().c_str() : ""; }

fg_status fg_factor_classification(const fg_factor* f, fg_classification* out) {
    if (!f || !out) return null_argument();
    out->type = static_cast<fg_factor_type>(f->classification.type);
    out->n = f->classification.n;
    out->k = f->classification.k;
    out->i = f->classification.i;
    return FG_OK;
}

int fg_factor_kernel_order(const fg_factor* f) { return f ? f->kernel.order : -2; }
uint64_t fg_factor_kernel_start(const fg_factor* f) { return f ? f->kernel.start : 0; }
const char* fg_factor_mu1(const fg_factor* f) { return f ? f->decomposition.mu1.str().c_str() : ""; }
const char* fg_factor_mu2(const fg_factor* f) { return f ? f->decomposition.mu2.str().c_str() : ""; }

fg_status fg_factor_gap(const fg_factor* f, int which, const char** out) {
    if (!f || !out) return null_argument();
    if (which != 1 && which != 2) {
        last_error = "invalid argument: gap selector must be 1 or 2";
        return FG_ERR_INVALID_ARGUMENT;
    }
    *out = (which == 1 ? f->nu1 : f->nu2).c_str();
    return FG_OK;
}

fg_status fg_factor_gap_index_at(const fg_factor* f, uint64_t p, int* out) {
    if (!f || !out) return null_argument();
    return guarded([&] { *out = fibgap::letter_at(p) == fibgap::Letter::a ? 1 : 2; });
}

fg_status fg_factor_position(const fg_factor* f, uint64_t p, uint64_t* out) {
    if (!f || !out) return null_argument();
    return guarded([&] { *out = fibgap::occurrence_position(f->word, p); });
}

fg_status fg_factor_conjugate_index(const fg_factor* f, int* present, int64_t* out) {
    if (!f || !present || !out) return null_argument();
    const auto n = f->word.size();
    const int k = fibgap::fib_floor_index(n);
    if (k < 2 || fibgap::fib_number(k) != n) {
        *present = 0;
        *out = 0;
        return FG_OK;
    }
    return guarded([&] {
        auto idx = fibgap::conjugate_index(f->word);
        *present = idx ? 1 : 0;
        *out = idx.value_or(0);
    });
}

fg_status fg_in_spectrum(const char* word, uint64_t p, const char* prop, int* out) {
    if (!word || !prop || !out) return null_argument();
    return guarded([&] {
        *out = fibgap::in_spectrum(word_arg(word), p, fibgap::parse_property(prop)) ? 1 : 0;
    });
}

fg_status fg_local_spectrum(const char* prop, unsigned* type_mask) {
    if (!prop || !type_mask) return null_argument();
    return guarded([&] {
        unsigned mask = 0;
        for (auto t : fibgap::local_spectrum(fibgap::parse_property(prop))) mask |= 1u << static_cast<unsigned>(t);
        *type_mask = mask;
    });
}

fg_status fg_square_factor_check(const char* word, int* out) {
    if (!word || !out) return null_argument();
    return guarded([&] {
        const fibgap::Word w = word_arg(word);
        // Classification presupposes a factor; anything else has no square.
        *out = fibgap::is_factor(w) && fibgap::square_factor_check(w) ? 1 : 0;
    });
}

fg_status fg_enumerate_factors(uint64_t n, fg_word_list** out) {
    if (!out) return null_argument();
    return guarded([&] {
        auto list = new fg_word_list;
        for (const auto& w : fibgap::enumerate_factors(n)) list->words.push_back(w.str());
        *out = list;
    });
}

size_t fg_word_list_size(const fg_word_list* list) { return list ? list->words.size() : 0; }

const char* fg_word_list_at(const fg_word_list* list, size_t index) {
    if (!list || index >= list->words.size()) return nullptr;
    return list->words[index].c_str();
}

void fg_word_list_free(fg_word_list* list) { delete list; }

fg_status fg_type_census(uint64_t n, uint64_t counts[6]) {
    if (!counts) return null_argument();
    return guarded([&] {
        const auto census = fibgap::type_census(n);
        for (int t = 0; t < 6; ++t) {
            auto it = census.find(static_cast<fibgap::FactorType>(t));
            counts[t] = it == census.end() ? 0 : it->second;
        }
    });
}

fg_status fg_find_occurrences(const char* word, uint64_t prefix_len, uint64_t min_count, fg_occurrences** out) {
    if (!word || !out) return null_argument();
    return guarded([&] {
        const fibgap::Word w = word_arg(word);
        auto list = prefix_len == 0 ? fibgap::oracle::first_occurrences(w, min_count)
                                    : fibgap::oracle::find_occurrences(w, prefix_len);
        auto result = new fg_occurrences{std::move(list), {}};
        for (const auto& g : fibgap::oracle::extract_gaps(result->list)) result->gaps.push_back(g.to_string());
        *out = result;
    });
}

size_t fg_occurrences_size(const fg_occurrences* occ) { return occ ? occ->list.positions.size() : 0; }

uint64_t fg_occurrences_position(const fg_occurrences* occ, size_t index) {
    if (!occ || index >= occ->list.positions.size()) return 0;
    return occ->list.positions[index];
}

uint64_t fg_occurrences_prefix_len(const fg_occurrences* occ) { return occ ? occ->list.prefix_len : 0; }

const char* fg_occurrences_gap(const fg_occurrences* occ, size_t index) {
    if (!occ || index >= occ->gaps.size()) return nullptr;
    return occ->gaps[index].c_str();
}

void fg_occurrences_free(fg_occurrences* occ) { delete occ; }

fg_status fg_special_word_gaps(const char* word, fg_string** nu1, fg_string** nu2) {
    if (!word || !nu1 || !nu2) return null_argument();
    return guarded([&] {
        const auto pair = fibgap::oracle::special_word_gaps(word_arg(word));
        *nu1 = own(pair.nu1.to_string());
        *nu2 = own(pair.nu2.to_string());
    });
}

fg_status fg_verify_range(uint64_t max_len, uint64_t p_max, fg_report** out) {
    if (!out) return null_argument();
    return guarded([&] {
        auto report = fibgap::oracle::verify_range(max_len, p_max);
        auto text = report.to_text();
        auto json = report.to_json_lines();
        *out = new fg_report{std::move(report), std::move(text), std::move(json)};
    });
}

uint64_t fg_report_mismatches(const fg_report* r) { return r ? r->report.total_mismatches() : 0; }
uint64_t fg_report_factors(const fg_report* r) { return r ? r->report.factors : 0; }
const char* fg_report_text(const fg_report* r) { return r ? r->text.c_str() : ""; }
const char* fg_report_json_lines(const fg_report* r) { return r ? r->json.c_str() : ""; }
void fg_report_free(fg_report* r) { delete r; }

}  // extern "C"
