// Exercises the shared library through its C header only.

#include <gtest/gtest.h>

#include <string>
#include <thread>

#include "fibgap/fibgap.h"

namespace {

std::string take(fg_string* s) {
    std::string out(fg_string_data(s), fg_string_size(s));
    fg_string_free(s);
    return out;
}

}  // namespace

TEST(CApi, WordsAndNumbers) {
    uint64_t f = 0;
    ASSERT_EQ(fg_fib_number(5, &f), FG_OK);
    EXPECT_EQ(f, 13u);
    EXPECT_EQ(fg_fib_number(-3, &f), FG_ERR_INVALID_ARGUMENT);
    EXPECT_NE(std::string(fg_last_error()), "");

    fg_string* s = nullptr;
    ASSERT_EQ(fg_fib_prefix(13, &s), FG_OK);
    EXPECT_EQ(take(s), "abaababaabaab");
    ASSERT_EQ(fg_fib_standard_word(4, &s), FG_OK);
    EXPECT_EQ(take(s), "abaababa");
    ASSERT_EQ(fg_singular_word(3, &s), FG_OK);
    EXPECT_EQ(take(s), "aabaa");

    char letter = 0;
    ASSERT_EQ(fg_letter_at(2, &letter), FG_OK);
    EXPECT_EQ(letter, 'b');
    EXPECT_EQ(fg_letter_at(0, &letter), FG_ERR_INVALID_ARGUMENT);

    int yes = -1;
    ASSERT_EQ(fg_is_factor("babaabab", &yes), FG_OK);
    EXPECT_EQ(yes, 1);
    ASSERT_EQ(fg_is_factor("bb", &yes), FG_OK);
    EXPECT_EQ(yes, 0);
    EXPECT_EQ(fg_is_factor("abc", &yes), FG_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(fg_is_factor(nullptr, &yes), FG_ERR_INVALID_ARGUMENT);
}

TEST(CApi, FactorHandle) {
    fg_factor* f = nullptr;
    ASSERT_EQ(fg_factor_create("baababaab", &f), FG_OK);
    fg_classification c{};
    ASSERT_EQ(fg_factor_classification(f, &c), FG_OK);
    EXPECT_EQ(c.type, FG_T2_3);
    EXPECT_EQ(c.n, 9u);
    EXPECT_EQ(c.k, 4);
    EXPECT_EQ(c.i, 1);
    EXPECT_STREQ(fg_factor_type_name(c.type), "T2.3");
    EXPECT_STREQ(fg_factor_word(f), "baababaab");
    EXPECT_EQ(fg_factor_kernel_order(f), 2);
    EXPECT_EQ(fg_factor_kernel_start(f), 4u);
    EXPECT_STREQ(fg_factor_mu1(f), "baa");
    EXPECT_STREQ(fg_factor_mu2(f), "aab");

    const char* gap = nullptr;
    ASSERT_EQ(fg_factor_gap(f, 1, &gap), FG_OK);
    EXPECT_STREQ(gap, "-b");
    ASSERT_EQ(fg_factor_gap(f, 2, &gap), FG_OK);
    EXPECT_STREQ(gap, "-baab");
    EXPECT_EQ(fg_factor_gap(f, 3, &gap), FG_ERR_INVALID_ARGUMENT);

    int which = 0;
    ASSERT_EQ(fg_factor_gap_index_at(f, 2, &which), FG_OK);
    EXPECT_EQ(which, 2);

    int present = -1;
    int64_t idx = -1;
    ASSERT_EQ(fg_factor_conjugate_index(f, &present, &idx), FG_OK);
    EXPECT_EQ(present, 0);
    fg_factor_free(f);

    ASSERT_EQ(fg_factor_create("baabaaba", &f), FG_OK);
    uint64_t pos = 0;
    ASSERT_EQ(fg_factor_position(f, 1, &pos), FG_OK);
    EXPECT_EQ(pos, 7u);
    ASSERT_EQ(fg_factor_conjugate_index(f, &present, &idx), FG_OK);
    EXPECT_EQ(present, 1);
    EXPECT_EQ(idx, 6);
    fg_factor_free(f);
}

TEST(CApi, FactorErrors) {
    fg_factor* f = nullptr;
    EXPECT_EQ(fg_factor_create("bb", &f), FG_ERR_NOT_FACTOR);
    EXPECT_NE(std::string(fg_last_error()).find("not a factor"), std::string::npos);
    EXPECT_EQ(fg_factor_create("aba", &f), FG_ERR_SPECIAL_WORD);
    EXPECT_NE(std::string(fg_last_error()).find("special word"), std::string::npos);
    EXPECT_EQ(fg_factor_create("", &f), FG_ERR_SPECIAL_WORD);
    EXPECT_EQ(fg_factor_create("xyz", &f), FG_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(f, nullptr);
    EXPECT_STREQ(fg_status_name(FG_ERR_NOT_FACTOR), "not a factor of the Fibonacci word");
    fg_factor_free(nullptr);
}

TEST(CApi, Spectra) {
    int in = -1;
    ASSERT_EQ(fg_in_spectrum("baababaab", 5, "O2", &in), FG_OK);
    EXPECT_EQ(in, 1);
    ASSERT_EQ(fg_in_spectrum("babaabab", 3, "P1", &in), FG_OK);
    EXPECT_EQ(in, 0);
    EXPECT_EQ(fg_in_spectrum("babaabab", 3, "Q1", &in), FG_ERR_INVALID_ARGUMENT);

    unsigned mask = 0;
    ASSERT_EQ(fg_local_spectrum("P1", &mask), FG_OK);
    EXPECT_EQ(mask, (1u << FG_T1_2) | (1u << FG_T1_3));
    ASSERT_EQ(fg_local_spectrum("P3", &mask), FG_OK);
    EXPECT_EQ(mask, 0u);

    ASSERT_EQ(fg_square_factor_check("baabaaba", &in), FG_OK);
    EXPECT_EQ(in, 1);
    ASSERT_EQ(fg_square_factor_check("bb", &in), FG_OK);
    EXPECT_EQ(in, 0);
}

TEST(CApi, ListsAndCensus) {
    fg_word_list* list = nullptr;
    ASSERT_EQ(fg_enumerate_factors(2, &list), FG_OK);
    ASSERT_EQ(fg_word_list_size(list), 3u);
    EXPECT_STREQ(fg_word_list_at(list, 0), "aa");
    EXPECT_STREQ(fg_word_list_at(list, 2), "ba");
    EXPECT_EQ(fg_word_list_at(list, 3), nullptr);
    fg_word_list_free(list);

    uint64_t counts[6] = {};
    ASSERT_EQ(fg_type_census(9, counts), FG_OK);
    EXPECT_EQ(counts[FG_T2_1], 2u);
    EXPECT_EQ(counts[FG_T2_2], 5u);
    EXPECT_EQ(counts[FG_T2_3], 3u);
    EXPECT_EQ(counts[FG_T1_1], 0u);
    EXPECT_EQ(fg_type_census(2, counts), FG_ERR_INVALID_ARGUMENT);
}

TEST(CApi, OracleHandles) {
    fg_occurrences* occ = nullptr;
    ASSERT_EQ(fg_find_occurrences("baabaabab", 0, 3, &occ), FG_OK);
    ASSERT_GE(fg_occurrences_size(occ), 3u);
    EXPECT_STREQ(fg_occurrences_gap(occ, 0), "aaba");
    EXPECT_STREQ(fg_occurrences_gap(occ, 1), "-b");
    EXPECT_GT(fg_occurrences_prefix_len(occ), 0u);
    fg_occurrences_free(occ);

    ASSERT_EQ(fg_find_occurrences("a", 5, 0, &occ), FG_OK);
    ASSERT_EQ(fg_occurrences_size(occ), 3u);
    EXPECT_EQ(fg_occurrences_position(occ, 2), 4u);
    fg_occurrences_free(occ);

    fg_string* nu1 = nullptr;
    fg_string* nu2 = nullptr;
    ASSERT_EQ(fg_special_word_gaps("ab", &nu1, &nu2), FG_OK);
    EXPECT_EQ(take(nu1), "a");
    EXPECT_EQ(take(nu2), "");

    fg_report* report = nullptr;
    ASSERT_EQ(fg_verify_range(12, 10, &report), FG_OK);
    EXPECT_EQ(fg_report_mismatches(report), 0u);
    EXPECT_GT(fg_report_factors(report), 0u);
    EXPECT_NE(std::string(fg_report_text(report)).find("0 mismatches"), std::string::npos);
    fg_report_free(report);
}

TEST(CApi, LastErrorIsPerThread) {
    int out = 0;
    ASSERT_EQ(fg_is_factor("abc", &out), FG_ERR_INVALID_ARGUMENT);
    std::string other;
    std::thread worker([&] {
        fg_is_factor("ab", &out);
        other = fg_last_error();
    });
    worker.join();
    EXPECT_EQ(other, "");
    EXPECT_NE(std::string(fg_last_error()), "");
}
