#include "fibgap/spectra.hpp"

#include "fibgap/gaps.hpp"
#include "fibgap/oracle.hpp"

namespace fibgap {

bool gamma_member(std::uint64_t p, GammaSet g) {
    const Letter here = letter_at(p);
    switch (g) {
        case GammaSet::a: return here == Letter::a;
        case GammaSet::b: return here == Letter::b;
        case GammaSet::aa: return here == Letter::a && letter_at(p + 1) == Letter::a;
        case GammaSet::ab: return here == Letter::a && letter_at(p + 1) == Letter::b;
    }
    return false;
}

PropertyId parse_property(std::string_view text) {
    auto bad = [&]() -> PropertyId {
        fail(ErrorCode::invalid_argument, "invalid argument: unknown property '" + std::string(text) + "'");
    };
    if (text.size() < 2) return bad();
    PropertyFamily family{};
    switch (text.front()) {
        case 'P': family = PropertyFamily::power; break;
        case 'S': family = PropertyFamily::separated; break;
        case 'O': family = PropertyFamily::overlapped; break;
        default: return bad();
    }
    const std::string_view rest = text.substr(1);
    if (rest == "inf") {
        if (family == PropertyFamily::power) return bad();
        return {family, 0};
    }
    unsigned index = 0;
    for (char c : rest) {
        if (c < '0' || c > '9' || index > 100000) return bad();
        index = index * 10 + static_cast<unsigned>(c - '0');
    }
    if (index == 0 || rest.front() == '0') return bad();
    return {family, index};
}

std::string to_string(const PropertyId& prop) {
    const char family = prop.family == PropertyFamily::power ? 'P' : prop.family == PropertyFamily::separated ? 'S' : 'O';
    return std::string(1, family) + (prop.infinite() ? std::string("inf") : std::to_string(prop.index));
}

namespace {

bool closed_form_membership(FactorType t, std::uint64_t p, const PropertyId& prop) {
    using T = FactorType;
    const bool unbounded = prop.infinite();
    switch (prop.family) {
        case PropertyFamily::power:
            if (prop.index == 1) return (t == T::T1_2 && gamma_member(p, GammaSet::b)) ||
                                        (t == T::T1_3 && gamma_member(p, GammaSet::a));
            if (prop.index == 2) return t == T::T1_3 && gamma_member(p, GammaSet::aa);
            return false;
        case PropertyFamily::separated: {
            const bool always = t == T::T1_1 || t == T::T2_1;
            if (always) return true;
            const bool first_only = t == T::T1_2 || t == T::T2_2;
            if (!unbounded && prop.index == 1) return first_only && gamma_member(p, GammaSet::a);
            if (!unbounded && prop.index == 2) return first_only && gamma_member(p, GammaSet::aa);
            return false;  // S_i for i >= 3 as S_3
        }
        case PropertyFamily::overlapped:
            if (t == T::T2_3) return true;
            if (!unbounded && prop.index == 1) return (t == T::T1_3 || t == T::T2_2) && gamma_member(p, GammaSet::b);
            return false;
    }
    return false;
}

bool qualifies(const SignedWord& gap, PropertyFamily family) {
    switch (family) {
        case PropertyFamily::power: return gap.sign() == Sign::empty;
        case PropertyFamily::separated: return gap.sign() == Sign::positive;
        case PropertyFamily::overlapped: return gap.sign() == Sign::negative;
    }
    return false;
}

bool observed_membership(const Word& w, std::uint64_t p, const PropertyId& prop) {
    if (prop.infinite()) {
        const GapPair pair = oracle::special_word_gaps(w);
        return qualifies(pair.nu1, prop.family) && qualifies(pair.nu2, prop.family);
    }
    const auto occ = oracle::first_occurrences(w, p + prop.index + 1);
    const auto gaps = oracle::extract_gaps(occ);
    for (std::uint64_t q = p; q < p + prop.index; ++q) {
        if (!qualifies(gaps[q - 1], prop.family)) return false;
    }
    return true;
}

}  // namespace

bool in_spectrum(const Word& w, std::uint64_t p, const PropertyId& prop) {
    if (w.empty()) fail(ErrorCode::special_word, "special word: the empty word has no occurrences");
    if (p < 1) fail(ErrorCode::invalid_argument, "invalid argument: occurrence index must be >= 1");
    if (is_special_word(w)) return observed_membership(w, p, prop);
    return closed_form_membership(classify(w).type, p, prop);
}

std::set<FactorType> local_spectrum(const PropertyId& prop) {
    using T = FactorType;
    const bool unbounded = prop.infinite();
    switch (prop.family) {
        case PropertyFamily::power:
            if (prop.index == 1) return {T::T1_2, T::T1_3};
            if (prop.index == 2) return {T::T1_3};
            return {};
        case PropertyFamily::separated:
            if (!unbounded && prop.index <= 2) return {T::T1_1, T::T1_2, T::T2_1, T::T2_2};
            return {T::T1_1, T::T2_1};
        case PropertyFamily::overlapped:
            if (!unbounded && prop.index == 1) return {T::T1_3, T::T2_2, T::T2_3};
            return {T::T2_3};
    }
    return {};
}

bool square_factor_check(const Word& w) {
    if (w.empty()) fail(ErrorCode::invalid_argument, "invalid argument: square check needs a nonempty word");
    if (is_special_word(w)) return is_factor(w + w);
    const FactorType t = classify(w).type;
    return t == FactorType::T1_2 || t == FactorType::T1_3;
}

}  // namespace fibgap
