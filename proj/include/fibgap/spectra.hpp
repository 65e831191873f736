#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>

#include "fibgap/kernel.hpp"
#include "fibgap/word.hpp"

namespace fibgap {

enum class GammaSet { a, b, aa, ab };

bool gamma_member(std::uint64_t p, GammaSet g);

enum class PropertyFamily { power, separated, overlapped };

/// P_i, S_i or O_i; index 0 stands for infinity (S_inf, O_inf).
struct PropertyId {
    PropertyFamily family;
    unsigned index;

    bool infinite() const noexcept { return index == 0; }
    friend bool operator==(const PropertyId&, const PropertyId&) = default;
};

/// "P1", "S3", "Sinf", "O2", "Oinf", ...
PropertyId parse_property(std::string_view text);
std::string to_string(const PropertyId& prop);

/// Whether the p-th occurrence of w has the property. Classified words use
/// the closed-form spectra; ab, ba and aba are answered from observed gaps.
/// For S_inf and O_inf p is ignored.
bool in_spectrum(const Word& w, std::uint64_t p, const PropertyId& prop);

/// Factor types that carry the property for at least one occurrence.
std::set<FactorType> local_spectrum(const PropertyId& prop);

/// Whether w w is a factor of the Fibonacci word.
bool square_factor_check(const Word& w);

}  // namespace fibgap
