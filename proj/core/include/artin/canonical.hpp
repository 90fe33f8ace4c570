#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "artin/words.hpp"

namespace artin {

struct Syllable {
    int gen;           // 0 = x, 1 = y
    std::int64_t exp;  // residue in the canonical range for gen
    bool operator==(const Syllable&) const = default;
    auto operator<=>(const Syllable&) const = default;
};

// Free-product normal form of the image modulo the centre, plus the exponent of the
// Garside element. Syllables alternate in generator.
struct CanonicalElement {
    std::vector<Syllable> syllables;
    std::int64_t central = 0;
    bool operator==(const CanonicalElement&) const = default;
};

struct CanonicalHash {
    std::size_t operator()(const CanonicalElement& e) const noexcept;
};

// Period of gen in the quotient by the centre; 0 when the generator has infinite order there.
int period(int gen, const GroupParams& g) noexcept;

// Right-multiplies e by gen^exp in place.
void multiply_power(CanonicalElement& e, int gen, std::int64_t exp, const GroupParams& g);
void multiply_letter(CanonicalElement& e, Letter l, const GroupParams& g);
// Left-multiplies e by the letter l. Costs O(length of e).
CanonicalElement left_multiply_letter(Letter l, const CanonicalElement& e, const GroupParams& g);

CanonicalElement to_canonical(const Word& w, const GroupParams& g);
CanonicalElement canonical_multiply(const CanonicalElement& a, const CanonicalElement& b, const GroupParams& g);
CanonicalElement canonical_invert(const CanonicalElement& a, const GroupParams& g);
bool elements_equal(const Word& u, const Word& v, const GroupParams& g);

// Syllables followed by the Garside power written as x^(px*c).
Word canonical_word(const CanonicalElement& e, const GroupParams& g);
bool is_valid(const CanonicalElement& e, const GroupParams& g);

std::string to_json(const CanonicalElement& e);

}  // namespace artin
