#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "artin/canonical.hpp"
#include "artin/words.hpp"

namespace artin {

// ---- length and geodesic representatives -------------------------------------------

std::int64_t geodesic_length(const CanonicalElement& e, const GroupParams& g);
bool is_geodesic(const Word& w, const GroupParams& g);

// A geodesic for e: each syllable written with an optimal lift, leftover Garside
// powers appended on the right and merged into a trailing x-run.
Word geodesic_word(const CanonicalElement& e, const GroupParams& g);
Word reduce_to_geodesic(const Word& w, const GroupParams& g);
// Lexicographically least geodesic for e (letter order x < X < y < Y).
Word lexmin_geodesic(const CanonicalElement& e, const GroupParams& g);

struct EnumerateLimits {
    std::int64_t max_length = 24;
    std::size_t max_count = 200000;
};
// All geodesic words for e, sorted lexicographically. Throws Error("CapExceeded").
std::vector<Word> enumerate_geodesics(const CanonicalElement& e, const GroupParams& g,
                                      const EnumerateLimits& limits = {});

// ---- normalized spelling ---------------------------------------------------------------

// A word rewritten by pulling every full x^px out of each literal x-run into the
// central exponent (truncation toward zero) and merging the y-runs this brings together.
struct Spelling {
    std::vector<Run> runs;       // alternating, nonzero exponents
    std::int64_t central = 0;
    bool uniform_carry = true;   // all extracted powers share one sign
    bool merges_agree = true;    // every merge joined y-runs of the same sign
};
Spelling spell(const Word& w, const GroupParams& g);

struct ExponentStats {
    std::int64_t pos_x = 0, neg_x = 0, pos_y = 0, neg_y = 0;
    bool operator==(const ExponentStats&) const = default;
};
ExponentStats exponent_stats(const Spelling& s);
ExponentStats exponent_stats(const Word& w, const GroupParams& g);

// ---- classification ---------------------------------------------------------------------

enum class TypeTag {
    T1,
    T2,
    T3plus,
    T3minus,
    T3pm,
    T30plusU,
    T30plusN,
    T30minusU,
    T30minusN,
    T30star,
    T2a,
    T2b,
    T3,
};

const std::vector<TypeTag>& tags_for(const GroupParams& g);
std::string tag_name(TypeTag t);
bool is_split_tag(TypeTag t);
// Unique-geodesic types per the classification tables.
bool is_unique_tag(TypeTag t);

struct GeodesicType {
    TypeTag tag = TypeTag::T1;
    int j = 0;  // Type 2 parameter (even m), 0 otherwise
    std::string name() const;
    bool operator==(const GeodesicType&) const = default;
};

struct SplitView {
    std::vector<Word> blocks;    // A_1 ... A_{tau+1}
    std::vector<Word> specials;  // the fixed tuple, in order
    int tau1 = 0;
    int tau2 = 0;
    int j = 0;
};

struct GeodesicWord {
    Word word;
    GeodesicType gtype;
    std::vector<Run> syllables;  // normalized x/y exponents
    std::int64_t central = 0;
    std::optional<SplitView> split;
};

// Throws Error("NotGeodesic") when w is not geodesic.
GeodesicWord classify_geodesic(const Word& w, const GroupParams& g);
// Raw membership test of a geodesic word in one type; used to check exclusivity.
bool type_matches(TypeTag t, const Word& w, const GroupParams& g);

}  // namespace artin
