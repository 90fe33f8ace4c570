#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "artin/canonical.hpp"
#include "artin/geodesic.hpp"
#include "artin/words.hpp"

namespace artin {

// Conjugates e by leading syllables until its first and last syllables have different
// generators (or at most one syllable is left). The central exponent is preserved by
// every later rotation of the result.
CanonicalElement cyclic_core(const CanonicalElement& e, const GroupParams& g);

// Word-level cyclic reduction: cancels and merges first/last runs by conjugation.
Word cyclically_reduce(const Word& w, const GroupParams& g);

std::vector<Word> cyclic_permutations(const Word& w);

// Throws Error("NoSplitView") unless w carries a split view.
std::vector<Word> split_cyclic_permutations(const GeodesicWord& w, const GroupParams& g);

struct ConjKey {
    Word rep;                          // least conjugacy geodesic over the rotations of the core
    std::int64_t length = 0;           // conjugacy length
    std::int64_t central = 0;          // Garside exponent of the class
    std::vector<Syllable> syllables;   // least rotation of the core syllables
    bool operator==(const ConjKey& o) const { return central == o.central && syllables == o.syllables; }
};

struct ConjKeyHash {
    std::size_t operator()(const ConjKey& k) const noexcept;
};

// The least rotation of the cyclic core: one fixed element of the conjugacy class.
CanonicalElement class_element(const CanonicalElement& e, const GroupParams& g);

ConjKey conj_representative(const Word& w, const GroupParams& g);
ConjKey conj_key(const CanonicalElement& e, const GroupParams& g);
bool is_conjugate(const Word& u, const Word& v, const GroupParams& g);
std::int64_t conjugacy_length(const Word& w, const GroupParams& g);
std::int64_t conjugacy_length(const CanonicalElement& e, const GroupParams& g);
bool is_conjugacy_geodesic(const Word& w, const GroupParams& g);

inline constexpr int kMaxBruteRadius = 24;
inline constexpr std::size_t kMaxBruteStates = 4000000;

// Every t^-1 e t with |t| <= radius, mapped to the least such |t|.
std::unordered_map<CanonicalElement, int, CanonicalHash> conjugates_within(const CanonicalElement& e,
                                                                           const GroupParams& g, int radius);
// Searches for t with |t| <= radius and t^-1 u t = v (meet in the middle over
// conjugates by words). Throws Error("CapExceeded") past the configured limits.
bool brute_force_conjugate(const Word& u, const Word& v, const GroupParams& g, int radius);
int default_brute_radius(const Word& u, const Word& v, const GroupParams& g);

struct PclResult {
    std::int64_t length = 0;
    Word conjugator;
    Word u_rotation;
    Word v_rotation;
};

// Least |t| with t u' t^-1 = v' over cyclic permutations u', v'. Throws NotGeodesic,
// NotConjugate or CapExceeded (beyond max_radius).
PclResult pcl(const Word& u, const Word& v, const GroupParams& g, int max_radius = 6);

}  // namespace artin
