#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "artin/growth.hpp"
#include "artin/words.hpp"

namespace artin {

// Complete deterministic automaton over the letters x, X, y, Y (in that column order).
struct Dfa {
    int start = 0;
    std::vector<bool> accepting;
    std::vector<std::array<int, 4>> delta;

    int size() const { return static_cast<int>(delta.size()); }
    int step(int q, Letter l) const { return delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(l)]; }
};

Dfa minimize(const Dfa& d);
bool isomorphic(const Dfa& a, const Dfa& b);
Dfa complement(const Dfa& d);
Dfa intersect(const Dfa& a, const Dfa& b);
Dfa universal_dfa();
Dfa sink_dfa();

bool dfa_accepts(const Dfa& d, const Word& w);
BigInt dfa_count(const Dfa& d, int n);
// Exponential growth rate of the accepted language, from (N(n)/N(n-window))^(1/window).
double dfa_growth_rate(const Dfa& d, int n = 600, int window = 60);

// Words that are geodesic, built from the streaming form of the geodesic conditions.
Dfa build_geodesic_dfa(const GroupParams& g);
// Words all of whose cyclic permutations are geodesic.
Dfa build_conjgeo_dfa(const GroupParams& g);

std::string dfa_to_dot(const Dfa& d, const std::string& name = "conjgeo");
std::string dfa_to_json(const Dfa& d);

// ---- fellow travelling ---------------------------------------------------------------

std::int64_t fellow_travel_distance(const Word& u, const Word& v, const GroupParams& g);

struct FftpWitness {
    std::int64_t distance = 0;
    Word shorter;
};
// Least D such that some strictly shorter word equal to w D-fellow travels with w.
// Searches D = 1 .. max_d; returns distance -1 if none was found.
FftpWitness fftp_witness(const Word& w, const GroupParams& g, std::int64_t max_d);

struct FftpReport {
    int m = 0;
    int max_len = 0;
    std::int64_t observed_constant = 0;
    std::int64_t bound = 0;
    std::uint64_t words_checked = 0;
    std::uint64_t non_geodesic = 0;
    std::uint64_t failures = 0;     // non-geodesic words with no witness within the bound
    Word worst_word;
    Word worst_partner;
    bool ok() const { return failures == 0 && observed_constant <= bound; }
};

inline constexpr int kDefaultFftpCap = 8;

// Constant from the reductions: 2k+9 for odd m; for even m the largest per-rule
// constant that words of length max_len can reach.
std::int64_t fftp_bound(const GroupParams& g, int max_len);
FftpReport fftp_check(const GroupParams& g, int max_len, int cap = kDefaultFftpCap);

}  // namespace artin
