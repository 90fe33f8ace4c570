#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "artin/words.hpp"

namespace artin {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kDefaultGrowthCap = 14;

enum class CountKind { elements, classes };

struct SphereCounts {
    std::vector<std::uint64_t> s;
    CountKind kind = CountKind::elements;
    GroupParams params;
};

// Both sequences come from one breadth-first enumeration of the ball of radius N.
struct GrowthTables {
    SphereCounts spheres;
    SphereCounts classes;
};

SphereCounts sphere_sizes(const GroupParams& g, int N, int cap = kDefaultGrowthCap);
SphereCounts conj_class_counts(const GroupParams& g, int N, int cap = kDefaultGrowthCap);
GrowthTables growth_tables(const GroupParams& g, int N, int cap = kDefaultGrowthCap);

struct IntPolynomial {
    std::vector<BigInt> coeffs;  // ascending degree, no trailing zeros
    static IntPolynomial from(std::vector<long long> c);
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    double eval(double z) const;
    std::string to_string() const;
    bool operator==(const IntPolynomial&) const = default;
};

enum class Family { p_odd, q_odd, p1_even, p3_even, p_j_even, q_even_suffix };
Family parse_family(const std::string& name);
std::string family_name(Family f);

// Families are parametrised by k: odd families by m = 2k+1, even ones by p = 2k.
IntPolynomial denominator_polynomial(Family f, int k, std::optional<int> j = std::nullopt);
IntPolynomial denominator_polynomial(Family f, const GroupParams& g, std::optional<int> j = std::nullopt);

std::vector<BigInt> series_coeffs(const IntPolynomial& den, const IntPolynomial& num, int N);

struct RootResult {
    double value = 0;
    double tolerance = 0;
    double lo = 0, hi = 0;
};
RootResult smallest_positive_root(const IntPolynomial& poly, double tol = 1e-12);

struct AsymptoticsReport {
    GroupParams params;
    int N = 0;
    std::vector<std::uint64_t> c, s;
    std::vector<double> ratio, n_ratio;           // c/s and n*c/s
    std::vector<double> c_rate, s_rate;           // c(n+1)/c(n), s(n+1)/s(n)
    std::optional<double> series_root;            // root of q (odd) or p_k (even, p = 2k)
    std::string regime;                           // "c ~ s" or "c ~ s/n"
    double window_band_ratio = 0;                 // max/min over the last 7 values of the regime ratio
    bool regime_supported = false;
};
AsymptoticsReport asymptotics_report(const GroupParams& g, int N, int cap = kDefaultGrowthCap);

// max/min of v[lo..hi]; infinity if any entry is non-positive.
double band_ratio(const std::vector<double>& v, int lo, int hi);

}  // namespace artin
