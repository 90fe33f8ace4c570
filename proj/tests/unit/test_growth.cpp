#include <cmath>

#include "doctest.h"
#include "oracle.hpp"
#include "support.hpp"

using namespace artin;

namespace {

// Oracle values from breadth-first search over Garside normal forms, frozen.
const std::vector<std::uint64_t> kSpheres3 = {1, 4, 12, 22, 40, 66, 106, 168, 258, 400, 600, 920, 1358, 2070, 3020};
const std::vector<std::uint64_t> kSpheres4 = {1, 4, 12, 30, 70, 158, 350, 766, 1662, 3582, 7678, 16382};
const std::vector<std::uint64_t> kSpheres5 = {1, 4, 12, 30, 62, 130, 256, 506, 976, 1880, 3580};
const std::vector<std::uint64_t> kSpheres6 = {1, 4, 12, 36, 100, 272, 732, 1952, 5172, 13640, 35820};
const std::vector<std::uint64_t> kClasses3 = {1, 4, 8, 6, 15, 10, 26, 14, 46};
const std::vector<std::uint64_t> kClasses4 = {1, 4, 8, 12, 25, 32, 67, 92, 187};
const std::vector<std::uint64_t> kClasses5 = {1, 4, 8, 12, 19, 22, 45, 50, 102};
const std::vector<std::uint64_t> kClasses6 = {1, 4, 8, 12, 26, 50, 104, 216, 486};

std::vector<long long> to_ll(const std::vector<BigInt>& v) {
    std::vector<long long> out;
    for (const BigInt& b : v) out.push_back(b.convert_to<long long>());
    return out;
}

}  // namespace

TEST_SUITE("growth") {
    TEST_CASE("sphere sizes") {
        CHECK(sphere_sizes(GroupParams::make(3), 14).s == kSpheres3);
        CHECK(sphere_sizes(GroupParams::make(4), 11).s == kSpheres4);
        CHECK(sphere_sizes(GroupParams::make(5), 10).s == kSpheres5);
        CHECK(sphere_sizes(GroupParams::make(6), 10).s == kSpheres6);
        for (int m = 3; m <= 7; ++m) CHECK(sphere_sizes(GroupParams::make(m), 6).s == oracle::Ball(m, 6).sphere_sizes());
    }

    TEST_CASE("conjugacy class counts") {
        CHECK(conj_class_counts(GroupParams::make(3), 8).s == kClasses3);
        CHECK(conj_class_counts(GroupParams::make(4), 8).s == kClasses4);
        CHECK(conj_class_counts(GroupParams::make(5), 8).s == kClasses5);
        CHECK(conj_class_counts(GroupParams::make(6), 8).s == kClasses6);
        CHECK(conj_class_counts(GroupParams::make(7), 6).s == oracle::class_counts(7, 6, 10));
        const GrowthTables t = growth_tables(GroupParams::make(4), 8);
        CHECK(t.spheres.s == std::vector<std::uint64_t>(kSpheres4.begin(), kSpheres4.begin() + 9));
        CHECK(t.classes.s == kClasses4);
    }

    TEST_CASE("caps") {
        CHECK_THROWS_AS(sphere_sizes(GroupParams::make(3), 15), Error);
        CHECK_NOTHROW(sphere_sizes(GroupParams::make(3), 15, 15));
        try {
            conj_class_counts(GroupParams::make(3), 20);
        } catch (const Error& e) {
            CHECK(e.kind() == "CapExceeded");
        }
    }

    TEST_CASE("denominator polynomials") {
        CHECK(denominator_polynomial(Family::q_odd, 1) == IntPolynomial::from({1, 0, -2}));
        CHECK(denominator_polynomial(Family::q_odd, 2) == IntPolynomial::from({1, 0, -2, -2}));
        CHECK(denominator_polynomial(Family::p_odd, 1) == IntPolynomial::from({1, 0, -1, -1}));
        CHECK(denominator_polynomial(Family::p_odd, 2) == IntPolynomial::from({1, 0, -2, -1, -1}));
        CHECK(denominator_polynomial(Family::p1_even, 1) == IntPolynomial::from({1, -1, -2}));
        CHECK(denominator_polynomial(Family::p3_even, 2) == IntPolynomial::from({1, -1, -4}));
        CHECK(denominator_polynomial(Family::p_j_even, 1, 1) == IntPolynomial::from({1, -1, -2}));
        CHECK(denominator_polynomial(Family::p_j_even, 2, 2) == IntPolynomial::from({1, -1, -4, -2}));
        CHECK(denominator_polynomial(Family::p_j_even, 2, 3) == IntPolynomial::from({1, -1, -2, -2, -2}));
        CHECK(denominator_polynomial(Family::q_even_suffix, 2, 2) == IntPolynomial::from({1, -1, -4, -2}));
        CHECK(denominator_polynomial(Family::q_odd, 1).to_string() == "1 - 2z^2");
        CHECK_THROWS_AS(denominator_polynomial(Family::p_j_even, 2), Error);
        CHECK_THROWS_AS(denominator_polynomial(Family::p_j_even, 2, 4), Error);
        CHECK_THROWS_AS(denominator_polynomial(Family::q_odd, GroupParams::make(4)), Error);
        CHECK_THROWS_AS(denominator_polynomial(Family::p1_even, GroupParams::make(6)), Error);
        CHECK(parse_family("q") == Family::q_odd);
        CHECK_THROWS_AS(parse_family("zz"), Error);
    }

    TEST_CASE("series coefficients") {
        CHECK(to_ll(series_coeffs(IntPolynomial::from({1, -1}), IntPolynomial::from({1}), 5)) ==
              std::vector<long long>{1, 1, 1, 1, 1, 1});
        CHECK(to_ll(series_coeffs(denominator_polynomial(Family::q_odd, 1), IntPolynomial::from({1}), 6)) ==
              std::vector<long long>{1, 0, 2, 0, 4, 0, 8});
        CHECK(to_ll(series_coeffs(IntPolynomial::from({1, -1, -1}), IntPolynomial::from({1}), 7)) ==
              std::vector<long long>{1, 1, 2, 3, 5, 8, 13, 21});
        CHECK_THROWS_AS(series_coeffs(IntPolynomial::from({0, 1}), IntPolynomial::from({1}), 3), Error);
        CHECK_THROWS_AS(series_coeffs(IntPolynomial::from({2, 1}), IntPolynomial::from({1}), 3), Error);
        const auto big = series_coeffs(IntPolynomial::from({1, -2}), IntPolynomial::from({1}), 100);
        CHECK(big[100] == BigInt(1) << 100);
    }

    TEST_CASE("1/q counts alternating words with bounded y exponents") {
        // Coefficient n of 1/q_k counts words (x^+-1 y^b)^r with 1 <= |b| <= k, of length n.
        for (int k = 1; k <= 4; ++k) {
            const int N = 20;
            std::vector<BigInt> count(N + 1);
            count[0] = 1;
            for (int n = 1; n <= N; ++n)
                for (int b = 1; b <= k && b + 1 <= n; ++b) count[n] += 2 * count[n - b - 1];
            CHECK(series_coeffs(denominator_polynomial(Family::q_odd, k), IntPolynomial::from({1}), N) == count);
        }
    }

    TEST_CASE("smallest positive roots") {
        const RootResult r = smallest_positive_root(denominator_polynomial(Family::q_odd, 1));
        CHECK(r.value == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
        CHECK(r.lo <= r.value);
        CHECK(r.value <= r.hi);
        CHECK(r.tolerance <= 1e-12);
        const RootResult f = smallest_positive_root(IntPolynomial::from({1, -1, -1}));
        CHECK(f.value == doctest::Approx((std::sqrt(5.0) - 1) / 2).epsilon(1e-12));
        CHECK_THROWS_AS(smallest_positive_root(IntPolynomial::from({1, 1})), Error);
        // larger k gives more words per length, so a smaller radius of convergence
        for (int k = 1; k < 6; ++k) {
            CHECK(smallest_positive_root(denominator_polynomial(Family::q_odd, k + 1)).value <
                  smallest_positive_root(denominator_polynomial(Family::q_odd, k)).value);
            CHECK(smallest_positive_root(denominator_polynomial(Family::p_odd, k)).value >
                  smallest_positive_root(denominator_polynomial(Family::q_odd, k)).value);
        }
    }

    TEST_CASE("even root orderings") {
        for (int k = 2; k <= 6; ++k) {
            const double p1 = smallest_positive_root(denominator_polynomial(Family::p1_even, k)).value;
            const double p3 = smallest_positive_root(denominator_polynomial(Family::p3_even, k)).value;
            CHECK(p3 < p1);
            const double pk = smallest_positive_root(denominator_polynomial(Family::p_j_even, k, k)).value;
            for (int j = k; j <= 2 * k - 1; ++j)
                CHECK(pk <= smallest_positive_root(denominator_polynomial(Family::p_j_even, k, j)).value + 1e-15);
        }
    }

    TEST_CASE("band ratio") {
        CHECK(band_ratio({1.0, 2.0, 4.0}, 1, 2) == doctest::Approx(2.0));
        CHECK(std::isinf(band_ratio({0.0, 2.0}, 0, 1)));
    }

    TEST_CASE("asymptotics for m divisible by four and m = 6") {
        const AsymptoticsReport r4 = asymptotics_report(GroupParams::make(4), 14);
        CHECK(r4.regime == "c ~ s");
        CHECK(r4.regime_supported);
        REQUIRE(r4.series_root);
        CHECK(*r4.series_root == doctest::Approx(0.5));
        const AsymptoticsReport r6 = asymptotics_report(GroupParams::make(6), 11);
        CHECK(r6.regime == "c ~ s/n");
        CHECK(r6.regime_supported);
        CHECK(r6.ratio.size() == 12);
        CHECK(r6.s_rate.size() == 11);
    }
}
