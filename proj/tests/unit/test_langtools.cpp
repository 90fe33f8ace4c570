#include <cmath>

#include "doctest.h"
#include "support.hpp"

using namespace artin;
using testing::W;

TEST_SUITE("langtools") {
    TEST_CASE("geodesic automaton recognises geodesics") {
        const auto words = testing::words_up_to(7);
        for (int m = 3; m <= 10; ++m) {
            const auto g = GroupParams::make(m);
            const Dfa d = build_geodesic_dfa(g);
            for (const Word& w : words) REQUIRE_MESSAGE(dfa_accepts(d, w) == is_geodesic(w, g), "m=" << m << " " << format_word(w));
        }
    }

    TEST_CASE("conjugacy geodesic automaton") {
        const auto words = testing::words_up_to(7);
        for (int m = 3; m <= 10; ++m) {
            const auto g = GroupParams::make(m);
            const Dfa d = build_conjgeo_dfa(g);
            for (const Word& w : words)
                REQUIRE_MESSAGE(dfa_accepts(d, w) == is_conjugacy_geodesic(w, g), "m=" << m << " " << format_word(w));
            CHECK(isomorphic(minimize(intersect(d, build_geodesic_dfa(g))), d));
        }
        CHECK(dfa_accepts(build_conjgeo_dfa(GroupParams::make(3)), W("xyxyxY", 3)));
        CHECK_FALSE(dfa_accepts(build_conjgeo_dfa(GroupParams::make(3)), W("yxY", 3)));
        CHECK(dfa_accepts(build_conjgeo_dfa(GroupParams::make(3)), W("yy", 3)));
        CHECK_FALSE(dfa_accepts(build_conjgeo_dfa(GroupParams::make(3)), W("yyyy", 3)));
    }

    TEST_CASE("automaton sizes") {
        const int geo[] = {42, 27, 72, 54};
        const int conj[] = {152, 83, 420, 238};
        for (int m = 3; m <= 6; ++m) {
            CHECK(build_geodesic_dfa(GroupParams::make(m)).size() == geo[m - 3]);
            CHECK(build_conjgeo_dfa(GroupParams::make(m)).size() == conj[m - 3]);
        }
    }

    TEST_CASE("counts match enumeration") {
        for (int m : {3, 4, 5, 6}) {
            const auto g = GroupParams::make(m);
            const Dfa geo = build_geodesic_dfa(g), conj = build_conjgeo_dfa(g);
            for (int n = 0; n <= 6; ++n) {
                std::uint64_t a = 0, b = 0;
                for (const Word& w : testing::words_of_length(n)) {
                    a += is_geodesic(w, g) ? 1 : 0;
                    b += is_conjugacy_geodesic(w, g) ? 1 : 0;
                }
                CHECK(dfa_count(geo, n) == a);
                CHECK(dfa_count(conj, n) == b);
            }
        }
    }

    TEST_CASE("automaton operations") {
        const Dfa u = universal_dfa(), s = sink_dfa();
        for (int n = 0; n <= 40; n += 8) {
            CHECK(dfa_count(u, n) == BigInt(1) << (2 * n));
            CHECK(dfa_count(s, n) == 0);
        }
        CHECK(isomorphic(minimize(complement(u)), minimize(s)));
        CHECK(dfa_growth_rate(u) == doctest::Approx(4.0));
        const auto g = GroupParams::make(4);
        const Dfa d = build_conjgeo_dfa(g);
        CHECK(isomorphic(minimize(d), d));
        CHECK_FALSE(isomorphic(d, build_geodesic_dfa(g)));
        const Dfa c = complement(d);
        for (const Word& w : testing::words_up_to(5)) CHECK(dfa_accepts(c, w) != dfa_accepts(d, w));
        CHECK(isomorphic(minimize(intersect(d, c)), minimize(s)));
        CHECK(dfa_growth_rate(d) == doctest::Approx((1 + std::sqrt(17.0)) / 2).epsilon(1e-3));
    }

    TEST_CASE("dot output") {
        const std::string dot = dfa_to_dot(build_conjgeo_dfa(GroupParams::make(3)));
        CHECK(dot.find("digraph conjgeo") != std::string::npos);
        CHECK(dot.find("doublecircle") != std::string::npos);
    }

    TEST_CASE("fellow travelling") {
        const auto g5 = GroupParams::make(5);
        CHECK(fellow_travel_distance(W("y^4", 5), W("y^4", 5), g5) == 0);
        const auto d = fellow_travel_distance(W("y^4", 5), W("xxY", 5), g5);
        CHECK(d >= 1);
        CHECK(d <= 6);
        CHECK(d == fellow_travel_distance(W("xxY", 5), W("y^4", 5), g5));
        std::mt19937 rng(3);
        for (int m = 3; m <= 8; ++m) {
            const auto g = GroupParams::make(m);
            for (int t = 0; t < 60; ++t) {
                const Word w = testing::random_word(rng, 8);
                const FftpWitness wit = fftp_witness(w, g, 2LL * m + 12);
                if (is_geodesic(w, g)) {
                    REQUIRE(wit.distance == -1);
                    continue;
                }
                REQUIRE(wit.distance >= 1);
                REQUIRE(wit.shorter.size() < w.size());
                REQUIRE(elements_equal(wit.shorter, w, g));
                REQUIRE(fellow_travel_distance(w, wit.shorter, g) <= wit.distance);
                if (wit.distance > 1) REQUIRE(fftp_witness(w, g, wit.distance - 1).distance == -1);
            }
        }
    }

    TEST_CASE("fellow traveller check") {
        const FftpReport r = fftp_check(GroupParams::make(3), 5);
        CHECK(r.ok());
        CHECK(r.words_checked == 1 + 4 + 16 + 64 + 256 + 1024);
        CHECK(r.failures == 0);
        CHECK(r.observed_constant <= r.bound);
        CHECK(r.bound == 11);
        CHECK(fftp_bound(GroupParams::make(4), 8) == 10);
        try {
            fftp_check(GroupParams::make(3), 9);
            FAIL("expected CapExceeded");
        } catch (const Error& e) {
            CHECK(e.kind() == "CapExceeded");
        }
    }
}
