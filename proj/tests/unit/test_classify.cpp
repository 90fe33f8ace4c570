#include <algorithm>

#include "doctest.h"
#include "support.hpp"

using namespace artin;
using testing::W;

namespace {
std::string type_of(const std::string& w, int m) { return classify_geodesic(W(w, m), GroupParams::make(m)).gtype.name(); }
}  // namespace

TEST_SUITE("classify") {
    TEST_CASE("worked examples") {
        CHECK(type_of("xyxyxY", 3) == "T30plusU");
        CHECK(type_of("XyXYxy", 3) == "T30star");
        CHECK(type_of("xy^5xy^-3xy^2D^2", 4) == "T1");
        CHECK(type_of("xxx", 3) == "T1");
        CHECK(type_of("", 3) == "T3pm");
        CHECK(type_of("", 4) == "T3");
        const auto g = classify_geodesic(W("xyxy^-2xy^-2xy^3xYxy^3", 5), GroupParams::make(5));
        CHECK(g.gtype.name() == "T30plusN");
        REQUIRE(g.split);
        CHECK(g.split->tau1 == 2);
        CHECK(g.split->tau2 == 2);
        CHECK(g.split->specials == std::vector<Word>{W("y^-2", 5), W("y^-2", 5), W("y^3", 5), W("y^3", 5)});
        CHECK_THROWS_AS(classify_geodesic(W("xX", 3), GroupParams::make(3)), Error);
        CHECK_THROWS_AS(classify_geodesic(W("y^4", 3), GroupParams::make(3)), Error);
    }

    TEST_CASE("every short geodesic has exactly one type") {
        const auto words = testing::words_up_to(7);
        for (int m = 3; m <= 8; ++m) {
            const auto g = GroupParams::make(m);
            for (const Word& w : words) {
                if (!is_geodesic(w, g)) continue;
                int hits = 0;
                for (TypeTag t : tags_for(g)) hits += type_matches(t, w, g) ? 1 : 0;
                REQUIRE_MESSAGE(hits == 1, "m=" << m << " " << format_word(w));
                const GeodesicWord gw = classify_geodesic(w, g);
                REQUIRE(type_matches(gw.gtype.tag, w, g));
                REQUIRE(gw.split.has_value() == is_split_tag(gw.gtype.tag));
            }
        }
    }

    TEST_CASE("split views rebuild the word up to reordering the tuple") {
        const auto words = testing::words_up_to(7);
        for (int m = 3; m <= 8; ++m) {
            const auto g = GroupParams::make(m);
            for (const Word& w : words) {
                if (!is_freely_reduced(w) || !is_geodesic(w, g)) continue;
                const GeodesicWord gw = classify_geodesic(w, g);
                if (!gw.split) continue;
                const SplitView& v = *gw.split;
                REQUIRE(v.blocks.size() == v.specials.size() + 1);
                REQUIRE(static_cast<int>(v.specials.size()) == v.tau1 + v.tau2);
                Word rebuilt = v.blocks[0];
                for (std::size_t i = 0; i < v.specials.size(); ++i) {
                    rebuilt.insert(rebuilt.end(), v.specials[i].begin(), v.specials[i].end());
                    rebuilt.insert(rebuilt.end(), v.blocks[i + 1].begin(), v.blocks[i + 1].end());
                }
                // The tuple lists the first kind before the second; words in that order rebuild exactly,
                // others rebuild to an equal geodesic of the same type.
                REQUIRE_MESSAGE(elements_equal(rebuilt, w, g), "m=" << m << " " << format_word(w) << " -> " << format_word(rebuilt));
                REQUIRE(rebuilt.size() == w.size());
                REQUIRE(classify_geodesic(rebuilt, g).gtype == gw.gtype);
                Word in_order;
                for (const Run& r : runs_of(w)) {
                    const Word p = power_word(r.gen, r.exp);
                    if (std::find(v.specials.begin(), v.specials.end(), p) != v.specials.end()) in_order.insert(in_order.end(), p.begin(), p.end());
                }
                Word tuple;
                for (const Word& p : v.specials) tuple.insert(tuple.end(), p.begin(), p.end());
                if (in_order == tuple) REQUIRE(rebuilt == w);
            }
        }
    }

    TEST_CASE("odd Type 3 geodesics satisfy the exponent inequalities") {
        const auto words = testing::words_up_to(7);
        for (int m : {3, 5, 7, 9}) {
            const auto g = GroupParams::make(m);
            for (const Word& w : words) {
                if (!is_geodesic(w, g)) continue;
                const GeodesicWord gw = classify_geodesic(w, g);
                if (gw.central != 0) continue;
                const ExponentStats s = exponent_stats(w, g);
                REQUIRE(s.pos_x + s.neg_x <= 2);
                REQUIRE(s.pos_y + s.neg_y <= 2 * g.k + 1);
                REQUIRE(s.pos_x + s.neg_y <= g.k + 1);
                REQUIRE(s.pos_y + s.neg_x <= g.k + 1);
            }
        }
    }

    TEST_CASE("types with central part zero marked unique have one geodesic") {
        const auto words = testing::words_up_to(7);
        for (int m = 3; m <= 8; ++m) {
            const auto g = GroupParams::make(m);
            for (const Word& w : words) {
                if (!is_geodesic(w, g)) continue;
                const GeodesicWord gw = classify_geodesic(w, g);
                if (gw.central != 0) continue;
                const auto n = enumerate_geodesics(to_canonical(w, g), g).size();
                if (is_unique_tag(gw.gtype.tag)) REQUIRE_MESSAGE(n == 1, "m=" << m << " " << format_word(w));
            }
        }
    }
}
