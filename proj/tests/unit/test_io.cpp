#include <sstream>

#include "doctest.h"
#include "io.hpp"
#include "support.hpp"

using namespace artin;
using artin::io::json;
using testing::W;

TEST_SUITE("io") {
    TEST_CASE("element json") {
        const json j = io::element_json(to_canonical(W("xx", 3), GroupParams::make(3)));
        CHECK(j["central"] == 1);
        CHECK(j["syllables"].empty());
        CHECK(json::parse(to_json(to_canonical(W("Xy", 3), GroupParams::make(3)))) ==
              io::element_json(to_canonical(W("Xy", 3), GroupParams::make(3))));
    }

    TEST_CASE("classification json") {
        const auto g5 = GroupParams::make(5);
        const json j = io::classification_json(classify_geodesic(W("xyxy^-2xy^-2xy^3xy^-1xy^3", 5), g5));
        CHECK(j["type"] == "T30plusN");
        CHECK(j["tau1"] == 2);
        CHECK(j["tau2"] == 2);
        CHECK(j["blocks"].size() == 5);
        const json t = io::classification_json(classify_geodesic(W("xxx", 3), GroupParams::make(3)));
        CHECK(t["type"] == "T1");
        CHECK(t["tau1"].is_null());
        CHECK_FALSE(t.contains("blocks"));
    }

    TEST_CASE("automaton round trip") {
        for (int m : {3, 4}) {
            const Dfa d = build_conjgeo_dfa(GroupParams::make(m));
            const json j = io::dfa_json(d);
            CHECK(j["states"] == d.size());
            const Dfa e = io::dfa_from_json(json::parse(j.dump()));
            CHECK(isomorphic(d, e));
            CHECK(json::parse(dfa_to_json(d))["start"] == j["start"]);
        }
        try {
            io::dfa_from_json(json::parse(R"({"start":0})"));
            FAIL("expected BadJson");
        } catch (const Error& e) {
            CHECK(e.kind() == "BadJson");
        }
        CHECK_THROWS_AS(io::dfa_from_json(json::parse(R"({"alphabet":["x","X","y","Y"],"start":3,"accepting":[],"delta":[[0,0,0,0]]})")), Error);
    }

    TEST_CASE("numbers and errors") {
        CHECK(io::round15(0.1 + 0.2) == 0.3);
        CHECK(io::round15(0.0) == 0.0);
        const json e = io::error_json("NotGeodesic", "boom");
        CHECK(e["error"] == "NotGeodesic");
        std::ostringstream os;
        io::write_counts(os, std::vector<int>{1, 4, 12});
        CHECK(os.str() == "n,count\n0,1\n1,4\n2,12\n");
        const json r = io::root_json(smallest_positive_root(IntPolynomial::from({1, 0, -2})), IntPolynomial::from({1, 0, -2}));
        CHECK(r["value"].get<double>() == doctest::Approx(0.7071067811865476));
        CHECK(r["polynomial"] == "1 - 2z^2");
    }
}
