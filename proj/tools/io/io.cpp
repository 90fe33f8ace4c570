#include "io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace artin::io {

double round15(double v) {
    if (!std::isfinite(v)) return v;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return std::strtod(buf, nullptr);
}

namespace {

json number(double v) {
    if (!std::isfinite(v)) return nullptr;
    return round15(v);
}

json runs_json(const std::vector<Run>& runs) {
    json a = json::array();
    for (const Run& r : runs) a.push_back({r.gen == 0 ? "x" : "y", r.exp});
    return a;
}

json words_json(const std::vector<Word>& ws) {
    json a = json::array();
    for (const Word& w : ws) a.push_back(format_word(w));
    return a;
}

json doubles(const std::vector<double>& v) {
    json a = json::array();
    for (double d : v) a.push_back(number(d));
    return a;
}

}  // namespace

json element_json(const CanonicalElement& e) {
    json s = json::array();
    for (const Syllable& y : e.syllables) s.push_back({y.gen == 0 ? "x" : "y", y.exp});
    return {{"syllables", s}, {"central", e.central}};
}

json classification_json(const GeodesicWord& w) {
    json j{{"word", format_word(w.word)},
           {"type", w.gtype.name()},
           {"unique", is_unique_tag(w.gtype.tag)},
           {"syllables", runs_json(w.syllables)},
           {"central", w.central},
           {"tau1", nullptr},
           {"tau2", nullptr},
           {"j", nullptr}};
    if (w.gtype.j != 0) j["j"] = w.gtype.j;
    if (w.split) {
        j["tau1"] = w.split->tau1;
        j["tau2"] = w.split->tau2;
        if (w.split->j != 0) j["j"] = w.split->j;
        j["blocks"] = words_json(w.split->blocks);
        j["specials"] = words_json(w.split->specials);
    }
    return j;
}

json conj_key_json(const ConjKey& k) {
    json s = json::array();
    for (const Syllable& y : k.syllables) s.push_back({y.gen == 0 ? "x" : "y", y.exp});
    return {{"rep", format_word(k.rep)}, {"length", k.length}, {"central", k.central}, {"tuple", s}};
}

json pcl_json(const PclResult& r) {
    return {{"pcl", r.length},
            {"conjugator", format_word(r.conjugator)},
            {"u_rotation", format_word(r.u_rotation)},
            {"v_rotation", format_word(r.v_rotation)}};
}

json fftp_json(const FftpReport& r) {
    return {{"m", r.m},
            {"max_len", r.max_len},
            {"observed_constant", r.observed_constant},
            {"bound", r.bound},
            {"words_checked", r.words_checked},
            {"non_geodesic", r.non_geodesic},
            {"failures", r.failures},
            {"worst_word", format_word(r.worst_word)},
            {"worst_partner", format_word(r.worst_partner)},
            {"ok", r.ok()}};
}

json asymptotics_json(const AsymptoticsReport& r) {
    json j{{"m", r.params.m},
           {"N", r.N},
           {"c", r.c},
           {"s", r.s},
           {"ratio", doubles(r.ratio)},
           {"n_ratio", doubles(r.n_ratio)},
           {"c_rate", doubles(r.c_rate)},
           {"s_rate", doubles(r.s_rate)},
           {"series_root", nullptr},
           {"regime", r.regime},
           {"window_band_ratio", number(r.window_band_ratio)},
           {"regime_supported", r.regime_supported}};
    if (r.series_root) {
        j["series_root"] = number(*r.series_root);
        j["series_rate"] = number(1.0 / *r.series_root);
    }
    return j;
}

json root_json(const RootResult& r, const IntPolynomial& poly) {
    return {{"polynomial", poly.to_string()},
            {"value", number(r.value)},
            {"lo", number(r.lo)},
            {"hi", number(r.hi)},
            {"tolerance", number(r.tolerance)},
            {"growth_rate", number(1.0 / r.value)}};
}

json error_json(const std::string& kind, const std::string& message) {
    return {{"error", kind}, {"message", message}};
}

json dfa_json(const Dfa& d) {
    json acc = json::array();
    for (int q = 0; q < d.size(); ++q)
        if (d.accepting[static_cast<std::size_t>(q)]) acc.push_back(q);
    json delta = json::array();
    for (const auto& row : d.delta) delta.push_back(row);
    return {{"alphabet", {"x", "X", "y", "Y"}}, {"states", d.size()}, {"start", d.start}, {"accepting", acc}, {"delta", delta}};
}

Dfa dfa_from_json(const json& j) {
    try {
        Dfa d;
        const auto& delta = j.at("delta");
        const int n = static_cast<int>(delta.size());
        if (n == 0) throw Error("BadJson", "automaton has no states");
        if (j.contains("alphabet") && j.at("alphabet") != json({"x", "X", "y", "Y"}))
            throw Error("BadJson", "unsupported alphabet");
        d.start = j.at("start").get<int>();
        d.accepting.assign(static_cast<std::size_t>(n), false);
        auto check = [n](int q) {
            if (q < 0 || q >= n) throw Error("BadJson", "state " + std::to_string(q) + " out of range");
            return q;
        };
        check(d.start);
        for (const auto& q : j.at("accepting")) d.accepting[static_cast<std::size_t>(check(q.get<int>()))] = true;
        for (const auto& row : delta) {
            if (row.size() != 4) throw Error("BadJson", "each state needs four transitions");
            std::array<int, 4> r{};
            for (std::size_t a = 0; a < 4; ++a) r[a] = check(row[a].get<int>());
            d.delta.push_back(r);
        }
        return d;
    } catch (const json::exception& e) {
        throw Error("BadJson", e.what());
    }
}

}  // namespace artin::io
