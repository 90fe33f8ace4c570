#include "selftest.hpp"

#include <map>
#include <ostream>
#include <sstream>

#include "artin/artin.hpp"
#include "oracle.hpp"

namespace artin::cli {

namespace {

std::vector<Word> words_up_to(int n) {
    std::vector<Word> out{Word{}};
    std::size_t lo = 0;
    for (int len = 1; len <= n; ++len) {
        const std::size_t hi = out.size();
        for (std::size_t i = lo; i < hi; ++i)
            for (Letter l : kLetters) {
                Word w = out[i];
                w.push_back(l);
                out.push_back(std::move(w));
            }
        lo = hi;
    }
    return out;
}

bool word_problem(const GroupParams& g, const std::vector<Word>& words) {
    const oracle::GarsideOracle o(g.m);
    std::unordered_map<CanonicalElement, oracle::ArtinForm, CanonicalHash> fwd;
    std::unordered_map<oracle::ArtinForm, CanonicalElement, oracle::ArtinFormHash> back;
    for (const Word& w : words) {
        const CanonicalElement e = to_canonical(w, g);
        const oracle::ArtinForm f = o.normal_form(w);
        if (!(fwd.emplace(e, f).first->second == f)) return false;
        if (!(back.emplace(f, e).first->second == e)) return false;
    }
    return true;
}

bool lengths(const GroupParams& g, int radius) {
    const oracle::Ball ball(g.m, radius);
    for (int d = 0; d <= radius; ++d)
        for (const Word& w : ball.spheres()[static_cast<std::size_t>(d)])
            if (geodesic_length(to_canonical(w, g), g) != d) return false;
    return true;
}

bool conjugacy(const GroupParams& g, const std::vector<Word>& words) {
    for (const Word& u : words)
        for (const Word& v : words)
            if (is_conjugate(u, v, g) != brute_force_conjugate(u, v, g, default_brute_radius(u, v, g))) return false;
    return true;
}

bool automaton(const GroupParams& g, const std::vector<Word>& words) {
    const Dfa d = build_conjgeo_dfa(g);
    for (const Word& w : words) {
        const bool expect = is_geodesic(w, g) && static_cast<std::int64_t>(w.size()) == conjugacy_length(w, g);
        if (dfa_accepts(d, w) != expect) return false;
    }
    return true;
}

}  // namespace

bool run_selftest(const std::string& m_list, std::ostream& out) {
    std::vector<int> ms;
    std::stringstream ss(m_list);
    for (std::string item; std::getline(ss, item, ',');) {
        try {
            ms.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw Error("BadArgument", "bad value of m: '" + item + "'");
        }
    }
    const std::vector<Word> w4 = words_up_to(4), w3 = words_up_to(3), w6 = words_up_to(6);
    bool all = true;
    for (int m : ms) {
        const GroupParams g = GroupParams::make(m);
        const std::pair<const char*, bool> checks[] = {
            {"word problem, words of length <= 4", word_problem(g, w4)},
            {"geodesic length, ball of radius 6", lengths(g, 6)},
            {"conjugacy, pairs of length <= 3", conjugacy(g, w3)},
            {"conjugacy geodesic automaton, words of length <= 6", automaton(g, w6)},
        };
        for (const auto& [name, ok] : checks) {
            out << (ok ? "ok   " : "FAIL ") << "m=" << m << "  " << name << '\n';
            all = all && ok;
        }
    }
    return all;
}

}  // namespace artin::cli
