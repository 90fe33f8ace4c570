#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "artin/langtools.hpp"

namespace artin {

namespace {

// Streaming summary of a word, enough to decide membership in the geodesic language.
// The open y value is the spelled y-run that a following x-run may still extend.
struct Summary {
    bool dead = false;
    int last = -1;       // last letter, -1 for the empty word
    int xres = 0;        // |a| mod px for the current x-run
    bool xbig = false;   // |a| >= px for the current x-run
    int acc = 0;         // open spelled y value (odd m); its sign (even m)
    int qsign = 0;       // sign of the extracted Garside powers so far
    bool has_x = false, has_xi = false;  // odd m: spelled x and x^-1 runs
    int ymin = 0, ymax = 0;              // odd m: range of closed spelled y values
    bool has_y = false;
    int P = 0, N = 0;                    // even m: largest positive / negative x residues

    std::vector<int> key() const {
        if (dead) return {-1};
        return {last, xres, xbig, acc, qsign, has_x, has_xi, ymin, ymax, has_y, P, N};
    }
};

class GeoTracker {
public:
    explicit GeoTracker(const GroupParams& g) : g_(g), ybound_(g.k + 1) {}

    Summary step(Summary s, Letter l) const {
        if (s.dead) return s;
        const int li = static_cast<int>(l);
        if (s.last >= 0 && static_cast<Letter>(s.last) == inverse(l)) return kill(s);
        const bool same_run = s.last >= 0 && generator(static_cast<Letter>(s.last)) == generator(l);
        const int sg = sign(l);
        if (generator(l) == 0) {
            if (same_run) {
                s.xres = (s.xres + 1) % g_.px;
                if (s.xres == 0) {
                    s.xbig = true;
                    if (s.qsign == -sg) return kill(s);
                    s.qsign = sg;
                }
            } else {
                s.xres = 1 % g_.px;
                s.xbig = false;
            }
        } else {
            if (!same_run) {
                if (s.last >= 0) finish_x(s);
                if (s.dead) return s;
                if (s.acc != 0 && (s.acc > 0) != (sg > 0)) return kill(s);
            }
            if (g_.odd) {
                s.acc += sg;
                if (std::abs(s.acc) > ybound_) return kill(s);
            } else {
                s.acc = sg;
            }
        }
        s.last = li;
        return s;
    }

    bool accepts(Summary s) const {
        if (s.dead) return false;
        if (s.last >= 0 && generator(static_cast<Letter>(s.last)) == 0) finish_x(s);
        close_y(s);
        if (g_.odd) {
            const int k = g_.k;
            const int lo = s.has_y ? s.ymin : 0, hi = s.has_y ? s.ymax : 0;
            if (s.qsign > 0) return !s.has_xi && lo >= -(k - 1) && hi <= k + 1;
            if (s.qsign < 0) return !s.has_x && lo >= -(k + 1) && hi <= k - 1;
            if (hi == k + 1 && s.has_xi) return false;
            if (lo == -(k + 1) && s.has_x) return false;
            if (hi == k + 1 && lo == -(k + 1)) return false;
            return true;
        }
        if (s.qsign > 0) return s.N == 0;
        if (s.qsign < 0) return s.P == 0;
        return s.P + s.N <= g_.p;
    }

private:
    static Summary kill(Summary s) {
        s = Summary{};
        s.dead = true;
        return s;
    }

    void close_y(Summary& s) const {
        if (s.acc == 0) return;
        if (g_.odd) {
            s.ymin = s.has_y ? std::min(s.ymin, s.acc) : s.acc;
            s.ymax = s.has_y ? std::max(s.ymax, s.acc) : s.acc;
            s.has_y = true;
        }
        s.acc = 0;
    }

    // Called when the current x-run ends.
    void finish_x(Summary& s) const {
        if (generator(static_cast<Letter>(s.last)) != 0) return;
        const int sg = sign(static_cast<Letter>(s.last));
        if (s.xres != 0) {
            close_y(s);
            if (g_.odd) {
                (sg > 0 ? s.has_x : s.has_xi) = true;
            } else {
                int& slot = sg > 0 ? s.P : s.N;
                slot = std::max(slot, s.xres);
            }
        }
        s.xres = 0;
        s.xbig = false;
    }

    GroupParams g_;
    int ybound_;
};

Dfa trim_unreachable(const Dfa& d) {
    std::vector<int> id(static_cast<std::size_t>(d.size()), -1);
    std::vector<int> order{d.start};
    id[static_cast<std::size_t>(d.start)] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (Letter l : kLetters) {
            const int t = d.step(order[i], l);
            if (id[static_cast<std::size_t>(t)] < 0) {
                id[static_cast<std::size_t>(t)] = static_cast<int>(order.size());
                order.push_back(t);
            }
        }
    Dfa out;
    out.start = 0;
    for (int q : order) {
        out.accepting.push_back(d.accepting[static_cast<std::size_t>(q)]);
        std::array<int, 4> row{};
        for (Letter l : kLetters) row[static_cast<std::size_t>(l)] = id[static_cast<std::size_t>(d.step(q, l))];
        out.delta.push_back(row);
    }
    return out;
}

// Renumbers states in breadth-first order from the start state, letters in column order.
Dfa canonical_order(const Dfa& d) { return trim_unreachable(d); }

}  // namespace

Dfa minimize(const Dfa& d) {
    const Dfa r = trim_unreachable(d);
    const std::size_t n = static_cast<std::size_t>(r.size());
    std::vector<int> cls(n);
    for (std::size_t q = 0; q < n; ++q) cls[q] = r.accepting[q] ? 1 : 0;
    std::size_t classes = 0;
    for (;;) {
        std::map<std::array<int, 5>, int> sig;
        std::vector<int> next(n);
        for (std::size_t q = 0; q < n; ++q) {
            std::array<int, 5> s{cls[q], 0, 0, 0, 0};
            for (std::size_t a = 0; a < 4; ++a) s[a + 1] = cls[static_cast<std::size_t>(r.delta[q][a])];
            auto [it, inserted] = sig.emplace(s, static_cast<int>(sig.size()));
            next[q] = it->second;
        }
        cls = std::move(next);
        if (sig.size() == classes) break;
        classes = sig.size();
    }
    Dfa q;
    q.start = cls[static_cast<std::size_t>(r.start)];
    q.accepting.assign(classes, false);
    q.delta.assign(classes, {0, 0, 0, 0});
    for (std::size_t s = 0; s < n; ++s) {
        const auto c = static_cast<std::size_t>(cls[s]);
        q.accepting[c] = r.accepting[s];
        for (std::size_t a = 0; a < 4; ++a) q.delta[c][a] = cls[static_cast<std::size_t>(r.delta[s][a])];
    }
    return canonical_order(q);
}

bool isomorphic(const Dfa& a, const Dfa& b) {
    const Dfa x = minimize(a), y = minimize(b);
    return x.accepting == y.accepting && x.delta == y.delta;
}

Dfa complement(const Dfa& d) {
    Dfa c = d;
    c.accepting.flip();
    return c;
}

Dfa intersect(const Dfa& a, const Dfa& b) {
    std::map<std::pair<int, int>, int> id;
    std::vector<std::pair<int, int>> order{{a.start, b.start}};
    id[order[0]] = 0;
    Dfa out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const auto [p, q] = order[i];
        out.accepting.push_back(a.accepting[static_cast<std::size_t>(p)] && b.accepting[static_cast<std::size_t>(q)]);
        std::array<int, 4> row{};
        for (Letter l : kLetters) {
            const std::pair<int, int> t{a.step(p, l), b.step(q, l)};
            auto [it, inserted] = id.emplace(t, static_cast<int>(order.size()));
            if (inserted) order.push_back(t);
            row[static_cast<std::size_t>(l)] = it->second;
        }
        out.delta.push_back(row);
    }
    return out;
}

Dfa universal_dfa() { return Dfa{0, {true}, {{0, 0, 0, 0}}}; }
Dfa sink_dfa() { return Dfa{0, {false}, {{0, 0, 0, 0}}}; }

bool dfa_accepts(const Dfa& d, const Word& w) {
    int q = d.start;
    for (Letter l : w) q = d.step(q, l);
    return d.accepting[static_cast<std::size_t>(q)];
}

BigInt dfa_count(const Dfa& d, int n) {
    if (n < 0) throw Error("BadArgument", "length must be nonnegative");
    std::vector<BigInt> cur(static_cast<std::size_t>(d.size()));
    cur[static_cast<std::size_t>(d.start)] = 1;
    for (int i = 0; i < n; ++i) {
        std::vector<BigInt> next(cur.size());
        for (std::size_t q = 0; q < cur.size(); ++q) {
            if (cur[q] == 0) continue;
            for (std::size_t a = 0; a < 4; ++a) next[static_cast<std::size_t>(d.delta[q][a])] += cur[q];
        }
        cur = std::move(next);
    }
    BigInt total = 0;
    for (std::size_t q = 0; q < cur.size(); ++q)
        if (d.accepting[q]) total += cur[q];
    return total;
}

double dfa_growth_rate(const Dfa& d, int n, int window) {
    if (window <= 0 || n < window) throw Error("BadArgument", "need 0 < window <= n");
    const BigInt a = dfa_count(d, n), b = dfa_count(d, n - window);
    if (a == 0 || b == 0) return 0.0;
    // log of a ratio of huge integers, via their leading digits
    auto log_big = [](const BigInt& v) {
        const std::string s = v.str();
        const std::size_t keep = std::min<std::size_t>(s.size(), 17);
        return std::log(std::stod(s.substr(0, keep))) + static_cast<double>(s.size() - keep) * std::log(10.0);
    };
    return std::exp((log_big(a) - log_big(b)) / window);
}

Dfa build_geodesic_dfa(const GroupParams& g) {
    const GeoTracker tr(g);
    std::map<std::vector<int>, int> id;
    std::vector<Summary> states{Summary{}};
    id[states[0].key()] = 0;
    Dfa d;
    for (std::size_t i = 0; i < states.size(); ++i) {
        const Summary s = states[i];
        d.accepting.push_back(tr.accepts(s));
        std::array<int, 4> row{};
        for (Letter l : kLetters) {
            Summary t = tr.step(s, l);
            auto [it, inserted] = id.emplace(t.key(), static_cast<int>(states.size()));
            if (inserted) states.push_back(t);
            row[static_cast<std::size_t>(l)] = it->second;
        }
        d.delta.push_back(row);
    }
    return minimize(d);
}

Dfa build_conjgeo_dfa(const GroupParams& g) {
    // w is accepted when every cyclic permutation vu of w = uv is geodesic. A state holds
    // the transformation f_w induced on the geodesic automaton, and for every split point
    // seen so far the state q reached by reading v, paired with the set f_u^-1(accepting)
    // in which q must end. Splits that reach the same q are merged by intersecting sets.
    const Dfa geo = build_geodesic_dfa(g);
    const std::size_t n = static_cast<std::size_t>(geo.size());
    using Set = std::vector<bool>;
    struct State {
        std::vector<int> f;
        std::map<int, Set> need;  // q -> allowed final states
    };
    auto key = [n](const State& s) {
        std::vector<int> k(s.f);
        for (const auto& [q, a] : s.need) {
            k.push_back(q);
            for (std::size_t i = 0; i < n; ++i) k.push_back(a[i] ? 1 : 0);
        }
        return k;
    };
    auto accepting = [&](const State& s) {
        if (s.need.empty()) return static_cast<bool>(geo.accepting[static_cast<std::size_t>(geo.start)]);
        for (const auto& [q, a] : s.need)
            if (!a[static_cast<std::size_t>(q)]) return false;
        return true;
    };
    State init;
    init.f.resize(n);
    for (std::size_t q = 0; q < n; ++q) init.f[q] = static_cast<int>(q);

    std::map<std::vector<int>, int> id;
    std::vector<State> states{init};
    id[key(init)] = 0;
    Dfa d;
    for (std::size_t i = 0; i < states.size(); ++i) {
        const State s = states[i];
        d.accepting.push_back(accepting(s));
        // a new split point before the next letter: u = w, v starts empty
        State base = s;
        Set pre(n);
        for (std::size_t q = 0; q < n; ++q) pre[q] = geo.accepting[static_cast<std::size_t>(s.f[q])];
        auto [it0, fresh] = base.need.emplace(geo.start, pre);
        if (!fresh)
            for (std::size_t q = 0; q < n; ++q) it0->second[q] = it0->second[q] && pre[q];
        std::array<int, 4> row{};
        for (Letter l : kLetters) {
            State t;
            t.f.resize(n);
            for (std::size_t q = 0; q < n; ++q) t.f[q] = geo.step(s.f[q], l);
            for (const auto& [q, a] : base.need) {
                auto [it, ins] = t.need.emplace(geo.step(q, l), a);
                if (!ins)
                    for (std::size_t r = 0; r < n; ++r) it->second[r] = it->second[r] && a[r];
            }
            // a split whose set can no longer be met makes the whole state a sink
            bool doomed = false;
            for (const auto& [q, a] : t.need) doomed = doomed || std::none_of(a.begin(), a.end(), [](bool b) { return b; });
            if (doomed) {
                t.f.assign(n, 0);
                t.need.clear();
                t.need.emplace(0, Set(n, false));
            }
            auto [it, inserted] = id.emplace(key(t), static_cast<int>(states.size()));
            if (inserted) states.push_back(std::move(t));
            row[static_cast<std::size_t>(l)] = it->second;
        }
        d.delta.push_back(row);
    }
    return minimize(d);
}

std::string dfa_to_dot(const Dfa& d, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n  rankdir=LR;\n  init [shape=point];\n";
    for (int q = 0; q < d.size(); ++q)
        os << "  q" << q << " [shape=" << (d.accepting[static_cast<std::size_t>(q)] ? "doublecircle" : "circle")
           << "];\n";
    os << "  init -> q" << d.start << ";\n";
    for (int q = 0; q < d.size(); ++q) {
        // group letters sharing a target into one edge
        std::map<int, std::string> edges;
        for (Letter l : kLetters) {
            std::string& lab = edges[d.step(q, l)];
            if (!lab.empty()) lab += ",";
            lab += letter_char(l);
        }
        for (const auto& [t, lab] : edges) os << "  q" << q << " -> q" << t << " [label=\"" << lab << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string dfa_to_json(const Dfa& d) {
    std::ostringstream os;
    os << "{\"alphabet\":[\"x\",\"X\",\"y\",\"Y\"],\"start\":" << d.start << ",\"accepting\":[";
    bool first = true;
    for (int q = 0; q < d.size(); ++q) {
        if (!d.accepting[static_cast<std::size_t>(q)]) continue;
        os << (first ? "" : ",") << q;
        first = false;
    }
    os << "],\"delta\":[";
    for (int q = 0; q < d.size(); ++q) {
        const auto& r = d.delta[static_cast<std::size_t>(q)];
        os << (q ? "," : "") << "[" << r[0] << "," << r[1] << "," << r[2] << "," << r[3] << "]";
    }
    os << "]}";
    return os.str();
}

}  // namespace artin
