#include "artin/conjugacy.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace artin {

CanonicalElement cyclic_core(const CanonicalElement& e, const GroupParams& g) {
    CanonicalElement cur = e;
    while (cur.syllables.size() >= 2 && cur.syllables.front().gen == cur.syllables.back().gen) {
        const Syllable s = cur.syllables.front();
        CanonicalElement next;
        next.central = cur.central;
        next.syllables.assign(cur.syllables.begin() + 1, cur.syllables.end());
        multiply_power(next, s.gen, s.exp, g);
        cur = std::move(next);
    }
    return cur;
}

Word cyclically_reduce(const Word& w, const GroupParams&) {
    Word cur = free_reduce(w);
    for (;;) {
        const std::vector<Run> runs = runs_of(cur);
        if (runs.size() <= 1 || runs.front().gen != runs.back().gen) break;
        const std::size_t len = static_cast<std::size_t>(runs.front().exp < 0 ? -runs.front().exp : runs.front().exp);
        Word next(cur.begin() + static_cast<std::ptrdiff_t>(len), cur.end());
        next.insert(next.end(), cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(len));
        cur = free_reduce(next);
    }
    return cur;
}

std::vector<Word> cyclic_permutations(const Word& w) {
    std::vector<Word> out;
    std::set<Word> seen;
    const std::size_t n = w.size();
    if (n == 0) return {Word{}};
    for (std::size_t i = 0; i < n; ++i) {
        Word r(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
        r.insert(r.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        if (seen.insert(r).second) out.push_back(std::move(r));
    }
    return out;
}

std::vector<Word> split_cyclic_permutations(const GeodesicWord& w, const GroupParams& g) {
    if (!w.split) throw Error("NoSplitView", "type " + w.gtype.name() + " has no split view");
    const SplitView& v = *w.split;
    const std::size_t tau = v.specials.size();
    if (tau == 0) return cyclic_permutations(w.word);

    // C[i] is the block that follows the i-th special power when the word is read cyclically.
    std::vector<Word> C(tau);
    for (std::size_t i = 0; i + 1 < tau; ++i) C[i] = v.blocks[i + 1];
    C[tau - 1] = v.blocks[tau];
    C[tau - 1].insert(C[tau - 1].end(), v.blocks[0].begin(), v.blocks[0].end());

    std::vector<Word> out;
    std::set<Word> seen;
    for (std::size_t r = 0; r < tau; ++r) {
        const Word& wrap = C[(tau - 1 + r) % tau];
        for (std::size_t cut = 0; cut <= wrap.size(); ++cut) {
            Word cand(wrap.begin() + static_cast<std::ptrdiff_t>(cut), wrap.end());
            for (std::size_t i = 0; i < tau; ++i) {
                cand.insert(cand.end(), v.specials[i].begin(), v.specials[i].end());
                if (i + 1 < tau) {
                    const Word& blk = C[(i + r) % tau];
                    cand.insert(cand.end(), blk.begin(), blk.end());
                }
            }
            cand.insert(cand.end(), wrap.begin(), wrap.begin() + static_cast<std::ptrdiff_t>(cut));
            if (!is_freely_reduced(cand) || !is_geodesic(cand, g)) continue;
            if (seen.insert(cand).second) out.push_back(std::move(cand));
        }
    }
    return out;
}

std::size_t ConjKeyHash::operator()(const ConjKey& k) const noexcept {
    CanonicalElement e{k.syllables, k.central};
    return CanonicalHash{}(e);
}

CanonicalElement class_element(const CanonicalElement& e, const GroupParams& g) {
    CanonicalElement core = cyclic_core(e, g);
    const std::size_t n = core.syllables.size();
    std::vector<Syllable> best = core.syllables;
    for (std::size_t i = 1; i < n; ++i) {
        std::vector<Syllable> rot;
        rot.reserve(n);
        for (std::size_t j = 0; j < n; ++j) rot.push_back(core.syllables[(i + j) % n]);
        if (rot < best) best = std::move(rot);
    }
    core.syllables = std::move(best);
    return core;
}

ConjKey conj_key(const CanonicalElement& e, const GroupParams& g) {
    const CanonicalElement core = cyclic_core(e, g);
    const std::size_t n = core.syllables.size();
    ConjKey key;
    key.central = core.central;
    key.length = geodesic_length(core, g);
    key.syllables = core.syllables;
    bool have_rep = false;
    for (std::size_t i = 0; i < std::max<std::size_t>(n, 1); ++i) {
        CanonicalElement rot;
        rot.central = core.central;
        for (std::size_t j = 0; j < n; ++j) rot.syllables.push_back(core.syllables[(i + j) % n]);
        if (rot.syllables < key.syllables) key.syllables = rot.syllables;
        Word rep = lexmin_geodesic(rot, g);
        if (!have_rep || rep < key.rep) {
            key.rep = std::move(rep);
            have_rep = true;
        }
    }
    return key;
}

ConjKey conj_representative(const Word& w, const GroupParams& g) { return conj_key(to_canonical(w, g), g); }

bool is_conjugate(const Word& u, const Word& v, const GroupParams& g) {
    return class_element(to_canonical(u, g), g) == class_element(to_canonical(v, g), g);
}

std::int64_t conjugacy_length(const CanonicalElement& e, const GroupParams& g) {
    return geodesic_length(cyclic_core(e, g), g);
}

std::int64_t conjugacy_length(const Word& w, const GroupParams& g) { return conjugacy_length(to_canonical(w, g), g); }

bool is_conjugacy_geodesic(const Word& w, const GroupParams& g) {
    const CanonicalElement e = to_canonical(w, g);
    const auto n = static_cast<std::int64_t>(w.size());
    return n == geodesic_length(e, g) && n == conjugacy_length(e, g);
}

std::unordered_map<CanonicalElement, int, CanonicalHash> conjugates_within(const CanonicalElement& e,
                                                                           const GroupParams& g, int radius) {
    if (radius < 0 || radius > kMaxBruteRadius)
        throw Error("CapExceeded", "conjugator radius " + std::to_string(radius) + " outside [0, " +
                                       std::to_string(kMaxBruteRadius) + "]");
    std::unordered_map<CanonicalElement, int, CanonicalHash> depth;
    depth.emplace(e, 0);
    std::vector<CanonicalElement> frontier{e};
    for (int d = 1; d <= radius && !frontier.empty(); ++d) {
        std::vector<CanonicalElement> next;
        for (const CanonicalElement& z : frontier) {
            for (Letter l : kLetters) {
                CanonicalElement c = left_multiply_letter(inverse(l), z, g);
                multiply_letter(c, l, g);
                if (depth.emplace(c, d).second) {
                    next.push_back(std::move(c));
                    if (depth.size() > kMaxBruteStates)
                        throw Error("CapExceeded", "conjugate search exceeded " + std::to_string(kMaxBruteStates) + " states");
                }
            }
        }
        frontier = std::move(next);
    }
    return depth;
}

int default_brute_radius(const Word& u, const Word& v, const GroupParams& g) {
    return static_cast<int>(u.size() + v.size()) + 2 * g.delta_len;
}

bool brute_force_conjugate(const Word& u, const Word& v, const GroupParams& g, int radius) {
    // t = t1 t2 with |t1| <= ceil(R/2), |t2| <= floor(R/2): t1^-1 u t1 = t2 v t2^-1.
    const auto left = conjugates_within(to_canonical(u, g), g, (radius + 1) / 2);
    const auto right = conjugates_within(to_canonical(v, g), g, radius / 2);
    const auto& small = left.size() <= right.size() ? left : right;
    const auto& large = left.size() <= right.size() ? right : left;
    for (const auto& kv : small)
        if (large.count(kv.first)) return true;
    return false;
}

PclResult pcl(const Word& u, const Word& v, const GroupParams& g, int max_radius) {
    if (!is_geodesic(u, g)) throw Error("NotGeodesic", "word " + format_word(u) + " is not geodesic");
    if (!is_geodesic(v, g)) throw Error("NotGeodesic", "word " + format_word(v) + " is not geodesic");
    if (!is_conjugate(u, v, g))
        throw Error("NotConjugate", format_word(u) + " and " + format_word(v) + " are not conjugate");

    std::unordered_map<CanonicalElement, Word, CanonicalHash> targets;
    for (const Word& r : cyclic_permutations(v)) targets.emplace(to_canonical(r, g), r);
    std::vector<std::pair<CanonicalElement, Word>> sources;
    for (const Word& r : cyclic_permutations(u)) sources.emplace_back(to_canonical(r, g), r);

    // Sphere-by-sphere search over conjugators t, each represented by a geodesic word.
    std::unordered_set<CanonicalElement, CanonicalHash> seen;
    std::vector<std::pair<CanonicalElement, Word>> sphere{{CanonicalElement{}, Word{}}};
    seen.insert(CanonicalElement{});
    for (int r = 0; r <= max_radius; ++r) {
        for (const auto& [t, tw] : sphere) {
            const CanonicalElement tinv = canonical_invert(t, g);
            for (const auto& [s, sw] : sources) {
                const CanonicalElement c = canonical_multiply(canonical_multiply(t, s, g), tinv, g);
                auto it = targets.find(c);
                if (it != targets.end()) return PclResult{r, tw, sw, it->second};
            }
        }
        std::vector<std::pair<CanonicalElement, Word>> next;
        for (const auto& [t, tw] : sphere) {
            for (Letter l : kLetters) {
                CanonicalElement n = t;
                multiply_letter(n, l, g);
                if (!seen.insert(n).second) continue;
                Word nw = tw;
                nw.push_back(l);
                next.emplace_back(std::move(n), std::move(nw));
            }
        }
        sphere = std::move(next);
    }
    throw Error("CapExceeded", "no permutation conjugator within radius " + std::to_string(max_radius));
}

}  // namespace artin
