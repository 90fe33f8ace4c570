#include "artin/geodesic.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace artin {

namespace {

constexpr std::int64_t kNoStep = std::numeric_limits<std::int64_t>::max();

// Each periodic syllable g^r may be written as g^(r + P n). The written length |r + P n|
// is convex in n, and every unit of n moves one Garside power into or out of the
// syllable. Only the first step away from the optimum can beat writing the Garside
// power on its own (cost px), so a greedy choice over single steps is exact.
struct Lift {
    std::int64_t n0 = 0;
    std::int64_t base = 0;
    std::int64_t up = kNoStep;
    std::int64_t down = kNoStep;
};

Lift lift_of(const Syllable& s, const GroupParams& g) {
    Lift l;
    const std::int64_t P = period(s.gen, g);
    if (P == 0) {
        l.base = s.exp < 0 ? -s.exp : s.exp;
        return l;
    }
    const std::int64_t r = s.exp;
    if (2 * r < P) {
        l.n0 = 0;
        l.base = r;
        l.up = P;
        l.down = P - 2 * r;
    } else if (2 * r > P) {
        l.n0 = -1;
        l.base = P - r;
        l.up = 2 * r - P;
        l.down = P;
    } else {
        l.n0 = -1;
        l.base = r;
        l.up = 0;
        l.down = P;
    }
    return l;
}

struct Plan {
    std::vector<std::int64_t> n;  // chosen lift per syllable (0 for unbounded syllables)
    std::int64_t rest = 0;        // Garside powers written separately
    std::int64_t length = 0;
};

Plan optimal_plan(const CanonicalElement& e, const GroupParams& g) {
    const std::size_t t = e.syllables.size();
    std::vector<Lift> lifts(t);
    Plan plan;
    plan.n.assign(t, 0);
    std::int64_t sum_n0 = 0;
    std::int64_t base = 0;
    for (std::size_t i = 0; i < t; ++i) {
        lifts[i] = lift_of(e.syllables[i], g);
        plan.n[i] = lifts[i].n0;
        sum_n0 += lifts[i].n0;
        base = checked_add(base, lifts[i].base);
    }
    std::int64_t D = checked_add(e.central, -sum_n0);
    const int dir = D > 0 ? 1 : -1;
    std::int64_t need = D < 0 ? checked_mul(D, -1) : D;

    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < t; ++i) {
        const std::int64_t c = dir > 0 ? lifts[i].up : lifts[i].down;
        if (c < g.px) order.push_back(i);
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const std::int64_t ca = dir > 0 ? lifts[a].up : lifts[a].down;
        const std::int64_t cb = dir > 0 ? lifts[b].up : lifts[b].down;
        return ca < cb;
    });
    std::int64_t cost = base;
    for (std::size_t i : order) {
        if (need == 0) break;
        plan.n[i] += dir;
        cost += dir > 0 ? lifts[i].up : lifts[i].down;
        --need;
    }
    plan.rest = dir * need;
    plan.length = checked_add(cost, checked_mul(g.px, need));
    return plan;
}

}  // namespace

std::int64_t geodesic_length(const CanonicalElement& e, const GroupParams& g) {
    return optimal_plan(e, g).length;
}

bool is_geodesic(const Word& w, const GroupParams& g) {
    return static_cast<std::int64_t>(w.size()) == geodesic_length(to_canonical(w, g), g);
}

Word geodesic_word(const CanonicalElement& e, const GroupParams& g) {
    const Plan plan = optimal_plan(e, g);
    Word w;
    for (std::size_t i = 0; i < e.syllables.size(); ++i) {
        const Syllable& s = e.syllables[i];
        const std::int64_t P = period(s.gen, g);
        append_power(w, s.gen, checked_add(s.exp, checked_mul(P, plan.n[i])));
    }
    append_power(w, 0, checked_mul(g.px, plan.rest));
    return free_reduce(w);
}

Word reduce_to_geodesic(const Word& w, const GroupParams& g) { return geodesic_word(to_canonical(w, g), g); }

Word lexmin_geodesic(const CanonicalElement& e, const GroupParams& g) {
    std::int64_t len = geodesic_length(e, g);
    if (len > static_cast<std::int64_t>(kMaxExpansion)) throw Error("TooLong", "geodesic too long to expand");
    Word w;
    CanonicalElement cur = e;
    while (len > 0) {
        bool stepped = false;
        for (Letter l : kLetters) {
            CanonicalElement next = left_multiply_letter(inverse(l), cur, g);
            if (geodesic_length(next, g) == len - 1) {
                w.push_back(l);
                cur = std::move(next);
                --len;
                stepped = true;
                break;
            }
        }
        if (!stepped) throw Error("Internal", "no geodesic step found");
    }
    return w;
}

namespace {

void enumerate_rec(const CanonicalElement& cur, std::int64_t len, Word& prefix, std::vector<Word>& out,
                   const GroupParams& g, const EnumerateLimits& limits) {
    if (len == 0) {
        if (out.size() >= limits.max_count)
            throw Error("CapExceeded", "more than " + std::to_string(limits.max_count) + " geodesics");
        out.push_back(prefix);
        return;
    }
    for (Letter l : kLetters) {
        if (!prefix.empty() && prefix.back() == inverse(l)) continue;
        CanonicalElement next = left_multiply_letter(inverse(l), cur, g);
        if (geodesic_length(next, g) != len - 1) continue;
        prefix.push_back(l);
        enumerate_rec(next, len - 1, prefix, out, g, limits);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Word> enumerate_geodesics(const CanonicalElement& e, const GroupParams& g, const EnumerateLimits& limits) {
    const std::int64_t len = geodesic_length(e, g);
    if (len > limits.max_length)
        throw Error("CapExceeded", "geodesic length " + std::to_string(len) + " exceeds cap " +
                                       std::to_string(limits.max_length));
    std::vector<Word> out;
    Word prefix;
    enumerate_rec(e, len, prefix, out, g, limits);
    return out;
}

Spelling spell(const Word& w, const GroupParams& g) {
    Spelling s;
    int carry_sign = 0;
    auto push_y = [&](std::int64_t b) {
        if (!s.runs.empty() && s.runs.back().gen == 1) {
            if ((s.runs.back().exp > 0) != (b > 0)) s.merges_agree = false;
            s.runs.back().exp += b;
            if (s.runs.back().exp == 0) s.runs.pop_back();
        } else {
            s.runs.push_back({1, b});
        }
    };
    for (const Run& r : runs_of(w)) {
        if (r.exp == 0) continue;
        if (r.gen == 1) {
            push_y(r.exp);
            continue;
        }
        const std::int64_t q = r.exp / g.px;
        const std::int64_t a = r.exp - q * g.px;
        if (q != 0) {
            const int sg = q > 0 ? 1 : -1;
            if (carry_sign != 0 && carry_sign != sg) s.uniform_carry = false;
            carry_sign = sg;
            s.central = checked_add(s.central, q);
        }
        if (a == 0) continue;
        if (!s.runs.empty() && s.runs.back().gen == 0) {
            // only possible after a cancelling y merge
            s.runs.back().exp += a;
            if (s.runs.back().exp == 0) s.runs.pop_back();
        } else {
            s.runs.push_back({0, a});
        }
    }
    return s;
}

ExponentStats exponent_stats(const Spelling& s) {
    ExponentStats st;
    for (const Run& r : s.runs) {
        if (r.gen == 0) {
            if (r.exp > 0) st.pos_x = std::max(st.pos_x, r.exp);
            else st.neg_x = std::max(st.neg_x, -r.exp);
        } else {
            if (r.exp > 0) st.pos_y = std::max(st.pos_y, r.exp);
            else st.neg_y = std::max(st.neg_y, -r.exp);
        }
    }
    return st;
}

ExponentStats exponent_stats(const Word& w, const GroupParams& g) { return exponent_stats(spell(w, g)); }

}  // namespace artin
