#include <algorithm>

#include "artin/geodesic.hpp"

namespace artin {

const std::vector<TypeTag>& tags_for(const GroupParams& g) {
    static const std::vector<TypeTag> odd = {TypeTag::T1,       TypeTag::T2,        TypeTag::T3plus,    TypeTag::T3minus,
                                             TypeTag::T3pm,     TypeTag::T30plusU,  TypeTag::T30plusN,  TypeTag::T30minusU,
                                             TypeTag::T30minusN, TypeTag::T30star};
    static const std::vector<TypeTag> even = {TypeTag::T1, TypeTag::T2a, TypeTag::T2b, TypeTag::T3};
    return g.odd ? odd : even;
}

std::string tag_name(TypeTag t) {
    switch (t) {
        case TypeTag::T1: return "T1";
        case TypeTag::T2: return "T2";
        case TypeTag::T3plus: return "T3plus";
        case TypeTag::T3minus: return "T3minus";
        case TypeTag::T3pm: return "T3pm";
        case TypeTag::T30plusU: return "T30plusU";
        case TypeTag::T30plusN: return "T30plusN";
        case TypeTag::T30minusU: return "T30minusU";
        case TypeTag::T30minusN: return "T30minusN";
        case TypeTag::T30star: return "T30star";
        case TypeTag::T2a: return "T2a";
        case TypeTag::T2b: return "T2b";
        case TypeTag::T3: return "T3";
    }
    return "?";
}

bool is_split_tag(TypeTag t) {
    return t == TypeTag::T30plusN || t == TypeTag::T30minusN || t == TypeTag::T30star || t == TypeTag::T2b;
}

bool is_unique_tag(TypeTag t) { return !is_split_tag(t); }

std::string GeodesicType::name() const {
    if (tag == TypeTag::T2a || tag == TypeTag::T2b) return tag_name(tag) + "(" + std::to_string(j) + ")";
    return tag_name(tag);
}

namespace {

struct Summary {
    std::int64_t c = 0;
    bool has_x = false, has_xi = false;
    std::int64_t x_runs = 0;
    std::int64_t y_min = 0, y_max = 0;  // over y-runs; 0 when there are none
    std::int64_t y_runs = 0;
    ExponentStats st;
    std::vector<Run> runs;
};

Summary summarize(const Word& w, const GroupParams& g) {
    const Spelling s = spell(w, g);
    Summary m;
    m.c = s.central;
    m.runs = s.runs;
    m.st = exponent_stats(s);
    bool first_y = true;
    for (const Run& r : s.runs) {
        if (r.gen == 0) {
            ++m.x_runs;
            if (r.exp > 0) m.has_x = true;
            else m.has_xi = true;
        } else {
            ++m.y_runs;
            if (first_y) {
                m.y_min = m.y_max = r.exp;
                first_y = false;
            } else {
                m.y_min = std::min(m.y_min, r.exp);
                m.y_max = std::max(m.y_max, r.exp);
            }
        }
    }
    return m;
}

bool has_y(const Summary& m, std::int64_t b) {
    return std::any_of(m.runs.begin(), m.runs.end(), [&](const Run& r) { return r.gen == 1 && r.exp == b; });
}

std::int64_t count_x(const Summary& m, std::int64_t a) {
    return std::count_if(m.runs.begin(), m.runs.end(), [&](const Run& r) { return r.gen == 0 && r.exp == a; });
}

bool y_in(const Summary& m, std::int64_t lo, std::int64_t hi) {
    return m.y_runs == 0 || (m.y_min >= lo && m.y_max <= hi);
}

bool odd_match(TypeTag t, const Summary& s, int k) {
    const bool pm_shape = s.x_runs == 0 && s.y_runs <= 1 && y_in(s, -(k - 1), k - 1);
    switch (t) {
        case TypeTag::T1: return s.c > 0 && !s.has_xi && y_in(s, -(k - 1), k + 1);
        case TypeTag::T2: return s.c < 0 && !s.has_x && y_in(s, -(k + 1), k - 1);
        case TypeTag::T3pm: return s.c == 0 && pm_shape;
        case TypeTag::T3plus: return s.c == 0 && !pm_shape && !s.has_xi && y_in(s, -(k - 1), k + 1);
        case TypeTag::T3minus: return s.c == 0 && !pm_shape && !s.has_x && y_in(s, -(k + 1), k - 1);
        case TypeTag::T30plusU:
            return s.c == 0 && s.has_x && !s.has_xi && y_in(s, -k, k) && has_y(s, -k);
        case TypeTag::T30plusN:
            return s.c == 0 && s.has_x && !s.has_xi && y_in(s, -k, k + 1) && has_y(s, -k) && has_y(s, k + 1);
        case TypeTag::T30minusU:
            return s.c == 0 && s.has_xi && !s.has_x && y_in(s, -k, k) && has_y(s, k);
        case TypeTag::T30minusN:
            return s.c == 0 && s.has_xi && !s.has_x && y_in(s, -(k + 1), k) && has_y(s, k) && has_y(s, -(k + 1));
        case TypeTag::T30star: return s.c == 0 && s.has_x && s.has_xi && y_in(s, -k, k);
        default: return false;
    }
}

// Orientation and parameter of a Type 2 word: + when Pos_x >= Neg_x.
struct EvenTwo {
    int orient = 1;
    int j = 0;
    std::int64_t first = 0, second = 0;  // exponents of the two special powers, in tuple order
    std::int64_t n_first = 0, n_second = 0;
};

EvenTwo even_two(const Summary& s, const GroupParams& g) {
    EvenTwo e;
    if (s.st.pos_x >= s.st.neg_x) {
        e.orient = 1;
        e.j = static_cast<int>(s.st.pos_x);
        e.first = e.j;
        e.second = -(g.p - e.j);
    } else {
        e.orient = -1;
        e.j = static_cast<int>(s.st.neg_x);
        e.first = g.p - e.j;
        e.second = -e.j;
    }
    e.n_first = count_x(s, e.first);
    e.n_second = count_x(s, e.second);
    return e;
}

bool even_match(TypeTag t, const Summary& s, const GroupParams& g, int* j_out) {
    const std::int64_t P = s.st.pos_x, N = s.st.neg_x;
    if (g.p == 2) {
        switch (t) {
            case TypeTag::T1:
                if (s.c > 0) return N == 0;
                if (s.c < 0) return P == 0;
                return (P > 0) != (N > 0);
            case TypeTag::T2b:
                if (j_out) *j_out = 1;
                return s.c == 0 && P > 0 && N > 0;
            case TypeTag::T3: return s.c == 0 && P == 0 && N == 0;
            default: return false;
        }
    }
    const std::int64_t half = (g.p - 1) / 2;
    switch (t) {
        case TypeTag::T1:
            if (s.c > 0) return N == 0;
            if (s.c < 0) return P == 0;
            return false;
        case TypeTag::T3: return s.c == 0 && P <= half && N <= half;
        case TypeTag::T2a:
        case TypeTag::T2b: {
            if (s.c != 0 || P + N > g.p || std::max(P, N) <= half) return false;
            const EvenTwo e = even_two(s, g);
            if (j_out) *j_out = e.j;
            const bool both = e.n_first > 0 && e.n_second > 0;
            return t == TypeTag::T2b ? both : !both;
        }
        default: return false;
    }
}

bool match_summary(TypeTag t, const Summary& s, const GroupParams& g, int* j_out) {
    return g.odd ? odd_match(t, s, g.k) : even_match(t, s, g, j_out);
}

// Splits a c = 0 word at the runs flagged special; blocks are the words between them.
SplitView split_at(const std::vector<Run>& runs, const std::vector<bool>& special, const Word& first_kind,
                   const Word& second_kind, int n_first) {
    SplitView v;
    v.blocks.emplace_back();
    int count = 0;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (special[i]) {
            v.specials.push_back(count < n_first ? first_kind : second_kind);
            ++count;
            v.blocks.emplace_back();
        } else {
            append_power(v.blocks.back(), runs[i].gen, runs[i].exp);
        }
    }
    v.tau1 = n_first;
    v.tau2 = count - n_first;
    return v;
}

SplitView make_split(TypeTag t, const Summary& s, const GroupParams& g) {
    const int k = g.k;
    std::vector<bool> special(s.runs.size(), false);
    std::int64_t a = 0, b = 0;
    int gen = 1;
    int j = 0;
    switch (t) {
        case TypeTag::T30plusN: a = -k; b = k + 1; break;
        case TypeTag::T30minusN: a = -(k + 1); b = k; break;
        case TypeTag::T30star: a = -1; b = 1; gen = 0; break;
        case TypeTag::T2b: {
            const EvenTwo e = even_two(s, g);
            a = e.first;
            b = e.second;
            gen = 0;
            j = e.j;
            break;
        }
        default: break;
    }
    int n_first = 0;
    for (std::size_t i = 0; i < s.runs.size(); ++i) {
        if (s.runs[i].gen != gen) continue;
        if (s.runs[i].exp == a) ++n_first;
        if (s.runs[i].exp == a || s.runs[i].exp == b) special[i] = true;
    }
    SplitView v = split_at(s.runs, special, power_word(gen, a), power_word(gen, b), n_first);
    v.j = j;
    return v;
}

}  // namespace

bool type_matches(TypeTag t, const Word& w, const GroupParams& g) {
    return match_summary(t, summarize(w, g), g, nullptr);
}

GeodesicWord classify_geodesic(const Word& w, const GroupParams& g) {
    if (!is_geodesic(w, g)) throw Error("NotGeodesic", "word " + format_word(w) + " is not geodesic");
    const Summary s = summarize(w, g);
    GeodesicWord out;
    out.word = w;
    out.syllables = s.runs;
    out.central = s.c;
    bool found = false;
    for (TypeTag t : tags_for(g)) {
        int j = 0;
        if (!match_summary(t, s, g, &j)) continue;
        out.gtype.tag = t;
        out.gtype.j = (t == TypeTag::T2a || t == TypeTag::T2b) ? j : 0;
        found = true;
        break;
    }
    if (!found) throw Error("Internal", "geodesic " + format_word(w) + " matches no type");
    if (is_split_tag(out.gtype.tag)) out.split = make_split(out.gtype.tag, s, g);
    return out;
}

}  // namespace artin
