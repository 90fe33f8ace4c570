#include "artin/canonical.hpp"

namespace artin {

std::size_t CanonicalHash::operator()(const CanonicalElement& e) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(e.central);
    for (const Syllable& s : e.syllables) {
        std::uint64_t v = (static_cast<std::uint64_t>(s.exp) << 1) ^ static_cast<std::uint64_t>(s.gen);
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

int period(int gen, const GroupParams& g) noexcept { return gen == 0 ? g.px : g.py; }

void multiply_power(CanonicalElement& e, int gen, std::int64_t exp, const GroupParams& g) {
    if (exp == 0) return;
    auto& syl = e.syllables;
    if (!syl.empty() && syl.back().gen == gen) {
        exp = checked_add(exp, syl.back().exp);
        syl.pop_back();
    }
    const int P = period(gen, g);
    if (P != 0) {
        e.central = checked_add(e.central, floor_div(exp, P));
        exp = floor_mod(exp, P);
    }
    // The stack alternates, so a removed syllable never exposes a same-generator neighbour.
    if (exp != 0) syl.push_back({gen, exp});
}

void multiply_letter(CanonicalElement& e, Letter l, const GroupParams& g) {
    multiply_power(e, generator(l), sign(l), g);
}

CanonicalElement left_multiply_letter(Letter l, const CanonicalElement& e, const GroupParams& g) {
    CanonicalElement r;
    r.central = e.central;
    multiply_letter(r, l, g);
    for (const Syllable& s : e.syllables) multiply_power(r, s.gen, s.exp, g);
    return r;
}

CanonicalElement to_canonical(const Word& w, const GroupParams& g) {
    CanonicalElement e;
    for (const Run& r : runs_of(w)) multiply_power(e, r.gen, r.exp, g);
    return e;
}

CanonicalElement canonical_multiply(const CanonicalElement& a, const CanonicalElement& b, const GroupParams& g) {
    CanonicalElement r = a;
    r.central = checked_add(r.central, b.central);
    for (const Syllable& s : b.syllables) multiply_power(r, s.gen, s.exp, g);
    return r;
}

CanonicalElement canonical_invert(const CanonicalElement& a, const GroupParams& g) {
    CanonicalElement r;
    r.central = a.central == 0 ? 0 : checked_mul(a.central, -1);
    for (auto it = a.syllables.rbegin(); it != a.syllables.rend(); ++it)
        multiply_power(r, it->gen, checked_mul(it->exp, -1), g);
    return r;
}

bool elements_equal(const Word& u, const Word& v, const GroupParams& g) {
    return to_canonical(u, g) == to_canonical(v, g);
}

Word canonical_word(const CanonicalElement& e, const GroupParams& g) {
    Word w;
    for (const Syllable& s : e.syllables) append_power(w, s.gen, s.exp);
    append_power(w, 0, checked_mul(g.px, e.central));
    return free_reduce(w);
}

bool is_valid(const CanonicalElement& e, const GroupParams& g) {
    for (std::size_t i = 0; i < e.syllables.size(); ++i) {
        const Syllable& s = e.syllables[i];
        if (s.gen != 0 && s.gen != 1) return false;
        if (i > 0 && e.syllables[i - 1].gen == s.gen) return false;
        const int P = period(s.gen, g);
        if (P != 0 ? (s.exp < 1 || s.exp >= P) : s.exp == 0) return false;
    }
    return true;
}

std::string to_json(const CanonicalElement& e) {
    std::string s = "{\"syllables\":[";
    for (std::size_t i = 0; i < e.syllables.size(); ++i) {
        if (i) s += ',';
        s += "[\"";
        s += e.syllables[i].gen == 0 ? 'x' : 'y';
        s += "\",";
        s += std::to_string(e.syllables[i].exp);
        s += ']';
    }
    s += "],\"central\":";
    s += std::to_string(e.central);
    s += '}';
    return s;
}

}  // namespace artin
