#include "artin/words.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace artin {

char letter_char(Letter l) noexcept {
    switch (l) {
        case Letter::x: return 'x';
        case Letter::X: return 'X';
        case Letter::y: return 'y';
        case Letter::Y: return 'Y';
    }
    return '?';
}

GroupParams GroupParams::make(int m) {
    if (m < 3) throw Error("BadParams", "m must be at least 3, got " + std::to_string(m));
    GroupParams g;
    g.m = m;
    g.odd = (m % 2) == 1;
    if (g.odd) {
        g.k = (m - 1) / 2;
        g.p = 0;
        g.delta_len = 2;
        g.px = 2;
        g.py = m;
    } else {
        g.p = m / 2;
        g.k = (g.p % 2 == 0) ? g.p / 2 : (g.p - 1) / 2;
        g.delta_len = g.p;
        g.px = g.p;
        g.py = 0;
    }
    return g;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error("Overflow", "integer overflow in addition");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error("Overflow", "integer overflow in multiplication");
    return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

namespace {

std::size_t abs_size(std::int64_t e) {
    if (e == std::numeric_limits<std::int64_t>::min()) throw Error("TooLong", "exponent too large to expand");
    return static_cast<std::size_t>(e < 0 ? -e : e);
}

}  // namespace

void append_power(Word& w, int gen, std::int64_t e) {
    const std::size_t n = abs_size(e);
    if (n > kMaxExpansion || w.size() + n > kMaxExpansion)
        throw Error("TooLong", "word expansion exceeds " + std::to_string(kMaxExpansion) + " letters");
    const Letter l = make_letter(gen, e < 0 ? -1 : 1);
    w.insert(w.end(), n, l);
}

Word power_word(int gen, std::int64_t e) {
    Word w;
    append_power(w, gen, e);
    return w;
}

Word delta_word(const GroupParams& g, std::int64_t c) { return power_word(0, checked_mul(g.px, c)); }

Word parse_word(std::string_view text, const std::optional<GroupParams>& params) {
    Word out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        const char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        const std::size_t at = i;
        Word base;
        switch (ch) {
            case 'x': base = {Letter::x}; break;
            case 'X': base = {Letter::X}; break;
            case 'y': base = {Letter::y}; break;
            case 'Y': base = {Letter::Y}; break;
            case 'D':
                if (!params) throw Error("ParseError", "token 'D' needs group parameters (position " + std::to_string(at) + ")");
                base = delta_word(*params);
                break;
            default:
                throw Error("ParseError", std::string("unexpected character '") + ch + "' at position " + std::to_string(at));
        }
        ++i;
        std::int64_t e = 1;
        if (i < n && text[i] == '^') {
            ++i;
            bool braces = i < n && text[i] == '{';
            if (braces) ++i;
            std::size_t start = i;
            if (i < n && (text[i] == '-' || text[i] == '+')) ++i;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            std::string_view num = text.substr(start, i - start);
            if (!num.empty() && num.front() == '+') num.remove_prefix(1);
            if (num.empty() || num == "-")
                throw Error("ParseError", "missing exponent after '^' at position " + std::to_string(at));
            auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), e);
            if (ec == std::errc::result_out_of_range)
                throw Error("Overflow", "exponent does not fit in 64 bits at position " + std::to_string(at));
            if (ec != std::errc() || ptr != num.data() + num.size())
                throw Error("ParseError", "malformed exponent at position " + std::to_string(at));
            if (braces) {
                if (i >= n || text[i] != '}') throw Error("ParseError", "missing '}' at position " + std::to_string(i));
                ++i;
            }
        }
        const Word piece = e < 0 ? invert_word(base) : base;
        const std::size_t reps = abs_size(e);
        if (!piece.empty() && (reps > kMaxExpansion / piece.size() || out.size() + reps * piece.size() > kMaxExpansion))
            throw Error("TooLong", "word expansion exceeds " + std::to_string(kMaxExpansion) + " letters");
        for (std::size_t r = 0; r < reps; ++r) out.insert(out.end(), piece.begin(), piece.end());
    }
    return out;
}

std::string format_word(const Word& w) {
    std::string s;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        const std::size_t len = j - i;
        if (len == 1) {
            s += letter_char(w[i]);
        } else {
            s += generator(w[i]) == 0 ? 'x' : 'y';
            s += '^';
            if (sign(w[i]) < 0) s += '-';
            s += std::to_string(len);
        }
        i = j;
    }
    return s;
}

Word free_reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (Letter l : w) {
        if (!out.empty() && out.back() == inverse(l))
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

bool is_freely_reduced(const Word& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] == inverse(w[i - 1])) return false;
    return true;
}

Word invert_word(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (Letter& l : out) l = inverse(l);
    return out;
}

Word concat_words(const Word& u, const Word& v) {
    Word w = u;
    w.insert(w.end(), v.begin(), v.end());
    return free_reduce(w);
}

std::vector<Run> runs_of(const Word& w) {
    std::vector<Run> out;
    for (Letter l : w) {
        const int gen = generator(l);
        if (!out.empty() && out.back().gen == gen)
            out.back().exp += sign(l);
        else
            out.push_back({gen, sign(l)});
    }
    return out;
}

}  // namespace artin
