#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace artin {

class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

// Letters are ordered x < x^-1 < y < y^-1; the numeric value encodes that order.
enum class Letter : std::uint8_t { x = 0, X = 1, y = 2, Y = 3 };

inline constexpr Letter kLetters[4] = {Letter::x, Letter::X, Letter::y, Letter::Y};

constexpr Letter inverse(Letter l) noexcept {
    return static_cast<Letter>(static_cast<std::uint8_t>(l) ^ 1u);
}
// 0 for x, 1 for y
constexpr int generator(Letter l) noexcept { return static_cast<int>(l) >> 1; }
constexpr int sign(Letter l) noexcept { return (static_cast<int>(l) & 1) ? -1 : 1; }
constexpr Letter make_letter(int gen, int sgn) noexcept {
    return static_cast<Letter>((gen << 1) | (sgn < 0 ? 1 : 0));
}
char letter_char(Letter l) noexcept;

using Word = std::vector<Letter>;

struct GroupParams {
    int m = 3;
    bool odd = true;
    int k = 1;
    int p = 0;          // m/2 for even m, 0 for odd m
    int delta_len = 2;  // length of the Garside element as a word
    int px = 2;         // x^px is the Garside element
    int py = 3;         // y^py is the Garside element (odd m); 0 when y has no period

    static GroupParams make(int m);
    bool operator==(const GroupParams&) const = default;
};

// Checked 64-bit arithmetic; throws Error("Overflow") on overflow.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t floor_mod(std::int64_t a, std::int64_t b);

// Hard limit on the number of letters produced when expanding exponents.
inline constexpr std::size_t kMaxExpansion = 1u << 22;

Word parse_word(std::string_view text, const std::optional<GroupParams>& params = std::nullopt);
std::string format_word(const Word& w);

Word free_reduce(const Word& w);
bool is_freely_reduced(const Word& w);
Word invert_word(const Word& w);
Word concat_words(const Word& u, const Word& v);

// Appends gen^e letter by letter.
void append_power(Word& w, int gen, std::int64_t e);
Word power_word(int gen, std::int64_t e);
Word delta_word(const GroupParams& g, std::int64_t c = 1);

struct Run {
    int gen;
    std::int64_t exp;
    bool operator==(const Run&) const = default;
};
// Maximal runs of a single generator; a freely reduced word has nonzero exponents.
std::vector<Run> runs_of(const Word& w);

}  // namespace artin
