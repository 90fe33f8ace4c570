#pragma once

#include <random>
#include <string>
#include <vector>

#include "artin/artin.hpp"

namespace testing {

using namespace artin;

inline std::vector<Word> words_up_to(int n) {
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

inline std::vector<Word> words_of_length(int n) {
    std::vector<Word> out;
    for (Word& w : words_up_to(n))
        if (static_cast<int>(w.size()) == n) out.push_back(std::move(w));
    return out;
}

inline Word random_word(std::mt19937& rng, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len), letter(0, 3);
    Word w(static_cast<std::size_t>(len(rng)));
    for (Letter& l : w) l = static_cast<Letter>(letter(rng));
    return w;
}

inline Word W(const std::string& text, int m) { return parse_word(text, GroupParams::make(m)); }

}  // namespace testing
