#include <algorithm>
#include <optional>
#include <unordered_map>

#include "artin/canonical.hpp"
#include "artin/geodesic.hpp"
#include "artin/langtools.hpp"

namespace artin {

namespace {

struct Node {
    CanonicalElement h;
    bool ended = false;
    int parent = -1;
    int letter = -1;  // letter appended to the shorter word, -1 if none
};

struct NodeHash {
    std::size_t operator()(const std::pair<CanonicalElement, bool>& k) const noexcept {
        return CanonicalHash{}(k.first) * 2 + (k.second ? 1 : 0);
    }
};

// One threshold of the search: layers of (h, ended) with h = u_i^-1 v_i and |h| <= D.
std::optional<Word> search(const Word& w, const GroupParams& g, std::int64_t D) {
    const std::size_t n = w.size();
    std::vector<std::vector<Node>> layers(n + 1);
    layers[0].push_back(Node{});
    for (std::size_t i = 0; i < n; ++i) {
        const Letter a = w[i];
        std::unordered_map<std::pair<CanonicalElement, bool>, int, NodeHash> seen;
        auto add = [&](CanonicalElement h, bool ended, int parent, int letter) {
            const std::int64_t len = geodesic_length(h, g);
            const auto rest = static_cast<std::int64_t>(n - i - 1);
            // the remaining letters of both words must be able to cancel h
            if (len > D || len > (ended ? rest : 2 * rest)) return;
            auto key = std::make_pair(h, ended);
            if (seen.count(key)) return;
            seen.emplace(key, static_cast<int>(layers[i + 1].size()));
            layers[i + 1].push_back(Node{std::move(h), ended, parent, letter});
        };
        for (std::size_t idx = 0; idx < layers[i].size(); ++idx) {
            const Node& nd = layers[i][idx];
            const CanonicalElement base = left_multiply_letter(inverse(a), nd.h, g);
            if (!nd.ended) {
                for (Letter b : kLetters) {
                    CanonicalElement h = base;
                    multiply_letter(h, b, g);
                    add(std::move(h), false, static_cast<int>(idx), static_cast<int>(b));
                }
            }
            add(base, true, static_cast<int>(idx), -1);
        }
    }
    for (std::size_t idx = 0; idx < layers[n].size(); ++idx) {
        const Node& nd = layers[n][idx];
        if (!nd.ended || !nd.h.syllables.empty() || nd.h.central != 0) continue;
        Word out;
        int cur = static_cast<int>(idx);
        for (std::size_t i = n; i > 0; --i) {
            const Node& c = layers[i][static_cast<std::size_t>(cur)];
            if (c.letter >= 0) out.push_back(static_cast<Letter>(c.letter));
            cur = c.parent;
        }
        std::reverse(out.begin(), out.end());
        return out;
    }
    return std::nullopt;
}

}  // namespace

std::int64_t fellow_travel_distance(const Word& u, const Word& v, const GroupParams& g) {
    const std::size_t n = std::max(u.size(), v.size());
    CanonicalElement h;
    std::int64_t best = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i < u.size()) h = left_multiply_letter(inverse(u[i]), h, g);
        if (i < v.size()) multiply_letter(h, v[i], g);
        best = std::max(best, geodesic_length(h, g));
    }
    return best;
}

FftpWitness fftp_witness(const Word& w, const GroupParams& g, std::int64_t max_d) {
    if (w.empty()) return FftpWitness{-1, {}};
    for (std::int64_t D = 1; D <= max_d; ++D)
        if (auto v = search(w, g, D)) return FftpWitness{D, *v};
    return FftpWitness{-1, {}};
}

std::int64_t fftp_bound(const GroupParams& g, int max_len) {
    if (g.odd) return 2LL * g.k + 9;
    return std::max<std::int64_t>(4LL * g.p, 2LL * std::max(0, max_len - g.p - 1));
}

FftpReport fftp_check(const GroupParams& g, int max_len, int cap) {
    if (max_len < 0) throw Error("BadArgument", "length must be nonnegative");
    if (max_len > cap)
        throw Error("CapExceeded", "length " + std::to_string(max_len) + " exceeds cap " + std::to_string(cap));
    FftpReport r;
    r.m = g.m;
    r.max_len = max_len;
    r.bound = fftp_bound(g, max_len);
    Word w;
    for (int n = 0; n <= max_len; ++n) {
        w.assign(static_cast<std::size_t>(n), Letter::x);
        for (;;) {
            ++r.words_checked;
            if (!is_geodesic(w, g)) {
                ++r.non_geodesic;
                const FftpWitness wit = fftp_witness(w, g, r.bound);
                if (wit.distance < 0) {
                    ++r.failures;
                    if (r.worst_word.empty()) r.worst_word = w;
                } else if (wit.distance > r.observed_constant) {
                    r.observed_constant = wit.distance;
                    r.worst_word = w;
                    r.worst_partner = wit.shorter;
                }
            }
            // next word in lexicographic order
            int i = n - 1;
            while (i >= 0 && w[static_cast<std::size_t>(i)] == Letter::Y) w[static_cast<std::size_t>(i--)] = Letter::x;
            if (i < 0) break;
            w[static_cast<std::size_t>(i)] = static_cast<Letter>(static_cast<int>(w[static_cast<std::size_t>(i)]) + 1);
        }
    }
    return r;
}

}  // namespace artin
