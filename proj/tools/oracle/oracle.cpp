#include "oracle.hpp"

#include <algorithm>
#include <numeric>

namespace artin::oracle {

std::size_t ArtinFormHash::operator()(const ArtinForm& f) const noexcept {
    std::size_t h = std::hash<std::int64_t>{}(f.power);
    for (std::uint8_t c : f.letters) h = h * 1099511628211ULL + c + 1;
    return h;
}

GarsideOracle::GarsideOracle(int m) : m_(m) {
    if (m < 3) throw Error("BadParams", "m must be at least 3");
    std::vector<std::uint8_t> x, y;
    if (m % 2 == 1) {
        for (int i = 0; i < m; ++i) x.push_back(static_cast<std::uint8_t>(i % 2));
        y = {0, 1};
    } else {
        x = {0, 1};
        y = {0};
    }
    images_ = {x, y};
}

void GarsideOracle::twist(ArtinForm& f) const {
    if (m_ % 2 == 0) return;
    for (std::uint8_t& c : f.letters) c ^= 1u;
}

void GarsideOracle::push_positive(ArtinForm& f, std::uint8_t s) const {
    f.letters.push_back(s);
    const std::size_t n = f.letters.size();
    const auto m = static_cast<std::size_t>(m_);
    if (n < m) return;
    for (std::size_t i = n - m; i + 1 < n; ++i)
        if (f.letters[i] == f.letters[i + 1]) return;
    // u * Delta = Delta * tau(u)
    f.letters.resize(n - m);
    twist(f);
    ++f.power;
}

void GarsideOracle::push_inverse(ArtinForm& f, std::uint8_t s) const {
    // s^-1 = u Delta^-1 with Delta = s u, and P Delta^-1 = Delta^-1 tau(P)
    for (int i = 1; i < m_; ++i) push_positive(f, static_cast<std::uint8_t>((s + i) % 2));
    twist(f);
    --f.power;
}

void GarsideOracle::apply(ArtinForm& f, Letter l) const {
    const auto& img = images_[static_cast<std::size_t>(generator(l))];
    if (sign(l) > 0) {
        for (std::uint8_t c : img) push_positive(f, c);
    } else {
        for (auto it = img.rbegin(); it != img.rend(); ++it) push_inverse(f, *it);
    }
}

ArtinForm GarsideOracle::normal_form(const Word& w) const {
    ArtinForm f;
    for (Letter l : w) apply(f, l);
    return f;
}

Ball::Ball(int m, int radius) : oracle_(m), radius_(radius) {
    std::vector<std::pair<ArtinForm, Word>> frontier{{ArtinForm{}, Word{}}};
    depth_.emplace(ArtinForm{}, 0);
    spheres_.push_back({Word{}});
    for (int d = 1; d <= radius; ++d) {
        std::vector<std::pair<ArtinForm, Word>> next;
        std::vector<Word> sphere;
        for (const auto& [f, w] : frontier) {
            for (Letter l : kLetters) {
                ArtinForm g = f;
                oracle_.apply(g, l);
                if (!depth_.emplace(g, d).second) continue;
                Word v = w;
                v.push_back(l);
                sphere.push_back(v);
                next.emplace_back(std::move(g), std::move(v));
            }
        }
        spheres_.push_back(std::move(sphere));
        frontier = std::move(next);
    }
}

int Ball::distance(const Word& w) const {
    auto it = depth_.find(oracle_.normal_form(w));
    return it == depth_.end() ? -1 : it->second;
}

std::vector<std::uint64_t> Ball::sphere_sizes() const {
    std::vector<std::uint64_t> out;
    for (const auto& s : spheres_) out.push_back(s.size());
    return out;
}

std::vector<std::uint64_t> class_counts(int m, int N, int R) {
    const Ball ball(m, R);
    const GarsideOracle& o = ball.garside();
    std::unordered_map<ArtinForm, std::size_t, ArtinFormHash> index;
    std::vector<int> len;
    std::vector<ArtinForm> forms;
    for (int d = 0; d <= R; ++d)
        for (const Word& w : ball.spheres()[static_cast<std::size_t>(d)]) {
            index.emplace(o.normal_form(w), forms.size());
            forms.push_back(o.normal_form(w));
            len.push_back(d);
        }
    std::vector<std::size_t> parent(forms.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    std::size_t idx = 0;
    for (int d = 0; d <= R; ++d)
        for (const Word& w : ball.spheres()[static_cast<std::size_t>(d)]) {
            for (Letter l : kLetters) {
                Word c{inverse(l)};
                c.insert(c.end(), w.begin(), w.end());
                c.push_back(l);
                auto it = index.find(o.normal_form(c));
                if (it != index.end()) parent[find(idx)] = find(it->second);
            }
            ++idx;
        }
    std::vector<int> best(forms.size(), R + 1);
    for (std::size_t i = 0; i < forms.size(); ++i) {
        const std::size_t r = find(i);
        best[r] = std::min(best[r], len[i]);
    }
    std::vector<std::uint64_t> out(static_cast<std::size_t>(N) + 1, 0);
    for (std::size_t i = 0; i < forms.size(); ++i)
        if (find(i) == i && best[i] <= N) ++out[static_cast<std::size_t>(best[i])];
    return out;
}

bool is_conjugacy_geodesic(const Word& w, const Ball& ball, int conj_radius) {
    const int n = static_cast<int>(w.size());
    if (ball.distance(w) != n) return false;
    for (int d = 1; d <= conj_radius && d <= ball.radius(); ++d)
        for (const Word& t : ball.spheres()[static_cast<std::size_t>(d)]) {
            Word c = invert_word(t);
            c.insert(c.end(), w.begin(), w.end());
            c.insert(c.end(), t.begin(), t.end());
            const int len = ball.distance(c);
            if (len >= 0 && len < n) return false;
        }
    return true;
}

}  // namespace artin::oracle
