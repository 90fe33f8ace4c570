#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "artin/words.hpp"

// Reference implementations that share no arithmetic with the core library. Words over
// {x, y} are rewritten in the standard Artin generators {a, b} and compared through the
// Garside normal form of the positive monoid.
namespace artin::oracle {

// Delta^power * letters, where letters (0 = a, 1 = b) contain no alternating factor of length m.
struct ArtinForm {
    std::int64_t power = 0;
    std::vector<std::uint8_t> letters;
    bool operator==(const ArtinForm&) const = default;
};

struct ArtinFormHash {
    std::size_t operator()(const ArtinForm& f) const noexcept;
};

class GarsideOracle {
public:
    explicit GarsideOracle(int m);
    int m() const { return m_; }
    ArtinForm normal_form(const Word& w) const;
    void apply(ArtinForm& f, Letter l) const;
    bool equal(const Word& u, const Word& v) const { return normal_form(u) == normal_form(v); }

private:
    void push_positive(ArtinForm& f, std::uint8_t s) const;
    void push_inverse(ArtinForm& f, std::uint8_t s) const;
    void twist(ArtinForm& f) const;

    int m_;
    std::vector<std::vector<std::uint8_t>> images_;  // x, y as positive Artin words
};

// Breadth-first ball in the Cayley graph over {x, y}, keyed by Artin normal forms.
class Ball {
public:
    Ball(int m, int radius);
    int radius() const { return radius_; }
    const GarsideOracle& garside() const { return oracle_; }
    // -1 when the element lies outside the ball
    int distance(const Word& w) const;
    std::size_t size() const { return depth_.size(); }
    std::vector<std::uint64_t> sphere_sizes() const;
    // one word of minimal length per element, grouped by length
    const std::vector<std::vector<Word>>& spheres() const { return spheres_; }

private:
    GarsideOracle oracle_;
    int radius_;
    std::unordered_map<ArtinForm, int, ArtinFormHash> depth_;
    std::vector<std::vector<Word>> spheres_;
};

// Number of conjugacy classes whose shortest elements have length n, for n <= N, found
// by joining elements of a ball of radius R that differ by conjugation by a generator.
// Classes connected only through elements longer than R may be split, so R must exceed N.
std::vector<std::uint64_t> class_counts(int m, int N, int R);

// w is geodesic and no conjugate t^-1 w t with |t| <= conj_radius is shorter.
bool is_conjugacy_geodesic(const Word& w, const Ball& ball, int conj_radius);

}  // namespace artin::oracle
