#include "artin/growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>

#include "artin/canonical.hpp"
#include "artin/conjugacy.hpp"
#include "artin/geodesic.hpp"

namespace artin {

namespace {

void check_cap(int N, int cap) {
    if (N < 0) throw Error("BadArgument", "N must be nonnegative");
    if (N > cap) throw Error("CapExceeded", "N = " + std::to_string(N) + " exceeds cap " + std::to_string(cap));
}

}  // namespace

GrowthTables growth_tables(const GroupParams& g, int N, int cap) {
    check_cap(N, cap);
    GrowthTables t;
    t.spheres.params = t.classes.params = g;
    t.spheres.kind = CountKind::elements;
    t.classes.kind = CountKind::classes;
    t.spheres.s.assign(static_cast<std::size_t>(N) + 1, 0);
    t.classes.s.assign(static_cast<std::size_t>(N) + 1, 0);

    std::unordered_set<CanonicalElement, CanonicalHash> seen;
    std::unordered_set<CanonicalElement, CanonicalHash> classes;
    std::vector<CanonicalElement> frontier{CanonicalElement{}};
    seen.insert(CanonicalElement{});
    for (int n = 0; n <= N; ++n) {
        t.spheres.s[static_cast<std::size_t>(n)] = frontier.size();
        for (const CanonicalElement& e : frontier) {
            const CanonicalElement c = class_element(e, g);
            const std::int64_t len = geodesic_length(c, g);
            if (len == n && classes.insert(c).second) ++t.classes.s[static_cast<std::size_t>(n)];
        }
        if (n == N) break;
        std::vector<CanonicalElement> next;
        for (const CanonicalElement& e : frontier) {
            for (Letter l : kLetters) {
                CanonicalElement f = e;
                multiply_letter(f, l, g);
                if (seen.insert(f).second) next.push_back(std::move(f));
            }
        }
        frontier = std::move(next);
    }
    return t;
}

SphereCounts sphere_sizes(const GroupParams& g, int N, int cap) {
    check_cap(N, cap);
    SphereCounts out;
    out.params = g;
    out.kind = CountKind::elements;
    std::unordered_set<CanonicalElement, CanonicalHash> seen;
    std::vector<CanonicalElement> frontier{CanonicalElement{}};
    seen.insert(CanonicalElement{});
    for (int n = 0; n <= N; ++n) {
        out.s.push_back(frontier.size());
        if (n == N) break;
        std::vector<CanonicalElement> next;
        for (const CanonicalElement& e : frontier) {
            for (Letter l : kLetters) {
                CanonicalElement f = e;
                multiply_letter(f, l, g);
                if (seen.insert(f).second) next.push_back(std::move(f));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

SphereCounts conj_class_counts(const GroupParams& g, int N, int cap) { return growth_tables(g, N, cap).classes; }

IntPolynomial IntPolynomial::from(std::vector<long long> c) {
    IntPolynomial p;
    for (long long v : c) p.coeffs.emplace_back(v);
    while (!p.coeffs.empty() && p.coeffs.back() == 0) p.coeffs.pop_back();
    return p;
}

double IntPolynomial::eval(double z) const {
    long double acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * z + it->convert_to<long double>();
    return static_cast<double>(acc);
}

std::string IntPolynomial::to_string() const {
    if (coeffs.empty()) return "0";
    std::string s;
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        const BigInt& c = coeffs[d];
        if (c == 0) continue;
        const bool neg = c < 0;
        const BigInt a = neg ? BigInt(-c) : c;
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        if (a != 1 || d == 0) s += a.str();
        if (d >= 1) s += "z";
        if (d >= 2) s += "^" + std::to_string(d);
    }
    return s;
}

Family parse_family(const std::string& name) {
    if (name == "p" || name == "p_odd") return Family::p_odd;
    if (name == "q" || name == "q_odd") return Family::q_odd;
    if (name == "p1" || name == "p1_even") return Family::p1_even;
    if (name == "p3" || name == "p3_even") return Family::p3_even;
    if (name == "pj" || name == "p_j" || name == "p_j_even") return Family::p_j_even;
    if (name == "qs" || name == "q_even_suffix") return Family::q_even_suffix;
    throw Error("BadFamily", "unknown polynomial family '" + name + "'");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::p_odd: return "p_odd";
        case Family::q_odd: return "q_odd";
        case Family::p1_even: return "p1_even";
        case Family::p3_even: return "p3_even";
        case Family::p_j_even: return "p_j_even";
        case Family::q_even_suffix: return "q_even_suffix";
    }
    return "?";
}

IntPolynomial denominator_polynomial(Family f, int k, std::optional<int> j) {
    if (k < 1) throw Error("BadFamily", "k must be positive");
    const bool needs_j = f == Family::p_j_even || f == Family::q_even_suffix;
    if (needs_j) {
        if (!j) throw Error("BadJ", family_name(f) + " needs j");
        if (*j < k || *j > 2 * k - 1)
            throw Error("BadJ", "j = " + std::to_string(*j) + " outside [" + std::to_string(k) + ", " +
                                    std::to_string(2 * k - 1) + "]");
    }
    std::vector<long long> c;
    auto set = [&c](int d, long long v) {
        if (static_cast<int>(c.size()) <= d) c.resize(static_cast<std::size_t>(d) + 1, 0);
        c[static_cast<std::size_t>(d)] += v;
    };
    set(0, 1);
    switch (f) {
        case Family::p_odd:
            for (int d = 2; d <= k; ++d) set(d, -2);
            set(k + 1, -1);
            set(k + 2, -1);
            break;
        case Family::q_odd:
            for (int d = 2; d <= k + 1; ++d) set(d, -2);
            break;
        case Family::p1_even:
            set(1, -1);
            for (int d = 2; d <= 2 * k; ++d) set(d, -2);
            break;
        case Family::p3_even:
            set(1, -1);
            for (int d = 2; d <= k; ++d) set(d, -4);
            break;
        case Family::p_j_even:
            set(1, -1);
            for (int a = 1; a <= *j; ++a) set(a + 1, a <= 2 * k - *j - 1 ? -4 : -2);
            break;
        case Family::q_even_suffix: {
            set(1, -1);
            const int top = std::max(*j - 1, 2 * k - *j);
            for (int a = 1; a <= top; ++a) {
                const int ca = (a <= *j - 1 ? 1 : 0) + (a <= 2 * k - *j ? 1 : 0);
                set(a + 1, -2LL * ca);
            }
            break;
        }
    }
    return IntPolynomial::from(c);
}

IntPolynomial denominator_polynomial(Family f, const GroupParams& g, std::optional<int> j) {
    const bool odd_family = f == Family::p_odd || f == Family::q_odd;
    if (odd_family != g.odd)
        throw Error("BadFamily", family_name(f) + " does not apply to m = " + std::to_string(g.m));
    if (!g.odd && g.p % 2 != 0)
        throw Error("BadFamily", family_name(f) + " is defined for m divisible by 4");
    return denominator_polynomial(f, g.k, j);
}

std::vector<BigInt> series_coeffs(const IntPolynomial& den, const IntPolynomial& num, int N) {
    if (den.coeffs.empty() || den.coeffs[0] == 0) throw Error("ZeroConstantTerm", "denominator has zero constant term");
    if (N < 0) throw Error("BadArgument", "N must be nonnegative");
    std::vector<BigInt> a(static_cast<std::size_t>(N) + 1);
    const BigInt& d0 = den.coeffs[0];
    for (int n = 0; n <= N; ++n) {
        BigInt acc = static_cast<std::size_t>(n) < num.coeffs.size() ? num.coeffs[static_cast<std::size_t>(n)] : BigInt(0);
        for (std::size_t i = 1; i < den.coeffs.size() && static_cast<int>(i) <= n; ++i)
            acc -= den.coeffs[i] * a[static_cast<std::size_t>(n) - i];
        if (acc % d0 != 0) throw Error("NotIntegral", "series has non-integral coefficients");
        a[static_cast<std::size_t>(n)] = acc / d0;
    }
    return a;
}

RootResult smallest_positive_root(const IntPolynomial& poly, double tol) {
    if (poly.coeffs.empty()) throw Error("NoSignChange", "zero polynomial");
    const int steps = 1024;
    const double v0 = poly.eval(0.0);
    double lo = 0.0, hi = -1.0;
    for (int i = 1; i <= steps; ++i) {
        const double z = static_cast<double>(i) / steps;
        const double v = poly.eval(z);
        if (v == 0.0) return RootResult{z, 0.0, z, z};
        if ((v > 0) != (v0 > 0)) {
            hi = z;
            lo = static_cast<double>(i - 1) / steps;
            break;
        }
    }
    if (hi < 0) throw Error("NoSignChange", "no sign change of " + poly.to_string() + " on (0, 1]");
    const bool lo_pos = poly.eval(lo) > 0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double v = poly.eval(mid);
        if (v == 0.0) return RootResult{mid, 0.0, mid, mid};
        if ((v > 0) == lo_pos) lo = mid;
        else hi = mid;
    }
    return RootResult{0.5 * (lo + hi), hi - lo, lo, hi};
}

double band_ratio(const std::vector<double>& v, int lo, int hi) {
    double mn = std::numeric_limits<double>::infinity(), mx = 0;
    for (int i = lo; i <= hi; ++i) {
        const double x = v.at(static_cast<std::size_t>(i));
        if (!(x > 0)) return std::numeric_limits<double>::infinity();
        mn = std::min(mn, x);
        mx = std::max(mx, x);
    }
    return mx / mn;
}

AsymptoticsReport asymptotics_report(const GroupParams& g, int N, int cap) {
    const GrowthTables t = growth_tables(g, N, cap);
    AsymptoticsReport r;
    r.params = g;
    r.N = N;
    r.c = t.classes.s;
    r.s = t.spheres.s;
    for (int n = 0; n <= N; ++n) {
        const double c = static_cast<double>(r.c[static_cast<std::size_t>(n)]);
        const double s = static_cast<double>(r.s[static_cast<std::size_t>(n)]);
        r.ratio.push_back(c / s);
        r.n_ratio.push_back(n * c / s);
        if (n < N) {
            r.c_rate.push_back(c > 0 ? static_cast<double>(r.c[static_cast<std::size_t>(n) + 1]) / c : 0.0);
            r.s_rate.push_back(static_cast<double>(r.s[static_cast<std::size_t>(n) + 1]) / s);
        }
    }
    IntPolynomial poly;
    if (g.odd) {
        poly = denominator_polynomial(Family::q_odd, g.k);
    } else if (g.p % 2 == 0) {
        poly = denominator_polynomial(Family::p_j_even, g.k, g.k);
    } else {
        // x-exponents in [-k, k]
        std::vector<long long> c = {1, -1};
        for (int a = 1; a <= g.k; ++a) c.push_back(-4);
        poly = IntPolynomial::from(c);
    }
    try {
        r.series_root = smallest_positive_root(poly).value;
    } catch (const Error&) {
        r.series_root.reset();
    }
    const bool over_n = !g.odd && g.p % 2 == 1;
    r.regime = over_n ? "c ~ s/n" : "c ~ s";
    const int lo = std::max(1, N - 6);
    if (N >= 1) {
        r.window_band_ratio = band_ratio(over_n ? r.n_ratio : r.ratio, lo, N);
        r.regime_supported = r.window_band_ratio <= 3.0;
        if (over_n) r.regime_supported = r.regime_supported && r.ratio[static_cast<std::size_t>(N)] < r.ratio[static_cast<std::size_t>(lo)];
    }
    return r;
}

}  // namespace artin
