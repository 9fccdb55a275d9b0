#pragma once

#include "g2sub/conormal.hpp"
#include "g2sub/cubic_forms.hpp"

#include <algorithm>
#include <random>

namespace g2test {

using namespace g2sub;

// Deterministic generators for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational rational(int bound = 5) {
        const int den = integer(1, 3);
        return Rational(integer(-bound, bound)) / den;
    }

    BinaryCubic small_cubic(int bound = 3) {
        return BinaryCubic(integer(-bound, bound), integer(-bound, bound), integer(-bound, bound),
                           integer(-bound, bound));
    }
    BinaryCubic cubic() { return BinaryCubic(rational(), rational(), rational(), rational()); }
    DualCubic dual() { return DualCubic(rational(), rational(), rational(), rational()); }

    GroupElement group() {
        for (;;) {
            const Rational a = rational(3), b = rational(3), c = rational(3), d = rational(3);
            if (a * d - b * c != 0) return GroupElement(a, b, c, d);
        }
    }

    Line line() {
        for (;;) {
            const Rational u1 = rational(3), u2 = rational(3);
            if (u1 != 0 || u2 != 0) return Line(u1, u2);
        }
    }

    // A cubic with the given multiplicity pattern, built from random distinct lines.
    BinaryCubic split_cubic(int distinct_lines, int first_multiplicity) {
        std::vector<Line> ls;
        while (static_cast<int>(ls.size()) < distinct_lines) {
            const Line l = line();
            if (std::find(ls.begin(), ls.end(), l) == ls.end()) ls.push_back(l);
        }
        std::array<Eigen::Matrix<Rational, 2, 1>, 3> w;
        for (int i = 0; i < first_multiplicity; ++i) w[static_cast<size_t>(i)] = ls[0].form();
        for (int i = first_multiplicity; i < 3; ++i) w[static_cast<size_t>(i)] = ls[static_cast<size_t>(i - first_multiplicity + 1)].form();
        return cubic_from_forms<Rational, PrimalSide>(w);
    }

private:
    std::mt19937_64 rng_;
};

// Four pairwise independent points plus one more: a binary cubic is pinned down by its values on them.
inline const std::array<std::pair<Rational, Rational>, 5>& probe_points() {
    static const std::array<std::pair<Rational, Rational>, 5> pts{
        {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}}};
    return pts;
}

// (h.r)(x,y) = det(h)^-1 r(ax + cy, bx + dy), compared pointwise.
inline bool matches_substitution(const GroupElement& h, const BinaryCubic& r, const BinaryCubic& hr) {
    for (const auto& [x, y] : probe_points()) {
        const Rational lhs = evaluate(hr, x, y);
        const Rational rhs = evaluate(r, h.a() * x + h.c() * y, h.b() * x + h.d() * y) / h.det();
        if (lhs != rhs) return false;
    }
    return true;
}

// The 4x4 action matrix as printed, without the det^-1 factor.
inline Matrix4<Rational> printed_action_matrix(const GroupElement& h) {
    const Rational a = h.a(), b = h.b(), c = h.c(), d = h.d();
    Matrix4<Rational> m;
    m << d * d * d, -3 * c * d * d, -3 * c * c * d, -c * c * c,
        -b * d * d, d * (a * d + 2 * b * c), c * (2 * a * d + b * c), a * c * c,
        -b * b * d, b * (2 * a * d + b * c), a * (a * d + 2 * b * c), a * a * c,
        -b * b * b, 3 * a * b * b, 3 * a * a * b, a * a * a;
    return m;
}

namespace detail {

using Poly = std::vector<Rational>;  // lowest degree first

inline void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly remainder(Poly a, const Poly& b) {
    trim(a);
    while (a.size() >= b.size()) {
        const Rational k = a.back() / b.back();
        const size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= k * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

inline size_t gcd_degree(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? 0 : a.size() - 1;
}

}  // namespace detail

// gcd(r_x, r_y) nonconstant, which by Euler's identity is gcd(r, r_x, r_y) nonconstant.
// Hand-written Euclid on the dehomogenized partials; the point at infinity is tested separately.
inline bool brute_force_repeated_root(const BinaryCubic& r) {
    const auto m = r.monomials();  // y^(3-k) x^k
    detail::Poly rx(3), ry(3);     // y^(2-j) x^j
    for (size_t j = 0; j < 3; ++j) {
        rx[j] = Rational(static_cast<int>(j) + 1) * m[j + 1];
        ry[j] = Rational(3 - static_cast<int>(j)) * m[j];
    }
    const bool rx_zero = rx == detail::Poly(3, Rational(0));
    const bool ry_zero = ry == detail::Poly(3, Rational(0));
    if (rx_zero || ry_zero) return true;
    if (rx[2] == 0 && ry[2] == 0) return true;  // common root at [x:y] = [1:0]
    return detail::gcd_degree(rx, ry) >= 1;
}

}  // namespace g2test
