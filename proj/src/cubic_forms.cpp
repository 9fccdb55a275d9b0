#include "g2sub/cubic_forms.hpp"
#include "g2sub/polynomial.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace g2sub {

std::string name(OrbitClass o) {
    constexpr const char* names[] = {"C0", "C1", "C2", "C3"};
    return names[index(o)];
}

std::string name(MultiplicityStructure m) {
    constexpr const char* names[] = {"Zero", "TripleLine", "DoublePlusSimple", "ThreeDistinct"};
    return names[static_cast<int>(m)];
}

namespace {

int sign(const Integer& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

Integer eval(const std::vector<Integer>& g, const Integer& z) {
    Integer acc(0);
    for (auto it = g.rbegin(); it != g.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

// Integer root of g on [lo, hi] where g is monotone.
std::optional<Integer> monotone_root(const std::vector<Integer>& g, Integer lo, Integer hi) {
    if (lo > hi) return std::nullopt;
    int slo = sign(eval(g, lo)), shi = sign(eval(g, hi));
    if (slo == 0) return lo;
    if (shi == 0) return hi;
    if (slo == shi) return std::nullopt;
    while (hi - lo > 1) {
        const Integer mid = floor_div(lo + hi, Integer(2));
        const int sm = sign(eval(g, mid));
        if (sm == 0) return mid;
        if (sm == slo) lo = mid;
        else hi = mid;
    }
    return std::nullopt;
}

// Some integer root of the monic cubic z^3 + B z^2 + C z + D.
std::optional<Integer> monic_cubic_integer_root(const Integer& B, const Integer& C, const Integer& D) {
    const std::vector<Integer> g{D, C, B, Integer(1)};
    Integer bound(0);
    for (const auto& c : {B, C, D}) bound = std::max(bound, c < 0 ? Integer(-c) : c);
    bound += 1;
    std::set<Integer> cuts{-bound, bound};
    // Critical points (-2B +- sqrt(4B^2 - 12C)) / 6, bracketed by nearby integers.
    const Integer disc = 4 * B * B - 12 * C;
    if (disc > 0) {
        const Integer s = boost::multiprecision::sqrt(disc);
        for (const Integer& num : {Integer(-2 * B - s), Integer(-2 * B + s)}) {
            const Integer f = floor_div(num, Integer(6));
            for (int k = -2; k <= 2; ++k) {
                const Integer z = f + k;
                if (z > -bound && z < bound) cuts.insert(z);
            }
        }
    }
    std::vector<Integer> pts(cuts.begin(), cuts.end());
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        if (auto z = monotone_root(g, pts[i], pts[i + 1])) return z;
    return std::nullopt;
}

bool rational_sqrt(const Rational& x, Rational& out) {
    if (x < 0) return false;
    const Integer p = numerator(x), q = denominator(x);
    const Integer sp = boost::multiprecision::sqrt(p), sq = boost::multiprecision::sqrt(q);
    if (sp * sp != p || sq * sq != q) return false;
    out = Rational(sp) / Rational(sq);
    return true;
}

// Rational roots with multiplicity of f (degree <= 3, nonzero); returns residual degree.
int rational_roots(PolynomialQ f, std::map<Rational, int>& roots) {
    while (f.degree() >= 1) {
        const int n = f.degree();
        std::optional<Rational> root;
        if (n == 1) {
            root = -f.coeff(0) / f.coeff(1);
        } else if (n == 2) {
            const Rational a = f.coeff(2), b = f.coeff(1), c = f.coeff(0);
            Rational s;
            if (!rational_sqrt(b * b - 4 * a * c, s)) return 2;
            root = (-b + s) / (2 * a);
        } else {
            // Clear denominators, then z = a3 t turns the cubic monic over the integers.
            Integer l(1);
            for (const auto& c : f.coefficients()) l = boost::multiprecision::lcm(l, denominator(c));
            std::vector<Integer> a;
            for (const auto& c : f.coefficients()) a.push_back(numerator(c * Rational(l)));
            const Integer& a3 = a[3];
            auto z = monic_cubic_integer_root(a[2], a[1] * a3, a[0] * a3 * a3);
            if (!z) return 3;
            root = Rational(*z) / Rational(a3);
        }
        roots[*root] += 1;
        f = divmod(f, PolynomialQ{-*root, Rational(1)}).first;
    }
    return 0;
}

template <class Form>
RationalLines lines_of(const Form& r) {
    if (r.is_zero()) throw ZeroCubic("rational_lines: zero cubic has no lines");
    const auto m = r.monomials();
    const PolynomialQ f{m[0], m[1], m[2], m[3]};
    RationalLines out;
    std::map<Rational, int> roots;
    out.residual_degree = rational_roots(f, roots);
    for (const auto& [t, k] : roots) out.lines.emplace_back(Line(t, Rational(1)), k);
    if (f.degree() < 3) out.lines.emplace_back(Line(Rational(1), Rational(0)), 3 - f.degree());
    std::sort(out.lines.begin(), out.lines.end());
    return out;
}

}  // namespace

RationalLines rational_lines(const BinaryCubic& r) { return lines_of(r); }
RationalLines rational_lines(const DualCubic& s) { return lines_of(s); }

bool has_repeated_root(const BinaryCubic& r) {
    if (r.is_zero()) return true;
    const auto m = r.monomials();
    const PolynomialQ f{m[0], m[1], m[2], m[3]};
    const int at_infinity = 3 - f.degree();
    if (at_infinity >= 2) return true;
    return gcd(f, f.derivative()).degree() >= 1;
}

}  // namespace g2sub
