#include "g2sub/conormal.hpp"

#include <algorithm>

namespace g2sub {

namespace {

const Rational kThird = Rational(1) / Rational(3);

BinaryCubic xy_x_plus_y() { return BinaryCubic(0, -kThird, -kThird, 0); }

using Mono = std::array<Rational, 4>;
using W = Eigen::Matrix<Rational, 2, 1>;

// d/dt f((x,y)(I + tY)) at t = 0, in y^(3-k) x^k coefficients.
Mono directional(const Mono& m, const Matrix2<Rational>& Y) {
    // f_x and f_y as quadratics in y^(2-j) x^j.
    std::array<Rational, 3> fx, fy;
    for (int j = 0; j < 3; ++j) {
        fx[j] = Rational(j + 1) * m[j + 1];
        fy[j] = Rational(3 - j) * m[j];
    }
    // x -> Y11 x + Y21 y, y -> Y12 x + Y22 y, as (coef y, coef x).
    const std::array<Rational, 2> lx{Y(1, 0), Y(0, 0)}, ly{Y(1, 1), Y(0, 1)};
    Mono out{0, 0, 0, 0};
    for (int j = 0; j < 3; ++j) {
        out[j] += fx[j] * lx[0] + fy[j] * ly[0];
        out[j + 1] += fx[j] * lx[1] + fy[j] * ly[1];
    }
    return out;
}

std::array<Matrix2<Rational>, 4> gl2_basis() {
    std::array<Matrix2<Rational>, 4> e;
    for (int k = 0; k < 4; ++k) {
        e[k] = Matrix2<Rational>::Zero();
        e[k](k / 2, k % 2) = 1;
    }
    return e;
}

Vector4<Rational> tangent(const BinaryCubic& r, const Matrix2<Rational>& X) {
    const Mono d = directional(r.monomials(), X);
    const Rational tr = X.trace();
    return BinaryCubic::from_monomials(d).coeffs() - tr * r.coeffs();
}

Vector4<Rational> tangent(const DualCubic& s, const Matrix2<Rational>& X) {
    const Mono d = directional(s.monomials(), Matrix2<Rational>(-X.transpose()));
    const Rational tr = X.trace();
    return DualCubic::from_monomials(d).coeffs() + tr * s.coeffs();
}

template <class S>
ComponentGroup group_type(const std::vector<GroupElementT<S>>& elems) {
    if (elems.size() == 1) return ComponentGroup::Trivial;
    if (elems.size() == 2) return ComponentGroup::S2;
    bool abelian = true;
    for (const auto& g : elems)
        for (const auto& h : elems)
            if (!(g * h == h * g)) abelian = false;
    if (elems.size() == 6 && !abelian) return ComponentGroup::S3;
    throw InconsistentSystem("finite stabilizer of unexpected shape, order " + std::to_string(elems.size()));
}

template <class S>
void check_closed(const std::vector<GroupElementT<S>>& elems) {
    for (const auto& g : elems)
        for (const auto& h : elems)
            if (std::find(elems.begin(), elems.end(), g * h) == elems.end())
                throw InconsistentSystem("stabilizer elements are not closed under products");
}

using K = QuadraticNumber;
using WK = Eigen::Matrix<K, 2, 1>;

struct ThreeLines {
    Integer radicand = 1;
    std::vector<WK> w;
};

// The three distinct lines of f, over Q or over the quadratic field of its residual factor.
template <class Side>
ThreeLines three_lines(const CubicForm<Rational, Side>& f) {
    const auto rl = rational_lines(f);
    ThreeLines out;
    if (rl.residual_degree == 0 && rl.lines.size() == 3) {
        for (const auto& [l, m] : rl.lines) out.w.push_back(l.form().template cast<K>());
        return out;
    }
    if (rl.residual_degree != 2 || rl.lines.size() != 1)
        throw IrrationalSplitting("cubic is irreducible over the rationals; its lines need a cubic extension");
    const Line u = rl.lines[0].first;
    const auto m = f.monomials();
    std::vector<Rational> q;
    detail::divide_linear(std::vector<Rational>(m.begin(), m.end()), u.u1(), -u.u2(), q);
    // q0 y^2 + q1 yx + q2 x^2 vanishes at (x, y) = (t, 1), the line [t:1].
    const auto [c, d] = split_square(q[1] * q[1] - 4 * q[0] * q[2]);
    out.radicand = d;
    out.w.push_back(u.form().template cast<K>());
    for (int sign : {1, -1}) {
        const K t = K(-q[1] / (2 * q[2]), sign * c / (2 * q[2]), Rational(d));
        out.w.push_back(WK(K(-1), t));
    }
    return out;
}

template <class S>
S ratio(const Vector4<S>& a, const Vector4<S>& b) {
    for (int i = 0; i < 4; ++i)
        if (b(i) != S(0)) return a(i) / b(i);
    throw ZeroCubic("ratio against the zero cubic");
}

// Matrices M with M w_k proportional to w_sigma(k), one per permutation sigma.
template <class S>
std::vector<Matrix2<S>> permuting_matrices(const std::vector<Eigen::Matrix<S, 2, 1>>& w) {
    Matrix2<S> base;
    base << w[0], w[1];
    const Matrix2<S> base_inv = invert(base);
    const auto ab = (base_inv * w[2]).eval();
    std::vector<Matrix2<S>> out;
    std::array<int, 3> sigma{0, 1, 2};
    do {
        Matrix2<S> img;
        img << w[sigma[0]], w[sigma[1]];
        const auto ab2 = (Matrix2<S>(invert(img)) * w[sigma[2]]).eval();
        const S lambda = ab(0) * ab2(1) / (ab(1) * ab2(0));
        img.col(1) *= lambda;
        out.push_back(img * base_inv);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

std::vector<GroupElementT<K>> primal_permutations(const BinaryCubic& r, const ThreeLines& lines) {
    const BinaryCubicT<K> rk(r.coeffs().cast<K>());
    std::vector<GroupElementT<K>> out;
    for (const auto& m : permuting_matrices(lines.w)) {
        const GroupElementT<K> h0(m);
        const K kappa = ratio(act(h0, rk).coeffs(), rk.coeffs());
        out.push_back((K(1) / kappa) * h0);
    }
    return out;
}

std::vector<GroupElementT<K>> dual_permutations(const DualCubic& s, const ThreeLines& lines) {
    const DualCubicT<K> sk(s.coeffs().cast<K>());
    std::vector<GroupElementT<K>> out;
    for (const auto& m : permuting_matrices(lines.w)) {
        const GroupElementT<K> h0 = GroupElementT<K>(m).inverse().transpose();
        const K kappa = ratio(act_dual(h0, sk).coeffs(), sk.coeffs());
        out.push_back(kappa * h0);
    }
    return out;
}

// Verify, classify and store a finite stabilizer found over Q(sqrt d).
StabilizerDescription finish_finite(int dimension, std::vector<GroupElementT<K>> elems, const Integer& radicand) {
    check_closed(elems);
    StabilizerDescription d;
    d.dimension = dimension;
    d.component_group = group_type(elems);
    const bool rational = std::all_of(elems.begin(), elems.end(), [](const auto& h) {
        const auto& m = h.matrix();
        return m(0, 0).is_rational() && m(0, 1).is_rational() && m(1, 0).is_rational() && m(1, 1).is_rational();
    });
    if (rational) {
        for (const auto& h : elems) {
            const auto& m = h.matrix();
            d.elements.emplace_back(m(0, 0).rational_part(), m(0, 1).rational_part(), m(1, 0).rational_part(),
                                    m(1, 1).rational_part());
        }
    } else {
        d.radicand = radicand;
        d.extension_elements = std::move(elems);
    }
    return d;
}

struct Frame {
    W w1, w2;
};

// Exponents (e1, e2) with h.f = mu1^e1 mu2^e2 f for h diagonal in the frame.
std::array<long, 2> character(const BinaryCubic& r, const Frame& f) {
    std::array<long, 2> e{-1, -1};
    for (const auto& [l, m] : rational_lines(r).lines) {
        if (l == Line::from_form(f.w1)) e[0] += m;
        else if (l == Line::from_form(f.w2)) e[1] += m;
        else throw InconsistentSystem("line of r is not an eigenline of the frame");
    }
    return e;
}

std::array<long, 2> character(const DualCubic& s, const Frame& f) {
    std::array<long, 2> e{1, 1};
    const Line l1 = Line::from_form(f.w1), l2 = Line::from_form(f.w2);
    for (const auto& [v, m] : rational_lines(s).lines) {
        if (perpendicular(v, l1)) e[1] -= m;
        else if (perpendicular(v, l2)) e[0] -= m;
        else throw InconsistentSystem("line of s is not an eigenline of the dual frame");
    }
    return e;
}

long gcd_abs(long a, long b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Elements of order dividing 2 that are diagonal in the frame and fix the given forms.
std::vector<GroupElement> frame_involutions(const Frame& f, const std::optional<BinaryCubic>& r,
                                            const std::optional<DualCubic>& s) {
    Matrix2<Rational> p;
    p << f.w1, f.w2;
    const Matrix2<Rational> pinv = invert(p);
    std::vector<GroupElement> out;
    for (int a : {1, -1})
        for (int b : {1, -1}) {
            Matrix2<Rational> d = Matrix2<Rational>::Zero();
            d(0, 0) = a;
            d(1, 1) = b;
            const GroupElement h(Matrix2<Rational>(p * d * pinv));
            if (r && !(act(h, *r) == *r)) continue;
            if (s && !(act_dual(h, *s) == *s)) continue;
            out.push_back(h);
        }
    return out;
}

StabilizerDescription finish(int dimension, std::vector<GroupElement> elems, size_t expected_order) {
    if (elems.size() != expected_order)
        throw IrrationalSplitting("finite stabilizer has elements outside the rationals");
    check_closed(elems);
    StabilizerDescription d;
    d.dimension = dimension;
    d.component_group = group_type(elems);
    d.elements = std::move(elems);
    return d;
}

}  // namespace

std::string name(ComponentGroup g) {
    constexpr const char* names[] = {"Trivial", "S2", "S3"};
    return names[static_cast<int>(g)];
}

int order(ComponentGroup g) {
    constexpr int orders[] = {1, 2, 6};
    return orders[static_cast<int>(g)];
}

std::array<BinaryCubic, 4> canonical_representatives() {
    return {BinaryCubic(), BinaryCubic(1, 0, 0, 0), BinaryCubic(0, 1, 0, 0), BinaryCubic(1, 0, 1, 0)};
}

std::array<BinaryCubic, 4> rational_split_representatives() {
    return {BinaryCubic(), BinaryCubic(1, 0, 0, 0), BinaryCubic(0, 1, 0, 0), xy_x_plus_y()};
}

std::array<ConormalPoint, 4> canonical_regular_points() {
    return {ConormalPoint{BinaryCubic(), DualCubic(xy_x_plus_y().coeffs())},
            ConormalPoint{BinaryCubic(1, 0, 0, 0), DualCubic(0, 0, -kThird, 0)},
            ConormalPoint{BinaryCubic(0, 1, 0, 0), DualCubic(0, 0, 0, 1)},
            ConormalPoint{BinaryCubic(1, 0, 1, 0), DualCubic()}};
}

std::array<ConormalPoint, 4> rational_split_regular_points() {
    auto p = canonical_regular_points();
    p[3].r = xy_x_plus_y();
    return p;
}

int orbit_dimension(const BinaryCubic& r) {
    Matrix4<Rational> t;
    const auto basis = gl2_basis();
    for (int k = 0; k < 4; ++k) t.col(k) = tangent(r, basis[k]);
    return static_cast<int>(rank(t));
}

int orbit_dimension(const ConormalPoint& p) {
    Eigen::Matrix<Rational, 8, 4> t;
    const auto basis = gl2_basis();
    for (int k = 0; k < 4; ++k) {
        t.block<4, 1>(0, k) = tangent(p.r, basis[k]);
        t.block<4, 1>(4, k) = tangent(p.s, basis[k]);
    }
    return static_cast<int>(rank(t));
}

StabilizerDescription stabilizer_of_cubic(const BinaryCubic& r) {
    const int dim = 4 - orbit_dimension(r);
    switch (classify(r)) {
    case OrbitClass::C0:
        // GL2 itself, which is connected.
        return finish(dim, {GroupElement::identity()}, 1);
    case OrbitClass::C1:
    case OrbitClass::C2: {
        const auto rl = rational_lines(r);
        if (rl.residual_degree != 0) throw IrrationalSplitting("cubic does not split over the rationals");
        // The stabilizer is (kernel of a torus character) x unipotent; its component group is
        // cyclic of order gcd of the character's exponents.
        auto lines = rl.lines;
        std::stable_sort(lines.begin(), lines.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
        const W w1 = lines[0].first.form();
        const W w2 = lines.size() > 1 ? lines[1].first.form() : W(w1(1), -w1(0));
        const Frame f{w1, w2};
        const auto e = character(r, f);
        const long ord = gcd_abs(e[0], e[1]);
        return finish(dim, {GroupElement::identity()}, static_cast<size_t>(ord));
    }
    case OrbitClass::C3: {
        const auto lines = three_lines(r);
        return finish_finite(dim, primal_permutations(r, lines), lines.radicand);
    }
    }
    throw InconsistentSystem("unreachable orbit class");
}

StabilizerDescription microlocal_stabilizer(const ConormalPoint& p) {
    const auto stratum = in_lambda_regular(p);
    if (!stratum) throw NotRegularConormal("point is not in a regular conormal stratum");
    const int dim = 4 - orbit_dimension(p);
    switch (*stratum) {
    case 0: {
        const auto lines = three_lines(p.s);
        return finish_finite(dim, dual_permutations(p.s, lines), lines.radicand);
    }
    case 3: {
        const auto lines = three_lines(p.r);
        return finish_finite(dim, primal_permutations(p.r, lines), lines.radicand);
    }
    default:
        break;
    }
    // Strata 1 and 2: the stabilizer is diagonal in the frame of its two fixed lines.
    const auto rl = rational_lines(p.r);
    const auto sl = rational_lines(p.s);
    if (rl.residual_degree != 0 || sl.residual_degree != 0)
        throw IrrationalSplitting("conormal point does not split over the rationals");
    Frame f;
    if (*stratum == 2) {
        const auto& a = rl.lines[0];
        const auto& b = rl.lines[1];
        f = a.second == 2 ? Frame{a.first.form(), b.first.form()} : Frame{b.first.form(), a.first.form()};
    } else {
        const auto& simple = sl.lines[0].second == 1 ? sl.lines[0].first : sl.lines[1].first;
        f = Frame{rl.lines[0].first.form(), perpendicular_line(simple).form()};
    }
    const auto er = character(p.r, f);
    const auto es = character(p.s, f);
    const long det = er[0] * es[1] - er[1] * es[0];
    if (det == 0) throw InconsistentSystem("microlocal stabilizer is not finite");
    auto elems = frame_involutions(f, p.r, p.s);
    return finish(dim, std::move(elems), static_cast<size_t>(det < 0 ? -det : det));
}

bool stabilizes(const StabilizerDescription& st, const ConormalPoint& p) {
    for (const auto& h : st.elements)
        if (!(act(h, p.r) == p.r) || !(act_dual(h, p.s) == p.s)) return false;
    const BinaryCubicT<K> rk(p.r.coeffs().cast<K>());
    const DualCubicT<K> sk(p.s.coeffs().cast<K>());
    for (const auto& h : st.extension_elements)
        if (!(act(h, rk) == rk) || !(act_dual(h, sk) == sk)) return false;
    return true;
}

}  // namespace g2sub
