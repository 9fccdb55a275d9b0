#pragma once

#include "g2sub/errors.hpp"
#include "g2sub/linalg.hpp"
#include "g2sub/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace g2sub {

struct PrimalSide {};
struct DualSide {};

// Coefficients (c0,c1,c2,c3) of c0 y^3 - 3 c1 y^2 x - 3 c2 y x^2 - c3 x^3.
// The side tag keeps V and its dual apart.
template <class Scalar, class Side>
class CubicForm {
public:
    using Vector = Vector4<Scalar>;

    CubicForm() : c_(Vector::Zero()) {}
    CubicForm(Scalar c0, Scalar c1, Scalar c2, Scalar c3) { c_ << c0, c1, c2, c3; }
    explicit CubicForm(const Vector& c) : c_(c) {}

    const Vector& coeffs() const { return c_; }
    const Scalar& operator[](int i) const { return c_(i); }
    bool is_zero() const { return g2sub::is_zero(c_); }

    // Coefficients of y^(3-k) x^k.
    std::array<Scalar, 4> monomials() const {
        return {c_(0), Scalar(-3) * c_(1), Scalar(-3) * c_(2), -c_(3)};
    }
    static CubicForm from_monomials(const std::array<Scalar, 4>& m) {
        return CubicForm(m[0], -m[1] / Scalar(3), -m[2] / Scalar(3), -m[3]);
    }

    friend bool operator==(const CubicForm& a, const CubicForm& b) { return a.c_ == b.c_; }
    friend CubicForm operator+(const CubicForm& a, const CubicForm& b) { return CubicForm(Vector(a.c_ + b.c_)); }
    friend CubicForm operator*(const Scalar& s, const CubicForm& a) { return CubicForm(Vector(s * a.c_)); }

private:
    Vector c_;
};

template <class Scalar>
using BinaryCubicT = CubicForm<Scalar, PrimalSide>;
template <class Scalar>
using DualCubicT = CubicForm<Scalar, DualSide>;
using BinaryCubic = BinaryCubicT<Rational>;
using DualCubic = DualCubicT<Rational>;

// [[a,b],[c,d]] with nonzero determinant.
template <class Scalar>
class GroupElementT {
public:
    GroupElementT(Scalar a, Scalar b, Scalar c, Scalar d) {
        m_ << a, b, c, d;
        check();
    }
    explicit GroupElementT(const Matrix2<Scalar>& m) : m_(m) { check(); }
    static GroupElementT identity() { return GroupElementT(Matrix2<Scalar>::Identity()); }

    const Matrix2<Scalar>& matrix() const { return m_; }
    Scalar a() const { return m_(0, 0); }
    Scalar b() const { return m_(0, 1); }
    Scalar c() const { return m_(1, 0); }
    Scalar d() const { return m_(1, 1); }
    Scalar det() const { return a() * d() - b() * c(); }

    GroupElementT inverse() const {
        const Scalar k = Scalar(1) / det();
        return GroupElementT(k * d(), -k * b(), -k * c(), k * a());
    }
    GroupElementT transpose() const { return GroupElementT(a(), c(), b(), d()); }

    friend GroupElementT operator*(const GroupElementT& g, const GroupElementT& h) {
        return GroupElementT(Matrix2<Scalar>(g.m_ * h.m_));
    }
    friend GroupElementT operator*(const Scalar& s, const GroupElementT& g) {
        return GroupElementT(Matrix2<Scalar>(s * g.m_));
    }
    friend bool operator==(const GroupElementT& g, const GroupElementT& h) { return g.m_ == h.m_; }

private:
    void check() const {
        if (det() == Scalar(0)) throw SingularGroupElement("group element has zero determinant");
    }
    Matrix2<Scalar> m_;
};

using GroupElement = GroupElementT<Rational>;

// Projective point [u1:u2], the linear form u1 y - u2 x.
template <class Scalar>
class LineT {
public:
    LineT(Scalar u1, Scalar u2) {
        if (u1 != Scalar(0)) {
            u2 /= u1;
            u1 = Scalar(1);
        } else if (u2 != Scalar(0)) {
            u2 = Scalar(1);
        } else {
            throw std::invalid_argument("line [0:0] is not a projective point");
        }
        u1_ = u1;
        u2_ = u2;
    }
    // Line of the form with coefficient vector w = (coef of x, coef of y).
    static LineT from_form(const Eigen::Matrix<Scalar, 2, 1>& w) { return LineT(w(1), -w(0)); }

    const Scalar& u1() const { return u1_; }
    const Scalar& u2() const { return u2_; }
    Eigen::Matrix<Scalar, 2, 1> form() const {
        Eigen::Matrix<Scalar, 2, 1> w;
        w << -u2_, u1_;
        return w;
    }
    friend bool operator==(const LineT& a, const LineT& b) { return a.u1_ == b.u1_ && a.u2_ == b.u2_; }
    friend bool operator<(const LineT& a, const LineT& b) {
        return a.u1_ != b.u1_ ? a.u1_ < b.u1_ : a.u2_ < b.u2_;
    }

private:
    Scalar u1_, u2_;
};

using Line = LineT<Rational>;

template <class Scalar>
bool perpendicular(const LineT<Scalar>& u, const LineT<Scalar>& v) {
    return u.u1() * v.u1() + u.u2() * v.u2() == Scalar(0);
}

// The line v with u . v = 0.
template <class Scalar>
LineT<Scalar> perpendicular_line(const LineT<Scalar>& u) {
    return LineT<Scalar>(-u.u2(), u.u1());
}

enum class OrbitClass { C0, C1, C2, C3 };
enum class MultiplicityStructure { Zero, TripleLine, DoublePlusSimple, ThreeDistinct };

constexpr std::array<OrbitClass, 4> kOrbits{OrbitClass::C0, OrbitClass::C1, OrbitClass::C2, OrbitClass::C3};

inline int index(OrbitClass o) { return static_cast<int>(o); }
inline int dimension(OrbitClass o) {
    constexpr int dims[] = {0, 2, 3, 4};
    return dims[index(o)];
}
inline MultiplicityStructure multiplicity_structure(OrbitClass o) {
    return static_cast<MultiplicityStructure>(index(o));
}
inline OrbitClass orbit_of(MultiplicityStructure m) { return static_cast<OrbitClass>(static_cast<int>(m)); }
std::string name(OrbitClass o);
std::string name(MultiplicityStructure m);

// Substitute (x,y) -> (x,y)h, i.e. x -> a x + c y, y -> b x + d y, in y^(3-k) x^k form.
template <class Scalar>
std::array<Scalar, 4> substitute(const std::array<Scalar, 4>& m, const Matrix2<Scalar>& h) {
    const Scalar a = h(0, 0), b = h(0, 1), c = h(1, 0), d = h(1, 1);
    // Linear forms as (coef of y, coef of x).
    const std::array<Scalar, 2> X{c, a}, Y{d, b};
    auto mul = [](const std::vector<Scalar>& p, const std::array<Scalar, 2>& l) {
        std::vector<Scalar> out(p.size() + 1, Scalar(0));
        for (size_t i = 0; i < p.size(); ++i) {
            out[i] += p[i] * l[0];
            out[i + 1] += p[i] * l[1];
        }
        return out;
    };
    std::array<Scalar, 4> out{Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
    for (int k = 0; k < 4; ++k) {
        if (m[static_cast<size_t>(k)] == Scalar(0)) continue;
        std::vector<Scalar> p{m[static_cast<size_t>(k)]};
        for (int i = 0; i < 3 - k; ++i) p = mul(p, Y);
        for (int i = 0; i < k; ++i) p = mul(p, X);
        for (size_t j = 0; j < 4; ++j) out[j] += p[j];
    }
    return out;
}

template <class Scalar, class Side>
Scalar evaluate(const CubicForm<Scalar, Side>& r, const Scalar& x, const Scalar& y) {
    return r[0] * y * y * y - Scalar(3) * r[1] * y * y * x - Scalar(3) * r[2] * y * x * x - r[3] * x * x * x;
}

// (h.r)(x,y) = det(h)^-1 r((x,y)h)
template <class Scalar>
BinaryCubicT<Scalar> act(const GroupElementT<Scalar>& h, const BinaryCubicT<Scalar>& r) {
    auto m = substitute(r.monomials(), h.matrix());
    const Scalar k = Scalar(1) / h.det();
    for (auto& x : m) x *= k;
    return BinaryCubicT<Scalar>::from_monomials(m);
}

// (h.s)(x,y) = det(h) s((x,y) h^-T)
template <class Scalar>
DualCubicT<Scalar> act_dual(const GroupElementT<Scalar>& h, const DualCubicT<Scalar>& s) {
    auto m = substitute(s.monomials(), h.inverse().transpose().matrix());
    const Scalar k = h.det();
    for (auto& x : m) x *= k;
    return DualCubicT<Scalar>::from_monomials(m);
}

template <class Scalar>
Matrix4<Scalar> act_matrix(const GroupElementT<Scalar>& h) {
    const Scalar a = h.a(), b = h.b(), c = h.c(), d = h.d();
    const Scalar three(3), two(2);
    Matrix4<Scalar> p;
    p << d * d * d, -three * c * d * d, -three * c * c * d, -c * c * c,
        -b * d * d, d * (a * d + two * b * c), c * (two * a * d + b * c), a * c * c,
        -b * b * d, b * (two * a * d + b * c), a * (a * d + two * b * c), a * a * c,
        -b * b * b, three * a * b * b, three * a * a * b, a * a * a;
    return Matrix4<Scalar>(p / h.det());
}

template <class Scalar>
std::array<Scalar, 3> hessian_quadratic(const BinaryCubicT<Scalar>& r) {
    const Scalar nine(9);
    return {-nine * (r[2] * r[0] + r[1] * r[1]), -nine * (r[0] * r[3] + r[1] * r[2]),
            nine * (r[1] * r[3] - r[2] * r[2])};
}

template <class Scalar>
Scalar discriminant(const BinaryCubicT<Scalar>& r) {
    const auto d = hessian_quadratic(r);
    return d[1] * d[1] - Scalar(4) * d[0] * d[2];
}

template <class Scalar>
OrbitClass classify(const BinaryCubicT<Scalar>& r) {
    if (r.is_zero()) return OrbitClass::C0;
    const auto d = hessian_quadratic(r);
    if (d[0] == Scalar(0) && d[1] == Scalar(0) && d[2] == Scalar(0)) return OrbitClass::C1;
    return discriminant(r) == Scalar(0) ? OrbitClass::C2 : OrbitClass::C3;
}

// The same invariants read off the coefficients of s.
template <class Scalar>
OrbitClass dual_classify(const DualCubicT<Scalar>& s) {
    return classify(BinaryCubicT<Scalar>(s.coeffs()));
}

template <class Scalar>
MultiplicityStructure multiplicity_structure(const BinaryCubicT<Scalar>& r) {
    return multiplicity_structure(classify(r));
}

namespace detail {

// Exact division of a homogeneous form (y^(n-k) x^k coefficients) by l = ly y + lx x.
template <class Scalar>
bool divide_linear(const std::vector<Scalar>& p, const Scalar& ly, const Scalar& lx, std::vector<Scalar>& q) {
    const size_t n = p.size() - 1;
    q.assign(n, Scalar(0));
    if (ly != Scalar(0)) {
        for (size_t k = 0; k < n; ++k) q[k] = (p[k] - (k ? q[k - 1] * lx : Scalar(0))) / ly;
        return p[n] == q[n - 1] * lx;
    }
    for (size_t k = 1; k <= n; ++k) q[k - 1] = p[k] / lx;
    return p[0] == Scalar(0);
}

}  // namespace detail

// Largest k with u^k | f; the zero form counts as 3 by convention.
template <class Scalar, class Side>
int divides(const LineT<Scalar>& u, const CubicForm<Scalar, Side>& f) {
    if (f.is_zero()) return 3;
    const auto m = f.monomials();
    std::vector<Scalar> p(m.begin(), m.end()), q;
    int k = 0;
    while (p.size() > 1 && detail::divide_linear(p, u.u1(), -u.u2(), q)) {
        ++k;
        p = q;
    }
    return k;
}

// Product of linear forms, each given by its (coef of x, coef of y) vector.
template <class Scalar, class Side>
CubicForm<Scalar, Side> cubic_from_forms(const std::array<Eigen::Matrix<Scalar, 2, 1>, 3>& w) {
    std::vector<Scalar> p{Scalar(1)};
    for (const auto& l : w) {
        std::vector<Scalar> out(p.size() + 1, Scalar(0));
        for (size_t i = 0; i < p.size(); ++i) {
            out[i] += p[i] * l(1);
            out[i + 1] += p[i] * l(0);
        }
        p = out;
    }
    return CubicForm<Scalar, Side>::from_monomials({p[0], p[1], p[2], p[3]});
}

struct RationalLines {
    std::vector<std::pair<Line, int>> lines;  // sorted, multiplicities >= 1
    int residual_degree = 0;                  // degree of the irreducible remainder, 0 or 2
};

RationalLines rational_lines(const BinaryCubic& r);
RationalLines rational_lines(const DualCubic& s);

// gcd of the dehomogenized form with its derivative (with the point at infinity
// handled by degree drop); true iff there is a repeated projective root.
bool has_repeated_root(const BinaryCubic& r);

}  // namespace g2sub
