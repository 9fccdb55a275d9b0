#pragma once

#include "g2sub/cubic_forms.hpp"
#include "g2sub/quadratic_field.hpp"

#include <optional>
#include <vector>

namespace g2sub {

template <class Scalar>
Scalar pairing(const BinaryCubicT<Scalar>& r, const DualCubicT<Scalar>& s) {
    const Scalar three(3);
    return r[0] * s[0] + three * r[1] * s[1] + three * r[2] * s[2] + r[3] * s[3];
}

// s = (v1 y + v2 x)(v3 y + v4 x)(v5 y + v6 x); (1/6) (v1,v2) Hess(r)|(y=v3,x=v4) (v5,v6)^T,
// with the Hessian in (y, x) order.
template <class Scalar>
Scalar pairing_factored(const BinaryCubicT<Scalar>& r, const std::array<Scalar, 6>& v) {
    const auto& [r0, r1, r2, r3] = std::array<Scalar, 4>{r[0], r[1], r[2], r[3]};
    const Scalar y = v[2], x = v[3];
    const Scalar r_yy = Scalar(6) * r0 * y - Scalar(6) * r1 * x;
    const Scalar r_xy = Scalar(-6) * r1 * y - Scalar(6) * r2 * x;
    const Scalar r_xx = Scalar(-6) * r2 * y - Scalar(6) * r3 * x;
    return (v[0] * (r_yy * v[4] + r_xy * v[5]) + v[1] * (r_xy * v[4] + r_xx * v[5])) / Scalar(6);
}

template <class Scalar>
DualCubicT<Scalar> dual_from_factors(const std::array<Scalar, 6>& v) {
    using W = Eigen::Matrix<Scalar, 2, 1>;
    return cubic_from_forms<Scalar, DualSide>({W(v[1], v[0]), W(v[3], v[2]), W(v[5], v[4])});
}

template <class Scalar>
Matrix2<Scalar> moment(const BinaryCubicT<Scalar>& r, const DualCubicT<Scalar>& s) {
    const Scalar two(2);
    Matrix2<Scalar> m;
    m << r[0] * s[0] + two * r[1] * s[1] + r[2] * s[2], -r[1] * s[0] + two * r[2] * s[1] + r[3] * s[2],
        -r[0] * s[1] + two * r[1] * s[2] + r[2] * s[3], r[1] * s[1] + two * r[2] * s[2] + r[3] * s[3];
    return m;
}

// The 4x4 matrix of s -> moment(r, s), entries flattened row-major.
template <class Scalar>
Matrix4<Scalar> moment_operator(const BinaryCubicT<Scalar>& r) {
    Matrix4<Scalar> m;
    for (int j = 0; j < 4; ++j) {
        Vector4<Scalar> e = Vector4<Scalar>::Zero();
        e(j) = Scalar(1);
        const auto mm = moment(r, DualCubicT<Scalar>(e));
        m(0, j) = mm(0, 0);
        m(1, j) = mm(0, 1);
        m(2, j) = mm(1, 0);
        m(3, j) = mm(1, 1);
    }
    return m;
}

template <class Scalar>
std::vector<DualCubicT<Scalar>> conormal_kernel(const BinaryCubicT<Scalar>& r) {
    std::vector<DualCubicT<Scalar>> out;
    for (const auto& v : kernel_basis(moment_operator(r))) out.emplace_back(Vector4<Scalar>(v));
    return out;
}

template <class Scalar>
struct ConormalPointT {
    BinaryCubicT<Scalar> r;
    DualCubicT<Scalar> s;
};
using ConormalPoint = ConormalPointT<Rational>;

inline MultiplicityStructure dual_orbit_class(int i) {
    constexpr MultiplicityStructure table[] = {MultiplicityStructure::ThreeDistinct,
                                               MultiplicityStructure::DoublePlusSimple,
                                               MultiplicityStructure::TripleLine, MultiplicityStructure::Zero};
    return table[i];
}

template <class Scalar>
std::optional<int> in_lambda_regular(const ConormalPointT<Scalar>& p) {
    const int i = index(classify(p.r));
    if (multiplicity_structure(dual_classify(p.s)) != dual_orbit_class(i)) return std::nullopt;
    if (!is_zero(moment(p.r, p.s))) return std::nullopt;
    return i;
}

// Pairs used as base points of the regular strata.
std::array<ConormalPoint, 4> canonical_regular_points();
// Same strata, with every nonzero side split over the rationals.
std::array<ConormalPoint, 4> rational_split_regular_points();
// Orbit representatives split over the rationals (xy(x+y) for C3).
std::array<BinaryCubic, 4> rational_split_representatives();
// 0, y^3, -3xy^2, y(y^2 - 3x^2).
std::array<BinaryCubic, 4> canonical_representatives();

enum class ComponentGroup { Trivial, S2, S3 };
std::string name(ComponentGroup g);
int order(ComponentGroup g);

// The finite part is listed over Q when possible. Otherwise radicand = d != 1 and the
// elements have entries in Q(sqrt d).
struct StabilizerDescription {
    int dimension = 0;
    ComponentGroup component_group = ComponentGroup::Trivial;
    std::vector<GroupElement> elements;
    Integer radicand = 1;
    std::vector<GroupElementT<QuadraticNumber>> extension_elements;

    size_t order() const { return radicand == 1 ? elements.size() : extension_elements.size(); }
};

// Dimension of the GL2-orbit through r (rank of the infinitesimal action).
int orbit_dimension(const BinaryCubic& r);
int orbit_dimension(const ConormalPoint& p);

StabilizerDescription stabilizer_of_cubic(const BinaryCubic& r);
StabilizerDescription microlocal_stabilizer(const ConormalPoint& p);

// Every listed element fixes both r and s.
bool stabilizes(const StabilizerDescription& st, const ConormalPoint& p);

}  // namespace g2sub
