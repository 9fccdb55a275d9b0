#include "g2sub/conormal.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace g2sub;
using g2test::Gen;

namespace {

const BinaryCubic kC1(1, 0, 0, 0);
const BinaryCubic kC2(0, 1, 0, 0);
const BinaryCubic kC3(1, 0, 1, 0);
const BinaryCubic kSplit(0, Rational(-1, 3), Rational(-1, 3), 0);

bool in_span(const std::vector<DualCubic>& basis, const DualCubic& s) {
    MatrixQ m(4, static_cast<Eigen::Index>(basis.size()));
    for (size_t j = 0; j < basis.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = basis[j].coeffs();
    return basis.empty() ? s.is_zero() : solve(m, VectorQ(s.coeffs())).has_value();
}

}  // namespace

TEST(Pairing, Examples) {
    EXPECT_EQ(pairing(BinaryCubic(), DualCubic()), 0);
    EXPECT_EQ(pairing(kC1, DualCubic(5, 7, 0, 0)), 5);
    EXPECT_EQ(pairing(kC3, DualCubic(0, 1, 0, 1)), 0);
    using V = std::array<Rational, 6>;
    EXPECT_EQ(pairing_factored(kC1, V{1, 0, 1, 0, 1, 0}), 1);
    EXPECT_EQ(pairing_factored(kC3, V{0, 0, 1, 2, 3, 4}), 0);
}

TEST(Pairing, InvariantUnderTheAction) {
    Gen g(20);
    for (int t = 0; t < 1000; ++t) {
        const GroupElement h = g.group();
        const BinaryCubic r = g.cubic();
        const DualCubic s = g.dual();
        EXPECT_EQ(pairing(act(h, r), act_dual(h, s)), pairing(r, s));
    }
}

TEST(Pairing, HessianFormulaMatchesCoordinates) {
    Gen g(21);
    for (int t = 0; t < 500; ++t) {
        const BinaryCubic r = g.cubic();
        std::array<Rational, 6> v;
        for (auto& x : v) x = g.rational();
        EXPECT_EQ(pairing_factored(r, v), pairing(r, dual_from_factors(v)));
    }
}

TEST(Moment, Examples) {
    EXPECT_TRUE(is_zero(moment(BinaryCubic(), DualCubic(1, 2, 3, 4))));
    EXPECT_TRUE(is_zero(moment(kC3, DualCubic())));
    Matrix2<Rational> expected;
    expected << 5, 0, -7, 0;
    EXPECT_EQ(moment(kC1, DualCubic(5, 7, 0, 0)), expected);
    EXPECT_TRUE(is_zero(moment(kC2, DualCubic(0, 0, 0, 1))));
}

TEST(Moment, TraceIsThePairing) {
    Gen g(22);
    for (int t = 0; t < 1000; ++t) {
        const BinaryCubic r = g.cubic();
        const DualCubic s = g.dual();
        EXPECT_EQ(moment(r, s).trace(), pairing(r, s));
    }
}

TEST(ConormalKernel, Examples) {
    EXPECT_TRUE(conormal_kernel(kC3).empty());
    const auto k2 = conormal_kernel(kC2);
    ASSERT_EQ(k2.size(), 1u);
    EXPECT_TRUE(in_span(k2, DualCubic(0, 0, 0, 1)));
    const auto k1 = conormal_kernel(kC1);
    ASSERT_EQ(k1.size(), 2u);
    EXPECT_TRUE(in_span(k1, DualCubic(0, 0, 1, 0)));
    EXPECT_TRUE(in_span(k1, DualCubic(0, 0, 0, 1)));
    EXPECT_EQ(conormal_kernel(BinaryCubic()).size(), 4u);
}

TEST(ConormalKernel, DimensionComplementsTheOrbit) {
    Gen g(23);
    for (int t = 0; t < 400; ++t) {
        BinaryCubic r = g.small_cubic();
        if (t % 4 == 1) r = g.split_cubic(1, 3);
        if (t % 4 == 2) r = g.split_cubic(2, 2);
        if (t % 4 == 3 && t % 8 == 3) r = BinaryCubic();
        EXPECT_EQ(static_cast<int>(conormal_kernel(r).size()) + dimension(classify(r)), 4);
        EXPECT_EQ(orbit_dimension(r), dimension(classify(r)));
    }
}

TEST(ConormalKernel, StableUnderTheAction) {
    Gen g(24);
    for (int t = 0; t < 300; ++t) {
        const GroupElement h = g.group();
        const BinaryCubic r = t % 2 ? g.split_cubic(2, 2) : g.split_cubic(1, 3);
        const auto k = conormal_kernel(r);
        const auto hk = conormal_kernel(act(h, r));
        ASSERT_EQ(k.size(), hk.size());
        for (const auto& s : k) EXPECT_TRUE(in_span(hk, act_dual(h, s)));
        // A vector outside the kernel stays outside.
        const DualCubic off = g.dual();
        EXPECT_EQ(in_span(k, off), in_span(hk, act_dual(h, off)));
    }
}

TEST(ConormalKernel, TypingOfKernelElements) {
    Gen g(25);
    for (int t = 0; t < 200; ++t) {
        // C2: r = u^2 u', every s in the kernel is v^3 with v perpendicular to u.
        const Line u = g.line();
        Line u2 = g.line();
        while (u2 == u) u2 = g.line();
        const BinaryCubic r2 = cubic_from_forms<Rational, PrimalSide>({u.form(), u.form(), u2.form()});
        const Line v = perpendicular_line(u);
        for (const auto& s : conormal_kernel(r2)) EXPECT_EQ(divides(v, s), 3);

        // C1: r = u^3, every s in the kernel is divisible by v^2 with v perpendicular to u.
        const BinaryCubic r1 = cubic_from_forms<Rational, PrimalSide>({u.form(), u.form(), u.form()});
        for (const auto& s : conormal_kernel(r1)) EXPECT_GE(divides(v, s), 2);
    }
}

TEST(LambdaRegular, Examples) {
    EXPECT_EQ(in_lambda_regular(ConormalPoint{kC3, DualCubic()}), 3);
    EXPECT_EQ(in_lambda_regular(ConormalPoint{kC2, DualCubic(0, 0, 0, 1)}), 2);
    EXPECT_FALSE(in_lambda_regular(ConormalPoint{kC3, DualCubic(0, 1, 0, 1)}).has_value());
    EXPECT_EQ(dual_orbit_class(3), MultiplicityStructure::Zero);
    EXPECT_EQ(dual_orbit_class(2), MultiplicityStructure::TripleLine);
    EXPECT_EQ(dual_orbit_class(0), MultiplicityStructure::ThreeDistinct);
}

TEST(LambdaRegular, CanonicalPointsSitInTheirStrata) {
    for (const auto& pts : {canonical_regular_points(), rational_split_regular_points()})
        for (int i = 0; i < 4; ++i) {
            EXPECT_EQ(in_lambda_regular(pts[static_cast<size_t>(i)]), i);
            EXPECT_EQ(orbit_dimension(pts[static_cast<size_t>(i)]), 4);
        }
}

TEST(Stabilizer, Examples) {
    const auto s1 = stabilizer_of_cubic(kC1);
    EXPECT_EQ(s1.dimension, 2);
    EXPECT_EQ(s1.component_group, ComponentGroup::Trivial);
    const auto s2 = stabilizer_of_cubic(kC2);
    EXPECT_EQ(s2.dimension, 1);
    EXPECT_EQ(s2.component_group, ComponentGroup::Trivial);
    const auto s0 = stabilizer_of_cubic(BinaryCubic());
    EXPECT_EQ(s0.dimension, 4);
    EXPECT_EQ(s0.component_group, ComponentGroup::Trivial);

    const auto s3 = stabilizer_of_cubic(kSplit);
    EXPECT_EQ(s3.dimension, 0);
    EXPECT_EQ(s3.component_group, ComponentGroup::S3);
    ASSERT_EQ(s3.elements.size(), 6u);
    const GroupElement swap = Rational(-1) * GroupElement(0, 1, 1, 0);
    EXPECT_NE(std::find(s3.elements.begin(), s3.elements.end(), swap), s3.elements.end());
    for (const auto& h : s3.elements) EXPECT_TRUE(g2test::matches_substitution(h, kSplit, kSplit));
}

TEST(Stabilizer, CanonicalC3NeedsSqrt3) {
    const auto st = stabilizer_of_cubic(kC3);
    EXPECT_EQ(st.component_group, ComponentGroup::S3);
    EXPECT_EQ(st.radicand, 3);
    ASSERT_EQ(st.order(), 6u);
    EXPECT_TRUE(stabilizes(st, ConormalPoint{kC3, DualCubic()}));
    // Rotation by 2pi/3 and the reflection diag(1,-1).
    using K = QuadraticNumber;
    const K half(Rational(1, 2)), root = K(0, Rational(1, 2), 3);
    const GroupElementT<K> rotation(-half, -root, root, -half), reflection(K(1), K(0), K(0), K(-1));
    const auto& e = st.extension_elements;
    EXPECT_NE(std::find(e.begin(), e.end(), rotation), e.end());
    EXPECT_NE(std::find(e.begin(), e.end(), reflection), e.end());
}

TEST(Stabilizer, OneRationalLineAndAConjugatePair) {
    // (y - t x)(y^2 + p xy + q x^2) with p^2 - 4q not a square, real and imaginary fields alike.
    using K = QuadraticNumber;
    Gen g(27);
    int imaginary = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const Rational t = g.rational(), p = g.rational(), q = g.rational();
        const Rational disc = p * p - 4 * q;
        if (disc == 0 || split_square(disc).second == 1) continue;
        imaginary += disc < 0;
        const BinaryCubic r(1, (t - p) / 3, (t * p - q) / 3, t * q);
        const auto st = stabilizer_of_cubic(r);
        EXPECT_EQ(classify(r), OrbitClass::C3);
        EXPECT_EQ(st.component_group, ComponentGroup::S3);
        EXPECT_EQ(st.radicand, split_square(disc).second);
        ASSERT_EQ(st.order(), 6u);
        EXPECT_EQ(st.extension_elements.size(), 6u);
        auto f = [&](const K& x, const K& y) {
            return K(r[0]) * y * y * y - K(3 * r[1]) * y * y * x - K(3 * r[2]) * y * x * x - K(r[3]) * x * x * x;
        };
        for (const auto& h : st.extension_elements)
            for (const auto& [x, y] : g2test::probe_points()) {
                const K kx(x), ky(y);
                EXPECT_EQ(f(h.a() * kx + h.c() * ky, h.b() * kx + h.d() * ky) / h.det(), f(kx, ky));
            }
    }
    EXPECT_GT(imaginary, 0);
}

TEST(Stabilizer, IrreducibleCubicIsReported) {
    // y^3 - 2 x^3 has no rational line.
    EXPECT_THROW(stabilizer_of_cubic(BinaryCubic(1, 0, 0, 2)), IrrationalSplitting);
}

TEST(Stabilizer, ConjugateCubicsHaveConjugateStabilizers) {
    Gen g(26);
    for (int t = 0; t < 100; ++t) {
        const GroupElement h = g.group();
        const BinaryCubic r = act(h, kSplit);
        const auto st = stabilizer_of_cubic(r);
        ASSERT_EQ(st.elements.size(), 6u);
        for (const auto& x : st.elements) {
            EXPECT_EQ(act(x, r), r);
            const GroupElement back = h.inverse() * x * h;
            EXPECT_EQ(act(back, kSplit), kSplit);
        }
    }
}

TEST(MicrolocalStabilizer, Examples) {
    const auto st2 = microlocal_stabilizer(ConormalPoint{kC2, DualCubic(0, 0, 0, 1)});
    ASSERT_EQ(st2.elements.size(), 2u);
    EXPECT_EQ(st2.component_group, ComponentGroup::S2);
    EXPECT_EQ(st2.elements[0], GroupElement::identity());
    EXPECT_EQ(st2.elements[1], GroupElement(-1, 0, 0, 1));

    const auto st3 = microlocal_stabilizer(ConormalPoint{kSplit, DualCubic()});
    EXPECT_EQ(st3.component_group, ComponentGroup::S3);
    EXPECT_EQ(st3.order(), 6u);

    const auto st0 = microlocal_stabilizer(ConormalPoint{BinaryCubic(), DualCubic(kSplit.coeffs())});
    EXPECT_EQ(st0.component_group, ComponentGroup::S3);
    EXPECT_EQ(st0.order(), 6u);

    EXPECT_THROW(microlocal_stabilizer(ConormalPoint{kC3, DualCubic(0, 1, 0, 1)}), NotRegularConormal);
}

TEST(MicrolocalStabilizer, OrdersOnRegularStrata) {
    const size_t orders[] = {6, 2, 2, 6};
    for (const auto& pts : {canonical_regular_points(), rational_split_regular_points()})
        for (size_t i = 0; i < 4; ++i) {
            const auto st = microlocal_stabilizer(pts[i]);
            EXPECT_EQ(st.order(), orders[i]) << "stratum " << i;
            EXPECT_EQ(st.dimension, 0);
            EXPECT_TRUE(stabilizes(st, pts[i]));
        }
}

TEST(MicrolocalStabilizer, TransportsAlongTheAction) {
    Gen g(27);
    for (int t = 0; t < 100; ++t) {
        const GroupElement h = g.group();
        for (const auto& p : rational_split_regular_points()) {
            const ConormalPoint hp{act(h, p.r), act_dual(h, p.s)};
            const auto st = microlocal_stabilizer(hp);
            EXPECT_EQ(st.order(), microlocal_stabilizer(p).order());
            EXPECT_TRUE(stabilizes(st, hp));
        }
    }
}
