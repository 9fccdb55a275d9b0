#include "g2sub/root_data.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace g2sub;

namespace {

Root dual(int a, int b) { return Root{a, b, Side::Dual}; }

Rational dim_sigma_oracle(long q) { return Rational(q * (q - 1) * (q - 1) * (q * q - q + 1)) / 6; }

}  // namespace

TEST(Cartan, Matrices) {
    Eigen::Matrix2i g2, d;
    g2 << 2, -1, -3, 2;
    d << 2, -3, -1, 2;
    EXPECT_EQ(cartan_matrix(Side::G2), g2);
    EXPECT_EQ(cartan_matrix(Side::Dual), d);
}

TEST(Cartan, EntriesArePairingsOfSimpleRoots) {
    const Root s[2] = {dual(1, 0), dual(0, 1)};
    const Eigen::Matrix2i c = cartan_matrix(Side::Dual);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) EXPECT_EQ(c(i, j), root_coroot_pairing(s[i], s[j]));
    EXPECT_EQ(cartan_matrix(Side::G2), Eigen::Matrix2i(c.transpose()));
    EXPECT_THROW(coroot(Root{1, 0, Side::G2}), WrongSide);
}

TEST(Roots, PositiveListAndClosure) {
    const std::vector<Root> expected{dual(1, 0), dual(0, 1), dual(1, 1), dual(1, 2), dual(1, 3), dual(2, 3)};
    auto pos = positive_roots(Side::Dual);
    std::sort(pos.begin(), pos.end());
    auto want = expected;
    std::sort(want.begin(), want.end());
    EXPECT_EQ(pos, want);
    for (Side side : {Side::G2, Side::Dual}) {
        const auto all = all_roots(side);
        EXPECT_EQ(all.size(), 12u);
        const std::set<Root> set(all.begin(), all.end());
        EXPECT_EQ(set.size(), 12u);
        for (const Root& r : all) EXPECT_TRUE(set.count(Root{-r.a, -r.b, side}));
    }
}

TEST(Roots, WeightExamples) {
    EXPECT_EQ(root_weight(dual(0, 1), kLambdaSub), 0);
    EXPECT_EQ(root_weight(dual(1, 2), kLambdaSub), 1);
    EXPECT_EQ(root_weight(dual(-1, 0), kLambdaSub), -1);
}

TEST(Roots, WeightSpacesPartitionTheRoots) {
    const std::vector<Root> plus{dual(1, 0), dual(1, 1), dual(1, 2), dual(1, 3)};
    auto w1 = weight_space(1);
    std::sort(w1.begin(), w1.end());
    EXPECT_EQ(w1, plus);
    auto wm1 = weight_space(-1);
    std::vector<Root> minus;
    for (const Root& r : plus) minus.push_back(dual(-r.a, -r.b));
    std::sort(wm1.begin(), wm1.end());
    std::sort(minus.begin(), minus.end());
    EXPECT_EQ(wm1, minus);
    EXPECT_TRUE(weight_space(5).empty());

    const size_t sizes[] = {1, 4, 2, 4, 1};
    size_t total = 0;
    for (int e = -2; e <= 2; ++e) {
        EXPECT_EQ(weight_space(e).size(), sizes[e + 2]) << "exponent " << e;
        total += weight_space(e).size();
    }
    EXPECT_EQ(total, 12u);
}

TEST(Coroots, Examples) {
    EXPECT_EQ(coroot(dual(1, 0)), std::make_pair(1, 0));
    EXPECT_EQ(coroot(dual(0, 1)), std::make_pair(0, 1));
    EXPECT_EQ(coroot(dual(1, 1)), std::make_pair(3, 1));
    EXPECT_EQ(coroot(dual(1, 2)), std::make_pair(3, 2));
    EXPECT_EQ(coroot(dual(1, 3)), std::make_pair(1, 1));
    EXPECT_EQ(coroot(dual(2, 3)), std::make_pair(2, 1));
}

TEST(Coroots, SimpleCorootsOnTheTorus) {
    // alpha^v(a) = m(1, a), beta^v(a) = m(a, 1/a)
    EXPECT_EQ(cocharacter_exponents(1, 0), (TorusExponentPair{0, 1}));
    EXPECT_EQ(cocharacter_exponents(0, 1), (TorusExponentPair{1, -1}));
}

TEST(Coroots, PairWithTheirRootToTwo) {
    for (const Root& r : positive_roots(Side::Dual)) EXPECT_EQ(root_coroot_pairing(r, r), 2);
    EXPECT_THROW(coroot(dual(-1, 0)), NonPositive);
    EXPECT_THROW(coroot(dual(2, 1)), NonPositive);
}

TEST(LambdaSub, CorootFormIsNormative) {
    const auto c = lambda_sub_self_check();
    EXPECT_TRUE(c.coroot_form_agrees);
    EXPECT_EQ(c.coroot_form, kLambdaSub);
}

TEST(FormalDegree, ClosedFormSimplifies) {
    const auto d = adjoint_gamma_data();
    EXPECT_EQ(d.dim_sigma, dim_sigma_simplified());
    const auto q = RationalFunctionQ::q();
    const auto one = RationalFunctionQ::constant(Rational(1));
    const auto expected = q * (q - one).pow(2) * (q * q - q + one) / RationalFunctionQ::constant(Rational(6));
    EXPECT_EQ(d.dim_sigma, expected);
    const auto gamma = q.pow(9) / ((q + one).pow(2) * (q * q + q + one));
    EXPECT_EQ(d.gamma0, gamma);
}

TEST(FormalDegree, Values) {
    const auto d = adjoint_gamma_data();
    EXPECT_EQ(eval_q(d.dim_sigma, Rational(2)), 1);
    EXPECT_EQ(eval_q(d.dim_sigma, Rational(3)), 14);
    EXPECT_EQ(eval_q(d.gamma0, Rational(2)), Rational(512, 63));
    for (long q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 81, 121, 125, 128}) {
        const Rational v = eval_q(d.dim_sigma, Rational(q));
        EXPECT_EQ(v, dim_sigma_oracle(q));
        EXPECT_EQ(denominator(v), 1) << "q = " << q;
        EXPECT_GT(v, 0);
    }
}

TEST(FormalDegree, GammaFactorAtZero) {
    EXPECT_EQ(adjoint_gamma(0), adjoint_gamma_data().gamma0);
}

TEST(ArthurParameters, Metadata) {
    const auto m = arthur_parameters();
    ASSERT_EQ(m.size(), 4u);
    EXPECT_EQ(m[0].component_group, GroupLabel::S3);
    EXPECT_EQ(m[0].s_psi, 1);
    EXPECT_EQ(m[1].component_group, GroupLabel::S2);
    EXPECT_EQ(m[1].s_psi, -1);
    EXPECT_EQ(m[2].component_group, GroupLabel::S2);
    EXPECT_EQ(m[3].component_group, GroupLabel::S3);
}
