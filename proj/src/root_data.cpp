#include "g2sub/root_data.hpp"

#include "g2sub/errors.hpp"

#include <algorithm>

namespace g2sub {

std::string name(const Root& r) {
    const char* alpha = r.side == Side::Dual ? "a^" : "a";
    const char* beta = r.side == Side::Dual ? "b^" : "b";
    std::string out;
    auto term = [&](int c, const char* s) {
        if (c == 0) return;
        if (!out.empty()) out += c > 0 ? "+" : "-";
        else if (c < 0) out += "-";
        const int m = c < 0 ? -c : c;
        if (m != 1) out += std::to_string(m);
        out += s;
    };
    term(r.a, alpha);
    term(r.b, beta);
    return out.empty() ? "0" : out;
}

std::string name(GroupLabel g) {
    constexpr const char* names[] = {"Trivial", "S2", "S3"};
    return names[static_cast<int>(g)];
}

Eigen::Matrix2i cartan_matrix(Side side) {
    Eigen::Matrix2i g2;
    g2 << 2, -1, -3, 2;
    return side == Side::G2 ? g2 : Eigen::Matrix2i(g2.transpose());
}

std::vector<Root> positive_roots(Side side) {
    // G2 side, alpha short: a, b, a+b, 2a+b, 3a+b, 3a+2b.
    if (side == Side::G2) return {{1, 0, side}, {0, 1, side}, {1, 1, side}, {2, 1, side}, {3, 1, side}, {3, 2, side}};
    return {{1, 0, side}, {0, 1, side}, {1, 1, side}, {1, 2, side}, {1, 3, side}, {2, 3, side}};
}

std::vector<Root> all_roots(Side side) {
    auto out = positive_roots(side);
    for (const auto& r : positive_roots(side)) out.push_back({-r.a, -r.b, side});
    return out;
}

int root_weight(const Root& gamma, const TorusExponentPair& t) {
    if (gamma.side != Side::Dual) throw WrongSide("root_weight expects a dual-side root");
    // alpha^(m^(x,y)) = x^-1 y^2, beta^(m^(x,y)) = x y^-1
    return gamma.a * (-t.e1 + 2 * t.e2) + gamma.b * (t.e1 - t.e2);
}

std::vector<Root> weight_space(int exponent) {
    std::vector<Root> out;
    for (const auto& r : all_roots(Side::Dual))
        if (root_weight(r, kLambdaSub) == exponent) out.push_back(r);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Invariant form on the dual root lattice: (b^,b^) = 2, (a^,a^) = 6, (a^,b^) = -3.
int form(const Root& x, const Root& y) { return 6 * x.a * y.a - 3 * (x.a * y.b + x.b * y.a) + 2 * x.b * y.b; }

}  // namespace

std::pair<int, int> coroot(const Root& gamma) {
    if (gamma.side != Side::Dual) throw WrongSide("coroot expects a dual-side root");
    if (gamma.a < 0 || gamma.b < 0 || (gamma.a == 0 && gamma.b == 0))
        throw NonPositive("coroot expects a positive root");
    const auto pos = positive_roots(Side::Dual);
    if (std::find(pos.begin(), pos.end(), gamma) == pos.end())
        throw NonPositive("not a root: " + name(gamma));
    // gamma^v = 2 gamma / (gamma, gamma), rewritten in the simple coroots a^v = a^/3, b^v = b^.
    const int len = form(gamma, gamma);
    const int ca = 6 * gamma.a / len;
    const int cb = 2 * gamma.b / len;
    return {ca, cb};
}

TorusExponentPair cocharacter_exponents(int n, int m) {
    // a^v(t) = m^(1, t), b^v(t) = m^(t, 1/t)
    return {m, n - m};
}

int root_coroot_pairing(const Root& gamma, const Root& delta) {
    const auto [n, m] = coroot(delta);
    return root_weight(gamma, cocharacter_exponents(n, m));
}

LambdaSubCheck lambda_sub_self_check() {
    LambdaSubCheck c;
    c.coroot_form = cocharacter_exponents(2, 1);
    // h_a(q) = m^(1,q), h_b(q^2) = m^(q^2, q^-2)
    c.h_form = TorusExponentPair{0 + 2, 1 - 2};
    c.coroot_form_agrees = c.coroot_form == kLambdaSub;
    c.h_form_agrees = c.h_form == kLambdaSub;
    return c;
}

namespace {

RationalFunctionQ q_pow(int e) { return RationalFunctionQ::q().pow(e); }
RationalFunctionQ one() { return RationalFunctionQ::constant(Rational(1)); }

}  // namespace

RationalFunctionQ adjoint_L(int s) {
    const RationalFunctionQ a = one() - q_pow(-s - 2);
    const RationalFunctionQ b = one() - q_pow(-s - 1);
    return one() / (a * b.pow(3));
}

RationalFunctionQ adjoint_gamma(int s) {
    // epsilon(s) = q^(10(1/2 - s)) = q^(5 - 10 s)
    return q_pow(5 - 10 * s) * adjoint_L(1 - s) / adjoint_L(s);
}

RationalFunctionQ hyperspecial_volume() {
    const RationalFunctionQ q = RationalFunctionQ::q();
    return q_pow(-8) * (q.pow(6) - one()) * (q.pow(2) - one());
}

RationalFunctionQ dim_sigma_simplified() {
    const RationalFunctionQ q = RationalFunctionQ::q();
    return q * (q - one()).pow(2) * (q.pow(2) - q + one()) / RationalFunctionQ::constant(Rational(6));
}

AdjointGammaData adjoint_gamma_data() {
    const RationalFunctionQ q = RationalFunctionQ::q();
    AdjointGammaData d;
    d.L_factor = "1/((1 - q^(-s-2)) (1 - q^(-s-1))^3)";
    d.gamma0 = q.pow(9) / ((q + one()).pow(2) * (q.pow(2) + q + one()));
    d.dim_sigma = q * (q.pow(6) - one()) * (q.pow(2) - one()) /
                  (RationalFunctionQ::constant(Rational(6)) * (q + one()).pow(2) * (q.pow(2) + q + one()));
    return d;
}

std::vector<ArthurParamMeta> arthur_parameters() {
    return {{0, GroupLabel::S3, 1, 3}, {1, GroupLabel::S2, -1, 2}, {2, GroupLabel::S2, -1, 1}, {3, GroupLabel::S3, 1, 0}};
}

}  // namespace g2sub
