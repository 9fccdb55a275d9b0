#pragma once

#include "g2sub/polynomial.hpp"

#include <Eigen/Core>

#include <string>
#include <utility>
#include <vector>

namespace g2sub {

enum class Side { G2, Dual };

// a*alpha + b*beta (G2 side, alpha short) or a*alpha^ + b*beta^ (dual side, alpha^ long).
struct Root {
    int a = 0;
    int b = 0;
    Side side = Side::Dual;
    friend bool operator==(const Root&, const Root&) = default;
    friend auto operator<=>(const Root&, const Root&) = default;
};

std::string name(const Root& r);

// m^(q^e1, q^e2)
struct TorusExponentPair {
    int e1 = 0;
    int e2 = 0;
    friend bool operator==(const TorusExponentPair&, const TorusExponentPair&) = default;
};

// lambda_sub(Fr) = m^(q, q)
inline constexpr TorusExponentPair kLambdaSub{1, 1};

Eigen::Matrix2i cartan_matrix(Side side);
std::vector<Root> positive_roots(Side side);
std::vector<Root> all_roots(Side side);

// Exponent of q in gamma(t) for gamma on the dual side.
int root_weight(const Root& gamma, const TorusExponentPair& t);
std::vector<Root> weight_space(int exponent);

// Coroot of a positive dual root in the (alpha^v, beta^v) basis.
std::pair<int, int> coroot(const Root& gamma);
// Cocharacter n alpha^v + m beta^v evaluated at q, as m^ exponents.
TorusExponentPair cocharacter_exponents(int n, int m);
// <gamma, delta^v> for dual roots, through root_weight and the cocharacter of delta^v.
int root_coroot_pairing(const Root& gamma, const Root& delta);

struct LambdaSubCheck {
    TorusExponentPair coroot_form;   // (2 alpha^v + beta^v)(q)
    TorusExponentPair h_form;        // h_alpha(q) h_beta(q^2) with h_alpha(t)=m^(1,t), h_beta(t)=m^(t,1/t)
    bool coroot_form_agrees = false;
    bool h_form_agrees = false;
};
LambdaSubCheck lambda_sub_self_check();

struct AdjointGammaData {
    std::string L_factor;  // symbolic in q^-s
    RationalFunctionQ gamma0;
    RationalFunctionQ dim_sigma;
};
AdjointGammaData adjoint_gamma_data();

// L(s, phi_3, Ad) at an integer s, as a function of q.
RationalFunctionQ adjoint_L(int s);
// epsilon(s) gamma-factor recomputed from L and epsilon at integer s.
RationalFunctionQ adjoint_gamma(int s);
// Haar measure of G2(O_F): q^-8 (q^6 - 1)(q^2 - 1).
RationalFunctionQ hyperspecial_volume();
RationalFunctionQ dim_sigma_simplified();  // q (q-1)^2 (q^2-q+1) / 6

enum class GroupLabel { Trivial, S2, S3 };
std::string name(GroupLabel g);

struct ArthurParamMeta {
    int index = 0;
    GroupLabel component_group = GroupLabel::S3;
    int s_psi = 1;  // image of s_psi: 1 or -1
    int swap_partner = 0;
};
std::vector<ArthurParamMeta> arthur_parameters();

}  // namespace g2sub
