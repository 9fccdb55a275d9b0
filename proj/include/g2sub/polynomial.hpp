#pragma once

#include "g2sub/errors.hpp"
#include "g2sub/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace g2sub {

// Univariate polynomial, coefficients lowest degree first, no trailing zeros.
template <class Scalar>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Scalar> c) : c_(c) { trim(); }
    explicit Polynomial(std::vector<Scalar> c) : c_(std::move(c)) { trim(); }
    static Polynomial constant(const Scalar& a) { return Polynomial(std::vector<Scalar>{a}); }
    static Polynomial monomial(const Scalar& a, int deg) {
        std::vector<Scalar> c(static_cast<size_t>(deg) + 1, Scalar(0));
        c.back() = a;
        return Polynomial(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Scalar>& coefficients() const { return c_; }
    Scalar coeff(int k) const {
        return k >= 0 && k < static_cast<int>(c_.size()) ? c_[static_cast<size_t>(k)] : Scalar(0);
    }
    Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }

    template <class T>
    T operator()(const T& x) const {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + T(*it);
        return acc;
    }

    Polynomial derivative() const {
        std::vector<Scalar> d;
        for (size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Scalar(static_cast<long>(k)));
        return Polynomial(std::move(d));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), Scalar(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a) {
        std::vector<Scalar> c = a.c_;
        for (auto& x : c) x = -x;
        return Polynomial(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Scalar& s, const Polynomial& a) { return constant(s) * a; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    Polynomial pow(int e) const {
        Polynomial r = constant(Scalar(1));
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == Scalar(0)) c_.pop_back();
    }
    std::vector<Scalar> c_;
};

using PolynomialQ = Polynomial<Rational>;
using PolynomialZ = Polynomial<Integer>;

// Quotient and remainder over a field.
template <class Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>> divmod(const Polynomial<Scalar>& a,
                                                         const Polynomial<Scalar>& b) {
    if (b.is_zero()) throw SingularMatrix("polynomial division by zero");
    std::vector<Scalar> rem = a.coefficients();
    const int db = b.degree();
    std::vector<Scalar> quo(static_cast<size_t>(std::max(a.degree() - db + 1, 0)), Scalar(0));
    for (int k = a.degree(); k >= db; --k) {
        const Scalar f = rem[static_cast<size_t>(k)] / b.leading();
        quo[static_cast<size_t>(k - db)] = f;
        for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(k - db + j)] -= f * b.coeff(j);
    }
    return {Polynomial<Scalar>(std::move(quo)), Polynomial<Scalar>(std::move(rem))};
}

// Monic gcd over a field; gcd(0,0) = 0.
template <class Scalar>
Polynomial<Scalar> gcd(Polynomial<Scalar> a, Polynomial<Scalar> b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return (Scalar(1) / a.leading()) * a;
}

PolynomialQ to_rational(const PolynomialZ& p);
std::string to_string(const PolynomialZ& p, const std::string& var = "q");

// Quotient of integer polynomials in q, kept in canonical form: coprime,
// jointly primitive, denominator with positive leading coefficient.
class RationalFunctionQ {
public:
    RationalFunctionQ() : num_(), den_({Integer(1)}) {}
    RationalFunctionQ(PolynomialZ num, PolynomialZ den);
    RationalFunctionQ(const PolynomialQ& num, const PolynomialQ& den);
    static RationalFunctionQ polynomial(const PolynomialZ& p) { return {p, PolynomialZ{Integer(1)}}; }
    static RationalFunctionQ constant(const Rational& c);
    static RationalFunctionQ q();

    const PolynomialZ& numerator() const { return num_; }
    const PolynomialZ& denominator() const { return den_; }

    friend RationalFunctionQ operator+(const RationalFunctionQ& a, const RationalFunctionQ& b);
    friend RationalFunctionQ operator-(const RationalFunctionQ& a, const RationalFunctionQ& b);
    friend RationalFunctionQ operator*(const RationalFunctionQ& a, const RationalFunctionQ& b);
    friend RationalFunctionQ operator/(const RationalFunctionQ& a, const RationalFunctionQ& b);
    friend bool operator==(const RationalFunctionQ& a, const RationalFunctionQ& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    RationalFunctionQ pow(int e) const;  // e may be negative

private:
    PolynomialZ num_;
    PolynomialZ den_;
};

Rational eval_q(const RationalFunctionQ& f, const Rational& q0);
std::string to_string(const RationalFunctionQ& f);

}  // namespace g2sub
