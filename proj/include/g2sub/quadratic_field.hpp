#pragma once

#include "g2sub/errors.hpp"
#include "g2sub/rational.hpp"

#include <Eigen/Core>

#include <string>

namespace g2sub {

// a + b sqrt(d) in Q(sqrt(d)), d a fixed non-square. Rationals carry d = 0 and mix
// freely with any field; two irrational operands must share d.
class QuadraticNumber {
public:
    QuadraticNumber() = default;
    QuadraticNumber(int a) : a_(a) {}
    QuadraticNumber(const Rational& a) : a_(a) {}
    QuadraticNumber(const Rational& a, const Rational& b, const Rational& d) : a_(a), b_(b), d_(b == 0 ? 0 : d) {}

    static QuadraticNumber sqrt_of(const Rational& d) { return {0, 1, d}; }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    const Rational& radicand() const { return d_; }
    bool is_rational() const { return b_ == 0; }

    friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
        return {x.a_ + y.a_, x.b_ + y.b_, common(x, y)};
    }
    friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) {
        return {x.a_ - y.a_, x.b_ - y.b_, common(x, y)};
    }
    friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
        const Rational d = common(x, y);
        return {x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d};
    }
    friend QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y) {
        const Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * y.d_;
        if (norm == 0) throw SingularMatrix("division by zero in Q(sqrt d)");
        const QuadraticNumber conj(y.a_ / norm, -y.b_ / norm, y.d_);
        return x * conj;
    }
    QuadraticNumber operator-() const { return {-a_, -b_, d_}; }
    QuadraticNumber& operator+=(const QuadraticNumber& y) { return *this = *this + y; }
    QuadraticNumber& operator-=(const QuadraticNumber& y) { return *this = *this - y; }
    QuadraticNumber& operator*=(const QuadraticNumber& y) { return *this = *this * y; }
    QuadraticNumber& operator/=(const QuadraticNumber& y) { return *this = *this / y; }

    friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
    }
    friend bool operator!=(const QuadraticNumber& x, const QuadraticNumber& y) { return !(x == y); }

private:
    static Rational common(const QuadraticNumber& x, const QuadraticNumber& y) {
        if (x.d_ != 0 && y.d_ != 0 && x.d_ != y.d_) throw InconsistentSystem("operands lie in different quadratic fields");
        return x.d_ != 0 ? x.d_ : y.d_;
    }

    Rational a_{0}, b_{0}, d_{0};
};

// "a", "b*sqrt(d)" or "a + b*sqrt(d)".
std::string to_string(const QuadraticNumber& x);

// (c, d) with x = c^2 d and d a squarefree integer, found by trial division of small primes.
std::pair<Rational, Integer> split_square(const Rational& x);

}  // namespace g2sub

namespace Eigen {

template <>
struct NumTraits<g2sub::QuadraticNumber> : GenericNumTraits<g2sub::QuadraticNumber> {
    using Real = g2sub::QuadraticNumber;
    using NonInteger = g2sub::QuadraticNumber;
    using Literal = g2sub::QuadraticNumber;
    using Nested = g2sub::QuadraticNumber;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 4,
        MulCost = 8
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
