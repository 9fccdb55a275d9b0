#include "g2sub/quadratic_field.hpp"

namespace g2sub {

std::string to_string(const QuadraticNumber& x) {
    if (x.is_rational()) return to_string(x.rational_part());
    const std::string root = "sqrt(" + to_string(x.radicand()) + ")";
    const Rational& b = x.radical_part();
    std::string rad;
    if (b == 1) rad = root;
    else if (b == -1) rad = "-" + root;
    else rad = to_string(b) + "*" + root;
    if (x.rational_part() == 0) return rad;
    if (b < 0) return to_string(x.rational_part()) + " - " + rad.substr(1);
    return to_string(x.rational_part()) + " + " + rad;
}

std::pair<Rational, Integer> split_square(const Rational& x) {
    if (x == 0) return {Rational(0), Integer(1)};
    // x = p/q = (p q) / q^2
    Integer n = numerator(x) * denominator(x);
    Rational c = Rational(1) / Rational(denominator(x));
    if (n < 0) n = -n;
    Integer d = 1;
    for (long p = 2; p <= 100000 && Integer(p) * p <= n; ++p) {
        const Integer pp = Integer(p) * p;
        while (n % pp == 0) {
            n /= pp;
            c *= p;
        }
        if (n % p == 0) {
            n /= p;
            d *= p;
        }
    }
    d *= n;
    return {c, x < 0 ? Integer(-d) : d};
}

}  // namespace g2sub
