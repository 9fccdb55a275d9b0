#include "g2sub/polynomial.hpp"
#include "g2sub/rational.hpp"

#include <cctype>
#include <sstream>

namespace g2sub {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (!all_digits(body)) throw ParseError("not an integer: '" + std::string(text) + "'");
    const Integer v{std::string(body)};
    return negative ? Integer(-v) : v;
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    const Integer p = parse_integer(text.substr(0, slash));
    const std::string_view qtext = text.substr(slash + 1);
    if (!all_digits(qtext)) throw ParseError("bad denominator in '" + std::string(text) + "'");
    const Integer q(std::string{qtext});
    if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(p) / Rational(q);
}

std::string to_string(const Integer& x) { return x.str(); }

std::string to_string(const Rational& x) {
    const Integer q = denominator(x);
    if (q == 1) return numerator(x).str();
    return numerator(x).str() + "/" + q.str();
}

PolynomialQ to_rational(const PolynomialZ& p) {
    std::vector<Rational> c;
    for (const auto& a : p.coefficients()) c.emplace_back(a);
    return PolynomialQ(std::move(c));
}

std::string to_string(const PolynomialZ& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        Integer a = p.coeff(k);
        if (a == 0) continue;
        if (a < 0) {
            out << (first ? "-" : " - ");
            a = -a;
        } else if (!first) {
            out << " + ";
        }
        if (a != 1 || k == 0) out << a.str();
        if (k > 0) out << var;
        if (k > 1) out << "^" << k;
        first = false;
    }
    return out.str();
}

namespace {

Integer integer_gcd(Integer a, Integer b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Integer r = a % b;
        a = b;
        b = r;
    }
    return a;
}

Integer integer_lcm(const Integer& a, const Integer& b) { return a / integer_gcd(a, b) * b; }

}  // namespace

RationalFunctionQ::RationalFunctionQ(const PolynomialQ& num, const PolynomialQ& den) {
    if (den.is_zero()) throw SingularMatrix("rational function with zero denominator");
    PolynomialQ n = num, d = den;
    if (n.is_zero()) {
        num_ = PolynomialZ{};
        den_ = PolynomialZ{Integer(1)};
        return;
    }
    const PolynomialQ g = gcd(n, d);
    n = divmod(n, g).first;
    d = divmod(d, g).first;
    Integer l(1);
    for (const auto& c : n.coefficients()) l = integer_lcm(l, g2sub::denominator(c));
    for (const auto& c : d.coefficients()) l = integer_lcm(l, g2sub::denominator(c));
    std::vector<Integer> nz, dz;
    for (const auto& c : n.coefficients()) nz.push_back(g2sub::numerator(c * Rational(l)));
    for (const auto& c : d.coefficients()) dz.push_back(g2sub::numerator(c * Rational(l)));
    Integer content(0);
    for (const auto& c : nz) content = integer_gcd(content, c);
    for (const auto& c : dz) content = integer_gcd(content, c);
    if (dz.back() < 0) content = -content;
    for (auto& c : nz) c /= content;
    for (auto& c : dz) c /= content;
    num_ = PolynomialZ(std::move(nz));
    den_ = PolynomialZ(std::move(dz));
}

RationalFunctionQ::RationalFunctionQ(PolynomialZ num, PolynomialZ den)
    : RationalFunctionQ(to_rational(num), to_rational(den)) {}

RationalFunctionQ RationalFunctionQ::constant(const Rational& c) {
    return {PolynomialQ{c}, PolynomialQ{Rational(1)}};
}

RationalFunctionQ RationalFunctionQ::q() { return polynomial(PolynomialZ{Integer(0), Integer(1)}); }

RationalFunctionQ operator+(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}
RationalFunctionQ operator-(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}
RationalFunctionQ operator*(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}
RationalFunctionQ operator/(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    if (b.num_.is_zero()) throw SingularMatrix("rational function division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

RationalFunctionQ RationalFunctionQ::pow(int e) const {
    if (e < 0) return RationalFunctionQ::constant(Rational(1)) / pow(-e);
    return {num_.pow(e), den_.pow(e)};
}

Rational eval_q(const RationalFunctionQ& f, const Rational& q0) {
    const Rational d = f.denominator()(q0);
    if (d == 0) throw PoleAtPoint("denominator vanishes at q = " + to_string(q0));
    return f.numerator()(q0) / d;
}

std::string to_string(const RationalFunctionQ& f) {
    const std::string n = to_string(f.numerator());
    if (f.denominator() == PolynomialZ{Integer(1)}) return n;
    return "(" + n + ")/(" + to_string(f.denominator()) + ")";
}

}  // namespace g2sub
