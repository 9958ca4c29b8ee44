#include "sdq/ratfun.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sdq {

Rational rational_from_string(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw ParseError("empty rational literal");
    try {
        Rational q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal: " + text);
    }
}

std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

Rational rational_binomial(const Rational& top, long long k) {
    Rational result(1);
    for (long long j = 0; j < k; ++j) {
        result *= top - Rational(static_cast<long>(j));
        result /= Rational(static_cast<long>(j + 1));
    }
    return result;
}

Polynomial::Polynomial(const Rational& constant) {
    if (constant != 0) c.push_back(constant);
}

Polynomial::Polynomial(long long constant) : Polynomial(Rational(static_cast<long>(constant))) {}

Polynomial Polynomial::monomial(int k, const Rational& coeff) {
    Polynomial p;
    if (coeff != 0) {
        p.c.assign(k + 1, Rational(0));
        p.c[k] = coeff;
    }
    return p;
}

Polynomial Polynomial::variable() {
    return monomial(1);
}

void Polynomial::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Rational Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c.size())) return Rational(0);
    return c[k];
}

const Rational& Polynomial::leading() const {
    return c.back();
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& x : r.c) x = -x;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r;
    r.c.resize(std::max(c.size(), o.c.size()), Rational(0));
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    r.normalize();
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    Polynomial r;
    r.c.assign(c.size() + o.c.size() - 1, Rational(0));
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    }
    r.normalize();
    return r;
}

Polynomial Polynomial::operator*(const Rational& s) const {
    if (s == 0) return Polynomial();
    Polynomial r = *this;
    for (auto& x : r.c) x *= s;
    return r;
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

Polynomial Polynomial::substitute_linear(const Rational& a, const Rational& b) const {
    Polynomial arg;
    arg.c = {b, a};
    arg.normalize();
    Polynomial acc;
    for (size_t i = c.size(); i-- > 0;) acc = acc * arg + Polynomial(c[i]);
    return acc;
}

int Polynomial::multiplicity_at_one() const {
    if (is_zero()) throw std::logic_error("multiplicity of the zero polynomial");
    Polynomial p = *this;
    int mult = 0;
    while (p.eval(Rational(1)) == 0) {
        // Deflate by (L - 1): synthetic division at the root 1.
        std::vector<Rational> q(p.c.size() - 1, Rational(0));
        Rational carry(0);
        for (size_t i = p.c.size(); i-- > 1;) {
            carry += p.c[i];
            q[i - 1] = carry;
        }
        p.c = std::move(q);
        p.normalize();
        ++mult;
    }
    return mult;
}

Polynomial Polynomial::divide_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    Polynomial rem = a;
    Polynomial quot;
    if (a.degree() >= b.degree()) quot.c.assign(a.degree() - b.degree() + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        Rational factor = rem.leading() / b.leading();
        quot.c[shift] = factor;
        rem = rem - b * Polynomial::monomial(shift, factor);
    }
    if (!rem.is_zero()) throw std::logic_error("polynomial division was not exact");
    quot.normalize();
    return quot;
}

namespace {

// Clear denominators and integer content; make the leading coefficient
// positive. Result has integer entries with gcd 1.
Polynomial primitive_part(const Polynomial& p) {
    if (p.is_zero()) return p;
    Integer denlcm(1);
    for (const auto& x : p.c) denlcm = lcm(denlcm, x.get_den());
    Integer content(0);
    for (const auto& x : p.c) content = gcd(content, Integer(x.get_num() * (denlcm / x.get_den())));
    Polynomial r = p;
    Rational scale(denlcm, content);
    scale.canonicalize();
    for (auto& x : r.c) x *= scale;
    if (r.leading() < 0)
        for (auto& x : r.c) x = -x;
    return r;
}

// Pseudo-remainder of integer polynomials: lc(b)^(da-db+1) * a mod b.
Polynomial pseudo_rem(Polynomial a, const Polynomial& b) {
    int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        int shift = a.degree() - db;
        Rational lead = a.leading();
        for (auto& x : a.c) x *= b.leading();
        a = a - b * Polynomial::monomial(shift, lead);
    }
    return a;
}

}  // namespace

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = primitive_part(a), y = primitive_part(b);
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        Polynomial r = pseudo_rem(x, y);
        x = std::move(y);
        y = primitive_part(r);
    }
    return primitive_part(x);
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& a = coeff(k);
        if (a == 0) continue;
        bool negative = a < 0;
        Rational mag = negative ? Rational(-a) : a;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        if (k == 0) {
            out << rational_to_string(mag);
        } else {
            if (mag != 1) out << rational_to_string(mag) << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

RationalFunction::RationalFunction() : num_(), den_(1) {}

RationalFunction::RationalFunction(long long n) : num_(n), den_(1) {}

RationalFunction::RationalFunction(const Rational& q) : num_(q), den_(1) {
    canonicalize();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)), den_(1) {
    canonicalize();
}

RationalFunction RationalFunction::lefschetz() {
    return RationalFunction(Polynomial::variable());
}

RationalFunction RationalFunction::lefschetz_power(long long k) {
    if (k >= 0) return RationalFunction(Polynomial::monomial(static_cast<int>(k)));
    return RationalFunction(Polynomial(1LL), Polynomial::monomial(static_cast<int>(-k)));
}

void RationalFunction::canonicalize() {
    if (den_.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial(1LL);
        return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0 || g.leading() != 1) {
        num_ = Polynomial::divide_exact(num_, g);
        den_ = Polynomial::divide_exact(den_, g);
    }
    // Joint integer scaling: one rational multiplier for both polynomials.
    Integer denlcm(1);
    for (const auto& x : num_.c) denlcm = lcm(denlcm, x.get_den());
    for (const auto& x : den_.c) denlcm = lcm(denlcm, x.get_den());
    Integer content(0);
    for (const auto& x : num_.c) content = gcd(content, Integer(x.get_num() * (denlcm / x.get_den())));
    for (const auto& x : den_.c) content = gcd(content, Integer(x.get_num() * (denlcm / x.get_den())));
    Rational scale(denlcm, content);
    scale.canonicalize();
    if (den_.leading() < 0) scale = -scale;
    for (auto& x : num_.c) x *= scale;
    for (auto& x : den_.c) x *= scale;
}

bool RationalFunction::is_one() const {
    return num_.degree() == 0 && den_.degree() == 0 && num_.coeff(0) == den_.coeff(0);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw DivisionByZeroError("division by the zero rational function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) { return *this = *this + o; }
RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this = *this - o; }
RationalFunction& RationalFunction::operator*=(const RationalFunction& o) { return *this = *this * o; }
RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this = *this / o; }

RationalFunction RationalFunction::pow(long long k) const {
    if (k < 0) return RationalFunction(1LL) / pow(-k);
    RationalFunction base = *this, acc(1LL);
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
}

Rational RationalFunction::evaluate(const Rational& q) const {
    Rational d = den_.eval(q);
    if (d == 0) throw PoleError("pole at L = " + rational_to_string(q));
    return num_.eval(q) / d;
}

int RationalFunction::pole_order_at_one() const {
    if (is_zero()) throw std::logic_error("pole order of the zero function");
    return den_.multiplicity_at_one() - num_.multiplicity_at_one();
}

namespace {

bool needs_parens(const Polynomial& p) {
    int terms = 0;
    for (const auto& x : p.c)
        if (x != 0) ++terms;
    if (terms >= 2) return true;
    return p.degree() >= 1 && p.leading() != 1 && p.leading() != -1;
}

}  // namespace

std::string RationalFunction::to_string() const {
    std::string numerator = num_.to_string();
    if (den_.degree() == 0 && den_.coeff(0) == 1) return numerator;
    if (needs_parens(num_)) numerator = "(" + numerator + ")";
    std::string denominator = den_.to_string();
    if (needs_parens(den_)) denominator = "(" + denominator + ")";
    return numerator + " / " + denominator;
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char ch) {
        skip();
        if (pos < s.size() && s[pos] == ch) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }

    RationalFunction parse_expr() {
        RationalFunction acc = parse_term();
        while (true) {
            if (eat('+'))
                acc += parse_term();
            else if (eat('-'))
                acc -= parse_term();
            else
                return acc;
        }
    }

    RationalFunction parse_term() {
        RationalFunction acc = parse_factor();
        while (true) {
            if (eat('*'))
                acc *= parse_factor();
            else if (eat('/'))
                acc /= parse_factor();
            else
                return acc;
        }
    }

    RationalFunction parse_factor() {
        RationalFunction base = parse_base();
        if (eat('^')) {
            bool neg = eat('-');
            long long k = parse_integer();
            base = base.pow(neg ? -k : k);
        }
        return base;
    }

    long long parse_integer() {
        skip();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw ParseError("expected integer at offset " + std::to_string(pos));
        return std::stoll(s.substr(start, pos - start));
    }

    RationalFunction parse_base() {
        skip();
        if (pos >= s.size()) throw ParseError("unexpected end of input");
        char ch = s[pos];
        if (ch == '(') {
            ++pos;
            RationalFunction inner = parse_expr();
            if (!eat(')')) throw ParseError("missing closing parenthesis");
            return inner;
        }
        if (ch == '-') {
            ++pos;
            return -parse_factor();
        }
        if (ch == 'L') {
            ++pos;
            return RationalFunction::lefschetz();
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            return RationalFunction(Rational(static_cast<long>(parse_integer())));
        }
        throw ParseError(std::string("unexpected character '") + ch + "'");
    }
};

}  // namespace

RationalFunction RationalFunction::parse(const std::string& text) {
    Parser p(text);
    RationalFunction value = p.parse_expr();
    p.skip();
    if (p.pos != text.size()) throw ParseError("trailing input after expression");
    return value;
}

}  // namespace sdq
