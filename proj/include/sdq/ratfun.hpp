#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace sdq {

// Exact rational scalars. mpq_class keeps gcd(num, den) = 1 and den > 0
// after canonicalize(), which every constructor below performs.
using Rational = mpq_class;
using Integer = mpz_class;

struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZeroError : std::runtime_error {
    explicit DivisionByZeroError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

Rational rational_from_string(const std::string& text);
std::string rational_to_string(const Rational& q);

// Exact binomial coefficient binom(top, k) for rational top and k >= 0,
// as the falling-factorial product divided by k!.
Rational rational_binomial(const Rational& top, long long k);

// Dense polynomial over Q in one formal variable (written L by default).
// Invariant: c is empty (the zero polynomial) or c.back() != 0.
struct Polynomial {
    std::vector<Rational> c;  // c[k] = coefficient of L^k

    Polynomial() = default;
    explicit Polynomial(const Rational& constant);
    explicit Polynomial(long long constant);

    static Polynomial monomial(int k, const Rational& coeff = Rational(1));
    static Polynomial variable();  // L

    void normalize();  // drop trailing zeros
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    Rational coeff(int k) const;
    const Rational& leading() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& s) const;
    bool operator==(const Polynomial& o) const { return c == o.c; }

    Rational eval(const Rational& x) const;

    // p(a*x + b); used for Bernoulli arguments like B_k(x/2), B_k((x+1)/2).
    Polynomial substitute_linear(const Rational& a, const Rational& b) const;

    // Multiplicity of the root x = 1.
    int multiplicity_at_one() const;

    // Quotient of an exact division; throws std::logic_error on a nonzero
    // remainder (callers only divide by known factors).
    static Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

    // Primitive gcd with integer coefficients and positive leading
    // coefficient, via the primitive pseudo-remainder sequence.
    static Polynomial gcd(const Polynomial& a, const Polynomial& b);

    std::string to_string(const std::string& var = "L") const;
};

// Reduced fraction of polynomials. Canonical form: gcd(num, den) = 1 over Q,
// both scaled jointly to integer coefficients with overall content 1, and
// den's leading coefficient positive. den is never zero.
class RationalFunction {
  public:
    RationalFunction();  // zero
    RationalFunction(long long n);
    RationalFunction(const Rational& q);
    RationalFunction(Polynomial num, Polynomial den);
    explicit RationalFunction(Polynomial num);

    static RationalFunction lefschetz();  // L
    static RationalFunction lefschetz_power(long long k);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    RationalFunction pow(long long k) const;
    bool operator==(const RationalFunction& o) const;

    // num(q) / den(q); PoleError when den(q) = 0.
    Rational evaluate(const Rational& q) const;

    // Order of the pole at L = 1 (negative = zero of that order).
    int pole_order_at_one() const;

    std::string to_string() const;
    static RationalFunction parse(const std::string& text);

  private:
    Polynomial num_, den_;
    void canonicalize();
};

}  // namespace sdq
