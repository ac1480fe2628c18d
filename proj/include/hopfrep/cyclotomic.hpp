#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfrep/rational.hpp"

namespace hopfrep {

unsigned euler_phi(unsigned n);

// Monic coefficients of the n-th cyclotomic polynomial, ascending degree,
// length euler_phi(n) + 1.  Computed once per order and cached.
const std::vector<Rational>& cyclotomic_polynomial(unsigned n);

// Element of Q(zeta_N) in the power basis 1, z, ..., z^{phi(N)-1}, coefficients
// reduced mod Phi_N.  Values are immutable; arithmetic on mixed orders lifts
// both operands to the lcm first.  The canonical form is (order, coeff vector);
// equality across orders compares after normalization to the common order.
class Cyc {
public:
    Cyc() : order_(1), coeffs_(1, Rational(0)) {}
    explicit Cyc(const Rational& q) : order_(1), coeffs_(1, q) {}
    explicit Cyc(long v) : order_(1), coeffs_(1, Rational(v)) {}

    static Cyc zeta(unsigned order, long power = 1);
    static Cyc from_coeffs(unsigned order, std::vector<Rational> coeffs);
    // zeta_order^{order/4}; requires 4 | order.
    static Cyc imaginary_unit(unsigned order);

    unsigned order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    // Requires is_rational().
    Rational rational_value() const;

    // Requires order() | new_order.
    Cyc lifted_to(unsigned new_order) const;
    // Requires new_order | order(); nullopt when the value does not lie in
    // Q(zeta_new_order).  Lift-then-project is the identity.
    std::optional<Cyc> projected_to(unsigned new_order) const;

    Cyc conj() const;      // zeta -> zeta^{-1}
    Cyc inverse() const;   // DivisionByZero on zero
    Cyc pow(long e) const;

    Cyc operator-() const;
    friend Cyc operator+(const Cyc& a, const Cyc& b);
    friend Cyc operator-(const Cyc& a, const Cyc& b);
    friend Cyc operator*(const Cyc& a, const Cyc& b);
    friend Cyc operator/(const Cyc& a, const Cyc& b);
    Cyc& operator+=(const Cyc& b) { return *this = *this + b; }
    Cyc& operator-=(const Cyc& b) { return *this = *this - b; }
    Cyc& operator*=(const Cyc& b) { return *this = *this * b; }
    Cyc& operator/=(const Cyc& b) { return *this = *this / b; }
    friend bool operator==(const Cyc& a, const Cyc& b);
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

    // Textual literal: "+"/"-"-separated terms q, q*z^k, z^k with z = zeta_N,
    // ascending powers, e.g. "1/2*z^3 - 2".  parse(order, to_string()) == *this.
    std::string to_string() const;
    static Cyc parse(unsigned order, const std::string& text);

private:
    Cyc(unsigned order, std::vector<Rational> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {}

    unsigned order_;
    std::vector<Rational> coeffs_;
};

inline Cyc operator*(const Rational& q, const Cyc& a) { return Cyc(q) * a; }

// (q, k) with value == q * zeta_order^k and q != 0, when such a form exists;
// k is the smallest exponent in [0, order).  nullopt for zero and for sums
// that are not a single monomial.
std::optional<std::pair<Rational, unsigned>> as_rational_monomial(const Cyc& value);

// A square root of value inside Q(zeta_order) when value is a rational
// monomial q*z^k whose root stays monomial (k even after sign-folding, |q| a
// rational square; negative q absorbs a factor i, needing 4 | order).
// nullopt does NOT certify that no square root exists in the field.
std::optional<Cyc> monomial_sqrt(const Cyc& value);

} // namespace hopfrep
