#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "cliquepoly/integer.hpp"

namespace cliquepoly {

// Polynomial with exact signed 128-bit coefficients, lowest degree first.
// All arithmetic is overflow-checked. Trailing zeros are permitted in storage
// and ignored by comparison.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {}
    Polynomial(std::initializer_list<long long> coeffs);

    static Polynomial constant(Int c) { return Polynomial(std::vector<Int>{c}); }
    static Polynomial monomial(Int c, int degree);

    const std::vector<Int>& coeffs() const { return coeffs_; }
    // Coefficient of x^i; zero beyond the stored range.
    Int operator[](int i) const;

    // -1 for the zero polynomial.
    int degree() const;
    bool is_zero() const { return degree() < 0; }

    Polynomial& normalize();

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Int c, const Polynomial& p);

    // Multiply by x^k.
    Polynomial shifted(int k) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    std::vector<Int> coeffs_;
};

// d^order/dx^order, coefficient-wise.
Polynomial derivative(const Polynomial& p, int order);

// (1/order!) d^order/dx^order, computed as C(i, order) * p_i so no division is needed.
Polynomial normalized_derivative(const Polynomial& p, int order);

// Coefficient reversal at base n: sum_{k=0..n} p_k x^{n-k}, plus one extra unit
// constant when include_unit is set. Requires n >= degree(p).
Polynomial reverse(const Polynomial& p, int n, bool include_unit);

// Exact comparison after trailing-zero normalization.
inline bool poly_equal(const Polynomial& a, const Polynomial& b) { return a == b; }

// "1 + 3x + 3x^2"; "0" for the zero polynomial.
std::string to_string(const Polynomial& p);

// Space-separated coefficients, lowest first: "1 3 3 1". Zero prints as "0".
std::string to_coefficient_string(const Polynomial& p);

} // namespace cliquepoly
