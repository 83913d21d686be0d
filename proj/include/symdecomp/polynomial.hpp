#ifndef SYMDECOMP_POLYNOMIAL_HPP
#define SYMDECOMP_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symdecomp/rational.hpp"

namespace symdecomp {

/**
 * Dense univariate polynomial in t over the rationals.
 *
 * Coefficients are stored from the constant term upwards with trailing zeros
 * removed, so the zero polynomial has no coefficients and no degree.
 */
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);

    static Polynomial constant(const Rational &c);
    static Polynomial monomial(const Rational &c, std::size_t k);
    static Polynomial from_ints(std::span<const long> coeffs);

    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Index of the last nonzero coefficient; empty for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept;

    /// Degree of a polynomial that must be nonzero; throws ZeroPolynomial.
    std::size_t degree_nonzero(const char *context) const;

    /// Coefficient of t^i, zero outside the stored range.
    const Rational &coeff(std::size_t i) const noexcept;
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }

    /// Leading coefficient (zero for the zero polynomial).
    const Rational &leading() const noexcept;

    Rational operator()(const Rational &x) const;
    int sign_at(const Rational &x) const;

    Polynomial derivative() const;
    /// t^k * this.
    Polynomial shifted(std::size_t k) const;
    /// this(t^r).
    Polynomial substitute_power(std::size_t r) const;
    /// Scaled so that the leading coefficient is 1 (zero stays zero).
    Polynomial monic() const;
    /// Scaled by 1/|leading|, preserving the sign of every value.
    Polynomial sign_normalized() const;

    bool all_nonnegative() const;

    Polynomial &operator+=(const Polynomial &other);
    Polynomial &operator-=(const Polynomial &other);
    Polynomial &operator*=(const Rational &c);

    friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational &c) { return a *= c; }
    friend Polynomial operator*(const Rational &c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
    Polynomial operator-() const;

    friend bool operator==(const Polynomial &a, const Polynomial &b) = default;

    /// Human readable form, e.g. "1 + 2*t - 1/3*t^2".
    std::string to_string() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

std::ostream &operator<<(std::ostream &os, const Polynomial &p);

inline Polynomial add(const Polynomial &f, const Polynomial &g)
{
    return f + g;
}

inline Polynomial mul(const Polynomial &f, const Polynomial &g)
{
    return f * g;
}

/// Quotient and remainder of Euclidean division; throws ZeroPolynomial for b = 0.
std::pair<Polynomial, Polynomial> divmod(const Polynomial &a, const Polynomial &b);

/// Exact quotient; throws InternalError when b does not divide a.
Polynomial divide_exact(const Polynomial &a, const Polynomial &b);

/// Monic greatest common divisor (zero iff both inputs are zero).
Polynomial gcd(const Polynomial &a, const Polynomial &b);

/// t^d h(1/t). Requires deg h <= d; the zero polynomial reverses to itself
/// for every d, including negative ones.
Polynomial reverse(const Polynomial &h, long d);

/// True iff reverse(h, d) == h.
bool is_symmetric(const Polynomial &h, long d);

/// (1 + t + ... + t^(r-1))^k.
Polynomial geometric_power(std::size_t r, std::size_t k);

/// a_0..a_N with sum a_n t^n = h(t) / (1-t)^D.
std::vector<Rational> series_coefficients(const Polynomial &h, std::size_t D, std::size_t N);

/// Recovers h from a_0..a_{L-1} where sum a_n t^n = h(t) / (1-t)^D and
/// deg h <= max_degree. All coefficients of (1-t)^D * sum a_n t^n above
/// max_degree (up to L-1) must vanish, otherwise NotPolynomialSequence.
std::vector<Rational> numerator_coefficients(std::span<const Rational> a, std::size_t D);
Polynomial numerator_from_sequence(std::span<const Rational> a, std::size_t D,
                                   std::size_t max_degree);
/// Same with max_degree = D - 1; requires a.size() >= D + 1.
Polynomial numerator_from_sequence(std::span<const Rational> a, std::size_t D);

/**
 * Polynomial in t and 1/t with finite support. No zero coefficient is ever
 * stored.
 */
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    explicit LaurentPolynomial(const Polynomial &p);
    explicit LaurentPolynomial(std::map<long, Rational> terms);

    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<long, Rational> &terms() const noexcept { return terms_; }
    const Rational &coeff(long e) const noexcept;

    std::optional<long> min_exponent() const noexcept;
    std::optional<long> max_exponent() const noexcept;

    void add_term(long e, const Rational &c);

    LaurentPolynomial shifted(long k) const;
    LaurentPolynomial substitute_power(long r) const;

    /// Throws IndexOutOfRange if a negative exponent is present.
    Polynomial to_polynomial() const;

    friend LaurentPolynomial operator+(const LaurentPolynomial &a, const LaurentPolynomial &b);
    friend LaurentPolynomial operator*(const LaurentPolynomial &a, const LaurentPolynomial &b);
    friend bool operator==(const LaurentPolynomial &a, const LaurentPolynomial &b) = default;

    std::string to_string() const;

private:
    std::map<long, Rational> terms_;
};

std::ostream &operator<<(std::ostream &os, const LaurentPolynomial &p);

/// d, r, s and the codegree ell = d + 1 - s of a nonzero h with deg h <= d.
struct DilationContext {
    std::size_t d = 0;
    std::size_t r = 1;
    std::size_t s = 0;
    std::size_t ell = 1;

    static DilationContext make(const Polynomial &h, std::size_t d, std::size_t r = 1);
};

} // namespace symdecomp

#endif
