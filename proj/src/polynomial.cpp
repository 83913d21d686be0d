#include "symdecomp/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "symdecomp/errors.hpp"

namespace symdecomp {

namespace {

const Rational &zero_rational()
{
    static const Rational zero(0);
    return zero;
}

void append_term(std::ostringstream &os, bool &first, const Rational &c, long e)
{
    if (sgn(c) == 0) {
        return;
    }
    Rational magnitude = abs(c);
    if (first) {
        if (sgn(c) < 0) {
            os << "-";
        }
    } else {
        os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = magnitude == 1;
    if (e == 0) {
        os << magnitude.get_str();
        return;
    }
    if (!unit) {
        os << magnitude.get_str() << "*";
    }
    os << "t";
    if (e != 1) {
        os << "^" << e;
    }
}

} // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs)
{
    trim();
}

Polynomial Polynomial::constant(const Rational &c)
{
    return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::monomial(const Rational &c, std::size_t k)
{
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::from_ints(std::span<const long> coeffs)
{
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (long c : coeffs) {
        v.emplace_back(c);
    }
    return Polynomial(std::move(v));
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
        coeffs_.pop_back();
    }
}

std::optional<std::size_t> Polynomial::degree() const noexcept
{
    if (coeffs_.empty()) {
        return std::nullopt;
    }
    return coeffs_.size() - 1;
}

std::size_t Polynomial::degree_nonzero(const char *context) const
{
    if (coeffs_.empty()) {
        throw ZeroPolynomial(std::string(context) + ": polynomial must be nonzero");
    }
    return coeffs_.size() - 1;
}

const Rational &Polynomial::coeff(std::size_t i) const noexcept
{
    return i < coeffs_.size() ? coeffs_[i] : zero_rational();
}

const Rational &Polynomial::leading() const noexcept
{
    return coeffs_.empty() ? zero_rational() : coeffs_.back();
}

Rational Polynomial::operator()(const Rational &x) const
{
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

int Polynomial::sign_at(const Rational &x) const
{
    return sgn((*this)(x));
}

Polynomial Polynomial::derivative() const
{
    if (coeffs_.size() <= 1) {
        return {};
    }
    std::vector<Rational> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    }
    return Polynomial(std::move(v));
}

Polynomial Polynomial::shifted(std::size_t k) const
{
    if (is_zero() || k == 0) {
        return *this;
    }
    std::vector<Rational> v(k, Rational(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(v));
}

Polynomial Polynomial::substitute_power(std::size_t r) const
{
    if (is_zero() || r == 1) {
        return *this;
    }
    if (r == 0) {
        Rational total(0);
        for (const auto &c : coeffs_) {
            total += c;
        }
        return constant(total);
    }
    std::vector<Rational> v((coeffs_.size() - 1) * r + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        v[i * r] = coeffs_[i];
    }
    return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const
{
    if (is_zero()) {
        return {};
    }
    Rational inv = 1 / leading();
    return *this * inv;
}

Polynomial Polynomial::sign_normalized() const
{
    if (is_zero()) {
        return {};
    }
    Rational inv = 1 / abs(leading());
    return *this * inv;
}

bool Polynomial::all_nonnegative() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational &c) { return sgn(c) >= 0; });
}

Polynomial &Polynomial::operator+=(const Polynomial &other)
{
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &other)
{
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial &Polynomial::operator*=(const Rational &c)
{
    if (sgn(c) == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto &x : coeffs_) {
        x *= c;
    }
    return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const
{
    Polynomial out(*this);
    for (auto &x : out.coeffs_) {
        x = -x;
    }
    return out;
}

std::string Polynomial::to_string() const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        append_term(os, first, coeffs_[i], static_cast<long>(i));
    }
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const Polynomial &p)
{
    return os << p.to_string();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial &a, const Polynomial &b)
{
    const std::size_t db = b.degree_nonzero("divmod divisor");
    if (a.is_zero() || *a.degree() < db) {
        return {Polynomial{}, a};
    }
    std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<Rational> quot(rem.size() - db);
    const Rational inv_lead = 1 / b.leading();
    for (std::size_t k = rem.size(); k-- > db;) {
        if (sgn(rem[k]) == 0) {
            continue;
        }
        Rational factor = rem[k] * inv_lead;
        quot[k - db] = factor;
        for (std::size_t j = 0; j <= db; ++j) {
            rem[k - db + j] -= factor * b.coeff(j);
        }
    }
    rem.resize(db);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial divide_exact(const Polynomial &a, const Polynomial &b)
{
    auto [q, r] = divmod(a, b);
    ensure(r.is_zero(), "divide_exact: nonzero remainder dividing " + a.to_string() + " by " + b.to_string());
    return q;
}

Polynomial gcd(const Polynomial &a, const Polynomial &b)
{
    Polynomial x = a;
    Polynomial y = b;
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

Polynomial reverse(const Polynomial &h, long d)
{
    if (h.is_zero()) {
        return {};
    }
    if (d < 0 || *h.degree() > static_cast<std::size_t>(d)) {
        throw DegreeExceeded("reverse: degree " + std::to_string(*h.degree()) + " exceeds bound " +
                             std::to_string(d));
    }
    std::vector<Rational> v(static_cast<std::size_t>(d) + 1);
    for (std::size_t i = 0; i <= static_cast<std::size_t>(d); ++i) {
        v[i] = h.coeff(static_cast<std::size_t>(d) - i);
    }
    return Polynomial(std::move(v));
}

bool is_symmetric(const Polynomial &h, long d)
{
    return reverse(h, d) == h;
}

Polynomial geometric_power(std::size_t r, std::size_t k)
{
    if (r == 0) {
        throw IndexOutOfRange("geometric_power: r must be positive");
    }
    std::vector<Rational> base(r, Rational(1));
    const Polynomial step(std::move(base));
    Polynomial result = Polynomial::constant(1);
    for (std::size_t i = 0; i < k; ++i) {
        result = result * step;
    }
    return result;
}

std::vector<Rational> series_coefficients(const Polynomial &h, std::size_t D, std::size_t N)
{
    // Coefficients of (1-t)^(-D): b_m = C(m+D-1, D-1).
    std::vector<Integer> b(N + 1);
    b[0] = 1;
    for (std::size_t m = 1; m <= N; ++m) {
        b[m] = b[m - 1] * static_cast<unsigned long>(m + D - 1);
        mpz_divexact_ui(b[m].get_mpz_t(), b[m].get_mpz_t(), static_cast<unsigned long>(m));
    }
    std::vector<Rational> a(N + 1, Rational(0));
    for (std::size_t j = 0; j < h.coeffs().size() && j <= N; ++j) {
        const Rational &hj = h.coeff(j);
        if (sgn(hj) == 0) {
            continue;
        }
        for (std::size_t n = j; n <= N; ++n) {
            a[n] += hj * b[n - j];
        }
    }
    return a;
}

std::vector<Rational> numerator_coefficients(std::span<const Rational> a, std::size_t D)
{
    std::vector<Integer> alt(D + 1);
    for (std::size_t i = 0; i <= D; ++i) {
        alt[i] = binomial(D, i);
        if (i % 2 == 1) {
            alt[i] = -alt[i];
        }
    }
    std::vector<Rational> out(a.size(), Rational(0));
    for (std::size_t j = 0; j < a.size(); ++j) {
        for (std::size_t i = 0; i <= std::min(j, D); ++i) {
            out[j] += alt[i] * a[j - i];
        }
    }
    return out;
}

Polynomial numerator_from_sequence(std::span<const Rational> a, std::size_t D, std::size_t max_degree)
{
    std::vector<Rational> c = numerator_coefficients(a, D);
    for (std::size_t j = max_degree + 1; j < c.size(); ++j) {
        if (sgn(c[j]) != 0) {
            throw NotPolynomialSequence("numerator_from_sequence: coefficient " + std::to_string(j) + " is " +
                                        c[j].get_str() + ", expected 0 (degree bound " +
                                        std::to_string(max_degree) + ")");
        }
    }
    if (c.size() > max_degree + 1) {
        c.resize(max_degree + 1);
    }
    return Polynomial(std::move(c));
}

Polynomial numerator_from_sequence(std::span<const Rational> a, std::size_t D)
{
    if (D == 0) {
        throw IndexOutOfRange("numerator_from_sequence: D must be positive");
    }
    if (a.size() < D + 1) {
        throw NotPolynomialSequence("numerator_from_sequence: need at least D+1 = " + std::to_string(D + 1) +
                                    " values, got " + std::to_string(a.size()));
    }
    return numerator_from_sequence(a, D, D - 1);
}

LaurentPolynomial::LaurentPolynomial(const Polynomial &p)
{
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (sgn(p.coeff(i)) != 0) {
            terms_.emplace(static_cast<long>(i), p.coeff(i));
        }
    }
}

LaurentPolynomial::LaurentPolynomial(std::map<long, Rational> terms)
{
    for (auto &[e, c] : terms) {
        if (sgn(c) != 0) {
            terms_.emplace(e, std::move(c));
        }
    }
}

const Rational &LaurentPolynomial::coeff(long e) const noexcept
{
    auto it = terms_.find(e);
    return it == terms_.end() ? zero_rational() : it->second;
}

std::optional<long> LaurentPolynomial::min_exponent() const noexcept
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.begin()->first;
}

std::optional<long> LaurentPolynomial::max_exponent() const noexcept
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.rbegin()->first;
}

void LaurentPolynomial::add_term(long e, const Rational &c)
{
    if (sgn(c) == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) {
            terms_.erase(it);
        }
    }
}

LaurentPolynomial LaurentPolynomial::shifted(long k) const
{
    LaurentPolynomial out;
    for (const auto &[e, c] : terms_) {
        out.terms_.emplace(e + k, c);
    }
    return out;
}

LaurentPolynomial LaurentPolynomial::substitute_power(long r) const
{
    LaurentPolynomial out;
    for (const auto &[e, c] : terms_) {
        out.add_term(e * r, c);
    }
    return out;
}

Polynomial LaurentPolynomial::to_polynomial() const
{
    if (terms_.empty()) {
        return {};
    }
    if (terms_.begin()->first < 0) {
        throw IndexOutOfRange("to_polynomial: negative exponent " + std::to_string(terms_.begin()->first));
    }
    std::vector<Rational> v(static_cast<std::size_t>(terms_.rbegin()->first) + 1);
    for (const auto &[e, c] : terms_) {
        v[static_cast<std::size_t>(e)] = c;
    }
    return Polynomial(std::move(v));
}

LaurentPolynomial operator+(const LaurentPolynomial &a, const LaurentPolynomial &b)
{
    LaurentPolynomial out = a;
    for (const auto &[e, c] : b.terms_) {
        out.add_term(e, c);
    }
    return out;
}

LaurentPolynomial operator*(const LaurentPolynomial &a, const LaurentPolynomial &b)
{
    LaurentPolynomial out;
    for (const auto &[ea, ca] : a.terms_) {
        for (const auto &[eb, cb] : b.terms_) {
            out.add_term(ea + eb, ca * cb);
        }
    }
    return out;
}

std::string LaurentPolynomial::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        append_term(os, first, c, e);
    }
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const LaurentPolynomial &p)
{
    return os << p.to_string();
}

DilationContext DilationContext::make(const Polynomial &h, std::size_t d, std::size_t r)
{
    const std::size_t s = h.degree_nonzero("dilation context");
    if (s > d) {
        throw DegreeExceeded("degree " + std::to_string(s) + " exceeds bound " + std::to_string(d));
    }
    if (r == 0) {
        throw IndexOutOfRange("dilation factor must be positive");
    }
    return DilationContext{d, r, s, d + 1 - s};
}

} // namespace symdecomp
