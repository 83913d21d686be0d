#include "symdecomp/rational.hpp"

#include <cctype>

#include "symdecomp/errors.hpp"

namespace symdecomp {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw InputError("malformed rational '" + std::string(text) + "'");
    }
    Integer n(std::string(num), 10);
    Integer q(std::string(den), 10);
    if (q == 0) {
        throw InputError("zero denominator in '" + std::string(text) + "'");
    }
    Rational value(negative ? Integer(-n) : n, q);
    value.canonicalize();
    return value;
}

std::string to_string(const Rational &value)
{
    return value.get_str();
}

Integer binomial(unsigned long n, unsigned long k)
{
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

} // namespace symdecomp
