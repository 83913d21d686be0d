#ifndef SYMDECOMP_VERONESE_HPP
#define SYMDECOMP_VERONESE_HPP

#include <cstddef>
#include <string_view>
#include <vector>

#include "symdecomp/decomp.hpp"
#include "symdecomp/polynomial.hpp"

namespace symdecomp {

/// parts[i] is the section of index i: source(t) = sum_i t^i parts[i](t^r).
struct SectionFamily {
    std::vector<Polynomial> parts;
    std::size_t r = 1;

    Polynomial reconstruct() const;
};

/// Exponent e of f lands in part (e mod r) at exponent floor(e / r), with the
/// nonnegative modulus for negative e.
LaurentPolynomial section(const LaurentPolynomial &f, std::size_t r, std::size_t i);
Polynomial section(const Polynomial &f, std::size_t r, std::size_t i);
SectionFamily sections(const Polynomial &f, std::size_t r);

enum class DilateBackend { series, product, sum };

std::string_view to_string(DilateBackend backend);
DilateBackend parse_backend(std::string_view name);

/**
 * Numerator of sum a_{rn} t^n over (1-t)^D, where sum a_n t^n = h / (1-t)^D.
 *
 * - product: section 0 of h * (1 + ... + t^(r-1))^D.
 * - sum:     h<0> a_D<0> + sum_{i>0} h<i> * t * a_D<r-i>.
 * - series:  expands the series, keeps every r-th term and transforms back.
 */
Polynomial dilate_numerator(const Polynomial &h, std::size_t r, std::size_t D,
                            DilateBackend backend = DilateBackend::product);

/// Runs all three backends and throws InternalError unless they agree.
Polynomial dilate_numerator_checked(const Polynomial &h, std::size_t r, std::size_t D);

/// Section i of (1 + t + ... + t^(r-1))^d.
Polynomial a_poly(std::size_t d, std::size_t r, std::size_t i);

enum class SectionBackend { direct, recursion };

/// Section i of h * (1 + t + ... + t^(r-1))^d.
Polynomial a_h_poly(const Polynomial &h, std::size_t d, std::size_t r, std::size_t i,
                    SectionBackend backend = SectionBackend::direct);

/// All r sections at once; parts[i] = a_h_poly(h, d, r, i).
SectionFamily a_h_family(const Polynomial &h, std::size_t d, std::size_t r,
                         SectionBackend backend = SectionBackend::direct);

/**
 * Symmetric decomposition (p~, q~) of U_r^{d+1} h with respect to d, built from
 * the product-section formulas and checked against the generic decomposition
 * of the dilated numerator.
 */
DecompPair dilated_decomposition(const Polynomial &h, std::size_t d, std::size_t r);

} // namespace symdecomp

#endif
