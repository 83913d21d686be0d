#include "symdecomp/veronese.hpp"

#include <algorithm>
#include <string>

#include "symdecomp/errors.hpp"

namespace symdecomp {

namespace {

void check_section_index(std::size_t r, std::size_t i)
{
    if (r == 0) {
        throw IndexOutOfRange("section: r must be positive");
    }
    if (i >= r) {
        throw IndexOutOfRange("section: index " + std::to_string(i) + " not in 0.." + std::to_string(r - 1));
    }
}

// f / t for f with vanishing constant term.
Polynomial divide_by_t(const Polynomial &f)
{
    ensure(sgn(f.coeff(0)) == 0, "divide_by_t: nonzero constant term in " + f.to_string());
    if (f.is_zero()) {
        return {};
    }
    return Polynomial(std::vector<Rational>(f.coeffs().begin() + 1, f.coeffs().end()));
}

Polynomial dilate_series(const Polynomial &h, std::size_t r, std::size_t D)
{
    const std::size_t s = *h.degree();
    // Degree bound of the dilated numerator: D - 1 when s < D, otherwise s.
    const std::size_t bound = std::max(s, D > 0 ? D - 1 : 0);
    const std::size_t terms = bound + D + 1;
    const std::vector<Rational> a = series_coefficients(h, D, r * (terms - 1));
    std::vector<Rational> resampled;
    resampled.reserve(terms);
    for (std::size_t n = 0; n < terms; ++n) {
        resampled.push_back(a[r * n]);
    }
    return numerator_from_sequence(resampled, D, bound);
}

Polynomial dilate_product(const Polynomial &h, std::size_t r, std::size_t D)
{
    return section(h * geometric_power(r, D), r, 0);
}

Polynomial dilate_sum(const Polynomial &h, std::size_t r, std::size_t D)
{
    const SectionFamily parts = sections(h, r);
    const SectionFamily a = sections(geometric_power(r, D), r);
    Polynomial out = parts.parts[0] * a.parts[0];
    for (std::size_t i = 1; i < r; ++i) {
        out += (parts.parts[i] * a.parts[r - i]).shifted(1);
    }
    return out;
}

} // namespace

Polynomial SectionFamily::reconstruct() const
{
    Polynomial out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        out += parts[i].substitute_power(r).shifted(i);
    }
    return out;
}

LaurentPolynomial section(const LaurentPolynomial &f, std::size_t r, std::size_t i)
{
    check_section_index(r, i);
    const long rl = static_cast<long>(r);
    LaurentPolynomial out;
    for (const auto &[e, c] : f.terms()) {
        long q = e / rl;
        long m = e % rl;
        if (m < 0) {
            m += rl;
            q -= 1;
        }
        if (static_cast<std::size_t>(m) == i) {
            out.add_term(q, c);
        }
    }
    return out;
}

Polynomial section(const Polynomial &f, std::size_t r, std::size_t i)
{
    check_section_index(r, i);
    std::vector<Rational> v;
    for (std::size_t j = i; j < f.coeffs().size(); j += r) {
        v.push_back(f.coeff(j));
    }
    return Polynomial(std::move(v));
}

SectionFamily sections(const Polynomial &f, std::size_t r)
{
    check_section_index(r, 0);
    SectionFamily out;
    out.r = r;
    out.parts.reserve(r);
    for (std::size_t i = 0; i < r; ++i) {
        out.parts.push_back(section(f, r, i));
    }
    return out;
}

std::string_view to_string(DilateBackend backend)
{
    switch (backend) {
    case DilateBackend::series:
        return "series";
    case DilateBackend::product:
        return "product";
    case DilateBackend::sum:
        return "sum";
    }
    return "unknown";
}

DilateBackend parse_backend(std::string_view name)
{
    if (name == "series") {
        return DilateBackend::series;
    }
    if (name == "product") {
        return DilateBackend::product;
    }
    if (name == "sum") {
        return DilateBackend::sum;
    }
    throw InputError("unknown backend '" + std::string(name) + "' (expected series, product or sum)");
}

Polynomial dilate_numerator(const Polynomial &h, std::size_t r, std::size_t D, DilateBackend backend)
{
    if (r == 0) {
        throw IndexOutOfRange("dilate_numerator: r must be positive");
    }
    if (h.is_zero()) {
        return {};
    }
    switch (backend) {
    case DilateBackend::series:
        return dilate_series(h, r, D);
    case DilateBackend::product:
        return dilate_product(h, r, D);
    case DilateBackend::sum:
        return dilate_sum(h, r, D);
    }
    throw InputError("dilate_numerator: invalid backend");
}

Polynomial dilate_numerator_checked(const Polynomial &h, std::size_t r, std::size_t D)
{
    Polynomial product = dilate_numerator(h, r, D, DilateBackend::product);
    const Polynomial series = dilate_numerator(h, r, D, DilateBackend::series);
    const Polynomial sum = dilate_numerator(h, r, D, DilateBackend::sum);
    ensure(product == series && product == sum,
           "dilate_numerator: backends disagree for h = " + h.to_string() + ", r = " + std::to_string(r) +
               ", D = " + std::to_string(D) + " (product " + product.to_string() + ", series " +
               series.to_string() + ", sum " + sum.to_string() + ")");
    return product;
}

Polynomial a_poly(std::size_t d, std::size_t r, std::size_t i)
{
    check_section_index(r, i);
    return section(geometric_power(r, d), r, i);
}

SectionFamily a_h_family(const Polynomial &h, std::size_t d, std::size_t r, SectionBackend backend)
{
    check_section_index(r, 0);
    if (backend == SectionBackend::direct) {
        return sections(h * geometric_power(r, d), r);
    }
    SectionFamily family = sections(h, r);
    for (std::size_t step = 0; step < d; ++step) {
        Polynomial total;
        for (const auto &part : family.parts) {
            total += part;
        }
        SectionFamily next;
        next.r = r;
        next.parts.reserve(r);
        Polynomial low;
        for (std::size_t i = 0; i < r; ++i) {
            low += family.parts[i];
            next.parts.push_back(low + (total - low).shifted(1));
        }
        family = std::move(next);
    }
    return family;
}

Polynomial a_h_poly(const Polynomial &h, std::size_t d, std::size_t r, std::size_t i, SectionBackend backend)
{
    check_section_index(r, i);
    if (backend == SectionBackend::direct) {
        return section(h * geometric_power(r, d), r, i);
    }
    return a_h_family(h, d, r, backend).parts[i];
}

DecompPair dilated_decomposition(const Polynomial &h, std::size_t d, std::size_t r)
{
    if (r == 0) {
        throw IndexOutOfRange("dilated_decomposition: r must be positive");
    }
    if (h.is_zero()) {
        return DecompPair{{}, {}, d};
    }
    const auto ctx = DilationContext::make(h, d, r);
    const Polynomial p = symmetric_decomposition(h, d).p;
    const Polynomial geo = geometric_power(r, 1);
    const Polynomial geo_d = geometric_power(r, d);

    Polynomial p_tilde = section(p * geo_d, r, 0);
    Polynomial q_tilde = divide_by_t(section((h * geo - p) * geo_d, r, 0));
    if (r >= ctx.ell) {
        const VWPair vw = vw_decomposition(h, d, r);
        const Polynomial via_w = divide_by_t(section(vw.w.shifted(ctx.ell) * geo_d, r, 0));
        ensure(via_w == q_tilde, "dilated_decomposition: w_r route disagrees for h = " + h.to_string());
    }

    DecompPair out{std::move(p_tilde), std::move(q_tilde), d};
    const DecompPair generic = symmetric_decomposition(dilate_numerator_checked(h, r, d + 1), d);
    ensure(generic.p == out.p && generic.q == out.q,
           "dilated_decomposition: formulas disagree with the generic decomposition for h = " + h.to_string());
    return out;
}

} // namespace symdecomp
