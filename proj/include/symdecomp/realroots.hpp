#ifndef SYMDECOMP_REALROOTS_HPP
#define SYMDECOMP_REALROOTS_HPP

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "symdecomp/polynomial.hpp"

namespace symdecomp {

struct SturmChain {
    /// f, f', -rem(f, f'), ... up to the last nonzero remainder.
    std::vector<Polynomial> chain;

    /// Sign changes along the chain at x, zeros skipped.
    std::size_t variations_at(const Rational &x) const;
    std::size_t variations_at_infinity(bool positive) const;
};

/// One distinct real root: either an exact rational or the unique root in the
/// open interval (lower, upper).
struct RootEntry {
    bool exact = false;
    Rational lower;
    Rational upper;
    std::size_t multiplicity = 1;

    const Rational &value() const { return lower; } // meaningful only when exact
};

struct RootCatalog {
    /// Ascending, pairwise disjoint.
    std::vector<RootEntry> entries;
    std::size_t source_degree = 0;

    std::size_t total_multiplicity() const;
};

/// Factors g_1, g_2, ... with f = c * prod g_i^i, each g_i monic and square-free.
/// Entry i-1 holds g_i (possibly the constant 1).
std::vector<Polynomial> squarefree_factorization(const Polynomial &f);
Polynomial squarefree_part(const Polynomial &f);

/// Strict upper bound on the absolute value of every root.
Rational cauchy_bound(const Polynomial &f);

SturmChain sturm_chain(const Polynomial &f);

/// Distinct real roots in the half-open interval (a, b].
std::size_t count_roots_in(const Polynomial &f, const Rational &a, const Rational &b);

/// All distinct real roots with multiplicities. Rational roots are always
/// reported as exact points.
RootCatalog isolate_roots(const Polynomial &f);

/// Zero and nonzero constants count as real-rooted.
bool is_real_rooted(const Polynomial &f);

/// f interlaces g (f <= g in the interlacing order): with roots
/// s_k <= ... <= s_1 of f and t_m <= ... <= t_1 of g,
/// ... <= s_2 <= t_2 <= s_1 <= t_1 and deg g in {deg f, deg f + 1}.
/// The zero polynomial interlaces, and is interlaced by, every real-rooted
/// polynomial.
bool interlaces(const Polynomial &f, const Polynomial &g);

/// fs[i] interlaces fs[j] for all i <= j. When no member is zero the
/// consecutive-pairs-plus-ends shortcut is evaluated too and must agree.
bool is_interlacing_sequence(std::span<const Polynomial> fs);

/// Consecutive pairs plus first-interlaces-last.
bool is_interlacing_sequence_shortcut(std::span<const Polynomial> fs);

enum class DecompProperty { nonnegative, real_rooted, interlacing };
DecompProperty parse_decomp_property(std::string_view name);

bool decomposition_is(const Polynomial &h, std::size_t d, DecompProperty what);

enum class Shape { unimodal, log_concave, alternatingly_increasing };
Shape parse_shape(std::string_view name);

/// Unimodal and log-concave reject negative coefficients (NegativeCoefficient).
bool shape(const Polynomial &h, std::size_t d, Shape which);

} // namespace symdecomp

#endif
