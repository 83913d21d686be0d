// Randomized property suites over constructed interlacing instances. Shared by
// test_realroots and the acceptance binary.
#ifndef SYMDECOMP_TESTS_PROPERTIES_HPP
#define SYMDECOMP_TESTS_PROPERTIES_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "symdecomp/decomp.hpp"
#include "symdecomp/realroots.hpp"
#include "symdecomp/veronese.hpp"

namespace props {

using symdecomp::Polynomial;
using symdecomp::Rational;
using Roots = std::vector<Rational>; // descending

struct SuiteResult {
    std::size_t trials = 0;
    std::size_t violations = 0;
    std::size_t positives = 0; // trials where the checked relation was true
};

inline Rational between(std::mt19937_64 &rng, const Rational &lo, const Rational &hi)
{
    // Endpoints are drawn often so that shared roots get exercised.
    const long k = static_cast<long>(rng() % 9);
    return lo + (hi - lo) * Rational(k) / 8;
}

inline Rational positive_scalar(std::mt19937_64 &rng)
{
    return Rational(static_cast<long>(1 + rng() % 9)) / static_cast<long>(1 + rng() % 4);
}

inline Roots random_roots(std::mt19937_64 &rng, std::size_t k)
{
    Roots r = oracle::random_nonpositive_roots(rng, k, 5);
    std::reverse(r.begin(), r.end());
    return r;
}

inline Polynomial from_roots(const Roots &roots, const Rational &lead)
{
    return oracle::product_of_linear(roots, lead);
}

/// Roots of some g with h <= g, all nonpositive. `extra` adds a root below
/// the last root of h, giving deg g = deg h + 1.
inline Roots roots_above(std::mt19937_64 &rng, const Roots &h, bool extra)
{
    Roots out;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const Rational hi = i == 0 ? Rational(0) : h[i - 1];
        out.push_back(between(rng, h[i], hi));
    }
    if (extra) {
        const Rational hi = h.empty() ? Rational(0) : h.back();
        out.push_back(between(rng, hi - 3, hi));
    }
    return out;
}

/// Roots of some f with f <= g. `fewer` drops the bottom root, giving
/// deg f = deg g - 1.
inline Roots roots_below(std::mt19937_64 &rng, const Roots &g, bool fewer)
{
    Roots out;
    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
        out.push_back(between(rng, g[i + 1], g[i]));
    }
    if (!fewer && !g.empty()) {
        out.push_back(between(rng, g.back() - 3, g.back()));
    }
    return out;
}

/// Equal-degree interlacing sequence: k disjoint intervals, with the j-th
/// member taking the j-th smallest of m sorted points in every interval.
inline std::vector<Polynomial> interlacing_sequence(std::mt19937_64 &rng, std::size_t m, std::size_t k)
{
    std::vector<Roots> roots(m);
    Rational top = 0;
    for (std::size_t j = 0; j < k; ++j) {
        const Rational width = Rational(static_cast<long>(1 + rng() % 3));
        const Rational lo = top - width;
        Roots pts;
        for (std::size_t i = 0; i < m; ++i) {
            pts.push_back(between(rng, lo, top));
        }
        std::sort(pts.begin(), pts.end());
        for (std::size_t i = 0; i < m; ++i) {
            roots[i].push_back(pts[i]);
        }
        top = lo - Rational(static_cast<long>(rng() % 2)) / 2;
    }
    std::vector<Polynomial> out;
    for (const auto &r : roots) {
        out.push_back(from_roots(r, positive_scalar(rng)));
    }
    return out;
}

/// Basic interlacing facts, each checked on `trials` random
/// constructed instances.
inline SuiteResult scale_invariance(std::size_t trials, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    SuiteResult res;
    for (std::size_t t = 0; t < trials; ++t) {
        const Roots hr = random_roots(rng, rng() % 5);
        const Polynomial g = from_roots(hr, positive_scalar(rng));
        const bool related = rng() % 2 == 0;
        const Polynomial f = related ? from_roots(roots_above(rng, hr, rng() % 2 == 0), positive_scalar(rng))
                                     : from_roots(random_roots(rng, hr.size() + rng() % 2), positive_scalar(rng));
        const bool base = symdecomp::interlaces(g, f);
        const bool scaled = symdecomp::interlaces(g * Polynomial::constant(positive_scalar(rng)),
                                                  f * Polynomial::constant(positive_scalar(rng)));
        ++res.trials;
        res.positives += base ? 1 : 0;
        res.violations += base != scaled ? 1 : 0;
        if (related && !base) {
            ++res.violations; // constructed pairs must interlace
        }
    }
    return res;
}

inline SuiteResult common_lower_interlacer(std::size_t trials, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    SuiteResult res;
    for (std::size_t t = 0; t < trials; ++t) {
        const Roots hr = random_roots(rng, rng() % 5);
        const Polynomial h = from_roots(hr, positive_scalar(rng));
        const Polynomial f = from_roots(roots_above(rng, hr, rng() % 2 == 0), positive_scalar(rng));
        const Polynomial g = from_roots(roots_above(rng, hr, rng() % 2 == 0), positive_scalar(rng));
        ++res.trials;
        const bool premise = symdecomp::interlaces(h, f) && symdecomp::interlaces(h, g);
        const bool ok = premise && symdecomp::interlaces(h, f + g);
        res.positives += ok ? 1 : 0;
        res.violations += ok ? 0 : 1;
    }
    return res;
}

inline SuiteResult common_upper_interlacer(std::size_t trials, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    SuiteResult res;
    for (std::size_t t = 0; t < trials; ++t) {
        const Roots hr = random_roots(rng, 1 + rng() % 5);
        const Polynomial h = from_roots(hr, positive_scalar(rng));
        const Polynomial f = from_roots(roots_below(rng, hr, rng() % 2 == 0), positive_scalar(rng));
        const Polynomial g = from_roots(roots_below(rng, hr, rng() % 2 == 0), positive_scalar(rng));
        ++res.trials;
        const bool premise = symdecomp::interlaces(f, h) && symdecomp::interlaces(g, h);
        const bool ok = premise && symdecomp::interlaces(f + g, h);
        res.positives += ok ? 1 : 0;
        res.violations += ok ? 0 : 1;
    }
    return res;
}

inline SuiteResult shift_swap(std::size_t trials, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    SuiteResult res;
    for (std::size_t t = 0; t < trials; ++t) {
        const Roots gr = random_roots(rng, rng() % 5);
        const Polynomial g = from_roots(gr, positive_scalar(rng));
        const bool related = rng() % 2 == 0;
        const Polynomial f = related ? from_roots(roots_above(rng, gr, rng() % 2 == 0), positive_scalar(rng))
                                     : from_roots(random_roots(rng, gr.size() + rng() % 2), positive_scalar(rng));
        const bool lhs = symdecomp::interlaces(g, f);
        const bool rhs = symdecomp::interlaces(f, g.shifted(1));
        ++res.trials;
        res.positives += lhs ? 1 : 0;
        res.violations += lhs != rhs ? 1 : 0;
    }
    return res;
}

/// Cross sums of two interlacing sequences, and nonnegative combinations of
/// one, are real-rooted.
inline SuiteResult cross_sums(std::size_t trials, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    SuiteResult res;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t m = 1 + rng() % 4;
        const auto fs = interlacing_sequence(rng, m, rng() % 4);
        const auto gs = interlacing_sequence(rng, m, rng() % 4);
        Polynomial cross;
        Polynomial comb;
        for (std::size_t i = 0; i < m; ++i) {
            cross = cross + fs[i] * gs[m - 1 - i];
            comb = comb + fs[i] * Polynomial::constant(Rational(static_cast<long>(rng() % 4)));
        }
        ++res.trials;
        const bool ok = symdecomp::is_interlacing_sequence(fs) && symdecomp::is_interlacing_sequence(gs) &&
                        symdecomp::is_real_rooted(cross) && symdecomp::is_real_rooted(comb);
        res.positives += ok ? 1 : 0;
        res.violations += ok ? 0 : 1;
    }
    return res;
}

/// Full pairwise sequence check against consecutive pairs plus the ends, on
/// constructed sequences and on perturbed ones.
inline SuiteResult sequence_shortcut(std::size_t trials, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    SuiteResult res;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t m = 1 + rng() % 5;
        auto fs = interlacing_sequence(rng, m, 1 + rng() % 3);
        switch (rng() % 3) {
        case 0:
            break;
        case 1:
            std::swap(fs[rng() % m], fs[rng() % m]);
            break;
        default:
            fs[rng() % m] = from_roots(random_roots(rng, fs[0].degree().value_or(0)), 1);
            break;
        }
        const bool full = symdecomp::is_interlacing_sequence(fs);
        const bool shortcut = symdecomp::is_interlacing_sequence_shortcut(fs);
        bool pairwise = true;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i; j < m; ++j) {
                pairwise = pairwise && symdecomp::interlaces(fs[i], fs[j]);
            }
        }
        ++res.trials;
        res.positives += full ? 1 : 0;
        res.violations += (full != shortcut || full != pairwise) ? 1 : 0;
    }
    return res;
}

/// The four characterizations of an interlacing decomposition agree whenever
/// both parts are nonnegative. Inputs mix dilated symmetric polynomials,
/// products of (1+t), and raw random h.
inline SuiteResult decomposition_equivalence(std::size_t trials, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    SuiteResult res;
    while (res.trials < trials) {
        const std::size_t d = 1 + rng() % 6;
        Polynomial h;
        switch (rng() % 3) {
        case 0: {
            Polynomial g = oracle::random_nonnegative(rng, rng() % (d + 1), 4);
            const std::size_t s = *g.degree();
            g = g + symdecomp::reverse(g, static_cast<long>(s));
            h = symdecomp::dilate_numerator(g, 1 + rng() % (d + 2), d + 1);
            break;
        }
        case 1: {
            const Polynomial p = symdecomp::geometric_power(2, d) * Polynomial::constant(positive_scalar(rng));
            const Polynomial q = symdecomp::geometric_power(2, d - 1) * Polynomial::constant(Rational(static_cast<long>(rng() % 4)));
            h = p + q.shifted(1);
            break;
        }
        default:
            h = oracle::random_nonnegative(rng, rng() % (d + 1), 6);
            break;
        }
        const symdecomp::DecompPair dec = symdecomp::symmetric_decomposition(h, d);
        if (!dec.p.all_nonnegative() || !dec.q.all_nonnegative()) {
            continue;
        }
        const bool i = symdecomp::interlaces(dec.q, dec.p);
        const bool ii = symdecomp::interlaces(dec.p, h);
        const bool iii = symdecomp::interlaces(dec.q, h);
        const bool iv = symdecomp::interlaces(symdecomp::reverse(h, static_cast<long>(d)), h);
        ++res.trials;
        res.positives += i ? 1 : 0;
        res.violations += (i == ii && ii == iii && iii == iv) ? 0 : 1;
    }
    return res;
}

} // namespace props

#endif
