#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "symdecomp/decomp.hpp"
#include "symdecomp/errors.hpp"

using namespace symdecomp;

namespace {

void check_against_oracle(const Polynomial &h, std::size_t d)
{
    const DecompPair dec = symmetric_decomposition(h, d);
    const auto [p, q] = oracle::decompose(h, d);
    CHECK(dec.p == p);
    CHECK(dec.q == q);
    CHECK(dec.recombine() == h);
    CHECK(is_symmetric(dec.p, static_cast<long>(d)));
    CHECK(is_symmetric(dec.q, static_cast<long>(d) - 1));
}

// Partial sums straight from the definitions, for the property checks.
bool H_oracle(const Polynomial &h, std::size_t d)
{
    for (std::size_t i = 0; i <= d; ++i) {
        Rational lhs = 0;
        Rational rhs = 0;
        for (std::size_t j = 0; j <= i; ++j) {
            lhs += h.coeff(j);
        }
        for (std::size_t j = 0; j < i; ++j) {
            rhs += h.coeff(d - j);
        }
        if (lhs < rhs) {
            return false;
        }
    }
    return true;
}

bool S_oracle(const Polynomial &h)
{
    const std::size_t s = *h.degree();
    for (std::size_t i = 0; i <= s; ++i) {
        Rational lhs = 0;
        Rational rhs = 0;
        for (std::size_t j = 0; j <= i; ++j) {
            lhs += h.coeff(j);
            rhs += h.coeff(s - j);
        }
        if (lhs > rhs) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("symmetric_decomposition worked values")
{
    const DecompPair a = symmetric_decomposition(Polynomial{1, 2}, 2);
    CHECK(a.p == Polynomial{1, 3, 1});
    CHECK(a.q == Polynomial{-1, -1});
    const DecompPair b = symmetric_decomposition(Polynomial{1, 1, 1}, 2);
    CHECK(b.p == Polynomial{1, 1, 1});
    CHECK(b.q.is_zero());
    const DecompPair c = symmetric_decomposition(Polynomial{1}, 3);
    CHECK(c.p == Polynomial{1, 1, 1, 1});
    CHECK(c.q == Polynomial{-1, -1, -1});
    CHECK_THROWS_AS(symmetric_decomposition(Polynomial{1, 1, 1}, 1), DegreeExceeded);
    CHECK(symmetric_decomposition(Polynomial{}, 3).p.is_zero());
}

TEST_CASE("symmetric_decomposition matches the linear-solve oracle")
{
    check_against_oracle(Polynomial{1, 2}, 2);
    check_against_oracle(Polynomial{1}, 3);
    check_against_oracle(Polynomial{5}, 0);
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t d = rng() % 9;
        check_against_oracle(oracle::random_poly(rng, rng() % (d + 1), -6, 6), d);
    }
    // Rational coefficients are allowed throughout.
    check_against_oracle(Polynomial{Rational(1) / 3, Rational(-5) / 7, 2}, 4);
}

TEST_CASE("stapledon_decomposition")
{
    const StapledonPair a = stapledon_decomposition(Polynomial{1, 2}, 2);
    CHECK(a.s == 1);
    CHECK(a.ell == 2);
    CHECK(a.p_ell == Polynomial{1, 3, 1});
    CHECK(a.q_ell == Polynomial{1});

    const StapledonPair b = stapledon_decomposition(Polynomial{1, 3, 1}, 2);
    CHECK(b.ell == 1);
    CHECK(b.p_ell == Polynomial{1, 3, 1});
    CHECK(b.q_ell.is_zero());

    const StapledonPair c = stapledon_decomposition(Polynomial{1, 1, 1}, 4);
    CHECK(c.ell == 3);
    CHECK(c.q_ell.is_zero());
    CHECK(c.p_ell == Polynomial{1, 2, 3, 2, 1});

    // Constant h: q_ell lives in degree s-1 < 0, so it must vanish.
    const StapledonPair e = stapledon_decomposition(Polynomial{3}, 2);
    CHECK(e.ell == 3);
    CHECK(e.q_ell.is_zero());
    CHECK(e.p_ell == Polynomial{3, 3, 3});

    CHECK_THROWS_AS(stapledon_decomposition(Polynomial{}, 2), ZeroPolynomial);
    CHECK_THROWS_AS(stapledon_decomposition(Polynomial{1, 1, 1}, 1), DegreeExceeded);
}

TEST_CASE("stapledon identity and symmetry on random inputs")
{
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t d = rng() % 9;
        const std::size_t s = rng() % (d + 1);
        const Polynomial h = oracle::random_poly(rng, s, -5, 5) + Polynomial::monomial(7, s);
        if (h.degree() != s) {
            continue;
        }
        const StapledonPair st = stapledon_decomposition(h, d);
        CHECK(geometric_power(st.ell, 1) * h == st.p_ell + st.q_ell.shifted(st.ell));
        CHECK(is_symmetric(st.p_ell, static_cast<long>(d)));
        if (s >= 1) {
            CHECK(is_symmetric(st.q_ell, static_cast<long>(s) - 1));
        }
        CHECK(st.p_ell == oracle::decompose(h, d).first);
    }
}

TEST_CASE("vw_decomposition")
{
    const VWPair a = vw_decomposition(Polynomial{1, 2}, 2, 3);
    CHECK(a.v == Polynomial{1, 3, 1});
    CHECK(a.w == Polynomial{2, 2});
    CHECK(geometric_power(3, 1) * Polynomial{1, 2} == Polynomial{1, 3, 3, 2});

    const VWPair b = vw_decomposition(Polynomial{1, 2}, 2, 2);
    CHECK(b.v == Polynomial{1, 3, 1});
    CHECK(b.w == Polynomial{1});

    const VWPair c = vw_decomposition(Polynomial{1, 4, 1}, 2, 1);
    CHECK(c.v == Polynomial{1, 4, 1});
    CHECK(c.w.is_zero());

    CHECK_THROWS_AS(vw_decomposition(Polynomial{1, 2}, 3, 2), DilationTooSmall);
}

TEST_CASE("vw at r = ell coincides with stapledon, and v = p")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t d = rng() % 8;
        const Polynomial h = oracle::random_nonnegative(rng, rng() % (d + 1), 6);
        const StapledonPair st = stapledon_decomposition(h, d);
        const VWPair at = vw_decomposition(h, d, st.ell);
        CHECK(at.w == st.q_ell);
        CHECK(at.v == st.p_ell);
        const std::size_t r = st.ell + rng() % 5;
        const VWPair vw = vw_decomposition(h, d, r);
        CHECK(vw.v == symmetric_decomposition(h, d).p);
        CHECK(geometric_power(r, 1) * h == vw.v + vw.w.shifted(st.ell));
        CHECK(is_symmetric(vw.w, static_cast<long>(r + st.s) - static_cast<long>(st.ell) - 1));
    }
}

TEST_CASE("perturbing v or w breaks the identity or the symmetry")
{
    const Polynomial h{1, 2};
    const VWPair vw = vw_decomposition(h, 2, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        const Polynomial v2 = vw.v + Polynomial::monomial(1, i);
        CHECK_FALSE((is_symmetric(v2, 2) && geometric_power(3, 1) * h == v2 + vw.w.shifted(2)));
    }
    for (std::size_t i = 0; i < 2; ++i) {
        const Polynomial w2 = vw.w + Polynomial::monomial(1, i);
        CHECK_FALSE((is_symmetric(w2, 1) && geometric_power(3, 1) * h == vw.v + w2.shifted(2)));
    }
}

TEST_CASE("check_H and check_S examples")
{
    CHECK(check_H(Polynomial{1, 2}, 2));
    // For i = 0 the right-hand side is an empty sum, so h = t passes; p = 0 agrees.
    CHECK(check_H(Polynomial{0, 1}, 1));
    CHECK(symmetric_decomposition(Polynomial{0, 1}, 1).p.is_zero());
    CHECK_FALSE(check_H(Polynomial{0, 0, 1}, 2));
    CHECK(check_H(Polynomial{2, 5, 2}, 2));
    CHECK(check_S(Polynomial{1, 2}));
    CHECK_FALSE(check_S(Polynomial{2, 1}));
    CHECK(check_S(Polynomial{2, 5, 5, 2}));
    CHECK_THROWS_AS(check_S(Polynomial{}), ZeroPolynomial);
    CHECK_THROWS_AS(check_H(Polynomial{1, 1, 1}, 1), DegreeExceeded);
}

TEST_CASE("H and S agree with direct partial sums and with nonnegativity of p_ell, q_ell")
{
    std::mt19937_64 rng(24);
    std::size_t both = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t d = rng() % 8;
        const Polynomial h = oracle::random_nonnegative(rng, rng() % (d + 1), 5);
        CHECK(check_H(h, d) == H_oracle(h, d));
        CHECK(check_S(h) == S_oracle(h));
        const StapledonPair st = stapledon_decomposition(h, d);
        const bool hs = check_H(h, d) && check_S(h);
        CHECK(hs == (st.p_ell.all_nonnegative() && st.q_ell.all_nonnegative()));
        both += hs ? 1 : 0;
    }
    // Both outcomes must actually occur for the biconditional to mean anything.
    CHECK(both > 50);
    CHECK(both < 950);
}

TEST_CASE("symmetric nonnegative polynomials satisfy H and S")
{
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t s = rng() % 7;
        Polynomial h = oracle::random_nonnegative(rng, s, 6);
        h = h + reverse(h, static_cast<long>(s));
        CHECK(check_H(h, s));
        CHECK(check_S(h));
    }
}
