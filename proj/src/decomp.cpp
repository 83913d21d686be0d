#include "symdecomp/decomp.hpp"

#include <string>
#include <vector>

#include "symdecomp/errors.hpp"

namespace symdecomp {

namespace {

// Prefix sums of h with h_i = 0 outside 0..s: prefix(k) = h_0 + ... + h_k.
class PartialSums {
public:
    explicit PartialSums(const Polynomial &h)
    {
        Rational acc(0);
        for (const auto &c : h.coeffs()) {
            acc += c;
            prefix_.push_back(acc);
        }
    }

    Rational prefix(long k) const
    {
        if (k < 0 || prefix_.empty()) {
            return Rational(0);
        }
        if (static_cast<std::size_t>(k) >= prefix_.size()) {
            return prefix_.back();
        }
        return prefix_[static_cast<std::size_t>(k)];
    }

    /// h_a + ... + h_b (empty sum when a > b).
    Rational range(long a, long b) const
    {
        if (a > b) {
            return Rational(0);
        }
        return prefix(b) - prefix(a - 1);
    }

private:
    std::vector<Rational> prefix_;
};

void require_degree(const Polynomial &h, std::size_t d, const char *op)
{
    if (!h.is_zero() && *h.degree() > d) {
        throw DegreeExceeded(std::string(op) + ": deg h = " + std::to_string(*h.degree()) + " exceeds d = " +
                             std::to_string(d));
    }
}

// Symmetry of q against an ambient bound that may be negative (then q must vanish).
bool symmetric_against(const Polynomial &q, long bound)
{
    if (bound < 0) {
        return q.is_zero();
    }
    return is_symmetric(q, bound);
}

} // namespace

DecompPair symmetric_decomposition(const Polynomial &h, std::size_t d)
{
    require_degree(h, d, "symmetric_decomposition");
    const Polynomial rev = reverse(h, static_cast<long>(d));
    const Polynomial one_minus_t{1, -1};
    auto [p, p_rem] = divmod(h - rev.shifted(1), one_minus_t);
    auto [q, q_rem] = divmod(rev - h, one_minus_t);
    ensure(p_rem.is_zero() && q_rem.is_zero(), "symmetric_decomposition: division by 1-t left a remainder");

    DecompPair out{std::move(p), std::move(q), d};
    ensure(out.recombine() == h, "symmetric_decomposition: p + t*q != h");
    ensure(is_symmetric(out.p, static_cast<long>(d)), "symmetric_decomposition: p not symmetric");
    ensure(symmetric_against(out.q, static_cast<long>(d) - 1), "symmetric_decomposition: q not symmetric");
    return out;
}

StapledonPair stapledon_decomposition(const Polynomial &h, std::size_t d)
{
    const auto ctx = DilationContext::make(h, d);
    const long dl = static_cast<long>(d);
    const long sl = static_cast<long>(ctx.s);
    const PartialSums sums(h);

    std::vector<Rational> p(d + 1);
    for (long i = 0; i <= dl; ++i) {
        p[static_cast<std::size_t>(i)] = sums.prefix(i) - sums.range(dl + 1 - i, dl);
    }
    std::vector<Rational> q(ctx.s);
    for (long i = 0; i < sl; ++i) {
        q[static_cast<std::size_t>(i)] = -sums.prefix(i) + sums.range(sl - i, sl);
    }

    StapledonPair out{Polynomial(std::move(p)), Polynomial(std::move(q)), d, ctx.s, ctx.ell};
    ensure(geometric_power(ctx.ell, 1) * h == out.p_ell + out.q_ell.shifted(ctx.ell),
           "stapledon_decomposition: defining identity fails");
    ensure(is_symmetric(out.p_ell, dl), "stapledon_decomposition: p_ell not symmetric");
    ensure(symmetric_against(out.q_ell, sl - 1), "stapledon_decomposition: q_ell not symmetric");
    ensure(out.p_ell == symmetric_decomposition(h, d).p, "stapledon_decomposition: p_ell != p");
    return out;
}

VWPair vw_decomposition(const Polynomial &h, std::size_t d, std::size_t r)
{
    const auto ctx = DilationContext::make(h, d, r);
    if (r < ctx.ell) {
        throw DilationTooSmall("vw_decomposition: r = " + std::to_string(r) + " is below the codegree " +
                               std::to_string(ctx.ell));
    }
    const long dl = static_cast<long>(d);
    const long sl = static_cast<long>(ctx.s);
    const long rl = static_cast<long>(r);
    const long ell = static_cast<long>(ctx.ell);
    const PartialSums sums(h);

    std::vector<Rational> v(d + 1);
    for (long i = 0; i <= dl; ++i) {
        v[static_cast<std::size_t>(i)] = sums.prefix(i) - sums.range(dl - i + 1, dl);
    }
    const long w_len = rl + sl - ell;
    std::vector<Rational> w(static_cast<std::size_t>(w_len));
    for (long i = 0; i < w_len; ++i) {
        w[static_cast<std::size_t>(i)] = -sums.range(ell - rl, ell + i - rl) + sums.range(sl - i, sl);
    }

    VWPair out{Polynomial(std::move(v)), Polynomial(std::move(w)), d, ctx.s, ctx.ell, r};
    ensure(geometric_power(r, 1) * h == out.v + out.w.shifted(ctx.ell), "vw_decomposition: defining identity fails");
    ensure(is_symmetric(out.v, dl), "vw_decomposition: v not symmetric");
    ensure(symmetric_against(out.w, w_len - 1), "vw_decomposition: w not symmetric");
    ensure(out.v == symmetric_decomposition(h, d).p, "vw_decomposition: v != p");
    return out;
}

bool check_H(const Polynomial &h, std::size_t d)
{
    require_degree(h, d, "check_H");
    const long dl = static_cast<long>(d);
    const PartialSums sums(h);
    bool direct = true;
    for (long i = 0; i <= dl && direct; ++i) {
        direct = sums.prefix(i) >= sums.range(dl - i + 1, dl);
    }
    const bool via_p = symmetric_decomposition(h, d).p.all_nonnegative();
    ensure(direct == via_p, "check_H: partial sums and p disagree for h = " + h.to_string());
    return direct;
}

bool check_S(const Polynomial &h)
{
    const long sl = static_cast<long>(h.degree_nonzero("check_S"));
    const PartialSums sums(h);
    bool direct = true;
    for (long i = 0; i <= sl && direct; ++i) {
        direct = sums.prefix(i) <= sums.range(sl - i, sl);
    }
    // Against d = s the codegree is 1 and q_ell is the plain q.
    const bool via_q = symmetric_decomposition(h, static_cast<std::size_t>(sl)).q.all_nonnegative();
    ensure(direct == via_q, "check_S: partial sums and q_ell disagree for h = " + h.to_string());
    return direct;
}

} // namespace symdecomp
