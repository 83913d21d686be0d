#include "symdecomp/realroots.hpp"

#include <algorithm>
#include <string>

#include "symdecomp/decomp.hpp"
#include "symdecomp/errors.hpp"

namespace symdecomp {

namespace {

// Sturm chain with every member scaled by a positive constant so that
// |leading| = 1. Sign variations are unchanged and coefficients stay small.
SturmChain normalized_chain(const Polynomial &f)
{
    SturmChain out;
    out.chain.push_back(f.sign_normalized());
    Polynomial prev = out.chain.back();
    Polynomial cur = f.derivative().sign_normalized();
    while (!cur.is_zero()) {
        out.chain.push_back(cur);
        Polynomial next = (-divmod(prev, cur).second).sign_normalized();
        prev = std::move(cur);
        cur = std::move(next);
    }
    return out;
}

std::size_t count_variations(const std::vector<int> &signs)
{
    std::size_t changes = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) {
            continue;
        }
        if (last != 0 && s != last) {
            ++changes;
        }
        last = s;
    }
    return changes;
}

// Integer content-free leading coefficient of f, used to bound the
// denominators of rational roots.
Integer primitive_leading(const Polynomial &f)
{
    Integer den_lcm = 1;
    for (const auto &c : f.coeffs()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    Integer content = 0;
    for (const auto &c : f.coeffs()) {
        Integer scaled = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
    }
    Integer lead = f.leading().get_num() * (den_lcm / f.leading().get_den());
    return abs(lead) / content;
}

Rational floor_of(const Rational &x)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return Rational(q);
}

// Rational with the smallest denominator in the open interval (a, b), a < b.
// upper_infinite means (a, +inf).
Rational simplest_between(const Rational &a, const Rational &b, bool upper_infinite = false)
{
    if (!upper_infinite) {
        if (sgn(a) < 0 && sgn(b) > 0) {
            return Rational(0);
        }
        if (sgn(b) <= 0) {
            return -simplest_between(-b, -a);
        }
    }
    const Rational n = floor_of(a);
    if (upper_infinite || n + 1 < b) {
        return n + 1;
    }
    // n <= a < b <= n + 1
    const Rational lo = a - n;
    const Rational hi = b - n;
    const Rational inv_hi = 1 / hi;
    if (sgn(lo) == 0) {
        return n + 1 / simplest_between(inv_hi, inv_hi, true);
    }
    return n + 1 / simplest_between(inv_hi, 1 / lo);
}

// Distinct real roots of a square-free g of degree >= 1, left to right.
// Entries are exact points or open intervals. An upper endpoint is never a
// root; a lower endpoint may be an exact root reported separately.
std::vector<RootEntry> isolate_squarefree(const Polynomial &g)
{
    const SturmChain chain = normalized_chain(g);
    const Rational bound = cauchy_bound(g);
    std::vector<RootEntry> out;

    struct Node {
        Rational a;
        Rational b;
        std::size_t va;
        std::size_t vb;
        std::size_t count;
        bool b_is_root; // b was an exact hit already recorded; (a, b] counts exclude it
    };
    std::vector<Node> stack;
    const Rational lo = -bound;
    const std::size_t vlo = chain.variations_at(lo);
    const std::size_t vhi = chain.variations_at(bound);
    stack.push_back(Node{lo, bound, vlo, vhi, vlo - vhi, false});
    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();
        if (node.count == 0) {
            continue;
        }
        if (node.count == 1 && !node.b_is_root) {
            out.push_back(RootEntry{false, node.a, node.b, 1});
            continue;
        }
        Rational m = (node.a + node.b) / 2;
        const std::size_t vm = chain.variations_at(m);
        std::size_t left = node.va - vm;
        std::size_t right = vm - node.vb - (node.b_is_root ? 1 : 0);
        const bool hit = sgn(g(m)) == 0;
        if (hit) {
            left -= 1;
            out.push_back(RootEntry{true, m, m, 1});
        }
        // Right half first so the left half is processed next.
        stack.push_back(Node{m, node.b, vm, node.vb, right, node.b_is_root});
        stack.push_back(Node{node.a, m, node.va, vm, left, hit});
    }
    std::sort(out.begin(), out.end(), [](const RootEntry &x, const RootEntry &y) { return x.lower < y.lower; });
    return out;
}

// Shrinks an isolating interval of a square-free g until it is short enough
// that at most one rational with a denominator dividing the leading
// coefficient fits, then tests the simplest rational inside.
void settle_rational(const Polynomial &g, const Integer &lead, RootEntry &entry)
{
    if (entry.exact) {
        return;
    }
    const Rational limit = Rational(1) / (Rational(lead) * Rational(lead));
    const int sb = g.sign_at(entry.upper);
    while (entry.upper - entry.lower >= limit) {
        Rational m = (entry.lower + entry.upper) / 2;
        const int sm = g.sign_at(m);
        if (sm == 0) {
            entry.exact = true;
            entry.lower = m;
            entry.upper = m;
            return;
        }
        if (sm == sb) {
            entry.upper = m;
        } else {
            entry.lower = m;
        }
    }
    Rational candidate = simplest_between(entry.lower, entry.upper);
    if (sgn(g(candidate)) == 0) {
        entry.exact = true;
        entry.lower = candidate;
        entry.upper = std::move(candidate);
    }
}

bool contains_root(const Polynomial &factor, const RootEntry &entry)
{
    if (!factor.degree() || *factor.degree() == 0) {
        return false;
    }
    if (entry.exact) {
        return sgn(factor(entry.lower)) == 0;
    }
    return count_roots_in(factor, entry.lower, entry.upper) > 0;
}

std::size_t multiplicity_in(const std::vector<Polynomial> &factors, const RootEntry &entry)
{
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (contains_root(factors[i], entry)) {
            return i + 1;
        }
    }
    return 0;
}

bool unimodal_sequence(std::span<const Rational> h)
{
    std::size_t i = 0;
    while (i + 1 < h.size() && h[i] <= h[i + 1]) {
        ++i;
    }
    while (i + 1 < h.size() && h[i] >= h[i + 1]) {
        ++i;
    }
    return h.empty() || i + 1 == h.size();
}

std::vector<Rational> padded(const Polynomial &h, std::size_t d)
{
    std::vector<Rational> v(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        v[i] = h.coeff(i);
    }
    return v;
}

} // namespace

std::size_t SturmChain::variations_at(const Rational &x) const
{
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto &p : chain) {
        signs.push_back(p.sign_at(x));
    }
    return count_variations(signs);
}

std::size_t SturmChain::variations_at_infinity(bool positive) const
{
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto &p : chain) {
        int s = sgn(p.leading());
        if (!positive && *p.degree() % 2 == 1) {
            s = -s;
        }
        signs.push_back(s);
    }
    return count_variations(signs);
}

std::size_t RootCatalog::total_multiplicity() const
{
    std::size_t total = 0;
    for (const auto &e : entries) {
        total += e.multiplicity;
    }
    return total;
}

std::vector<Polynomial> squarefree_factorization(const Polynomial &f)
{
    std::vector<Polynomial> factors;
    if (f.is_zero() || *f.degree() == 0) {
        return factors;
    }
    const Polynomial fm = f.monic();
    const Polynomial df = fm.derivative();
    const Polynomial b = gcd(fm, df);
    Polynomial c = divide_exact(fm, b);
    Polynomial w = divide_exact(df, b) - c.derivative();
    while (*c.degree() > 0) {
        Polynomial a = gcd(c, w);
        c = divide_exact(c, a);
        w = divide_exact(w, a) - c.derivative();
        factors.push_back(std::move(a));
    }
    return factors;
}

Polynomial squarefree_part(const Polynomial &f)
{
    if (f.is_zero()) {
        throw ZeroPolynomial("squarefree_part: zero polynomial");
    }
    return divide_exact(f, gcd(f, f.derivative())).monic();
}

Rational cauchy_bound(const Polynomial &f)
{
    const std::size_t n = f.degree_nonzero("cauchy_bound");
    Rational best(0);
    for (std::size_t i = 0; i < n; ++i) {
        Rational ratio = abs(f.coeff(i) / f.leading());
        if (ratio > best) {
            best = ratio;
        }
    }
    return best + 1;
}

SturmChain sturm_chain(const Polynomial &f)
{
    f.degree_nonzero("sturm_chain");
    SturmChain out;
    out.chain.push_back(f);
    Polynomial prev = f;
    Polynomial cur = f.derivative();
    while (!cur.is_zero()) {
        out.chain.push_back(cur);
        Polynomial next = -divmod(prev, cur).second;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return out;
}

std::size_t count_roots_in(const Polynomial &f, const Rational &a, const Rational &b)
{
    f.degree_nonzero("count_roots_in");
    if (!(a < b)) {
        throw BadInterval("count_roots_in: need a < b, got (" + a.get_str() + ", " + b.get_str() + "]");
    }
    if (*f.degree() == 0) {
        return 0;
    }
    const SturmChain chain = normalized_chain(squarefree_part(f));
    return chain.variations_at(a) - chain.variations_at(b);
}

RootCatalog isolate_roots(const Polynomial &f)
{
    RootCatalog catalog;
    catalog.source_degree = f.degree_nonzero("isolate_roots");
    if (catalog.source_degree == 0) {
        return catalog;
    }
    const Polynomial g = squarefree_part(f);
    const std::vector<Polynomial> factors = squarefree_factorization(f);
    const Integer lead = primitive_leading(g);
    catalog.entries = isolate_squarefree(g);
    for (auto &entry : catalog.entries) {
        settle_rational(g, lead, entry);
        entry.multiplicity = multiplicity_in(factors, entry);
        ensure(entry.multiplicity > 0, "isolate_roots: root not found in any square-free factor");
    }
    ensure(catalog.total_multiplicity() <= catalog.source_degree, "isolate_roots: too many roots");
    return catalog;
}

bool is_real_rooted(const Polynomial &f)
{
    if (f.is_zero() || *f.degree() == 0) {
        return true;
    }
    const Polynomial g = squarefree_part(f);
    const SturmChain chain = normalized_chain(g);
    const std::size_t real = chain.variations_at_infinity(false) - chain.variations_at_infinity(true);
    return real == *g.degree();
}

bool interlaces(const Polynomial &f, const Polynomial &g)
{
    if (f.is_zero()) {
        return is_real_rooted(g);
    }
    if (g.is_zero()) {
        return is_real_rooted(f);
    }
    const std::size_t df = *f.degree();
    const std::size_t dg = *g.degree();
    if (dg != df && dg != df + 1) {
        return false;
    }
    if (!is_real_rooted(f) || !is_real_rooted(g)) {
        return false;
    }
    if (df == 0) {
        return true;
    }

    // Isolate the distinct roots of f*g together; each merged root then gets
    // its multiplicity in f and in g, so coincident roots are exact.
    const std::vector<RootEntry> merged = isolate_squarefree(squarefree_part(f * g));
    const auto f_factors = squarefree_factorization(f);
    const auto g_factors = squarefree_factorization(g);
    std::vector<std::size_t> s_pos;
    std::vector<std::size_t> t_pos;
    for (std::size_t k = merged.size(); k-- > 0;) {
        s_pos.insert(s_pos.end(), multiplicity_in(f_factors, merged[k]), k);
        t_pos.insert(t_pos.end(), multiplicity_in(g_factors, merged[k]), k);
    }
    ensure(s_pos.size() == df && t_pos.size() == dg, "interlaces: root count mismatch");

    // Descending: s_pos[i] is s_{i+1}. Need t_{i+1} <= s_i <= t_i.
    for (std::size_t i = 0; i < s_pos.size(); ++i) {
        if (s_pos[i] > t_pos[i]) {
            return false;
        }
        if (i + 1 < t_pos.size() && s_pos[i] < t_pos[i + 1]) {
            return false;
        }
    }
    return true;
}

bool is_interlacing_sequence_shortcut(std::span<const Polynomial> fs)
{
    if (fs.empty()) {
        return true;
    }
    for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
        if (!interlaces(fs[i], fs[i + 1])) {
            return false;
        }
    }
    return interlaces(fs.front(), fs.back());
}

bool is_interlacing_sequence(std::span<const Polynomial> fs)
{
    const std::size_t n = fs.size();
    bool full = true;
    bool consecutive = true;
    bool ends = true;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const bool ok = interlaces(fs[i], fs[j]);
            full = full && ok;
            if (j == i + 1) {
                consecutive = consecutive && ok;
            }
            if (i == 0 && j == n - 1) {
                ends = ok;
            }
        }
    }
    const bool has_zero = std::any_of(fs.begin(), fs.end(), [](const Polynomial &p) { return p.is_zero(); });
    if (!has_zero) {
        ensure(full == (consecutive && ends), "is_interlacing_sequence: shortcut disagrees with pairwise check");
    }
    return full;
}

DecompProperty parse_decomp_property(std::string_view name)
{
    if (name == "nonnegative") {
        return DecompProperty::nonnegative;
    }
    if (name == "real_rooted") {
        return DecompProperty::real_rooted;
    }
    if (name == "interlacing") {
        return DecompProperty::interlacing;
    }
    throw InputError("unknown decomposition property '" + std::string(name) + "'");
}

bool decomposition_is(const Polynomial &h, std::size_t d, DecompProperty what)
{
    const DecompPair dec = symmetric_decomposition(h, d);
    switch (what) {
    case DecompProperty::nonnegative:
        return dec.p.all_nonnegative() && dec.q.all_nonnegative();
    case DecompProperty::real_rooted:
        return is_real_rooted(dec.p) && is_real_rooted(dec.q);
    case DecompProperty::interlacing:
        return is_real_rooted(dec.p) && is_real_rooted(dec.q) && interlaces(dec.q, dec.p);
    }
    return false;
}

Shape parse_shape(std::string_view name)
{
    if (name == "unimodal") {
        return Shape::unimodal;
    }
    if (name == "log_concave") {
        return Shape::log_concave;
    }
    if (name == "alternatingly_increasing") {
        return Shape::alternatingly_increasing;
    }
    throw InputError("unknown shape '" + std::string(name) + "'");
}

bool shape(const Polynomial &h, std::size_t d, Shape which)
{
    if (!h.is_zero() && *h.degree() > d) {
        throw DegreeExceeded("shape: deg h exceeds d");
    }
    if (which == Shape::alternatingly_increasing) {
        const DecompPair dec = symmetric_decomposition(h, d);
        if (!dec.p.all_nonnegative() || !dec.q.all_nonnegative()) {
            return false;
        }
        const auto q_coeffs = d == 0 ? std::vector<Rational>{} : padded(dec.q, d - 1);
        return unimodal_sequence(padded(dec.p, d)) && unimodal_sequence(q_coeffs);
    }
    if (!h.all_nonnegative()) {
        throw NegativeCoefficient("shape: unimodal/log_concave need nonnegative coefficients, got " + h.to_string());
    }
    const auto c = padded(h, d);
    if (which == Shape::unimodal) {
        return unimodal_sequence(c);
    }
    for (std::size_t i = 1; i + 1 < c.size(); ++i) {
        if (c[i - 1] * c[i + 1] > c[i] * c[i]) {
            return false;
        }
    }
    return true;
}

} // namespace symdecomp
