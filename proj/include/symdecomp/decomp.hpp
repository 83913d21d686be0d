#ifndef SYMDECOMP_DECOMP_HPP
#define SYMDECOMP_DECOMP_HPP

#include <cstddef>

#include "symdecomp/polynomial.hpp"

namespace symdecomp {

/// h = p + t*q with p symmetric about d/2 and q symmetric about (d-1)/2.
struct DecompPair {
    Polynomial p;
    Polynomial q;
    std::size_t d = 0;

    Polynomial recombine() const { return p + q.shifted(1); }
};

/// (1 + t + ... + t^(ell-1)) h = p_ell + t^ell q_ell.
struct StapledonPair {
    Polynomial p_ell;
    Polynomial q_ell;
    std::size_t d = 0;
    std::size_t s = 0;
    std::size_t ell = 1;
};

/// (1 + t + ... + t^(r-1)) h = v + t^ell w, valid for r >= ell.
struct VWPair {
    Polynomial v;
    Polynomial w;
    std::size_t d = 0;
    std::size_t s = 0;
    std::size_t ell = 1;
    std::size_t r = 1;
};

/// Symmetric decomposition by exact division by (1 - t).
/// Throws DegreeExceeded if deg h > d.
DecompPair symmetric_decomposition(const Polynomial &h, std::size_t d);

/// Closed-form partial sums; every identity is re-checked before returning.
StapledonPair stapledon_decomposition(const Polynomial &h, std::size_t d);

/// Throws DilationTooSmall when r < ell.
VWPair vw_decomposition(const Polynomial &h, std::size_t d, std::size_t r);

/// h_0 + ... + h_i >= h_d + ... + h_{d-i+1} for all i.
bool check_H(const Polynomial &h, std::size_t d);

/// h_0 + ... + h_i <= h_s + ... + h_{s-i} for all i, s = deg h.
bool check_S(const Polynomial &h);

} // namespace symdecomp

#endif
