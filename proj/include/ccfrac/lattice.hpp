#pragma once

// Reduction of lattices Z w1 + Z w2 in C.

#include <utility>

#include "ccfrac/cfrac.hpp"
#include "ccfrac/error.hpp"
#include "ccfrac/exactnum.hpp"
#include "ccfrac/mat2.hpp"
#include "ccfrac/regions.hpp"

namespace ccfrac {

struct Basis {
    QuadElem w1;
    QuadElem w2;
};

struct ReducedBasis {
    QuadElem u;
    QuadElem v;
    // (w1, w2)^T = M (u, v)^T
    Mat2 M;
};

namespace detail {

inline QuadElem lattice_ratio(const QuadElem& w1, const QuadElem& w2)
{
    if (w1.is_zero() || w2.is_zero()) {
        throw Error(ErrorCode::DegenerateLattice, "zero basis vector");
    }
    if (w1.radicand() > 0 || w2.radicand() > 0) {
        throw Error(ErrorCode::DegenerateLattice, "basis vectors must be complex");
    }
    QuadElem z = w1 / w2;
    if (z.im_sign() == 0) {
        throw Error(ErrorCode::DegenerateLattice, format(w1) + " and " + format(w2) + " are R-dependent");
    }
    return z;
}

} // namespace detail

/// Unordered minimal basis from the continued fraction of w1/w2; u/v is the
/// tail of that expansion.
inline ReducedBasis reduce_basis(const Basis& b)
{
    const QuadElem z = detail::lattice_ratio(b.w1, b.w2);
    const ContinuedFraction cf = cf_expand(z);
    const Mat2 m = convergents(cf.coeffs()).matrix();
    const Mat2 inv = m.inverse();
    QuadElem u = QuadElem(inv.a()) * b.w1 + QuadElem(inv.b()) * b.w2;
    QuadElem v = QuadElem(inv.c()) * b.w1 + QuadElem(inv.d()) * b.w2;
    return {std::move(u), std::move(v), m};
}

/// Nearest-integer Gauss reduction: (u, v) -> (v, u - round(Re(u/v)) v),
/// at least once and until |u| <= |v|.
inline std::pair<QuadElem, QuadElem> classic_gauss_step_reduce(const Basis& b)
{
    detail::lattice_ratio(b.w1, b.w2);
    QuadElem u = b.w1;
    QuadElem v = b.w2;
    do {
        const Integer k = round_half_up((u / v).re());
        QuadElem next = u - QuadElem(k) * v;
        u = std::move(v);
        v = std::move(next);
    } while (u.abs2() > v.abs2());
    return {std::move(u), std::move(v)};
}

inline bool is_unordered_minimal(const QuadElem& u, const QuadElem& v)
{
    return in_region(detail::lattice_ratio(u, v), Region::FprimeClosure);
}

} // namespace ccfrac
