#pragma once

// Cutting sequences through the Farey tessellation, and where a number sits
// among fans and Ford circles.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "ccfrac/cfrac.hpp"
#include "ccfrac/error.hpp"
#include "ccfrac/exactnum.hpp"
#include "ccfrac/mat2.hpp"
#include "ccfrac/regions.hpp"

namespace ccfrac {

enum class Terminal { RationalEndpoint, OnEdge, Interior, Truncated };

constexpr std::string_view terminal_name(Terminal t) noexcept
{
    switch (t) {
    case Terminal::RationalEndpoint: return "rational_endpoint";
    case Terminal::OnEdge: return "on_edge";
    case Terminal::Interior: return "interior";
    case Terminal::Truncated: return "truncated";
    }
    return "?";
}

/// Run lengths (c0, c1, ...) of L^{c0} R^{c1} L^{c2} ...
struct CuttingSequence {
    std::vector<Integer> exps;
    Terminal terminal = Terminal::Interior;
    // final edge M I
    Mat2 edge;

    friend bool operator==(const CuttingSequence& x, const CuttingSequence& y)
    {
        return x.exps == y.exps && x.terminal == y.terminal;
    }
};

namespace detail {

// Real points are rationals or real surds; everything else has N < 0.
inline bool is_real_point(const QuadElem& z) { return z.radicand() > 0 || z.is_rational(); }

inline int compare_re(const QuadElem& z, const Rational& r)
{
    if (z.radicand() > 0) {
        return compare_real(z, r);
    }
    return sign(Rational(z.re() - r));
}

/// Position of z relative to the edge M I: -1 strictly inside its closed
/// semidisc (or right half plane), 0 on the boundary, +1 outside.
inline int edge_side(const QuadElem& z, const Mat2& m)
{
    if (m.c() == 0) {
        // vertical edge Re = b/d; its finite endpoint counts as inside
        const int c = compare_re(z, make_rational(m.b(), m.d()));
        return c == 0 && is_real_point(z) ? -1 : -c;
    }
    const Rational e1 = make_rational(m.b(), m.d());
    const Rational e2 = make_rational(m.a(), m.c());
    const Rational centre = (e1 + e2) / 2;
    const Rational r2 = (e2 - e1) * (e2 - e1) / 4;
    if (z.radicand() > 0) {
        // real surd: inside the closed interval or not; never on the arc
        const Rational lo = e1 < e2 ? e1 : e2;
        const Rational hi = e1 < e2 ? e2 : e1;
        return compare_real(z, lo) >= 0 && compare_real(z, hi) <= 0 ? -1 : 1;
    }
    const Rational dx = z.re() - centre;
    const Rational d2 = dx * dx + z.im_squared();
    if (d2 < r2) return -1;
    if (d2 > r2) return 1;
    // boundary: a real point there is an endpoint, which is inside
    return z.im_sign() == 0 ? -1 : 0;
}

inline void require_right_half(const QuadElem& z)
{
    if (z.radicand() < 0 && z.im_sign() < 0) {
        throw Error(ErrorCode::OutOfHalfPlane, format(z) + " is below the real axis");
    }
    const int re = compare_re(z, Rational(0));
    if (re < 0 || (re == 0 && z.im_sign() <= 0)) {
        throw Error(ErrorCode::OutOfHalfPlane, format(z) + " needs Re > 0");
    }
}

} // namespace detail

/// Mediant descent from the edge I = {iy : y > 0}.
inline CuttingSequence cutting_sequence(const QuadElem& z, std::size_t max_steps = kDefaultMaxSteps)
{
    detail::require_right_half(z);
    CuttingSequence cs;
    cs.exps.push_back(0);
    if (detail::compare_re(z, Rational(0)) == 0) {
        cs.terminal = Terminal::OnEdge;
        return cs;
    }
    Mat2 m;
    bool last_left = true;
    for (std::size_t step = 0; step < max_steps; ++step) {
        const Mat2 left = m * Mat2::L();
        const Mat2 right = m * Mat2::R();
        const int sl = detail::edge_side(z, left);
        const int sr = detail::edge_side(z, right);
        const bool in_l = sl <= 0;
        const bool in_r = sr <= 0;
        if (in_l && in_r) {
            cs.terminal = Terminal::RationalEndpoint;
            cs.edge = m;
            return cs;
        }
        if (!in_l && !in_r) {
            cs.terminal = Terminal::Interior;
            cs.edge = m;
            return cs;
        }
        if (in_l == last_left) {
            cs.exps.back() += 1;
        } else {
            cs.exps.push_back(1);
            last_left = in_l;
        }
        m = in_l ? left : right;
        if ((in_l ? sl : sr) == 0) {
            cs.terminal = Terminal::OnEdge;
            cs.edge = m;
            return cs;
        }
    }
    cs.terminal = Terminal::Truncated;
    cs.edge = m;
    return cs;
}

enum class CutRelation { Exact, PlusOne, AppendOne };

constexpr std::string_view cut_relation_name(CutRelation r) noexcept
{
    switch (r) {
    case CutRelation::Exact: return "EXACT";
    case CutRelation::PlusOne: return "PLUS_ONE";
    case CutRelation::AppendOne: return "APPEND_ONE";
    }
    return "?";
}

/// Which of [c0..cn + w0], [c0..cn + 1 + w0], [c0..cn, 1 + w0] the canonical
/// expansion of z has.
inline CutRelation relate_cut_cf(const QuadElem& z)
{
    if (z.radicand() > 0) {
        throw Error(ErrorCode::RealIrrational, "cutting sequence of a real irrational does not terminate");
    }
    const CuttingSequence cs = cutting_sequence(z);
    const std::vector<Integer> a = cf_expand(z).coeffs();
    std::vector<Integer> c = cs.exps;
    if (a == c) {
        return CutRelation::Exact;
    }
    c.back() += 1;
    if (a == c) {
        return CutRelation::PlusOne;
    }
    c.back() -= 1;
    c.push_back(1);
    if (a == c) {
        return CutRelation::AppendOne;
    }
    throw Error(ErrorCode::Unrelated, "cutting sequence and expansion of " + format(z) + " disagree");
}

namespace detail {

inline void require_upper(const QuadElem& z)
{
    if (z.radicand() >= 0 || z.im_sign() <= 0) {
        throw Error(ErrorCode::NotUpperHalfPlane, format(z) + " is not in H");
    }
}

} // namespace detail

/// The fan F_{p/q} holding z: h_{n-1}/k_{n-1} if the tail is in F or -F,
/// otherwise h_n/k_n.
inline Fraction locate_fan(const QuadElem& z)
{
    detail::require_upper(z);
    const ContinuedFraction cf = cf_expand(z);
    const Convergents cv(cf.coeffs());
    const long n = cv.last();
    const QuadElem& t = cf.tail();
    if (in_region(t, Region::F) || in_region(-t, Region::F)) {
        return {cv.h(n - 1), cv.k(n - 1)};
    }
    return {cv.h(n), cv.k(n)};
}

/// The Ford circle containing z, read off the tail; 1/0 stands for the
/// half plane Im >= 1.
inline std::optional<Fraction> locate_ford_circle(const QuadElem& z)
{
    detail::require_upper(z);
    const ContinuedFraction cf = cf_expand(z);
    const Convergents cv(cf.coeffs());
    const long n = cv.last();
    const QuadElem& t = cf.tail();
    if (t.im_squared() >= 1) {
        return Fraction(cv.h(n - 1), cv.k(n - 1));
    }
    if (in_half_disc(t, 1) || in_half_disc(t, -1)) {
        return Fraction(cv.h(n), cv.k(n));
    }
    return std::nullopt;
}

/// Which of the five shapes (1..5, in the order
/// [.., am-1, 1, X], [.., am-1, 1], [.., am-1], [.., am], [.., am, X])
/// the coefficients of z take relative to p/q = [a0, ..., am].
inline std::optional<int> fan_shape(const std::vector<Integer>& z_coeffs, const std::vector<Integer>& pq_coeffs)
{
    const std::size_t m = pq_coeffs.size() - 1;
    if (z_coeffs.size() < m + 1 || !std::equal(pq_coeffs.begin(), pq_coeffs.end() - 1, z_coeffs.begin())) {
        return std::nullopt;
    }
    const Integer& am = pq_coeffs.back();
    const std::size_t extra = z_coeffs.size() - (m + 1);
    const Integer& zm = z_coeffs[m];
    if (zm == am - 1) {
        if (extra == 2 && z_coeffs[m + 1] == 1) return 1;
        if (extra == 1 && z_coeffs[m + 1] == 1) return 2;
        if (extra == 0) return 3;
    }
    if (zm == am) {
        if (extra == 0) return 4;
        if (extra == 1) return 5;
    }
    return std::nullopt;
}

enum class FareyCase { DecrementTwo, DecrementOneM, PlusMinusOne, AppendM };

constexpr std::string_view farey_case_name(FareyCase c) noexcept
{
    switch (c) {
    case FareyCase::DecrementTwo: return "[..,a_r-1,2]";
    case FareyCase::DecrementOneM: return "[..,a_r-1,1,m]";
    case FareyCase::PlusMinusOne: return "[..,a_r+-1]";
    case FareyCase::AppendM: return "[..,a_r,m]";
    }
    return "?";
}

/// How the canonical expansion of one Farey neighbour extends the other's.
/// The shorter expansion is a/b (f1 on a tie).
inline FareyCase farey_neighbor_case(const Fraction& f1, const Fraction& f2)
{
    const Integer det = f1.p * f2.q - f2.p * f1.q;
    if (det != 1 && det != -1) {
        throw Error(ErrorCode::NotNeighbors, f1.str() + " and " + f2.str() + " are not Farey neighbours");
    }
    std::vector<Integer> x = cf_expand(QuadElem(f1.value())).coeffs();
    std::vector<Integer> y = cf_expand(QuadElem(f2.value())).coeffs();
    if (y.size() < x.size()) {
        std::swap(x, y);
    }
    const std::size_t r = x.size() - 1;
    if (!std::equal(x.begin(), x.end() - 1, y.begin())) {
        throw Error(ErrorCode::Unrelated, "neighbours differ before the last place");
    }
    const Integer& ar = x.back();
    const std::size_t s = y.size() - 1;
    if (s == r + 1 && y[r] == ar - 1 && y[r + 1] == 2) return FareyCase::DecrementTwo;
    if (s == r + 2 && y[r] == ar - 1 && y[r + 1] == 1 && y[r + 2] >= 2) return FareyCase::DecrementOneM;
    if (s == r && (y[r] == ar + 1 || y[r] == ar - 1)) return FareyCase::PlusMinusOne;
    if (s == r + 1 && y[r] == ar && y[r + 1] >= 2) return FareyCase::AppendM;
    throw Error(ErrorCode::Unrelated, "no matching neighbour shape");
}

} // namespace ccfrac
