#pragma once

// Exact membership tests for the fundamental domains and their relatives.
// Every test reduces to comparisons of rationals (|z|^2 is rational for any
// radicand N < 0), except the Ford circles, which need one surd comparison.

#include <optional>
#include <string>
#include <string_view>

#include "ccfrac/error.hpp"
#include "ccfrac/exactnum.hpp"

namespace ccfrac {

enum class Region { F, G, Fprime, Gprime, FprimeClosure, C, D };

constexpr std::string_view region_name(Region r) noexcept
{
    switch (r) {
    case Region::F: return "F";
    case Region::G: return "G";
    case Region::Fprime: return "Fprime";
    case Region::Gprime: return "Gprime";
    case Region::FprimeClosure: return "FprimeClosure";
    case Region::C: return "C";
    case Region::D: return "D";
    }
    return "?";
}

/// Reduced fraction p/q with q >= 0; 1/0 stands for infinity.
struct Fraction {
    Integer p{0};
    Integer q{1};

    Fraction() = default;

    Fraction(Integer num, Integer den) : p(std::move(num)), q(std::move(den))
    {
        if (p == 0 && q == 0) {
            throw Error(ErrorCode::InvalidFraction, "0/0");
        }
        if (q < 0) {
            p = -p;
            q = -q;
        }
        const Integer g = gcd_of(p, q);
        p /= g;
        q /= g;
    }

    bool is_infinite() const { return q == 0; }

    Rational value() const
    {
        if (q == 0) {
            throw Error(ErrorCode::InfiniteFraction, "value of " + str());
        }
        return make_rational(p, q);
    }

    std::string str() const { return p.get_str() + "/" + q.get_str(); }

    friend bool operator==(const Fraction&, const Fraction&) = default;
};

namespace detail {

inline void require_complex_plane(const QuadElem& z)
{
    if (z.radicand() > 0) {
        throw Error(ErrorCode::PositiveRadicand, "regions live in C; got a real surd");
    }
}

inline const Rational& half()
{
    static const Rational h(1, 2);
    return h;
}

/// |z - 1|^2 and |z + 1|^2 from |z|^2 and Re z.
inline Rational abs2_shift(const Rational& abs2, const Rational& re, int shift)
{
    return abs2 - 2 * shift * re + shift * shift;
}

inline bool in_f(const QuadElem& z)
{
    if (z.im_sign() <= 0) {
        return false;
    }
    const Rational& x = z.re();
    if (x < -half() || x >= half()) {
        return false;
    }
    const Rational a = z.abs2();
    return a > 1 || (a == 1 && x <= 0);
}

inline bool in_g(const QuadElem& z)
{
    if (z.im_sign() <= 0) {
        return false;
    }
    const Rational& x = z.re();
    if (x <= -half() || x > half()) {
        return false;
    }
    const Rational a = z.abs2();
    return a > 1 || (a == 1 && x >= 0);
}

template <typename Base>
bool in_hourglass(const QuadElem& z, Base base)
{
    if (z.is_zero()) {
        return true;
    }
    if (z.is_rational()) {
        return false;
    }
    const QuadElem inv = z.inverse();
    return base(z) || base(-inv) || base(-z) || base(inv);
}

} // namespace detail

/// Membership of z (radicand <= 0) in one of the named regions, boundary
/// conventions included.
inline bool in_region(const QuadElem& z, Region r)
{
    detail::require_complex_plane(z);
    switch (r) {
    case Region::F: return detail::in_f(z);
    case Region::G: return detail::in_g(z);
    case Region::Fprime: return detail::in_hourglass(z, detail::in_f);
    case Region::Gprime: return detail::in_hourglass(z, detail::in_g);
    case Region::FprimeClosure: {
        const Rational& x = z.re();
        if (x < -detail::half() || x > detail::half()) {
            return false;
        }
        const Rational a = z.abs2();
        return detail::abs2_shift(a, x, 1) >= 1 && detail::abs2_shift(a, x, -1) >= 1;
    }
    case Region::C: {
        const Rational a = z.abs2();
        const Rational a1 = detail::abs2_shift(a, z.re(), 1);
        if (a > 1 || a1 > 1) {
            return false;
        }
        if (a == 1 && z.im_sign() <= 0) {
            return false;
        }
        return !(a1 == 1 && z.im_sign() >= 0);
    }
    case Region::D:
        // |z - 1/2|^2 < 1/4  <=>  |z|^2 < Re z
        return z.abs2() < z.re();
    }
    return false;
}

inline bool in_fprime(const QuadElem& z) { return in_region(z, Region::Fprime); }

/// Closed Ford disc tangent to R at p/q with diameter 1/q^2.
inline bool in_ford_circle(const QuadElem& z, const Fraction& f)
{
    detail::require_complex_plane(z);
    if (f.is_infinite()) {
        throw Error(ErrorCode::InfiniteFraction, "Ford circle of " + f.str());
    }
    // (x - p/q)^2 + Im^2 <= Im / q^2, with Im = y*sqrt(-N)
    const Rational dx = z.re() - f.value();
    const Rational q2 = Rational(f.q * f.q);
    const Rational lhs = dx * dx + z.im_squared();
    return sign_with_root(lhs, -z.surd_part() / q2, Rational(-z.radicand())) <= 0;
}

/// Closed disc |z - c*i/2| <= 1/2 for c = +1 or -1.
inline bool in_half_disc(const QuadElem& z, int c)
{
    detail::require_complex_plane(z);
    // x^2 + Im^2 - c*Im <= 0
    const Rational lhs = z.re() * z.re() + z.im_squared();
    return sign_with_root(lhs, -c * z.surd_part(), Rational(-z.radicand())) <= 0;
}

enum class Corner { Rho, Rho2, Rho4, Rho5 };

/// The corner rho^k of the hourglass region, if z is one (any radicand).
inline std::optional<Corner> corner_of(const QuadElem& z)
{
    if (z.radicand() >= 0 || z.im_squared() != Rational(3, 4)) {
        return std::nullopt;
    }
    const bool up = z.im_sign() > 0;
    if (z.re() == detail::half()) {
        return up ? Corner::Rho : Corner::Rho5;
    }
    if (z.re() == -detail::half()) {
        return up ? Corner::Rho2 : Corner::Rho4;
    }
    return std::nullopt;
}

/// rho^k as an element of Q(sqrt(-3)).
inline QuadElem corner_value(Corner c)
{
    const Rational h(1, 2);
    switch (c) {
    case Corner::Rho: return QuadElem(h, h, -3);
    case Corner::Rho2: return QuadElem(-h, h, -3);
    case Corner::Rho4: return QuadElem(-h, -h, -3);
    case Corner::Rho5: return QuadElem(h, -h, -3);
    }
    return {};
}

/// Index k of the dashed border B_k of the hourglass region holding w:
/// B1 = 1/2 + it, B2 = -1/(1/2 + it), B3 = 1/(1/2 + it), B4 = -1/2 - it,
/// all with t > sqrt(3)/2. These are the points of closure(F') \ F' other
/// than the corners.
inline std::optional<int> fprime_border(const QuadElem& w)
{
    detail::require_complex_plane(w);
    if (w.is_rational()) {
        return std::nullopt;
    }
    const Rational& x = w.re();
    const Rational a = w.abs2();
    const int s = w.im_sign();
    if (x == detail::half() && s > 0 && a > 1) {
        return 1;
    }
    if (x == -detail::half() && s < 0 && a > 1) {
        return 4;
    }
    if (s > 0 && x > -detail::half() && x < 0 && detail::abs2_shift(a, x, -1) == 1) {
        return 2;
    }
    if (s < 0 && x > 0 && x < detail::half() && detail::abs2_shift(a, x, 1) == 1) {
        return 3;
    }
    return std::nullopt;
}

} // namespace ccfrac
