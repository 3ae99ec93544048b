#pragma once

// Exact arithmetic kernel: GMP-backed integers and rationals, and elements
// x + y*sqrt(N) of a quadratic field. Every other header builds on these.

#include <cctype>
#include <cmath>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "ccfrac/error.hpp"

namespace ccfrac {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) {
        throw Error(ErrorCode::DivisionByZero, "zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline int sign(const Integer& v) { return sgn(v); }
inline int sign(const Rational& v) { return sgn(v); }

inline Integer floor_of(const Rational& v)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return q;
}

inline Integer ceil_of(const Rational& v)
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return q;
}

/// Nearest integer, rounding halves up: floor(v + 1/2).
inline Integer round_half_up(const Rational& v) { return floor_of(v + Rational(1, 2)); }

inline Integer isqrt(const Integer& v)
{
    if (v < 0) {
        throw Error(ErrorCode::InvalidRadicand, "square root of a negative integer");
    }
    Integer r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

/// floor(sqrt(v)) for a non-negative rational.
inline Integer floor_sqrt(const Rational& v)
{
    // floor(sqrt(p/q)) = floor(floor(sqrt(p*q)) / q)
    Integer pq = v.get_num() * v.get_den();
    Integer s = isqrt(pq);
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), s.get_mpz_t(), v.get_den_mpz_t());
    return q;
}

inline bool is_perfect_square(const Integer& v)
{
    return v >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

inline Integer lcm_of(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer gcd_of(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Sign of a + b*sqrt(m) for m >= 0, decided without leaving Q.
inline int sign_with_root(const Rational& a, const Rational& b, const Rational& m)
{
    const int sa = sign(a);
    const int sb = m == 0 ? 0 : sign(b);
    if (sb == 0 || sa == sb) {
        return sa;
    }
    if (sa == 0) {
        return sb;
    }
    const Rational lhs = a * a;
    const Rational rhs = b * b * m;
    if (lhs > rhs) {
        return sa;
    }
    if (lhs < rhs) {
        return sb;
    }
    return 0;
}

/// x + y*sqrt(N). Rationals carry the sentinel radicand 0 and combine with
/// any radicand; a non-zero surd part requires a non-zero, non-square N.
class QuadElem {
public:
    QuadElem() = default;
    QuadElem(long v) : x_(v) {}
    QuadElem(const Integer& v) : x_(v) {}
    QuadElem(const Rational& v) : x_(v) {}

    QuadElem(Rational x, Rational y, Integer radicand)
        : x_(std::move(x)), y_(std::move(y)), n_(std::move(radicand))
    {
        if (y_ == 0) {
            n_ = 0;
            return;
        }
        if (n_ == 0 || is_perfect_square(n_)) {
            throw Error(ErrorCode::InvalidRadicand,
                        "radicand " + n_.get_str() + " is zero or a perfect square");
        }
    }

    static QuadElem imaginary_unit() { return QuadElem(Rational(0), Rational(1), Integer(-1)); }

    static QuadElem root(const Integer& radicand) { return QuadElem(Rational(0), Rational(1), radicand); }

    /// Coefficient x.
    const Rational& rational_part() const noexcept { return x_; }
    /// Coefficient y of sqrt(N).
    const Rational& surd_part() const noexcept { return y_; }
    /// N, or 0 for a rational value.
    const Integer& radicand() const noexcept { return n_; }

    bool is_zero() const { return x_ == 0 && y_ == 0; }
    bool is_rational() const { return y_ == 0; }
    bool is_complex() const { return n_ < 0; }
    bool is_real_surd() const { return n_ > 0; }

    // Complex accessors; valid when radicand() <= 0.
    const Rational& re() const { return x_; }
    int im_sign() const { return n_ < 0 ? sgn(y_) : 0; }
    /// Im(z)^2 = -N*y^2.
    Rational im_squared() const
    {
        require_not_real_surd();
        return -Rational(n_) * y_ * y_;
    }
    /// |z|^2 = x^2 - N*y^2.
    Rational abs2() const
    {
        require_not_real_surd();
        return norm();
    }

    /// Field norm x^2 - N*y^2.
    Rational norm() const { return x_ * x_ - Rational(n_) * y_ * y_; }

    QuadElem conj() const
    {
        QuadElem r = *this;
        r.y_ = -r.y_;
        return r;
    }

    /// Sign of a real value (rational or real surd).
    int sign() const
    {
        if (n_ < 0) {
            throw Error(ErrorCode::InvalidRadicand, "sign of a non-real number");
        }
        return sign_with_root(x_, y_, Rational(n_));
    }

    QuadElem inverse() const
    {
        if (is_zero()) {
            throw Error(ErrorCode::DivisionByZero, "inverse of zero");
        }
        const Rational nm = norm();
        return from_parts(x_ / nm, -y_ / nm, n_);
    }

    friend QuadElem operator+(const QuadElem& a, const QuadElem& b)
    {
        return from_parts(a.x_ + b.x_, a.y_ + b.y_, common_radicand(a, b));
    }

    friend QuadElem operator-(const QuadElem& a, const QuadElem& b)
    {
        return from_parts(a.x_ - b.x_, a.y_ - b.y_, common_radicand(a, b));
    }

    friend QuadElem operator*(const QuadElem& a, const QuadElem& b)
    {
        const Integer n = common_radicand(a, b);
        return from_parts(a.x_ * b.x_ + Rational(n) * a.y_ * b.y_, a.x_ * b.y_ + a.y_ * b.x_, n);
    }

    friend QuadElem operator/(const QuadElem& a, const QuadElem& b)
    {
        common_radicand(a, b);
        return a * b.inverse();
    }

    QuadElem operator-() const
    {
        QuadElem r = *this;
        r.x_ = -r.x_;
        r.y_ = -r.y_;
        return r;
    }

    QuadElem& operator+=(const QuadElem& o) { return *this = *this + o; }
    QuadElem& operator-=(const QuadElem& o) { return *this = *this - o; }
    QuadElem& operator*=(const QuadElem& o) { return *this = *this * o; }
    QuadElem& operator/=(const QuadElem& o) { return *this = *this / o; }

    /// Value equality. y1*sqrt(N1) = y2*sqrt(N2) iff the signs of y and of N
    /// agree and y1^2*N1 = y2^2*N2, so different radicands may compare equal.
    friend bool operator==(const QuadElem& a, const QuadElem& b)
    {
        if (a.x_ != b.x_) {
            return false;
        }
        if (a.n_ == b.n_) {
            return a.y_ == b.y_;
        }
        if (a.y_ == 0 || b.y_ == 0) {
            return false;
        }
        return sgn(a.y_) == sgn(b.y_) && sgn(a.n_) == sgn(b.n_) &&
               a.y_ * a.y_ * Rational(a.n_) == b.y_ * b.y_ * Rational(b.n_);
    }

    friend bool operator!=(const QuadElem& a, const QuadElem& b) { return !(a == b); }

    /// Radicand shared by a and b; throws MixedRadicand when they differ.
    static Integer common_radicand(const QuadElem& a, const QuadElem& b)
    {
        if (a.n_ == 0) {
            return b.n_;
        }
        if (b.n_ == 0 || a.n_ == b.n_) {
            return a.n_;
        }
        throw Error(ErrorCode::MixedRadicand,
                    "radicands " + a.n_.get_str() + " and " + b.n_.get_str() + " differ");
    }

    double approx_re() const
    {
        if (n_ > 0) {
            return x_.get_d() + y_.get_d() * std::sqrt(n_.get_d());
        }
        return x_.get_d();
    }

    double approx_im() const { return n_ < 0 ? y_.get_d() * std::sqrt(-n_.get_d()) : 0.0; }

private:
    static QuadElem from_parts(Rational x, Rational y, Integer n)
    {
        QuadElem r;
        r.x_ = std::move(x);
        r.y_ = std::move(y);
        r.n_ = r.y_ == 0 ? Integer(0) : std::move(n);
        return r;
    }

    void require_not_real_surd() const
    {
        if (n_ > 0) {
            throw Error(ErrorCode::PositiveRadicand, "complex-only operation on a real surd");
        }
    }

    Rational x_{0};
    Rational y_{0};
    Integer n_{0};
};

/// Compares a real value with a rational: sign of (a - r).
inline int compare_real(const QuadElem& a, const Rational& r)
{
    return sign_with_root(a.rational_part() - r, a.surd_part(), Rational(a.radicand()));
}

/// floor of the real part. For N > 0 this is floor(x + y*sqrt(N)), found by
/// bracketing with exact comparisons.
inline Integer floor_real(const QuadElem& a)
{
    if (a.radicand() <= 0) {
        return floor_of(a.rational_part());
    }
    const Rational& y = a.surd_part();
    const Integer f = floor_sqrt(y * y * Rational(a.radicand()));
    Integer k = floor_of(a.rational_part()) + (y > 0 ? f : Integer(-f - 1));
    while (compare_real(a, Rational(k)) < 0) {
        --k;
    }
    while (compare_real(a, Rational(k + 1)) >= 0) {
        ++k;
    }
    return k;
}

inline std::string format_rational(const Rational& r) { return r.get_str(); }

/// Canonical text: "p/q", "(X+Y*sqrt(N))/d", "y*i" and so on, with i used
/// for N = -1. Output always re-parses to the same value.
inline std::string format(const QuadElem& v)
{
    if (v.is_rational()) {
        return format_rational(v.rational_part());
    }
    const std::string unit = v.radicand() == -1 ? std::string("i") : "sqrt(" + v.radicand().get_str() + ")";
    const Rational& x = v.rational_part();
    const Rational& y = v.surd_part();
    if (x == 0) {
        if (y == 1) {
            return unit;
        }
        if (y == -1) {
            return "-" + unit;
        }
        return format_rational(y) + "*" + unit;
    }
    const Integer d = lcm_of(x.get_den(), y.get_den());
    const Integer xs = x.get_num() * (d / x.get_den());
    const Integer ys = y.get_num() * (d / y.get_den());
    const Integer ya = abs(ys);
    std::string body = xs.get_str() + (ys < 0 ? "-" : "+") + (ya == 1 ? unit : ya.get_str() + "*" + unit);
    if (d == 1) {
        return body;
    }
    return "(" + body + ")/" + d.get_str();
}

inline std::ostream& operator<<(std::ostream& os, const QuadElem& v) { return os << format(v); }

namespace detail {

class ExactParser {
public:
    explicit ExactParser(std::string_view text) : text_(text) {}

    QuadElem parse()
    {
        QuadElem v = number();
        skip_ws();
        if (pos_ != text_.size()) {
            throw ParseError(pos_, "unexpected character '" + std::string(1, text_[pos_]) + "'");
        }
        return v;
    }

private:
    QuadElem number()
    {
        QuadElem acc = term();
        for (;;) {
            skip_ws();
            if (accept('+')) {
                acc = acc + term();
            } else if (accept('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    QuadElem term()
    {
        skip_ws();
        bool negate = false;
        if (accept('-')) {
            negate = true;
        } else {
            accept('+');
        }
        skip_ws();
        QuadElem v;
        if (accept('(')) {
            v = number();
            skip_ws();
            expect(')');
            skip_ws();
            if (accept('/')) {
                skip_ws();
                v = v / QuadElem(positive_integer());
            }
        } else if (at_unit()) {
            v = unit();
        } else {
            const Rational r = rational();
            skip_ws();
            const bool star = accept('*');
            skip_ws();
            if (at_unit()) {
                v = QuadElem(r) * unit();
            } else if (star) {
                throw ParseError(pos_, "expected 'i' or 'sqrt(' after '*'");
            } else {
                v = QuadElem(r);
            }
        }
        return negate ? -v : v;
    }

    bool at_unit() const
    {
        return peek() == 'i' || text_.substr(pos_).starts_with("sqrt(");
    }

    QuadElem unit()
    {
        if (accept('i')) {
            return QuadElem::imaginary_unit();
        }
        const std::size_t start = pos_;
        pos_ += 5; // "sqrt("
        skip_ws();
        bool neg = false;
        if (accept('-')) {
            neg = true;
        }
        skip_ws();
        Integer n = digits();
        if (neg) {
            n = -n;
        }
        skip_ws();
        expect(')');
        if (n == 0 || is_perfect_square(n)) {
            throw ParseError(start, "radicand " + n.get_str() + " is zero or a perfect square");
        }
        return QuadElem::root(n);
    }

    Rational rational()
    {
        const Integer num = digits();
        skip_ws();
        // A '/' followed by '(' or a unit belongs to the caller's grammar.
        if (peek() == '/') {
            std::size_t save = pos_;
            ++pos_;
            skip_ws();
            if (std::isdigit(static_cast<unsigned char>(peek())) != 0) {
                return make_rational(num, positive_integer());
            }
            pos_ = save;
        }
        return Rational(num);
    }

    Integer positive_integer()
    {
        const std::size_t start = pos_;
        Integer v = digits();
        if (v == 0) {
            throw ParseError(start, "denominator must be positive");
        }
        return v;
    }

    Integer digits()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
            ++pos_;
        }
        if (start == pos_) {
            throw ParseError(pos_, pos_ < text_.size() ? "expected a number" : "unexpected end of input");
        }
        return Integer(std::string(text_.substr(start, pos_ - start)), 10);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool accept(char c)
    {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) {
            throw ParseError(pos_, std::string("expected '") + c + "'");
        }
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
            ++pos_;
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses an exact number such as "-101732/28505 + 1/171030*i" or
/// "(1+sqrt(-3))/2". A non-zero expected_radicand rejects any other surd.
inline QuadElem parse_exact(std::string_view text, const Integer& expected_radicand = 0)
{
    QuadElem v = detail::ExactParser(text).parse();
    if (expected_radicand != 0 && v.radicand() != 0 && v.radicand() != expected_radicand) {
        throw Error(ErrorCode::MixedRadicand, "expected radicand " + expected_radicand.get_str() +
                                                  ", got " + v.radicand().get_str());
    }
    return v;
}

} // namespace ccfrac
