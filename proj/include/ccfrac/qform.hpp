#pragma once

// Integral binary quadratic forms [a, b, c] = a x^2 + b xy + c y^2 and
// their reduction through continued fractions of a root.

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ccfrac/cfrac.hpp"
#include "ccfrac/error.hpp"
#include "ccfrac/exactnum.hpp"
#include "ccfrac/mat2.hpp"
#include "ccfrac/modgroup.hpp"
#include "ccfrac/regions.hpp"

namespace ccfrac {

struct QForm {
    Integer a{0};
    Integer b{0};
    Integer c{0};

    Integer discriminant() const { return b * b - 4 * a * c; }

    std::string str() const { return "[" + a.get_str() + "," + b.get_str() + "," + c.get_str() + "]"; }

    friend bool operator==(const QForm& x, const QForm& y) { return x.a == y.a && x.b == y.b && x.c == y.c; }

    friend bool operator<(const QForm& x, const QForm& y)
    {
        return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
    }
};

/// q|M = q(alpha x + beta y, gamma x + delta y), for det M = 1.
inline QForm act(const QForm& q, const Mat2& m)
{
    if (m.det() != 1) {
        throw Error(ErrorCode::NotUnimodular, "form action needs det 1, got " + m.str());
    }
    const Integer &al = m.a(), &be = m.b(), &ga = m.c(), &de = m.d();
    return {q.a * al * al + q.b * al * ga + q.c * ga * ga,
            2 * q.a * al * be + q.b * (al * de + be * ga) + 2 * q.c * ga * de,
            q.a * be * be + q.b * be * de + q.c * de * de};
}

namespace detail {

inline void require_definite(const QForm& q)
{
    if (q.discriminant() >= 0 || q.a <= 0 || q.c <= 0) {
        throw Error(ErrorCode::WrongSignature, q.str() + " is not positive definite");
    }
}

} // namespace detail

/// |b| <= a <= c, and b >= 0 when |b| = a or a = c.
inline bool is_gauss_reduced(const QForm& q)
{
    detail::require_definite(q);
    const Integer ab = abs(q.b);
    if (ab > q.a || q.a > q.c) {
        return false;
    }
    if (ab == q.a || q.a == q.c) {
        return q.b >= 0;
    }
    return true;
}

/// The zero (-b + sqrt(D)) / (2a) of q(x, 1) in the upper half-plane.
inline QuadElem root_upper(const QForm& q)
{
    const Integer d = q.discriminant();
    if (d >= 0 || q.a <= 0) {
        throw Error(ErrorCode::WrongSignature, q.str() + " has no upper half-plane root with a > 0");
    }
    return QuadElem(make_rational(-q.b, 2 * q.a), make_rational(1, 2 * q.a), d);
}

struct FormReduction {
    QForm p;
    Mat2 M;
};

/// The reduced form equivalent to q, with M = L^{a0} R^{a1} ... (S) from
/// the continued fraction of its root and p = q|M.
inline FormReduction reduce_negative(const QForm& q)
{
    detail::require_definite(q);
    const ContinuedFraction cf = cf_expand(root_upper(q));
    Mat2 m = lr_product(cf.coeffs());
    if (needs_trailing_s(cf)) {
        m *= Mat2::S();
    }
    return {act(q, m), m};
}

/// Cycle of the forms q|L^{a0} R^{a1} ... [L or R]^{am} built from the
/// periodic expansion of the root (-b + sqrt(D)) / (2a), rotated to start
/// at its least member.
inline std::vector<QForm> reduce_cycle_positive(const QForm& q)
{
    const Integer d = q.discriminant();
    if (d <= 0) {
        throw Error(ErrorCode::WrongSignature, q.str() + " has D <= 0");
    }
    if (is_perfect_square(d)) {
        throw Error(ErrorCode::SquareDiscriminant, q.str() + " has square discriminant");
    }
    const QuadElem root(make_rational(-q.b, 2 * q.a), make_rational(1, 2 * q.a), d);
    const PeriodicCF pcf = periodic_cf(root);
    const std::size_t pre = pcf.preperiod.size();
    const std::size_t p = pcf.period.size();

    // The future of the sequence depends only on the current form, the
    // L/R parity and the position inside the period.
    std::map<std::tuple<QForm, std::size_t, std::size_t>, std::size_t> seen;
    std::vector<QForm> seq;
    QForm cur = q;
    std::size_t start = 0;
    for (std::size_t m = 0;; ++m) {
        if (m > pre + 4 * p + 8) {
            throw detail::iteration_limit(m);
        }
        const Integer& a = pcf.coefficient(m);
        cur = act(cur, m % 2 == 0 ? Mat2::L(a) : Mat2::R(a));
        if (m + 1 >= pre) {
            auto [it, fresh] = seen.emplace(std::make_tuple(cur, m % 2, (m + 1 - pre) % p), seq.size());
            if (!fresh) {
                start = it->second;
                break;
            }
        }
        seq.push_back(cur);
    }
    std::vector<QForm> forms(seq.begin() + static_cast<std::ptrdiff_t>(start), seq.end());
    const std::size_t full = forms.size();
    std::size_t len = full;
    for (std::size_t cand = 1; cand < full; ++cand) {
        if (full % cand != 0) continue;
        bool ok = true;
        for (std::size_t j = cand; j < full && ok; ++j) {
            ok = forms[j] == forms[j - cand];
        }
        if (ok) {
            len = cand;
            break;
        }
    }
    forms.resize(len);
    const auto least = std::min_element(forms.begin(), forms.end());
    std::rotate(forms.begin(), least, forms.end());
    return forms;
}

} // namespace ccfrac
