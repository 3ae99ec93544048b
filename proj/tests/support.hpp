#pragma once

// Shared helpers for the test binaries: seeded generators, the expansion
// invariant checks, and brute-force oracles that do not go through the
// library's reduction code.

#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ccfrac/ccfrac.hpp"

namespace testing_support {

using namespace ccfrac;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
    bool coin() { return uniform(0, 1) == 1; }

    Rational rational(long num_bound, long den_bound)
    {
        return make_rational(uniform(-num_bound, num_bound), uniform(1, den_bound));
    }

    /// x + y i with x, y having numerators and denominators up to the bounds.
    QuadElem gaussian(long num_bound, long den_bound, bool allow_real = false)
    {
        for (;;) {
            const Rational x = rational(num_bound, den_bound);
            const Rational y = rational(num_bound, den_bound);
            if (y == 0 && !allow_real) continue;
            return QuadElem(x, y, -1);
        }
    }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

inline Integer fib(long n)
{
    Integer a = 0, b = 1;
    for (long k = 0; k < n; ++k) {
        Integer t = a + b;
        a = b;
        b = t;
    }
    return a;
}

/// Invariants every expansion must satisfy; returns an empty string when all
/// hold, else a description of the first failure.
inline std::string check_expansion(const QuadElem& z, const ContinuedFraction& cf)
{
    if (!in_fprime(cf.tail())) return "tail not in F'";
    for (std::size_t j = 1; j < cf.coeffs().size(); ++j) {
        if (cf.coeffs()[j] < 1) return "non-positive coefficient";
    }
    const Convergents cv(cf.coeffs());
    for (long m = 0; m <= cv.last(); ++m) {
        const Integer det = cv.h(m - 1) * cv.k(m) - cv.h(m) * cv.k(m - 1);
        if (det != (m % 2 == 0 ? 1 : -1)) return "determinant does not alternate at " + std::to_string(m);
        if (m >= 1 && cv.k(m) < fib(m + 1)) return "k_m below Fib(m+1) at " + std::to_string(m);
    }
    if (z.is_complex()) {
        const long n = cv.last();
        const int expect = (n % 2 == 0 ? 1 : -1) * cf.tail().im_sign();
        if (z.im_sign() != expect) return "sign rule fails";
    }
    if (cf_eval(cf) != z) return "evaluation does not return z";
    return {};
}

/// Random element of F (over radicand n < 0), with boundary points mixed in.
inline QuadElem random_in_f(Rng& rng, long n)
{
    const Integer rad(n);
    const Rational s = 1 / Rational(-n);  // 1/|N|
    for (;;) {
        Rational x = make_rational(rng.uniform(-20, 19), 40);
        if (rng.uniform(0, 9) == 0) x = Rational(-1, 2);
        // need y^2 |N| >= 1 - x^2
        const Rational need = (1 - x * x) * s;
        Rational y;
        if (rng.uniform(0, 9) == 0) {
            // exactly on the unit circle when the square root is rational
            mpq_class r = need;
            Integer num = r.get_num(), den = r.get_den();
            if (!is_perfect_square(num) || !is_perfect_square(den)) continue;
            y = make_rational(isqrt(num), isqrt(den));
        } else {
            y = make_rational(rng.uniform(1, 400), rng.uniform(1, 60));
            if (y * y < need) continue;
        }
        const QuadElem w(x, y, rad);
        if (in_region(w, Region::F)) return w;
    }
}

/// Random tail in F' \ {rho^2, rho^4}.
inline QuadElem random_tail(Rng& rng, long n)
{
    if (rng.uniform(0, 24) == 0) return QuadElem(0);
    const QuadElem w = random_in_f(rng, n);
    QuadElem t;
    switch (rng.uniform(0, 3)) {
    case 0: t = w; break;
    case 1: t = -w.inverse(); break;
    case 2: t = -w; break;
    default: t = w.inverse(); break;
    }
    return t;
}

inline ContinuedFraction random_canonical_cf(Rng& rng, long n, int max_len = 8)
{
    for (;;) {
        std::vector<Integer> a;
        const int len = static_cast<int>(rng.uniform(1, max_len));
        a.push_back(rng.uniform(-30, 30));
        for (int j = 1; j < len; ++j) a.push_back(rng.uniform(1, rng.coin() ? 3 : 40));
        ContinuedFraction cf(a, random_tail(rng, n));
        if (is_canonical(cf)) return cf;
    }
}

/// Random det 1 matrix as a product of generators.
inline Mat2 random_sl2(Rng& rng, int factors = 8, long max_exp = 6)
{
    Mat2 m;
    const int k = static_cast<int>(rng.uniform(0, factors));
    for (int j = 0; j < k; ++j) {
        switch (rng.uniform(0, 3)) {
        case 0: m *= Mat2::T(rng.uniform(-max_exp, max_exp)); break;
        case 1: m *= Mat2::R(rng.uniform(-max_exp, max_exp)); break;
        case 2: m *= Mat2::S(); break;
        default: m *= -Mat2::identity(); break;
        }
    }
    return m;
}

// ---- lattice oracle -----------------------------------------------------

/// First and second successive minima (squared) of Z w1 + Z w2, by
/// enumerating every lattice point below explicit bounds.
inline std::pair<Rational, Rational> lattice_minima(const QuadElem& w1, const QuadElem& w2)
{
    // s is optimised continuously along each row, t indexes the rows
    const bool first_short = w1.abs2() <= w2.abs2();
    const QuadElem s = first_short ? w1 : w2;
    const QuadElem t = first_short ? w2 : w1;
    const Rational s2 = s.abs2();
    const QuadElem st = t * s.conj();  // <t, s> + i * area
    const Rational dot = st.re();
    const Rational area2 = st.im_squared();

    auto scan = [&](const Rational& bound, auto&& take) {
        for (long n = 0;; ++n) {
            const Rational row_floor = Rational(n * n) * area2 / s2;
            if (row_floor > bound) break;
            for (long sgn_n : {n, -n}) {
                if (n == 0 && sgn_n != 0) continue;
                // |m s + n t|^2 = s2 (m + n dot/s2)^2 + n^2 area2/s2
                const Rational centre = -Rational(sgn_n) * dot / s2;
                const double spread = std::sqrt(std::max(0.0, Rational((bound - row_floor) / s2).get_d())) + 2;
                const long lo = static_cast<long>(std::floor(centre.get_d() - spread));
                const long hi = static_cast<long>(std::ceil(centre.get_d() + spread));
                for (long m = lo; m <= hi; ++m) {
                    if (m == 0 && sgn_n == 0) continue;
                    const QuadElem v = QuadElem(m) * s + QuadElem(sgn_n) * t;
                    const Rational l = v.abs2();
                    if (l <= bound) take(m, sgn_n, l);
                }
            }
        }
    };

    Rational best1 = s2;
    long bm = 1, bn = 0;
    scan(s2, [&](long m, long n, const Rational& l) {
        if (l < best1) {
            best1 = l;
            bm = m;
            bn = n;
        }
    });
    Rational best2 = std::max(w1.abs2(), w2.abs2());
    scan(best2, [&](long m, long n, const Rational& l) {
        if (m * bn - n * bm != 0 && l < best2) best2 = l;
    });
    return {best1, best2};
}

// ---- quadratic form oracles ----------------------------------------------

/// All Gauss reduced forms of discriminant d < 0, straight from the
/// inequalities (a <= sqrt(|d|/3)).
inline std::vector<QForm> reduced_forms(long d)
{
    std::vector<QForm> out;
    for (long a = 1; 3 * a * a <= -d; ++a) {
        for (long b = -a; b <= a; ++b) {
            const long num = b * b - d;
            if (num % (4 * a) != 0) continue;
            const long c = num / (4 * a);
            const QForm q{a, b, c};
            if (c >= a && is_gauss_reduced(q)) out.push_back(q);
        }
    }
    return out;
}

/// Textbook reduction by translations and swaps, for comparison.
inline QForm classical_reduce(QForm q)
{
    for (;;) {
        // bring b into (-a, a]
        const Integer two_a = 2 * q.a;
        Integer k;
        mpz_fdiv_q(k.get_mpz_t(), Integer(q.a - q.b).get_mpz_t(), two_a.get_mpz_t());
        q = act(q, Mat2::T(k));
        if (q.a > q.c) {
            q = act(q, Mat2::S());
            continue;
        }
        if (q.a == q.c && q.b < 0) q.b = -q.b;
        return q;
    }
}

/// Cycle of q_m = q | L^{a0} R^{a1} ... by stepping the complete quotients
/// of the root with exact floors; the forms seen after `burn` steps.
inline std::set<std::tuple<Integer, Integer, Integer>> redb_oracle(const QForm& q, int burn = 40, int keep = 40)
{
    const Integer d = q.discriminant();
    QuadElem x(make_rational(-q.b, 2 * q.a), make_rational(1, 2 * q.a), d);
    QForm cur = q;
    std::set<std::tuple<Integer, Integer, Integer>> seen;
    for (int m = 0; m < burn + keep; ++m) {
        const Integer a = floor_real(x);
        cur = act(cur, m % 2 == 0 ? Mat2::L(a) : Mat2::R(a));
        x = (x - QuadElem(a)).inverse();
        if (m >= burn) seen.insert({cur.a, cur.b, cur.c});
    }
    return seen;
}

} // namespace testing_support
