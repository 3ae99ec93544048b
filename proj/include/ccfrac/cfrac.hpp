#pragma once

// Integer continued fractions [a0, a1, ..., an + z0] for complex numbers:
// the three equivalent expansion algorithms, evaluation, convergents, the
// canonical form and its corner exceptions, conjugation, the G' variant,
// equivalence of numbers, and periodic expansions of real quadratic surds.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ccfrac/error.hpp"
#include "ccfrac/exactnum.hpp"
#include "ccfrac/mat2.hpp"
#include "ccfrac/regions.hpp"

namespace ccfrac {

inline constexpr std::size_t kDefaultMaxSteps = 1'000'000;

enum class Variant { V1, V2, V3 };

/// Region the tail of an expansion is drawn from.
enum class TailDomain { Fprime, Gprime };

/// [a0, a1, ..., an + tail] with a0 in Z, aj >= 1 for j >= 1 and the tail
/// in F' (or G'). Not necessarily canonical; see is_canonical().
class ContinuedFraction {
public:
    ContinuedFraction(std::vector<Integer> coeffs, QuadElem tail, TailDomain domain = TailDomain::Fprime)
        : coeffs_(std::move(coeffs)), tail_(std::move(tail)), domain_(domain)
    {
        if (coeffs_.empty()) {
            throw Error(ErrorCode::InvalidContinuedFraction, "no coefficients");
        }
        for (std::size_t j = 1; j < coeffs_.size(); ++j) {
            if (coeffs_[j] < 1) {
                throw Error(ErrorCode::InvalidContinuedFraction,
                            "coefficient " + std::to_string(j) + " is " + coeffs_[j].get_str());
            }
        }
        const Region r = domain_ == TailDomain::Fprime ? Region::Fprime : Region::Gprime;
        if (!in_region(tail_, r)) {
            throw Error(ErrorCode::InvalidContinuedFraction,
                        "tail " + format(tail_) + " is not in " + std::string(region_name(r)));
        }
    }

    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    const QuadElem& tail() const noexcept { return tail_; }
    TailDomain domain() const noexcept { return domain_; }
    /// Index n of the last coefficient.
    std::size_t last_index() const noexcept { return coeffs_.size() - 1; }

    friend bool operator==(const ContinuedFraction& x, const ContinuedFraction& y)
    {
        return x.domain_ == y.domain_ && x.coeffs_ == y.coeffs_ && x.tail_ == y.tail_;
    }

    std::string str() const
    {
        std::string s = "[";
        for (std::size_t j = 0; j < coeffs_.size(); ++j) {
            s += (j ? ", " : "") + coeffs_[j].get_str();
        }
        if (!tail_.is_zero()) {
            s += " + " + format(tail_);
        }
        return s + "]";
    }

private:
    std::vector<Integer> coeffs_;
    QuadElem tail_;
    TailDomain domain_;
};

/// Numerators h_m and denominators k_m for m = -2..n.
class Convergents {
public:
    explicit Convergents(std::span<const Integer> coeffs)
    {
        h_ = {0, 1};
        k_ = {1, 0};
        h_.reserve(coeffs.size() + 2);
        k_.reserve(coeffs.size() + 2);
        for (const Integer& a : coeffs) {
            h_.push_back(a * h_[h_.size() - 1] + h_[h_.size() - 2]);
            k_.push_back(a * k_[k_.size() - 1] + k_[k_.size() - 2]);
        }
    }

    /// h_m for m >= -2.
    const Integer& h(long m) const { return h_.at(static_cast<std::size_t>(m + 2)); }
    const Integer& k(long m) const { return k_.at(static_cast<std::size_t>(m + 2)); }
    long last() const { return static_cast<long>(h_.size()) - 3; }

    /// [[h_{m-1}, h_m], [k_{m-1}, k_m]], determinant (-1)^m.
    Mat2 matrix(long m) const { return {h(m - 1), h(m), k(m - 1), k(m)}; }
    Mat2 matrix() const { return matrix(last()); }

private:
    std::vector<Integer> h_;
    std::vector<Integer> k_;
};

inline Convergents convergents(std::span<const Integer> coeffs) { return Convergents(coeffs); }

/// (h_{n-1} z0 + h_n) / (k_{n-1} z0 + k_n).
inline QuadElem cf_eval(const ContinuedFraction& cf)
{
    const Convergents cv(cf.coeffs());
    const long n = cv.last();
    if (cf.tail().is_zero()) {
        return QuadElem(make_rational(cv.h(n), cv.k(n)));
    }
    return cv.matrix(n).apply(cf.tail());
}

namespace detail {

inline void require_expandable(const QuadElem& z)
{
    if (z.radicand() > 0) {
        throw Error(ErrorCode::RealIrrational,
                    format(z) + " is a real irrational; use periodic_cf or a rational approximation");
    }
}

inline Error iteration_limit(std::size_t max_steps)
{
    return Error(ErrorCode::IterationLimit, "no termination within " + std::to_string(max_steps) + " steps");
}

inline ContinuedFraction expand_v1(QuadElem z, std::size_t max_steps)
{
    std::vector<Integer> a;
    for (std::size_t step = 0; step < max_steps; ++step) {
        const Integer m = floor_real(z);
        const QuadElem w = z - QuadElem(m);
        if (in_fprime(w)) {
            a.push_back(m);
            return {std::move(a), w};
        }
        QuadElem w1 = w - QuadElem(1);
        if (in_fprime(w1)) {
            a.push_back(m + 1);
            return {std::move(a), std::move(w1)};
        }
        a.push_back(m);
        z = w.inverse();
    }
    throw iteration_limit(max_steps);
}

inline ContinuedFraction expand_loop(QuadElem z, Region loop_region, bool append_one, std::size_t max_steps)
{
    std::vector<Integer> a;
    for (std::size_t step = 0; step < max_steps; ++step) {
        const Integer m = floor_real(z);
        QuadElem w = z - QuadElem(m);
        if (in_region(w, loop_region)) {
            a.push_back(m);
            z = w.inverse();
            continue;
        }
        if (in_fprime(w)) {
            a.push_back(m);
            return {std::move(a), std::move(w)};
        }
        QuadElem w1 = w - QuadElem(1);
        if (!append_one || in_fprime(w1)) {
            a.push_back(m + 1);
            return {std::move(a), std::move(w1)};
        }
        a.push_back(m);
        a.push_back(1);
        return {std::move(a), w.inverse() - QuadElem(1)};
    }
    throw iteration_limit(max_steps);
}

} // namespace detail

/// Canonical expansion of z (radicand <= 0). All variants give the same
/// result; V2 and V3 only change the loop's exit test.
inline ContinuedFraction cf_expand(const QuadElem& z, Variant variant = Variant::V1,
                                   std::size_t max_steps = kDefaultMaxSteps)
{
    detail::require_expandable(z);
    switch (variant) {
    case Variant::V1: return detail::expand_v1(z, max_steps);
    case Variant::V2: return detail::expand_loop(z, Region::C, false, max_steps);
    case Variant::V3: return detail::expand_loop(z, Region::D, true, max_steps);
    }
    return detail::expand_v1(z, max_steps);
}

/// Canonical: tail is not rho^2 or rho^4, and a trailing zero tail needs
/// a_n >= 2 when n >= 1.
inline bool is_canonical(const ContinuedFraction& cf)
{
    const std::optional<Corner> c = corner_of(cf.tail());
    if (c == Corner::Rho2 || c == Corner::Rho4) {
        return false;
    }
    return !(cf.tail().is_zero() && cf.last_index() >= 1 && cf.coeffs().back() < 2);
}

/// An equal-valued representation obtained from one of the six corner
/// identities; `identity` is 1..6 in the usual numbering.
struct Twin {
    int identity;
    ContinuedFraction cf;
};

/// Every representation related to cf by a single corner identity, in
/// identity order. Throws NotACorner if the tail is not a corner.
inline std::vector<Twin> exceptional_twins(const ContinuedFraction& cf)
{
    const std::optional<Corner> corner = corner_of(cf.tail());
    if (!corner) {
        throw Error(ErrorCode::NotACorner, "tail " + format(cf.tail()) + " is not a corner");
    }
    // Rebuild all corners in the tail's own radicand.
    const QuadElem& t = cf.tail();
    const QuadElem rho(Rational(1, 2), abs(t.surd_part()), t.radicand());
    const QuadElem rho5 = rho.conj();
    const QuadElem rho2 = rho - QuadElem(1);
    const QuadElem rho4 = rho5 - QuadElem(1);

    const std::vector<Integer>& a = cf.coeffs();
    const std::size_t n = cf.last_index();
    const Integer& last = a.back();
    // A coefficient at position n may drop to last - 1 only if it stays positive.
    const bool can_decrement = n == 0 || last >= 2;
    const bool ends_in_one = n >= 1 && last == 1;

    auto replace_last = [&](Integer v, const QuadElem& tail) {
        std::vector<Integer> b = a;
        b.back() = std::move(v);
        return ContinuedFraction(std::move(b), tail, cf.domain());
    };
    auto split_last = [&](Integer v, const QuadElem& tail) {
        std::vector<Integer> b = a;
        b.back() = std::move(v);
        b.push_back(1);
        return ContinuedFraction(std::move(b), tail, cf.domain());
    };
    auto merge_last = [&](Integer delta, const QuadElem& tail) {
        std::vector<Integer> b(a.begin(), a.end() - 1);
        b.back() += delta;
        return ContinuedFraction(std::move(b), tail, cf.domain());
    };

    std::vector<Twin> out;
    switch (*corner) {
    case Corner::Rho4:
        if (can_decrement) out.push_back({1, split_last(last - 1, rho2)});
        if (ends_in_one) out.push_back({2, merge_last(1, rho2)});
        if (ends_in_one) out.push_back({5, merge_last(0, rho)});
        if (can_decrement) out.push_back({6, replace_last(last - 1, rho5)});
        break;
    case Corner::Rho2:
        if (ends_in_one) out.push_back({1, merge_last(1, rho4)});
        if (can_decrement) out.push_back({2, split_last(last - 1, rho4)});
        if (can_decrement) out.push_back({3, replace_last(last - 1, rho)});
        if (ends_in_one) out.push_back({4, merge_last(0, rho5)});
        break;
    case Corner::Rho:
        out.push_back({3, replace_last(last + 1, rho2)});
        out.push_back({5, split_last(last, rho4)});
        break;
    case Corner::Rho5:
        out.push_back({4, split_last(last, rho2)});
        out.push_back({6, replace_last(last + 1, rho4)});
        break;
    }
    return out;
}

/// The first twin in identity order.
inline ContinuedFraction exceptional_twin(const ContinuedFraction& cf) { return exceptional_twins(cf).front().cf; }

namespace detail {

// Rewrites [a0..an + base'] where base' lies on border B_k of F' into a
// valid expansion. `base` is the quantity whose conjugate sits on B_k.
inline ContinuedFraction apply_border_rule(const std::vector<Integer>& a, int border, const QuadElem& base,
                                           TailDomain domain)
{
    const std::size_t n = a.size() - 1;
    const bool keep_last = n == 0 || a.back() >= 2;
    std::vector<Integer> b = a;
    switch (border) {
    case 1:
        b.back() += 1;
        return {std::move(b), -base, domain};
    case 2:
        if (keep_last) {
            b.back() -= 1;
            b.push_back(1);
        } else {
            b.pop_back();
            b.back() += 1;
        }
        return {std::move(b), base, domain};
    case 3:
        b.push_back(1);
        return {std::move(b), -base.inverse(), domain};
    case 4:
        if (keep_last) {
            b.back() -= 1;
            return {std::move(b), -base, domain};
        }
        b.pop_back();
        return {std::move(b), -base.inverse(), domain};
    default:
        throw Error(ErrorCode::InvalidContinuedFraction, "unknown border");
    }
}

} // namespace detail

/// Canonical F' expansion of the complex conjugate, by adjusting the end of
/// cf rather than re-expanding.
inline ContinuedFraction conjugate_cf(const ContinuedFraction& cf)
{
    const QuadElem w = cf.tail().conj();
    if (cf.domain() == TailDomain::Gprime || in_fprime(w)) {
        return {cf.coeffs(), w};
    }
    const std::optional<int> border = fprime_border(w);
    if (!border) {
        throw Error(ErrorCode::InvalidContinuedFraction, "conjugate tail " + format(w) + " is off every border");
    }
    return detail::apply_border_rule(cf.coeffs(), *border, cf.tail(), TailDomain::Fprime);
}

/// The G' representation of the same number.
inline ContinuedFraction to_gprime(const ContinuedFraction& cf)
{
    if (cf.domain() == TailDomain::Gprime) {
        return cf;
    }
    const QuadElem w = cf.tail().conj();
    if (in_fprime(w)) {
        return {cf.coeffs(), cf.tail(), TailDomain::Gprime};
    }
    const std::optional<int> border = fprime_border(w);
    if (!border) {
        throw Error(ErrorCode::InvalidContinuedFraction, "conjugate tail " + format(w) + " is off every border");
    }
    return detail::apply_border_rule(cf.coeffs(), *border, w, TailDomain::Gprime);
}

/// z ~ w under GL(2,Z): tails satisfy w0 in {z0, -z0, 1/z0, -1/z0}.
inline bool serret_equivalent(const QuadElem& z, const QuadElem& w)
{
    const QuadElem z0 = cf_expand(z).tail();
    const QuadElem w0 = cf_expand(w).tail();
    if (z0.is_zero() || w0.is_zero()) {
        return z0.is_zero() && w0.is_zero();
    }
    const QuadElem inv = z0.inverse();
    return w0 == z0 || w0 == -z0 || w0 == inv || w0 == -inv;
}

/// 1/(k_n k_{n-1}), an upper bound for |[a0..an + z0] - [a0..an]|.
inline Rational tail_distance_bound(const ContinuedFraction& cf)
{
    if (cf.last_index() == 0) {
        throw Error(ErrorCode::TooShort, "distance bound needs n >= 1");
    }
    const Convergents cv(cf.coeffs());
    const long n = cv.last();
    return make_rational(1, cv.k(n) * cv.k(n - 1));
}

/// Ordinary continued fraction of a real quadratic irrational: preperiod
/// followed by a repeating period of minimal length.
struct PeriodicCF {
    std::vector<Integer> preperiod;
    std::vector<Integer> period;

    /// Coefficient a_j of the infinite expansion.
    const Integer& coefficient(std::size_t j) const
    {
        if (j < preperiod.size()) {
            return preperiod[j];
        }
        return period[(j - preperiod.size()) % period.size()];
    }

    std::vector<Integer> prefix(std::size_t count) const
    {
        std::vector<Integer> out;
        out.reserve(count);
        for (std::size_t j = 0; j < count; ++j) {
            out.push_back(coefficient(j));
        }
        return out;
    }

    friend bool operator==(const PeriodicCF&, const PeriodicCF&) = default;
};

/// Runs the (P + sqrt(D)) / Q recursion until a state repeats.
inline PeriodicCF periodic_cf(const QuadElem& s, std::size_t max_steps = kDefaultMaxSteps)
{
    if (s.is_rational()) {
        throw Error(ErrorCode::RationalInput, format(s) + " is rational");
    }
    if (s.radicand() < 0) {
        throw Error(ErrorCode::InvalidRadicand, format(s) + " is not real");
    }
    const Rational& x = s.rational_part();
    const Rational& y = s.surd_part();
    const Integer den = lcm_of(x.get_den(), y.get_den());
    const Integer xs = x.get_num() * (den / x.get_den());
    const Integer ys = y.get_num() * (den / y.get_den());
    const int sy = sgn(ys);
    // s = (P + sqrt(D)) / Q
    Integer p = sy * xs;
    Integer d = ys * ys * s.radicand();
    Integer q = sy * den;
    if ((d - p * p) % q != 0) {
        const Integer aq = abs(q);
        p *= aq;
        d *= q * q;
        q *= aq;
    }
    const Integer r = isqrt(d);

    std::map<std::pair<Integer, Integer>, std::size_t> seen;
    std::vector<Integer> coeffs;
    for (std::size_t step = 0; step < max_steps; ++step) {
        auto [it, fresh] = seen.emplace(std::make_pair(p, q), coeffs.size());
        if (!fresh) {
            const auto start = static_cast<std::ptrdiff_t>(it->second);
            return {std::vector<Integer>(coeffs.begin(), coeffs.begin() + start),
                    std::vector<Integer>(coeffs.begin() + start, coeffs.end())};
        }
        Integer a;
        if (q > 0) {
            mpz_fdiv_q(a.get_mpz_t(), Integer(p + r).get_mpz_t(), q.get_mpz_t());
        } else {
            Integer t;
            mpz_fdiv_q(t.get_mpz_t(), Integer(p + r).get_mpz_t(), Integer(-q).get_mpz_t());
            a = -t - 1;
        }
        coeffs.push_back(a);
        p = a * q - p;
        q = (d - p * p) / q;
    }
    throw detail::iteration_limit(max_steps);
}

} // namespace ccfrac
