#pragma once

// Words for SL(2,Z) in the generator pairs L/R, U/S and T/S, found from
// the continued fraction of (S)M(2i).

#include <cctype>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ccfrac/cfrac.hpp"
#include "ccfrac/error.hpp"
#include "ccfrac/exactnum.hpp"
#include "ccfrac/mat2.hpp"
#include "ccfrac/regions.hpp"

namespace ccfrac {

/// L^{a0} R^{a1} L^{a2} ... for the given exponents.
inline Mat2 lr_product(std::span<const Integer> exps)
{
    Mat2 m;
    for (std::size_t j = 0; j < exps.size(); ++j) {
        m *= j % 2 == 0 ? Mat2::L(exps[j]) : Mat2::R(exps[j]);
    }
    return m;
}

/// For z = [a0, ..., an + z0] in H: z = W (S) z2 with W the L/R product of
/// the coefficients and z2 in F. Returns whether the S is needed.
inline bool needs_trailing_s(const ContinuedFraction& cf)
{
    const QuadElem z1 = cf.last_index() % 2 == 0 ? cf.tail() : cf.tail().inverse();
    return !in_region(z1, Region::F);
}

enum class WordBasis { LR, US, TS };

constexpr std::string_view basis_name(WordBasis b) noexcept
{
    switch (b) {
    case WordBasis::LR: return "lr";
    case WordBasis::US: return "us";
    case WordBasis::TS: return "ts";
    }
    return "?";
}

/// sign * (S) * body * (S). The body is
///   LR: L^{e0} R^{e1} L^{e2} ...  (e0 may be 0 when more blocks follow)
///   US: U^{e1} S U^{e2} S ... S U^{en}, each ej in {1, 2}
///   TS: T^{b1} S T^{b2} S ... S T^{br}
struct GenWord {
    int sign = 1;
    bool lead_s = false;
    std::vector<Integer> body;
    bool trail_s = false;
    WordBasis basis = WordBasis::LR;

    friend bool operator==(const GenWord&, const GenWord&) = default;
};

namespace detail {

// Empty bodies carry at most one S, and it sits in front.
inline void normalize_empty(GenWord& w)
{
    if (!w.body.empty()) {
        return;
    }
    if (w.lead_s && w.trail_s) {
        w.lead_s = w.trail_s = false;
        w.sign = -w.sign;
    } else if (w.trail_s) {
        w.trail_s = false;
        w.lead_s = true;
    }
}

inline void check_word(const GenWord& w)
{
    auto bad = [](const std::string& why) { return Error(ErrorCode::InvalidWord, why); };
    if (w.sign != 1 && w.sign != -1) {
        throw bad("sign must be +1 or -1");
    }
    if (w.body.empty() && w.trail_s) {
        throw bad("trailing S on an empty body");
    }
    for (std::size_t j = 0; j < w.body.size(); ++j) {
        const Integer& e = w.body[j];
        switch (w.basis) {
        case WordBasis::LR:
            if (e < 1 && !(j == 0 && e == 0 && w.body.size() > 1)) {
                throw bad("LR exponent " + e.get_str() + " at block " + std::to_string(j));
            }
            break;
        case WordBasis::US:
            if (e != 1 && e != 2) {
                throw bad("U exponent must be 1 or 2");
            }
            break;
        case WordBasis::TS:
            if (e < 1 || (j > 0 && j + 1 < w.body.size() && e < 2)) {
                throw bad("T exponent " + e.get_str() + " at block " + std::to_string(j));
            }
            break;
        }
    }
}

inline Mat2 power(const Mat2& g, const Integer& e)
{
    Mat2 m;
    for (Integer k = 0; k < e; ++k) {
        m *= g;
    }
    return m;
}

} // namespace detail

inline Mat2 compose(const GenWord& w)
{
    detail::check_word(w);
    Mat2 m = w.lead_s ? Mat2::S() : Mat2::identity();
    switch (w.basis) {
    case WordBasis::LR:
        m *= lr_product(w.body);
        break;
    case WordBasis::US:
        for (std::size_t j = 0; j < w.body.size(); ++j) {
            if (j > 0) m *= Mat2::S();
            m *= detail::power(Mat2::U(), w.body[j]);
        }
        break;
    case WordBasis::TS:
        for (std::size_t j = 0; j < w.body.size(); ++j) {
            if (j > 0) m *= Mat2::S();
            m *= Mat2::T(w.body[j]);
        }
        break;
    }
    if (w.trail_s) {
        m *= Mat2::S();
    }
    return w.sign < 0 ? -m : m;
}

namespace detail {

inline GenWord lr_to_us(const GenWord& w)
{
    GenWord out{w.sign, w.lead_s, {}, false, WordBasis::US};
    Integer weight = 0;
    for (std::size_t j = 0; j < w.body.size(); ++j) {
        weight += w.body[j];
        for (Integer k = 0; k < w.body[j]; ++k) {
            out.body.push_back(j % 2 == 0 ? 1 : 2);
        }
    }
    // L = -US and R = -U^2 S
    if (weight % 2 != 0) {
        out.sign = -out.sign;
    }
    if (!out.body.empty()) {
        // every factor ends in S; the last one becomes the optional trailing S
        out.trail_s = true;
        if (w.trail_s) {
            out.trail_s = false;
            out.sign = -out.sign;
        }
    }
    normalize_empty(out);
    return out;
}

inline GenWord lr_to_ts(const GenWord& w)
{
    // L = T and R = TST; collect T runs between S letters.
    GenWord out{w.sign, w.lead_s, {}, w.trail_s, WordBasis::TS};
    Integer run = 0;
    bool started = false;
    for (std::size_t j = 0; j < w.body.size(); ++j) {
        for (Integer k = 0; k < w.body[j]; ++k) {
            started = true;
            if (j % 2 == 0) {
                run += 1;
            } else {
                run += 1;
                out.body.push_back(run);
                run = 1;
            }
        }
    }
    if (started) {
        out.body.push_back(run);
    }
    normalize_empty(out);
    return out;
}

} // namespace detail

/// Unique word for M in SL(2,Z).
inline GenWord word_decompose(const Mat2& m, WordBasis basis = WordBasis::LR)
{
    if (m.det() != 1) {
        throw Error(ErrorCode::NotUnimodular, "word_decompose needs det 1; compose with J first");
    }
    QuadElem z = m.apply(QuadElem(Rational(0), Rational(2), Integer(-1)));
    GenWord w;
    if (z.re() < 0) {
        w.lead_s = true;
        z = -z.inverse();
    }
    const ContinuedFraction cf = cf_expand(z);
    w.body = cf.coeffs();
    w.trail_s = needs_trailing_s(cf);
    Mat2 candidate = lr_product(w.body);
    if (w.lead_s) candidate = Mat2::S() * candidate;
    if (w.trail_s) candidate *= Mat2::S();
    w.sign = candidate == m ? 1 : -1;
    if (w.body.size() == 1 && w.body[0] == 0) {
        w.body.clear();
    }
    detail::normalize_empty(w);

    switch (basis) {
    case WordBasis::LR: return w;
    case WordBasis::US: return detail::lr_to_us(w);
    case WordBasis::TS: return detail::lr_to_ts(w);
    }
    return w;
}

/// Whitespace separated tokens, e.g. "-S R^1 L^5 R^1". Exponents are always
/// printed; the identity is "I".
inline std::string format_word(const GenWord& w)
{
    std::vector<std::string> tok;
    if (w.lead_s) tok.push_back("S");
    for (std::size_t j = 0; j < w.body.size(); ++j) {
        const std::string e = w.body[j].get_str();
        switch (w.basis) {
        case WordBasis::LR:
            if (w.body[j] != 0) tok.push_back((j % 2 == 0 ? "L^" : "R^") + e);
            break;
        case WordBasis::US:
            if (j > 0) tok.push_back("S");
            tok.push_back("U^" + e);
            break;
        case WordBasis::TS:
            if (j > 0) tok.push_back("S");
            tok.push_back("T^" + e);
            break;
        }
    }
    if (w.trail_s) tok.push_back("S");
    if (tok.empty()) tok.push_back("I");
    std::string out = w.sign < 0 ? "-" : "";
    for (std::size_t j = 0; j < tok.size(); ++j) {
        out += (j ? " " : "") + tok[j];
    }
    return out;
}

/// Inverse of format_word. Bare letters mean exponent 1. Words with no
/// generator letters ("I", "-S") get the basis `empty_basis`.
inline GenWord parse_word(std::string_view text, WordBasis empty_basis = WordBasis::LR)
{
    auto bad = [](const std::string& why) { return Error(ErrorCode::InvalidWord, why); };
    std::string s(text);
    std::size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    GenWord w;
    w.basis = empty_basis;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        w.sign = s[i] == '-' ? -1 : 1;
        ++i;
    }

    struct Tok {
        char letter;
        Integer exp;
    };
    std::vector<Tok> toks;
    std::istringstream in(s.substr(i));
    std::string t;
    while (in >> t) {
        const char c = t[0];
        if (std::string_view("ILRSTU").find(c) == std::string_view::npos) {
            throw bad("unknown token '" + t + "'");
        }
        Integer e = 1;
        if (t.size() > 1) {
            if (t[1] != '^' || t.size() == 2 || c == 'S' || c == 'I') {
                throw bad("bad token '" + t + "'");
            }
            const std::string digits = t.substr(2);
            for (char d : digits) {
                if (!std::isdigit(static_cast<unsigned char>(d))) throw bad("bad exponent in '" + t + "'");
            }
            e = Integer(digits);
        }
        toks.push_back({c, e});
    }
    if (toks.size() == 1 && toks[0].letter == 'I') {
        return w;
    }

    std::size_t lo = 0;
    std::size_t hi = toks.size();
    if (lo < hi && toks[lo].letter == 'S') {
        w.lead_s = true;
        ++lo;
    }
    bool has_lr = false, has_u = false, has_t = false;
    for (std::size_t j = lo; j < hi; ++j) {
        has_lr |= toks[j].letter == 'L' || toks[j].letter == 'R';
        has_u |= toks[j].letter == 'U';
        has_t |= toks[j].letter == 'T';
        if (toks[j].letter == 'I') throw bad("I inside a word");
    }
    if (int(has_lr) + int(has_u) + int(has_t) > 1) {
        throw bad("mixed bases");
    }
    if (lo < hi && toks[hi - 1].letter == 'S' && (hi - 1 > lo || !w.lead_s)) {
        w.trail_s = true;
        --hi;
    }
    if (has_lr) {
        w.basis = WordBasis::LR;
        for (std::size_t j = lo; j < hi; ++j) {
            const Tok& k = toks[j];
            if (k.letter == 'S') throw bad("S inside an LR word");
            const std::size_t slot = k.letter == 'L' ? 0 : 1;
            if (w.body.empty() && slot == 1) w.body.push_back(0);
            if (w.body.size() % 2 != slot) throw bad("LR blocks must alternate");
            w.body.push_back(k.exp);
        }
    } else if (has_u || has_t) {
        w.basis = has_u ? WordBasis::US : WordBasis::TS;
        const char g = has_u ? 'U' : 'T';
        bool want_gen = true;
        for (std::size_t j = lo; j < hi; ++j) {
            const Tok& k = toks[j];
            if (want_gen != (k.letter == g)) throw bad("generators and S must alternate");
            if (want_gen) w.body.push_back(k.exp);
            want_gen = !want_gen;
        }
        if (want_gen) throw bad("word ends in S S");
    } else if (hi > lo) {
        throw bad("unexpected S");
    }
    detail::check_word(w);
    return w;
}

/// Number of LR bodies with exponent sum n (a0 = 0 allowed), by counting
/// compositions.
inline Integer count_words(unsigned n)
{
    if (n == 0) {
        return 1;
    }
    // comp[k] = number of compositions of k
    std::vector<Integer> comp(n + 1, 0);
    comp[0] = 1;
    for (unsigned k = 1; k <= n; ++k) {
        for (unsigned part = 1; part <= k; ++part) {
            comp[k] += comp[k - part];
        }
    }
    // starts with L, or with R (a0 = 0)
    return 2 * comp[n];
}

/// All LR bodies of weight n >= 1, each with its a0 slot (possibly 0).
inline std::vector<std::vector<Integer>> enumerate_lr_words(unsigned n)
{
    std::vector<std::vector<Integer>> out;
    std::vector<Integer> cur;
    auto rec = [&](auto&& self, unsigned left) -> void {
        if (left == 0) {
            out.push_back(cur);
            out.push_back(cur);
            out.back().insert(out.back().begin(), Integer(0));
            return;
        }
        for (unsigned part = 1; part <= left; ++part) {
            cur.push_back(part);
            self(self, left - part);
            cur.pop_back();
        }
    };
    if (n > 0) {
        rec(rec, n);
    }
    return out;
}

} // namespace ccfrac
