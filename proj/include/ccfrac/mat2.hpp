#pragma once

#include <string>

#include "ccfrac/error.hpp"
#include "ccfrac/exactnum.hpp"

namespace ccfrac {

/// Integer matrix [[a, b], [c, d]] with determinant +1 or -1, acting on
/// numbers by z -> (a z + b) / (c z + d).
class Mat2 {
public:
    Mat2() : a_(1), b_(0), c_(0), d_(1) {}

    Mat2(Integer a, Integer b, Integer c, Integer d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d))
    {
        const Integer det = a_ * d_ - b_ * c_;
        if (det != 1 && det != -1) {
            throw Error(ErrorCode::NotUnimodular, "determinant " + det.get_str() + " of " + str());
        }
    }

    static Mat2 identity() { return {}; }
    static Mat2 S() { return {0, -1, 1, 0}; }
    static Mat2 T(const Integer& k = 1) { return {1, k, 0, 1}; }
    static Mat2 U() { return {1, -1, 1, 0}; }
    static Mat2 J() { return {0, 1, 1, 0}; }
    static Mat2 L(const Integer& k = 1) { return {1, k, 0, 1}; }
    static Mat2 R(const Integer& k = 1) { return {1, 0, k, 1}; }

    const Integer& a() const noexcept { return a_; }
    const Integer& b() const noexcept { return b_; }
    const Integer& c() const noexcept { return c_; }
    const Integer& d() const noexcept { return d_; }

    int det() const { return a_ * d_ - b_ * c_ == 1 ? 1 : -1; }

    Mat2 inverse() const
    {
        if (det() == 1) {
            return {d_, -b_, -c_, a_};
        }
        return {-d_, b_, c_, -a_};
    }

    QuadElem apply(const QuadElem& z) const
    {
        return (QuadElem(a_) * z + QuadElem(b_)) / (QuadElem(c_) * z + QuadElem(d_));
    }

    friend Mat2 operator*(const Mat2& x, const Mat2& y)
    {
        return {x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
                x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_};
    }

    Mat2& operator*=(const Mat2& o) { return *this = *this * o; }

    Mat2 operator-() const { return {-a_, -b_, -c_, -d_}; }

    friend bool operator==(const Mat2& x, const Mat2& y)
    {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }

    friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }

    std::string str() const
    {
        return "[[" + a_.get_str() + "," + b_.get_str() + "],[" + c_.get_str() + "," + d_.get_str() + "]]";
    }

private:
    Integer a_, b_, c_, d_;
};

} // namespace ccfrac
