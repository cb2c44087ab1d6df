#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace kashina {

/// Exact element of the field Q(xi), where xi is a fixed primitive 4th root
/// of unity: values are re + im*xi with xi^2 = -1 and re, im rational.
///
/// Both components are GMP rationals and stay in lowest terms with positive
/// denominator. Every operation is exact; there is no floating-point path.
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long v) : re_(v), im_(0) {} // NOLINT: implicit by design, mirrors integer literals
    Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar zero() { return Scalar(0); }
    static Scalar one() { return Scalar(1); }

    /// The distinguished primitive 4th root of unity.
    static Scalar xi() { return Scalar(mpq_class(0), mpq_class(1)); }

    static Scalar rational(long num, long den) {
        if (den == 0) throw std::invalid_argument("Scalar::rational: zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return Scalar(q, mpq_class(0));
    }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    Scalar operator-() const { return Scalar(-re_, -im_); }

    Scalar& operator+=(const Scalar& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

    /// Multiplicative inverse: (a + b*xi)^-1 = (a - b*xi) / (a^2 + b^2).
    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("Scalar::inverse: zero has no inverse");
        mpq_class n = re_ * re_ + im_ * im_;
        return Scalar(re_ / n, -im_ / n);
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    Scalar pow(long k) const {
        Scalar base = *this;
        if (k < 0) {
            base = base.inverse();
            k = -k;
        }
        Scalar acc = one();
        while (k > 0) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Canonical textual form, e.g. "0", "-1", "xi", "1/2-3*xi".
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        if (sgn(re_) != 0) out = re_.get_str();
        if (sgn(im_) != 0) {
            std::string i;
            if (im_ == 1) i = "xi";
            else if (im_ == -1) i = "-xi";
            else i = im_.get_str() + "*xi";
            if (!out.empty() && i[0] != '-') out += "+";
            out += i;
        }
        return out;
    }

private:
    mpq_class re_, im_;
};

} // namespace kashina
