#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace brauer {

/// Element of Z/2.  Addition is xor; used for all parity bookkeeping.
class Parity {
public:
    constexpr Parity() : v_(0) {}
    constexpr explicit Parity(int v) : v_(static_cast<uint8_t>(v & 1)) {}

    constexpr int value() const { return v_; }
    constexpr bool odd() const { return v_ != 0; }
    constexpr bool even() const { return v_ == 0; }

    friend constexpr Parity operator+(Parity a, Parity b) { return Parity(a.v_ ^ b.v_); }
    Parity& operator+=(Parity o) { v_ ^= o.v_; return *this; }
    friend constexpr bool operator==(Parity a, Parity b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(Parity a, Parity b) { return a.v_ != b.v_; }

    /// (-1)^(a*b) as an integer sign.
    friend constexpr int koszul(Parity a, Parity b) { return (a.v_ & b.v_) ? -1 : 1; }

private:
    uint8_t v_;
};

inline constexpr Parity Even{0};
inline constexpr Parity Odd{1};

/// Exact Gaussian-rational scalar re + im*i with arbitrary-precision
/// rational parts.  Purely rational values simply have im == 0; the
/// ground field in use (Q or Q(i)) is a property of the algebra, not of
/// the scalar itself.
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(int n) : re_(n), im_(0) {}
    Scalar(long n) : re_(n), im_(0) {}
    Scalar(const mpq_class& re) : re_(re), im_(0) {}
    Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar rational(long num, long den) {
        mpq_class q(num, den);
        q.canonicalize();
        return Scalar(q);
    }
    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool isZero() const { return re_ == 0 && im_ == 0; }
    bool isReal() const { return im_ == 0; }
    bool isOne() const { return re_ == 1 && im_ == 0; }

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar conj() const { return Scalar(re_, -im_); }

    Scalar& operator+=(const Scalar& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Scalar& operator-=(const Scalar& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Scalar& operator*=(const Scalar& o) {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    Scalar& operator/=(const Scalar& o) {
        if (o.isZero()) throw std::domain_error("Scalar: division by zero");
        mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
        mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
        mpq_class i = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b) {
        int c = cmp(a.re_, b.re_);
        if (c != 0) return c < 0;
        return cmp(a.im_, b.im_) < 0;
    }

    /// Renders like "2", "-1/3", "i", "1/2-3i".  Parseable back by the CLI.
    std::string str() const {
        if (isZero()) return "0";
        std::string out;
        if (re_ != 0) out = re_.get_str();
        if (im_ != 0) {
            if (im_ == 1) out += out.empty() ? "i" : "+i";
            else if (im_ == -1) out += "-i";
            else {
                std::string s = im_.get_str();
                if (!out.empty() && s[0] != '-') out += "+";
                out += s + "i";
            }
        }
        return out;
    }

private:
    mpq_class re_, im_;
};

inline Scalar sign(int s) { return Scalar(s); }

} // namespace brauer
