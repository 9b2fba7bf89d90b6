// instanton-verify: exact computer algebra for framed autodual instanton data.
// Distributed under the MIT license; see LICENSE in the repository root.

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace instanton {

/// Thrown when a division (or inversion) by an exact zero is requested.
/// Kept distinct from generic domain errors so callers can test for it.
class DivisionByZeroError : public std::domain_error {
public:
    DivisionByZeroError() : std::domain_error("exact division by zero") {}
    explicit DivisionByZeroError(const std::string& what) : std::domain_error(what) {}
};

/// Thrown by the text parsers (scalars, polynomials, datum files); carries
/// the byte offset of the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Arbitrary-precision rational number, always stored in canonical form:
/// reduced fraction, positive denominator, zero as 0/1.
class BigRational {
public:
    BigRational() : v_(0) {}
    BigRational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors int literals
    BigRational(long num, unsigned long den) {
        if (den == 0) throw DivisionByZeroError();
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit BigRational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    /// Accepts "num" or "num/den" with an optional leading '-'.
    static BigRational from_string(const std::string& text);

    BigRational operator-() const { return BigRational(mpq_class(-v_), NoCanon{}); }
    BigRational operator+(const BigRational& o) const { return BigRational(mpq_class(v_ + o.v_), NoCanon{}); }
    BigRational operator-(const BigRational& o) const { return BigRational(mpq_class(v_ - o.v_), NoCanon{}); }
    BigRational operator*(const BigRational& o) const { return BigRational(mpq_class(v_ * o.v_), NoCanon{}); }
    BigRational operator/(const BigRational& o) const {
        if (o.is_zero()) throw DivisionByZeroError();
        return BigRational(mpq_class(v_ / o.v_), NoCanon{});
    }
    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
    BigRational& operator/=(const BigRational& o) { *this = *this / o; return *this; }

    bool operator==(const BigRational& o) const { return v_ == o.v_; }
    bool operator!=(const BigRational& o) const { return v_ != o.v_; }
    bool operator<(const BigRational& o) const { return v_ < o.v_; }
    bool operator<=(const BigRational& o) const { return v_ <= o.v_; }
    bool operator>(const BigRational& o) const { return v_ > o.v_; }
    bool operator>=(const BigRational& o) const { return v_ >= o.v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }
    BigRational abs() const { return sign() < 0 ? -*this : *this; }
    BigRational inverse() const {
        if (is_zero()) throw DivisionByZeroError();
        return BigRational(mpq_class(1 / v_), NoCanon{});
    }
    bool is_integer() const { return v_.get_den() == 1; }

    /// "p" when the denominator is one, otherwise "p/q".
    std::string to_string() const { return v_.get_str(); }
    const mpq_class& raw() const { return v_; }

private:
    struct NoCanon {};
    BigRational(mpq_class q, NoCanon) : v_(std::move(q)) {}  // gmp results are canonical
    mpq_class v_;
};

/// Element of Q(i): re + im*i with i^2 = -1.  The coefficient field for the
/// whole library; two values are equal iff their stored parts are identical.
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(long n) : re_(n) {}  // NOLINT: implicit by design
    GaussRational(BigRational re) : re_(std::move(re)) {}  // NOLINT
    GaussRational(BigRational re, BigRational im) : re_(std::move(re)), im_(std::move(im)) {}
    static GaussRational i() { return GaussRational(BigRational(0), BigRational(1)); }

    const BigRational& re() const { return re_; }
    const BigRational& im() const { return im_; }

    GaussRational operator-() const { return {-re_, -im_}; }
    GaussRational operator+(const GaussRational& o) const { return {re_ + o.re_, im_ + o.im_}; }
    GaussRational operator-(const GaussRational& o) const { return {re_ - o.re_, im_ - o.im_}; }
    GaussRational operator*(const GaussRational& o) const {
        return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }
    GaussRational operator/(const GaussRational& o) const { return *this * o.inverse(); }
    GaussRational& operator+=(const GaussRational& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GaussRational& operator-=(const GaussRational& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    GaussRational& operator*=(const GaussRational& o) { *this = *this * o; return *this; }
    GaussRational& operator/=(const GaussRational& o) { *this = *this / o; return *this; }

    bool operator==(const GaussRational& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussRational& o) const { return !(*this == o); }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussRational conj() const { return {re_, -im_}; }
    /// |z|^2 = re^2 + im^2 as a rational.
    BigRational norm() const { return re_ * re_ + im_ * im_; }
    GaussRational inverse() const {
        if (is_zero()) throw DivisionByZeroError();
        BigRational n = norm().inverse();
        return {re_ * n, -im_ * n};
    }

    /// Canonical literal: "0", "3/2", "i", "-i", "2*i", "1-3/4*i", ...
    /// Always re-parseable by parse_scalar and by the polynomial grammar.
    std::string to_string() const;

private:
    BigRational re_;
    BigRational im_;
};

/// Parses a scalar literal: rational ['*' 'i'], bare 'i'/'-i', or any
/// constant expression in the polynomial grammar (sums like "1+2*i").
GaussRational parse_scalar(const std::string& text);

}  // namespace instanton
