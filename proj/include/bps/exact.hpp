#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <compare>
#include <concepts>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace bps {

/// Arbitrary-precision signed integer.
///
/// Thin value wrapper around GMP's mpz_class with a deliberately small
/// conversion surface: implicit construction only from built-in integral
/// types, everything else explicit. Keeping the constructor set closed is
/// what lets the type act as an Eigen scalar without dragging GMP's
/// expression templates into Eigen's overload resolution.
class Integer {
public:
    Integer() : v_(0) {}

    template <std::integral T>
    Integer(T v) {
        if constexpr (std::signed_integral<T>) {
            v_ = static_cast<long>(v);
        } else {
            v_ = static_cast<unsigned long>(v);
        }
    }

    explicit Integer(mpz_class v) : v_(std::move(v)) {}

    /// Parses a base-10 integer with optional leading sign.
    explicit Integer(const std::string& text) : v_(text, 10) {}

    const mpz_class& raw() const { return v_; }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }

    std::string to_string() const { return v_.get_str(); }

    Integer operator-() const { return Integer(mpz_class(-v_)); }

    Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
    Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
    Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }

    /// Truncated division (rounds toward zero), matching built-in integers.
    Integer& operator/=(const Integer& o) {
        if (o.is_zero()) throw std::domain_error("Integer: division by zero");
        v_ /= o.v_;
        return *this;
    }
    Integer& operator%=(const Integer& o) {
        if (o.is_zero()) throw std::domain_error("Integer: remainder by zero");
        v_ %= o.v_;
        return *this;
    }

    friend Integer operator+(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ + b.v_)); }
    friend Integer operator-(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ - b.v_)); }
    friend Integer operator*(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ * b.v_)); }
    friend Integer operator/(const Integer& a, const Integer& b) { Integer r(a); r /= b; return r; }
    friend Integer operator%(const Integer& a, const Integer& b) { Integer r(a); r %= b; return r; }

    friend bool operator==(const Integer& a, const Integer& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend Integer abs(const Integer& a) { return Integer(mpz_class(::abs(a.v_))); }
    friend Integer gcd(const Integer& a, const Integer& b) { return Integer(mpz_class(::gcd(a.v_, b.v_))); }

    friend Integer pow(const Integer& base, unsigned long exp) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), base.raw().get_mpz_t(), exp);
        return Integer(std::move(r));
    }

    friend std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.v_; }

private:
    mpz_class v_;
};

/// Arbitrary-precision rational in canonical reduced form.
///
/// Invariants (maintained by every operation): gcd(|numerator|, denominator)
/// = 1 and denominator >= 1; zero is 0/1. Equality is therefore structural.
class Rational {
public:
    Rational() : v_(0) {}

    template <std::integral T>
    Rational(T v) : v_(Integer(v).raw()) {}

    Rational(const Integer& v) : v_(v.raw()) {}

    Rational(const Integer& num, const Integer& den) {
        if (den.is_zero()) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num.raw(), den.raw());
        v_.canonicalize();
    }

    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    const mpq_class& raw() const { return v_; }

    Integer numerator() const { return Integer(mpz_class(v_.get_num())); }
    Integer denominator() const { return Integer(mpz_class(v_.get_den())); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    /// Integer part, rounded toward zero.
    Integer trunc() const {
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
        return Integer(std::move(q));
    }

    Rational reciprocal() const {
        if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
        return wrap(mpq_class(1 / v_));
    }

    std::string to_string() const {
        return is_integer() ? v_.get_num().get_str()
                            : v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rational operator-() const { return wrap(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return wrap(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return wrap(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return wrap(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) { Rational r(a); r /= b; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend Rational abs(const Rational& a) { return wrap(mpq_class(::abs(a.v_))); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.to_string(); }

private:
    // GMP's arithmetic keeps canonical inputs canonical, so results of our
    // own operators can skip the canonicalize() pass.
    static Rational wrap(mpq_class q) {
        Rational r;
        r.v_ = std::move(q);
        return r;
    }

    mpq_class v_;
};

using IntVec = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;
using IntMat = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace bps

namespace Eigen {

template <>
struct NumTraits<bps::Integer> : GenericNumTraits<bps::Integer> {
    typedef bps::Integer Real;
    typedef bps::Integer NonInteger;
    typedef bps::Integer Nested;
    typedef bps::Integer Literal;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 30,
        MulCost = 50,
    };
    static inline Real epsilon() { return bps::Integer(0); }
    static inline Real dummy_precision() { return bps::Integer(0); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<bps::Rational> : GenericNumTraits<bps::Rational> {
    typedef bps::Rational Real;
    typedef bps::Rational NonInteger;
    typedef bps::Rational Nested;
    typedef bps::Rational Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 60,
        MulCost = 100,
    };
    static inline Real epsilon() { return bps::Rational(0); }
    static inline Real dummy_precision() { return bps::Rational(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
