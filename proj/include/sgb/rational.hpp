#ifndef SGB_RATIONAL_HPP
#define SGB_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace sgb {

/// Exact arbitrary-precision rational, the coefficient field.
///
/// Values are always kept in canonical form: the denominator is strictly
/// positive, numerator and denominator are coprime, and zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, coefficients read naturally
    Rational(long n, long d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    /// Parses "a" or "a/b" with arbitrary-precision decimal integers.
    static Rational from_string(const std::string& s);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    const mpz_class& numer() const { return v_.get_num(); }
    const mpz_class& denom() const { return v_.get_den(); }

    Rational operator-() const { return Rational(static_cast<mpq_class>(-v_)); }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational inv() const {
        if (is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(static_cast<mpq_class>(1 / v_));
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(static_cast<mpq_class>(a.v_ + b.v_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(static_cast<mpq_class>(a.v_ - b.v_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(static_cast<mpq_class>(a.v_ * b.v_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(static_cast<mpq_class>(a.v_ / b.v_));
    }

    Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
    Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

    /// "a/b", with "/b" omitted when the denominator is 1.
    std::string str() const;

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace sgb

#endif
