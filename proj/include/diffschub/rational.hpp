#pragma once
#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "diffschub/errors.hpp"

namespace diffschub {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator.  Thin shell over GMP's mpq_class: mpq_class itself does not
// canonicalize on construction from a fraction, and we want one fixed text
// format ("p/q", or just "p" when q = 1).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_((long)n) {}
    Rational(long long n) { v_ = from_ll(n); }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) throw ParseError("zero denominator", 0);
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    static Rational parse(const std::string& s);
    std::string str() const;

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    // Exact integer value; throws if there is a genuine denominator.
    mpz_class as_integer() const {
        if (!is_integer()) throw InternalInconsistency("non-integer value " + str());
        return v_.get_num();
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw InternalInconsistency("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    // mpz_class has no long long constructor; route through a string when the
    // value does not fit in a long (cannot happen on LP64, kept for safety).
    static mpq_class from_ll(long long n) {
        if (n >= static_cast<long long>(-__LONG_MAX__ - 1L) &&
            n <= static_cast<long long>(__LONG_MAX__))
            return mpq_class(static_cast<long>(n));
        return mpq_class(mpz_class(std::to_string(n)));
    }

    mpq_class v_;
};

inline Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational", 0);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(mpz_class(s));
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational '" + s + "'", 0);
    }
}

inline std::string Rational::str() const {
    std::string out = v_.get_num().get_str();
    if (!is_integer()) out += "/" + v_.get_den().get_str();
    return out;
}

}  // namespace diffschub
