#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "hypergm/errors.hpp"

namespace hypergm {

/// Exact rational number.  Canonical form: gcd(|num|, den) = 1, den > 0
/// (maintained by GMP).
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}                  // NOLINT: implicit by design
    Rat(long n, long d) {
        if (d == 0) throw DivisionByZero("rational with zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "p", "-p", or "p/q".  Anything else is rejected.
    static Rat parse(const std::string& s) {
        if (s.empty()) throw InvalidArgument("empty rational literal");
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) {
                check_integer_text(s);
                return Rat(mpq_class(mpz_class(s)));
            }
            std::string num = s.substr(0, slash), den = s.substr(slash + 1);
            check_integer_text(num);
            check_integer_text(den);
            mpz_class d(den);
            if (d == 0) throw DivisionByZero("rational with zero denominator");
            mpq_class q(mpz_class(num), d);
            q.canonicalize();
            return Rat(q);
        } catch (const std::invalid_argument&) {
            throw InvalidArgument("bad rational literal: " + s);
        }
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw DivisionByZero("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat inv() const {
        if (is_zero()) throw DivisionByZero("inverse of zero");
        return Rat(mpq_class(1) / v_);
    }

    Rat pow(long e) const {
        if (e == 0) return Rat(1);
        if (is_zero() && e < 0) throw DivisionByZero("0 to a negative power");
        mpq_class base = e > 0 ? v_ : mpq_class(1) / v_;
        mpq_class acc = 1;
        for (long i = 0, n = e > 0 ? e : -e; i < n; ++i) acc *= base;
        return Rat(acc);
    }

    double to_double() const { return v_.get_d(); }
    std::complex<double> to_complex() const { return {v_.get_d(), 0.0}; }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

  private:
    static void check_integer_text(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("empty");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("sign only");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("digit");
    }

    mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
}

}  // namespace hypergm
