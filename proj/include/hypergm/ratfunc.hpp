#pragma once

#include <complex>
#include <string>
#include <utility>

#include "hypergm/errors.hpp"
#include "hypergm/polynomial.hpp"

namespace hypergm {

/// Rational function over a field K in canonical form: gcd(num, den) = 1,
/// den monic, zero represented as 0/1.
template <typename K>
class RatFunc {
  public:
    RatFunc() : num_(), den_(K(1)) {}
    RatFunc(K c) : num_(std::move(c)), den_(K(1)) {}  // NOLINT: implicit
    RatFunc(Poly<K> p) : num_(std::move(p)), den_(K(1)) {}  // NOLINT: implicit
    RatFunc(Poly<K> num, Poly<K> den) { assign(std::move(num), std::move(den)); }

    static RatFunc var() { return RatFunc(Poly<K>::var()); }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }

    RatFunc operator-() const { return RatFunc(-num_, den_, raw_tag{}); }

    // inputs are reduced, so one cross-cancellation keeps every product
    // reduced without a full gcd on the result
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        Poly<K> g = Poly<K>::gcd(a.den_, b.den_);
        if (g.is_one())
            return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_,
                           monic_tag{});
        Poly<K> bred = b.den_ / g;
        Poly<K> num = a.num_ * bred + b.num_ * (a.den_ / g);
        if (num.is_zero()) return RatFunc();
        Poly<K> h = Poly<K>::gcd(num, g);
        if (!h.is_one()) num = num / h;
        Poly<K> den = (h.is_one() ? a.den_ : a.den_ / h) * bred;
        return RatFunc(std::move(num), std::move(den), monic_tag{});
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        Poly<K> g1 = Poly<K>::gcd(a.num_, b.den_);
        Poly<K> g2 = Poly<K>::gcd(b.num_, a.den_);
        Poly<K> num = (g1.is_one() ? a.num_ : a.num_ / g1) *
                      (g2.is_one() ? b.num_ : b.num_ / g2);
        Poly<K> den = (g2.is_one() ? a.den_ : a.den_ / g2) *
                      (g1.is_one() ? b.den_ : b.den_ / g1);
        return RatFunc(std::move(num), std::move(den), monic_tag{});
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw DivisionByZero("rational function division by zero");
        return a * b.inv();
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc inv() const {
        if (is_zero()) throw DivisionByZero("inverse of the zero function");
        return RatFunc(den_, num_, monic_tag{});
    }

    RatFunc pow(long e) const {
        RatFunc base = e >= 0 ? *this : inv();
        RatFunc acc{K(1)};
        for (long i = 0, n = e >= 0 ? e : -e; i < n; ++i) acc *= base;
        return acc;
    }

    RatFunc derivative() const {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(),
                       den_ * den_);
    }

    /// Exact evaluation; throws PoleAtPoint on a zero of the denominator.
    K eval(const K& x) const {
        K d = den_.eval(x);
        if (d.is_zero()) throw PoleAtPoint("evaluation at a pole");
        return num_.eval(x) / d;
    }

    template <typename C, typename Lift>
    C eval_with(const C& x, Lift lift) const {
        C d = den_.template eval_with<C>(x, lift);
        if (d == C{}) throw PoleAtPoint("evaluation at a pole");
        return num_.template eval_with<C>(x, lift) / d;
    }

    std::string str(const std::string& var = "z") const {
        if (den_.is_one()) return num_.str(var);
        auto paren = [](const std::string& s) {
            return s.find_first_of("+-*/^ ") == std::string::npos ? s : "(" + s + ")";
        };
        return paren(num_.str(var)) + "/" + paren(den_.str(var));
    }

  private:
    struct raw_tag {};
    struct monic_tag {};
    RatFunc(Poly<K> num, Poly<K> den, raw_tag) : num_(std::move(num)), den_(std::move(den)) {}

    // already reduced; only make the denominator monic
    RatFunc(Poly<K> num, Poly<K> den, monic_tag) {
        if (num.is_zero()) {
            num_ = Poly<K>();
            den_ = Poly<K>(K(1));
            return;
        }
        K lc = den.leading();
        if (!lc.is_one()) {
            K inv = lc.inv();
            num = num.scaled(inv);
            den = den.scaled(inv);
        }
        num_ = std::move(num);
        den_ = std::move(den);
    }

    void assign(Poly<K> num, Poly<K> den) {
        if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
        if (num.is_zero()) {
            num_ = Poly<K>();
            den_ = Poly<K>(K(1));
            return;
        }
        if (!den.is_constant() && !num.is_constant()) {
            Poly<K> g = Poly<K>::gcd(num, den);
            if (!g.is_one()) {
                num = num / g;
                den = den / g;
            }
        }
        K lc = den.leading();
        if (!lc.is_one()) {
            K inv = lc.inv();
            num = num.scaled(inv);
            den = den.scaled(inv);
        }
        num_ = std::move(num);
        den_ = std::move(den);
    }

    Poly<K> num_, den_;
};

/// Gcd over a rational-function coefficient field: plain Euclid squares the
/// inner degrees at every step, so clear denominators and run a primitive
/// pseudo-remainder sequence with the content stripped off each remainder.
template <typename F>
struct PolyGcd<RatFunc<F>> {
    using R = RatFunc<F>;
    using P = Poly<R>;

    static Poly<F> content(const P& p) {
        Poly<F> g;
        for (const R& c : p.coeffs()) g = Poly<F>::gcd(g, c.num());
        return g;
    }

    static P primitive(const P& p) {
        if (p.is_zero()) return p;
        // denominators are already 1 here
        Poly<F> cont = content(p);
        if (cont.is_one()) return p;
        std::vector<R> c;
        c.reserve(p.coeffs().size());
        for (const R& x : p.coeffs()) c.emplace_back(x.num() / cont);
        return P(std::move(c));
    }

    static P clear_denominators(const P& p) {
        Poly<F> l{F(1)};
        for (const R& c : p.coeffs()) {
            Poly<F> g = Poly<F>::gcd(l, c.den());
            l = (l / g) * c.den();
        }
        if (l.is_one()) return p;
        R scale{l};
        std::vector<R> c;
        c.reserve(p.coeffs().size());
        for (const R& x : p.coeffs()) c.push_back(x * scale);
        return P(std::move(c));
    }

    // pseudo-remainder: multiply by lead(b) before each elimination so the
    // sequence stays denominator-free
    static P prem(P a, const P& b) {
        R lb = b.leading();
        while (!a.is_zero() && a.degree() >= b.degree()) {
            int d = a.degree() - b.degree();
            R la = a.leading();
            a = a.scaled(lb) - b * P::monomial(d, la);
        }
        return a;
    }

    static Poly<R> run(const P& pa, const P& pb) {
        if (pa.is_zero()) return pb.monic();
        if (pb.is_zero()) return pa.monic();
        P a = primitive(clear_denominators(pa));
        P b = primitive(clear_denominators(pb));
        if (a.degree() < b.degree()) std::swap(a, b);
        while (!b.is_zero()) {
            P r = primitive(prem(a, b));
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }
};

/// Exact rational functions of the symbol z.
using RatFuncZ = RatFunc<Rat>;
/// Polynomials and rational functions of t whose coefficients live in Q(z).
using PolyT = Poly<RatFuncZ>;
using RatFuncT = RatFunc<RatFuncZ>;

inline RatFuncZ rf_from_rat(const Rat& r) { return RatFuncZ(r); }

/// The unique reduced, monic-denominator representative of num/den.
inline RatFuncZ rf_normalize(const PolyZ& num, const PolyZ& den) {
    return RatFuncZ(num, den);
}

/// Exact evaluation at a rational point (throws PoleAtPoint on poles).
inline Rat rf_eval(const RatFuncZ& f, const Rat& x) { return f.eval(x); }

/// Double-precision complex evaluation.
inline std::complex<double> rf_eval(const RatFuncZ& f, std::complex<double> x) {
    return f.eval_with<std::complex<double>>(
        x, [](const Rat& r) { return std::complex<double>(r.to_double(), 0.0); });
}

}  // namespace hypergm
