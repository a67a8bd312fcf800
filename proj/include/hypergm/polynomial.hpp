#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "hypergm/errors.hpp"
#include "hypergm/rational.hpp"

namespace hypergm {

/// Dense univariate polynomial over a field K, coefficients stored in
/// ascending degree.  The zero polynomial has an empty coefficient list.
template <typename K>
class Poly {
  public:
    Poly() = default;
    Poly(K c) {  // NOLINT: implicit by design
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    explicit Poly(std::vector<K> ascending) : c_(std::move(ascending)) { trim(); }

    static Poly var() { return Poly(std::vector<K>{K(0), K(1)}); }
    static Poly monomial(int deg, K coeff) {
        std::vector<K> c(deg + 1, K(0));
        c[deg] = std::move(coeff);
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // zero -> -1
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : K(0);
    }
    const K& leading() const { return c_.back(); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> c(a.c_.size() + b.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const K& s) const {
        if (s.is_zero()) return Poly();
        Poly r = *this;
        for (auto& x : r.c_) x = x * s;
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Euclidean division; the divisor must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
        Poly q, r = a;
        K lead_inv = b.leading().inv();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int d = r.degree() - b.degree();
            K f = r.leading() * lead_inv;
            q += Poly::monomial(d, f);
            r -= (b * Poly::monomial(d, f));
        }
        return {q, r};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    bool divides(const Poly& a) const { return (a % *this).is_zero(); }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(leading().inv());
    }

    /// Monic gcd.  Dispatches through PolyGcd so rational-function
    /// coefficient fields can swap in a content-stripped remainder sequence.
    static Poly gcd(const Poly& a, const Poly& b);

    /// Euclidean remainder sequence with monic normalization at each step.
    static Poly gcd_euclid(Poly a, Poly b) {
        a = a.monic();
        b = b.monic();
        while (!b.is_zero()) {
            Poly r = (a % b).monic();
            a = std::move(b);
            b = std::move(r);
        }
        return a;  // monic (or zero)
    }

    Poly pow(int e) const {
        Poly acc{K(1)};
        for (int i = 0; i < e; ++i) acc *= *this;
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * K(static_cast<long>(i));
        return Poly(std::move(d));
    }

    K eval(const K& x) const {
        K acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    template <typename C, typename Lift>
    C eval_with(const C& x, Lift lift) const {
        C acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + lift(*it);
        return acc;
    }

    std::string str(const std::string& var = "z") const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const K& a = c_[k];
            if (a.is_zero()) continue;
            std::string term = term_str(a, k, var);
            if (out.empty()) {
                out = term;
            } else if (!term.empty() && term[0] == '-') {
                out += " - " + term.substr(1);
            } else {
                out += " + " + term;
            }
        }
        return out;
    }

  private:
    static std::string term_str(const K& a, int k, const std::string& var) {
        std::string cs = coeff_str(a);
        if (k == 0) return cs;
        std::string body = (k == 1) ? var : var + "^" + std::to_string(k);
        if (cs == "1") return body;
        if (cs == "-1") return "-" + body;
        return cs + "*" + body;
    }
    static std::string coeff_str(const K& a) {
        if constexpr (std::is_same_v<K, Rat>) {
            return a.str();
        } else {
            std::string s = a.str();
            if (s.find_first_of("+-*/^ ") != std::string::npos && !(s.size() > 0 && s[0] == '-' && s.find_first_of("+-*/^ ", 1) == std::string::npos))
                return "(" + s + ")";
            return s;
        }
    }

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<K> c_;
};

template <typename K>
struct PolyGcd {
    static Poly<K> run(const Poly<K>& a, const Poly<K>& b) {
        return Poly<K>::gcd_euclid(a, b);
    }
};

/// Over Q: integerize and run the primitive pseudo-remainder sequence, with
/// the integer content stripped off each remainder (fast GMP integer gcds,
/// no rational blowup).
template <>
struct PolyGcd<Rat> {
    using Z = mpz_class;

    static std::vector<Z> integerize(const Poly<Rat>& p) {
        Z l = 1;
        for (const Rat& c : p.coeffs()) {
            Z d = c.denominator();
            l = l / gcd(l, d) * d;
        }
        std::vector<Z> out;
        out.reserve(p.coeffs().size());
        for (const Rat& c : p.coeffs()) out.push_back(c.numerator() * (l / c.denominator()));
        strip_content(out);
        return out;
    }

    static void strip_content(std::vector<Z>& v) {
        Z g = 0;
        for (const Z& x : v) {
            g = gcd(g, x);
            if (g == 1) return;
        }
        if (g > 1)
            for (Z& x : v) x /= g;
    }

    static void prem(std::vector<Z>& a, const std::vector<Z>& b) {
        const Z& lb = b.back();
        while (a.size() >= b.size()) {
            Z la = a.back();
            std::size_t off = a.size() - b.size();
            for (Z& x : a) x *= lb;
            for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= la * b[i];
            while (!a.empty() && a.back() == 0) a.pop_back();
            if (a.empty()) return;
        }
    }

    static Poly<Rat> run(const Poly<Rat>& pa, const Poly<Rat>& pb) {
        if (pa.is_zero()) return pb.monic();
        if (pb.is_zero()) return pa.monic();
        std::vector<Z> a = integerize(pa), b = integerize(pb);
        if (a.size() < b.size()) std::swap(a, b);
        while (!b.empty()) {
            prem(a, b);
            strip_content(a);
            std::swap(a, b);
        }
        std::vector<Rat> c;
        c.reserve(a.size());
        for (const Z& x : a) c.push_back(Rat(mpq_class(x)));
        return Poly<Rat>(std::move(c)).monic();
    }
};

template <typename K>
Poly<K> Poly<K>::gcd(const Poly& a, const Poly& b) {
    return PolyGcd<K>::run(a, b);
}

using PolyZ = Poly<Rat>;

}  // namespace hypergm
