#pragma once

#include <array>
#include <map>

#include "hypergm/fuchsian.hpp"

namespace hypergm {

/// Element of the Weyl algebra in z and D = d/dz, normal-ordered so every z
/// power sits left of every D power; the rewrite rule is D z = z D + 1.
class WeylElement {
  public:
    WeylElement() = default;
    explicit WeylElement(const Rat& c) { add(0, 0, c); }

    static WeylElement z_pow(int n) { WeylElement w; w.add(n, 0, Rat(1)); return w; }
    static WeylElement d_pow(int m) { WeylElement w; w.add(0, m, Rat(1)); return w; }

    void add(int zp, int dp, const Rat& c);
    const std::map<std::pair<int, int>, Rat>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int order() const;  // highest D power

    WeylElement operator-() const;
    friend WeylElement operator+(const WeylElement& a, const WeylElement& b);
    friend WeylElement operator-(const WeylElement& a, const WeylElement& b);
    friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.t_ == b.t_;
    }

    /// Coefficient polynomial of D^m.
    PolyZ coefficient_of_d(int m) const;

  private:
    std::map<std::pair<int, int>, Rat> t_;
};

struct GaussParams {
    Rat a, b, c;
};

/// Expands -D(alpha_1 + alpha_2 + 1 + zD) - (alpha_1 + 1 + zD)(alpha_3 - zD)
/// in the normal-ordered Weyl algebra and normalizes to f'' + p f' + q f = 0,
/// together with the parameter map a = alpha_1 + 1, b = -alpha_3,
/// c = alpha_1 + alpha_2 + 2.  Requires sum alpha_j = -2.
std::pair<ScalarODE2, GaussParams> weyl_reduce(const std::array<Rat, 4>& alphas);

}  // namespace hypergm
