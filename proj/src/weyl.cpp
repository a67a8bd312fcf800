#include "hypergm/weyl.hpp"

namespace hypergm {

void WeylElement::add(int zp, int dp, const Rat& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(zp, dp);
    Rat& slot = t_[key];
    slot += c;
    if (slot.is_zero()) t_.erase(key);
}

int WeylElement::order() const {
    int m = 0;
    for (const auto& [k, c] : t_) m = std::max(m, k.second);
    return m;
}

WeylElement WeylElement::operator-() const {
    WeylElement r;
    for (const auto& [k, c] : t_) r.t_[k] = -c;
    return r;
}

WeylElement operator+(const WeylElement& a, const WeylElement& b) {
    WeylElement r = a;
    for (const auto& [k, c] : b.t_) r.add(k.first, k.second, c);
    return r;
}

WeylElement operator-(const WeylElement& a, const WeylElement& b) { return a + (-b); }

namespace {

// binomials and falling factorials stay tiny here
long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long falling(int n, int k) {
    long r = 1;
    for (int i = 0; i < k; ++i) r *= (n - i);
    return r;
}

}  // namespace

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    // z^{p} D^{m} * z^{q} D^{r}: commute D^m past z^q with
    // D^m z^q = sum_k C(m,k) q!/(q-k)! z^{q-k} D^{m-k}
    WeylElement out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            int p = ka.first, m = ka.second;
            int q = kb.first, r = kb.second;
            for (int k = 0; k <= std::min(m, q); ++k) {
                Rat f(binom(m, k) * falling(q, k));
                out.add(p + q - k, m - k + r, ca * cb * f);
            }
        }
    return out;
}

PolyZ WeylElement::coefficient_of_d(int m) const {
    std::vector<Rat> c;
    for (const auto& [k, v] : t_) {
        if (k.second != m) continue;
        if (static_cast<int>(c.size()) <= k.first) c.resize(k.first + 1, Rat(0));
        c[k.first] = v;
    }
    return PolyZ(std::move(c));
}

std::pair<ScalarODE2, GaussParams> weyl_reduce(const std::array<Rat, 4>& alphas) {
    Rat sum(0);
    for (const Rat& a : alphas) sum += a;
    if (sum != Rat(-2))
        throw ExponentSumViolation("exponent sum is " + sum.str() + ", expected -2");

    const Rat& a1 = alphas[1];
    const Rat& a2 = alphas[2];
    const Rat& a3 = alphas[3];
    WeylElement D = WeylElement::d_pow(1);
    WeylElement zD = WeylElement::z_pow(1) * D;

    // -D (a1 + a2 + 1 + zD) - (a1 + 1 + zD)(a3 - zD)
    WeylElement op = -(D * (WeylElement(a1 + a2 + Rat(1)) + zD)) -
                     (WeylElement(a1 + Rat(1)) + zD) * (WeylElement(a3) - zD);
    if (op.order() != 2)
        throw InvalidArgument("expected a second order operator");

    PolyZ p2 = op.coefficient_of_d(2);
    PolyZ p1 = op.coefficient_of_d(1);
    PolyZ p0 = op.coefficient_of_d(0);
    ScalarODE2 ode{RatFuncZ(p1, p2), RatFuncZ(p0, p2)};

    GaussParams gp{a1 + Rat(1), -a3, a1 + a2 + Rat(2)};
    return {ode, gp};
}

}  // namespace hypergm
