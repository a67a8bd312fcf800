#include "hypergm/exactalg.hpp"

#include <algorithm>

namespace hypergm {

namespace {

// Divisors of |n| from trial division.  Factors above the cap are kept as a
// single candidate, which covers every input this engine actually produces.
std::vector<mpz_class> divisors(mpz_class n) {
    if (n < 0) n = -n;
    std::vector<std::pair<mpz_class, int>> factors;
    mpz_class p = 2;
    const long cap = 1000000;
    while (p <= cap && p * p <= n) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            factors.push_back({p, e});
        }
        p += (p == 2) ? 1 : 2;
    }
    if (n > 1) factors.push_back({n, 1});
    std::vector<mpz_class> divs{1};
    for (const auto& [q, e] : factors) {
        std::size_t base = divs.size();
        mpz_class pw = 1;
        for (int k = 1; k <= e; ++k) {
            pw *= q;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
        }
    }
    return divs;
}

// Content-free integer image of a rational polynomial.
std::vector<mpz_class> integerize(const PolyZ& p) {
    mpz_class l = 1;
    for (const Rat& c : p.coeffs()) {
        mpz_class d = c.denominator();
        l = l / gcd(l, d) * d;
    }
    std::vector<mpz_class> out;
    out.reserve(p.coeffs().size());
    for (const Rat& c : p.coeffs())
        out.push_back(c.numerator() * (l / c.denominator()));
    mpz_class g = 0;
    for (const auto& a : out) g = gcd(g, a);
    if (g > 1)
        for (auto& a : out) a /= g;
    return out;
}

PolyZ linear_factor(const Rat& root) {
    return PolyZ(std::vector<Rat>{-root, Rat(1)});
}

}  // namespace

RootSplit rational_roots(const PolyZ& p) {
    RootSplit out;
    PolyZ f = p.monic();
    while (f.degree() >= 1 && f.coeff(0).is_zero()) {
        out.roots.push_back(Rat(0));
        f = f / PolyZ::var();
    }
    while (f.degree() >= 1) {
        if (f.degree() == 1) {
            out.roots.push_back(-f.coeff(0) / f.coeff(1));
            f = PolyZ(Rat(1));
            break;
        }
        auto ic = integerize(f);
        bool found = false;
        for (const auto& pn : divisors(ic.front())) {
            for (const auto& qd : divisors(ic.back())) {
                for (int s = 0; s < 2 && !found; ++s) {
                    Rat cand(mpq_class(s ? mpz_class(-pn) : pn, qd));
                    if (f.eval(cand).is_zero()) {
                        out.roots.push_back(cand);
                        f = f / linear_factor(cand);
                        found = true;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
    }
    out.remainder = f.is_zero() ? f : f.monic();
    return out;
}

RatFuncZ ResidueDecomposition::recombine() const {
    RatFuncZ acc{poly_part};
    for (const ResidueTerm& t : terms)
        acc += RatFuncZ(PolyZ(t.coeff), linear_factor(t.pole).pow(t.order));
    return acc;
}

ResidueDecomposition residue_decompose(const RatFuncZ& f,
                                       const std::vector<Rat>& pole_hints) {
    ResidueDecomposition out;
    auto [q, r] = PolyZ::divmod(f.num(), f.den());
    out.poly_part = q;
    if (r.is_zero()) return out;

    // distinct pole locations: hints first, search for the rest
    std::vector<Rat> poles;
    PolyZ den = f.den();
    for (const Rat& h : pole_hints) {
        bool took = false;
        while (den.degree() >= 1 && linear_factor(h).divides(den)) {
            den = den / linear_factor(h);
            took = true;
        }
        if (took) poles.push_back(h);
    }
    if (den.degree() >= 1) {
        RootSplit rs = rational_roots(den);
        if (rs.remainder.degree() >= 1)
            throw NonlinearDenominator(
                "denominator does not factor into rational linear terms; remainder " +
                rs.remainder.str());
        for (const Rat& root : rs.roots)
            if (std::find(poles.begin(), poles.end(), root) == poles.end())
                poles.push_back(root);
    }

    // peel the deepest Laurent coefficient at one pole at a time; the
    // canonical (reduced) form guarantees each extracted coefficient is nonzero
    RatFuncZ work(r, f.den());
    while (!work.is_zero() && work.den().degree() >= 1) {
        const Rat* pole = nullptr;
        for (const Rat& p : poles)
            if (work.den().eval(p).is_zero()) { pole = &p; break; }
        if (!pole)
            throw NonlinearDenominator("unreachable pole in residue extraction");
        PolyZ lin = linear_factor(*pole);
        int k = 0;
        PolyZ u = work.den();
        while (lin.divides(u)) { u = u / lin; ++k; }
        Rat c = work.num().eval(*pole) / u.eval(*pole);
        out.terms.push_back({*pole, k, c});
        PolyZ new_num = work.num() - u.scaled(c);
        if (new_num.is_zero()) {
            work = RatFuncZ();
        } else {
            work = RatFuncZ(new_num / lin, u * lin.pow(k - 1));
        }
    }
    std::sort(out.terms.begin(), out.terms.end(), [](const auto& x, const auto& y) {
        if (x.pole != y.pole) return x.pole < y.pole;
        return x.order < y.order;
    });
    return out;
}

}  // namespace hypergm
