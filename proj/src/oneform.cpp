#include "hypergm/oneform.hpp"

#include <sstream>

namespace hypergm {

void OneForm::add_term(int j, int k, const RatFuncZ& c) {
    if (c.is_zero()) return;
    RatFuncZ& slot = poles[j][k];
    slot += c;
    if (slot.is_zero()) {
        poles[j].erase(k);
        if (poles[j].empty()) poles.erase(j);
    }
}

void OneForm::prune() {
    for (auto it = poles.begin(); it != poles.end();) {
        for (auto it2 = it->second.begin(); it2 != it->second.end();)
            it2 = it2->second.is_zero() ? it->second.erase(it2) : std::next(it2);
        it = it->second.empty() ? poles.erase(it) : std::next(it);
    }
}

OneForm OneForm::operator-() const {
    OneForm r = *this;
    for (auto& [j, orders] : r.poles)
        for (auto& [k, c] : orders) c = -c;
    r.tail = -r.tail;
    return r;
}

OneForm operator+(const OneForm& a, const OneForm& b) {
    OneForm r = a;
    for (const auto& [j, orders] : b.poles)
        for (const auto& [k, c] : orders) r.add_term(j, k, c);
    r.tail += b.tail;
    return r;
}

OneForm operator-(const OneForm& a, const OneForm& b) { return a + (-b); }

OneForm OneForm::scaled(const RatFuncZ& s) const {
    OneForm r;
    if (s.is_zero()) return r;
    for (const auto& [j, orders] : poles)
        for (const auto& [k, c] : orders) r.add_term(j, k, c * s);
    r.tail = tail.scaled(s);
    return r;
}

bool operator==(const OneForm& a, const OneForm& b) {
    return a.poles == b.poles && a.tail == b.tail;
}

std::string OneForm::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [j, orders] : poles)
        for (const auto& [k, c] : orders) {
            if (!first) os << " + ";
            os << "(" << c.str() << ")/l" << j;
            if (k > 1) os << "^" << k;
            first = false;
        }
    if (!tail.is_zero()) {
        if (!first) os << " + ";
        os << tail.str("t");
    }
    return os.str();
}

RatFuncT to_rational(const OneForm& w, const MasterFunction& m) {
    RatFuncT acc{w.tail};
    for (const auto& [j, orders] : w.poles) {
        RatFuncT lj = m.lforms[j].as_poly_t();
        for (const auto& [k, c] : orders)
            acc += RatFuncT(PolyT(c)) / lj.pow(k);
    }
    return acc;
}

OneForm from_rational(const RatFuncT& f, const MasterFunction& m) {
    OneForm out;
    if (f.is_zero()) return out;

    // factor the denominator as prod l_j^{m_j}
    PolyT den = f.den();
    std::map<int, int> mult;
    for (std::size_t j = 1; j < m.lforms.size(); ++j) {
        if (m.lforms[j].is_constant()) continue;
        PolyT lj(std::vector<RatFuncZ>{m.lforms[j].constant, m.lforms[j].slope});
        lj = lj.monic();
        while (den.degree() >= 1 && lj.divides(den)) {
            den = den / lj;
            ++mult[static_cast<int>(j)];
        }
    }
    if (den.degree() >= 1)
        throw ForeignPole("pole outside the arrangement: denominator factor " +
                          den.str("t"));

    // deflate pole by pole; coefficients are stored against l_j^k itself
    PolyT rden(RatFuncZ(Rat(1)));
    std::vector<PolyT> ljpoly(m.lforms.size());
    for (const auto& [j, k] : mult) {
        ljpoly[j] = PolyT(std::vector<RatFuncZ>{m.lforms[j].constant, m.lforms[j].slope});
        rden *= ljpoly[j].pow(k);
    }
    // f.den() is the monic image of rden, so absorb the leading coefficient
    PolyT num = f.num().scaled(rden.leading());
    // invariant: current fraction = num / rden
    std::map<int, int> left = mult;
    bool progress = true;
    while (progress) {
        progress = false;
        for (auto& [j, k] : left) {
            if (k == 0) continue;
            RatFuncZ tau = m.lforms[j].root();
            PolyT u = rden;
            for (int i = 0; i < k; ++i) u = u / ljpoly[j];
            RatFuncZ unum = u.eval(tau);
            RatFuncZ c = num.eval(tau) / unum;
            out.add_term(j, k, c);
            // (num - c*u) is divisible by l_j
            PolyT rest = num - u.scaled(c);
            if (rest.is_zero()) {
                num = PolyT();
                rden = PolyT(RatFuncZ(Rat(1)));
                for (auto& [jj, kk] : left) kk = 0;
                break;
            }
            num = rest / ljpoly[j];
            rden = rden / ljpoly[j];
            --k;
            progress = true;
        }
    }
    // remaining polynomial tail
    if (!num.is_zero()) {
        if (rden.degree() >= 1)
            throw ForeignPole("internal: residual denominator " + rden.str("t"));
        out.tail = num.scaled(rden.coeff(0).inv());
    }
    out.prune();
    return out;
}

OneForm mul_simple_pole(const OneForm& w, int i, const RatFuncZ& s,
                        const MasterFunction& m) {
    OneForm out;
    if (s.is_zero()) return out;
    const LinearForm& li = m.lforms[i];

    // polynomial tail: divide by l_i
    if (!w.tail.is_zero()) {
        PolyT lp(std::vector<RatFuncZ>{li.constant, li.slope});
        auto [q, r] = PolyT::divmod(w.tail.scaled(s), lp);
        out.tail += q;
        if (!r.is_zero()) out.add_term(i, 1, r.coeff(0));
    }

    for (const auto& [j, orders] : w.poles) {
        if (j == i) {
            for (const auto& [k, c] : orders) out.add_term(i, k + 1, c * s);
            continue;
        }
        const LinearForm& lj = m.lforms[j];
        // dtilde = q_j p_i - q_i p_j is t-free and nonzero for distinct roots
        RatFuncZ dt = lj.slope * li.constant - li.slope * lj.constant;
        RatFuncZ ratio = -li.slope / dt;
        for (const auto& [k, c] : orders) {
            // 1/(l_i l_j^k) = sum_s (q_j/dt) ratio^{k-s} / l_j^s + ratio^k / l_i
            RatFuncZ acc = c * s;
            RatFuncZ lead = lj.slope / dt;
            RatFuncZ pw(Rat(1));
            for (int step = k; step >= 1; --step) {
                out.add_term(j, step, acc * lead * pw);
                pw *= ratio;
            }
            out.add_term(i, 1, acc * pw);
        }
    }
    return out;
}

OneForm dlog_phi(const MasterFunction& m) {
    OneForm out;
    for (std::size_t j = 1; j < m.lforms.size(); ++j) {
        const LinearForm& l = m.lforms[j];
        if (l.is_constant()) continue;
        out.add_term(static_cast<int>(j), 1, m.exponents[j] * l.slope);
    }
    return out;
}

RatFuncT dlog_phi_z(const MasterFunction& m, int wrt) {
    if (wrt < 0 || wrt >= static_cast<int>(m.lforms.size()))
        throw InvalidArgument("bad form index for the z-derivative");
    const LinearForm& l = m.lforms[wrt];
    // d/dz l = p'(z) + q'(z) t
    PolyT dl(std::vector<RatFuncZ>{l.constant.derivative(), l.slope.derivative()});
    if (dl.is_zero()) return RatFuncT();
    RatFuncT ratio = RatFuncT(dl) / l.as_poly_t();
    return ratio * RatFuncT(PolyT(RatFuncZ(m.exponents[wrt])));
}

}  // namespace hypergm
