#include "hypergm/cohomology.hpp"

#include <algorithm>

#include "hypergm/exactalg.hpp"

namespace hypergm {

namespace {

RatFuncT lj_power(const MasterFunction& m, int j, int e) {
    return m.lforms[j].as_poly_t().pow(e);
}

// nabla(l_j^{-k}) as a one-form; its leading coefficient at l_j^{-(k+1)} is
// (alpha_j - k) q_j, whose vanishing is the resonance obstruction.
OneForm nabla_lj_negpow(const MasterFunction& m, int j, int k) {
    return nabla0(lj_power(m, j, -k), m);
}

}  // namespace

OneForm nabla0(const RatFuncT& g, const MasterFunction& m) {
    OneForm gd = from_rational(g, m);  // partial fractions of the 0-form

    // dg/dt, termwise: d(c / l_j^k) = -k q_j c / l_j^{k+1}
    OneForm out;
    out.tail = gd.tail.derivative();
    for (const auto& [j, orders] : gd.poles)
        for (const auto& [k, c] : orders)
            out.add_term(j, k + 1, c * RatFuncZ(Rat(-k)) * m.lforms[j].slope);

    // (d log Phi) g = sum_j alpha_j q_j / l_j * g
    for (std::size_t j = 1; j < m.lforms.size(); ++j) {
        const LinearForm& l = m.lforms[j];
        if (l.is_constant()) continue;
        out = out + mul_simple_pole(gd, static_cast<int>(j),
                                    RatFuncZ(m.exponents[j]) * l.slope, m);
    }
    return out;
}

OneForm nabla_z(const OneForm& phi, const MasterFunction& m, int wrt) {
    if (wrt < 1 || wrt >= static_cast<int>(m.lforms.size()))
        throw InvalidArgument("bad form index for the z-derivative");
    const LinearForm& lw = m.lforms[wrt];
    RatFuncZ dp = lw.constant.derivative();
    RatFuncZ dq = lw.slope.derivative();

    // d/dz phi, termwise; the z-dependence sits in the coefficients and in
    // the pole of form `wrt`:  d(c / l_w^k) = c' / l_w^k - k c (dl_w/dz) / l_w^{k+1}
    // with dl_w/dz = dp + dq t rewritten through t = (l_w - p_w)/q_w.
    OneForm out;
    {
        std::vector<RatFuncZ> c;
        for (const RatFuncZ& x : phi.tail.coeffs()) c.push_back(x.derivative());
        out.tail = PolyT(std::move(c));
    }
    // a polynomial tail in t does not depend on z except through coefficients
    for (const auto& [j, orders] : phi.poles)
        for (const auto& [k, c] : orders) {
            out.add_term(j, k, c.derivative());
            if (j != wrt) continue;
            // dl_w/dz = (dq/q_w) l_w + (dp - dq p_w / q_w)
            RatFuncZ lin = dq / lw.slope;
            RatFuncZ cst = dp - dq * lw.constant / lw.slope;
            RatFuncZ mk(Rat(-k));
            out.add_term(wrt, k, c * mk * lin);
            out.add_term(wrt, k + 1, c * mk * cst);
        }

    // (d/dz log Phi) phi = alpha_w (dl_w/dz) / l_w * phi
    RatFuncZ aw(m.exponents[wrt]);
    OneForm scaled = phi.scaled(aw * dq / lw.slope);
    out = out + scaled;
    out = out + mul_simple_pole(phi, wrt,
                                aw * (dp - dq * lw.constant / lw.slope), m);
    return out;
}

CohomClass reduce(const OneForm& eta, const std::vector<BasisForm>& basis,
                  const MasterFunction& m) {
    const int n = m.n();
    if (static_cast<int>(basis.size()) != n - 1)
        throw InvalidArgument("basis must have n-1 = " + std::to_string(n - 1) +
                              " elements");

    // stages (i) + (ii): returns the simple-pole residue vector and the
    // accumulated witness
    auto lower = [&](OneForm w, RatFuncT& witness) {
        // pole orders
        bool progress = true;
        while (progress) {
            progress = false;
            int j = -1, k = 0;
            for (const auto& [jj, orders] : w.poles)
                if (orders.rbegin()->first >= 2 && orders.rbegin()->first > k) {
                    j = jj;
                    k = orders.rbegin()->first;
                }
            if (j < 0) break;
            const Rat aj = m.exponents[j];
            const Rat div = aj - Rat(k - 1);
            if (div.is_zero())
                throw ResonantExponent("pole-order reduction at l_" + std::to_string(j) +
                                       " divides by alpha_" + std::to_string(j) + " - " +
                                       std::to_string(k - 1) + " = 0");
            RatFuncZ lam = w.coeff(j, k) / (RatFuncZ(div) * m.lforms[j].slope);
            witness += lj_power(m, j, -(k - 1)) * RatFuncT(PolyT(lam));
            w = w - nabla_lj_negpow(m, j, k - 1).scaled(lam);
            progress = true;
        }
        // polynomial tail (degree reduction at infinity, constants included)
        const Rat S = m.exponent_sum_finite();
        while (!w.tail.is_zero()) {
            int d = w.tail.degree();
            Rat div = Rat(d + 1) + S;
            if (div.is_zero())
                throw ResonantExponent("degree reduction divides by " +
                                       std::to_string(d + 1) + " + sum(alpha) = 0");
            RatFuncZ lam = w.tail.coeff(d) / RatFuncZ(div);
            RatFuncT tk{PolyT::monomial(d + 1, RatFuncZ(Rat(1)))};
            witness += tk * RatFuncT(PolyT(lam));
            w = w - nabla0(tk, m).scaled(lam);
        }
        // collect residue vector (coefficient of 1/l_j, j = 1..n)
        std::vector<RatFuncZ> v(n, RatFuncZ());
        for (const auto& [j, orders] : w.poles)
            for (const auto& [k, c] : orders) {
                if (k != 1)
                    throw SingularBasis("internal: unreduced pole order");
                v[j - 1] = c;
            }
        return v;
    };

    RatFuncT wit_eta;
    std::vector<RatFuncZ> v = lower(eta, wit_eta);

    std::vector<std::vector<RatFuncZ>> B;
    std::vector<RatFuncT> wit_b;
    for (const BasisForm& b : basis) {
        RatFuncT wb;
        B.push_back(lower(b.form, wb));
        wit_b.push_back(wb);
    }

    // relation vector: d log Phi = nabla(1) has residues alpha_j q_j
    std::vector<RatFuncZ> r(n, RatFuncZ());
    for (std::size_t j = 1; j < m.lforms.size(); ++j)
        if (!m.lforms[j].is_constant())
            r[j - 1] = RatFuncZ(m.exponents[j]) * m.lforms[j].slope;

    // solve v = sum_i x_i B_i + mu r
    Matrix<RatFuncZ> M(n, n);
    for (int col = 0; col < n - 1; ++col)
        for (int row = 0; row < n; ++row) M(row, col) = B[col][row];
    for (int row = 0; row < n; ++row) M(row, n - 1) = r[row];
    auto sol = M.solve(v);
    if (!sol)
        throw SingularBasis("basis forms are dependent modulo exact forms");

    CohomClass out;
    out.basis = basis;
    out.coords.assign(sol->begin(), sol->end() - 1);
    RatFuncZ mu = sol->back();
    out.witness = wit_eta + RatFuncT(PolyT(mu));
    for (int i = 0; i < n - 1; ++i)
        out.witness -= wit_b[i] * RatFuncT(PolyT(out.coords[i]));
    return out;
}

ConnectionMatrix gauss_manin(const std::vector<BasisForm>& basis,
                             const MasterFunction& m, int wrt) {
    const int k = static_cast<int>(basis.size());
    ConnectionMatrix out;
    out.entries = Matrix<RatFuncZ>(k, k);
    for (int i = 0; i < k; ++i) {
        CohomClass c = reduce(nabla_z(basis[i].form, m, wrt), basis, m);
        for (int j = 0; j < k; ++j) out.entries(i, j) = c.coords[j];
    }

    // attempt the residue form A(z) = sum A_s/(z-s)
    std::vector<Rat> hints{Rat(0), Rat(1)};
    for (const LinearForm& l : m.lforms)
        if (!l.is_constant() && l.slope.is_constant() && !l.slope.num().is_zero())
            hints.push_back(-l.slope.num().coeff(0));
    std::vector<Rat> poles;
    bool simple = true;
    std::vector<ResidueDecomposition> decs(k * k);
    for (int i = 0; i < k * k && simple; ++i) {
        const RatFuncZ& e = out.entries(i / k, i % k);
        try {
            decs[i] = residue_decompose(e, hints);
        } catch (const NonlinearDenominator&) {
            simple = false;
            break;
        }
        if (!decs[i].poly_part.is_zero()) simple = false;
        for (const ResidueTerm& t : decs[i].terms) {
            if (t.order != 1) { simple = false; break; }
            if (std::find(poles.begin(), poles.end(), t.pole) == poles.end())
                poles.push_back(t.pole);
        }
    }
    if (simple) {
        std::sort(poles.begin(), poles.end());
        std::vector<std::pair<Rat, Matrix<Rat>>> res;
        for (const Rat& s : poles) res.push_back({s, Matrix<Rat>(k, k)});
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                for (const ResidueTerm& t : decs[i * k + j].terms)
                    for (auto& [s, mat] : res)
                        if (s == t.pole) mat(i, j) = t.coeff;
        out.residues = std::move(res);
    }
    return out;
}

ShiftRecord shift_exponents(const MasterFunction& m,
                            const std::vector<BasisForm>& basis) {
    ShiftRecord rec;
    rec.master = m;
    rec.basis = basis;
    if (basis.empty()) return rec;

    // common poles of all basis forms
    std::vector<int> common;
    for (const auto& [j, orders] : basis.front().form.poles) {
        bool everywhere = true;
        for (const BasisForm& b : basis)
            if (b.form.max_order_at(j) < 1) { everywhere = false; break; }
        if (everywhere) common.push_back(j);
    }
    if (common.empty()) return rec;  // identity shift

    int j = -1;
    for (int cand : common)
        if (cand != 1) { j = cand; break; }
    if (j < 0)
        throw UnabsorbableFactor(
            "the shared factor 1/t cannot be absorbed: dt is not a valid basis element");

    rec.applied = true;
    rec.form_index = j;
    rec.master.exponents[j] -= Rat(1);
    RatFuncT lj = m.lforms[j].as_poly_t();
    for (BasisForm& b : rec.basis)
        b.form = from_rational(to_rational(b.form, m) * lj, rec.master);
    return rec;
}

namespace {

BasisForm make_gauss_form(const std::string& p, const std::string& q,
                          std::initializer_list<std::pair<int, RatFuncZ>> simple) {
    BasisForm b;
    b.p = p;
    b.q = q;
    for (const auto& [j, c] : simple) b.form.add_term(j, 1, c);
    return b;
}

}  // namespace

// Partial-fraction data of the catalog forms, e.g.
// dt/(t(1-t)) = dt/t + dt/(1-t).
BasisForm gauss_form_inf0() {
    return make_gauss_form("inf", "0", {{1, RatFuncZ(Rat(1))}});
}
BasisForm gauss_form_01() {
    return make_gauss_form("0", "1", {{1, RatFuncZ(Rat(1))}, {2, RatFuncZ(Rat(1))}});
}
BasisForm gauss_form_1_1z() {
    return make_gauss_form("1", "1/z",
                           {{2, RatFuncZ(Rat(-1))}, {3, RatFuncZ::var()}});
}
BasisForm gauss_form_1_1z_tilde() {
    RatFuncZ z = RatFuncZ::var();
    RatFuncZ zm1 = z - RatFuncZ(Rat(1));
    return make_gauss_form("1", "1/z~", {{2, -z / zm1}, {3, z * z / zm1}});
}
BasisForm gauss_form_1inf() {
    return make_gauss_form("1", "inf", {{2, RatFuncZ(Rat(1))}});
}
BasisForm gauss_form_1z_inf() {
    return make_gauss_form("1/z", "inf", {{3, RatFuncZ::var()}});
}
BasisForm gauss_form_0_1z() {
    return make_gauss_form("0", "1/z", {{1, RatFuncZ(Rat(1))}, {3, RatFuncZ::var()}});
}

std::vector<BasisForm> default_basis(const MasterFunction& m) {
    // d log(l_{j+1}/l_j) = l_{j+1}'/l_{j+1} - l_j'/l_j, j = 0..n-2
    std::vector<BasisForm> out;
    for (int j = 0; j <= m.n() - 2; ++j) {
        BasisForm b;
        b.p = "l" + std::to_string(j);
        b.q = "l" + std::to_string(j + 1);
        if (!m.lforms[j].is_constant())
            b.form.add_term(j, 1, -m.lforms[j].slope);
        if (!m.lforms[j + 1].is_constant())
            b.form.add_term(j + 1, 1, m.lforms[j + 1].slope);
        out.push_back(b);
    }
    return out;
}

}  // namespace hypergm
