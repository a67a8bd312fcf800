#include "hypergm/arrangement.hpp"

#include <set>

namespace hypergm {

ConfigZ ConfigZ::gauss() {
    ConfigZ c;
    c.n = 3;
    c.params = {RatFuncZ::var()};
    return c;
}

ConfigZ ConfigZ::canonical(int n, int symbolic_index, const std::vector<Rat>& fixed) {
    if (n < 3) throw InvalidArgument("need n >= 3");
    if (symbolic_index < 3 || symbolic_index > n)
        throw InvalidArgument("symbolic slot must be one of z_3..z_n");
    if (static_cast<int>(fixed.size()) != n - 3)
        throw InvalidArgument("expected n-3 fixed parameters");
    ConfigZ c;
    c.n = n;
    std::size_t take = 0;
    for (int j = 3; j <= n; ++j) {
        if (j == symbolic_index)
            c.params.push_back(RatFuncZ::var());
        else
            c.params.push_back(RatFuncZ(fixed[take++]));
    }
    return c;
}

ConfigZ ConfigZ::numeric(const std::vector<Rat>& zs) {
    ConfigZ c;
    c.n = static_cast<int>(zs.size()) + 2;
    for (const Rat& z : zs) c.params.push_back(RatFuncZ(z));
    return c;
}

std::vector<LinearForm> ConfigZ::forms() const {
    std::vector<LinearForm> out;
    out.push_back({RatFuncZ(Rat(1)), RatFuncZ()});            // l_0 = 1
    out.push_back({RatFuncZ(), RatFuncZ(Rat(1))});            // l_1 = t
    out.push_back({RatFuncZ(Rat(1)), RatFuncZ(Rat(-1))});     // l_2 = 1 - t
    for (const RatFuncZ& zj : params)
        out.push_back({RatFuncZ(Rat(1)), -zj});               // l_j = 1 - z_j t
    return out;
}

Rat column_cross_ratio(const Matrix<Rat>& raw, int j) {
    auto minor = [&](int p, int q) {
        return raw(0, p) * raw(1, q) - raw(0, q) * raw(1, p);
    };
    Rat den = minor(0, 2) * minor(1, j);
    if (den.is_zero()) throw DegenerateConfiguration("vanishing minor in cross-ratio");
    return minor(0, j) * minor(1, 2) / den;
}

ConfigZ normalize_z_matrix(const Matrix<Rat>& raw) {
    if (raw.rows() != 2 || raw.cols() < 4)
        throw InvalidArgument("expected a 2 x (n+1) matrix with n >= 3");
    int ncols = raw.cols();
    for (int i = 0; i < ncols; ++i)
        for (int j = i + 1; j < ncols; ++j) {
            Rat d = raw(0, i) * raw(1, j) - raw(0, j) * raw(1, i);
            if (d.is_zero())
                throw DegenerateConfiguration("vanishing 2x2 minor (columns " +
                                              std::to_string(i) + "," + std::to_string(j) + ")");
        }

    // g = [col0 col1]^{-1} sends col0 -> (1,0), col1 -> (0,1)
    Matrix<Rat> m0(2, 2);
    m0(0, 0) = raw(0, 0); m0(0, 1) = raw(0, 1);
    m0(1, 0) = raw(1, 0); m0(1, 1) = raw(1, 1);
    auto inv = m0.inverse();
    if (!inv) throw DegenerateConfiguration("first two columns are dependent");
    Matrix<Rat> w = *inv * raw;

    // row scaling turns col2 into (1, -1)
    Rat u = w(0, 2), v = w(1, 2);
    for (int j = 0; j < ncols; ++j) {
        w(0, j) /= u;
        w(1, j) /= -v;
    }

    ConfigZ cfg;
    cfg.n = ncols - 1;
    for (int j = 3; j < ncols; ++j) {
        // column scaling to (1, -z_j)
        Rat zj = -(w(1, j) / w(0, j));
        if (zj.is_zero() || zj == Rat(1))
            throw DegenerateConfiguration("normalized z_j hit 0 or 1");
        cfg.params.push_back(RatFuncZ(zj));
    }
    for (std::size_t i = 0; i < cfg.params.size(); ++i)
        for (std::size_t j = i + 1; j < cfg.params.size(); ++j)
            if (cfg.params[i] == cfg.params[j])
                throw DegenerateConfiguration("coincident z parameters");
    return cfg;
}

Rat MasterFunction::exponent_sum_finite() const {
    Rat s(0);
    for (std::size_t j = 0; j < lforms.size(); ++j)
        if (!lforms[j].is_constant()) s += exponents[j];
    return s;
}

MasterFunction MasterFunction::unchecked(std::vector<LinearForm> forms,
                                         std::vector<Rat> exps, MasterMode mode) {
    MasterFunction m;
    m.lforms = std::move(forms);
    m.exponents = std::move(exps);
    m.mode = mode;
    return m;
}

MasterFunction MasterFunction::gauss(const Rat& a, const Rat& b, const Rat& c) {
    return build_master(ConfigZ::gauss(), {a, c - a, -b}, MasterMode::NonProjected);
}

MasterFunction build_master(const ConfigZ& config, const std::vector<Rat>& exps,
                            MasterMode mode) {
    int n = config.n;
    MasterFunction m;
    m.lforms = config.forms();
    m.mode = mode;
    if (mode == MasterMode::Projective) {
        if (static_cast<int>(exps.size()) != n + 1)
            throw InvalidArgument("projective mode expects n+1 exponents");
        Rat sum(0);
        for (const Rat& e : exps) {
            if (e.is_integer())
                throw ResonantExponent("integer exponent " + e.str());
            sum += e;
        }
        if (sum != Rat(-2))
            throw ExponentSumViolation("projective exponent sum is " + sum.str() +
                                       ", expected -2");
        m.exponents = exps;
    } else {
        if (static_cast<int>(exps.size()) != n)
            throw InvalidArgument("non-projected mode expects n exponents");
        Rat sum(0);
        for (const Rat& e : exps) {
            if (e.is_integer())
                throw ResonantExponent("integer exponent " + e.str());
            sum += e;
        }
        if (sum.is_integer())
            throw ResonantExponent("integer exponent sum " + sum.str());
        m.exponents.clear();
        m.exponents.push_back(Rat(-2) - sum);  // alpha_0, inert
        for (const Rat& e : exps) m.exponents.push_back(e);
    }
    branch_points(m);  // validates distinctness
    return m;
}

std::vector<BranchPoint> branch_points(const MasterFunction& m) {
    std::vector<BranchPoint> out;
    std::vector<RatFuncZ> locs;
    for (std::size_t j = 1; j < m.lforms.size(); ++j) {
        const LinearForm& l = m.lforms[j];
        if (l.is_constant())
            throw DegenerateConfiguration("degenerate linear form l_" + std::to_string(j));
        BranchPoint bp;
        bp.location = l.root();
        if (j == 1) bp.tag = "0";
        else if (j == 2) bp.tag = "1";
        else bp.tag = "1/z" + std::to_string(j);
        out.push_back(bp);
        locs.push_back(bp.location);
    }
    out.push_back({"inf", true, RatFuncZ()});
    for (std::size_t i = 0; i < locs.size(); ++i)
        for (std::size_t j = i + 1; j < locs.size(); ++j)
            if (locs[i] == locs[j])
                throw DegenerateConfiguration("coincident branch points");
    return out;
}

}  // namespace hypergm
