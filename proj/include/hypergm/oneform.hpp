#pragma once

#include <map>

#include "hypergm/arrangement.hpp"

namespace hypergm {

/// Rational one-form eta(t) dt with poles confined to the arrangement,
/// stored pole-wise:  eta = sum_j sum_k coeff(j,k) / l_j^k  +  tail(t).
/// Keys are form indices (j >= 1); maximal-order coefficients are nonzero.
struct OneForm {
    std::map<int, std::map<int, RatFuncZ>> poles;  // j -> order -> coeff
    PolyT tail;

    bool is_zero() const { return poles.empty() && tail.is_zero(); }
    int max_order_at(int j) const {
        auto it = poles.find(j);
        return it == poles.end() ? 0 : it->second.rbegin()->first;
    }
    RatFuncZ coeff(int j, int k) const {
        auto it = poles.find(j);
        if (it == poles.end()) return RatFuncZ();
        auto it2 = it->second.find(k);
        return it2 == it->second.end() ? RatFuncZ() : it2->second;
    }
    void add_term(int j, int k, const RatFuncZ& c);
    void prune();

    OneForm operator-() const;
    friend OneForm operator+(const OneForm& a, const OneForm& b);
    friend OneForm operator-(const OneForm& a, const OneForm& b);
    OneForm scaled(const RatFuncZ& s) const;
    friend bool operator==(const OneForm& a, const OneForm& b);

    std::string str() const;
};

/// eta as a rational function of t over Q(z).
RatFuncT to_rational(const OneForm& w, const MasterFunction& m);

/// Exact partial fractions of f dt with respect to the arrangement;
/// poles outside the l_j zero set raise ForeignPole.
OneForm from_rational(const RatFuncT& f, const MasterFunction& m);

/// (s / l_i) * w, expanded back into partial fractions termwise via
/// 1/(l_i l_j) = (q_j/l_j - q_i/l_i) / (q_j p_i - q_i p_j).
OneForm mul_simple_pole(const OneForm& w, int i, const RatFuncZ& s,
                        const MasterFunction& m);

/// d log Phi = sum_j alpha_j dl_j / l_j as a one-form with simple poles.
OneForm dlog_phi(const MasterFunction& m);

/// d/dz log Phi with respect to the parameter of form `wrt` (a rational
/// function of t, returned as numerator data via one-form conversion).
RatFuncT dlog_phi_z(const MasterFunction& m, int wrt);

}  // namespace hypergm
