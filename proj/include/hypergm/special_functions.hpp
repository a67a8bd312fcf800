#pragma once

#include <complex>

namespace hypergm {

using Cplx = std::complex<double>;

/// Rising factorial (a)_n with (a)_0 = 1.
Cplx pochhammer(Cplx a, int n);

/// Principal log-Gamma via the Lanczos approximation (g = 7, 9 coefficients),
/// reflected for Re < 1/2.  Imaginary part may differ from the continuous
/// log-Gamma by multiples of 2 pi i, which cancels once exponentiated.
Cplx gamma_ln(Cplx a);
Cplx gamma_fn(Cplx a);

/// B(a, b) = exp(lnG(a) + lnG(b) - lnG(a+b)).
Cplx beta_fn(Cplx a, Cplx b);

struct SeriesResult {
    Cplx value;
    double err_estimate = 0.0;
    int terms = 0;
};

struct SeriesSpec {
    double rel_tol = 1e-15;
    double margin = 0.05;   // require |z| < 1 - margin
    int max_terms = 100000;
};

/// Partial sums of the defining series; stops after three consecutive terms
/// below rel_tol * |sum|.
SeriesResult hyp2f1_series(Cplx a, Cplx b, Cplx c, Cplx z,
                           const SeriesSpec& spec = {});

enum class CutSide { Above, Below };  // x + i0 or x - i0

/// 2F1 on the cut: F(a, b, c; x +/- i0) for real x > 1, through the exact
/// inversion formula in 1/x (requires a - b not an integer).
Cplx hyp2f1_cut(Cplx a, Cplx b, Cplx c, double x, CutSide side,
                const SeriesSpec& spec = {});

enum class F4Variant { Printed, Corrected };

struct KummerOptions {
    F4Variant f4 = F4Variant::Corrected;
    CutSide cut = CutSide::Above;  // side for the 1/z argument of f5/f6
    SeriesSpec series;
};

/// The six local solutions around z = 0, 1, infinity for real z in (0,1).
/// f5/f6 take their 1/z series argument on the side given by `cut`.
Cplx kummer_local(int index, Cplx a, Cplx b, Cplx c, double z,
                  const KummerOptions& opt = {});

}  // namespace hypergm
