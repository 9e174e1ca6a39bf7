#pragma once

#include <functional>
#include <utility>

#include "gdno/errors.hpp"
#include "gdno/field.hpp"

namespace gdno::spectral {

// ---------------------------------------------------------------------------
// Smooth compactly supported profile: even, identically 1 on [-r1,r1] and
// identically 0 outside (-r2,r2), C^infinity in between.
// ---------------------------------------------------------------------------
class BumpProfile {
  public:
    BumpProfile(double r1 = 0.5, double r2 = 1.0);
    double operator()(double t) const;
    double derivative(double t) const;
    double r1() const { return r1_; }
    double r2() const { return r2_; }
    // sup |chi'| over the real line (cached numeric maximization)
    double deriv_sup() const { return deriv_sup_; }

  private:
    double r1_, r2_, deriv_sup_;
};

// ---------------------------------------------------------------------------
// Fourier multipliers and first-order calculus
// ---------------------------------------------------------------------------
using Multiplier = std::function<cplx(double xi_x, double xi_y)>;

ScalarField2 apply_multiplier(const ScalarField2& u, const Multiplier& m);
ScalarField3 apply_multiplier(const ScalarField3& u, const Multiplier& m);

ScalarField2 dx(const ScalarField2& u);
ScalarField2 dy(const ScalarField2& u);
VectorField2 grad(const ScalarField2& u);
VectorField2 grad_perp(const ScalarField2& u);  // (d_y, -d_x)
ScalarField2 laplacian(const ScalarField2& u);
ScalarField2 div2(const VectorField2& F);       // d_x F1 + d_y F2
ScalarField2 div_perp(const VectorField2& F);   // d_y F1 - d_x F2

// unique mean-zero v with Lap v = u; throws NonZeroMean if |mean| exceeds
// tol_mean relative to the coefficient l2 norm
ScalarField2 inv_laplacian(const ScalarField2& u, double tol_mean = 1e-10);

// grad o inv_laplacian and grad_perp o inv_laplacian as single multipliers
// (vanish on the zero mode; no mean check needed)
VectorField2 grad_inv_lap(const ScalarField2& u);
VectorField2 grad_perp_inv_lap(const ScalarField2& u);

// F = grad Phi + grad_perp Psi + mean, with Phi, Psi mean-zero
struct HodgeParts {
    ScalarField2 phi, psi;
    std::array<double, 2> mean;
};
HodgeParts hodge_decompose(const VectorField2& F);

// chi(delta * w * |xi|) eta, mode-wise
ScalarField2 smoothing_op(const ScalarField2& eta, double delta, double w,
                          const BumpProfile& profile);

// ---------------------------------------------------------------------------
// Norms
// ---------------------------------------------------------------------------
double sobolev_norm(const ScalarField2& u, double s);
double sobolev_norm(const ScalarField3& u, double s);
double l2_norm(const ScalarField2& u);
double l2_norm(const VectorField2& u);
double l2_norm(const ScalarField3& u);
double l2_norm(const VectorField3& u);
double linf_phys(const ScalarField2& u);
// mean over grid points of |u|^2 (matches sobolev_norm(u,0)^2 by Parseval)
double quadrature_sq(const ScalarField2& u);

// ---------------------------------------------------------------------------
// Pointwise products with 2/3-rule dealiasing
// ---------------------------------------------------------------------------
void dealias(ScalarField2& u);
void dealias(ScalarField3& u);
ScalarField2 product(const ScalarField2& a, const ScalarField2& b);
ScalarField3 product(const ScalarField2& a, const ScalarField3& b);  // broadcast in w
ScalarField3 product(const ScalarField3& a, const ScalarField3& b);
VectorField3 product(const ScalarField2& a, const VectorField3& b);
VectorField3 product(const ScalarField3& a, const VectorField3& b);

// ---------------------------------------------------------------------------
// Vertical (Chebyshev) calculus on strip fields
// ---------------------------------------------------------------------------
ScalarField3 dw(const ScalarField3& u);
VectorField3 dw(const VectorField3& u);
ScalarField3 dx(const ScalarField3& u);
ScalarField3 dy(const ScalarField3& u);
ScalarField3 laplacian_h(const ScalarField3& u);
ScalarField2 integrate_w(const ScalarField3& u);  // int_{-h}^0 u dw per mode

// values of int_{-h}^w f at the Chebyshev nodes (per horizontal mode)
ScalarField3 antiderivative_w(const ScalarField3& u);

// ---------------------------------------------------------------------------
// Small builders used across tests and experiments
// ---------------------------------------------------------------------------
ScalarField2 zero_field(const HGridPtr& g);
// amp * cos(kx x + ky y) / amp * sin(kx x + ky y)
ScalarField2 field_cos(const HGridPtr& g, int kx, int ky, double amp = 1.0);
ScalarField2 field_sin(const HGridPtr& g, int kx, int ky, double amp = 1.0);
// amp * exp(i(kx x + ky y)) single mode (complex field)
ScalarField2 field_mode(const HGridPtr& g, int kx, int ky, cplx amp = 1.0);

double rel_diff(const ScalarField2& a, const ScalarField2& b);
double rel_diff(const ScalarField3& a, const ScalarField3& b);

}  // namespace gdno::spectral
