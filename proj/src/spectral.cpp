#include "gdno/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace gdno::spectral {

// ---------------------------------------------------------------------------
// BumpProfile
// ---------------------------------------------------------------------------
namespace {

double psi(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }
double psi_d(double t) { return t > 0.0 ? std::exp(-1.0 / t) / (t * t) : 0.0; }

// smoothstep: 0 at s<=0, 1 at s>=1
double smoothstep(double s) {
    double a = psi(s), b = psi(1.0 - s);
    return a / (a + b);
}
double smoothstep_d(double s) {
    if (s <= 0.0 || s >= 1.0) return 0.0;
    double a = psi(s), b = psi(1.0 - s);
    double ad = psi_d(s), bd = -psi_d(1.0 - s);
    double den = a + b;
    return (ad * den - a * (ad + bd)) / (den * den);
}

}  // namespace

BumpProfile::BumpProfile(double r1, double r2) : r1_(r1), r2_(r2) {
    if (!(0.0 < r1 && r1 < r2)) throw Error("BumpProfile: need 0 < r1 < r2");
    deriv_sup_ = 0.0;
    const int n = 20000;
    for (int i = 0; i <= n; ++i) {
        double t = r1_ + (r2_ - r1_) * i / n;
        deriv_sup_ = std::max(deriv_sup_, std::abs(derivative(t)));
    }
}

double BumpProfile::operator()(double t) const {
    double a = std::abs(t);
    if (a <= r1_) return 1.0;
    if (a >= r2_) return 0.0;
    return 1.0 - smoothstep((a - r1_) / (r2_ - r1_));
}

double BumpProfile::derivative(double t) const {
    double a = std::abs(t);
    if (a <= r1_ || a >= r2_) return 0.0;
    double d = -smoothstep_d((a - r1_) / (r2_ - r1_)) / (r2_ - r1_);
    return t < 0 ? -d : d;
}

// ---------------------------------------------------------------------------
// multipliers
// ---------------------------------------------------------------------------
namespace {

std::vector<cplx> multiplier_table(const HGrid& g, const Multiplier& m) {
    std::vector<cplx> t(g.modes());
    for (int iy = 0; iy < g.Ny(); ++iy)
        for (int ix = 0; ix < g.Nx(); ++ix) {
            cplx v = m(g.xi_x(ix), g.xi_y(iy));
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw InvalidMultiplier("multiplier not finite at a grid mode");
            t[g.index(ix, iy)] = v;
        }
    return t;
}

}  // namespace

ScalarField2 apply_multiplier(const ScalarField2& u, const Multiplier& m) {
    auto t = multiplier_table(u.grid(), m);
    ScalarField2 out = u;
    for (int i = 0; i < u.grid().modes(); ++i) out.coeffs()[i] *= t[i];
    return out;
}

ScalarField3 apply_multiplier(const ScalarField3& u, const Multiplier& m) {
    auto t = multiplier_table(u.hgrid(), m);
    ScalarField3 out = u;
    for (int j = 0; j < u.Nw(); ++j) {
        cplx* p = out.node(j);
        for (int i = 0; i < u.modes(); ++i) p[i] *= t[i];
    }
    return out;
}

ScalarField2 dx(const ScalarField2& u) {
    return apply_multiplier(u, [](double x, double) { return cplx(0, x); });
}
ScalarField2 dy(const ScalarField2& u) {
    return apply_multiplier(u, [](double, double y) { return cplx(0, y); });
}
VectorField2 grad(const ScalarField2& u) { return VectorField2(dx(u), dy(u)); }
VectorField2 grad_perp(const ScalarField2& u) { return VectorField2(dy(u), -dx(u)); }
ScalarField2 laplacian(const ScalarField2& u) {
    return apply_multiplier(u, [](double x, double y) { return cplx(-(x * x + y * y), 0); });
}
ScalarField2 div2(const VectorField2& F) { return dx(F.x) + dy(F.y); }
ScalarField2 div_perp(const VectorField2& F) { return dy(F.x) - dx(F.y); }

ScalarField2 inv_laplacian(const ScalarField2& u, double tol_mean) {
    double scale = l2_norm(u);
    if (std::abs(u.mean()) > tol_mean * std::max(scale, 1e-300))
        throw NonZeroMean("inv_laplacian: zero-mode coefficient is not zero");
    ScalarField2 out = u;
    const HGrid& g = u.grid();
    for (int iy = 0; iy < g.Ny(); ++iy)
        for (int ix = 0; ix < g.Nx(); ++ix) {
            double k2 = g.xi_abs2(ix, iy);
            out.coeffs()[g.index(ix, iy)] = k2 == 0.0 ? cplx(0) : u.coeffs()[g.index(ix, iy)] / (-k2);
        }
    return out;
}

VectorField2 grad_inv_lap(const ScalarField2& u) {
    const HGrid& g = u.grid();
    VectorField2 out(u.grid_ptr());
    for (int iy = 0; iy < g.Ny(); ++iy)
        for (int ix = 0; ix < g.Nx(); ++ix) {
            double k2 = g.xi_abs2(ix, iy);
            int i = g.index(ix, iy);
            if (k2 == 0.0) continue;
            cplx v = u.coeffs()[i] / (-k2);
            out.x.coeffs()[i] = cplx(0, g.xi_x(ix)) * v;
            out.y.coeffs()[i] = cplx(0, g.xi_y(iy)) * v;
        }
    return out;
}

VectorField2 grad_perp_inv_lap(const ScalarField2& u) {
    VectorField2 gil = grad_inv_lap(u);
    return VectorField2(gil.y, -gil.x);
}

HodgeParts hodge_decompose(const VectorField2& F) {
    // Phi = InvLap(div F), Psi = InvLap(div_perp F); both mean-zero by
    // construction of the inverse Laplacian on the torus.
    HodgeParts parts;
    ScalarField2 d = div2(F);
    ScalarField2 dp = div_perp(F);
    const HGrid& g = F.x.grid();
    ScalarField2 phi(F.x.grid_ptr()), psi(F.x.grid_ptr());
    for (int iy = 0; iy < g.Ny(); ++iy)
        for (int ix = 0; ix < g.Nx(); ++ix) {
            int i = g.index(ix, iy);
            double k2 = g.xi_abs2(ix, iy);
            if (k2 == 0.0) continue;
            phi.coeffs()[i] = d.coeffs()[i] / (-k2);
            psi.coeffs()[i] = dp.coeffs()[i] / (-k2);
        }
    parts.phi = std::move(phi);
    parts.psi = std::move(psi);
    parts.mean = {F.x.mean().real(), F.y.mean().real()};
    return parts;
}

ScalarField2 smoothing_op(const ScalarField2& eta, double delta, double w,
                          const BumpProfile& profile) {
    return apply_multiplier(eta, [&](double x, double y) {
        return cplx(profile(delta * w * std::sqrt(x * x + y * y)), 0.0);
    });
}

// ---------------------------------------------------------------------------
// norms
// ---------------------------------------------------------------------------
double sobolev_norm(const ScalarField2& u, double s) {
    const HGrid& g = u.grid();
    double acc = 0.0;
    for (int iy = 0; iy < g.Ny(); ++iy)
        for (int ix = 0; ix < g.Nx(); ++ix) {
            double k2 = g.xi_abs2(ix, iy);
            acc += std::pow(1.0 + k2, s) * std::norm(u.coeffs()[g.index(ix, iy)]);
        }
    return std::sqrt(acc);
}

double sobolev_norm(const ScalarField3& u, double s) {
    const HGrid& g = u.hgrid();
    const auto& wts = u.vgrid().weights();
    double acc = 0.0;
    for (int j = 0; j < u.Nw(); ++j) {
        const cplx* p = u.node(j);
        double nodal = 0.0;
        for (int iy = 0; iy < g.Ny(); ++iy)
            for (int ix = 0; ix < g.Nx(); ++ix)
                nodal += std::pow(1.0 + g.xi_abs2(ix, iy), s) * std::norm(p[g.index(ix, iy)]);
        acc += wts[j] * nodal;
    }
    return std::sqrt(std::max(acc, 0.0));
}

double l2_norm(const ScalarField2& u) {
    double acc = 0.0;
    for (const auto& v : u.coeffs()) acc += std::norm(v);
    return std::sqrt(acc);
}

double l2_norm(const VectorField2& u) {
    return std::sqrt(l2_norm(u.x) * l2_norm(u.x) + l2_norm(u.y) * l2_norm(u.y));
}

double l2_norm(const ScalarField3& u) { return sobolev_norm(u, 0.0); }

double l2_norm(const VectorField3& u) {
    double a = l2_norm(u.c1), b = l2_norm(u.c2), c = l2_norm(u.c3);
    return std::sqrt(a * a + b * b + c * c);
}

double linf_phys(const ScalarField2& u) {
    auto phys = u.physical();
    double m = 0.0;
    for (const auto& v : phys) m = std::max(m, std::abs(v));
    return m;
}

double quadrature_sq(const ScalarField2& u) {
    auto phys = u.physical();
    double acc = 0.0;
    for (const auto& v : phys) acc += std::norm(v);
    return acc / phys.size();
}

// ---------------------------------------------------------------------------
// products
// ---------------------------------------------------------------------------
void dealias(ScalarField2& u) {
    const HGrid& g = u.grid();
    int cx = g.Nx() / 3, cy = g.Ny() / 3;
    for (int iy = 0; iy < g.Ny(); ++iy)
        for (int ix = 0; ix < g.Nx(); ++ix)
            if (std::abs(g.kx(ix)) > cx || std::abs(g.ky(iy)) > cy)
                u.coeffs()[g.index(ix, iy)] = 0.0;
}

void dealias(ScalarField3& u) {
    const HGrid& g = u.hgrid();
    int cx = g.Nx() / 3, cy = g.Ny() / 3;
    for (int j = 0; j < u.Nw(); ++j) {
        cplx* p = u.node(j);
        for (int iy = 0; iy < g.Ny(); ++iy)
            for (int ix = 0; ix < g.Nx(); ++ix)
                if (std::abs(g.kx(ix)) > cx || std::abs(g.ky(iy)) > cy) p[g.index(ix, iy)] = 0.0;
    }
}

ScalarField2 product(const ScalarField2& a, const ScalarField2& b) {
    auto pa = a.physical();
    auto pb = b.physical();
    for (size_t i = 0; i < pa.size(); ++i) pa[i] *= pb[i];
    ScalarField2 out = ScalarField2::from_physical(a.grid_ptr(), pa);
    dealias(out);
    out.symmetrize();
    return out;
}

ScalarField3 product(const ScalarField2& a, const ScalarField3& b) {
    auto pa = a.physical();
    ScalarField3 out(b.hgrid_ptr(), b.vgrid_ptr());
    for (int j = 0; j < b.Nw(); ++j) {
        auto pb = fft::to_physical(b.hgrid(), std::vector<cplx>(b.node(j), b.node(j) + b.modes()));
        for (size_t i = 0; i < pb.size(); ++i) pb[i] *= pa[i];
        auto c = fft::to_coefficients(b.hgrid(), pb);
        std::copy(c.begin(), c.end(), out.node(j));
    }
    dealias(out);
    out.symmetrize();
    return out;
}

ScalarField3 product(const ScalarField3& a, const ScalarField3& b) {
    ScalarField3 out(a.hgrid_ptr(), a.vgrid_ptr());
    for (int j = 0; j < a.Nw(); ++j) {
        auto pa = fft::to_physical(a.hgrid(), std::vector<cplx>(a.node(j), a.node(j) + a.modes()));
        auto pb = fft::to_physical(b.hgrid(), std::vector<cplx>(b.node(j), b.node(j) + b.modes()));
        for (size_t i = 0; i < pa.size(); ++i) pa[i] *= pb[i];
        auto c = fft::to_coefficients(a.hgrid(), pa);
        std::copy(c.begin(), c.end(), out.node(j));
    }
    dealias(out);
    out.symmetrize();
    return out;
}

VectorField3 product(const ScalarField2& a, const VectorField3& b) {
    return VectorField3(product(a, b.c1), product(a, b.c2), product(a, b.c3));
}

VectorField3 product(const ScalarField3& a, const VectorField3& b) {
    return VectorField3(product(a, b.c1), product(a, b.c2), product(a, b.c3));
}

// ---------------------------------------------------------------------------
// vertical calculus
// ---------------------------------------------------------------------------
ScalarField3 dw(const ScalarField3& u) {
    const auto& D = u.vgrid().diff_matrix();
    int Nw = u.Nw(), M = u.modes();
    ScalarField3 out(u.hgrid_ptr(), u.vgrid_ptr());
    for (int i = 0; i < Nw; ++i) {
        cplx* oi = out.node(i);
        for (int j = 0; j < Nw; ++j) {
            double d = D[i * Nw + j];
            if (d == 0.0) continue;
            const cplx* uj = u.node(j);
            for (int m = 0; m < M; ++m) oi[m] += d * uj[m];
        }
    }
    return out;
}

VectorField3 dw(const VectorField3& u) { return VectorField3(dw(u.c1), dw(u.c2), dw(u.c3)); }

ScalarField3 dx(const ScalarField3& u) {
    return apply_multiplier(u, [](double x, double) { return cplx(0, x); });
}
ScalarField3 dy(const ScalarField3& u) {
    return apply_multiplier(u, [](double, double y) { return cplx(0, y); });
}
ScalarField3 laplacian_h(const ScalarField3& u) {
    return apply_multiplier(u, [](double x, double y) { return cplx(-(x * x + y * y), 0); });
}

ScalarField2 integrate_w(const ScalarField3& u) {
    const auto& wts = u.vgrid().weights();
    ScalarField2 out(u.hgrid_ptr());
    for (int j = 0; j < u.Nw(); ++j) {
        const cplx* p = u.node(j);
        for (int m = 0; m < u.modes(); ++m) out.coeffs()[m] += wts[j] * p[m];
    }
    return out;
}

namespace {

// Chebyshev coefficients of nodal values on standard descending points
// t_j = cos(pi j / n); direct O(n^2) cosine sums (desk scale).
void cheb_coeffs(const std::vector<double>& fvals, std::vector<double>& a) {
    int n = static_cast<int>(fvals.size()) - 1;
    a.assign(n + 1, 0.0);
    for (int k = 0; k <= n; ++k) {
        double s = 0.0;
        for (int j = 0; j <= n; ++j) {
            double term = fvals[j] * std::cos(M_PI * j * k / n);
            if (j == 0 || j == n) term *= 0.5;
            s += term;
        }
        a[k] = 2.0 * s / n;
        if (k == 0 || k == n) a[k] *= 0.5;
    }
}

}  // namespace

ScalarField3 antiderivative_w(const ScalarField3& u) {
    int Nw = u.Nw(), n = Nw - 1, M = u.modes();
    ScalarField3 out(u.hgrid_ptr(), u.vgrid_ptr());
    std::vector<double> fr(Nw), fi(Nw), ar, ai, br(Nw + 1), bi(Nw + 1);
    for (int m = 0; m < M; ++m) {
        // standard descending index: node j ascending <-> standard n-j
        for (int j = 0; j < Nw; ++j) {
            cplx v = u.node(n - j)[m];
            fr[j] = v.real();
            fi[j] = v.imag();
        }
        cheb_coeffs(fr, ar);
        cheb_coeffs(fi, ai);
        // antiderivative coefficients: int T0 = T1, int T1 = T2/4,
        // int Tk = T_{k+1}/(2(k+1)) - T_{k-1}/(2(k-1)) for k >= 2
        auto integrate = [&](const std::vector<double>& a, std::vector<double>& b) {
            std::fill(b.begin(), b.end(), 0.0);
            b[1] = a[0] - (n >= 2 ? 0.5 * a[2] : 0.0);
            for (int k = 2; k <= n + 1; ++k) {
                double am1 = a[k - 1];
                double ap1 = (k + 1 <= n) ? a[k + 1] : 0.0;
                b[k] = (am1 - ap1) / (2.0 * k);
            }
        };
        // G(t) with G' = f on [-1,1]
        integrate(ar, br);
        integrate(ai, bi);
        auto eval = [&](const std::vector<double>& b, double t) {
            // Clenshaw
            double b1 = 0.0, b2 = 0.0;
            for (int k = n + 1; k >= 1; --k) {
                double tmp = 2.0 * t * b1 - b2 + b[k];
                b2 = b1;
                b1 = tmp;
            }
            return t * b1 - b2 + b[0];
        };
        // int_{-h}^w f dw' = (h/2) (G(1) - G(t(w))), t(w) = -2w/h - 1
        double h = u.vgrid().h();
        double Gr1 = eval(br, 1.0), Gi1 = eval(bi, 1.0);
        for (int j = 0; j < Nw; ++j) {
            double t = -2.0 * u.vgrid().w(j) / h - 1.0;
            out.node(j)[m] = cplx((h / 2.0) * (Gr1 - eval(br, t)), (h / 2.0) * (Gi1 - eval(bi, t)));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// builders
// ---------------------------------------------------------------------------
ScalarField2 zero_field(const HGridPtr& g) { return ScalarField2(g); }

ScalarField2 field_cos(const HGridPtr& g, int kx, int ky, double amp) {
    ScalarField2 u(g);
    int ix = (kx % g->Nx() + g->Nx()) % g->Nx();
    int iy = (ky % g->Ny() + g->Ny()) % g->Ny();
    u.coeffs()[g->index(ix, iy)] += 0.5 * amp;
    u.coeffs()[g->conj_index(ix, iy)] += 0.5 * amp;
    return u;
}

ScalarField2 field_sin(const HGridPtr& g, int kx, int ky, double amp) {
    ScalarField2 u(g);
    int ix = (kx % g->Nx() + g->Nx()) % g->Nx();
    int iy = (ky % g->Ny() + g->Ny()) % g->Ny();
    u.coeffs()[g->index(ix, iy)] += cplx(0, -0.5 * amp);
    u.coeffs()[g->conj_index(ix, iy)] += cplx(0, 0.5 * amp);
    return u;
}

ScalarField2 field_mode(const HGridPtr& g, int kx, int ky, cplx amp) {
    ScalarField2 u(g);
    int ix = (kx % g->Nx() + g->Nx()) % g->Nx();
    int iy = (ky % g->Ny() + g->Ny()) % g->Ny();
    u.coeffs()[g->index(ix, iy)] = amp;
    return u;
}

double rel_diff(const ScalarField2& a, const ScalarField2& b) {
    double den = std::max(l2_norm(b), 1e-300);
    return l2_norm(a - b) / den;
}

double rel_diff(const ScalarField3& a, const ScalarField3& b) {
    double den = std::max(l2_norm(b), 1e-300);
    return l2_norm(a - b) / den;
}

}  // namespace gdno::spectral
