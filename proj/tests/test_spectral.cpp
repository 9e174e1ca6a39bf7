#include <cmath>
#include <random>

#include "doctest.h"
#include "gdno/spectral.hpp"

using namespace gdno;
using namespace gdno::spectral;

namespace {

HGridPtr grid32() { return std::make_shared<HGrid>(2 * M_PI, 2 * M_PI, 32, 32); }

ScalarField2 random_real_field(const HGridPtr& g, int kmax, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    ScalarField2 u(g);
    for (int kx = -kmax; kx <= kmax; ++kx)
        for (int ky = -kmax; ky <= kmax; ++ky) {
            if (kx == 0 && ky == 0) continue;
            u += field_cos(g, kx, ky, amp(rng));
            u += field_sin(g, kx, ky, amp(rng));
        }
    return u;
}

}  // namespace

TEST_CASE("vertical grid: nodes, weights, differentiation, antiderivative") {
    VGrid v(1.0, 16);
    CHECK(v.w(0) == doctest::Approx(-1.0));
    CHECK(v.w(v.Nw() - 1) == doctest::Approx(0.0));

    // CC weights integrate polynomials of degree <= Nw-1 exactly on [-h,0]
    for (int deg = 0; deg <= v.Nw() - 1; ++deg) {
        double quad = 0.0;
        for (int j = 0; j < v.Nw(); ++j) quad += v.weights()[j] * std::pow(v.w(j), deg);
        double exact = (std::pow(0.0, deg + 1) - std::pow(-1.0, deg + 1)) / (deg + 1);
        CHECK(quad == doctest::Approx(exact).epsilon(1e-12));
    }

    // differentiation matrix on cosh(w+1)
    auto hg = grid32();
    ScalarField3 f(hg, std::make_shared<VGrid>(1.0, 16));
    for (int j = 0; j < f.Nw(); ++j) f.node(j)[0] = std::cosh(f.vgrid().w(j) + 1.0);
    ScalarField3 fp = dw(f);
    for (int j = 0; j < f.Nw(); ++j)
        CHECK(fp.node(j)[0].real() == doctest::Approx(std::sinh(f.vgrid().w(j) + 1.0)).epsilon(1e-10));

    // antiderivative of w^3 from -h
    ScalarField3 g3(hg, std::make_shared<VGrid>(1.0, 16));
    for (int j = 0; j < g3.Nw(); ++j) g3.node(j)[0] = std::pow(g3.vgrid().w(j), 3);
    ScalarField3 G3 = antiderivative_w(g3);
    for (int j = 0; j < g3.Nw(); ++j) {
        double w = g3.vgrid().w(j);
        double exact = (std::pow(w, 4) - 1.0) / 4.0;
        CHECK(G3.node(j)[0].real() == doctest::Approx(exact).epsilon(1e-12));
    }

    // barycentric interpolation hits an analytic profile off the nodes
    std::vector<double> vals(16);
    for (int j = 0; j < 16; ++j) vals[j] = std::sin(2.0 * v.w(j));
    CHECK(v.interpolate(vals, -0.377) == doctest::Approx(std::sin(-0.754)).epsilon(1e-9));
}

TEST_CASE("apply_multiplier basics") {
    auto g = grid32();
    ScalarField2 u = field_mode(g, 1, 0);  // e^{ix}
    auto absm = [](double x, double y) { return cplx(std::sqrt(x * x + y * y), 0); };
    ScalarField2 r = apply_multiplier(u, absm);
    CHECK(std::abs(r.at(1, 0) - cplx(1.0)) < 1e-14);

    ScalarField2 one(g);
    one.coeffs()[0] = 1.0;
    double h = 1.0;
    ScalarField2 z = apply_multiplier(one, [h](double x, double y) {
        double k = std::sqrt(x * x + y * y);
        return cplx(k * std::tanh(h * k), 0);
    });
    CHECK(l2_norm(z) == doctest::Approx(0.0));

    ScalarField2 c2 = field_cos(g, 2, 0);
    ScalarField2 lap = apply_multiplier(c2, [](double x, double y) { return cplx(x * x + y * y, 0); });
    CHECK(rel_diff(lap, field_cos(g, 2, 0, 4.0)) < 1e-14);

    CHECK_THROWS_AS(apply_multiplier(u, [](double x, double) { return cplx(1.0 / x, 0); }),
                    InvalidMultiplier);
}

TEST_CASE("apply_multiplier is linear") {
    auto g = grid32();
    ScalarField2 u = random_real_field(g, 5, 1);
    ScalarField2 v = random_real_field(g, 5, 2);
    auto m = [](double x, double y) { return cplx(std::cos(x) + y * y, std::sin(y)); };
    ScalarField2 lhs = apply_multiplier(2.5 * u - 0.7 * v, m);
    ScalarField2 rhs = 2.5 * apply_multiplier(u, m) - 0.7 * apply_multiplier(v, m);
    CHECK(rel_diff(lhs, rhs) < 1e-13);
}

TEST_CASE("grad, grad_perp, inv_laplacian") {
    auto g = grid32();
    ScalarField2 s = field_sin(g, 1, 0);   // sin x
    ScalarField2 ms = -1.0 * s;            // -sin x
    CHECK(rel_diff(inv_laplacian(ms), s) < 1e-14);

    VectorField2 gp = grad_perp(field_sin(g, 0, 1));  // sin y -> (cos y, 0)
    CHECK(rel_diff(gp.x, field_cos(g, 0, 1)) < 1e-14);
    CHECK(l2_norm(gp.y) < 1e-14);

    ScalarField2 one(g);
    one.coeffs()[0] = 1.0;
    CHECK_THROWS_AS(inv_laplacian(one), NonZeroMean);

    // grad_perp(u) . grad(u) integrates to zero
    ScalarField2 u = random_real_field(g, 6, 3);
    VectorField2 gu = grad(u), pu = grad_perp(u);
    ScalarField2 dot = product(gu.x, pu.x) + product(gu.y, pu.y);
    CHECK(std::abs(dot.mean()) < 1e-13);

    // rotation identity: grad_perp u = R_{-90} grad u, R_{-90}(a,b) = (b,-a)
    CHECK(rel_diff(pu.x, gu.y) < 1e-14);
    CHECK(rel_diff(pu.y, -1.0 * gu.x) < 1e-14);
}

TEST_CASE("hodge decomposition round trip") {
    auto g = grid32();
    SUBCASE("pure gradient") {
        auto parts = hodge_decompose(grad(field_sin(g, 1, 0)));
        CHECK(rel_diff(parts.phi, field_sin(g, 1, 0)) < 1e-13);
        CHECK(l2_norm(parts.psi) < 1e-13);
        CHECK(parts.mean[0] == doctest::Approx(0.0));
    }
    SUBCASE("pure perp gradient") {
        auto parts = hodge_decompose(grad_perp(field_cos(g, 0, 1)));
        CHECK(l2_norm(parts.phi) < 1e-13);
        CHECK(rel_diff(parts.psi, field_cos(g, 0, 1)) < 1e-13);
    }
    SUBCASE("constant field") {
        VectorField2 F(g);
        F.x.coeffs()[0] = 1.0;
        auto parts = hodge_decompose(F);
        CHECK(l2_norm(parts.phi) < 1e-14);
        CHECK(l2_norm(parts.psi) < 1e-14);
        CHECK(parts.mean[0] == doctest::Approx(1.0));
        CHECK(parts.mean[1] == doctest::Approx(0.0));
    }
    SUBCASE("random field reconstructs") {
        VectorField2 F(random_real_field(g, 6, 10), random_real_field(g, 6, 11));
        F.x.coeffs()[0] = 0.3;
        F.y.coeffs()[0] = -0.2;
        auto parts = hodge_decompose(F);
        VectorField2 R = grad(parts.phi) + grad_perp(parts.psi);
        R.x.coeffs()[0] += parts.mean[0];
        R.y.coeffs()[0] += parts.mean[1];
        CHECK(l2_norm(R - F) / l2_norm(F) < 1e-12);
        CHECK(std::abs(parts.phi.mean()) < 1e-14);
        CHECK(std::abs(parts.psi.mean()) < 1e-14);
    }
}

TEST_CASE("smoothing operator") {
    auto g = grid32();
    BumpProfile chi;
    ScalarField2 eta = random_real_field(g, 6, 4);
    SUBCASE("identity at w = 0") {
        CHECK(rel_diff(smoothing_op(eta, 0.7, 0.0, chi), eta) < 1e-15);
    }
    SUBCASE("kills high mode beyond the support") {
        ScalarField2 hi = field_cos(g, 8, 0);
        // delta * |w| * |xi| = 2 * 1 * 8 = 16 >= r2
        ScalarField2 s = smoothing_op(hi, 2.0, -1.0, chi);
        CHECK(l2_norm(s) < 1e-15);
    }
    SUBCASE("evaluates the profile at delta*w*|xi|") {
        ScalarField2 m = field_mode(g, 1, 0);
        double c = chi(0.5);
        ScalarField2 s = smoothing_op(m, 1.0, -0.5, chi);
        CHECK(std::abs(s.at(1, 0) - cplx(c)) < 1e-15);
        CHECK(c > 0.0);
        CHECK(c < 1.0);
    }
}

TEST_CASE("sobolev norms and Parseval") {
    auto g = grid32();
    ScalarField2 e1 = field_mode(g, 1, 0);
    CHECK(sobolev_norm(e1, 0.0) == doctest::Approx(1.0));
    CHECK(sobolev_norm(e1, 1.0) == doctest::Approx(std::sqrt(2.0)));
    CHECK(sobolev_norm(ScalarField2(g), 2.0) == doctest::Approx(0.0));

    ScalarField2 u = random_real_field(g, 7, 5);
    CHECK(sobolev_norm(u, 0.0) * sobolev_norm(u, 0.0) ==
          doctest::Approx(quadrature_sq(u)).epsilon(1e-12));
}

TEST_CASE("products dealias and stay Hermitian") {
    auto g = grid32();
    ScalarField2 a = random_real_field(g, 10, 6);
    ScalarField2 b = random_real_field(g, 10, 7);
    ScalarField2 p = product(a, b);
    // Hermitian symmetry: physical samples are real
    auto phys = p.physical();
    double imax = 0;
    for (auto& v : phys) imax = std::max(imax, std::abs(v.imag()));
    CHECK(imax < 1e-12);
    // dealiased tail is empty
    const HGrid& gg = p.grid();
    for (int iy = 0; iy < gg.Ny(); ++iy)
        for (int ix = 0; ix < gg.Nx(); ++ix)
            if (std::abs(gg.kx(ix)) > gg.Nx() / 3 || std::abs(gg.ky(iy)) > gg.Ny() / 3)
                CHECK(std::abs(p.coeffs()[gg.index(ix, iy)]) == 0.0);
    // low-mode content matches the exact convolution on a single pair
    ScalarField2 c1 = field_cos(g, 1, 0), c2 = field_cos(g, 2, 0);
    ScalarField2 q = product(c1, c2);
    ScalarField2 expected = field_cos(g, 3, 0, 0.5) + field_cos(g, 1, 0, 0.5);
    CHECK(rel_diff(q, expected) < 1e-13);
}

TEST_CASE("bump profile properties") {
    BumpProfile f(0.2, 0.45);
    CHECK(f(0.1) == 1.0);
    CHECK(f(-0.15) == 1.0);
    CHECK(f(0.5) == 0.0);
    CHECK(f(0.3) > 0.0);
    CHECK(f(0.3) < 1.0);
    CHECK(f(0.3) == f(-0.3));
    CHECK(f.deriv_sup() > 0.0);
    // derivative consistent with finite differences in the transition band
    double t = 0.33, h = 1e-6;
    CHECK(f.derivative(t) == doctest::Approx((f(t + h) - f(t - h)) / (2 * h)).epsilon(1e-5));
}
