#include "gdno/grids.hpp"

#include <cmath>

namespace gdno {

HGrid::HGrid(double Lx, double Ly, int Nx, int Ny) : Lx_(Lx), Ly_(Ly), Nx_(Nx), Ny_(Ny) {
    if (Lx <= 0 || Ly <= 0) throw Error("HGrid: periods must be positive");
    if (Nx < 4 || Ny < 4 || Nx % 2 != 0 || Ny % 2 != 0)
        throw Error("HGrid: mode counts must be even and >= 4");
    two_pi_Lx_ = 2.0 * M_PI / Lx;
    two_pi_Ly_ = 2.0 * M_PI / Ly;
}

namespace {

// Clenshaw-Curtis weights for nodes cos(pi*j/n), j=0..n, scaled to [-h,0].
std::vector<double> cc_weights(int n, double h) {
    std::vector<double> w(n + 1, 0.0);
    if (n == 0) {
        w[0] = h;
        return w;
    }
    for (int j = 0; j <= n; ++j) {
        double s = 1.0;
        for (int k = 1; k <= n / 2; ++k) {
            double b = (2 * k == n) ? 1.0 : 2.0;
            s -= b * std::cos(2.0 * k * M_PI * j / n) / (4.0 * k * k - 1.0);
        }
        double c = (j == 0 || j == n) ? 1.0 : 2.0;
        w[j] = c * s / n;
    }
    // weights above integrate over [-1,1]; map to length-h interval
    for (double& v : w) v *= h / 2.0;
    return w;
}

}  // namespace

VGrid::VGrid(double h, int Nw) : h_(h), Nw_(Nw) {
    if (h <= 0) throw Error("VGrid: depth must be positive");
    if (Nw < 4) throw Error("VGrid: need at least 4 vertical nodes");
    int n = Nw - 1;
    nodes_.resize(Nw);
    for (int j = 0; j < Nw; ++j)
        nodes_[j] = -(h / 2.0) * (1.0 + std::cos(M_PI * j / n));

    // Clenshaw-Curtis weights follow the standard descending order cos(pi*j/n);
    // our node j corresponds to standard index n-j, and the weights are
    // symmetric, so the order does not matter.
    weights_ = cc_weights(n, h);

    // Differentiation matrix on standard nodes t_j = cos(pi*j/n) (descending),
    // remapped to our ascending w ordering.  w = -(h/2)(1+t) so d/dw = -(2/h) d/dt.
    std::vector<double> t(Nw), c(Nw);
    for (int j = 0; j < Nw; ++j) {
        t[j] = std::cos(M_PI * j / n);
        c[j] = (j == 0 || j == n) ? 2.0 : 1.0;
    }
    std::vector<double> Dstd(Nw * Nw, 0.0);
    for (int i = 0; i < Nw; ++i) {
        double rowsum = 0.0;
        for (int j = 0; j < Nw; ++j) {
            if (i == j) continue;
            double sgn = ((i + j) % 2 == 0) ? 1.0 : -1.0;
            double v = (c[i] / c[j]) * sgn / (t[i] - t[j]);
            Dstd[i * Nw + j] = v;
            rowsum += v;
        }
        Dstd[i * Nw + i] = -rowsum;  // negative row-sum trick for the diagonal
    }
    D_.assign(Nw * Nw, 0.0);
    for (int i = 0; i < Nw; ++i)
        for (int j = 0; j < Nw; ++j)
            D_[i * Nw + j] = -(2.0 / h) * Dstd[(n - i) * Nw + (n - j)];

    // barycentric weights for Chebyshev-Lobatto points (ascending order keeps
    // the same pattern up to a global sign, which cancels)
    bary_.resize(Nw);
    for (int j = 0; j < Nw; ++j) {
        double b = (j == 0 || j == n) ? 0.5 : 1.0;
        bary_[j] = ((j % 2 == 0) ? 1.0 : -1.0) * b;
    }
}

}  // namespace gdno
