#pragma once

#include <array>
#include <memory>
#include <vector>

#include "gdno/errors.hpp"

namespace gdno {

// Horizontal mode grid on the torus [0,Lx) x [0,Ly).  Wavenumbers follow the
// FFT layout kx in {0,1,...,Nx/2-1,-Nx/2,...,-1}, xi = 2*pi*k/L per axis.
class HGrid {
  public:
    HGrid(double Lx, double Ly, int Nx, int Ny);

    double Lx() const { return Lx_; }
    double Ly() const { return Ly_; }
    int Nx() const { return Nx_; }
    int Ny() const { return Ny_; }
    int modes() const { return Nx_ * Ny_; }

    // flat index = iy*Nx + ix
    int index(int ix, int iy) const { return iy * Nx_ + ix; }
    int kx(int ix) const { return ix < Nx_ / 2 ? ix : ix - Nx_; }
    int ky(int iy) const { return iy < Ny_ / 2 ? iy : iy - Ny_; }
    double xi_x(int ix) const { return two_pi_Lx_ * kx(ix); }
    double xi_y(int iy) const { return two_pi_Ly_ * ky(iy); }
    double xi_abs2(int ix, int iy) const {
        double a = xi_x(ix), b = xi_y(iy);
        return a * a + b * b;
    }

    // physical node coordinates
    double x(int ix) const { return Lx_ * ix / Nx_; }
    double y(int iy) const { return Ly_ * iy / Ny_; }

    // index of the mode -k (for Hermitian symmetry walks)
    int conj_index(int ix, int iy) const {
        int jx = ix == 0 ? 0 : Nx_ - ix;
        int jy = iy == 0 ? 0 : Ny_ - iy;
        return index(jx, jy);
    }

    bool operator==(const HGrid& o) const {
        return Lx_ == o.Lx_ && Ly_ == o.Ly_ && Nx_ == o.Nx_ && Ny_ == o.Ny_;
    }

  private:
    double Lx_, Ly_;
    int Nx_, Ny_;
    double two_pi_Lx_, two_pi_Ly_;
};

// Chebyshev-Lobatto nodes on [-h,0], ascending (w_0 = -h, w_{Nw-1} = 0), with
// Clenshaw-Curtis weights for the integral over [-h,0], the differentiation
// matrix, and barycentric interpolation.
class VGrid {
  public:
    VGrid(double h, int Nw);

    double h() const { return h_; }
    int Nw() const { return Nw_; }
    double w(int j) const { return nodes_[j]; }
    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }

    // dense differentiation matrix, row-major Nw x Nw
    const std::vector<double>& diff_matrix() const { return D_; }

    // barycentric interpolation weights on the nodes
    const std::vector<double>& bary_weights() const { return bary_; }

    // interpolate nodal values at target w (polynomial interpolant)
    template <typename T>
    T interpolate(const std::vector<T>& values, double wt) const {
        T num{};
        double den = 0.0;
        for (int j = 0; j < Nw_; ++j) {
            double d = wt - nodes_[j];
            if (d == 0.0) return values[j];
            double c = bary_[j] / d;
            num += values[j] * c;
            den += c;
        }
        return num * (1.0 / den);
    }

    bool operator==(const VGrid& o) const { return h_ == o.h_ && Nw_ == o.Nw_; }

  private:
    double h_;
    int Nw_;
    std::vector<double> nodes_, weights_, D_, bary_;
};

}  // namespace gdno
