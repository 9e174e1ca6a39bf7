#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "gdno/fft.hpp"
#include "gdno/grids.hpp"

namespace gdno {

using HGridPtr = std::shared_ptr<const HGrid>;
using VGridPtr = std::shared_ptr<const VGrid>;

// Doubly periodic surface field stored as complex Fourier coefficients.
class ScalarField2 {
  public:
    ScalarField2() = default;
    explicit ScalarField2(HGridPtr g) : grid_(std::move(g)), c_(grid_->modes(), cplx(0.0)) {}
    ScalarField2(HGridPtr g, std::vector<cplx> coeffs) : grid_(std::move(g)), c_(std::move(coeffs)) {}

    const HGrid& grid() const { return *grid_; }
    const HGridPtr& grid_ptr() const { return grid_; }
    const std::vector<cplx>& coeffs() const { return c_; }
    std::vector<cplx>& coeffs() { return c_; }
    cplx& at(int ix, int iy) { return c_[grid_->index(ix, iy)]; }
    const cplx& at(int ix, int iy) const { return c_[grid_->index(ix, iy)]; }
    cplx mean() const { return c_[0]; }

    std::vector<cplx> physical() const { return fft::to_physical(*grid_, c_); }
    static ScalarField2 from_physical(HGridPtr g, const std::vector<cplx>& phys) {
        return ScalarField2(g, fft::to_coefficients(*g, phys));
    }

    // enforce u_hat(-k) = conj(u_hat(k))
    void symmetrize();

    ScalarField2& operator+=(const ScalarField2& o);
    ScalarField2& operator-=(const ScalarField2& o);
    ScalarField2& operator*=(double s);
    ScalarField2& operator*=(cplx s);

    friend ScalarField2 operator+(ScalarField2 a, const ScalarField2& b) { return a += b; }
    friend ScalarField2 operator-(ScalarField2 a, const ScalarField2& b) { return a -= b; }
    friend ScalarField2 operator*(double s, ScalarField2 a) { return a *= s; }
    friend ScalarField2 operator*(ScalarField2 a, double s) { return a *= s; }
    friend ScalarField2 operator-(ScalarField2 a) { return a *= -1.0; }

  private:
    HGridPtr grid_;
    std::vector<cplx> c_;
};

struct VectorField2 {
    ScalarField2 x, y;

    VectorField2() = default;
    explicit VectorField2(HGridPtr g) : x(g), y(g) {}
    VectorField2(ScalarField2 vx, ScalarField2 vy) : x(std::move(vx)), y(std::move(vy)) {}

    friend VectorField2 operator+(VectorField2 a, const VectorField2& b) {
        a.x += b.x;
        a.y += b.y;
        return a;
    }
    friend VectorField2 operator-(VectorField2 a, const VectorField2& b) {
        a.x -= b.x;
        a.y -= b.y;
        return a;
    }
    friend VectorField2 operator*(double s, VectorField2 a) {
        a.x *= s;
        a.y *= s;
        return a;
    }
    // (f1,f2)^perp = (f2,-f1)
    VectorField2 perp() const { return VectorField2(y, -1.0 * x); }
};

// Field on the flat strip T^2 x [-h,0]: horizontal Fourier coefficients at
// each vertical collocation node; layout [node][mode].
class ScalarField3 {
  public:
    ScalarField3() = default;
    ScalarField3(HGridPtr hg, VGridPtr vg)
        : hgrid_(std::move(hg)), vgrid_(std::move(vg)),
          c_(static_cast<size_t>(hgrid_->modes()) * vgrid_->Nw(), cplx(0.0)) {}

    const HGrid& hgrid() const { return *hgrid_; }
    const VGrid& vgrid() const { return *vgrid_; }
    const HGridPtr& hgrid_ptr() const { return hgrid_; }
    const VGridPtr& vgrid_ptr() const { return vgrid_; }
    int Nw() const { return vgrid_->Nw(); }
    int modes() const { return hgrid_->modes(); }

    cplx* node(int j) { return c_.data() + static_cast<size_t>(j) * modes(); }
    const cplx* node(int j) const { return c_.data() + static_cast<size_t>(j) * modes(); }
    std::vector<cplx>& data() { return c_; }
    const std::vector<cplx>& data() const { return c_; }

    ScalarField2 slice(int j) const {
        return ScalarField2(hgrid_, std::vector<cplx>(node(j), node(j) + modes()));
    }
    void set_slice(int j, const ScalarField2& f) {
        std::copy(f.coeffs().begin(), f.coeffs().end(), node(j));
    }
    ScalarField2 surface() const { return slice(Nw() - 1); }
    ScalarField2 bottom() const { return slice(0); }

    void symmetrize();

    ScalarField3& operator+=(const ScalarField3& o);
    ScalarField3& operator-=(const ScalarField3& o);
    ScalarField3& operator*=(double s);
    friend ScalarField3 operator+(ScalarField3 a, const ScalarField3& b) { return a += b; }
    friend ScalarField3 operator-(ScalarField3 a, const ScalarField3& b) { return a -= b; }
    friend ScalarField3 operator*(double s, ScalarField3 a) { return a *= s; }
    friend ScalarField3 operator-(ScalarField3 a) { return a *= -1.0; }

  private:
    HGridPtr hgrid_;
    VGridPtr vgrid_;
    std::vector<cplx> c_;
};

struct VectorField3 {
    ScalarField3 c1, c2, c3;

    VectorField3() = default;
    VectorField3(HGridPtr hg, VGridPtr vg) : c1(hg, vg), c2(hg, vg), c3(hg, vg) {}
    VectorField3(ScalarField3 a, ScalarField3 b, ScalarField3 c)
        : c1(std::move(a)), c2(std::move(b)), c3(std::move(c)) {}

    const HGrid& hgrid() const { return c1.hgrid(); }
    const VGrid& vgrid() const { return c1.vgrid(); }

    friend VectorField3 operator+(VectorField3 a, const VectorField3& b) {
        a.c1 += b.c1;
        a.c2 += b.c2;
        a.c3 += b.c3;
        return a;
    }
    friend VectorField3 operator-(VectorField3 a, const VectorField3& b) {
        a.c1 -= b.c1;
        a.c2 -= b.c2;
        a.c3 -= b.c3;
        return a;
    }
    friend VectorField3 operator*(double s, VectorField3 a) {
        a.c1 *= s;
        a.c2 *= s;
        a.c3 *= s;
        return a;
    }
    friend VectorField3 operator-(VectorField3 a) { return -1.0 * a; }
    void symmetrize() {
        c1.symmetrize();
        c2.symmetrize();
        c3.symmetrize();
    }
};

}  // namespace gdno
