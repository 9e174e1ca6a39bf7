#include "gdno/field.hpp"

#include "gdno/errors.hpp"

namespace gdno {

namespace {

void check_same(const HGrid& a, const HGrid& b) {
    if (!(a == b)) throw Error("field grids do not match");
}

void symmetrize_modes(const HGrid& g, cplx* c) {
    for (int iy = 0; iy < g.Ny(); ++iy) {
        for (int ix = 0; ix < g.Nx(); ++ix) {
            int i = g.index(ix, iy);
            int j = g.conj_index(ix, iy);
            if (j < i) continue;
            cplx v = 0.5 * (c[i] + std::conj(c[j]));
            c[i] = v;
            c[j] = std::conj(v);
        }
    }
}

}  // namespace

void ScalarField2::symmetrize() { symmetrize_modes(*grid_, c_.data()); }

ScalarField2& ScalarField2::operator+=(const ScalarField2& o) {
    check_same(*grid_, *o.grid_);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

ScalarField2& ScalarField2::operator-=(const ScalarField2& o) {
    check_same(*grid_, *o.grid_);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

ScalarField2& ScalarField2::operator*=(double s) {
    for (auto& v : c_) v *= s;
    return *this;
}

ScalarField2& ScalarField2::operator*=(cplx s) {
    for (auto& v : c_) v *= s;
    return *this;
}

void ScalarField3::symmetrize() {
    for (int j = 0; j < Nw(); ++j) symmetrize_modes(*hgrid_, node(j));
}

ScalarField3& ScalarField3::operator+=(const ScalarField3& o) {
    check_same(*hgrid_, *o.hgrid_);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

ScalarField3& ScalarField3::operator-=(const ScalarField3& o) {
    check_same(*hgrid_, *o.hgrid_);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

ScalarField3& ScalarField3::operator*=(double s) {
    for (auto& v : c_) v *= s;
    return *this;
}

}  // namespace gdno
