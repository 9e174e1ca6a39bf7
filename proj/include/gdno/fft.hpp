#pragma once

#include <complex>
#include <vector>

#include "gdno/grids.hpp"

namespace gdno {

using cplx = std::complex<double>;

// 2D complex FFT between mode coefficients and physical samples on an HGrid.
// Coefficient convention: u(x) = sum_k u_hat(k) exp(i xi_k . x), so the
// forward (physical -> coefficients) transform carries the 1/(Nx*Ny) factor.
// Plans are cached per grid size; execution is safe to call concurrently.
namespace fft {

// coefficients -> physical samples (in place allowed via copies)
std::vector<cplx> to_physical(const HGrid& g, const std::vector<cplx>& coeffs);

// physical samples -> coefficients
std::vector<cplx> to_coefficients(const HGrid& g, const std::vector<cplx>& phys);

}  // namespace fft

}  // namespace gdno
