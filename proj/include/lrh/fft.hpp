#pragma once
#include "lrh/grid.hpp"

namespace lrh::fft {

// Unnormalized c2c DFT with FFTW conventions, sign = -1 forward / +1 backward.
// Plans are cached per (dims, sign) and created with FFTW_ESTIMATE, so results
// are deterministic run to run. Single-threaded.
void dft(const GridSpec& g, const cplx* in, cplx* out, int sign);

} // namespace lrh::fft
