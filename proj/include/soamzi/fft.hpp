#pragma once

#include <complex>
#include <vector>

namespace soamzi {

// In-place iterative radix-2 transform. Size must be a power of two (the
// time grids used throughout enforce this). The inverse includes the 1/N
// normalization.
void fft_inplace(std::vector<std::complex<double>>& x, bool inverse = false);

std::vector<std::complex<double>> fft(const std::vector<std::complex<double>>& x);
std::vector<std::complex<double>> fft_real(const std::vector<double>& x);
std::vector<std::complex<double>> ifft(const std::vector<std::complex<double>>& x);

}  // namespace soamzi
