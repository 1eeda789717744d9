#pragma once

#include "stokes2p/common.hpp"

#include <vector>

namespace stokes2p {

/// Complex 1-D FFT with cached plans (FFTW backend, single threaded).
///
/// Conventions: `forward` maps M samples f_j to coefficients
///   c_k = (1/M) sum_j f_j exp(-2 pi i j k / M),
/// so that f_j = sum_k c_k exp(+2 pi i j k / M); `backward` is that inverse.
/// Transforms are performed in place on the given buffer.
namespace fft {

void forward(cd* data, int n);
void backward(cd* data, int n);

inline void forward(std::vector<cd>& v) { forward(v.data(), static_cast<int>(v.size())); }
inline void backward(std::vector<cd>& v) { backward(v.data(), static_cast<int>(v.size())); }

/// Strided in-place transforms for multi-dimensional layouts: `count` lines
/// of length n, line l starting at data + l*dist, elements `stride` apart.
void forward_many(cd* data, int n, int count, int stride, int dist);
void backward_many(cd* data, int n, int count, int stride, int dist);

} // namespace fft

} // namespace stokes2p
