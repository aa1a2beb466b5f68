#pragma once

#include <array>

#include "qloss/states.hpp"

namespace qloss {

// Tr(rho^2).
double purity(const DensityMatrix& rho);

// -sum lambda log2 lambda, in bits. Eigenvalues below 1e-12 count as zero.
double von_neumann_entropy(const DensityMatrix& rho);

// t_ij = Tr[rho (sigma_i (x) sigma_j)], i, j over x, y, z.
using CorrelationTensor = std::array<std::array<double, 3>, 3>;

CorrelationTensor correlation_tensor(const DensityMatrix& rho);

// Maximal CHSH value over all measurement settings, 2 sqrt(m1 + m2) with m1, m2 the
// two largest eigenvalues of T^T T. Requires dims [2, 2]; scales linearly with the
// trace for unnormalized input.
double chsh_max(const DensityMatrix& rho);

}  // namespace qloss
