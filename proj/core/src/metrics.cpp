#include "qloss/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "qloss/errors.hpp"

namespace qloss {

namespace {

constexpr double kEntropyClamp = 1e-12;

const std::array<ComplexMatrix, 3>& paulis() {
    static const std::array<ComplexMatrix, 3> p{
        ComplexMatrix{{0, 1}, {1, 0}},
        ComplexMatrix{{0, complex(0, -1)}, {complex(0, 1), 0}},
        ComplexMatrix{{1, 0}, {0, -1}},
    };
    return p;
}

}  // namespace

double purity(const DensityMatrix& rho) {
    // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
    double sum = 0.0;
    for (const auto& z : rho.matrix().entries()) sum += std::norm(z);
    return sum;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    double s = 0.0;
    for (double lambda : density_spectrum(rho.matrix())) {
        if (lambda < kEntropyClamp) continue;
        s -= lambda * std::log2(lambda);
    }
    return std::max(s, 0.0);
}

CorrelationTensor correlation_tensor(const DensityMatrix& rho) {
    if (rho.dims() != Dims{2, 2}) {
        throw DimensionError("correlation_tensor: expected a two-qubit state with dims [2,2]");
    }
    CorrelationTensor t{};
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            const ComplexMatrix op = kron(paulis()[i], paulis()[j]);
            // Tr(rho op) without forming the product.
            complex acc = 0.0;
            for (std::size_t r = 0; r < 4; ++r)
                for (std::size_t c = 0; c < 4; ++c) acc += rho.matrix()(r, c) * op(c, r);
            t[i][j] = acc.real();
        }
    }
    return t;
}

double chsh_max(const DensityMatrix& rho) {
    const auto t = correlation_tensor(rho);
    ComplexMatrix gram(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < 3; ++k) s += t[k][i] * t[k][j];
            gram(i, j) = s;
        }
    const auto ev = hermitian_eigenvalues(gram);
    const double m12 = std::max(ev[1] + ev[2], 0.0);
    return 2.0 * std::sqrt(m12);
}

}  // namespace qloss
