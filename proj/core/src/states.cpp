#include "qloss/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qloss/errors.hpp"

namespace qloss {

namespace {

bool is_diagonal(const ComplexMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j && m(i, j) != complex{}) return false;
    return true;
}

void require_consistent(const ComplexMatrix& m, const Dims& dims, const char* who) {
    if (!m.is_square()) {
        throw DimensionError(std::string(who) + ": matrix is not square");
    }
    if (dims.product() != m.rows()) {
        throw DimensionError(std::string(who) + ": dims product " +
                             std::to_string(dims.product()) + " != dimension " +
                             std::to_string(m.rows()));
    }
}

ViolationReport check_invariants(const ComplexMatrix& m) {
    ViolationReport report;
    const double herm = hermiticity_defect(m);
    if (herm > kDensityTolerance) {
        report.violations.push_back({DensityInvariant::Hermitian, herm, herm});
    }
    const double tr = m.trace().real();
    if (std::abs(tr - 1.0) > kDensityTolerance) {
        report.violations.push_back({DensityInvariant::UnitTrace, tr, std::abs(tr - 1.0)});
    }
    // Positivity is only meaningful once Hermiticity holds.
    if (herm <= kDensityTolerance) {
        const auto spectrum = density_spectrum(m);
        const double lowest = spectrum.front();
        if (lowest < -kPsdTolerance) {
            report.violations.push_back(
                {DensityInvariant::PositiveSemidefinite, lowest, -lowest});
        }
    }
    return report;
}

}  // namespace

std::vector<double> density_spectrum(const ComplexMatrix& m) {
    if (is_diagonal(m)) {
        std::vector<double> values(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i) values[i] = m(i, i).real();
        std::sort(values.begin(), values.end());
        return values;
    }
    return hermitian_eigenvalues(m);
}

DensityMatrix::DensityMatrix(ComplexMatrix m, Dims dims)
    : m_(std::move(m)), dims_(std::move(dims)), physical_(true) {
    require_consistent(m_, dims_, "DensityMatrix");
    const auto report = check_invariants(m_);
    if (!report.violations.empty()) {
        throw ContractError("DensityMatrix: " + report.summary());
    }
}

DensityMatrix::DensityMatrix(ComplexMatrix m, Dims dims, bool physical, Trusted)
    : m_(std::move(m)), dims_(std::move(dims)), physical_(physical) {
    require_consistent(m_, dims_, "DensityMatrix");
}

DensityMatrix DensityMatrix::unchecked(ComplexMatrix m, Dims dims) {
    return DensityMatrix(std::move(m), std::move(dims), false, Trusted{});
}

DensityMatrix DensityMatrix::trusted(ComplexMatrix m, Dims dims) {
    return DensityMatrix(std::move(m), std::move(dims), true, Trusted{});
}

DensityMatrix DensityMatrix::as_nonphysical() const {
    return DensityMatrix(m_, dims_, false, Trusted{});
}

std::string_view to_string(DensityInvariant inv) {
    switch (inv) {
        case DensityInvariant::Hermitian: return "hermitian";
        case DensityInvariant::UnitTrace: return "unit_trace";
        case DensityInvariant::PositiveSemidefinite: return "positive_semidefinite";
    }
    return "unknown";
}

std::string ViolationReport::summary() const {
    std::ostringstream os;
    os.precision(12);
    for (std::size_t k = 0; k < violations.size(); ++k) {
        const auto& v = violations[k];
        if (k) os << "; ";
        switch (v.invariant) {
            case DensityInvariant::Hermitian: os << "hermiticity defect = " << v.measured; break;
            case DensityInvariant::UnitTrace: os << "trace = " << v.measured; break;
            case DensityInvariant::PositiveSemidefinite:
                os << "minimum eigenvalue = " << v.measured;
                break;
        }
    }
    return os.str();
}

std::variant<DensityMatrix, ViolationReport> validate_density(const ComplexMatrix& m,
                                                              const Dims& dims) {
    require_consistent(m, dims, "validate_density");
    auto report = check_invariants(m);
    if (!report.violations.empty()) return report;
    return DensityMatrix(m, dims);
}

std::string_view to_string(BellKind kind) {
    switch (kind) {
        case BellKind::PhiPlus: return "phi+";
        case BellKind::PhiMinus: return "phi-";
        case BellKind::PsiPlus: return "psi+";
        case BellKind::PsiMinus: return "psi-";
    }
    return "unknown";
}

DensityMatrix bell_state(BellKind kind) {
    // Amplitudes over |HH>, |HV>, |VH>, |VV>; the 1/2 is applied to the projector so
    // every nonzero entry is exactly +-0.5.
    std::vector<complex> ket(4);
    switch (kind) {
        case BellKind::PhiPlus: ket = {1, 0, 0, 1}; break;
        case BellKind::PhiMinus: ket = {1, 0, 0, -1}; break;
        case BellKind::PsiPlus: ket = {0, 1, 1, 0}; break;
        case BellKind::PsiMinus: ket = {0, 1, -1, 0}; break;
    }
    return DensityMatrix(0.5 * ComplexMatrix::projector(ket), Dims{2, 2});
}

DensityMatrix fock_state(int n) {
    if (n != 0 && n != 1) {
        throw UsageError("fock_state: n must be 0 or 1 (got " + std::to_string(n) + ")");
    }
    return DensityMatrix(ComplexMatrix::basis_op(2, n, n), Dims{2});
}

DensityMatrix maximally_mixed(const Dims& dims) {
    const std::size_t d = dims.product();
    return DensityMatrix(ComplexMatrix::identity(d) * complex(1.0 / static_cast<double>(d)), dims);
}

DensityMatrix tensor(const DensityMatrix& rho, const DensityMatrix& sigma) {
    auto dims = rho.dims().values();
    const auto& extra = sigma.dims().values();
    dims.insert(dims.end(), extra.begin(), extra.end());
    auto m = kron(rho.matrix(), sigma.matrix());
    if (rho.physical() && sigma.physical()) {
        return DensityMatrix::trusted(std::move(m), Dims(std::move(dims)));
    }
    return DensityMatrix::unchecked(std::move(m), Dims(std::move(dims)));
}

DensityMatrix composite_state(const DensityMatrix& pol, const DensityMatrix& fock_s,
                              const DensityMatrix& fock_i) {
    if (pol.dim() != 4 || pol.dims() != Dims{2, 2}) {
        throw DimensionError("composite_state: polarization state must be 4x4 with dims [2,2]");
    }
    if (fock_s.dim() != 2 || fock_i.dim() != 2) {
        throw DimensionError("composite_state: Fock factors must be 2x2");
    }
    return tensor(tensor(pol, fock_s), fock_i);
}

DensityMatrix werner_state(double w) {
    if (!(w >= -1.0 / 3.0 - 1e-15 && w <= 1.0)) {
        throw UsageError("werner_state: w must lie in [-1/3, 1]");
    }
    ComplexMatrix m = bell_state(BellKind::PhiPlus).matrix() * complex(w) +
                      ComplexMatrix::identity(4) * complex((1.0 - w) / 4.0);
    return DensityMatrix(std::move(m), Dims{2, 2});
}

}  // namespace qloss
