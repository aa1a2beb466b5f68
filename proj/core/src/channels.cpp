#include "qloss/channels.hpp"

#include <cmath>
#include <string>

#include "qloss/errors.hpp"

namespace qloss {

namespace {

void require_probability(double x, const char* who, const char* name) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw UsageError(std::string(who) + ": " + name + " must lie in [0, 1] (got " +
                         std::to_string(x) + ")");
    }
}

const ComplexMatrix& pauli_x() {
    static const ComplexMatrix m{{0, 1}, {1, 0}};
    return m;
}
const ComplexMatrix& pauli_y() {
    static const ComplexMatrix m{{0, complex(0, -1)}, {complex(0, 1), 0}};
    return m;
}
const ComplexMatrix& pauli_z() {
    static const ComplexMatrix m{{1, 0}, {0, -1}};
    return m;
}

}  // namespace

KrausChannel::KrausChannel(std::vector<ComplexMatrix> operators) : ops_(std::move(operators)) {
    if (ops_.empty()) {
        throw UsageError("KrausChannel: at least one operator required");
    }
    for (const auto& k : ops_) {
        if (k.rows() != ops_.front().rows() || k.cols() != ops_.front().cols()) {
            throw DimensionError("KrausChannel: operators have differing shapes");
        }
    }
}

ComplexMatrix completeness_sum(const KrausChannel& c) {
    ComplexMatrix sum(c.d_in(), c.d_in());
    for (const auto& k : c.operators()) sum += k.adjoint() * k;
    return sum;
}

CptpReport validate_cptp(const KrausChannel& c, double tol) {
    CptpReport r;
    r.tolerance = tol;
    r.completeness_defect = max_abs_diff(completeness_sum(c), ComplexMatrix::identity(c.d_in()));
    r.is_trace_preserving = r.completeness_defect <= tol;
    r.is_valid = r.is_trace_preserving;
    return r;
}

DensityMatrix apply_channel(const KrausChannel& c, const DensityMatrix& rho) {
    if (rho.dim() != c.d_in()) {
        throw DimensionError("apply_channel: state dimension " + std::to_string(rho.dim()) +
                             " != channel input dimension " + std::to_string(c.d_in()));
    }
    ComplexMatrix out(c.d_out(), c.d_out());
    for (const auto& k : c.operators()) out += k * rho.matrix() * k.adjoint();

    Dims dims = c.d_out() == c.d_in() ? rho.dims() : Dims{c.d_out()};
    if (rho.physical() && validate_cptp(c).is_valid) {
        return DensityMatrix::trusted(std::move(out), std::move(dims));
    }
    return DensityMatrix::unchecked(std::move(out), std::move(dims));
}

KrausChannel identity_channel(std::size_t d) {
    return KrausChannel({ComplexMatrix::identity(d)});
}

KrausChannel loss_channel(double eta) {
    require_probability(eta, "loss_channel", "eta");
    ComplexMatrix k0(2, 2);
    k0(0, 1) = std::sqrt(1.0 - eta);
    ComplexMatrix k1(2, 2);
    k1(0, 0) = 1.0;
    k1(1, 1) = std::sqrt(eta);
    return KrausChannel({std::move(k0), std::move(k1)});
}

KrausChannel depolarizing_channel(double p) {
    require_probability(p, "depolarizing_channel", "p");
    const complex a = std::sqrt(1.0 - 3.0 * p / 4.0);
    const complex b = std::sqrt(p / 4.0);
    return KrausChannel({a * ComplexMatrix::identity(2), b * pauli_x(), b * pauli_y(),
                         b * pauli_z()});
}

KrausChannel polarized_photon_loss_channel(double t) {
    require_probability(t, "polarized_photon_loss_channel", "t");
    const double lost = std::sqrt(1.0 - t);
    const double kept = std::sqrt(t);
    ComplexMatrix ka(3, 3);
    ka(kVacuumLevel, kHorizontalLevel) = lost;
    ComplexMatrix kb(3, 3);
    kb(kVacuumLevel, kVerticalLevel) = lost;
    ComplexMatrix kc(3, 3);
    kc(kVacuumLevel, kVacuumLevel) = 1.0;
    kc(kHorizontalLevel, kHorizontalLevel) = kept;
    kc(kVerticalLevel, kVerticalLevel) = kept;
    return KrausChannel({std::move(ka), std::move(kb), std::move(kc)});
}

KrausChannel tensor_channels(const KrausChannel& a, const KrausChannel& b) {
    std::vector<ComplexMatrix> ops;
    ops.reserve(a.size() * b.size());
    for (const auto& ka : a.operators()) {
        for (const auto& kb : b.operators()) ops.push_back(kron(ka, kb));
    }
    return KrausChannel(std::move(ops));
}

ComplexMatrix photon_embedding() {
    ComplexMatrix e(3, 2);
    e(kHorizontalLevel, 0) = 1.0;
    e(kVerticalLevel, 1) = 1.0;
    return e;
}

DensityMatrix embed_polarization_pair(const DensityMatrix& pol) {
    if (pol.dims() != Dims{2, 2}) {
        throw DimensionError("embed_polarization_pair: expected dims [2,2]");
    }
    const ComplexMatrix e = kron(photon_embedding(), photon_embedding());
    ComplexMatrix m = e * pol.matrix() * e.adjoint();
    if (pol.physical()) return DensityMatrix::trusted(std::move(m), Dims{3, 3});
    return DensityMatrix::unchecked(std::move(m), Dims{3, 3});
}

}  // namespace qloss
