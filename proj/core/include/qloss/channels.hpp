#pragma once

#include <cstddef>
#include <vector>

#include "qloss/matrix.hpp"
#include "qloss/states.hpp"

namespace qloss {

inline constexpr double kCptpTolerance = 1e-10;

// Ordered Kraus set {K_a}, every operator d_out x d_in. Immutable once built.
class KrausChannel {
public:
    explicit KrausChannel(std::vector<ComplexMatrix> operators);

    const std::vector<ComplexMatrix>& operators() const noexcept { return ops_; }
    std::size_t size() const noexcept { return ops_.size(); }
    std::size_t d_in() const noexcept { return ops_.front().cols(); }
    std::size_t d_out() const noexcept { return ops_.front().rows(); }

private:
    std::vector<ComplexMatrix> ops_;
};

struct CptpReport {
    double completeness_defect = 0.0;  // max entrywise |sum K^dagger K - I|
    double tolerance = kCptpTolerance;
    bool is_trace_preserving = false;
    bool is_valid = false;
};

// Sum over a of K_a^dagger K_a.
ComplexMatrix completeness_sum(const KrausChannel& c);
CptpReport validate_cptp(const KrausChannel& c, double tol = kCptpTolerance);

// rho -> sum_a K_a rho K_a^dagger. A channel that fails validate_cptp still applies;
// its output is flagged non-physical. Output dims keep the input factorization when
// d_out == d_in, otherwise collapse to a single factor.
DensityMatrix apply_channel(const KrausChannel& c, const DensityMatrix& rho);

KrausChannel identity_channel(std::size_t d);

// Photon loss on the {|0>, |1>} Fock space with transmittance eta:
//   K0 = sqrt(1 - eta) |0><1|,  K1 = |0><0| + sqrt(eta) |1><1|.
KrausChannel loss_channel(double eta);

// rho -> (1 - p) rho + p I/2 with Kraus set
// {sqrt(1 - 3p/4) I, sqrt(p/4) X, sqrt(p/4) Y, sqrt(p/4) Z}.
KrausChannel depolarizing_channel(double p);

// Loss acting on a single photon that carries polarization, on {|vac>, |H>, |V>}:
//   K_a = sqrt(1 - t) |vac><H|,  K_b = sqrt(1 - t) |vac><V|,
//   K_c = |vac><vac| + sqrt(t) (|H><H| + |V><V|).
// A lost photon takes its polarization with it.
KrausChannel polarized_photon_loss_channel(double t);

// All pairwise Kronecker products a_i (x) b_j, ordered with b varying fastest.
KrausChannel tensor_channels(const KrausChannel& a, const KrausChannel& b);

// Index layout of the single-arm {vac, H, V} space.
inline constexpr std::size_t kVacuumLevel = 0;
inline constexpr std::size_t kHorizontalLevel = 1;
inline constexpr std::size_t kVerticalLevel = 2;

// Isometry 2 -> 3 mapping |H>, |V> onto the photon-present levels.
ComplexMatrix photon_embedding();
// Embeds a two-qubit polarization state into the 3 (x) 3 arm space, dims [3, 3].
DensityMatrix embed_polarization_pair(const DensityMatrix& pol);

}  // namespace qloss
