#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qloss/matrix.hpp"

namespace qloss {

// Basis conventions shared by every module:
//   polarization  index 0 = |H>, index 1 = |V>
//   Fock          index 0 = |0>, index 1 = |1>
//   factor order  arm A (signal) before arm B (idler); polarization before Fock.

inline constexpr double kDensityTolerance = 1e-10;
inline constexpr double kPsdTolerance = 1e-9;

// A density matrix with its tensor factorization. Instances built through the
// checked constructor or validate_density satisfy Hermiticity, unit trace and
// positivity. `unchecked` admits anything square with consistent dims and marks
// the result non-physical, which is how unnormalized audit states are carried.
class DensityMatrix {
public:
    // Validates; throws ContractError listing the violated invariants.
    DensityMatrix(ComplexMatrix m, Dims dims);

    static DensityMatrix unchecked(ComplexMatrix m, Dims dims);
    // For matrices physical by construction, such as the CPTP image of a physical
    // state. Only the shape is checked.
    static DensityMatrix trusted(ComplexMatrix m, Dims dims);

    const ComplexMatrix& matrix() const noexcept { return m_; }
    const Dims& dims() const noexcept { return dims_; }
    std::size_t dim() const noexcept { return m_.rows(); }
    bool physical() const noexcept { return physical_; }
    double trace() const { return m_.trace().real(); }

    // Same state, flagged non-physical (e.g. the output of a non-CPTP map).
    DensityMatrix as_nonphysical() const;

private:
    struct Trusted {};
    DensityMatrix(ComplexMatrix m, Dims dims, bool physical, Trusted);

    ComplexMatrix m_;
    Dims dims_;
    bool physical_;
};

enum class DensityInvariant { Hermitian, UnitTrace, PositiveSemidefinite };

std::string_view to_string(DensityInvariant inv);

struct DensityViolation {
    DensityInvariant invariant;
    double measured;  // max |m - m^dagger|, trace, or minimum eigenvalue
    double defect;    // distance from the admissible region
};

struct ViolationReport {
    std::vector<DensityViolation> violations;
    std::string summary() const;
};

// Violations are data: an invalid matrix yields a report, never an exception.
// Throws DimensionError only for non-square input or dims inconsistent with it.
std::variant<DensityMatrix, ViolationReport> validate_density(const ComplexMatrix& m,
                                                              const Dims& dims);

// Spectrum of a density matrix: exact for diagonal matrices of any size, Jacobi otherwise.
std::vector<double> density_spectrum(const ComplexMatrix& m);

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

std::string_view to_string(BellKind kind);

DensityMatrix bell_state(BellKind kind);
// |n><n| on the two-level Fock space; n must be 0 or 1.
DensityMatrix fock_state(int n);
// I_d / d on a single factor, or I / prod(dims) over the given factorization.
DensityMatrix maximally_mixed(const Dims& dims);
// pol (x) fock_s (x) fock_i with dims [2, 2, 2, 2].
DensityMatrix composite_state(const DensityMatrix& pol, const DensityMatrix& fock_s,
                              const DensityMatrix& fock_i);
// rho (x) sigma, dims concatenated. Physical iff both inputs are.
DensityMatrix tensor(const DensityMatrix& rho, const DensityMatrix& sigma);
// w * Phi+ + (1 - w) * I_4 / 4, for w in [-1/3, 1].
DensityMatrix werner_state(double w);

}  // namespace qloss
