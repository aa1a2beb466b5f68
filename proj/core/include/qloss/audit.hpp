#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qloss/channels.hpp"
#include "qloss/lossmodels.hpp"
#include "qloss/states.hpp"

namespace qloss::audit {

// A single observation attached to a report, e.g. "non_cptp" with the measured defect.
struct Finding {
    std::string code;
    std::string message;
    double value = 0.0;
};

struct PipelineReport {
    double eta = 0.0;
    bool is_cptp = false;
    double cptp_defect = 0.0;
    double output_trace = 0.0;
    DensityMatrix reduced_state;     // polarization pair; flagged non-physical if unnormalized
    double chsh_normalized = 0.0;    // CHSH of reduced_state / output_trace
    double chsh_trace_weighted = 0.0;  // output_trace * chsh_normalized
    std::vector<Finding> notes{};
};

// The eta-dependent operators of the criticized model. Neither is a Kraus operator.
//   signal:  M_s = (1 - eta) |0><0| + eta |1><1|
//   total:   M   = M_s (x) |1><1|
ComplexMatrix flawed_signal_operator(double eta);
ComplexMatrix flawed_total_operator(double eta);

// Phi+ (x) |1><1|_s (x) |1><1|_i, dims [2, 2, 2, 2].
DensityMatrix initial_composite_state();

// Proper Kraus loss on the signal Fock factor only; polarization and idler untouched.
// The reduced polarization state stays Phi+ for every eta in (0, 1].
PipelineReport oe_first_case_pipeline(double eta);

// (I (x) I (x) M) rho (I (x) I (x) M)^dagger with no renormalization, eta in [0, 1].
PipelineReport oe_flawed_pipeline(double eta);

struct SectorProbabilities {
    double p11 = 0.0;  // both photons present
    double p01 = 0.0;  // A lost, B present
    double p10 = 0.0;  // A present, B lost
    double p00 = 0.0;  // both lost
};

// Two-arm polarization-aware loss applied to Phi+ in the {vac, H, V}^2 space.
struct CorrectPipelineReport {
    double t_a = 0.0;
    double t_b = 0.0;
    bool is_cptp = false;
    double cptp_defect = 0.0;
    double output_trace = 0.0;
    DensityMatrix output_state;  // dims [3, 3]
    SectorProbabilities sectors;
    double conditional_chsh = 0.0;  // CHSH of the coincidence-conditional state; 0 if p11 = 0
    // Unheralded correlation proxy: p11 * conditional_chsh. A construct of this
    // library for a single decreasing figure, not a standard quantity.
    double s_eff = 0.0;
    std::vector<Finding> notes{};

    // Polarization pair given both photons arrived. Throws UndefinedConditionalError
    // when p11 = 0.
    const DensityMatrix& coincidence_state() const;
    // Arm A polarization given A arrived and B was lost (sector p10).
    const DensityMatrix& arm_a_conditional() const;
    // Arm B polarization given B arrived and A was lost (sector p01).
    const DensityMatrix& arm_b_conditional() const;

    std::optional<DensityMatrix> coincidence{};
    std::optional<DensityMatrix> arm_a_given_b_lost{};
    std::optional<DensityMatrix> arm_b_given_a_lost{};
};

CorrectPipelineReport correct_loss_pipeline(double t_a, double t_b);

struct ComparisonRow {
    double eta = 0.0;
    double first_case_chsh = 0.0;
    double flawed_trace = 0.0;
    double flawed_chsh_weighted = 0.0;
    double coincidence_p = 0.0;
    double conditional_chsh = 0.0;
    double s_eff = 0.0;
};

struct Comparison {
    std::vector<ComparisonRow> rows;  // ascending in eta
    std::vector<PipelineReport> first_case;
    std::vector<PipelineReport> flawed;
    std::vector<CorrectPipelineReport> correct;
};

// Runs the three pipelines per eta; the correct pipeline uses t_a = eta, t_b = 1
// (a single lossy arm, as in the criticized setting).
Comparison compare_report(std::span<const double> eta_grid);

inline constexpr const char* kComparisonCsvHeader =
    "eta,first_case_chsh,flawed_trace,flawed_chsh_weighted,coincidence_p,conditional_chsh,s_eff";

std::string comparison_csv(const Comparison& c);

}  // namespace qloss::audit
