#include "qloss/audit.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qloss/errors.hpp"
#include "qloss/metrics.hpp"

namespace qloss::audit {

namespace {

constexpr std::size_t kPolarizationA = 0;
constexpr std::size_t kPolarizationB = 1;

// Fills the CHSH fields and trace bookkeeping common to both criticized pipelines.
void summarize(PipelineReport& r, const DensityMatrix& out) {
    r.output_trace = out.trace();
    ComplexMatrix reduced =
        partial_trace(out.matrix(), out.dims(), {kPolarizationA, kPolarizationB});
    const bool normalized = std::abs(r.output_trace - 1.0) <= kDensityTolerance;
    r.reduced_state = normalized && out.physical()
                          ? DensityMatrix::trusted(reduced, Dims{2, 2})
                          : DensityMatrix::unchecked(reduced, Dims{2, 2});
    if (!normalized) {
        r.notes.push_back({"trace_leakage",
                           "output trace differs from 1; reduced state is unnormalized",
                           r.output_trace});
    }
    if (r.output_trace > 0.0) {
        auto renormalized = DensityMatrix::unchecked(
            reduced * complex(1.0 / r.output_trace), Dims{2, 2});
        r.chsh_normalized = chsh_max(renormalized);
    } else {
        r.chsh_normalized = 0.0;
        r.notes.push_back({"zero_trace", "output trace is zero; renormalization undefined", 0.0});
    }
    r.chsh_trace_weighted = r.output_trace * r.chsh_normalized;
}

// Sector projector on one arm of {vac, H, V}.
ComplexMatrix arm_projector(bool photon_present) {
    ComplexMatrix p(3, 3);
    if (photon_present) {
        p(kHorizontalLevel, kHorizontalLevel) = 1.0;
        p(kVerticalLevel, kVerticalLevel) = 1.0;
    } else {
        p(kVacuumLevel, kVacuumLevel) = 1.0;
    }
    return p;
}

const DensityMatrix& require_conditional(const std::optional<DensityMatrix>& s,
                                         const char* what) {
    if (!s) {
        throw UndefinedConditionalError(std::string(what) +
                                        ": conditioning sector has probability zero");
    }
    return *s;
}

}  // namespace

ComplexMatrix flawed_signal_operator(double eta) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw UsageError("flawed_signal_operator: eta must lie in [0, 1]");
    }
    return ComplexMatrix::diagonal({1.0 - eta, eta});
}

ComplexMatrix flawed_total_operator(double eta) {
    return kron(flawed_signal_operator(eta), ComplexMatrix::basis_op(2, 1, 1));
}

DensityMatrix initial_composite_state() {
    return composite_state(bell_state(BellKind::PhiPlus), fock_state(1), fock_state(1));
}

PipelineReport oe_first_case_pipeline(double eta) {
    if (!(eta > 0.0 && eta <= 1.0)) {
        throw UsageError("oe_first_case_pipeline: eta must lie in (0, 1]");
    }
    const KrausChannel channel = tensor_channels(
        tensor_channels(identity_channel(4), loss_channel(eta)), identity_channel(2));
    const CptpReport cptp = validate_cptp(channel);
    const DensityMatrix out = apply_channel(channel, initial_composite_state());

    PipelineReport r{.eta = eta,
                     .is_cptp = cptp.is_valid,
                     .cptp_defect = cptp.completeness_defect,
                     .reduced_state = DensityMatrix::unchecked(ComplexMatrix(4, 4), Dims{2, 2})};
    summarize(r, out);
    r.notes.push_back({"polarization_untouched",
                       "loss acts on the signal photon number only; the polarization pair is "
                       "unaffected and CHSH stays maximal",
                       r.chsh_normalized});
    return r;
}

PipelineReport oe_flawed_pipeline(double eta) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw UsageError("oe_flawed_pipeline: eta must lie in [0, 1]");
    }
    const ComplexMatrix op = kron(ComplexMatrix::identity(4), flawed_total_operator(eta));
    const KrausChannel single({op});
    const CptpReport cptp = validate_cptp(single);
    const DensityMatrix out = apply_channel(single, initial_composite_state());

    PipelineReport r{.eta = eta,
                     .is_cptp = cptp.is_valid,
                     .cptp_defect = cptp.completeness_defect,
                     .reduced_state = DensityMatrix::unchecked(ComplexMatrix(4, 4), Dims{2, 2})};
    if (!cptp.is_valid) {
        r.notes.push_back({"non_cptp",
                           "single operator violates the completeness relation; the map is not "
                           "trace preserving",
                           cptp.completeness_defect});
    }
    summarize(r, out);
    return r;
}

const DensityMatrix& CorrectPipelineReport::coincidence_state() const {
    return require_conditional(coincidence, "coincidence_state");
}
const DensityMatrix& CorrectPipelineReport::arm_a_conditional() const {
    return require_conditional(arm_a_given_b_lost, "arm_a_conditional");
}
const DensityMatrix& CorrectPipelineReport::arm_b_conditional() const {
    return require_conditional(arm_b_given_a_lost, "arm_b_conditional");
}

CorrectPipelineReport correct_loss_pipeline(double t_a, double t_b) {
    const KrausChannel channel = tensor_channels(polarized_photon_loss_channel(t_a),
                                                 polarized_photon_loss_channel(t_b));
    const CptpReport cptp = validate_cptp(channel);
    DensityMatrix out = apply_channel(channel, embed_polarization_pair(bell_state(BellKind::PhiPlus)));

    const ComplexMatrix present = arm_projector(true);
    const ComplexMatrix absent = arm_projector(false);
    auto sector_block = [&](const ComplexMatrix& pa, const ComplexMatrix& pb) {
        const ComplexMatrix proj = kron(pa, pb);
        return proj * out.matrix() * proj;
    };
    const ComplexMatrix b11 = sector_block(present, present);
    const ComplexMatrix b01 = sector_block(absent, present);
    const ComplexMatrix b10 = sector_block(present, absent);
    const ComplexMatrix b00 = sector_block(absent, absent);

    CorrectPipelineReport r{.t_a = t_a,
                            .t_b = t_b,
                            .is_cptp = cptp.is_valid,
                            .cptp_defect = cptp.completeness_defect,
                            .output_trace = out.trace(),
                            .output_state = out,
                            .sectors = {b11.trace().real(), b01.trace().real(),
                                        b10.trace().real(), b00.trace().real()}};

    const ComplexMatrix e = photon_embedding();
    const ComplexMatrix e2 = kron(e, e);
    if (r.sectors.p11 > 0.0) {
        ComplexMatrix pol = e2.adjoint() * b11 * e2 * complex(1.0 / r.sectors.p11);
        r.coincidence = DensityMatrix::trusted(std::move(pol), Dims{2, 2});
        r.conditional_chsh = chsh_max(*r.coincidence);
    } else {
        r.notes.push_back({"no_coincidences", "coincidence probability is zero", 0.0});
    }
    if (r.sectors.p10 > 0.0) {
        ComplexMatrix arm_a = partial_trace(b10, Dims{3, 3}, {0});
        r.arm_a_given_b_lost = DensityMatrix::trusted(
            e.adjoint() * arm_a * e * complex(1.0 / r.sectors.p10), Dims{2});
    }
    if (r.sectors.p01 > 0.0) {
        ComplexMatrix arm_b = partial_trace(b01, Dims{3, 3}, {1});
        r.arm_b_given_a_lost = DensityMatrix::trusted(
            e.adjoint() * arm_b * e * complex(1.0 / r.sectors.p01), Dims{2});
    }
    r.s_eff = r.sectors.p11 * r.conditional_chsh;
    r.notes.push_back({"s_eff_proxy",
                       "s_eff = coincidence probability x conditional CHSH (library-defined proxy)",
                       r.s_eff});
    return r;
}

Comparison compare_report(std::span<const double> eta_grid) {
    if (eta_grid.empty()) {
        throw UsageError("compare_report: eta grid must be non-empty");
    }
    std::vector<double> grid(eta_grid.begin(), eta_grid.end());
    for (double eta : grid) {
        if (!(eta > 0.0 && eta <= 1.0)) {
            throw UsageError("compare_report: every eta must lie in (0, 1] (got " +
                             std::to_string(eta) + ")");
        }
    }
    std::stable_sort(grid.begin(), grid.end());

    Comparison c;
    for (double eta : grid) {
        auto first = oe_first_case_pipeline(eta);
        auto flawed = oe_flawed_pipeline(eta);
        auto correct = correct_loss_pipeline(eta, 1.0);
        c.rows.push_back({eta, first.chsh_normalized, flawed.output_trace,
                          flawed.chsh_trace_weighted, correct.sectors.p11,
                          correct.conditional_chsh, correct.s_eff});
        c.first_case.push_back(std::move(first));
        c.flawed.push_back(std::move(flawed));
        c.correct.push_back(std::move(correct));
    }
    return c;
}

std::string comparison_csv(const Comparison& c) {
    std::ostringstream os;
    os << kComparisonCsvHeader << '\n';
    for (const auto& row : c.rows) {
        os << format_g9(row.eta) << ',' << format_g9(row.first_case_chsh) << ','
           << format_g9(row.flawed_trace) << ',' << format_g9(row.flawed_chsh_weighted) << ','
           << format_g9(row.coincidence_p) << ',' << format_g9(row.conditional_chsh) << ','
           << format_g9(row.s_eff) << '\n';
    }
    return os.str();
}

}  // namespace qloss::audit
