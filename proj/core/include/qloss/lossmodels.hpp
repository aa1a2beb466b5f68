#pragma once

#include <string>
#include <vector>

#include "qloss/states.hpp"

namespace qloss {

// Beer-Lambert decay constant Lambda = ln(10) alpha / 10, in 1/km, for alpha in dB/km.
double lambda_coeff(double alpha_db_per_km);

struct FiberParams {
    double alpha_db_per_km = 0.0;
    double length_km = 0.0;
    int n_photons = 1;
};

// sum_j C(N, j) q^j (1 - q)^(N - j) |j><j| with q = exp(-Lambda L); dims [N + 1].
DensityMatrix fock_decay_state(const FiberParams& p);
// Survival probability q = exp(-Lambda L).
double survival_probability(double alpha_db_per_km, double length_km);

// Photon-detection mixture after independent loss in two arms. Naming follows
// (photons in A)(photons in B): p01 means A lost, B detected.
struct LossMixture {
    double p11 = 0.0;
    double p01 = 0.0;
    double p10 = 0.0;
    double p00 = 0.0;
    DensityMatrix state;  // Fock(A) (x) Fock(B), dims [2, 2], diagonal
};

LossMixture two_arm_loss_mixture(double t_a, double t_b);

struct FsoParams {
    double alpha_db_per_km = 0.07;
    double wavelength_m = 1550e-9;
    double waist_m = 0.01;
    double aperture_radius_m = 0.2;
};

// Throws UsageError for non-positive parameters. Returns advisory warnings, e.g.
// when the waist is not much larger than the wavelength.
std::vector<std::string> check_fso_params(const FsoParams& p);

// Form of the atmospheric Beer-Lambert factor. DecibelConsistent is 10^(-alpha z / 10)
// with alpha in dB/km and z in km, equal to exp(-Lambda z). LiteralExponent evaluates
// 10^(-alpha z) as printed, kept only for comparison.
enum class AttenuationConvention { DecibelConsistent, LiteralExponent };

struct LinkBudgetPoint {
    double z_m = 0.0;
    double atm_transmittance = 1.0;
    double geo_efficiency = 1.0;
    double total_loss_db = 0.0;
};

// z_R = pi w0^2 / lambda.
double rayleigh_range(double waist_m, double wavelength_m);
// w(z) = w0 sqrt(1 + (z / z_R)^2).
double beam_waist(double z_m, const FsoParams& p);
// 1 - exp(-2 a_R^2 / w(z)^2).
double geometrical_efficiency(double z_m, const FsoParams& p);
double atmospheric_transmittance(double z_m, double alpha_db_per_km,
                                 AttenuationConvention convention =
                                     AttenuationConvention::DecibelConsistent);

LinkBudgetPoint fso_transmittance(double z_m, const FsoParams& p, bool include_geo = true,
                                  AttenuationConvention convention =
                                      AttenuationConvention::DecibelConsistent);

// Points at 0, step, 2 step, ... and always a final point at z_max.
std::vector<LinkBudgetPoint> link_budget_curve(const FsoParams& p, double z_max_m, double step_m,
                                               bool include_geo,
                                               AttenuationConvention convention =
                                                   AttenuationConvention::DecibelConsistent);

// CSV with header "z_m,atm_T,geo_eta,loss_db", values at 9 significant digits.
std::string link_budget_csv(const std::vector<LinkBudgetPoint>& points);

// printf("%.9g") formatting shared by every CSV writer.
std::string format_g9(double x);

}  // namespace qloss
