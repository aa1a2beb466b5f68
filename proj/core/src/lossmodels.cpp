#include "qloss/lossmodels.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "qloss/errors.hpp"

namespace qloss {

namespace {

void require_probability(double x, const char* name) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw UsageError(std::string("two_arm_loss_mixture: ") + name +
                         " must lie in [0, 1] (got " + std::to_string(x) + ")");
    }
}

void require_positive(double x, const char* name) {
    if (!(x > 0.0)) {
        throw UsageError(std::string(name) + " must be strictly positive (got " +
                         std::to_string(x) + ")");
    }
}

void require_distance(double z_m) {
    if (!(z_m >= 0.0)) {
        throw UsageError("propagation distance must be non-negative (got " +
                         std::to_string(z_m) + ")");
    }
}

// log C(n, k) via lgamma keeps large N finite.
double log_binomial(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace

double lambda_coeff(double alpha_db_per_km) {
    if (!(alpha_db_per_km >= 0.0)) {
        throw UsageError("lambda_coeff: alpha must be non-negative");
    }
    return std::numbers::ln10 * alpha_db_per_km / 10.0;
}

double survival_probability(double alpha_db_per_km, double length_km) {
    if (!(length_km >= 0.0)) {
        throw UsageError("survival_probability: length must be non-negative");
    }
    return std::exp(-lambda_coeff(alpha_db_per_km) * length_km);
}

DensityMatrix fock_decay_state(const FiberParams& p) {
    if (p.n_photons < 1) {
        throw UsageError("fock_decay_state: n_photons must be at least 1");
    }
    const double q = survival_probability(p.alpha_db_per_km, p.length_km);
    const int n = p.n_photons;
    std::vector<double> weights(static_cast<std::size_t>(n) + 1, 0.0);
    for (int j = 0; j <= n; ++j) {
        // Exact endpoints avoid log(0).
        if (q == 1.0) {
            weights[j] = j == n ? 1.0 : 0.0;
        } else if (q == 0.0) {
            weights[j] = j == 0 ? 1.0 : 0.0;
        } else {
            weights[j] = std::exp(log_binomial(n, j) + j * std::log(q) + (n - j) * std::log1p(-q));
        }
    }
    return DensityMatrix::trusted(ComplexMatrix::diagonal(weights),
                                  Dims{static_cast<std::size_t>(n) + 1});
}

LossMixture two_arm_loss_mixture(double t_a, double t_b) {
    require_probability(t_a, "t_a");
    require_probability(t_b, "t_b");
    const double p11 = t_a * t_b;
    const double p01 = (1.0 - t_a) * t_b;
    const double p10 = t_a * (1.0 - t_b);
    const double p00 = (1.0 - t_a) * (1.0 - t_b);
    // Basis |n_A n_B>: index 2 n_A + n_B.
    auto state = DensityMatrix::trusted(ComplexMatrix::diagonal({p00, p01, p10, p11}), Dims{2, 2});
    return LossMixture{p11, p01, p10, p00, std::move(state)};
}

std::vector<std::string> check_fso_params(const FsoParams& p) {
    require_positive(p.alpha_db_per_km, "alpha");
    require_positive(p.wavelength_m, "wavelength");
    require_positive(p.waist_m, "waist");
    require_positive(p.aperture_radius_m, "aperture radius");
    std::vector<std::string> warnings;
    if (p.waist_m < 10.0 * p.wavelength_m) {
        warnings.push_back("waist is less than ten wavelengths; the paraxial beam model is "
                           "unreliable");
    }
    return warnings;
}

double rayleigh_range(double waist_m, double wavelength_m) {
    require_positive(waist_m, "waist");
    require_positive(wavelength_m, "wavelength");
    return std::numbers::pi * waist_m * waist_m / wavelength_m;
}

double beam_waist(double z_m, const FsoParams& p) {
    require_distance(z_m);
    const double ratio = z_m / rayleigh_range(p.waist_m, p.wavelength_m);
    return p.waist_m * std::sqrt(1.0 + ratio * ratio);
}

namespace {

// 2 a^2 / w(z)^2, the exponent in the clipped-Gaussian efficiency.
double clipping_exponent(double z_m, const FsoParams& p) {
    require_positive(p.aperture_radius_m, "aperture radius");
    const double w = beam_waist(z_m, p);
    return 2.0 * p.aperture_radius_m * p.aperture_radius_m / (w * w);
}

}  // namespace

double geometrical_efficiency(double z_m, const FsoParams& p) {
    return -std::expm1(-clipping_exponent(z_m, p));
}

double atmospheric_transmittance(double z_m, double alpha_db_per_km,
                                 AttenuationConvention convention) {
    require_distance(z_m);
    if (!(alpha_db_per_km >= 0.0)) {
        throw UsageError("alpha must be non-negative");
    }
    const double z_km = z_m / 1000.0;
    switch (convention) {
        case AttenuationConvention::DecibelConsistent:
            return std::pow(10.0, -alpha_db_per_km * z_km / 10.0);
        case AttenuationConvention::LiteralExponent:
            return std::pow(10.0, -alpha_db_per_km * z_km);
    }
    return 1.0;
}

LinkBudgetPoint fso_transmittance(double z_m, const FsoParams& p, bool include_geo,
                                  AttenuationConvention convention) {
    LinkBudgetPoint pt;
    pt.z_m = z_m;
    pt.atm_transmittance = atmospheric_transmittance(z_m, p.alpha_db_per_km, convention);
    const double z_km = z_m / 1000.0;
    const double atm_db = convention == AttenuationConvention::LiteralExponent
                              ? 10.0 * p.alpha_db_per_km * z_km
                              : p.alpha_db_per_km * z_km;
    // The geometric term goes through log1p so it survives when eta_geo is within an ulp of 1.
    double geo_db = 0.0;
    if (include_geo) {
        const double x = clipping_exponent(z_m, p);
        pt.geo_efficiency = -std::expm1(-x);
        geo_db = -10.0 / std::numbers::ln10 * std::log1p(-std::exp(-x));
    } else {
        pt.geo_efficiency = 1.0;
    }
    pt.total_loss_db = atm_db + geo_db;
    // -0.0 at z = 0 would print as "-0".
    if (pt.total_loss_db == 0.0) pt.total_loss_db = 0.0;
    return pt;
}

std::vector<LinkBudgetPoint> link_budget_curve(const FsoParams& p, double z_max_m, double step_m,
                                               bool include_geo,
                                               AttenuationConvention convention) {
    if (!(z_max_m > 0.0)) {
        throw UsageError("link_budget_curve: z_max must be positive");
    }
    if (!(step_m > 0.0 && step_m <= z_max_m)) {
        throw UsageError("link_budget_curve: step must lie in (0, z_max]");
    }
    const auto full_steps = static_cast<std::size_t>(std::floor(z_max_m / step_m * (1.0 + 1e-12)));
    std::vector<LinkBudgetPoint> out;
    out.reserve(full_steps + 2);
    for (std::size_t k = 0; k <= full_steps; ++k) {
        const double z = std::min(static_cast<double>(k) * step_m, z_max_m);
        out.push_back(fso_transmittance(z, p, include_geo, convention));
    }
    if (z_max_m - out.back().z_m > 1e-9 * z_max_m) {
        out.push_back(fso_transmittance(z_max_m, p, include_geo, convention));
    }
    return out;
}

std::string format_g9(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

std::string link_budget_csv(const std::vector<LinkBudgetPoint>& points) {
    std::ostringstream os;
    os << "z_m,atm_T,geo_eta,loss_db\n";
    for (const auto& pt : points) {
        os << format_g9(pt.z_m) << ',' << format_g9(pt.atm_transmittance) << ','
           << format_g9(pt.geo_efficiency) << ',' << format_g9(pt.total_loss_db) << '\n';
    }
    return os.str();
}

}  // namespace qloss
