#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <unistd.h>

#include "qloss/qloss.hpp"

namespace qloss::cli {

namespace {

enum class Format { Csv, Json };

struct Output {
    std::string path;
    Format format = Format::Csv;
};

void add_output_options(CLI::App* cmd, Output& o, Format default_format) {
    o.format = default_format;
    cmd->add_option("-o,--output", o.path, "Write to this file instead of stdout");
    cmd->add_option("--format", o.format, "Output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{{"csv", Format::Csv}, {"json", Format::Json}},
            CLI::ignore_case));
}

// Temp file in the destination directory, then rename over the target.
void emit(const Output& o, const std::string& data, std::ostream& out) {
    if (o.path.empty()) {
        out << data;
        return;
    }
    const std::filesystem::path target(o.path);
    std::filesystem::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        f << data;
        f.flush();
        if (!f) throw std::runtime_error("failed writing " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

std::string series_label(double aperture) { return "aperture=" + format_g9(aperture); }

struct LinkBudgetArgs {
    FsoParams fso;
    std::vector<double> apertures{0.2, 0.5};
    double zmax = 50000.0;
    double step = 100.0;
    bool literal = false;
    Output output;
};

std::string run_link_budget(const LinkBudgetArgs& a, std::ostream& err) {
    const auto convention = a.literal ? AttenuationConvention::LiteralExponent
                                      : AttenuationConvention::DecibelConsistent;
    std::vector<std::pair<std::string, std::vector<LinkBudgetPoint>>> series;
    FsoParams p = a.fso;
    check_fso_params(p);
    series.emplace_back("baseline", link_budget_curve(p, a.zmax, a.step, false, convention));
    for (double aperture : a.apertures) {
        p.aperture_radius_m = aperture;
        for (const auto& w : check_fso_params(p)) err << "warning: " << w << '\n';
        series.emplace_back(series_label(aperture),
                            link_budget_curve(p, a.zmax, a.step, true, convention));
    }

    if (a.output.format == Format::Json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& [name, points] : series) {
            nlohmann::json pts = nlohmann::json::array();
            for (const auto& pt : points) pts.push_back(to_json(pt));
            j.push_back({{"series", name}, {"points", std::move(pts)}});
        }
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "z_m,atm_T,geo_eta,loss_db,series\n";
    for (const auto& [name, points] : series) {
        for (const auto& pt : points) {
            os << format_g9(pt.z_m) << ',' << format_g9(pt.atm_transmittance) << ','
               << format_g9(pt.geo_efficiency) << ',' << format_g9(pt.total_loss_db) << ','
               << name << '\n';
        }
    }
    return os.str();
}

struct FockDecayArgs {
    double alpha = 0.07;
    int photons = 1;
    double lmax = 100000.0;
    double step = 1000.0;
    Output output;
};

std::string run_fock_decay(const FockDecayArgs& a) {
    if (!(a.lmax > 0.0) || !(a.step > 0.0 && a.step <= a.lmax)) {
        throw UsageError("fock-decay: need lmax > 0 and 0 < step <= lmax");
    }
    const auto steps = static_cast<std::size_t>(std::floor(a.lmax / a.step * (1.0 + 1e-12)));
    std::vector<double> lengths;
    for (std::size_t k = 0; k <= steps; ++k) lengths.push_back(std::min(k * a.step, a.lmax));
    if (a.lmax - lengths.back() > 1e-9 * a.lmax) lengths.push_back(a.lmax);

    std::ostringstream os;
    nlohmann::json rows = nlohmann::json::array();
    if (a.output.format == Format::Csv) os << "L_m,q,purity,entropy_bits\n";
    for (double length_m : lengths) {
        const FiberParams fp{a.alpha, length_m / 1000.0, a.photons};
        const auto rho = fock_decay_state(fp);
        const double q = survival_probability(fp.alpha_db_per_km, fp.length_km);
        const double pur = purity(rho);
        const double ent = von_neumann_entropy(rho);
        if (a.output.format == Format::Csv) {
            os << format_g9(length_m) << ',' << format_g9(q) << ',' << format_g9(pur) << ','
               << format_g9(ent) << '\n';
        } else {
            rows.push_back({{"L_m", length_m}, {"q", q}, {"purity", pur}, {"entropy_bits", ent}});
        }
    }
    if (a.output.format == Format::Json) return rows.dump(2) + "\n";
    return os.str();
}

struct AuditArgs {
    std::vector<double> etas;
    Output output;
};

std::string run_audit(const AuditArgs& a) {
    const auto cmp = audit::compare_report(a.etas);
    if (a.output.format == Format::Json) return audit::to_json(cmp).dump(2) + "\n";
    return audit::comparison_csv(cmp);
}

struct ChannelArgs {
    std::string channel;
    double param = 1.0;
    double tol = kCptpTolerance;
    Output output;
};

std::string run_channel_validate(const ChannelArgs& a) {
    std::optional<KrausChannel> c;
    if (a.channel == "loss") c = loss_channel(a.param);
    else if (a.channel == "identity") c = identity_channel(2);
    else if (a.channel == "depolarizing") c = depolarizing_channel(a.param);
    else if (a.channel == "polarized-loss") c = polarized_photon_loss_channel(a.param);
    else if (a.channel == "flawed-signal") c = KrausChannel({audit::flawed_signal_operator(a.param)});
    else if (a.channel == "flawed-total") c = KrausChannel({audit::flawed_total_operator(a.param)});
    else throw UsageError("channel-validate: unknown channel '" + a.channel + "'");

    const CptpReport r = validate_cptp(*c, a.tol);
    nlohmann::json j = to_json(*c);
    j["cptp"] = to_json(r);
    j["channel"] = a.channel;
    j["param"] = a.param;
    j["is_valid"] = r.is_valid;
    j["completeness_defect"] = r.completeness_defect;
    return j.dump(2) + "\n";
}

struct StateArgs {
    std::string state;
    double param = 1.0;
    double length_km = 0.0;
    double alpha = 0.07;
    int photons = 1;
    Output output;
};

std::string run_state_metrics(const StateArgs& a) {
    auto make = [&]() -> DensityMatrix {
        if (a.state == "phi+") return bell_state(BellKind::PhiPlus);
        if (a.state == "phi-") return bell_state(BellKind::PhiMinus);
        if (a.state == "psi+") return bell_state(BellKind::PsiPlus);
        if (a.state == "psi-") return bell_state(BellKind::PsiMinus);
        if (a.state == "werner") return werner_state(a.param);
        if (a.state == "mixed-qubit") return maximally_mixed(Dims{2});
        if (a.state == "mixed-pair") return maximally_mixed(Dims{2, 2});
        if (a.state == "fock0") return fock_state(0);
        if (a.state == "fock1") return fock_state(1);
        if (a.state == "fock-decay") return fock_decay_state({a.alpha, a.length_km, a.photons});
        if (a.state == "composite") return audit::initial_composite_state();
        throw UsageError("state-metrics: unknown state '" + a.state + "'");
    };
    const DensityMatrix rho = make();
    nlohmann::json j{{"state", a.state},
                     {"density", to_json(rho)},
                     {"purity", purity(rho)},
                     {"entropy_bits", von_neumann_entropy(rho)}};
    if (rho.dims() == Dims{2, 2}) j["chsh_max"] = chsh_max(rho);
    return j.dump(2) + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Photon-loss channel simulation, FSO link budgets and loss-model audits", "qloss"};
    app.require_subcommand(1);

    LinkBudgetArgs lb;
    auto* lb_cmd = app.add_subcommand("link-budget", "Loss vs distance for a horizontal FSO link");
    lb_cmd->add_option("--alpha", lb.fso.alpha_db_per_km, "Attenuation coefficient in dB/km")
        ->capture_default_str();
    lb_cmd->add_option("--wavelength", lb.fso.wavelength_m, "Wavelength in m")->capture_default_str();
    lb_cmd->add_option("--waist", lb.fso.waist_m, "Initial beam waist w0 in m")->capture_default_str();
    lb_cmd->add_option("--aperture", lb.apertures, "Receiver aperture radius in m (repeatable)")
        ->capture_default_str();
    lb_cmd->add_option("--zmax", lb.zmax, "Maximum distance in m")->capture_default_str();
    lb_cmd->add_option("--step", lb.step, "Grid step in m")->capture_default_str();
    lb_cmd->add_flag("--literal-exponent", lb.literal,
                     "Use 10^(-alpha z) for the atmospheric factor instead of 10^(-alpha z / 10)");
    add_output_options(lb_cmd, lb.output, Format::Csv);

    FockDecayArgs fd;
    auto* fd_cmd = app.add_subcommand("fock-decay", "Purity and entropy of a decaying Fock state");
    fd_cmd->add_option("--alpha", fd.alpha, "Attenuation coefficient in dB/km")->capture_default_str();
    fd_cmd->add_option("-N,--photons", fd.photons, "Initial photon number")->capture_default_str();
    fd_cmd->add_option("--lmax", fd.lmax, "Maximum length in m")->capture_default_str();
    fd_cmd->add_option("--step", fd.step, "Grid step in m")->capture_default_str();
    add_output_options(fd_cmd, fd.output, Format::Csv);

    AuditArgs au;
    auto* au_cmd = app.add_subcommand("audit-chsh", "Compare the criticized and corrected loss models");
    au_cmd->add_option("--eta", au.etas, "Transmittance in (0, 1] (repeatable)")->required();
    add_output_options(au_cmd, au.output, Format::Csv);

    ChannelArgs ch;
    auto* ch_cmd = app.add_subcommand("channel-validate", "Completeness check of a built-in channel");
    ch_cmd->add_option("--channel", ch.channel,
                       "loss | identity | depolarizing | polarized-loss | flawed-signal | flawed-total")
        ->required();
    ch_cmd->add_option("--param", ch.param, "Channel parameter (eta, p or t)")->capture_default_str();
    ch_cmd->add_option("--tol", ch.tol, "Completeness tolerance")->capture_default_str();
    add_output_options(ch_cmd, ch.output, Format::Json);

    StateArgs st;
    auto* st_cmd = app.add_subcommand("state-metrics", "Purity, entropy and CHSH of a built-in state");
    st_cmd->add_option("--state", st.state,
                       "phi+ | phi- | psi+ | psi- | werner | mixed-qubit | mixed-pair | fock0 | "
                       "fock1 | fock-decay | composite")
        ->required();
    st_cmd->add_option("--param", st.param, "Werner weight w")->capture_default_str();
    st_cmd->add_option("--length", st.length_km, "Fiber length in km (fock-decay)")->capture_default_str();
    st_cmd->add_option("--alpha", st.alpha, "Attenuation in dB/km (fock-decay)")->capture_default_str();
    st_cmd->add_option("-N,--photons", st.photons, "Photon number (fock-decay)")->capture_default_str();
    add_output_options(st_cmd, st.output, Format::Json);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*lb_cmd) emit(lb.output, run_link_budget(lb, err), out);
        else if (*fd_cmd) emit(fd.output, run_fock_decay(fd), out);
        else if (*au_cmd) emit(au.output, run_audit(au), out);
        else if (*ch_cmd) emit(ch.output, run_channel_validate(ch), out);
        else if (*st_cmd) emit(st.output, run_state_metrics(st), out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitComputation;
    }
    return kExitOk;
}

}  // namespace qloss::cli
