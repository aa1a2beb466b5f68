#include "qloss/serialization.hpp"

#include "qloss/errors.hpp"

namespace qloss {

using nlohmann::json;

namespace {

json part(const ComplexMatrix& m, bool imag) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(imag ? m(r, c).imag() : m(r, c).real());
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

json to_json(const ComplexMatrix& m) { return json{{"re", part(m, false)}, {"im", part(m, true)}}; }

ComplexMatrix matrix_from_json(const json& j) {
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (!re.is_array() || re.empty() || !re[0].is_array() || re[0].empty()) {
        throw DimensionError("matrix_from_json: 're' must be a non-empty array of rows");
    }
    const std::size_t rows = re.size();
    const std::size_t cols = re[0].size();
    if (im.size() != rows) {
        throw DimensionError("matrix_from_json: 're' and 'im' row counts differ");
    }
    std::vector<complex> entries;
    entries.reserve(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (re[r].size() != cols || im[r].size() != cols) {
            throw DimensionError("matrix_from_json: ragged rows");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            entries.emplace_back(re[r][c].get<double>(), im[r][c].get<double>());
        }
    }
    return ComplexMatrix(rows, cols, std::move(entries));
}

json to_json(const DensityMatrix& rho) {
    json j = to_json(rho.matrix());
    return json{{"dims", rho.dims().values()}, {"re", j["re"]}, {"im", j["im"]}};
}

DensityMatrix density_from_json(const json& j) {
    return DensityMatrix(matrix_from_json(j), Dims(j.at("dims").get<std::vector<std::size_t>>()));
}

json to_json(const CptpReport& r) {
    return json{{"completeness_defect", r.completeness_defect},
                {"tolerance", r.tolerance},
                {"is_trace_preserving", r.is_trace_preserving},
                {"is_valid", r.is_valid}};
}

json to_json(const KrausChannel& c) {
    json ops = json::array();
    for (const auto& k : c.operators()) ops.push_back(to_json(k));
    return json{{"d_in", c.d_in()},
                {"d_out", c.d_out()},
                {"operators", std::move(ops)},
                {"cptp", to_json(validate_cptp(c))}};
}

json to_json(const LinkBudgetPoint& p) {
    return json{{"z_m", p.z_m},
                {"atm_T", p.atm_transmittance},
                {"geo_eta", p.geo_efficiency},
                {"loss_db", p.total_loss_db}};
}

namespace audit {

json to_json(const Finding& f) {
    return json{{"code", f.code}, {"message", f.message}, {"value", f.value}};
}

namespace {
json findings(const std::vector<Finding>& notes) {
    json out = json::array();
    for (const auto& f : notes) out.push_back(to_json(f));
    return out;
}

json optional_state(const std::optional<DensityMatrix>& s) {
    return s ? qloss::to_json(*s) : json(nullptr);
}
}  // namespace

json to_json(const PipelineReport& r) {
    return json{{"eta", r.eta},
                {"is_cptp", r.is_cptp},
                {"cptp_defect", r.cptp_defect},
                {"output_trace", r.output_trace},
                {"reduced_state", qloss::to_json(r.reduced_state)},
                {"reduced_state_physical", r.reduced_state.physical()},
                {"chsh_normalized", r.chsh_normalized},
                {"chsh_trace_weighted", r.chsh_trace_weighted},
                {"notes", findings(r.notes)}};
}

json to_json(const CorrectPipelineReport& r) {
    return json{{"t_a", r.t_a},
                {"t_b", r.t_b},
                {"is_cptp", r.is_cptp},
                {"cptp_defect", r.cptp_defect},
                {"output_trace", r.output_trace},
                {"sectors",
                 {{"p11", r.sectors.p11},
                  {"p01", r.sectors.p01},
                  {"p10", r.sectors.p10},
                  {"p00", r.sectors.p00}}},
                {"coincidence_state", optional_state(r.coincidence)},
                {"arm_a_given_b_lost", optional_state(r.arm_a_given_b_lost)},
                {"arm_b_given_a_lost", optional_state(r.arm_b_given_a_lost)},
                {"conditional_chsh", r.conditional_chsh},
                {"s_eff", r.s_eff},
                {"notes", findings(r.notes)}};
}

json to_json(const Comparison& c) {
    json rows = json::array();
    for (std::size_t k = 0; k < c.rows.size(); ++k) {
        const auto& row = c.rows[k];
        rows.push_back(json{{"eta", row.eta},
                            {"first_case_chsh", row.first_case_chsh},
                            {"flawed_trace", row.flawed_trace},
                            {"flawed_chsh_weighted", row.flawed_chsh_weighted},
                            {"coincidence_p", row.coincidence_p},
                            {"conditional_chsh", row.conditional_chsh},
                            {"s_eff", row.s_eff},
                            {"first_case", to_json(c.first_case[k])},
                            {"flawed", to_json(c.flawed[k])},
                            {"correct", to_json(c.correct[k])}});
    }
    return json{{"rows", std::move(rows)}};
}

}  // namespace audit

}  // namespace qloss
