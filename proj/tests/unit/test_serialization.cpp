#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qloss/errors.hpp"
#include "qloss/serialization.hpp"

namespace qloss {
namespace {

TEST(Serialization, DensityLayout) {
    const auto j = to_json(bell_state(BellKind::PhiPlus));
    EXPECT_EQ(j.at("dims"), nlohmann::json::array({2, 2}));
    ASSERT_EQ(j.at("re").size(), 4u);
    EXPECT_EQ(j.at("re")[0][3].get<double>(), 0.5);
    EXPECT_EQ(j.at("im")[0][3].get<double>(), 0.0);
    EXPECT_EQ(j.size(), 3u);
}

TEST(Serialization, DensityRoundTripProperty) {
    testing::Random rnd(12);
    for (int trial = 0; trial < 25; ++trial) {
        const DensityMatrix rho(rnd.density(4), Dims{2, 2});
        const auto back = density_from_json(nlohmann::json::parse(to_json(rho).dump()));
        EXPECT_EQ(back.matrix(), rho.matrix());
        EXPECT_EQ(back.dims(), rho.dims());
    }
}

TEST(Serialization, RejectsInvalidDensity) {
    nlohmann::json j{{"dims", {2}}, {"re", {{0.6, 0}, {0, 0.6}}}, {"im", {{0, 0}, {0, 0}}}};
    EXPECT_THROW(density_from_json(j), ContractError);
    j["re"] = {{1.0, 0.0}, {0.0}};
    EXPECT_THROW(density_from_json(j), DimensionError);
}

TEST(Serialization, ChannelCarriesReport) {
    const auto j = to_json(loss_channel(0.3));
    EXPECT_EQ(j.at("operators").size(), 2u);
    EXPECT_TRUE(j.at("cptp").at("is_valid").get<bool>());
    EXPECT_EQ(j.at("d_in"), 2);
    const auto k0 = matrix_from_json(j.at("operators")[0]);
    EXPECT_EQ(k0, loss_channel(0.3).operators()[0]);
}

TEST(Serialization, PipelineReports) {
    const auto flawed = audit::to_json(audit::oe_flawed_pipeline(0.5));
    EXPECT_FALSE(flawed.at("is_cptp").get<bool>());
    EXPECT_FALSE(flawed.at("reduced_state_physical").get<bool>());
    EXPECT_NEAR(flawed.at("output_trace").get<double>(), 0.25, 1e-15);

    const auto correct = audit::to_json(audit::correct_loss_pipeline(0.0, 0.0));
    EXPECT_TRUE(correct.at("coincidence_state").is_null());
}

}  // namespace
}  // namespace qloss
