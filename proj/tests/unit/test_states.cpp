#include <gtest/gtest.h>

#include <variant>

#include "oracles.hpp"
#include "qloss/errors.hpp"
#include "qloss/metrics.hpp"
#include "qloss/states.hpp"

namespace qloss {
namespace {

constexpr BellKind kAllBell[] = {BellKind::PhiPlus, BellKind::PhiMinus, BellKind::PsiPlus,
                                 BellKind::PsiMinus};

TEST(BellState, PhiPlusMatrix) {
    const ComplexMatrix want{{0.5, 0, 0, 0.5}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0.5, 0, 0, 0.5}};
    const auto phi = bell_state(BellKind::PhiPlus);
    EXPECT_EQ(phi.matrix(), want);
    EXPECT_EQ(phi.dims(), (Dims{2, 2}));
    EXPECT_TRUE(phi.physical());
}

TEST(BellState, PsiPlusSupport) {
    const auto psi = bell_state(BellKind::PsiPlus).matrix();
    EXPECT_EQ(psi(1, 1), complex(0.5));
    EXPECT_EQ(psi(2, 2), complex(0.5));
    EXPECT_EQ(psi(1, 2), complex(0.5));
    EXPECT_EQ(psi(2, 1), complex(0.5));
    EXPECT_EQ(psi(0, 0), complex(0.0));
    EXPECT_EQ(psi(3, 3), complex(0.0));
}

TEST(BellState, AllPureAndMutuallyOrthogonal) {
    for (auto a : kAllBell) {
        EXPECT_NEAR(purity(bell_state(a)), 1.0, 1e-12);
        for (auto b : kAllBell) {
            const double overlap = (bell_state(a).matrix() * bell_state(b).matrix()).trace().real();
            EXPECT_NEAR(overlap, a == b ? 1.0 : 0.0, 1e-12);
        }
    }
}

TEST(BellState, EitherMarginalIsMaximallyMixed) {
    const auto half = ComplexMatrix::identity(2) * complex(0.5);
    for (auto kind : kAllBell) {
        const auto rho = bell_state(kind);
        for (std::size_t keep : {0u, 1u}) {
            EXPECT_LE(max_abs_diff(partial_trace(rho.matrix(), rho.dims(), {keep}), half), 1e-15);
        }
    }
}

TEST(FockState, Projectors) {
    EXPECT_EQ(fock_state(1).matrix(), ComplexMatrix::diagonal({0, 1}));
    EXPECT_EQ(fock_state(0).matrix(), ComplexMatrix::diagonal({1, 0}));
    EXPECT_DOUBLE_EQ(purity(fock_state(0)), 1.0);
    EXPECT_DOUBLE_EQ(purity(fock_state(1)), 1.0);
    EXPECT_THROW(fock_state(2), UsageError);
    EXPECT_THROW(fock_state(-1), UsageError);
}

TEST(CompositeState, PureProductOfPureFactors) {
    const auto c = composite_state(bell_state(BellKind::PhiPlus), fock_state(1), fock_state(1));
    EXPECT_EQ(c.dims(), (Dims{2, 2, 2, 2}));
    EXPECT_NEAR(c.trace(), 1.0, 1e-15);
    const auto ev = hermitian_eigenvalues(c.matrix());
    int nonzero = 0;
    for (double v : ev) nonzero += std::abs(v) > 1e-12;
    EXPECT_EQ(nonzero, 1);
}

TEST(CompositeState, TracingFockFactorsReturnsPolarization) {
    const auto pol = bell_state(BellKind::PsiMinus);
    const auto c = composite_state(pol, fock_state(0), fock_state(1));
    EXPECT_EQ(partial_trace(c.matrix(), c.dims(), {0, 1}), pol.matrix());
}

TEST(CompositeState, LossySignalFactorReproducesLossAction) {
    const double eta = 0.3;
    const DensityMatrix lossy(ComplexMatrix::diagonal({1 - eta, eta}), Dims{2});
    const auto c = composite_state(bell_state(BellKind::PhiPlus), lossy, fock_state(1));
    const auto fock = partial_trace(c.matrix(), c.dims(), {2, 3});
    EXPECT_LE(max_abs_diff(fock, ComplexMatrix::diagonal({0, 1 - eta, 0, eta})), 1e-15);
}

TEST(CompositeState, PurityIsMultiplicative) {
    testing::Random rnd(4);
    for (int trial = 0; trial < 10; ++trial) {
        const DensityMatrix pol(rnd.density(4), Dims{2, 2});
        const DensityMatrix fs(rnd.density(2), Dims{2});
        const DensityMatrix fi(rnd.density(2), Dims{2});
        EXPECT_NEAR(purity(composite_state(pol, fs, fi)), purity(pol) * purity(fs) * purity(fi),
                    1e-12);
    }
}

TEST(CompositeState, DimensionMismatch) {
    EXPECT_THROW(composite_state(fock_state(1), fock_state(1), fock_state(1)), DimensionError);
    EXPECT_THROW(composite_state(bell_state(BellKind::PhiPlus), bell_state(BellKind::PhiPlus),
                                 fock_state(1)),
                 DimensionError);
}

TEST(ValidateDensity, MaximallyMixedIsValid) {
    const auto v = validate_density(ComplexMatrix::identity(2) * complex(0.5), Dims{2});
    ASSERT_TRUE(std::holds_alternative<DensityMatrix>(v));
}

TEST(ValidateDensity, ReportsTraceDefect) {
    const auto v = validate_density(ComplexMatrix::diagonal({0.6, 0.6}), Dims{2});
    ASSERT_TRUE(std::holds_alternative<ViolationReport>(v));
    const auto& r = std::get<ViolationReport>(v);
    ASSERT_EQ(r.violations.size(), 1u);
    EXPECT_EQ(r.violations[0].invariant, DensityInvariant::UnitTrace);
    EXPECT_NEAR(r.violations[0].measured, 1.2, 1e-15);
}

TEST(ValidateDensity, UnnormalizedAuditState) {
    const double eta = 0.5;
    const auto m = kron(bell_state(BellKind::PhiPlus).matrix(), ComplexMatrix::basis_op(4, 3, 3)) *
                   complex(eta * eta);
    const auto v = validate_density(m, Dims{2, 2, 2, 2});
    ASSERT_TRUE(std::holds_alternative<ViolationReport>(v));
    const auto& r = std::get<ViolationReport>(v);
    ASSERT_EQ(r.violations.size(), 1u);
    EXPECT_EQ(r.violations[0].invariant, DensityInvariant::UnitTrace);
    EXPECT_NEAR(r.violations[0].measured, 0.25, 1e-15);
}

TEST(ValidateDensity, ReportsEveryViolation) {
    // Not Hermitian and wrong trace.
    const ComplexMatrix m{{1, 0.5}, {0, 1}};
    const auto r = std::get<ViolationReport>(validate_density(m, Dims{2}));
    ASSERT_EQ(r.violations.size(), 2u);
    EXPECT_EQ(r.violations[0].invariant, DensityInvariant::Hermitian);
    EXPECT_EQ(r.violations[1].invariant, DensityInvariant::UnitTrace);

    const auto neg = std::get<ViolationReport>(validate_density(ComplexMatrix::diagonal({1.5, -0.5}), Dims{2}));
    ASSERT_EQ(neg.violations.size(), 1u);
    EXPECT_EQ(neg.violations[0].invariant, DensityInvariant::PositiveSemidefinite);
    EXPECT_DOUBLE_EQ(neg.violations[0].measured, -0.5);
}

TEST(ValidateDensity, InconsistentDimsThrow) {
    EXPECT_THROW(validate_density(ComplexMatrix::identity(4), Dims{2, 3}), DimensionError);
    EXPECT_THROW(DensityMatrix(ComplexMatrix::diagonal({0.6, 0.6}), Dims{2}), ContractError);
}

TEST(DensityMatrix, UncheckedIsFlagged) {
    const auto rho = DensityMatrix::unchecked(ComplexMatrix::diagonal({0.2, 0.2}), Dims{2});
    EXPECT_FALSE(rho.physical());
    EXPECT_TRUE(bell_state(BellKind::PhiPlus).physical());
    EXPECT_FALSE(bell_state(BellKind::PhiPlus).as_nonphysical().physical());
}

TEST(WernerState, Endpoints) {
    EXPECT_EQ(werner_state(1.0).matrix(), bell_state(BellKind::PhiPlus).matrix());
    EXPECT_LE(max_abs_diff(werner_state(0.0).matrix(), ComplexMatrix::identity(4) * complex(0.25)),
              1e-16);
    EXPECT_THROW(werner_state(1.1), UsageError);
}

}  // namespace
}  // namespace qloss
