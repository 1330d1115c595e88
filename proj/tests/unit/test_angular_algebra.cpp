#include "e1am/angular_algebra.hpp"

#include <gtest/gtest.h>

using namespace e1am;

namespace {

const radial::RadialModel& model100() {
  static const radial::RadialModel model(radial::CavityConfig::from_kr(100.0));
  return model;
}

}  // namespace

TEST(JOperators, JzEigenstatesAndHermiticity) {
  auto space = photon_mode_space();
  const auto j = j_operators(space);
  EXPECT_TRUE(j.x.is_hermitian());
  EXPECT_TRUE(j.y.is_hermitian());
  EXPECT_TRUE(j.z.is_hermitian());
  for (int m : {+1, 0, -1}) {
    const auto state = fock_state(space, {{ModeLabel{m}, 1}});
    const Vector applied = apply(j.z, state);
    EXPECT_LT((applied - static_cast<double>(m) * state.amplitudes()).norm(), kExactTol);
  }
}

TEST(JOperators, CommutatorAndCasimir) {
  auto space = photon_mode_space();
  const auto j = j_operators(space);
  const auto residual = commutator(j.x, j.y) - Complex(0.0, 1.0) * j.z;
  EXPECT_LT(safe_max_abs(residual), kExactTol);

  const auto j2 = j.squared();
  for (int m : {+1, 0, -1}) {
    const auto state = fock_state(space, {{ModeLabel{m}, 1}});
    EXPECT_NEAR(expectation(state, j2).real(), 2.0, kExactTol);
    EXPECT_NEAR(std::abs(expectation(state, j.x)), 0.0, kExactTol);
    EXPECT_NEAR(std::abs(expectation(state, j.y)), 0.0, kExactTol);
    EXPECT_NEAR(expectation(state, j.z).real(), m, kExactTol);
  }
}

TEST(JOperators, WrongModeSetRejected) {
  EXPECT_THROW(j_operators(build_space({ModeLabel{1}, ModeLabel{0}}, 2)), std::invalid_argument);
  EXPECT_THROW(j_operators(build_space({ModeLabel{1}, ModeLabel{0}, ModeLabel{2}}, 2)), std::invalid_argument);
  EXPECT_THROW(su3_generators(build_space({ModeLabel{0}}, 2)), std::invalid_argument);
  // A tagged family is accepted as long as all three projections share it.
  const auto modes = projection_modes(2);
  EXPECT_NO_THROW(j_operators(build_space({modes.begin(), modes.end()}, 2)));
}

TEST(VerifySu2, ExactPerturbedAndZero) {
  auto space = photon_mode_space();
  const auto exact = verify_su2(j_operators(space));
  EXPECT_TRUE(exact.pass);
  EXPECT_LT(exact.max_residual, 1e-12);
  EXPECT_FALSE(exact.degenerate);

  auto j = j_operators(space);
  Matrix bumped = j.x.matrix();
  bumped(1, 2) += 0.01;
  const AmOperatorTriple perturbed{OperatorMatrix(space, bumped), j.y, j.z};
  const auto broken = verify_su2(perturbed);
  EXPECT_GT(broken.max_residual, 1e-3);
  EXPECT_FALSE(broken.pass);

  const auto zero = zero_operator(space);
  const auto degenerate = verify_su2({zero, zero, zero});
  EXPECT_EQ(degenerate.max_residual, 0.0);
  EXPECT_TRUE(degenerate.degenerate);
}

TEST(VerifySu2, HoldsOnEveryCutoff) {
  for (int cutoff : {1, 2, 3, 4}) EXPECT_TRUE(verify_su2(j_operators(photon_mode_space(cutoff))).pass) << cutoff;
}

TEST(AlgebraReport, Json) {
  const auto json = to_json(verify_su2(j_operators(photon_mode_space())));
  EXPECT_TRUE(json.contains("identity"));
  EXPECT_TRUE(json.contains("max_residual"));
  EXPECT_EQ(json["tolerance"].get<double>(), 1e-12);
  EXPECT_TRUE(json["pass"].get<bool>());
}

TEST(Su3, DependenceHermiticityAndIndependence) {
  auto space = photon_mode_space();
  const auto set = su3_generators(space);
  const auto sum = set.raw_diagonal[0] + set.raw_diagonal[1] + set.raw_diagonal[2];
  EXPECT_EQ(sum.matrix().cwiseAbs().maxCoeff(), 0.0);

  const auto gens = set.generators();
  ASSERT_EQ(gens.size(), 8u);
  for (const auto& g : gens) EXPECT_EQ((g.matrix() - g.matrix().adjoint()).cwiseAbs().maxCoeff(), 0.0);

  const auto blocks = su3_single_photon_blocks();
  Eigen::MatrixXd stacked(18, 8);
  for (std::size_t g = 0; g < blocks.size(); ++g) {
    EXPECT_NEAR(std::abs(blocks[g].trace()), 0.0, kExactTol);
    for (Eigen::Index i = 0; i < 9; ++i) {
      stacked(i, static_cast<Eigen::Index>(g)) = blocks[g](i % 3, i / 3).real();
      stacked(9 + i, static_cast<Eigen::Index>(g)) = blocks[g](i % 3, i / 3).imag();
    }
  }
  EXPECT_EQ(Eigen::FullPivLU<Eigen::MatrixXd>(stacked).rank(), 8);
}

TEST(Su3, CyclicLoweringConvention) {
  // (a+_{-1} a_{+1} + h.c.)/2: the m = -1 generator links -1 and +1.
  const auto blocks = su3_single_photon_blocks();
  const Eigen::Matrix3cd& minus_re = blocks[4];
  EXPECT_NEAR(minus_re(2, 0).real(), 0.5, kExactTol);
  EXPECT_NEAR(minus_re(0, 2).real(), 0.5, kExactTol);
  // (n_+ - n_0) on |1_+>.
  EXPECT_NEAR(blocks[0](0, 0).real(), 1.0, kExactTol);
  EXPECT_NEAR(blocks[0](1, 1).real(), -1.0, kExactTol);
}

TEST(Density, OperatorsAreScaledJ) {
  auto triple = std::make_shared<const AmOperatorTriple>(j_operators(photon_mode_space()));
  for (double kr : {0.0, 0.5, 3.0, 50.0}) {
    const auto s = density_operator(DensityKind::spin, kr, model100(), triple);
    const auto l = density_operator(DensityKind::oam, kr, model100(), triple);
    EXPECT_DOUBLE_EQ(s.scale(), model100().f_spin(kr));
    EXPECT_DOUBLE_EQ(l.scale(), model100().f_oam(kr));
    const Matrix expected = model100().f_spin(kr) * triple->z.matrix();
    EXPECT_EQ((s.component(Axis::z).matrix() - expected).cwiseAbs().maxCoeff(), 0.0);
  }
  EXPECT_THROW(density_operator(DensityKind::spin, -1.0, model100(), triple), std::invalid_argument);
}

TEST(Density, CommutatorIdentities) {
  const std::array<std::pair<DensityKind, DensityKind>, 4> pairs = {{
      {DensityKind::spin, DensityKind::spin},
      {DensityKind::oam, DensityKind::oam},
      {DensityKind::oam, DensityKind::spin},
      {DensityKind::spin, DensityKind::oam},
  }};
  for (double kr : {0.5, 3.0, 5.0, 50.0})
    for (const auto& [a, b] : pairs) {
      const auto report = density_commutator_check(a, b, kr, model100());
      EXPECT_TRUE(report.pass) << report.identity << " kr=" << kr << " residual=" << report.max_residual;
    }
}

TEST(Density, VanishingOrbitalWeightAtOrigin) {
  const auto ll = density_commutator_check(DensityKind::oam, DensityKind::oam, 0.0, model100());
  EXPECT_TRUE(ll.degenerate);
  EXPECT_EQ(ll.max_residual, 0.0);
  EXPECT_TRUE(ll.pass);
  const auto ls = density_commutator_check(DensityKind::oam, DensityKind::spin, 0.0, model100());
  EXPECT_TRUE(ls.pass);
  EXPECT_THROW(density_commutator_check(DensityKind::spin, DensityKind::spin, -0.1, model100()), std::invalid_argument);
}

TEST(Variances, FockStateTable) {
  const auto zero = am_variances(0);
  EXPECT_NEAR(zero.x, 1.0, kExactTol);
  EXPECT_NEAR(zero.y, 1.0, kExactTol);
  EXPECT_NEAR(zero.z, 0.0, kExactTol);
  for (int m : {+1, -1}) {
    const auto v = am_variances(m);
    EXPECT_NEAR(v.x, 0.5, kExactTol);
    EXPECT_NEAR(v.y, 0.5, kExactTol);
    EXPECT_NEAR(v.z, 0.0, kExactTol);
    EXPECT_GT(zero.x, v.x);
    EXPECT_NEAR(v.x + v.y + v.z + 1.0, 2.0, kExactTol);
  }
  EXPECT_NEAR(zero.x + zero.y + zero.z, 2.0, kExactTol);
  EXPECT_THROW(am_variances(2), std::invalid_argument);
}
