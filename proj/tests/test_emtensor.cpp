#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "movmed/emtensor.hpp"
#include "movmed/mapping.hpp"
#include "support/test_support.hpp"

using namespace movmed;
using movmed::testing::Sampler;

namespace {

// On-shell transverse wave with a unit medium polarization scaled by amp.
PlaneWave transverse_wave(const MediumSpec& m, const Vec3& kvec, Branch branch, complex amp, int which = 0) {
  auto w = make_plane_wave(m, kvec, branch);
  w.polarization = amp * medium_polarization_basis(m, w.k).vectors[which];
  return w;
}

RealFourVector time_point(double t) { return RealFourVector::upper(t, 0, 0, 0); }

}  // namespace

TEST(MinkowskiTensor, IsTraceless) {
  Sampler s(61);
  for (int i = 0; i < 200; ++i) {
    const auto m = s.medium(1.0, 3.0, 0.95, 0.5, 2.0);
    const auto f = fields_in_medium(m, s.antisymmetric());
    const auto S = minkowski_tensor(f);
    EXPECT_NEAR(trace(S.as(Index::upper, Index::lower)), 0.0, 1e-12 * (1 + frobenius_norm(S)));
  }
}

TEST(MinkowskiTensor, RestFrameEnergyAndMomentumDensity) {
  Sampler s(62);
  for (int i = 0; i < 50; ++i) {
    const auto m = MediumSpec::at_rest(s.uniform(1.0, 3.0), s.uniform(0.5, 2.0));
    const auto f = fields_in_medium(m, s.antisymmetric());
    const auto E = polar_part(f.F), B = axial_part(f.F), D = polar_part(f.H), H = axial_part(f.H);
    const auto S = minkowski_tensor(f).upper();
    EXPECT_NEAR(S(0, 0), 0.5 * (dot3(E, D) + dot3(B, H)), 1e-12 * (1 + std::abs(S(0, 0))));
    const Vec3 g = cross3(D, B), flux = cross3(E, H);
    for (int k = 0; k < 3; ++k) {
      EXPECT_NEAR(S(k + 1, 0), g[k], 1e-12 * (1 + norm3(g)));
      EXPECT_NEAR(S(0, k + 1), flux[k], 1e-12 * (1 + norm3(flux)));
    }
  }
}

TEST(MinkowskiTensor, VacuumIsSymmetric) {
  Sampler s(63);
  const auto m = MediumSpec(1.0, 1.0, {0.4, 0.1, 0});
  const auto S = minkowski_tensor(fields_in_medium(m, s.antisymmetric()));
  EXPECT_TRUE(is_symmetric(S, 1e-12));
}

TEST(MinkowskiTensor, DivergenceFreeForFreeWaves) {
  Sampler s(64);
  const double h = 1e-5;
  for (int i = 0; i < 20; ++i) {
    const auto m = s.medium(1.0, 2.5, 0.8, 0.5, 2.0);
    const auto w1 = transverse_wave(m, s.uniform(0.5, 2.0) * s.unit_vector(), Branch::a, complex(s.normal(), s.normal()));
    const auto w2 = transverse_wave(m, s.uniform(0.5, 2.0) * s.unit_vector(), Branch::a, complex(s.normal(), s.normal()), 1);
    const auto a1 = plane_wave_amplitudes(m, w1), a2 = plane_wave_amplitudes(m, w2);
    auto S_at = [&](const RealFourVector& x) {
      const auto f1 = plane_wave_sample(a1, w1.k, x).fields, f2 = plane_wave_sample(a2, w2.k, x).fields;
      return minkowski_tensor(f1.F + f2.F, f1.H + f2.H).upper();
    };
    const auto x = s.four_vector();
    double div_max = 0.0, scale = 0.0;
    for (std::size_t mu = 0; mu < 4; ++mu) {
      double div = 0.0;
      for (std::size_t nu = 0; nu < 4; ++nu) {
        auto xp = x, xm = x;
        xp.c[nu] += h;
        xm.c[nu] -= h;
        div += (S_at(xp)(mu, nu) - S_at(xm)(mu, nu)) / (2 * h);
      }
      div_max = std::max(div_max, std::abs(div));
    }
    scale = frobenius_norm(S_at(x));
    const double lambda = 2 * std::numbers::pi / std::min(norm3(w1.k.spatial()), norm3(w2.k.spatial()));
    EXPECT_LT(div_max, 1e-6 * scale / lambda);
  }
}

TEST(CanonicalTensor, CycleAverageEqualsMinkowski) {
  Sampler s(65);
  for (int i = 0; i < 200; ++i) {
    const auto m = s.medium(1.0, 3.0, 0.95, 0.5, 2.0);
    const auto w = transverse_wave(m, s.uniform(0.2, 3.0) * s.unit_vector(), i % 3 ? Branch::a : Branch::b,
                                   complex(s.normal(), s.normal()), i % 2);
    const auto SM = cycle_averaged_minkowski(m, w), SC = cycle_averaged_canonical(m, w);
    EXPECT_LT(max_abs_diff(SM, SC), 1e-9 * std::max(1.0, frobenius_norm(SM)));
  }
}

TEST(CycleAverage, MatchesTrapezoidOverOnePeriod) {
  Sampler s(66);
  const int N = 1024;
  for (int i = 0; i < 10; ++i) {
    const auto m = s.medium(1.0, 2.5, 0.9, 0.5, 2.0);
    const auto w = transverse_wave(m, s.uniform(0.2, 3.0) * s.unit_vector(), Branch::a, complex(s.normal(), s.normal()));
    const double T = 2 * std::numbers::pi / std::abs(w.k[0]);
    const auto amp = plane_wave_amplitudes(m, w);
    RealTensor2 mean(Index::upper, Index::upper), mean_can(Index::upper, Index::upper);
    double energy = 0.0;
    for (int j = 0; j < N; ++j) {
      const auto smp = plane_wave_sample(amp, w.k, time_point(T * j / N));
      mean = mean + (1.0 / N) * minkowski_tensor(smp.fields).upper();
      mean_can = mean_can + (1.0 / N) * canonical_tensor(m, smp.fields, smp.grad_A).upper();
      const auto& f = smp.fields;
      energy += (0.5 / N) * (dot3(polar_part(f.F), polar_part(f.H)) + dot3(axial_part(f.F), axial_part(f.H)));
    }
    const auto avg = cycle_averaged_minkowski(m, w).upper();
    const double tol = 1e-10 * std::max(1.0, frobenius_norm(avg));
    EXPECT_LT(max_abs_diff(mean, avg), tol);
    EXPECT_LT(max_abs_diff(mean_can, avg), tol);
    if (norm3(m.velocity()) == 0.0) {
      EXPECT_NEAR(avg(0, 0), energy, tol);
    }
  }
  const auto rest = MediumSpec::at_rest(1.5, 1.2);
  const auto w = transverse_wave(rest, {0, 0, 2}, Branch::a, complex(0.3, 0.4));
  const double T = 2 * std::numbers::pi / std::abs(w.k[0]);
  double energy = 0.0;
  for (int j = 0; j < N; ++j) {
    const auto f = plane_wave_sample(rest, w, time_point(T * j / N)).fields;
    energy += (0.5 / N) * (dot3(polar_part(f.F), polar_part(f.H)) + dot3(axial_part(f.F), axial_part(f.H)));
  }
  EXPECT_NEAR(cycle_averaged_minkowski(rest, w).upper()(0, 0), energy, 1e-12 * energy);
}

TEST(CanonicalTensor, RejectsGaugeViolation) {
  const auto m = MediumSpec::at_rest(1.5);
  auto w = make_plane_wave(m, {1, 0, 0}, Branch::a);
  w.polarization = ComplexFourVector::upper(1, 0, 0, 0);
  const auto amp = plane_wave_amplitudes(m, w);
  EXPECT_THROW(canonical_tensor(m, FieldTensors<complex>{amp.F, amp.H}, amp.grad_A), gauge_condition_error);
  EXPECT_THROW(cell_four_momentum(m, w, MomentumSource::mode_formula), gauge_condition_error);
}

TEST(CellMomentum, SourcesAgreeAndAreParallelToK) {
  Sampler s(67);
  for (int i = 0; i < 200; ++i) {
    const auto m = s.medium(1.0, 3.0, 0.95, 0.5, 2.0);
    const auto w = transverse_wave(m, s.uniform(0.2, 3.0) * s.unit_vector(), i % 2 ? Branch::a : Branch::b,
                                   complex(s.normal(), s.normal()));
    const auto pm = cell_four_momentum(m, w, MomentumSource::minkowski_tensor);
    const auto pc = cell_four_momentum(m, w, MomentumSource::canonical_tensor);
    const auto pf = cell_four_momentum(m, w, MomentumSource::mode_formula);
    const double scale = euclidean_norm(pm.P);
    EXPECT_LT(max_abs_diff(pm.P, pc.P), 1e-9 * scale);
    EXPECT_LT(max_abs_diff(pm.P, pf.P), 1e-9 * scale);
    // P ∥ k
    const auto k = w.k.raised();
    const double ratio = pm.P[0] / k[0];
    for (std::size_t mu = 1; mu < 4; ++mu) EXPECT_NEAR(pm.P[mu], ratio * k[mu], 1e-9 * scale);
    if (m.n() > 1.01) {
      EXPECT_EQ(pm.causal, CausalClass::spacelike);
    }
    EXPECT_EQ(pm.source, MomentumSource::minkowski_tensor);
  }
}

TEST(CellMomentum, PositiveEnergyOnUpperBranchBelowThreshold) {
  Sampler s(68);
  for (int i = 0; i < 100; ++i) {
    const auto m = s.medium(1.0, 1.4, 0.5);
    const auto w = transverse_wave(m, s.uniform(0.2, 3.0) * s.unit_vector(), Branch::a, complex(1, 0));
    EXPECT_GT(cell_four_momentum(m, w, MomentumSource::minkowski_tensor).P[0], 0.0);
  }
}

TEST(CellMomentum, VacuumIsNull) {
  const MediumSpec m(1.0, 1.0, {0.3, 0, 0});
  const auto w = transverse_wave(m, {0.2, 1.0, -0.5}, Branch::a, complex(1, 0));
  EXPECT_EQ(cell_four_momentum(m, w, MomentumSource::minkowski_tensor).causal, CausalClass::null);
}

TEST(CellMomentum, RestFrameMomentumToEnergyRatioIsIndex) {
  const auto m = MediumSpec::at_rest(1.5);
  const auto w = transverse_wave(m, {0, 0, 1}, Branch::a, complex(1, 0));
  const auto r = cell_four_momentum(m, w, MomentumSource::minkowski_tensor);
  EXPECT_NEAR(r.P[3] / r.P[0], 1.5, 1e-12);
  EXPECT_NEAR(r.p_squared, r.P[0] * r.P[0] * (1 - 2.25), 1e-12 * r.P[0] * r.P[0]);
}

TEST(CellMomentum, RejectsOffShellWave) {
  const auto m = MediumSpec::at_rest(1.5);
  const PlaneWave w{RealFourVector::upper(1, 0, 0, 1), ComplexFourVector::upper(0, 1, 0, 0), Branch::none};
  EXPECT_THROW(cell_four_momentum(m, w, MomentumSource::minkowski_tensor), domain_error);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_momentum(RealFourVector::upper(2, 1, 0, 0)), CausalClass::timelike);
  EXPECT_EQ(classify_momentum(RealFourVector::upper(1, 2, 0, 0)), CausalClass::spacelike);
  EXPECT_EQ(classify_momentum(RealFourVector::upper(1, 0, 1, 0)), CausalClass::null);
  EXPECT_EQ(to_string(CausalClass::spacelike), "spacelike");
  EXPECT_EQ(to_string(MomentumSource::mode_formula), "mode_formula");
}

TEST(PhotonMomentum, NaturalAndSI) {
  EXPECT_DOUBLE_EQ(photon_momentum(1.5, 2.0), 3.0);
  const double p = photon_momentum(1.5, 2.2e15, UnitSystem::si);
  EXPECT_NEAR(p, 1.054571817e-34 * 1.5 * 2.2e15 / 2.99792458e8, 1e-40);
  EXPECT_NEAR(p, 1.1608e-27, 1e-30);
  EXPECT_THROW(photon_momentum(0.0, 1.0), domain_error);
  EXPECT_THROW(photon_momentum(1.5, -1.0), domain_error);
}
