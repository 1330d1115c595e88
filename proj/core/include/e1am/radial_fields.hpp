#pragma once

// Cavity-normalized spherical Bessel modes of the E1 field and the radial
// weights of the spin and orbital angular-momentum densities.
//
// Conventions: radii enter through the dimensionless x = kr. Densities are
// returned in units of hbar/V and shell integrals in units of hbar, both
// multiplied by CavityConfig::hbar_scale().

#include <nlohmann/json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace e1am::radial {

/// Smallest kR accepted; the independently normalized l = 0 and l = 2 modes
/// differ in amplitude by O(1/kR).
inline constexpr double kMinKR = 20.0;

/// Below these arguments the Bessel functions switch to their Taylor series.
/// The closed form of j2 loses about 5e-12 to cancellation at x = 1e-2, so
/// its seam sits where both forms agree to rounding.
inline constexpr double kSeriesSwitchJ0 = 1e-2;
inline constexpr double kSeriesSwitchJ2 = 0.5;

class CavityConfig {
 public:
  /// Throws std::invalid_argument unless k > 0, R > 0, kR >= kMinKR and hbar_scale > 0.
  CavityConfig(double k, double radius, double hbar_scale = 1.0);

  /// Unit wavenumber, so kr and r coincide.
  static CavityConfig from_kr(double kR, double hbar_scale = 1.0) { return {1.0, kR, hbar_scale}; }

  double k() const { return k_; }
  double radius() const { return radius_; }
  double kR() const { return k_ * radius_; }
  double volume() const;
  double wavelength() const;
  double hbar_scale() const { return hbar_scale_; }

 private:
  double k_;
  double radius_;
  double hbar_scale_;
};

/// Unnormalized spherical Bessel function j_ell(x) for ell in {0, 2}.
double spherical_bessel(int ell, double x);

struct NormalizedMode {
  int ell = 0;
  /// c such that the integral of [c j_ell(kr)]^2 r^2 over [0, R] equals V.
  double amplitude = 0.0;
  /// Integral of j_ell(kr)^2 r^2 over [0, R] before scaling.
  double raw_integral = 0.0;
};

NormalizedMode normalize_mode(const CavityConfig& config, int ell);

/// Integral of [c j_ell(kr)]^2 r^2 dr over [0, R]; equals V for a normalized mode.
double mode_norm_integral(const CavityConfig& config, const NormalizedMode& mode);

/// f_S and f_L for one cavity, with both mode normalizations cached.
class RadialModel {
 public:
  explicit RadialModel(const CavityConfig& config);

  const CavityConfig& config() const { return config_; }
  const NormalizedMode& mode(int ell) const;

  /// Spin weight (1/3)[2 j0^2 - j2^2 / 2] with normalized modes.
  double f_spin(double kr) const;
  /// Orbital weight (1/2) j2^2 with the normalized l = 2 mode; never negative.
  double f_oam(double kr) const;

  /// Integral of f(kr) r^2 dr / V over r in [kr_lo/k, kr_hi/k], in units of hbar.
  double shell_integral_spin(double kr_lo, double kr_hi) const;
  double shell_integral_oam(double kr_lo, double kr_hi) const;

 private:
  CavityConfig config_;
  NormalizedMode mode0_;
  NormalizedMode mode2_;
};

double f_spin(double kr, const CavityConfig& config);
double f_oam(double kr, const CavityConfig& config);

struct RadialSample {
  double kr = 0.0;
  double f_spin = 0.0;
  double f_oam = 0.0;
  double cum_spin = 0.0;
  double cum_oam = 0.0;
};

struct RadialProfile {
  CavityConfig config;
  std::vector<RadialSample> samples;
};

/// Uniform grid kr_i = i kR / (n - 1), i = 0..n-1, with n >= 100. The
/// cumulative columns are running shell integrals, so the last row holds
/// the totals over the cavity.
RadialProfile radial_profile(const CavityConfig& config, std::size_t n_samples);

/// Relative difference |W_S - W_L| / W_S of the shell integrals over the
/// one-wavelength window [start_kr, start_kr + 2 pi].
double windowed_discrepancy(const RadialModel& model, double start_kr);

struct ZoneReport {
  /// f_S / f_L at r = 0.1 lambda, its minimum over the near zone.
  double near_ratio = 0.0;
  /// Argmax of f_L over (0, lambda], in kr and in wavelengths.
  double oam_peak_kr = 0.0;
  double oam_peak_over_lambda = 0.0;
  double wave_window_start_kr = 0.0;
  double wave_zone_discrepancy = 0.0;
};

ZoneReport zone_report(const CavityConfig& config);

/// Header `kr,f_spin,f_oam,cum_spin,cum_oam`, 12 significant digits.
std::string to_csv(const RadialProfile& profile);
nlohmann::json to_json(const ZoneReport& report);

}  // namespace e1am::radial
