#pragma once

// Weisskopf-Wigner decay of the excited E1 level in the Markov
// approximation: excited and one-photon amplitudes, the spin / orbital AM
// expectation curve and a probability-conservation check. Natural units,
// c = 1 so that omega_k = k.

#include "e1am/fock_space.hpp"

#include <string>
#include <vector>

namespace e1am::decay {

/// omega0 / gamma must be at least this for the Markov approximation.
inline constexpr double kMinQuality = 50.0;
/// Half-width of the k window around omega0, in units of gamma.
inline constexpr double kWindowHalfWidth = 40.0;

struct DecayParams {
  double omega0 = 1.0;
  double gamma = 1e-3;
  std::vector<double> time_grid;

  /// Throws std::invalid_argument unless omega0 > 0, gamma > 0,
  /// omega0 / gamma >= kMinQuality and every time is >= 0.
  void validate() const;
};

/// n + 1 evenly spaced times on [0, t_max].
std::vector<double> uniform_times(double t_max, std::size_t n);

/// Params with omega0 = 1, gamma = 1 / ratio and times 0..10/gamma.
DecayParams params_from_ratio(double omega0_over_gamma, std::size_t n_times = 100);

/// C(t) = exp(-i omega0 t - gamma t).
Complex excited_amplitude(double t, const DecayParams& params);

/// B(k, t) = -k^{3/2} / (k - omega0 + i gamma) * (1 - exp(i (k - omega0) t - gamma t)),
/// without calibration.
Complex photon_amplitude(double k, double t, const DecayParams& params);

/// K with K * integral over the window of |B(k, infinity)|^2 dk = 1 (flat mode density).
double calibration_constant(const DecayParams& params);

/// Calibrated amplitudes for one parameter set.
class DecayModel {
 public:
  explicit DecayModel(DecayParams params);

  const DecayParams& params() const { return params_; }
  double calibration() const { return calibration_; }

  /// K |B(k, t)|^2.
  double photon_density(double k, double t) const;
  /// K times the integral of |B(k, t)|^2 over the window.
  double photon_probability(double t) const;
  /// |C(t)|^2 + K * integral |B(k, t)|^2 dk - 1.
  double norm_residual(double t) const;

 private:
  double cosine_moment(double t) const;

  DecayParams params_;
  double calibration_;
};

struct DecayCurve {
  std::vector<double> t;
  /// <S_z(t)> = <L_z(t)> in units of hbar.
  std::vector<double> sz_expect;
  std::vector<double> excited_pop;
  std::vector<double> norm_residual;
};

/// <S_z(t)>/hbar = (1 - exp(-2 gamma t)) / 2.
double sz_over_hbar(double t, const DecayParams& params);

DecayCurve sz_curve(const DecayParams& params);

/// Residual of |C|^2 + K integral |B|^2 dk against 1 at time t.
double conservation_check(const DecayParams& params, double t);

/// Header `t,sz_over_hbar,excited_pop,norm_residual`, 12 significant digits.
std::string to_csv(const DecayCurve& curve);

}  // namespace e1am::decay
