#include "e1am/decay_dynamics.hpp"

#include "e1am/format.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace e1am::decay {

namespace {

void require_time(double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("time must be non-negative");
}

// Integral of g(u) over u = (k - omega0) / gamma in [-W, W], in panels of
// width `panel` summed left to right.
template <class F>
double window_integral(F&& g, double panel) {
  const auto panels = static_cast<std::size_t>(std::ceil(2.0 * kWindowHalfWidth / panel));
  const double width = 2.0 * kWindowHalfWidth / static_cast<double>(panels);
  double total = 0.0;
  for (std::size_t i = 0; i < panels; ++i) {
    const double a = -kWindowHalfWidth + width * static_cast<double>(i);
    const double b = i + 1 == panels ? kWindowHalfWidth : a + width;
    total += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(g, a, b, 10, 1e-13);
  }
  return total;
}

// k^3 / ((k - omega0)^2 + gamma^2) dk with k = omega0 + gamma u, per unit du.
double lorentz_weight(double u, const DecayParams& p) {
  const double k = p.omega0 + p.gamma * u;
  return k * k * k / (p.gamma * (u * u + 1.0));
}

}  // namespace

void DecayParams::validate() const {
  if (!(omega0 > 0.0)) throw std::invalid_argument("omega0 must be positive");
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
  if (!(omega0 / gamma >= kMinQuality)) throw std::invalid_argument("omega0 / gamma must be at least 50");
  for (double t : time_grid) require_time(t);
}

std::vector<double> uniform_times(double t_max, std::size_t n) {
  std::vector<double> times(n + 1);
  for (std::size_t i = 0; i <= n; ++i) times[i] = n == 0 ? 0.0 : t_max * static_cast<double>(i) / static_cast<double>(n);
  return times;
}

DecayParams params_from_ratio(double omega0_over_gamma, std::size_t n_times) {
  DecayParams params;
  params.omega0 = 1.0;
  params.gamma = 1.0 / omega0_over_gamma;
  params.time_grid = uniform_times(10.0 / params.gamma, n_times);
  params.validate();
  return params;
}

Complex excited_amplitude(double t, const DecayParams& params) {
  require_time(t);
  return std::exp(Complex(-params.gamma * t, -params.omega0 * t));
}

Complex photon_amplitude(double k, double t, const DecayParams& params) {
  if (!(k > 0.0)) throw std::invalid_argument("photon wavenumber must be positive");
  require_time(t);
  const double detuning = k - params.omega0;
  const Complex growth = 1.0 - std::exp(Complex(-params.gamma * t, detuning * t));
  return -std::pow(k, 1.5) / Complex(detuning, params.gamma) * growth;
}

double calibration_constant(const DecayParams& params) {
  params.validate();
  const double integral = window_integral([&](double u) { return lorentz_weight(u, params); }, 0.5);
  return 1.0 / integral;
}

DecayModel::DecayModel(DecayParams params) : params_(std::move(params)), calibration_(calibration_constant(params_)) {}

double DecayModel::photon_density(double k, double t) const {
  return calibration_ * std::norm(photon_amplitude(k, t, params_));
}

// K * integral k^3 cos((k - omega0) t) / ((k - omega0)^2 + gamma^2) dk
double DecayModel::cosine_moment(double t) const {
  const double gt = params_.gamma * t;
  const double panel = gt > 2.0 ? std::min(0.5, 1.0 / gt) : 0.5;
  const double integral =
      window_integral([&](double u) { return lorentz_weight(u, params_) * std::cos(u * gt); }, panel);
  return calibration_ * integral;
}

// |1 - e^{(i d - g) t}|^2 = 1 - 2 e^{-g t} cos(d t) + e^{-2 g t}; the flat
// term integrates to exactly 1 / K by calibration.
double DecayModel::photon_probability(double t) const {
  require_time(t);
  if (t == 0.0) return 0.0;
  const double decay = std::exp(-params_.gamma * t);
  return 1.0 + decay * decay - 2.0 * decay * cosine_moment(t);
}

double DecayModel::norm_residual(double t) const {
  require_time(t);
  if (t == 0.0) return 0.0;
  // Same as |C|^2 + photon_probability(t) - 1 without the cancellation against 1.
  const double decay = std::exp(-params_.gamma * t);
  return 2.0 * decay * (decay - cosine_moment(t));
}

double sz_over_hbar(double t, const DecayParams& params) {
  require_time(t);
  return 0.5 * (1.0 - std::exp(-2.0 * params.gamma * t));
}

DecayCurve sz_curve(const DecayParams& params) {
  const DecayModel model(params);
  DecayCurve curve;
  curve.t = params.time_grid;
  for (double t : params.time_grid) {
    curve.sz_expect.push_back(sz_over_hbar(t, params));
    curve.excited_pop.push_back(std::exp(-2.0 * params.gamma * t));
    curve.norm_residual.push_back(model.norm_residual(t));
  }
  return curve;
}

double conservation_check(const DecayParams& params, double t) { return DecayModel(params).norm_residual(t); }

std::string to_csv(const DecayCurve& curve) {
  std::ostringstream out;
  out << "t,sz_over_hbar,excited_pop,norm_residual\n";
  for (std::size_t i = 0; i < curve.t.size(); ++i) {
    out << format12(curve.t[i]) << ',' << format12(curve.sz_expect[i]) << ',' << format12(curve.excited_pop[i]) << ','
        << format12(curve.norm_residual[i]) << '\n';
  }
  return out.str();
}

}  // namespace e1am::decay
