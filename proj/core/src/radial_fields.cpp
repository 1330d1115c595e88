#include "e1am/radial_fields.hpp"

#include "e1am/format.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <functional>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace e1am::radial {

namespace {

using boost::math::double_constants::pi;
using boost::math::double_constants::two_pi;

constexpr double kGoldenRatioConj = 0.6180339887498949;

void require_nonnegative(double x) {
  if (!(x >= 0.0)) throw std::invalid_argument("radial argument must be non-negative");
}

// x^ell * sum_n (-x^2/2)^n / (n! (2n + 2 ell + 1)!!)
double bessel_series(int ell, double x) {
  const double half_x2 = -0.5 * x * x;
  double double_fact = 1.0;
  for (int k = 2 * ell + 1; k > 1; k -= 2) double_fact *= k;
  double term = 1.0 / double_fact;
  double sum = term;
  for (int n = 1; n < 10; ++n) {
    term *= half_x2 / (n * (2.0 * n + 2.0 * ell + 1.0));
    sum += term;
  }
  return std::pow(x, ell) * sum;
}

// Adaptive Gauss-Kronrod over unit-width panels, summed in panel order.
template <class F>
double panel_integral(F&& f, double lo, double hi) {
  if (hi <= lo) return 0.0;
  const auto panels = static_cast<std::size_t>(std::ceil(hi - lo));
  const double width = (hi - lo) / static_cast<double>(panels);
  double total = 0.0;
  for (std::size_t i = 0; i < panels; ++i) {
    const double a = lo + width * static_cast<double>(i);
    const double b = i + 1 == panels ? hi : a + width;
    total += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 8, 1e-14);
  }
  return total;
}

double golden_section_max(const std::function<double(double)>& f, double lo, double hi, double tol) {
  double a = lo;
  double b = hi;
  double c = b - kGoldenRatioConj * (b - a);
  double d = a + kGoldenRatioConj * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGoldenRatioConj * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGoldenRatioConj * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

CavityConfig::CavityConfig(double k, double radius, double hbar_scale)
    : k_(k), radius_(radius), hbar_scale_(hbar_scale) {
  if (!(k_ > 0.0)) throw std::invalid_argument("cavity wavenumber must be positive");
  if (!(radius_ > 0.0)) throw std::invalid_argument("cavity radius must be positive");
  if (!(kR() >= kMinKR)) throw std::invalid_argument("cavity needs kR >= 20");
  if (!(hbar_scale_ > 0.0)) throw std::invalid_argument("hbar scale must be positive");
}

double CavityConfig::volume() const { return 4.0 * pi * radius_ * radius_ * radius_ / 3.0; }

double CavityConfig::wavelength() const { return two_pi / k_; }

double spherical_bessel(int ell, double x) {
  require_nonnegative(x);
  switch (ell) {
    case 0:
      if (x < kSeriesSwitchJ0) return bessel_series(0, x);
      return std::sin(x) / x;
    case 2: {
      if (x < kSeriesSwitchJ2) return bessel_series(2, x);
      const double inv = 1.0 / x;
      return (3.0 * inv * inv * inv - inv) * std::sin(x) - 3.0 * inv * inv * std::cos(x);
    }
    default:
      throw std::invalid_argument("only l = 0 and l = 2 modes are supported");
  }
}

NormalizedMode normalize_mode(const CavityConfig& config, int ell) {
  if (ell != 0 && ell != 2) throw std::invalid_argument("only l = 0 and l = 2 modes are supported");
  const double k = config.k();
  const double in_x = panel_integral(
      [ell](double x) {
        const double j = spherical_bessel(ell, x);
        return j * j * x * x;
      },
      0.0, config.kR());
  const double raw = in_x / (k * k * k);
  if (!std::isfinite(raw) || raw <= 0.0) throw std::runtime_error("mode normalization quadrature failed");
  return {ell, std::sqrt(config.volume() / raw), raw};
}

double mode_norm_integral(const CavityConfig& config, const NormalizedMode& mode) {
  const double k = config.k();
  const double c = mode.amplitude;
  const int ell = mode.ell;
  const double in_x = panel_integral(
      [ell, c](double x) {
        const double j = c * spherical_bessel(ell, x);
        return j * j * x * x;
      },
      0.0, config.kR());
  return in_x / (k * k * k);
}

RadialModel::RadialModel(const CavityConfig& config)
    : config_(config), mode0_(normalize_mode(config, 0)), mode2_(normalize_mode(config, 2)) {}

const NormalizedMode& RadialModel::mode(int ell) const {
  if (ell == 0) return mode0_;
  if (ell == 2) return mode2_;
  throw std::invalid_argument("only l = 0 and l = 2 modes are supported");
}

double RadialModel::f_spin(double kr) const {
  require_nonnegative(kr);
  const double j0 = mode0_.amplitude * spherical_bessel(0, kr);
  const double j2 = mode2_.amplitude * spherical_bessel(2, kr);
  return config_.hbar_scale() * (2.0 * j0 * j0 - 0.5 * j2 * j2) / 3.0;
}

double RadialModel::f_oam(double kr) const {
  require_nonnegative(kr);
  const double j2 = mode2_.amplitude * spherical_bessel(2, kr);
  return config_.hbar_scale() * 0.5 * j2 * j2;
}

double RadialModel::shell_integral_spin(double kr_lo, double kr_hi) const {
  const double k = config_.k();
  const double in_x = panel_integral([this](double x) { return f_spin(x) * x * x; }, kr_lo, kr_hi);
  return in_x / (k * k * k * config_.volume());
}

double RadialModel::shell_integral_oam(double kr_lo, double kr_hi) const {
  const double k = config_.k();
  const double in_x = panel_integral([this](double x) { return f_oam(x) * x * x; }, kr_lo, kr_hi);
  return in_x / (k * k * k * config_.volume());
}

double f_spin(double kr, const CavityConfig& config) { return RadialModel(config).f_spin(kr); }

double f_oam(double kr, const CavityConfig& config) { return RadialModel(config).f_oam(kr); }

RadialProfile radial_profile(const CavityConfig& config, std::size_t n_samples) {
  if (n_samples < 100) throw std::invalid_argument("radial profile needs at least 100 samples");
  const RadialModel model(config);
  const double k = config.k();
  const double scale = 1.0 / (k * k * k * config.volume());
  const double step = config.kR() / static_cast<double>(n_samples - 1);

  using Rule = boost::math::quadrature::gauss<double, 30>;
  RadialProfile profile{config, {}};
  profile.samples.reserve(n_samples);
  double cum_s = 0.0;
  double cum_l = 0.0;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double kr = i + 1 == n_samples ? config.kR() : step * static_cast<double>(i);
    if (i > 0) {
      const double lo = profile.samples.back().kr;
      cum_s += scale * Rule::integrate([&](double x) { return model.f_spin(x) * x * x; }, lo, kr);
      cum_l += scale * Rule::integrate([&](double x) { return model.f_oam(x) * x * x; }, lo, kr);
    }
    profile.samples.push_back({kr, model.f_spin(kr), model.f_oam(kr), cum_s, cum_l});
  }
  return profile;
}

double windowed_discrepancy(const RadialModel& model, double start_kr) {
  require_nonnegative(start_kr);
  const double spin = model.shell_integral_spin(start_kr, start_kr + two_pi);
  const double oam = model.shell_integral_oam(start_kr, start_kr + two_pi);
  return std::abs(spin - oam) / std::abs(spin);
}

ZoneReport zone_report(const CavityConfig& config) {
  const RadialModel model(config);
  ZoneReport report;

  // r = 0.1 lambda, i.e. kr = 0.2 pi. f_S / f_L only grows as kr -> 0.
  const double near_kr = 0.2 * pi;
  report.near_ratio = model.f_spin(near_kr) / model.f_oam(near_kr);

  constexpr int kScan = 1000;
  int best = 1;
  double best_value = -1.0;
  for (int i = 1; i <= kScan; ++i) {
    const double value = model.f_oam(two_pi * i / kScan);
    if (value > best_value) {
      best_value = value;
      best = i;
    }
  }
  const double lo = two_pi * (best - 1) / kScan;
  const double hi = two_pi * std::min(best + 1, kScan) / kScan;
  report.oam_peak_kr = golden_section_max([&model](double x) { return model.f_oam(x); }, lo, hi, 1e-12);
  report.oam_peak_over_lambda = report.oam_peak_kr / two_pi;

  report.wave_window_start_kr = std::min(0.8 * config.kR(), config.kR() - two_pi);
  report.wave_zone_discrepancy = windowed_discrepancy(model, report.wave_window_start_kr);
  return report;
}

std::string to_csv(const RadialProfile& profile) {
  std::ostringstream out;
  out << "kr,f_spin,f_oam,cum_spin,cum_oam\n";
  for (const auto& s : profile.samples) {
    out << format12(s.kr) << ',' << format12(s.f_spin) << ',' << format12(s.f_oam) << ','
        << format12(s.cum_spin) << ',' << format12(s.cum_oam) << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const ZoneReport& report) {
  return {
      {"near_ratio", round12(report.near_ratio)},
      {"oam_peak_kr", round12(report.oam_peak_kr)},
      {"oam_peak_over_lambda", round12(report.oam_peak_over_lambda)},
      {"wave_window_start_kr", round12(report.wave_window_start_kr)},
      {"wave_zone_discrepancy", round12(report.wave_zone_discrepancy)},
  };
}

}  // namespace e1am::radial
