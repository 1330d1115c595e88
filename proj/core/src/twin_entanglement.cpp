#include "e1am/twin_entanglement.hpp"

#include "e1am/angular_algebra.hpp"
#include "e1am/format.hpp"
#include "e1am/matrix_exp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace e1am::twins {

namespace {

constexpr double kGoldenRatioConj = 0.6180339887498949;
constexpr int kArcGrid = 10000;

Eigen::Matrix3cd pair_matrix(std::initializer_list<std::tuple<int, int, Complex>> entries) {
  Eigen::Matrix3cd amps = Eigen::Matrix3cd::Zero();
  for (const auto& [m1, m2, value] : entries)
    amps(static_cast<Eigen::Index>(qutrit_index(m1)), static_cast<Eigen::Index>(qutrit_index(m2))) = value;
  return amps;
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

std::size_t qutrit_index(int m) {
  switch (m) {
    case +1: return 0;
    case 0: return 1;
    case -1: return 2;
    default: throw std::invalid_argument("photon AM projection must be -1, 0 or +1");
  }
}

TwoQutritState::TwoQutritState(const Eigen::Matrix3cd& amps) : amps_(amps) {
  if (std::abs(amps_.norm() - 1.0) > kExactTol) throw std::invalid_argument("two-qutrit state is not normalized");
}

Complex TwoQutritState::amplitude(int m1, int m2) const {
  return amps_(static_cast<Eigen::Index>(qutrit_index(m1)), static_cast<Eigen::Index>(qutrit_index(m2)));
}

Complex TwoQutritState::inner(const TwoQutritState& other) const {
  return (amps_.adjoint() * other.amps_).trace();
}

TwoQutritState TwoQutritState::swapped() const { return TwoQutritState(amps_.transpose()); }

ParityBasis parity_basis() {
  const double h = 1.0 / std::sqrt(2.0);
  return {
      TwoQutritState(pair_matrix({{0, 0, 1.0}})),
      TwoQutritState(pair_matrix({{+1, -1, h}, {-1, +1, h}})),
      TwoQutritState(pair_matrix({{+1, -1, h}, {-1, +1, -h}})),
  };
}

RadiatedState::RadiatedState(Complex c1_, Complex c2_) : c1(c1_), c2(c2_) {
  if (std::abs(std::norm(c1) + std::norm(c2) - 1.0) > kExactTol)
    throw std::invalid_argument("radiated state coefficients are not normalized");
}

TwoQutritState RadiatedState::to_state() const {
  const auto basis = parity_basis();
  return TwoQutritState(c1 * basis.psi1.amps() + c2 * basis.psi2.amps());
}

double entanglement_measure(const RadiatedState& state) { return std::abs(state.c1) * std::norm(state.c2); }

std::array<double, 16> local_expectations(const TwoQutritState& state) {
  static const auto blocks = su3_single_photon_blocks();
  const Eigen::Matrix3cd& a = state.amps();
  std::array<double, 16> out{};
  for (std::size_t g = 0; g < blocks.size(); ++g) {
    // photon 1: sum conj(a_ij) G_ik a_kj; photon 2: sum conj(a_ij) G_jk a_ik
    out[g] = (a.adjoint() * blocks[g] * a).trace().real();
    out[g + 8] = (a.conjugate() * blocks[g] * a.transpose()).trace().real();
  }
  return out;
}

double maximize_on_arc(const std::function<double(double, double)>& objective) {
  auto along = [&](double a) { return objective(a, std::sqrt(std::max(0.0, 1.0 - a * a))); };

  int best = 0;
  double best_value = along(0.0);
  for (int i = 1; i <= kArcGrid; ++i) {
    const double value = along(static_cast<double>(i) / kArcGrid);
    if (value > best_value) {
      best_value = value;
      best = i;
    }
  }
  const double lo = static_cast<double>(std::max(best - 1, 0)) / kArcGrid;
  const double hi = static_cast<double>(std::min(best + 1, kArcGrid)) / kArcGrid;
  double a = golden_section_max(along, lo, hi, 1e-10);

  // Golden section stalls near sqrt(eps); finish with parabolic steps on a
  // symmetric stencil wide enough for the differences to resolve.
  constexpr double h = 1e-5;
  for (int step = 0; step < 3; ++step) {
    if (a - h < 0.0 || a + h > 1.0) break;
    const double fm = along(a - h);
    const double f0 = along(a);
    const double fp = along(a + h);
    const double curvature = fp - 2.0 * f0 + fm;
    if (!(curvature < 0.0)) break;
    const double shift = 0.5 * h * (fm - fp) / curvature;
    if (std::abs(shift) > h) break;
    a += shift;
  }
  return a;
}

EntanglementOptimum maximize_entanglement(double variational_tol) {
  const double a = maximize_on_arc([](double c1, double c2) { return c1 * c2 * c2; });
  const double b = std::sqrt(1.0 - a * a);
  const RadiatedState state(a, b);
  EntanglementOptimum optimum;
  optimum.c1_abs = a;
  optimum.c2_abs = b;
  optimum.mu_max = entanglement_measure(state);
  for (double value : local_expectations(state.to_state()))
    optimum.local_expectation_max_abs = std::max(optimum.local_expectation_max_abs, std::abs(value));
  optimum.variational_pass = optimum.local_expectation_max_abs < variational_tol;
  return optimum;
}

nlohmann::json to_json(const EntanglementOptimum& optimum) {
  return {
      {"c1_abs", round12(optimum.c1_abs)},
      {"c2_abs", round12(optimum.c2_abs)},
      {"mu_max", round12(optimum.mu_max)},
      {"local_expectation_max_abs", round12(optimum.local_expectation_max_abs)},
      {"variational_pass", optimum.variational_pass},
  };
}

// AtomFieldSpace

AtomFieldSpace::AtomFieldSpace() {
  std::vector<ModeLabel> modes;
  for (int family : {1, 2})
    for (const auto& mode : projection_modes(family)) modes.push_back(mode);
  field_ = build_space(std::move(modes), 2);
}

std::size_t AtomFieldSpace::index(AtomLevel level, std::size_t field_index) const {
  return static_cast<std::size_t>(level) * field_->dim() + field_index;
}

Matrix AtomFieldSpace::lift_field(const Matrix& field_op) const {
  const auto n = static_cast<Eigen::Index>(field_->dim());
  Matrix out = Matrix::Zero(2 * n, 2 * n);
  out.topLeftCorner(n, n) = field_op;
  out.bottomRightCorner(n, n) = field_op;
  return out;
}

Matrix AtomFieldSpace::lift_atom(const Eigen::Matrix2cd& atom_op) const {
  const auto n = static_cast<Eigen::Index>(field_->dim());
  const Matrix ident = Matrix::Identity(n, n);
  Matrix out(2 * n, 2 * n);
  for (Eigen::Index r = 0; r < 2; ++r)
    for (Eigen::Index c = 0; c < 2; ++c) out.block(r * n, c * n, n, n) = atom_op(r, c) * ident;
  return out;
}

Vector AtomFieldSpace::vacuum(AtomLevel level) const {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dim()));
  v(static_cast<Eigen::Index>(index(level, 0))) = 1.0;
  return v;
}

Vector AtomFieldSpace::embed(AtomLevel level, const TwoQutritState& pair) const {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dim()));
  for (int m1 : {+1, 0, -1}) {
    for (int m2 : {+1, 0, -1}) {
      const Complex amp = pair.amplitude(m1, m2);
      if (amp == Complex(0.0)) continue;
      const auto photon = fock_state(field_, {{ModeLabel{m1, 1}, 1}, {ModeLabel{m2, 2}, 1}});
      Eigen::Index hot = 0;
      photon.amplitudes().cwiseAbs().maxCoeff(&hot);
      v(static_cast<Eigen::Index>(index(level, static_cast<std::size_t>(hot)))) += amp;
    }
  }
  return v;
}

AtomFieldOperator interaction_hamiltonian(std::shared_ptr<const AtomFieldSpace> space,
                                          const HamiltonianParams& params) {
  if (!space) throw std::invalid_argument("hamiltonian needs an atom-field space");
  const auto& field = space->field();

  Matrix pair_annihilation = zero_operator(field).matrix();
  for (int m : {+1, 0, -1})
    pair_annihilation += (annihilation(field, ModeLabel{m, 1}) * annihilation(field, ModeLabel{-m, 2})).matrix();

  Eigen::Matrix2cd r_ee = Eigen::Matrix2cd::Zero();
  r_ee(1, 1) = 1.0;
  Eigen::Matrix2cd r_eg = Eigen::Matrix2cd::Zero();
  r_eg(1, 0) = 1.0;

  const Matrix absorb = space->lift_atom(r_eg) * space->lift_field(pair_annihilation);
  Matrix h = params.omega * space->lift_field(total_number_operator(field).matrix()) +
             params.omega0 * space->lift_atom(r_ee) + params.coupling * (absorb + absorb.adjoint());
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > kExactTol)
    throw std::logic_error("atom-field hamiltonian is not hermitian");
  return {std::move(space), std::move(h)};
}

Matrix excitation_number(const AtomFieldSpace& space) {
  Eigen::Matrix2cd r_ee = Eigen::Matrix2cd::Zero();
  r_ee(1, 1) = 1.0;
  return space.lift_atom(r_ee) + 0.5 * space.lift_field(total_number_operator(space.field()).matrix());
}

SelectionRuleReport selection_rule_check(const AtomFieldOperator& hamiltonian, const HamiltonianParams& params,
                                         std::vector<double> times) {
  const auto& space = *hamiltonian.space;
  const Matrix& h = hamiltonian.matrix;
  const auto basis = parity_basis();
  const Vector excited = space.vacuum(AtomLevel::excited);
  const Vector odd = space.embed(AtomLevel::ground, basis.psi3);

  SelectionRuleReport report;
  const Vector emitted = h * excited;
  report.odd_coupling = std::abs(odd.dot(emitted));
  report.odd_eigen_residual = (h * odd - 2.0 * params.omega * odd).norm();

  const Complex c1 = space.embed(AtomLevel::ground, basis.psi1).dot(emitted);
  const Complex c2 = space.embed(AtomLevel::ground, basis.psi2).dot(emitted);
  report.emitted_c2_over_c1 = std::abs(c1) > 0.0 ? std::abs(c2) / std::abs(c1) : 0.0;

  const Matrix n_exc = excitation_number(space);
  report.excitation_commutator = (h * n_exc - n_exc * h).cwiseAbs().maxCoeff();

  if (times.empty()) times = {0.1 / params.coupling, 1.0 / params.coupling, 10.0 / params.coupling};
  report.times = times;
  double worst_overlap = 0.0;
  for (double t : times) {
    const Vector evolved = propagator(h, t) * excited;
    report.odd_overlaps.push_back(std::abs(odd.dot(evolved)));
    worst_overlap = std::max(worst_overlap, report.odd_overlaps.back());
  }

  report.pass = report.odd_coupling < kExactTol && report.odd_eigen_residual < kExactTol && worst_overlap < 1e-10 &&
                report.excitation_commutator < kExactTol;
  return report;
}

nlohmann::json to_json(const SelectionRuleReport& report) {
  nlohmann::json overlaps = nlohmann::json::array();
  for (std::size_t i = 0; i < report.times.size(); ++i)
    overlaps.push_back({{"t", round12(report.times[i])}, {"odd_overlap", round12(report.odd_overlaps[i])}});
  return {
      {"odd_coupling", round12(report.odd_coupling)},
      {"odd_eigen_residual", round12(report.odd_eigen_residual)},
      {"excitation_commutator", round12(report.excitation_commutator)},
      {"emitted_c2_over_c1", round12(report.emitted_c2_over_c1)},
      {"evolution", overlaps},
      {"pass", report.pass},
  };
}

}  // namespace e1am::twins
