#include "e1am/angular_algebra.hpp"

#include "e1am/format.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace e1am {

namespace {

constexpr std::array<std::array<Axis, 3>, 3> kCyclic = {{
    {Axis::x, Axis::y, Axis::z},
    {Axis::y, Axis::z, Axis::x},
    {Axis::z, Axis::x, Axis::y},
}};

const Complex kI{0.0, 1.0};

int family_of(const FockSpace& space) {
  const auto& modes = space.modes();
  const int family = modes.front().family;
  const auto expected = projection_modes(family);
  if (modes.size() != 3 || std::set<ModeLabel>(modes.begin(), modes.end()) !=
                               std::set<ModeLabel>(expected.begin(), expected.end()))
    throw std::invalid_argument("space must hold exactly the modes m = +1, 0, -1");
  return family;
}

double max_abs(const OperatorMatrix& op) { return op.matrix().size() ? op.matrix().cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

std::array<ModeLabel, 3> projection_modes(int family) {
  return {ModeLabel{+1, family}, ModeLabel{0, family}, ModeLabel{-1, family}};
}

FockSpacePtr photon_mode_space(int cutoff) {
  const auto modes = projection_modes();
  return build_space({modes.begin(), modes.end()}, cutoff);
}

const OperatorMatrix& AmOperatorTriple::operator[](Axis axis) const {
  switch (axis) {
    case Axis::x: return x;
    case Axis::y: return y;
    case Axis::z: return z;
  }
  throw std::invalid_argument("bad axis");
}

OperatorMatrix AmOperatorTriple::squared() const { return x * x + y * y + z * z; }

AmOperatorTriple j_operators(const FockSpacePtr& space) {
  const auto [plus, zero, minus] = projection_modes(family_of(*space));
  const auto a_plus = annihilation(space, plus);
  const auto a_zero = annihilation(space, zero);
  const auto a_minus = annihilation(space, minus);
  const auto zero_dag = a_zero.adjoint();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  const OperatorMatrix sum_part = zero_dag * (a_plus + a_minus);
  const OperatorMatrix diff_part = zero_dag * (a_plus - a_minus);
  OperatorMatrix jx{space, (sum_part.matrix() + sum_part.matrix().adjoint()) * inv_sqrt2, Hermiticity::required};
  OperatorMatrix jy{space, kI * (diff_part.matrix() - diff_part.matrix().adjoint()) * inv_sqrt2,
                    Hermiticity::required};
  OperatorMatrix jz{space, (number_operator(space, plus) - number_operator(space, minus)).matrix(),
                    Hermiticity::required};
  return {std::move(jx), std::move(jy), std::move(jz)};
}

Su3GeneratorSet su3_generators(const FockSpacePtr& space) {
  const auto modes = projection_modes(family_of(*space));
  // m -> m - 1 cyclically over (+1, 0, -1): index i -> i + 1 mod 3.
  auto lower = [&](std::size_t i) { return modes[(i + 1) % 3]; };

  auto make = [&](std::size_t i) {
    const auto n_m = number_operator(space, modes[i]);
    const auto n_lower = number_operator(space, lower(i));
    const auto hop = creation(space, modes[i]) * annihilation(space, lower(i));
    OperatorMatrix diag{space, (n_m - n_lower).matrix(), Hermiticity::required};
    OperatorMatrix re{space, (hop.matrix() + hop.matrix().adjoint()) * 0.5, Hermiticity::required};
    OperatorMatrix im{space, (hop.matrix() - hop.matrix().adjoint()) / Complex(0.0, 2.0), Hermiticity::required};
    return std::array{std::move(diag), std::move(re), std::move(im)};
  };

  auto g0 = make(0);
  auto g1 = make(1);
  auto g2 = make(2);
  return {
      {g0[0], g1[0], g2[0]},
      {g0[1], g1[1], g2[1]},
      {g0[2], g1[2], g2[2]},
  };
}

std::vector<OperatorMatrix> Su3GeneratorSet::generators() const {
  return {raw_diagonal[0],  raw_diagonal[1],  offdiag_real[0], offdiag_real[1],
          offdiag_real[2],  offdiag_imag[0],  offdiag_imag[1], offdiag_imag[2]};
}

std::array<Eigen::Matrix3cd, 8> su3_single_photon_blocks() {
  const auto space = photon_mode_space(1);
  const auto modes = projection_modes();
  std::array<Eigen::Index, 3> index{};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto state = fock_state(space, {{modes[i], 1}});
    Eigen::Index hot = 0;
    state.amplitudes().cwiseAbs().maxCoeff(&hot);
    index[i] = hot;
  }
  const auto gens = su3_generators(space).generators();
  std::array<Eigen::Matrix3cd, 8> blocks;
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c)
        blocks[g](static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
            gens[g].matrix()(index[r], index[c]);
  return blocks;
}

nlohmann::json to_json(const AlgebraReport& report) {
  return {
      {"identity", report.identity},
      {"max_residual", round12(report.max_residual)},
      {"tolerance", report.tolerance},
      {"pass", report.pass},
  };
}

AlgebraReport verify_su2(const AmOperatorTriple& triple, double tol) {
  AlgebraReport report{"[J_a,J_b] = i eps_abc J_c", 0.0, tol, false, false};
  for (const auto& [a, b, c] : kCyclic) {
    const auto residual = commutator(triple[a], triple[b]) - kI * triple[c];
    report.max_residual = std::max(report.max_residual, safe_max_abs(residual));
  }
  report.degenerate = max_abs(triple.x) == 0.0 && max_abs(triple.y) == 0.0 && max_abs(triple.z) == 0.0;
  report.pass = report.max_residual < tol;
  return report;
}

std::string to_string(DensityKind kind) { return kind == DensityKind::spin ? "S" : "L"; }

DensityOperator::DensityOperator(DensityKind kind, double kr, double scale,
                                 std::shared_ptr<const AmOperatorTriple> triple)
    : kind_(kind), kr_(kr), scale_(scale), triple_(std::move(triple)) {
  if (!(kr_ >= 0.0)) throw std::invalid_argument("density operator needs kr >= 0");
  if (!triple_) throw std::invalid_argument("density operator needs a J triple");
}

OperatorMatrix DensityOperator::component(Axis axis) const { return (*triple_)[axis] * Complex(scale_); }

DensityOperator density_operator(DensityKind kind, double kr, const radial::RadialModel& model,
                                 std::shared_ptr<const AmOperatorTriple> triple) {
  if (!(kr >= 0.0)) throw std::invalid_argument("density operator needs kr >= 0");
  const double scale = kind == DensityKind::spin ? model.f_spin(kr) : model.f_oam(kr);
  return {kind, kr, scale, std::move(triple)};
}

AlgebraReport density_commutator_check(DensityKind kind_a, DensityKind kind_b, double kr,
                                       const radial::RadialModel& model, double tol) {
  if (!(kr >= 0.0)) throw std::invalid_argument("density commutator check needs kr >= 0");
  auto triple = std::make_shared<const AmOperatorTriple>(j_operators(photon_mode_space()));
  const auto lhs = density_operator(kind_a, kr, model, triple);
  const auto rhs = density_operator(kind_b, kr, model, triple);

  AlgebraReport report;
  report.identity = "[" + to_string(kind_a) + "_a," + to_string(kind_b) + "_b] = i eps_abc f_" +
                    to_string(kind_a) + " " + to_string(kind_b) + "_c";
  report.tolerance = tol;
  double scale = 1.0;
  for (const auto axis : {Axis::x, Axis::y, Axis::z})
    for (const auto other : {Axis::x, Axis::y, Axis::z})
      scale = std::max(scale, max_abs(lhs.component(axis)) * max_abs(rhs.component(other)));

  for (const auto& [a, b, c] : kCyclic) {
    const auto residual =
        commutator(lhs.component(a), rhs.component(b)) - kI * Complex(lhs.scale()) * rhs.component(c);
    report.max_residual = std::max(report.max_residual, safe_max_abs(residual) / scale);
  }
  report.degenerate = lhs.scale() == 0.0 || rhs.scale() == 0.0;
  report.pass = report.max_residual < tol;
  return report;
}

AmVariances am_variances(int m) {
  if (m < -1 || m > 1) throw std::invalid_argument("photon AM projection must be -1, 0 or +1");
  const auto space = photon_mode_space();
  const auto triple = j_operators(space);
  const auto state = fock_state(space, {{ModeLabel{m, 0}, 1}});
  return {variance(state, triple.x), variance(state, triple.y), variance(state, triple.z)};
}

}  // namespace e1am
