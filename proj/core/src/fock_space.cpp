#include "e1am/fock_space.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace e1am {

namespace {

void enumerate(std::vector<int>& prefix, std::size_t num_modes, int budget,
               std::vector<std::vector<int>>& out) {
  if (prefix.size() == num_modes) {
    out.push_back(prefix);
    return;
  }
  for (int n = 0; n <= budget; ++n) {
    prefix.push_back(n);
    enumerate(prefix, num_modes, budget - n, out);
    prefix.pop_back();
  }
}

void require_same_space(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (!same_space(a, b)) throw std::invalid_argument("operators act on different Fock spaces");
}

}  // namespace

std::string ModeLabel::name() const {
  std::string s = "m=";
  s += projection > 0 ? "+" + std::to_string(projection) : std::to_string(projection);
  if (family != 0) s += "/" + std::to_string(family);
  return s;
}

FockSpace::FockSpace(std::vector<ModeLabel> modes, int cutoff) : modes_(std::move(modes)), cutoff_(cutoff) {
  if (modes_.empty()) throw std::invalid_argument("Fock space needs at least one mode");
  if (cutoff_ < 0) throw std::invalid_argument("Fock space cutoff must be non-negative");
  if (std::set<ModeLabel>(modes_.begin(), modes_.end()).size() != modes_.size())
    throw std::invalid_argument("duplicate mode label");

  std::vector<int> prefix;
  prefix.reserve(modes_.size());
  enumerate(prefix, modes_.size(), cutoff_, basis_);
  for (std::size_t i = 0; i < basis_.size(); ++i) lookup_.emplace(basis_[i], i);
}

int FockSpace::total_occupation(std::size_t index) const {
  const auto& occ = basis_.at(index);
  return std::accumulate(occ.begin(), occ.end(), 0);
}

std::optional<std::size_t> FockSpace::index_of(std::span<const int> occupations) const {
  auto it = lookup_.find(std::vector<int>(occupations.begin(), occupations.end()));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

bool FockSpace::has_mode(const ModeLabel& mode) const {
  return std::find(modes_.begin(), modes_.end(), mode) != modes_.end();
}

std::size_t FockSpace::mode_index(const ModeLabel& mode) const {
  auto it = std::find(modes_.begin(), modes_.end(), mode);
  if (it == modes_.end()) throw std::invalid_argument("unknown mode label " + mode.name());
  return static_cast<std::size_t>(it - modes_.begin());
}

FockSpacePtr build_space(std::vector<ModeLabel> modes, int cutoff) {
  return std::make_shared<const FockSpace>(std::move(modes), cutoff);
}

// OperatorMatrix

OperatorMatrix::OperatorMatrix(FockSpacePtr space, Matrix entries, Hermiticity hermiticity)
    : space_(std::move(space)), entries_(std::move(entries)) {
  if (!space_) throw std::invalid_argument("operator needs a Fock space");
  const auto n = static_cast<Eigen::Index>(space_->dim());
  if (entries_.rows() != n || entries_.cols() != n)
    throw std::invalid_argument("operator dimensions do not match the Fock space");
  if (hermiticity == Hermiticity::required && !is_hermitian())
    throw std::logic_error("operator flagged hermitian is not hermitian");
}

bool OperatorMatrix::is_hermitian(double tol) const {
  return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

OperatorMatrix OperatorMatrix::adjoint() const { return {space_, entries_.adjoint()}; }

OperatorMatrix OperatorMatrix::operator+(const OperatorMatrix& rhs) const {
  require_same_space(*this, rhs);
  return {space_, entries_ + rhs.entries_};
}

OperatorMatrix OperatorMatrix::operator-(const OperatorMatrix& rhs) const {
  require_same_space(*this, rhs);
  return {space_, entries_ - rhs.entries_};
}

OperatorMatrix OperatorMatrix::operator*(const OperatorMatrix& rhs) const {
  require_same_space(*this, rhs);
  return {space_, entries_ * rhs.entries_};
}

OperatorMatrix OperatorMatrix::operator*(Complex scale) const { return {space_, entries_ * scale}; }

bool same_space(const OperatorMatrix& a, const OperatorMatrix& b) {
  return a.space() == b.space() || *a.space() == *b.space();
}

OperatorMatrix zero_operator(const FockSpacePtr& space) {
  const auto n = static_cast<Eigen::Index>(space->dim());
  return {space, Matrix::Zero(n, n)};
}

OperatorMatrix identity_operator(const FockSpacePtr& space) {
  const auto n = static_cast<Eigen::Index>(space->dim());
  return {space, Matrix::Identity(n, n)};
}

OperatorMatrix annihilation(const FockSpacePtr& space, const ModeLabel& mode) {
  const std::size_t slot = space->mode_index(mode);
  const auto n = static_cast<Eigen::Index>(space->dim());
  Matrix a = Matrix::Zero(n, n);
  for (std::size_t col = 0; col < space->dim(); ++col) {
    auto occ = space->occupations(col);
    const int count = occ[slot];
    if (count == 0) continue;
    std::vector<int> lowered(occ.begin(), occ.end());
    lowered[slot] -= 1;
    const auto row = space->index_of(lowered);
    a(static_cast<Eigen::Index>(*row), static_cast<Eigen::Index>(col)) = std::sqrt(static_cast<double>(count));
  }
  return {space, std::move(a)};
}

OperatorMatrix creation(const FockSpacePtr& space, const ModeLabel& mode) {
  return annihilation(space, mode).adjoint();
}

OperatorMatrix number_operator(const FockSpacePtr& space, const ModeLabel& mode) {
  const std::size_t slot = space->mode_index(mode);
  const auto n = static_cast<Eigen::Index>(space->dim());
  Matrix diag = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < space->dim(); ++i)
    diag(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = space->occupations(i)[slot];
  return {space, std::move(diag), Hermiticity::required};
}

OperatorMatrix total_number_operator(const FockSpacePtr& space) {
  const auto n = static_cast<Eigen::Index>(space->dim());
  Matrix diag = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < space->dim(); ++i)
    diag(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = space->total_occupation(i);
  return {space, std::move(diag)};
}

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_space(a, b);
  return {a.space(), a.matrix() * b.matrix() - b.matrix() * a.matrix()};
}

OperatorMatrix safe_projector(const FockSpacePtr& space) {
  const auto n = static_cast<Eigen::Index>(space->dim());
  Matrix p = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < space->dim(); ++i)
    if (space->total_occupation(i) < space->cutoff())
      p(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = 1.0;
  return {space, std::move(p)};
}

double safe_max_abs(const OperatorMatrix& op) {
  const Matrix p = safe_projector(op.space()).matrix();
  const Matrix projected = p * op.matrix() * p;
  return projected.size() == 0 ? 0.0 : projected.cwiseAbs().maxCoeff();
}

// StateVector

StateVector::StateVector(FockSpacePtr space, Vector amplitudes)
    : space_(std::move(space)), amplitudes_(std::move(amplitudes)) {
  if (!space_) throw std::invalid_argument("state needs a Fock space");
  if (static_cast<std::size_t>(amplitudes_.size()) != space_->dim())
    throw std::invalid_argument("state dimension does not match the Fock space");
  if (std::abs(amplitudes_.norm() - 1.0) > kExactTol) throw std::invalid_argument("state is not normalized");
}

StateVector StateVector::normalized(FockSpacePtr space, Vector amplitudes) {
  const double norm = amplitudes.norm();
  if (norm == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
  return {std::move(space), amplitudes / norm};
}

StateVector fock_state(const FockSpacePtr& space, const std::map<ModeLabel, int>& occupations) {
  std::vector<int> occ(space->num_modes(), 0);
  for (const auto& [mode, count] : occupations) {
    if (count < 0) throw std::invalid_argument("negative occupation for " + mode.name());
    occ[space->mode_index(mode)] = count;
  }
  const auto index = space->index_of(occ);
  if (!index) throw std::invalid_argument("occupation exceeds the Fock space cutoff");
  Vector amps = Vector::Zero(static_cast<Eigen::Index>(space->dim()));
  amps(static_cast<Eigen::Index>(*index)) = 1.0;
  return {space, std::move(amps)};
}

StateVector vacuum_state(const FockSpacePtr& space) { return fock_state(space, {}); }

Vector apply(const OperatorMatrix& op, const StateVector& state) {
  if (!(op.space() == state.space() || *op.space() == *state.space()))
    throw std::invalid_argument("operator and state act on different Fock spaces");
  return op.matrix() * state.amplitudes();
}

Complex expectation(const StateVector& state, const OperatorMatrix& op) {
  return state.amplitudes().dot(apply(op, state));
}

double variance(const StateVector& state, const OperatorMatrix& op) {
  if (!op.is_hermitian()) throw std::invalid_argument("variance requires a hermitian operator");
  const Vector applied = apply(op, state);
  const double second = applied.squaredNorm();
  const double first = state.amplitudes().dot(applied).real();
  return std::max(0.0, second - first * first);
}

}  // namespace e1am
