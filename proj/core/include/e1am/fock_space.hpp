#pragma once

// Truncated multimode bosonic Fock space, dense operators on it and
// normalized state vectors.

#include <Eigen/Dense>

#include <complex>
#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace e1am {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Tolerance for assertions that are exact up to a handful of matrix products.
inline constexpr double kExactTol = 1e-12;

/// Photon mode label: angular-momentum projection m, plus a family tag that
/// distinguishes photons travelling in different directions.
struct ModeLabel {
  int projection = 0;
  int family = 0;

  std::string name() const;
  auto operator<=>(const ModeLabel&) const = default;
};

class FockSpace;
using FockSpacePtr = std::shared_ptr<const FockSpace>;

/// Occupation-number basis with total occupation <= cutoff. Basis tuples are
/// ordered lexicographically, so the vacuum is always index 0.
class FockSpace {
 public:
  FockSpace(std::vector<ModeLabel> modes, int cutoff);

  const std::vector<ModeLabel>& modes() const { return modes_; }
  std::size_t num_modes() const { return modes_.size(); }
  int cutoff() const { return cutoff_; }
  std::size_t dim() const { return basis_.size(); }

  std::span<const int> occupations(std::size_t index) const { return basis_.at(index); }
  int total_occupation(std::size_t index) const;
  std::optional<std::size_t> index_of(std::span<const int> occupations) const;

  bool has_mode(const ModeLabel& mode) const;
  /// Throws std::invalid_argument for labels not in the space.
  std::size_t mode_index(const ModeLabel& mode) const;

  bool operator==(const FockSpace& other) const {
    return cutoff_ == other.cutoff_ && modes_ == other.modes_;
  }

 private:
  std::vector<ModeLabel> modes_;
  int cutoff_;
  std::vector<std::vector<int>> basis_;
  std::map<std::vector<int>, std::size_t> lookup_;
};

/// Errors: empty mode list, duplicate labels, negative cutoff.
FockSpacePtr build_space(std::vector<ModeLabel> modes, int cutoff);

enum class Hermiticity { unchecked, required };

/// Dense complex matrix acting on a FockSpace basis.
class OperatorMatrix {
 public:
  OperatorMatrix(FockSpacePtr space, Matrix entries, Hermiticity hermiticity = Hermiticity::unchecked);

  const FockSpacePtr& space() const { return space_; }
  const Matrix& matrix() const { return entries_; }
  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }

  bool is_hermitian(double tol = kExactTol) const;
  OperatorMatrix adjoint() const;

  OperatorMatrix operator+(const OperatorMatrix& rhs) const;
  OperatorMatrix operator-(const OperatorMatrix& rhs) const;
  OperatorMatrix operator*(const OperatorMatrix& rhs) const;
  OperatorMatrix operator*(Complex scale) const;
  friend OperatorMatrix operator*(Complex scale, const OperatorMatrix& op) { return op * scale; }

 private:
  FockSpacePtr space_;
  Matrix entries_;
};

bool same_space(const OperatorMatrix& a, const OperatorMatrix& b);

OperatorMatrix zero_operator(const FockSpacePtr& space);
OperatorMatrix identity_operator(const FockSpacePtr& space);
OperatorMatrix annihilation(const FockSpacePtr& space, const ModeLabel& mode);
/// a^+ maps states at the cutoff to zero; it is the exact adjoint of annihilation().
OperatorMatrix creation(const FockSpacePtr& space, const ModeLabel& mode);
OperatorMatrix number_operator(const FockSpacePtr& space, const ModeLabel& mode);
OperatorMatrix total_number_operator(const FockSpacePtr& space);

/// AB - BA. Throws std::invalid_argument on a space mismatch.
OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);

/// Projector onto total occupation <= cutoff - 1, where a single ladder
/// operator cannot leave the truncated basis.
OperatorMatrix safe_projector(const FockSpacePtr& space);

/// Largest entry magnitude of P * op * P with P = safe_projector.
double safe_max_abs(const OperatorMatrix& op);

class StateVector {
 public:
  /// Requires a unit-norm vector (within kExactTol).
  StateVector(FockSpacePtr space, Vector amplitudes);
  static StateVector normalized(FockSpacePtr space, Vector amplitudes);

  const FockSpacePtr& space() const { return space_; }
  const Vector& amplitudes() const { return amplitudes_; }

 private:
  FockSpacePtr space_;
  Vector amplitudes_;
};

/// Occupations for modes not listed are zero.
StateVector fock_state(const FockSpacePtr& space, const std::map<ModeLabel, int>& occupations);
StateVector vacuum_state(const FockSpacePtr& space);

/// Unnormalized op|state>.
Vector apply(const OperatorMatrix& op, const StateVector& state);

Complex expectation(const StateVector& state, const OperatorMatrix& op);
/// <op^2> - <op>^2, clamped at zero. Throws for non-hermitian op.
double variance(const StateVector& state, const OperatorMatrix& op);

}  // namespace e1am
