#pragma once

// Photon twins from the j_e = 2, m_e = 0 -> j_g = 0 transition: two-qutrit
// states in the m = +1, 0, -1 basis, the parity basis, the entanglement
// measure |c1 c2^2|, local SU(3) expectations, and the atom-field
// Hamiltonian with its pair-emission selection rule.

#include "e1am/fock_space.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <functional>
#include <vector>

namespace e1am::twins {

/// Row/column index of projection m in the qutrit basis (+1, 0, -1).
std::size_t qutrit_index(int m);

/// Amplitudes over |1_{m1}; 1_{m2}>, photon 1 indexing rows.
class TwoQutritState {
 public:
  /// Requires unit Frobenius norm within kExactTol.
  explicit TwoQutritState(const Eigen::Matrix3cd& amps);

  const Eigen::Matrix3cd& amps() const { return amps_; }
  Complex amplitude(int m1, int m2) const;
  Complex inner(const TwoQutritState& other) const;
  /// Exchanges the two photons.
  TwoQutritState swapped() const;

 private:
  Eigen::Matrix3cd amps_;
};

struct ParityBasis {
  TwoQutritState psi1;  // |1_0; 1_0>
  TwoQutritState psi2;  // (|1_+; 1_-> + |1_-; 1_+>) / sqrt 2
  TwoQutritState psi3;  // (|1_+; 1_-> - |1_-; 1_+>) / sqrt 2
};

ParityBasis parity_basis();

/// c1 psi1 + c2 psi2, with |c1|^2 + |c2|^2 = 1.
struct RadiatedState {
  Complex c1;
  Complex c2;

  /// Throws std::invalid_argument for an unnormalized pair.
  RadiatedState(Complex c1, Complex c2);
  TwoQutritState to_state() const;
};

/// |c1| |c2|^2.
double entanglement_measure(const RadiatedState& state);

/// Expectations of the 8 single-photon SU(3) generators on photon 1
/// (entries 0..7) and photon 2 (entries 8..15).
std::array<double, 16> local_expectations(const TwoQutritState& state);

struct EntanglementOptimum {
  double c1_abs = 0.0;
  double c2_abs = 0.0;
  double mu_max = 0.0;
  double local_expectation_max_abs = 0.0;
  bool variational_pass = false;
};

/// Argmax over a in [0, 1] of objective(a, sqrt(1 - a^2)): a 10^4-point grid
/// scan followed by golden-section refinement around the best grid point.
double maximize_on_arc(const std::function<double(double, double)>& objective);

/// Maximizes the measure over |c1| and checks the variational condition
/// (all local expectations below variational_tol) at the optimum.
EntanglementOptimum maximize_entanglement(double variational_tol = 1e-8);

nlohmann::json to_json(const EntanglementOptimum& optimum);

enum class AtomLevel { ground = 0, excited = 1 };

/// Two-level atom times two direction-tagged photon families (family 1 and
/// 2, modes m = +1, 0, -1 each) with at most two photons. Index layout:
/// level * field_dim + field_index.
class AtomFieldSpace {
 public:
  AtomFieldSpace();

  const FockSpacePtr& field() const { return field_; }
  std::size_t dim() const { return 2 * field_->dim(); }
  std::size_t index(AtomLevel level, std::size_t field_index) const;

  /// Lifts a field operator to the joint space (identity on the atom).
  Matrix lift_field(const Matrix& field_op) const;
  /// Lifts a 2x2 atomic operator (rows/cols indexed by AtomLevel).
  Matrix lift_atom(const Eigen::Matrix2cd& atom_op) const;

  /// |level> times the vacuum.
  Vector vacuum(AtomLevel level) const;
  /// |level> times a two-photon state with one photon per family.
  Vector embed(AtomLevel level, const TwoQutritState& pair) const;

 private:
  FockSpacePtr field_;
};

struct HamiltonianParams {
  double omega = 1.0;
  double omega0 = 2.0;
  double coupling = 0.05;
};

struct AtomFieldOperator {
  std::shared_ptr<const AtomFieldSpace> space;
  Matrix matrix;
};

/// H = omega sum n + omega0 R_ee + coupling sum_{m + m' = 0} (R_eg a_m a'_{m'} + h.c.),
/// a acting on family 1 and a' on family 2. Throws std::logic_error if the
/// assembled matrix is not hermitian.
AtomFieldOperator interaction_hamiltonian(std::shared_ptr<const AtomFieldSpace> space,
                                          const HamiltonianParams& params);

/// R_ee + (total photon number) / 2.
Matrix excitation_number(const AtomFieldSpace& space);

struct SelectionRuleReport {
  /// |<g psi3| H |e vac>|
  double odd_coupling = 0.0;
  /// |H |g psi3> - 2 omega |g psi3>|
  double odd_eigen_residual = 0.0;
  /// |<g psi3| exp(-iHt) |e vac>| at each sampled time.
  std::vector<double> times;
  std::vector<double> odd_overlaps;
  /// |[H, N_exc]| largest entry.
  double excitation_commutator = 0.0;
  /// Amplitude ratio |c2 / c1| of the even pair state coupled to |e vac>.
  double emitted_c2_over_c1 = 0.0;
  bool pass = false;
};

/// Sampled times default to {0.1, 1, 10} / coupling.
SelectionRuleReport selection_rule_check(const AtomFieldOperator& hamiltonian, const HamiltonianParams& params,
                                         std::vector<double> times = {});

nlohmann::json to_json(const SelectionRuleReport& report);

}  // namespace e1am::twins
