#pragma once

// Total angular-momentum operators of the E1 photon on the m = +1, 0, -1
// mode triple, the SU(3) generator set used as local measurements, and the
// radially scaled spin / orbital density operators.

#include "e1am/fock_space.hpp"
#include "e1am/radial_fields.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <memory>
#include <string>
#include <vector>

namespace e1am {

enum class Axis { x = 0, y = 1, z = 2 };

/// Mode labels m = +1, 0, -1 (in that order) for one photon family.
std::array<ModeLabel, 3> projection_modes(int family = 0);

/// Three-mode space for the photon AM triple. Default cutoff 3 holds the
/// two-photon sector plus one ladder step.
FockSpacePtr photon_mode_space(int cutoff = 3);

struct AmOperatorTriple {
  OperatorMatrix x;
  OperatorMatrix y;
  OperatorMatrix z;

  const OperatorMatrix& operator[](Axis axis) const;
  /// J^2 = Jx^2 + Jy^2 + Jz^2.
  OperatorMatrix squared() const;
};

/// Throws std::invalid_argument unless the space has exactly the modes of
/// projection_modes(family) for some family.
AmOperatorTriple j_operators(const FockSpacePtr& space);

struct Su3GeneratorSet {
  /// n_m - n_{m-1} for m = +1, 0, -1 with cyclic m - 1 (= +1 when m = -1).
  /// They sum to zero; only the first two enter generators().
  std::array<OperatorMatrix, 3> raw_diagonal;
  /// (a+_m a_{m-1} + h.c.) / 2
  std::array<OperatorMatrix, 3> offdiag_real;
  /// (a+_m a_{m-1} - h.c.) / (2i)
  std::array<OperatorMatrix, 3> offdiag_imag;

  /// The 8 independent generators: two diagonal, three real, three imaginary.
  std::vector<OperatorMatrix> generators() const;
};

Su3GeneratorSet su3_generators(const FockSpacePtr& space);

/// Generators restricted to the single-photon block, as 3x3 matrices in the
/// basis |1_+>, |1_0>, |1_->.
std::array<Eigen::Matrix3cd, 8> su3_single_photon_blocks();

struct AlgebraReport {
  std::string identity;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  /// All operators vanish, so the identity is trivially 0 = 0.
  bool degenerate = false;
};

nlohmann::json to_json(const AlgebraReport& report);

/// Max residual of [J_a, J_b] - i eps_abc J_c over the cyclic triples, on
/// the truncation-safe subspace.
AlgebraReport verify_su2(const AmOperatorTriple& triple, double tol = kExactTol);

enum class DensityKind { spin, oam };

std::string to_string(DensityKind kind);

/// S(r) = f_S(kr) J or L(r) = f_L(kr) J, kept as a scale and a shared triple.
class DensityOperator {
 public:
  DensityOperator(DensityKind kind, double kr, double scale, std::shared_ptr<const AmOperatorTriple> triple);

  DensityKind kind() const { return kind_; }
  double kr() const { return kr_; }
  double scale() const { return scale_; }
  const AmOperatorTriple& unscaled() const { return *triple_; }
  OperatorMatrix component(Axis axis) const;

 private:
  DensityKind kind_;
  double kr_;
  double scale_;
  std::shared_ptr<const AmOperatorTriple> triple_;
};

DensityOperator density_operator(DensityKind kind, double kr, const radial::RadialModel& model,
                                 std::shared_ptr<const AmOperatorTriple> triple);

/// Checks [A_a(r), B_b(r)] = i eps_abc f_A(kr) B_c(r) for the density kinds
/// A, B. The residual is relative to max(1, |A| |B|) with |.| the largest
/// entry magnitude. Throws for negative kr.
AlgebraReport density_commutator_check(DensityKind kind_a, DensityKind kind_b, double kr,
                                       const radial::RadialModel& model, double tol = kExactTol);

struct AmVariances {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Variances of Jx, Jy, Jz in the single-photon Fock state |1_m>, m in {-1, 0, +1}.
AmVariances am_variances(int m);

}  // namespace e1am
