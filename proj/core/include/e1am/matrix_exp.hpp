#pragma once

#include "e1am/fock_space.hpp"

namespace e1am {

/// exp(A) by [13/13] Pade approximation with scaling and squaring.
Matrix expm(const Matrix& a);

/// exp(-i H t) for a hermitian generator.
Matrix propagator(const Matrix& hamiltonian, double t);

}  // namespace e1am
