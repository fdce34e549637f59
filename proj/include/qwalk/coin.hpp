#pragma once

#include <Eigen/Core>

#include "qwalk/linalg.hpp"

namespace qwalk {

using CoinOperator = Eigen::MatrixXcd;

// [[cos t, sin t], [sin t, -cos t]] — Hermitian and unitary, so self-inverse.
CoinOperator rotation_coin(double theta);

// Four-state diffusion coin: 1/2 * (all-ones minus twice the identity sign
// pattern), i.e. -1 on the diagonal and +1 elsewhere, scaled by 1/2.
CoinOperator grover_coin();

CoinOperator hadamard_coin();  // rotation_coin(pi/4)

CoinOperator pauli_x();
CoinOperator pauli_y();
CoinOperator pauli_z();

}  // namespace qwalk
