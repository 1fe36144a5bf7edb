#pragma once

#include <Eigen/Dense>

namespace sharpgpt {

struct SymmetricEigen {
    Eigen::VectorXd values;   // descending
    Eigen::MatrixXd vectors;  // orthonormal columns, vectors.col(i) pairs with values(i)
};

// Cyclic Jacobi eigensolver for dense real symmetric matrices. Deterministic:
// fixed sweep order, no pivot randomization, so repeated runs are bit-identical.
// Throws std::runtime_error if the off-diagonal mass has not vanished after
// max_sweeps sweeps.
SymmetricEigen jacobi_eigensolver(Eigen::MatrixXd a, int max_sweeps = 50);

}  // namespace sharpgpt
