#pragma once

#include "sharpgpt/algebra.hpp"

#include <Eigen/Dense>

namespace sharpgpt {

// Natural matrix representations behind the coordinate vectors. The
// quaternionic family is carried as its complex 2n x 2n embedding
// [[A, B], [-conj(B), conj(A)]] (entry w+xi+yj+zk -> A = w+xi, B = y+zi).

Eigen::MatrixXd sym_rep(const JordanElement& x);           // RealSymmetric
Eigen::MatrixXcd herm_rep(const JordanElement& x);         // ComplexHermitian
Eigen::MatrixXcd quat_embed_rep(const JordanElement& x);   // QuaternionicHermitian

JordanElement element_from_sym(const AlgebraKind& kind, const Eigen::MatrixXd& m);
JordanElement element_from_herm(const AlgebraKind& kind, const Eigen::MatrixXcd& m);
JordanElement element_from_quat_embed(const AlgebraKind& kind, const Eigen::MatrixXcd& m);

// Realification: multiplication by A + iB becomes [[A, -B], [B, A]] on
// stacked (Re, Im) vectors; an algebra homomorphism, spectra double.
Eigen::MatrixXd realify(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd unrealify(const Eigen::MatrixXd& z);

// Right multiplication by the quaternion unit j on embedded column vectors.
// Antilinear, squares to -1, and <w, quat_structure_map(w)> = 0 exactly.
Eigen::VectorXcd quat_structure_map(const Eigen::VectorXcd& w);

}  // namespace sharpgpt
