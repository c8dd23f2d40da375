#pragma once

// Exact linear algebra over Q(i) and the complex embedding of quaternionic matrices.

#include "adreal/matrix.hpp"

#include <cstddef>
#include <vector>

namespace adreal {

/// Rank over Q(i), by fraction-free (Bareiss) elimination over the Gaussian integers.
std::size_t exact_rank(const MatrixC& a);

/// Determinant by fraction-free elimination.
Gaussian det_C(const MatrixC& a);

MatrixC inverse_C(const MatrixC& a);

/// Basis of {x : a x = 0}; one column per free variable, free variables in increasing index order.
std::vector<MatrixC> nullspace(const MatrixC& a);

/// Reduced row echelon form; pivot columns written to `pivots` when non-null.
MatrixC rref(MatrixC a, std::vector<std::size_t>* pivots = nullptr);

/// Phi(A1 + A2 j) = [[A1, A2], [-conj(A2), conj(A1)]].
MatrixC phi_embed(const MatrixH& a);

/// Left inverse of phi_embed. Throws DimensionMismatch when `m` is not of the Phi block shape.
MatrixH phi_project(const MatrixC& m);

/// det(Phi(A)); always a nonnegative rational.
Rational det_H(const MatrixH& a);

/// tr(Phi(A)) = 2 * sum Re(a_ii).
Gaussian tr_H(const MatrixH& a);

/// Inverse through Phi: invert over Q(i) and project back.
MatrixH inverse_H(const MatrixH& a);

/// Quaternionic Gauss-Jordan with left row operations. Used to cross-check inverse_H.
MatrixH inverse_H_direct(const MatrixH& a);

} // namespace adreal
