#pragma once
// Dense complex linear-algebra kernel: Kronecker products, span ranks,
// commutants, eigenvalues. All operations are pure; tolerances are threaded
// explicitly through Tolerance (no hidden globals).

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace ddgl2 {

using Complex = std::complex<double>;
using MatrixC = Eigen::MatrixXcd;
using VectorC = Eigen::VectorXcd;

struct Tolerance {
  double residual_abs = 1e-10;  // absolute residual threshold (Frobenius)
  double rank_rel = 1e-8;       // singular values below rank_rel*sigma_max count as zero
  double cluster_rel = 1e-7;    // relative gap for eigenvalue clustering
};

// n x n matrix unit e_ij (1-based indices, matching the usual e_{ij} notation).
MatrixC unit(int i, int j, int n = 4);

MatrixC kron(const MatrixC& a, const MatrixC& b);

// Column-major vectorization (Eigen's native layout).
VectorC vec(const MatrixC& m);
MatrixC unvec(const VectorC& v, int rows, int cols);

// Dimension of the complex linear span of the given (same-shape) matrices.
int span_dim(const std::vector<MatrixC>& mats, const Tolerance& tol = {});

// Orthonormal (Frobenius) basis of the span.
std::vector<MatrixC> orthonormal_span(const std::vector<MatrixC>& mats,
                                      const Tolerance& tol = {});

// True iff m lies in span(basis) within the rank tolerance.
bool in_span(const std::vector<MatrixC>& basis, const MatrixC& m,
             const Tolerance& tol = {});

// Orthonormal basis of {X : [X, M] = 0 for every M in mats}.
// Empty input returns the full matrix-space basis.
std::vector<MatrixC> commutant(const std::vector<MatrixC>& mats,
                               const Tolerance& tol = {});

// Full eigenvalue multiset of a general complex matrix, sorted by
// (real, imag) for reproducibility.
std::vector<Complex> eigenvalues(const MatrixC& m, const Tolerance& tol = {});

double frob(const MatrixC& m);

}  // namespace ddgl2
