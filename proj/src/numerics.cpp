#include "ddgl2/numerics.hpp"

#include <algorithm>
#include <stdexcept>

namespace ddgl2 {

MatrixC unit(int i, int j, int n) {
  MatrixC m = MatrixC::Zero(n, n);
  m(i - 1, j - 1) = 1.0;
  return m;
}

MatrixC kron(const MatrixC& a, const MatrixC& b) {
  MatrixC out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

VectorC vec(const MatrixC& m) {
  return Eigen::Map<const VectorC>(m.data(), m.size());
}

MatrixC unvec(const VectorC& v, int rows, int cols) {
  return Eigen::Map<const MatrixC>(v.data(), rows, cols);
}

namespace {

// Rows of the returned matrix are vec(m)^T for each input matrix.
MatrixC stack_rows(const std::vector<MatrixC>& mats) {
  if (mats.empty()) return MatrixC(0, 0);
  const Eigen::Index n = mats.front().size();
  MatrixC a(static_cast<Eigen::Index>(mats.size()), n);
  for (size_t k = 0; k < mats.size(); ++k) {
    if (mats[k].size() != n) throw std::invalid_argument("span: shape mismatch");
    a.row(static_cast<Eigen::Index>(k)) = vec(mats[k]).transpose();
  }
  return a;
}

int svd_rank(const Eigen::JacobiSVD<MatrixC>& svd, double rank_rel) {
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) <= 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rank_rel * s(0)) ++r;
  return r;
}

}  // namespace

int span_dim(const std::vector<MatrixC>& mats, const Tolerance& tol) {
  if (mats.empty()) return 0;
  MatrixC a = stack_rows(mats);
  Eigen::JacobiSVD<MatrixC> svd(a);
  return svd_rank(svd, tol.rank_rel);
}

std::vector<MatrixC> orthonormal_span(const std::vector<MatrixC>& mats,
                                      const Tolerance& tol) {
  if (mats.empty()) return {};
  const int rows = static_cast<int>(mats.front().rows());
  const int cols = static_cast<int>(mats.front().cols());
  MatrixC a = stack_rows(mats);
  Eigen::JacobiSVD<MatrixC> svd(a, Eigen::ComputeThinV);
  const int r = svd_rank(svd, tol.rank_rel);
  std::vector<MatrixC> basis;
  basis.reserve(r);
  // Row space of a = span of conj(V) columns; unvec back to matrices.
  for (int k = 0; k < r; ++k)
    basis.push_back(unvec(svd.matrixV().col(k).conjugate(), rows, cols));
  return basis;
}

bool in_span(const std::vector<MatrixC>& basis, const MatrixC& m,
             const Tolerance& tol) {
  const double nm = frob(m);
  if (nm == 0.0) return true;
  if (basis.empty()) return false;
  std::vector<MatrixC> all = basis;
  all.push_back(m);
  return span_dim(all, tol) == span_dim(basis, tol);
}

std::vector<MatrixC> commutant(const std::vector<MatrixC>& mats,
                               const Tolerance& tol) {
  int n = 4;
  if (!mats.empty()) {
    n = static_cast<int>(mats.front().rows());
    for (const auto& m : mats)
      if (m.rows() != n || m.cols() != n)
        throw std::invalid_argument("commutant: square equal shapes required");
  }
  const int n2 = n * n;
  if (mats.empty()) {
    std::vector<MatrixC> full;
    for (int j = 1; j <= n; ++j)
      for (int i = 1; i <= n; ++i) full.push_back(unit(i, j, n));
    return full;
  }
  // vec(XM - MX) = (M^T (x) I - I (x) M) vec(X)   [column-major vec]
  MatrixC sys(static_cast<Eigen::Index>(mats.size()) * n2, n2);
  const MatrixC id = MatrixC::Identity(n, n);
  for (size_t k = 0; k < mats.size(); ++k)
    sys.middleRows(static_cast<Eigen::Index>(k) * n2, n2) =
        kron(mats[k].transpose(), id) - kron(id, mats[k]);
  Eigen::JacobiSVD<MatrixC> svd(sys, Eigen::ComputeFullV);
  const int r = svd_rank(svd, tol.rank_rel);
  std::vector<MatrixC> basis;
  for (int k = r; k < n2; ++k)
    basis.push_back(unvec(svd.matrixV().col(k), n, n));
  return basis;
}

std::vector<Complex> eigenvalues(const MatrixC& m, const Tolerance&) {
  Eigen::ComplexEigenSolver<MatrixC> es(m, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigenvalue solver failed to converge");
  std::vector<Complex> ev(es.eigenvalues().data(),
                          es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(ev.begin(), ev.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return ev;
}

double frob(const MatrixC& m) { return m.norm(); }

}  // namespace ddgl2
