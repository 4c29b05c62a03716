#include "ddgl2/ddq.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace ddgl2 {

GeneratorQuad trivial_quad(int n, Complex q) {
  GeneratorQuad t;
  t.c11 = MatrixC::Identity(n, n);
  t.c22 = MatrixC::Identity(n, n);
  t.c12 = MatrixC::Zero(n, n);
  t.c21 = MatrixC::Zero(n, n);
  t.q = q;
  return t;
}

double RelationReport::max() const {
  return *std::max_element(r.begin(), r.end());
}

double DetRelationReport::max() const {
  return std::max({comm_c11, comm_c22, spinor_c21, spinor_c12});
}

RelationReport check_relations(const GeneratorQuad& rep, const Tolerance&) {
  const auto &a = rep.c11, &b = rep.c12, &c = rep.c21, &d = rep.c22;
  const Complex q = rep.q;
  RelationReport out;
  out.r[0] = frob(a * b - b * a);
  out.r[1] = frob(c * d - d * c);
  out.r[2] = frob(c * a - q * a * c);
  out.r[3] = frob(d * b - q * b * d);
  out.r[4] = frob(c * b - q * b * c);
  out.r[5] = frob((d * a - a * d) - (q - 1.0) * b * c);
  out.perturbation = frob(b * c);
  return out;
}

MatrixC quantum_determinant(const GeneratorQuad& rep) {
  return rep.c11 * rep.c22 - rep.c12 * rep.c21;
}

DetRelationReport determinant_relation_suite(const GeneratorQuad& rep,
                                             const Tolerance& tol) {
  const MatrixC D = quantum_determinant(rep);
  const Complex q = rep.q;
  DetRelationReport out;
  out.comm_c11 = frob(D * rep.c11 - rep.c11 * D);
  out.comm_c22 = frob(D * rep.c22 - rep.c22 * D);
  out.spinor_c21 = frob(rep.c21 * D - q * D * rep.c21);
  out.spinor_c12 = frob(D * rep.c12 - q * rep.c12 * D);
  out.applicable = check_relations(rep, tol).pass(tol.residual_abs);
  return out;
}

MatrixC coproduct_c11(const GeneratorQuad& l, const GeneratorQuad& r) {
  return kron(l.c11, r.c11) + kron(l.c12, r.c21);
}
MatrixC coproduct_c12(const GeneratorQuad& l, const GeneratorQuad& r) {
  return kron(l.c11, r.c12) + kron(l.c12, r.c22);
}
MatrixC coproduct_c21(const GeneratorQuad& l, const GeneratorQuad& r) {
  return kron(l.c21, r.c11) + kron(l.c22, r.c21);
}
MatrixC coproduct_c22(const GeneratorQuad& l, const GeneratorQuad& r) {
  return kron(l.c21, r.c12) + kron(l.c22, r.c22);
}

MatrixC coproduct_d(const GeneratorQuad& l, const GeneratorQuad& r) {
  const MatrixC pl = l.c11 * l.c22, ql_ = l.c12 * l.c21;
  const MatrixC pr = r.c11 * r.c22, qr_ = r.c12 * r.c21;
  return kron(pl, pr) - kron(pl, qr_) - kron(ql_, pr) + kron(ql_, qr_);
}

MatrixC coproduct_two_site(const ElementExpr& x, const GeneratorQuad& l,
                           const GeneratorQuad& r) {
  if (l.dim() != r.dim()) throw std::invalid_argument("coproduct: dimension mismatch");
  const Eigen::Index n2 = static_cast<Eigen::Index>(l.dim()) * r.dim();
  MatrixC out = MatrixC::Zero(n2, n2);
  if (x.A != 0.0) out += x.A * coproduct_d(l, r);
  if (x.B != 0.0) out += x.B * coproduct_c11(l, r);
  if (x.C != 0.0) out += x.C * coproduct_c22(l, r);
  if (x.B12 != 0.0) out += x.B12 * coproduct_c12(l, r);
  if (x.B21 != 0.0) out += x.B21 * coproduct_c21(l, r);
  return out;
}

MatrixC coproduct_chain(Generator gen, const std::vector<GeneratorQuad>& sites) {
  if (sites.empty()) throw std::invalid_argument("coproduct_chain: empty site list");
  // Iterate the generator matrix of operators: T_ij <- sum_k T_ik (x) c_kj.
  std::array<std::array<MatrixC, 2>, 2> t{
      {{sites[0].c11, sites[0].c12}, {sites[0].c21, sites[0].c22}}};
  for (size_t s = 1; s < sites.size(); ++s) {
    const auto& g = sites[s];
    std::array<std::array<MatrixC, 2>, 2> c{
        {{g.c11, g.c12}, {g.c21, g.c22}}};
    std::array<std::array<MatrixC, 2>, 2> next;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        next[i][j] = kron(t[i][0], c[0][j]) + kron(t[i][1], c[1][j]);
    t = next;
  }
  switch (gen) {
    case Generator::c11: return t[0][0];
    case Generator::c12: return t[0][1];
    case Generator::c21: return t[1][0];
    case Generator::c22: return t[1][1];
    case Generator::d: return t[0][0] * t[1][1] - t[0][1] * t[1][0];
  }
  throw std::logic_error("unreachable");
}

AdjointResult adjoint_action(const GeneratorQuad& rep, int i, int j, const MatrixC& v) {
  if (i < 1 || i > 2 || j < 1 || j > 2)
    throw std::invalid_argument("adjoint_action: block indices in {1,2}");
  const int n = rep.dim();
  MatrixC m(2 * n, 2 * n);
  m.block(0, 0, n, n) = rep.c11;
  m.block(0, n, n, n) = rep.c12;
  m.block(n, 0, n, n) = rep.c21;
  m.block(n, n, n, n) = rep.c22;
  Eigen::PartialPivLU<MatrixC> lu(m);
  const MatrixC minv = lu.inverse();
  const double cond = m.norm() * minv.norm();
  if (!minv.allFinite())
    throw std::runtime_error("adjoint_action: singular block matrix");
  AdjointResult out{MatrixC::Zero(n, n), cond};
  for (int k = 0; k < 2; ++k)
    out.value += m.block((i - 1) * n, k * n, n, n) * v *
                 minv.block(k * n, (j - 1) * n, n, n);
  return out;
}

AdmissibilityResult admissibility(const MatrixC& A, const MatrixC& B, Complex q,
                                  const Tolerance& tol, unsigned seed) {
  AdmissibilityResult out;
  const double scale = std::max(1.0, frob(A) * frob(B));
  out.premise_ok = frob(A * B - q * B * A) <= tol.residual_abs * scale;
  if (!out.premise_ok) return out;
  const int n = static_cast<int>(A.rows());
  const int n2 = n * n;
  const MatrixC id = MatrixC::Identity(n, n);
  // {CB - qBC = 0, CA - qAC = 0} on vec(C), column-major.
  MatrixC sys(2 * n2, n2);
  sys.topRows(n2) = kron(B.transpose(), id) - q * kron(id, B);
  sys.bottomRows(n2) = kron(A.transpose(), id) - q * kron(id, A);
  Eigen::JacobiSVD<MatrixC> svd(sys, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  int rank = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k)
    if (s(0) > 0 && s(k) > tol.rank_rel * s(0)) ++rank;
  for (int k = rank; k < n2; ++k) out.basis.push_back(unvec(svd.matrixV().col(k), n, n));
  for (const auto& c : out.basis)
    if (frob(c * B) > tol.residual_abs) out.admissible = true;
  // seeded random combinations guard against cancellation between basis elements
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 8 && !out.admissible && !out.basis.empty(); ++trial) {
    MatrixC c = MatrixC::Zero(n, n);
    for (const auto& b : out.basis) c += Complex(u(rng), u(rng)) * b;
    if (frob(c * B) > tol.residual_abs) out.admissible = true;
  }
  return out;
}

}  // namespace ddgl2
