#pragma once
// The quantized GL2 algebra (Dipper-Donkin form): relation checking for a
// concrete generator quadruple, quantum determinant, coproduct evaluation
// (two-site and L-site), adjoint inner action, admissibility.
//
// Defining relations for the generator images (q-deformation parameter q):
//   R1  [c11, c12] = 0
//   R2  [c21, c22] = 0
//   R3  c21 c11 = q c11 c21
//   R4  c22 c12 = q c12 c22
//   R5  c21 c12 = q c12 c21
//   R6  c22 c11 - c11 c22 = (q-1) c12 c21
// R6 is oriented so that the quantum determinant d = c11 c22 - c12 c21 is
// group-like (Delta(d) = d (x) d); coproduct_two_site confirms this
// numerically and independently of check_relations.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ddgl2/numerics.hpp"

namespace ddgl2 {

struct GeneratorQuad {
  MatrixC c11, c12, c21, c22;
  Complex q{2.0, 0.0};
  int dim() const { return static_cast<int>(c11.rows()); }
};

GeneratorQuad trivial_quad(int n = 4, Complex q = {2.0, 0.0});

struct RelationReport {
  std::array<double, 6> r{};       // residuals of R1..R6
  double perturbation = 0.0;       // |c12 c21|_F
  double max() const;
  bool pass(double residual_abs = 1e-10) const { return max() <= residual_abs; }
};

struct DetRelationReport {
  double comm_c11 = 0.0;   // |[D, c11]|
  double comm_c22 = 0.0;   // |[D, c22]|
  double spinor_c21 = 0.0; // |c21 D - q D c21|
  double spinor_c12 = 0.0; // |D c12 - q c12 D|
  bool applicable = true;  // false when R1..R6 fail (results advisory)
  double max() const;
};

// Formal element A*d + B*c11 + C*c22 (+ optional c12/c21 components).
struct ElementExpr {
  Complex A{0.0}, B{0.0}, C{0.0};
  Complex B12{0.0}, B21{0.0};
};

RelationReport check_relations(const GeneratorQuad& rep, const Tolerance& tol = {});
MatrixC quantum_determinant(const GeneratorQuad& rep);
DetRelationReport determinant_relation_suite(const GeneratorQuad& rep,
                                             const Tolerance& tol = {});

// Two-site images of the coproduct, Delta(c_ij) = sum_k c_ik (x) c_kj.
MatrixC coproduct_c11(const GeneratorQuad& l, const GeneratorQuad& r);
MatrixC coproduct_c12(const GeneratorQuad& l, const GeneratorQuad& r);
MatrixC coproduct_c21(const GeneratorQuad& l, const GeneratorQuad& r);
MatrixC coproduct_c22(const GeneratorQuad& l, const GeneratorQuad& r);
// Four-term expansion of Delta(d) (no use of group-likeness).
MatrixC coproduct_d(const GeneratorQuad& l, const GeneratorQuad& r);

MatrixC coproduct_two_site(const ElementExpr& x, const GeneratorQuad& left,
                           const GeneratorQuad& right);

enum class Generator { c11, c12, c21, c22, d };

// (L-1)-fold iterated coproduct evaluated on the site representations.
MatrixC coproduct_chain(Generator gen, const std::vector<GeneratorQuad>& sites);

struct AdjointResult {
  MatrixC value;
  double condition;  // |M| * |M^-1| estimate for the 2n x 2n block matrix
};

// c_ij . v = sum_k M[i,k] v (M^-1)[k,j], M the 2n x 2n block matrix of the quad.
// i, j in {1, 2}.
AdjointResult adjoint_action(const GeneratorQuad& rep, int i, int j, const MatrixC& v);

struct AdmissibilityResult {
  bool premise_ok = false;       // AB = qBA within tolerance
  std::vector<MatrixC> basis;    // nullspace of {CB=qBC, CA=qAC}
  bool admissible = false;       // some combination has |CB| > residual_abs
};

AdmissibilityResult admissibility(const MatrixC& A, const MatrixC& B, Complex q,
                                  const Tolerance& tol = {}, unsigned seed = 1);

}  // namespace ddgl2
