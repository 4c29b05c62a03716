#include "ddgl2/analysis.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ddgl2 {

std::vector<MatrixC> operator_algebra_closure(const GeneratorQuad& rep,
                                              const Tolerance& tol) {
  const int n = rep.dim();
  std::vector<MatrixC> basis = {MatrixC::Identity(n, n), rep.c11, rep.c12,
                                rep.c21, rep.c22};
  basis = orthonormal_span(basis, tol);
  int dim = static_cast<int>(basis.size());
  for (;;) {
    std::vector<MatrixC> all = basis;
    for (const auto& a : basis)
      for (const auto& b : basis) all.push_back(a * b);
    all = orthonormal_span(all, tol);
    if (static_cast<int>(all.size()) == dim) return all;
    basis = std::move(all);
    dim = static_cast<int>(basis.size());
  }
}

std::vector<MatrixC> centralizer(const GeneratorQuad& rep, const Tolerance& tol) {
  return commutant({rep.c11, rep.c12, rep.c21, rep.c22}, tol);
}

namespace {

std::set<std::pair<int, int>> support(const std::vector<MatrixC>& basis,
                                      double cell_tol = 1e-9) {
  std::set<std::pair<int, int>> s;
  for (const auto& m : basis) {
    const double scale = std::max(1.0, frob(m));
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        if (std::abs(m(i, j)) > cell_tol * scale) s.emplace(i + 1, j + 1);
  }
  return s;
}

}  // namespace

PatternMatch pattern_match(const std::vector<MatrixC>& basis,
                           const SubspacePattern& pattern, const Tolerance& tol) {
  PatternMatch out;
  std::vector<MatrixC> pat_basis = pattern.basis();
  const int da = span_dim(basis, tol);
  const int db = span_dim(pat_basis, tol);
  std::vector<MatrixC> both = basis;
  both.insert(both.end(), pat_basis.begin(), pat_basis.end());
  out.match = (da == db) && (span_dim(both, tol) == da);
  std::set<std::pair<int, int>> sa = support(basis), sb = support(pat_basis);
  for (const auto& c : sa)
    if (!sb.count(c)) out.mismatch_cells.push_back(c);
  for (const auto& c : sb)
    if (!sa.count(c)) out.mismatch_cells.push_back(c);
  std::sort(out.mismatch_cells.begin(), out.mismatch_cells.end());
  return out;
}

bool invariants_within_operator_algebra(const std::vector<MatrixC>& operator_basis,
                                        const std::vector<MatrixC>& invariant_basis,
                                        const Tolerance& tol) {
  for (const auto& m : invariant_basis)
    if (!in_span(operator_basis, m, tol)) return false;
  return true;
}

namespace {

std::vector<CoeffTriple> nullspace_triples(const std::array<MatrixC, 3>& gens_x,
                                           const std::array<MatrixC, 4>& gens_g,
                                           const Tolerance& tol) {
  const Eigen::Index n2 = gens_x[0].size();
  MatrixC sys(4 * n2, 3);
  for (int col = 0; col < 3; ++col)
    for (int gi = 0; gi < 4; ++gi)
      sys.block(gi * n2, col, n2, 1) =
          vec(gens_x[col] * gens_g[gi] - gens_g[gi] * gens_x[col]);
  Eigen::JacobiSVD<MatrixC> svd(sys, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  int rank = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k)
    if (s(0) > 0 && s(k) > tol.rank_rel * s(0)) ++rank;
  std::vector<CoeffTriple> out;
  for (int k = rank; k < 3; ++k) {
    VectorC v = svd.matrixV().col(k);
    out.push_back({v(0), v(1), v(2)});
  }
  return out;
}

}  // namespace

CoeffSolution solve_invariant_coefficients(const GeneratorQuad& rep,
                                           const Tolerance& tol) {
  CoeffSolution out;
  const MatrixC d = quantum_determinant(rep);
  out.basis = nullspace_triples({d, rep.c11, rep.c22},
                                {rep.c11, rep.c12, rep.c21, rep.c22}, tol);
  out.basis_two_site = nullspace_triples(
      {coproduct_d(rep, rep), coproduct_c11(rep, rep), coproduct_c22(rep, rep)},
      {coproduct_c11(rep, rep), coproduct_c12(rep, rep), coproduct_c21(rep, rep),
       coproduct_c22(rep, rep)},
      tol);
  return out;
}

bool triple_in_space(const std::vector<CoeffTriple>& basis, const CoeffTriple& t,
                     const Tolerance& tol) {
  VectorC v(3);
  v << t[0], t[1], t[2];
  const double nv = v.norm();
  if (nv == 0.0) return true;
  if (basis.empty()) return false;
  VectorC res = v;
  for (const auto& b : basis) {
    VectorC w(3);
    w << b[0], b[1], b[2];
    res -= (w.adjoint() * v)(0) / (w.adjoint() * w)(0).real() * w;
  }
  return res.norm() <= tol.rank_rel * std::max(1.0, nv);
}

namespace {

std::string fmt_cells(const std::vector<std::pair<int, int>>& cells) {
  std::ostringstream os;
  for (size_t k = 0; k < cells.size(); ++k)
    os << (k ? " " : "") << "(" << cells[k].first << "," << cells[k].second << ")";
  return os.str();
}

}  // namespace

CaseAnalysis analyze_case(const std::string& id, const SymbolTable& params,
                          Complex q, Variant variant, const Tolerance& tol) {
  CaseAnalysis a;
  a.id = id;
  a.rep = instantiate_case(id, params, q, variant);
  const ExpectedRecord exp = expected_record(id);

  a.relations = check_relations(a.rep, tol);
  a.det_relations = determinant_relation_suite(a.rep, tol);
  Complex alpha = params.count("alpha") ? params.at("alpha") : Complex(0.0);
  a.det_header_residual =
      frob(quantum_determinant(a.rep) - family_determinant(exp.family, q, alpha));

  a.operator_basis = operator_algebra_closure(a.rep, tol);
  a.invariant_basis = centralizer(a.rep, tol);
  a.dim_R = static_cast<int>(a.operator_basis.size());
  a.dim_I = static_cast<int>(a.invariant_basis.size());
  a.pattern_R = pattern_match(a.operator_basis, exp.R_pattern, tol);
  a.pattern_I = pattern_match(a.invariant_basis, exp.I_pattern, tol);
  a.I_in_R = invariants_within_operator_algebra(a.operator_basis, a.invariant_basis, tol);
  a.coeff = solve_invariant_coefficients(a.rep, tol);

  if (!a.relations.pass(tol.residual_abs))
    a.discrepancies.push_back({"relation", "residuals <= 1e-10",
                               "max " + std::to_string(a.relations.max()),
                               a.relations.max()});
  if (a.det_header_residual > tol.residual_abs)
    a.discrepancies.push_back({"relation", "determinant matches family header",
                               "residual " + std::to_string(a.det_header_residual),
                               a.det_header_residual});
  if (a.dim_R != exp.dim_R)
    a.discrepancies.push_back({"dim_R", std::to_string(exp.dim_R),
                               std::to_string(a.dim_R),
                               std::abs(a.dim_R - exp.dim_R) * 1.0});
  if (a.dim_I != exp.dim_I)
    a.discrepancies.push_back({"dim_I", std::to_string(exp.dim_I),
                               std::to_string(a.dim_I),
                               std::abs(a.dim_I - exp.dim_I) * 1.0});
  if (!a.pattern_R.match)
    a.discrepancies.push_back({"pattern", "R pattern",
                               a.pattern_R.mismatch_cells.empty()
                                   ? "span dimension differs"
                                   : "cells " + fmt_cells(a.pattern_R.mismatch_cells),
                               0.0});
  if (!a.pattern_I.match)
    a.discrepancies.push_back({"pattern", "I pattern",
                               a.pattern_I.mismatch_cells.empty()
                                   ? "span dimension differs"
                                   : "cells " + fmt_cells(a.pattern_I.mismatch_cells),
                               0.0});

  const CoeffCell& cell = exp.coeff;
  if (cell.form == CoeffCell::Form::well_formed ||
      cell.form == CoeffCell::Form::full_space) {
    SymbolTable s = params;
    s["q"] = q;
    bool ok = true, evaluable = true;
    for (const auto& triple : cell.triples) {
      try {
        CoeffTriple t = {eval_expr(triple[0], s), eval_expr(triple[1], s),
                         eval_expr(triple[2], s)};
        if (!triple_in_space(a.coeff.basis, t, tol)) ok = false;
      } catch (const EvalError&) {
        evaluable = false;
      }
    }
    a.cell_evaluable = evaluable;
    a.contains_table_triple = evaluable && ok;
    if (evaluable && !ok)
      a.discrepancies.push_back(
          {"coeff", cell.text, "printed triple not in computed solution space", 0.0});
  }
  return a;
}

}  // namespace ddgl2
