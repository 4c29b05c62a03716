#pragma once
// Derived structure per case: the operator algebra R (image of the
// representation), the invariant algebra I (its centralizer), comparison
// against the tabulated dimensions/patterns, and the Hamiltonian coefficient
// solver for triples (A,B,C) with A d + B c11 + C c22 invariant.

#include <string>
#include <vector>

#include "ddgl2/catalog.hpp"
#include "ddgl2/ddq.hpp"

namespace ddgl2 {

// Smallest unital algebra containing the four generators: seed
// {I, C11, C12, C21, C22}, iterate pairwise products, re-span to a fixpoint.
std::vector<MatrixC> operator_algebra_closure(const GeneratorQuad& rep,
                                              const Tolerance& tol = {});

// Commutant of the four generators (= centralizer of R).
std::vector<MatrixC> centralizer(const GeneratorQuad& rep, const Tolerance& tol = {});

struct PatternMatch {
  bool match = false;                               // span equality
  std::vector<std::pair<int, int>> mismatch_cells;  // support sym. difference (1-based)
};

PatternMatch pattern_match(const std::vector<MatrixC>& basis,
                           const SubspacePattern& pattern, const Tolerance& tol = {});

bool invariants_within_operator_algebra(const std::vector<MatrixC>& operator_basis,
                                        const std::vector<MatrixC>& invariant_basis,
                                        const Tolerance& tol = {});

using CoeffTriple = std::array<Complex, 3>;

struct CoeffSolution {
  // criterion 1: [A D + B C11 + C C22, G] = 0 for G in {c11,c12,c21,c22}
  std::vector<CoeffTriple> basis;
  // criterion 2: the two-site coproduct image commutes with all four two-site
  // generator images (reported alongside; the selection rule behind the
  // printed triples is ambiguous)
  std::vector<CoeffTriple> basis_two_site;
};

CoeffSolution solve_invariant_coefficients(const GeneratorQuad& rep,
                                           const Tolerance& tol = {});

// Containment up to scale of a triple in the span of an orthonormal basis.
bool triple_in_space(const std::vector<CoeffTriple>& basis, const CoeffTriple& t,
                     const Tolerance& tol = {});

struct DiscrepancyRecord {
  std::string kind;  // dim_R | dim_I | pattern | coeff | relation
  std::string expected, computed;
  double residual = 0.0;
};

struct CaseAnalysis {
  std::string id;
  GeneratorQuad rep;
  RelationReport relations;
  DetRelationReport det_relations;
  double det_header_residual = 0.0;
  std::vector<MatrixC> operator_basis, invariant_basis;
  int dim_R = 0, dim_I = 0;
  PatternMatch pattern_R, pattern_I;
  bool I_in_R = false;
  CoeffSolution coeff;
  // evaluation of the printed cell on the computed space; unset (false) when
  // the cell is malformed or not evaluable at the chosen parameters
  bool cell_evaluable = false;
  bool contains_table_triple = false;
  std::vector<DiscrepancyRecord> discrepancies;
};

CaseAnalysis analyze_case(const std::string& id, const SymbolTable& params,
                          Complex q = {2.0, 0.0},
                          Variant variant = Variant::corrected,
                          const Tolerance& tol = {});

}  // namespace ddgl2
