#pragma once
// Machine-readable case catalog: the 38 tabulated inner actions (families
// 1..6), parameter constraints, expected structure per row (dimensions,
// support patterns, coefficient cells), and the root-of-unity cyclic module.
//
// Matrix entries are stored as sparse {"e13": "alpha*q", ...} maps of
// expression strings over the symbols alpha beta gamma delta epsilon lambda q,
// evaluated per instantiation. Rows whose printed entries are inconsistent
// with the defining relations carry corrected overrides; instantiate_case
// defaults to the corrected variant and keeps the printed one available.

#include <map>
#include <string>
#include <vector>

#include "ddgl2/ddq.hpp"
#include "ddgl2/expr.hpp"

namespace ddgl2 {

enum class Variant { corrected, as_printed };

// 4x4 subspace pattern: 0 = zero cell, -1 = free cell, k >= 1 = tie class.
struct SubspacePattern {
  std::array<std::array<int, 4>, 4> cell{};
  int dimension() const;            // #free + #distinct tie classes
  std::vector<MatrixC> basis() const;
};

struct CoeffCell {
  enum class Form { well_formed, full_space, malformed, not_evaluable };
  Form form = Form::well_formed;
  std::string text;  // the printed constraint, verbatim
  // machine forms: each triple is (A,B,C) as expression strings; a cell with
  // several triples describes the span of all of them
  std::vector<std::array<std::string, 3>> triples;
  std::string note;  // flags such as undefined symbols
};

struct ExpectedRecord {
  int family = 0;
  int dim_R = 0, dim_I = 0;  // printed values
  SubspacePattern R_pattern, I_pattern;
  CoeffCell coeff;
};

using SparseEntry = std::map<std::string, std::string>;  // "e13" -> expression

struct CaseSpec {
  std::string id;
  int family = 0;
  std::vector<std::string> param_names;
  // printed entries per generator
  SparseEntry c11, c12, c21, c22;
  // corrected full replacements, keyed "c11".."c22" (empty when printed is consistent)
  std::map<std::string, SparseEntry> corrected;
  std::vector<std::string> constraints;  // human-readable
  // parameter identifications required by the row's branch (e.g. delta=gamma)
  std::vector<std::pair<std::string, std::string>> coercions;  // target <- expression
};

const std::vector<std::string>& case_ids();
const CaseSpec& case_spec(const std::string& id);            // throws std::out_of_range
ExpectedRecord expected_record(const std::string& id);       // throws std::out_of_range

// Family quantum determinant header d(q) (family 4 depends on alpha).
MatrixC family_determinant(int family, Complex q, Complex alpha);

// Throws std::invalid_argument naming the violated predicate.
void check_constraints(const CaseSpec& spec, const SymbolTable& params, Complex q);

GeneratorQuad instantiate_case(const std::string& id, const SymbolTable& params,
                               Complex q = {2.0, 0.0},
                               Variant variant = Variant::corrected);

// Deterministic generic draw from a small-rational pool (odd primes, so no
// coincidence with powers of q=2), coercions applied, constraints enforced.
SymbolTable sample_parameters(const std::string& id, unsigned seed);
// The reference parameter point used for frozen structural values.
SymbolTable default_parameters(const std::string& id);

// Whole catalog as a documented JSON document (one object per row).
std::string catalog_json();

// ---- root-of-unity cyclic module (q a primitive p-th root of unity) ----

struct CyclicModuleSpec {
  int p = 3;
  Complex q;  // primitive p-th root of unity
  Complex alpha{1.0}, beta{1.0}, eta{1.0};
  Variant variant = Variant::corrected;
};

Complex primitive_root(int p);
GeneratorQuad root_of_unity_rep(const CyclicModuleSpec& spec);

struct CentralPowersReport {
  double max_central_residual = 0.0;  // max |[C_ij^p, C_kl]|
  // two-site (pi x pi)Delta(c_ij)^p proportionality-to-identity residual,
  // order c11, c12, c21, c22
  std::array<double, 4> delta_power_residual{};
  std::array<Complex, 4> delta_power_scalar{};
  double max_delta_residual() const;
};

CentralPowersReport central_powers_check(const GeneratorQuad& rep, int p,
                                         const Tolerance& tol = {});

}  // namespace ddgl2
