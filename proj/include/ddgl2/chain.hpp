#pragma once
// Quantum-chain assembly on L sites: local bond Hamiltonians from coproduct
// images, identity-padded sums, global generator actions via the iterated
// coproduct, symmetry commutator reports, spectra with degeneracy clusters,
// and the five printed projector-form two-site Hamiltonians.

#include <map>
#include <string>
#include <vector>

#include "ddgl2/catalog.hpp"
#include "ddgl2/ddq.hpp"

namespace ddgl2 {

struct SizeCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ChainSpec {
  int L = 2;
  std::vector<GeneratorQuad> site_quads;               // size L
  std::vector<std::array<Complex, 3>> bond_coeffs;     // size L-1, (A,B,C)
  int max_sites = 6;                                   // 4^6 dense cap
};

// H_j = A (pi x pi)Delta(d) + B (C11xC11 + C12xC21) + C (C21xC12 + C22xC22)
MatrixC local_hamiltonian(const GeneratorQuad& left, const GeneratorQuad& right,
                          const std::array<Complex, 3>& coeff);

MatrixC chain_hamiltonian(const ChainSpec& spec);           // throws SizeCapError
MatrixC global_action(Generator g, const ChainSpec& spec);  // pi^(xL) Delta^(L)(g)

struct SymmetryReport {
  // keyed "c11","c12","c21","c22","d"
  std::map<std::string, double> commutator_norm;
  std::map<std::string, double> relative_norm;
};

SymmetryReport symmetry_report(const ChainSpec& spec);

struct SpectrumReport {
  std::vector<Complex> eigenvalues;        // sorted (re, im)
  std::vector<std::vector<int>> clusters;  // indices into eigenvalues
  std::map<int, int> degeneracy_histogram; // cluster size -> count
  double hermiticity_rel = 0.0;            // |H - H^dagger| / max(1, |H|)
};

SpectrumReport spectrum_report(const MatrixC& h, const Tolerance& tol = {});

struct ProjectorComparison {
  MatrixC expression;       // the printed two-site expression, 16x16
  double residual = 0.0;    // vs the coefficient-built local term
  bool informational = false;  // printed display known defective (4.4, 6.10)
};

// case_id in {"2.2","3.5","4.4","5.5","6.10"}; uniform site parameters.
ProjectorComparison projector_expression(const std::string& case_id,
                                         const SymbolTable& params,
                                         Complex q = {2.0, 0.0});

}  // namespace ddgl2
