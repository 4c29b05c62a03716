#pragma once
// C(1,3) in the fixed Dirac basis (gamma0 diagonal), the 16-monomial basis,
// and the mass/spin projectors. The convention maps the projector products
// onto diagonal matrix units, matching the matrix-unit presentation used by
// the case catalog.

#include <array>
#include <map>
#include <string>

#include "ddgl2/numerics.hpp"

namespace ddgl2 {

struct GammaSet {
  std::array<MatrixC, 4> gamma;  // gamma0..gamma3
  std::array<double, 4> metric{1.0, -1.0, -1.0, -1.0};  // diag of g
};

struct ProjectorSet {
  MatrixC m_plus, m_minus, s_up, s_down;
};

GammaSet build_gammas();
ProjectorSet projectors(const GammaSet& g);

// The 16 ordered gamma monomials: "1", "g0".."g3", "g01".., "g012".., "g0123".
// A monomial with sorted distinct indices is the ordered product; the fully
// antisymmetrized product of distinct anticommuting gammas equals that product.
std::vector<std::pair<std::string, MatrixC>> gamma_monomials(const GammaSet& g);

// Unique expansion of a 4x4 matrix over the 16 monomials.
std::map<std::string, Complex> gamma_decompose(const GammaSet& g, const MatrixC& m);
MatrixC gamma_reconstruct(const GammaSet& g, const std::map<std::string, Complex>& coeff);

struct CliffordReport {
  double max_anticommutator = 0.0;   // |g_mu g_nu + g_nu g_mu - 2 g_{munu}|
  double max_vector_bivector = 0.0;  // g_rho g_{munu} product formula
  double max_vector_trivector = 0.0; // g_lambda g_{munurho} product formula
  double max() const;
};

// Verifies the three displayed product formulas over all index instances,
// constructing each side explicitly.
CliffordReport clifford_relation_suite(const GammaSet& g);

// Antisymmetrized product gamma_{i1 i2 ...}: zero on repeated indices,
// otherwise sign(sort) * ordered product.
MatrixC gamma_antisym(const GammaSet& g, const std::vector<int>& idx);

}  // namespace ddgl2
