#include "ddgl2/chain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ddgl2/clifford.hpp"

namespace ddgl2 {

namespace {

void validate(const ChainSpec& spec) {
  if (spec.L < 2) throw std::invalid_argument("chain needs L >= 2");
  if (static_cast<int>(spec.site_quads.size()) != spec.L)
    throw std::invalid_argument("site quad count must equal L");
  if (static_cast<int>(spec.bond_coeffs.size()) != spec.L - 1)
    throw std::invalid_argument("bond coefficient count must equal L-1");
  const int n = spec.site_quads.front().dim();
  for (const auto& s : spec.site_quads)
    if (s.dim() != n) throw std::invalid_argument("site dimensions must agree");
  if (spec.L > spec.max_sites)
    throw SizeCapError("L=" + std::to_string(spec.L) + " exceeds cap " +
                       std::to_string(spec.max_sites));
}

MatrixC identity_pow(int n, int count) {
  Eigen::Index dim = 1;
  for (int k = 0; k < count; ++k) dim *= n;
  return MatrixC::Identity(dim, dim);
}

}  // namespace

MatrixC local_hamiltonian(const GeneratorQuad& left, const GeneratorQuad& right,
                          const std::array<Complex, 3>& coeff) {
  if (left.dim() != right.dim())
    throw std::invalid_argument("local_hamiltonian: dimension mismatch");
  ElementExpr x;
  x.A = coeff[0];
  x.B = coeff[1];
  x.C = coeff[2];
  return coproduct_two_site(x, left, right);
}

MatrixC chain_hamiltonian(const ChainSpec& spec) {
  validate(spec);
  const int n = spec.site_quads.front().dim();
  Eigen::Index dim = 1;
  for (int k = 0; k < spec.L; ++k) dim *= n;
  MatrixC h = MatrixC::Zero(dim, dim);
  for (int j = 0; j < spec.L - 1; ++j) {
    MatrixC hj = local_hamiltonian(spec.site_quads[j], spec.site_quads[j + 1],
                                   spec.bond_coeffs[j]);
    h += kron(kron(identity_pow(n, j), hj), identity_pow(n, spec.L - 2 - j));
  }
  return h;
}

MatrixC global_action(Generator g, const ChainSpec& spec) {
  validate(spec);
  return coproduct_chain(g, spec.site_quads);
}

SymmetryReport symmetry_report(const ChainSpec& spec) {
  const MatrixC h = chain_hamiltonian(spec);
  const double hn = std::max(1.0, frob(h));
  SymmetryReport out;
  const std::pair<std::string, Generator> gens[] = {
      {"c11", Generator::c11}, {"c12", Generator::c12}, {"c21", Generator::c21},
      {"c22", Generator::c22}, {"d", Generator::d}};
  for (const auto& [name, g] : gens) {
    MatrixC gm = global_action(g, spec);
    const double norm = frob(h * gm - gm * h);
    out.commutator_norm[name] = norm;
    out.relative_norm[name] = norm / (hn * std::max(1.0, frob(gm)));
  }
  return out;
}

SpectrumReport spectrum_report(const MatrixC& h, const Tolerance& tol) {
  SpectrumReport out;
  out.eigenvalues = eigenvalues(h, tol);
  const double scale =
      std::max(1.0, out.eigenvalues.empty()
                        ? 0.0
                        : std::abs(out.eigenvalues.back()));
  std::vector<int> cluster;
  for (size_t k = 0; k < out.eigenvalues.size(); ++k) {
    if (!cluster.empty() &&
        std::abs(out.eigenvalues[k] - out.eigenvalues[cluster.back()]) >
            tol.cluster_rel * scale) {
      out.clusters.push_back(cluster);
      cluster.clear();
    }
    cluster.push_back(static_cast<int>(k));
  }
  if (!cluster.empty()) out.clusters.push_back(cluster);
  for (const auto& c : out.clusters)
    ++out.degeneracy_histogram[static_cast<int>(c.size())];
  out.hermiticity_rel = frob(h - h.adjoint()) / std::max(1.0, frob(h));
  return out;
}

ProjectorComparison projector_expression(const std::string& case_id,
                                         const SymbolTable& params, Complex q) {
  const GammaSet g = build_gammas();
  const ProjectorSet pr = projectors(g);
  const Complex i(0.0, 1.0);
  // the four building blocks of the printed displays, in the fixed Dirac basis
  const MatrixC mpsu = pr.m_plus * pr.s_up;      // e11
  const MatrixC mpsd = pr.m_plus * pr.s_down;    // e22
  const MatrixC mmsu = pr.m_minus * pr.s_up;     // e33
  const MatrixC mmsd = pr.m_minus * pr.s_down;   // e44
  const MatrixC mp_raise =
      pr.m_plus * (g.gamma[1] + i * g.gamma[2]) * g.gamma[3] / 2.0;   // e12
  const MatrixC mm_raise =
      pr.m_minus * (g.gamma[1] + i * g.gamma[2]) * g.gamma[3] / 2.0;  // e34
  const MatrixC mp_cross = pr.m_plus * (g.gamma[1] - i * g.gamma[2]) / 2.0;  // e23
  const MatrixC mm_cross =
      pr.m_minus * (-g.gamma[1] + i * g.gamma[2]) * g.gamma[3] / 2.0;        // e43

  auto sym = [&](const char* name) -> Complex {
    auto it = params.find(name);
    if (it == params.end())
      throw std::invalid_argument(std::string("missing parameter ") + name);
    return it->second;
  };

  ProjectorComparison out;
  std::array<Complex, 3> coeff{};
  if (case_id == "2.2") {
    const Complex a = sym("alpha"), b = sym("beta"), c = sym("gamma");
    MatrixC f = mpsu + a * mpsd + b * mmsu + c * mmsd;
    out.expression = kron(f, f);
    coeff = {0.0, 1.0, 0.0};
  } else if (case_id == "3.5") {
    const Complex a = sym("alpha");
    MatrixC f = q * q / a * mpsu + q * q / a * mpsd + mmsu + mmsd -
                q * q / (a * a) * mp_raise;
    out.expression = kron(f, f);
    coeff = {0.0, 0.0, 1.0};
  } else if (case_id == "4.4") {
    const Complex a = sym("alpha"), b = sym("beta"), c = sym("gamma"),
                  d = sym("delta");
    const Complex A = -1.0 / q, B = 1.0 / q, C = 1.0;
    MatrixC fd = a * mpsu + q * q * mpsd + q * mmsu + mmsd;
    MatrixC f11 = d * mpsu + q * mpsd + q * mmsu + mmsd;
    // printed right factor of the C term carries q m_-s_up (vs 1 on the left)
    MatrixC f22l = a / d * mpsu + q * mpsd + mmsu + mmsd;
    MatrixC f22r = a / d * mpsu + q * mpsd + q * mmsu + mmsd;
    out.expression = A * kron(fd, fd) + B * kron(f11, f11) -
                     B * c * b * kron(mp_cross, mm_cross) +
                     C * kron(f22l, f22r) - C * c * b * kron(mm_cross, mp_cross);
    coeff = {A, B, C};
    out.informational = true;  // printed cross-term signs / q factor defective
  } else if (case_id == "5.5") {
    const Complex b = sym("beta"), d = sym("delta");
    MatrixC f = q * q * b * mpsu + q * q * b * mpsd + q * q * b * mmsu +
                d * mmsd + b * mp_raise;
    out.expression = kron(f, f);
    coeff = {0.0, 1.0, 0.0};
  } else if (case_id == "6.10") {
    // parentheses unbalanced as printed; transcribed literally term by term
    const Complex A = 1.0, B = 1.0, C = 1.0;
    MatrixC fl = q * q * mpsu + q * mpsd + mmsu + mmsd + mm_raise;
    MatrixC fr = q * q * mpsu + q * mpsd + mmsu + mmsd;
    MatrixC fb = MatrixC::Identity(4, 4) + mm_raise;
    out.expression = A * kron(fl, fr) - B * kron(fb, fb) + C * kron(fr, fr);
    coeff = {A, B, C};
    out.informational = true;
  } else {
    throw std::invalid_argument("no projector expression for case " + case_id);
  }

  GeneratorQuad rep = instantiate_case(case_id, params, q);
  out.residual = frob(out.expression - local_hamiltonian(rep, rep, coeff));
  return out;
}

}  // namespace ddgl2
