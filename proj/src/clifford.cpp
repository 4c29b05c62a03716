#include "ddgl2/clifford.hpp"

#include <algorithm>
#include <stdexcept>

namespace ddgl2 {

namespace {
const Complex I_(0.0, 1.0);

MatrixC pauli(int k) {
  MatrixC s(2, 2);
  switch (k) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -I_, I_, 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli index");
  }
  return s;
}
}  // namespace

GammaSet build_gammas() {
  GammaSet g;
  g.gamma[0] = MatrixC::Zero(4, 4);
  g.gamma[0].diagonal() << 1, 1, -1, -1;
  for (int k = 1; k <= 3; ++k) {
    MatrixC s = pauli(k);
    MatrixC m = MatrixC::Zero(4, 4);
    m.block(0, 2, 2, 2) = s;
    m.block(2, 0, 2, 2) = -s;
    g.gamma[k] = m;
  }
  return g;
}

ProjectorSet projectors(const GammaSet& g) {
  const MatrixC id = MatrixC::Identity(4, 4);
  ProjectorSet p;
  p.m_plus = (id + g.gamma[0]) / 2.0;
  p.m_minus = (id - g.gamma[0]) / 2.0;
  const MatrixC ig12 = I_ * g.gamma[1] * g.gamma[2];
  p.s_up = (id + ig12) / 2.0;
  p.s_down = (id - ig12) / 2.0;
  return p;
}

MatrixC gamma_antisym(const GammaSet& g, const std::vector<int>& idx) {
  std::vector<int> sorted = idx;
  // bubble sort, counting transpositions for the sign
  int swaps = 0;
  for (size_t i = 0; i + 1 < sorted.size(); ++i)
    for (size_t j = 0; j + 1 < sorted.size() - i; ++j)
      if (sorted[j] > sorted[j + 1]) {
        std::swap(sorted[j], sorted[j + 1]);
        ++swaps;
      }
  for (size_t i = 0; i + 1 < sorted.size(); ++i)
    if (sorted[i] == sorted[i + 1]) return MatrixC::Zero(4, 4);
  MatrixC out = MatrixC::Identity(4, 4);
  for (int k : sorted) out = out * g.gamma[k];
  return (swaps % 2 == 0) ? out : MatrixC(-out);
}

std::vector<std::pair<std::string, MatrixC>> gamma_monomials(const GammaSet& g) {
  std::vector<std::pair<std::string, MatrixC>> out;
  for (int mask = 0; mask < 16; ++mask) {
    std::string name;
    MatrixC m = MatrixC::Identity(4, 4);
    for (int k = 0; k < 4; ++k)
      if (mask & (1 << k)) {
        name += std::to_string(k);
        m = m * g.gamma[k];
      }
    out.emplace_back(name.empty() ? "1" : "g" + name, m);
  }
  return out;
}

std::map<std::string, Complex> gamma_decompose(const GammaSet& g, const MatrixC& m) {
  auto mono = gamma_monomials(g);
  MatrixC a(16, 16);
  for (int k = 0; k < 16; ++k) a.col(k) = vec(mono[k].second);
  VectorC c = a.colPivHouseholderQr().solve(vec(m));
  std::map<std::string, Complex> out;
  for (int k = 0; k < 16; ++k) out[mono[k].first] = c(k);
  return out;
}

MatrixC gamma_reconstruct(const GammaSet& g, const std::map<std::string, Complex>& coeff) {
  MatrixC m = MatrixC::Zero(4, 4);
  for (const auto& [name, mat] : gamma_monomials(g)) {
    auto it = coeff.find(name);
    if (it != coeff.end()) m += it->second * mat;
  }
  return m;
}

double CliffordReport::max() const {
  return std::max({max_anticommutator, max_vector_bivector, max_vector_trivector});
}

CliffordReport clifford_relation_suite(const GammaSet& g) {
  CliffordReport rep;
  const MatrixC id = MatrixC::Identity(4, 4);
  auto metric = [&](int a, int b) { return a == b ? g.metric[a] : 0.0; };
  // vector x vector: g_mu g_nu = g_{munu} 1 + gamma_{munu}
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      MatrixC lhs = g.gamma[mu] * g.gamma[nu];
      MatrixC rhs = metric(mu, nu) * id + gamma_antisym(g, {mu, nu});
      rep.max_anticommutator = std::max(rep.max_anticommutator, frob(lhs - rhs));
    }
  // vector x bivector
  for (int rho = 0; rho < 4; ++rho)
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        MatrixC lhs = g.gamma[rho] * gamma_antisym(g, {mu, nu});
        MatrixC rhs = metric(rho, mu) * g.gamma[nu] - metric(rho, nu) * g.gamma[mu] +
                      gamma_antisym(g, {rho, mu, nu});
        rep.max_vector_bivector = std::max(rep.max_vector_bivector, frob(lhs - rhs));
      }
  // vector x trivector
  for (int lam = 0; lam < 4; ++lam)
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        for (int rho = 0; rho < 4; ++rho) {
          MatrixC lhs = g.gamma[lam] * gamma_antisym(g, {mu, nu, rho});
          MatrixC rhs = metric(lam, mu) * gamma_antisym(g, {nu, rho}) -
                        metric(lam, nu) * gamma_antisym(g, {mu, rho}) +
                        metric(lam, rho) * gamma_antisym(g, {mu, nu}) +
                        gamma_antisym(g, {lam, mu, nu, rho});
          rep.max_vector_trivector = std::max(rep.max_vector_trivector, frob(lhs - rhs));
        }
  return rep;
}

}  // namespace ddgl2
