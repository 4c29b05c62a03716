#include <doctest.h>

#include "ddgl2/catalog.hpp"
#include "ddgl2/ddq.hpp"

using namespace ddgl2;

TEST_CASE("trivial quadruple satisfies everything") {
  GeneratorQuad t = trivial_quad();
  RelationReport r = check_relations(t);
  CHECK(r.max() == 0.0);
  CHECK(r.perturbation == 0.0);
  CHECK(frob(quantum_determinant(t) - MatrixC::Identity(4, 4)) == 0.0);
  CHECK(determinant_relation_suite(t).max() == 0.0);
}

TEST_CASE("relations hold on instantiated catalog rows") {
  for (const std::string& id : {"1.1", "2.2", "3.5", "4.4", "5.7", "6.10"}) {
    GeneratorQuad rep = instantiate_case(id, default_parameters(id));
    RelationReport r = check_relations(rep);
    CAPTURE(id);
    CHECK(r.max() <= 1e-10);
    CHECK(r.perturbation <= 1e-12);
    CHECK(determinant_relation_suite(rep).max() <= 1e-10);
  }
}

TEST_CASE("the quantum determinant is group-like: Delta(d) = d (x) d") {
  for (const std::string& id : case_ids()) {
    GeneratorQuad rep = instantiate_case(id, sample_parameters(id, 1));
    MatrixC d = quantum_determinant(rep);
    CAPTURE(id);
    CHECK(frob(coproduct_d(rep, rep) - kron(d, d)) <= 1e-10);
  }
}

TEST_CASE("three-site iterated coproduct of d is d (x) d (x) d") {
  for (const std::string& id : {"1.1", "3.2", "6.10"}) {
    GeneratorQuad rep = instantiate_case(id, sample_parameters(id, 1));
    MatrixC d = quantum_determinant(rep);
    std::vector<GeneratorQuad> sites(3, rep);
    CAPTURE(id);
    CHECK(frob(coproduct_chain(Generator::d, sites) - kron(kron(d, d), d)) <=
          1e-9);
  }
}

TEST_CASE("single-site coproduct chain reduces to the representation") {
  GeneratorQuad rep = instantiate_case("2.1", sample_parameters("2.1", 1));
  std::vector<GeneratorQuad> one(1, rep);
  CHECK(frob(coproduct_chain(Generator::c11, one) - rep.c11) == 0.0);
  CHECK(frob(coproduct_chain(Generator::c12, one) - rep.c12) == 0.0);
  CHECK(frob(coproduct_chain(Generator::d, one) - quantum_determinant(rep)) <=
        1e-12);
}

TEST_CASE("two-site coproduct matches the component formulas") {
  GeneratorQuad rep = instantiate_case("3.2", sample_parameters("3.2", 2));
  MatrixC d11 = kron(rep.c11, rep.c11) + kron(rep.c12, rep.c21);
  MatrixC d12 = kron(rep.c11, rep.c12) + kron(rep.c12, rep.c22);
  CHECK(frob(coproduct_c11(rep, rep) - d11) == 0.0);
  CHECK(frob(coproduct_c12(rep, rep) - d12) == 0.0);
  ElementExpr x;
  x.B = Complex(2.0);
  x.B12 = Complex(1.0);
  CHECK(frob(coproduct_two_site(x, rep, rep) - 2.0 * d11 - d12) <= 1e-12);
}

TEST_CASE("adjoint action of the trivial quadruple is trivial") {
  GeneratorQuad t = trivial_quad();
  MatrixC v(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) v(i, j) = Complex(i + 1.0, j - 1.0);
  AdjointResult diag = adjoint_action(t, 1, 1, v);
  CHECK(frob(diag.value - v) <= 1e-12);
  AdjointResult off = adjoint_action(t, 1, 2, v);
  CHECK(frob(off.value) <= 1e-12);
}

TEST_CASE("admissibility of a diagonal A with B = e12 at q = 2") {
  MatrixC a = MatrixC::Zero(4, 4);
  a.diagonal() << 4, 2, 1, 1;
  MatrixC b = unit(1, 2);
  AdmissibilityResult res = admissibility(a, b, Complex(2.0));
  CHECK(res.premise_ok);
  // nullspace of {CB = 2BC, CA = 2AC} is span{e32, e42}; every such C kills B
  REQUIRE(res.basis.size() == 2);
  std::vector<MatrixC> expected = {unit(3, 2), unit(4, 2)};
  for (const auto& m : res.basis) CHECK(in_span(expected, m));
  CHECK(!res.admissible);
}

TEST_CASE("admissibility premise failure is reported") {
  AdmissibilityResult res =
      admissibility(MatrixC::Identity(4, 4), unit(1, 2), Complex(2.0));
  CHECK(!res.premise_ok);
}
