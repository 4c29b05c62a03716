#include <doctest.h>

#include <json.hpp>

#include "ddgl2/catalog.hpp"

using namespace ddgl2;

TEST_CASE("the catalog holds all 38 rows in table order") {
  const auto& ids = case_ids();
  REQUIRE(ids.size() == 38);
  CHECK(ids.front() == "1.1");
  CHECK(std::count(ids.begin(), ids.end(), "3.7") == 1);
  CHECK(std::count(ids.begin(), ids.end(), "6.11") == 1);
}

TEST_CASE("row 2.1 instantiates to the documented matrices") {
  SymbolTable p = {{"alpha", Complex(3.0)}, {"lambda", Complex(1.0)},
                   {"delta", Complex(1.0)}};
  GeneratorQuad rep = instantiate_case("2.1", p, Complex(2.0));
  CHECK(frob(rep.c12 - 2.0 * unit(1, 3)) <= 1e-12);
  CHECK(frob(rep.c21 - unit(4, 3)) <= 1e-12);
  MatrixC c11 = unit(1, 1) + 3.0 * unit(2, 2) + unit(3, 3) + 0.5 * unit(4, 4);
  MatrixC c22 = 4.0 * unit(1, 1) + (2.0 / 3.0) * unit(2, 2) + 2.0 * unit(3, 3) +
                2.0 * unit(4, 4);
  CHECK(frob(rep.c11 - c11) <= 1e-12);
  CHECK(frob(rep.c22 - c22) <= 1e-12);
}

TEST_CASE("constraint violations are rejected with the predicate named") {
  SymbolTable p = {{"alpha", Complex(1.0)}, {"lambda", Complex(1.0)},
                   {"delta", Complex(1.0)}};
  CHECK_THROWS_AS(instantiate_case("2.1", p), std::invalid_argument);
  CHECK_THROWS_AS(instantiate_case("9.9", {}), std::out_of_range);
}

TEST_CASE("expected records carry the printed dimensions and cells") {
  ExpectedRecord r11 = expected_record("1.1");
  CHECK(r11.family == 1);
  CHECK(r11.dim_R == 6);
  CHECK(r11.dim_I == 2);
  CHECK(r11.coeff.text == "A_j = C_j = 0");
  ExpectedRecord r610 = expected_record("6.10");
  CHECK(r610.dim_R == 4);
  CHECK(r610.dim_I == 4);
  CHECK(r610.coeff.form == CoeffCell::Form::full_space);
  CHECK(r610.coeff.triples.size() == 3);
  ExpectedRecord r67 = expected_record("6.7");
  CHECK(r67.coeff.form == CoeffCell::Form::malformed);
}

TEST_CASE("pattern dimensions agree with the printed counts") {
  for (const std::string& id : case_ids()) {
    ExpectedRecord r = expected_record(id);
    CAPTURE(id);
    CHECK(r.R_pattern.dimension() == r.dim_R);
    CHECK(r.I_pattern.dimension() == r.dim_I);
  }
}

TEST_CASE("family determinants are the advertised diagonals") {
  Complex q(2.0);
  MatrixC d1 = family_determinant(1, q, Complex(0.0));
  CHECK(d1(0, 0) == Complex(4.0));
  CHECK(d1(1, 1) == Complex(2.0));
  CHECK(d1(2, 2) == Complex(1.0));
  CHECK(d1(3, 3) == Complex(1.0));
  MatrixC d4 = family_determinant(4, q, Complex(7.0));
  CHECK(d4(0, 0) == Complex(7.0));
  // families 5 and 6 carry a nilpotent part
  CHECK(family_determinant(5, q, Complex(0.0))(0, 1) == Complex(1.0));
  CHECK(family_determinant(6, q, Complex(0.0))(2, 3) == Complex(1.0));
}

TEST_CASE("sampled parameters are deterministic, generic, and constrained") {
  for (const std::string& id : case_ids()) {
    SymbolTable a = sample_parameters(id, 1);
    SymbolTable b = sample_parameters(id, 1);
    SymbolTable c = sample_parameters(id, 7);
    CAPTURE(id);
    CHECK(a == b);
    if (a.count("lambda")) CHECK(a.at("lambda") == Complex(1.0));
    CHECK_NOTHROW(instantiate_case(id, a));
    CHECK_NOTHROW(instantiate_case(id, c));
  }
}

TEST_CASE("catalog_json is valid and complete") {
  nlohmann::json doc = nlohmann::json::parse(catalog_json());
  CHECK(doc.at("schema") == 1);
  CHECK(doc.at("cases").size() == 38);
  bool found = false;
  for (const auto& c : doc.at("cases"))
    if (c.at("id") == "2.1") found = true;
  CHECK(found);
}

TEST_CASE("root-of-unity module: corrected passes, printed c22 breaks R4") {
  for (int p : {2, 3, 5}) {
    CyclicModuleSpec spec;
    spec.p = p;
    spec.q = primitive_root(p);
    spec.alpha = Complex(2.0);
    spec.beta = Complex(3.0);
    spec.eta = Complex(5.0);
    CAPTURE(p);

    spec.variant = Variant::corrected;
    GeneratorQuad good = root_of_unity_rep(spec);
    CHECK(check_relations(good).pass());

    spec.variant = Variant::as_printed;
    GeneratorQuad bad = root_of_unity_rep(spec);
    RelationReport r = check_relations(bad);
    CHECK(r.r[3] > 1e-6);  // R4 fails as printed
    CHECK(!r.pass());
  }
}

TEST_CASE("p-th powers are central and Delta(c)^p is scalar on two sites") {
  for (int p : {2, 3, 5}) {
    CyclicModuleSpec spec;
    spec.p = p;
    spec.q = primitive_root(p);
    spec.alpha = Complex(2.0);
    spec.beta = Complex(3.0);
    spec.eta = Complex(5.0);
    GeneratorQuad rep = root_of_unity_rep(spec);
    CentralPowersReport cp = central_powers_check(rep, p);
    CAPTURE(p);
    CHECK(cp.max_central_residual <= 1e-10);
    CHECK(cp.max_delta_residual() <= 1e-7);
  }
}
