#include "ddgl2/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ddgl2 {

namespace {

using nlohmann::json;

// fixed-precision serialization keeps reports byte-stable across runs
double rounded(double v) {
  if (v == 0.0 || !std::isfinite(v)) return v == 0.0 ? 0.0 : v;
  std::ostringstream os;
  os.precision(12);
  os << v;
  return std::stod(os.str());
}

json jnum(double v) { return rounded(v); }

json jcomplex(Complex v) {
  if (v.imag() == 0.0) return rounded(v.real());
  return json::array({rounded(v.real()), rounded(v.imag())});
}

json jtriples(const std::vector<CoeffTriple>& triples) {
  json out = json::array();
  for (const auto& t : triples)
    out.push_back(json::array({jcomplex(t[0]), jcomplex(t[1]), jcomplex(t[2])}));
  return out;
}

json jparams(const SymbolTable& params) {
  json out = json::object();
  for (const auto& [name, value] : params) out[name] = jcomplex(value);
  return out;
}

json jcells(const std::vector<std::pair<int, int>>& cells) {
  json out = json::array();
  for (const auto& [i, j] : cells) out.push_back(json::array({i, j}));
  return out;
}

}  // namespace

bool DiscrepancyFile::has_dimension_entries() const {
  for (const auto& [case_id, kind] : entries)
    if (kind == "dim_R" || kind == "dim_I") return true;
  return false;
}

DiscrepancyFile load_discrepancy_file(const std::string& path) {
  DiscrepancyFile out;
  out.path = path;
  std::ifstream in(path);
  if (!in) return out;  // absent file = nothing excused
  json doc = json::parse(in);
  for (const auto& entry : doc.at("entries"))
    out.entries.emplace(entry.at("case").get<std::string>(),
                        entry.at("kind").get<std::string>());
  return out;
}

std::string default_discrepancy_path() {
  if (const char* env = std::getenv("DDGL2_DISCREPANCY_FILE")) return env;
  return "data/known_discrepancies.json";
}

RunResult run_verify(const VerifyConfig& config) {
  std::vector<std::string> ids = config.cases.empty() ? case_ids() : config.cases;
  for (const auto& id : ids)
    if (!std::count(case_ids().begin(), case_ids().end(), id))
      return {2, json({{"error", "unknown case " + id}}).dump(2)};
  const DiscrepancyFile known = load_discrepancy_file(config.discrepancy_path);

  json doc;
  doc["schema"] = 1;
  doc["command"] = "verify";
  doc["q"] = jcomplex(config.q);
  doc["seed"] = config.seed;
  doc["variant"] = config.variant == Variant::corrected ? "corrected" : "as_printed";
  json cases = json::array();
  int hard_failures = 0, excused = 0;
  for (const auto& id : ids) {
    SymbolTable params = sample_parameters(id, config.seed);
    CaseAnalysis a = analyze_case(id, params, config.q, config.variant, config.tol);
    const ExpectedRecord exp = expected_record(id);

    json c;
    c["case"] = id;
    c["q"] = jcomplex(config.q);
    c["seed"] = config.seed;
    c["params"] = jparams(params);
    json res;
    for (int k = 0; k < 6; ++k)
      res["r" + std::to_string(k + 1)] = jnum(a.relations.r[k]);
    res["d_relations"] = jnum(a.det_relations.max());
    res["d_header"] = jnum(a.det_header_residual);
    res["perturbation"] = jnum(a.relations.perturbation);
    c["residuals"] = res;
    c["dims"] = {{"R_computed", a.dim_R}, {"R_expected", exp.dim_R},
                 {"I_computed", a.dim_I}, {"I_expected", exp.dim_I}};
    c["patterns"] = {
        {"R", {{"match", a.pattern_R.match},
               {"mismatch_cells", jcells(a.pattern_R.mismatch_cells)}}},
        {"I", {{"match", a.pattern_I.match},
               {"mismatch_cells", jcells(a.pattern_I.mismatch_cells)}}}};
    c["I_in_R"] = a.I_in_R;
    c["coefficients"] = {
        {"solution_basis", jtriples(a.coeff.basis)},
        {"solution_basis_two_site", jtriples(a.coeff.basis_two_site)},
        {"table_cell", exp.coeff.text},
        {"cell_evaluable", a.cell_evaluable},
        {"contains_table_triple", a.contains_table_triple}};
    json discrepancies = json::array();
    for (const auto& d : a.discrepancies) {
      const bool hard = d.kind == "relation" || d.kind == "dim_R" || d.kind == "dim_I";
      const bool is_excused = known.excuses(id, d.kind);
      if (hard) {
        if (is_excused) ++excused;
        else ++hard_failures;
      }
      discrepancies.push_back({{"kind", d.kind}, {"expected", d.expected},
                               {"computed", d.computed},
                               {"residual", jnum(d.residual)},
                               {"known", is_excused}});
    }
    if (a.relations.perturbation > 1e-12 && !known.excuses(id, "relation")) {
      ++hard_failures;
      discrepancies.push_back({{"kind", "relation"},
                               {"expected", "perturbation 0"},
                               {"computed", std::to_string(a.relations.perturbation)},
                               {"residual", jnum(a.relations.perturbation)},
                               {"known", false}});
    }
    c["discrepancies"] = discrepancies;
    cases.push_back(c);
  }
  doc["cases"] = cases;
  doc["summary"] = {{"cases", ids.size()},
                    {"hard_failures", hard_failures},
                    {"known_discrepancies", excused}};
  return {hard_failures ? 1 : 0, doc.dump(2)};
}

RunResult run_chain(const ChainConfig& config) {
  if (!std::count(case_ids().begin(), case_ids().end(), config.case_id))
    return {2, json({{"error", "unknown case " + config.case_id}}).dump(2)};

  SymbolTable params = sample_parameters(config.case_id, config.seed);
  std::array<Complex, 3> coeff{Complex(0.0), Complex(1.0), Complex(0.0)};
  if (config.coeff) {
    coeff = *config.coeff;
  } else {
    // default to the row's printed triple when it is evaluable
    const CoeffCell cell = expected_record(config.case_id).coeff;
    if (!cell.triples.empty()) {
      SymbolTable s = params;
      s["q"] = config.q;
      try {
        coeff = {eval_expr(cell.triples[0][0], s), eval_expr(cell.triples[0][1], s),
                 eval_expr(cell.triples[0][2], s)};
      } catch (const EvalError&) {
        // fall back to (0,1,0)
      }
    }
  }

  ChainSpec spec;
  spec.L = config.L;
  spec.max_sites = config.max_sites;
  GeneratorQuad rep =
      instantiate_case(config.case_id, params, config.q, config.variant);
  spec.site_quads.assign(config.L > 0 ? config.L : 0, rep);
  spec.bond_coeffs.assign(config.L > 0 ? config.L - 1 : 0, coeff);

  json doc;
  doc["schema"] = 1;
  doc["command"] = "chain";
  doc["case"] = config.case_id;
  doc["L"] = config.L;
  doc["q"] = jcomplex(config.q);
  doc["seed"] = config.seed;
  doc["params"] = jparams(params);
  doc["coeff"] = json::array({jcomplex(coeff[0]), jcomplex(coeff[1]), jcomplex(coeff[2])});
  MatrixC h;
  try {
    h = chain_hamiltonian(spec);
  } catch (const SizeCapError& e) {
    doc["error"] = e.what();
    return {3, doc.dump(2)};
  }
  SymmetryReport sym = symmetry_report(spec);
  json jsym;
  for (const auto& [name, norm] : sym.commutator_norm)
    jsym[name] = {{"commutator_norm", jnum(norm)},
                  {"relative_norm", jnum(sym.relative_norm.at(name))}};
  doc["symmetry"] = jsym;
  SpectrumReport spec_report = spectrum_report(h, config.tol);
  json jev = json::array();
  for (const auto& ev : spec_report.eigenvalues) jev.push_back(jcomplex(ev));
  json jhist = json::object();
  for (const auto& [size, count] : spec_report.degeneracy_histogram)
    jhist[std::to_string(size)] = count;
  doc["spectrum"] = {{"eigenvalues", jev},
                     {"cluster_count", spec_report.clusters.size()},
                     {"degeneracy_histogram", jhist},
                     {"hermiticity_rel", jnum(spec_report.hermiticity_rel)}};
  doc["dimension"] = h.rows();

  if (!config.dump_matrix_csv.empty()) {
    std::ofstream out(config.dump_matrix_csv);
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
      for (Eigen::Index j = 0; j < h.cols(); ++j)
        out << (j ? "," : "") << rounded(h(i, j).real()) << "+"
            << rounded(h(i, j).imag()) << "i";
      out << "\n";
    }
  }
  if (!config.dump_spectrum_csv.empty()) {
    std::ofstream out(config.dump_spectrum_csv);
    out << "re,im\n";
    for (const auto& ev : spec_report.eigenvalues)
      out << rounded(ev.real()) << "," << rounded(ev.imag()) << "\n";
  }
  return {0, doc.dump(2)};
}

RunResult run_root_of_unity(const RootOfUnityConfig& config) {
  json doc;
  doc["schema"] = 1;
  doc["command"] = "rou";
  doc["p"] = config.p;
  doc["alpha"] = jcomplex(config.alpha);
  doc["beta"] = jcomplex(config.beta);
  doc["eta"] = jcomplex(config.eta);
  json variants = json::object();
  for (Variant v : config.variants) {
    CyclicModuleSpec spec;
    spec.p = config.p;
    spec.q = primitive_root(config.p);
    spec.alpha = config.alpha;
    spec.beta = config.beta;
    spec.eta = config.eta;
    spec.variant = v;
    GeneratorQuad rep = root_of_unity_rep(spec);
    RelationReport rel = check_relations(rep, config.tol);
    CentralPowersReport cp = central_powers_check(rep, config.p, config.tol);
    json jv;
    json jr;
    for (int k = 0; k < 6; ++k)
      jr["r" + std::to_string(k + 1)] = jnum(rel.r[k]);
    jv["residuals"] = jr;
    jv["relations_pass"] = rel.pass(config.tol.residual_abs);
    jv["central_power_residual"] = jnum(cp.max_central_residual);
    json jd = json::object();
    const char* names[] = {"c11", "c12", "c21", "c22"};
    for (int k = 0; k < 4; ++k)
      jd[names[k]] = {{"residual", jnum(cp.delta_power_residual[k])},
                      {"scalar", jcomplex(cp.delta_power_scalar[k])}};
    jv["delta_power_triviality"] = jd;
    variants[v == Variant::corrected ? "corrected" : "as_printed"] = jv;
  }
  doc["variants"] = variants;
  return {0, doc.dump(2)};
}

}  // namespace ddgl2
