#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ddgl2/report.hpp"

namespace {

int emit(const ddgl2::RunResult& result, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << result.output << "\n";
  } else {
    std::ofstream out(output_path);
    if (!out) {
      std::cerr << "cannot write " << output_path << "\n";
      return 2;
    }
    out << result.output << "\n";
  }
  return result.exit_code;
}

std::array<ddgl2::Complex, 3> parse_coeff(const std::string& text) {
  std::array<ddgl2::Complex, 3> out;
  std::istringstream is(text);
  std::string part;
  for (int k = 0; k < 3; ++k) {
    if (!std::getline(is, part, ','))
      throw CLI::ValidationError("--coeff expects A,B,C");
    out[k] = std::stod(part);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dipper-Donkin GL2 on C(1,3): case verification and quantum chains"};
  app.require_subcommand(1);

  std::string case_arg = "all", output_path, discrepancy_path, variant_arg = "corrected";
  double q_real = 2.0;
  unsigned seed = 1;
  double residual_abs = 1e-10, rank_rel = 1e-8, cluster_rel = 1e-7;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--q", q_real, "deformation parameter (real)");
    cmd->add_option("--seed", seed, "parameter sampling seed");
    cmd->add_option("--output", output_path, "write the JSON report here");
    cmd->add_option("--variant", variant_arg, "corrected | as-printed");
    cmd->add_option("--residual-abs", residual_abs, "absolute residual tolerance");
    cmd->add_option("--rank-rel", rank_rel, "relative rank tolerance");
    cmd->add_option("--cluster-rel", cluster_rel, "eigenvalue cluster tolerance");
  };

  CLI::App* verify = app.add_subcommand("verify", "verify catalog cases");
  verify->add_option("--case", case_arg, "case id or 'all'");
  verify->add_option("--discrepancy-file", discrepancy_path,
                     "curated known-discrepancies JSON");
  add_common(verify);

  int L = 2, max_sites = 6;
  std::string coeff_arg, dump_matrix, dump_spectrum;
  CLI::App* chain = app.add_subcommand("chain", "build a chain Hamiltonian");
  chain->add_option("--case", case_arg, "case id")->required();
  chain->add_option("--L", L, "number of sites");
  chain->add_option("--coeff", coeff_arg, "bond coefficients A,B,C");
  chain->add_option("--max-sites", max_sites, "site cap");
  chain->add_option("--dump-matrix", dump_matrix, "CSV path for the dense matrix");
  chain->add_option("--dump-spectrum", dump_spectrum, "CSV path for the spectrum");
  add_common(chain);

  int p = 3;
  double alpha = 2.0, beta = 3.0, eta = 5.0;
  CLI::App* rou = app.add_subcommand("rou", "root-of-unity cyclic module");
  rou->add_option("--p", p, "root order (q = primitive p-th root)");
  rou->add_option("--alpha", alpha, "module parameter alpha");
  rou->add_option("--beta", beta, "module parameter beta");
  rou->add_option("--eta", eta, "wrap factor eta");
  add_common(rou);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  ddgl2::Variant variant = variant_arg == "as-printed" || variant_arg == "as_printed"
                               ? ddgl2::Variant::as_printed
                               : ddgl2::Variant::corrected;
  ddgl2::Tolerance tol{residual_abs, rank_rel, cluster_rel};

  try {
    if (verify->parsed()) {
      ddgl2::VerifyConfig config;
      if (case_arg != "all") config.cases = {case_arg};
      config.q = q_real;
      config.seed = seed;
      config.variant = variant;
      config.tol = tol;
      config.discrepancy_path = discrepancy_path.empty()
                                    ? ddgl2::default_discrepancy_path()
                                    : discrepancy_path;
      return emit(ddgl2::run_verify(config), output_path);
    }
    if (chain->parsed()) {
      ddgl2::ChainConfig config;
      config.case_id = case_arg;
      config.L = L;
      config.max_sites = max_sites;
      if (!coeff_arg.empty()) config.coeff = parse_coeff(coeff_arg);
      config.q = q_real;
      config.seed = seed;
      config.variant = variant;
      config.tol = tol;
      config.dump_matrix_csv = dump_matrix;
      config.dump_spectrum_csv = dump_spectrum;
      return emit(ddgl2::run_chain(config), output_path);
    }
    ddgl2::RootOfUnityConfig config;
    config.p = p;
    config.alpha = alpha;
    config.beta = beta;
    config.eta = eta;
    if (variant_arg == "as-printed" || variant_arg == "as_printed")
      config.variants = {ddgl2::Variant::as_printed};
    else if (variant_arg == "both")
      config.variants = {ddgl2::Variant::corrected, ddgl2::Variant::as_printed};
    else
      config.variants = {ddgl2::Variant::corrected};
    config.tol = tol;
    return emit(ddgl2::run_root_of_unity(config), output_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
