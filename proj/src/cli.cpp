#include "tropos/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "tropos/errors.hpp"
#include "tropos/json_io.hpp"
#include "tropos/regression.hpp"

namespace tropos::cli {
namespace {

struct Outcome {
  Json doc;
  int status = kOk;
};

Json load_input(const RunConfig& c) {
  if (c.input_text) return parse_json_exact(*c.input_text);
  if (c.inputs.size() != 1) throw ParseError(std::string(to_string(c.command)) + " takes exactly one input");
  if (c.inputs[0] != "-") return read_json_file(c.inputs[0]);
  const std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  return parse_json_exact(text);
}

Json series_list_to_json(const std::vector<SeriesRat>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

Outcome classify(const RunConfig& c) {
  const PositivityReport r = is_tn_trop(trop_matrix_from_json(load_input(c)), c.cap);
  // Plain classification is informational; --strict turns "not TP^trop" into a negative result.
  return {to_json(r), c.strict && !r.tp_trop ? kNegative : kOk};
}

Outcome staircase(const RunConfig& c) {
  return {to_json(staircase_decompose(trop_matrix_from_json(load_input(c))))};
}

Outcome echelon(const RunConfig& c) {
  const TropMatrix a = trop_matrix_from_json(load_input(c));
  const bool de = is_double_echelon(a);
  Json doc;
  doc["pattern"] = to_json(support_pattern(a));
  doc["double_echelon"] = de;
  return {doc, c.strict && !de ? kNegative : kOk};
}

Outcome factor(const RunConfig& c) {
  const TropMatrix a = trop_matrix_from_json(load_input(c));
  return {factors_to_json(factor_tn(a), a.rows())};
}

Outcome product(const RunConfig& c) {
  const auto [n, fs] = factors_from_json(load_input(c));
  return {to_json(multiply_factors(fs, n))};
}

Outcome spectrum(const RunConfig& c) {
  const TropMatrix a = trop_matrix_from_json(load_input(c));
  const TropCharPoly p = char_poly_trop(a, c.cap);
  Json doc;
  doc["coeffs"] = to_json(p);
  doc["eigenvalues"] = to_json(tropical_eigenvalues(p));
  Json active = Json::array();
  for (std::size_t k = 0; k <= p.degree(); ++k) active.push_back(is_active(p, k));
  doc["active"] = active;
  int status = kOk;
  if (c.lift) {
    const CcEeReport r = verify_cc_ee(a, *c.lift, c.seed, c.cap);
    Json v;
    v["lift"] = to_string(*c.lift);
    v["alphas"] = series_list_to_json(r.alphas);
    v["coeff_match"] = r.coeff_match;
    v["newton"] = to_json(r.newton);
    v["spectra_match"] = r.spectra_match;
    v["pass"] = r.all_pass();
    doc["lift_check"] = v;
    if (!r.all_pass()) status = kInternal;
  }
  return {doc, status};
}

Outcome plucker(const RunConfig& c) {
  const TropMatrix a = trop_matrix_from_json(load_input(c));
  const TropPlucker p = plucker_trop(a);
  if (!c.lift) return {to_json(p)};
  const LiftCertificate cert = certify_plucker_lift(a, make_lift(a, *c.lift, c.seed));
  Json doc;
  doc["vector"] = to_json(p);
  doc["lift"] = to_string(*c.lift);
  doc["lifted"] = to_json(cert.coords);
  doc["all_positive"] = cert.all_positive;
  doc["valuations_match"] = cert.valuations_match;
  return {doc, cert.all_positive && cert.valuations_match ? kOk : kInternal};
}

Outcome stiefel_invert(const RunConfig& c) {
  const StiefelInversion inv = invert_stiefel(plucker_from_json(load_input(c)));
  return {to_json(inv), inv.in_image ? kOk : kNegative};
}

Outcome network_weight(const RunConfig& c) { return {to_json(weight_matrix_trop(network_from_json(load_input(c))))}; }

Outcome factor_to_network(const RunConfig& c) {
  const auto [n, fs] = factors_from_json(load_input(c));
  return {to_json(network_from_jacobi(fs, n))};
}

Outcome verify(const RunConfig&) {
  const std::vector<RegressionResult> results = run_regression_suite();
  Json list = Json::array();
  std::size_t passed = 0;
  for (const auto& r : results) {
    Json e;
    e["name"] = r.name;
    e["pass"] = r.pass;
    if (!r.pass) e["detail"] = r.detail;
    list.push_back(e);
    passed += r.pass ? 1 : 0;
  }
  Json doc;
  doc["passed"] = passed;
  doc["total"] = results.size();
  doc["results"] = list;
  return {doc, passed == results.size() ? kOk : kInternal};
}

Outcome dispatch(const RunConfig& c) {
  switch (c.command) {
    case Command::Classify: return classify(c);
    case Command::Staircase: return staircase(c);
    case Command::Echelon: return echelon(c);
    case Command::Factor: return factor(c);
    case Command::Product: return product(c);
    case Command::Spectrum: return spectrum(c);
    case Command::Plucker: return plucker(c);
    case Command::StiefelInvert: return stiefel_invert(c);
    case Command::NetworkWeight: return network_weight(c);
    case Command::FactorToNetwork: return factor_to_network(c);
    case Command::Verify: return verify(c);
  }
  throw Error("unknown command");
}

Outcome failure(const char* type, const std::exception& e, int status) {
  Json doc;
  doc["error"] = {{"type", type}, {"message", e.what()}};
  return {doc, status};
}

Outcome guarded(const RunConfig& c) {
  try {
    if (c.cap == 0) throw ParseError("--cap must be positive");
    return dispatch(c);
  } catch (const ParseError& e) {
    return failure("ParseError", e, kUsage);
  } catch (const DimensionError& e) {
    return failure("DimensionError", e, kUsage);
  } catch (const IndexError& e) {
    return failure("IndexError", e, kUsage);
  } catch (const MalformedVector& e) {
    return failure("MalformedVector", e, kUsage);
  } catch (const InvalidNetwork& e) {
    return failure("InvalidNetwork", e, kUsage);
  } catch (const CapExceeded& e) {
    return failure("CapExceeded", e, kUsage);
  } catch (const DivisionByZero& e) {
    return failure("DivisionByZero", e, kUsage);
  } catch (const nlohmann::json::exception& e) {
    return failure("ParseError", e, kUsage);
  } catch (const NotTN& e) {
    return failure("NotTN", e, kNegative);
  } catch (const NotTP& e) {
    return failure("NotTP", e, kNegative);
  } catch (const NotMonge& e) {
    return failure("NotMonge", e, kNegative);
  } catch (const SingularPermanent& e) {
    return failure("SingularPermanent", e, kNegative);
  } catch (const NotInvertible& e) {
    return failure("NotInvertible", e, kNegative);
  } catch (const InfiniteEntry& e) {
    return failure("InfiniteEntry", e, kNegative);
  } catch (const NegativeCoefficient& e) {
    return failure("NegativeCoefficient", e, kNegative);
  } catch (const FactorizationMismatch& e) {
    return failure("FactorizationMismatch", e, kInternal);
  } catch (const std::exception& e) {
    return failure("InternalError", e, kInternal);
  }
}

const std::map<std::string, Command>& command_table() {
  static const std::map<std::string, Command> table{
      {"classify", Command::Classify},
      {"staircase", Command::Staircase},
      {"echelon", Command::Echelon},
      {"factor", Command::Factor},
      {"product", Command::Product},
      {"spectrum", Command::Spectrum},
      {"plucker", Command::Plucker},
      {"stiefel-invert", Command::StiefelInvert},
      {"network-weight", Command::NetworkWeight},
      {"factor-to-network", Command::FactorToNetwork},
      {"verify", Command::Verify},
  };
  return table;
}

const char* describe(Command c) {
  switch (c) {
    case Command::Classify: return "TP/TN/DD report of a tropical matrix";
    case Command::Staircase: return "staircase coefficients {u, v, lambda} of a finite Monge matrix";
    case Command::Echelon: return "support pattern and double echelon test";
    case Command::Factor: return "tropical Jacobi factorization of a TN matrix";
    case Command::Product: return "max-plus product of a factor list";
    case Command::Spectrum: return "characteristic polynomial and eigenvalues";
    case Command::Plucker: return "tropical Plucker vector of a k x n matrix";
    case Command::StiefelInvert: return "recover B from a Plucker vector, or report the mismatch";
    case Command::NetworkWeight: return "weight matrix of a planar network";
    case Command::FactorToNetwork: return "planar network of a factor list";
    case Command::Verify: return "recompute every worked example";
  }
  return "";
}

}  // namespace

const char* to_string(Command c) {
  for (const auto& [name, cmd] : command_table())
    if (cmd == c) return name.c_str();
  return "?";
}

int run(const RunConfig& config, std::ostream& out) {
  const Outcome o = guarded(config);
  const std::string text = o.doc.dump(2) + "\n";
  if (config.out.empty()) {
    out << text;
    return o.status;
  }
  std::ofstream file(config.out);
  if (!file) {
    out << Json{{"error", {{"type", "ParseError"}, {"message", "cannot write '" + config.out + "'"}}}}.dump(2) << "\n";
    return kUsage;
  }
  file << text;
  return o.status;
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tropical total positivity toolkit"};
  app.require_subcommand(1);
  RunConfig config;
  std::string lift;
  std::map<CLI::App*, Command> subs;
  for (const auto& [name, cmd] : command_table()) {
    CLI::App* sub = app.add_subcommand(name, describe(cmd));
    if (cmd != Command::Verify) sub->add_option("input", config.inputs, "JSON input file, - for stdin")->required();
    sub->add_option("--cap", config.cap, "enumeration size cap")->check(CLI::PositiveNumber);
    sub->add_option("--seed", config.seed, "seed for randomized lifts");
    sub->add_option("--lift", lift, "lift strategy")->check(CLI::IsMember({"canonical", "hadamard", "random"}));
    sub->add_option("--out", config.out, "write the JSON report here");
    sub->add_flag("--strict", config.strict, "treat a failed strict property as a negative result");
    subs[sub] = cmd;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kUsage;
  }
  for (const auto& [sub, cmd] : subs)
    if (sub->parsed()) config.command = cmd;
  if (!lift.empty()) config.lift = parse_lift_kind(lift);
  return run(config, out);
}

}  // namespace tropos::cli
