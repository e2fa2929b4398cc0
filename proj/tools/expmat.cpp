// expmat: verify, normalize, and birationally classify exponential matrices.
//
// Subcommands read JSON inputs and print a schema-versioned JSON report on
// stdout.  Exit codes: 0 success / positive verdict, 1 negative verdict
// (invalid or inequivalent), 2 usage or input error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "expmat/json_io.hpp"
#include "expmat/lnd.hpp"
#include "expmat/oracle.hpp"

namespace {

using expmat::Json;

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) expmat::raise(expmat::errc::bad_input, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    expmat::raise(expmat::errc::bad_input, "JSON parse error in '" + path + "': " + e.what());
  }
}

void emit(const Json& report) { std::cout << report.dump(2) << "\n"; }

Json report_head(const std::string& command) {
  Json j;
  j["schema"] = expmat::kReportSchema;
  j["command"] = command;
  return j;
}

expmat::ExpMatrix load_exp_matrix(const std::string& path) {
  expmat::PolyMatrix m = expmat::parse_poly_matrix(load_json(path));
  auto [exp, rep] = expmat::ExpMatrix::verify(m);
  if (!exp)
    expmat::raise(expmat::errc::bad_input,
                  "input matrix in '" + path + "' is not exponential");
  return *exp;
}

int cmd_verify(const std::string& path) {
  expmat::PolyMatrix m = expmat::parse_poly_matrix(load_json(path));
  auto [exp, rep] = expmat::ExpMatrix::verify(m);
  Json j = report_head("verify");
  j["valid"] = rep.valid;
  Json routes;
  routes["bivariate"] = rep.bivariate_ok;
  routes["coproduct"] = rep.coproduct_ok;
  routes["agree"] = rep.routes_agree;
  j["routes"] = std::move(routes);
  j["at_zero"] = rep.at_zero_ok;
  j["det_one"] = rep.det_ok;
  if (!rep.valid && rep.fail_row >= 0) {
    j["failing_entry"] = Json::array({rep.fail_row, rep.fail_col});
    j["residual"] = rep.residual;
  }
  emit(j);
  return rep.valid ? 0 : 1;
}

int cmd_classify(const std::string& path, bool no_witness_verify) {
  expmat::ExpMatrix a = load_exp_matrix(path);
  expmat::ClassifyOptions opts;
  opts.verify_witness = !no_witness_verify;
  expmat::ClassifyResult result = expmat::classify(a, opts);
  Json j = report_head("classify");
  j["class"] = expmat::birclass_to_json(result.cls);
  j["canonical_matrix"] = expmat::poly_matrix_to_json(result.canonical.matrix());
  j["witness"] = expmat::witness_to_json(a.ctx(), result.witness)["steps"];
  j["verified"] = result.verified;
  j["field_policy"] = "all decisions taken over the input's coefficient field";
  emit(j);
  return 0;
}

int cmd_equiv(const std::string& path_a, const std::string& path_b, bool no_witness_verify) {
  expmat::ExpMatrix a = load_exp_matrix(path_a);
  expmat::ExpMatrix b = load_exp_matrix(path_b);
  expmat::ClassifyOptions opts;
  opts.verify_witness = !no_witness_verify;
  expmat::EquivResult result = expmat::equiv_bir(a, b, opts);
  Json j = report_head("equiv");
  j["equivalent"] = result.equivalent;
  j["class_a"] = expmat::birclass_to_json(result.class_a);
  j["class_b"] = expmat::birclass_to_json(result.class_b);
  if (result.witness) j["witness"] = expmat::witness_to_json(a.ctx(), *result.witness)["steps"];
  emit(j);
  return result.equivalent ? 0 : 1;
}

int cmd_witness(const std::string& path) {
  Json in = load_json(path);
  expmat::Witness w = expmat::parse_witness(in);
  expmat::WitnessCheck check = expmat::verify_witness(w);
  Json j = report_head("witness");
  j["steps"] = w.size();
  j["verified"] = check.ok;
  if (!check.ok) {
    j["failed_step"] = check.failed_step;
    j["reason"] = check.reason;
  }
  emit(j);
  return check.ok ? 0 : 1;
}

int cmd_exp(const std::string& path) {
  expmat::ScalarMatrix n = expmat::parse_scalar_matrix(load_json(path));
  expmat::ExpMatrix a = expmat::exp_nilpotent(n);
  Json j = report_head("exp");
  j["matrix"] = expmat::poly_matrix_to_json(a.matrix());
  emit(j);
  return 0;
}

int cmd_log(const std::string& path) {
  expmat::ExpMatrix a = load_exp_matrix(path);
  expmat::ScalarMatrix n = expmat::log_exponential(a);
  Json j = report_head("log");
  j["matrix"] = expmat::scalar_matrix_to_json(n);
  emit(j);
  return 0;
}

int cmd_action(const std::string& path) {
  expmat::ExpMatrix a = load_exp_matrix(path);
  expmat::ProjMap mu = expmat::action_of(a);
  Json j = report_head("action");
  j["action"] = expmat::projmap_to_json(mu);
  emit(j);
  return 0;
}

int cmd_enumerate(const std::string& field_spec, std::size_t n, const std::string& family,
                  std::size_t degree_bound) {
  expmat::EnumSpec spec;
  spec.field = expmat::parse_field(Json::parse(field_spec));
  spec.n = n;
  spec.degree_bound = degree_bound;
  if (!family.empty()) {
    if (family == "A12") spec.family = expmat::Family::A12;
    else if (family == "A21") spec.family = expmat::Family::A21;
    else if (family == "J3") spec.family = expmat::Family::J3;
    else if (family == "Upper2") spec.family = expmat::Family::Upper2;
    else expmat::raise(expmat::errc::bad_input, "unknown family '" + family + "'");
  }
  expmat::enumerate_family(spec, [&](const expmat::ExpMatrix& m, const expmat::FamilyForm& form) {
    Json line;
    line["family"] = expmat::family_name(form.family);
    if (form.alpha1) line["alpha1"] = expmat::ppoly_to_json(*form.alpha1)["ppoly"];
    if (form.alpha2) line["alpha2"] = expmat::ppoly_to_json(*form.alpha2)["ppoly"];
    line["matrix"] = expmat::poly_matrix_to_json(m.matrix());
    std::cout << line.dump() << "\n";
  });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for exponential matrices"};
  app.require_subcommand(1);

  std::string input_a, input_b, field_spec = R"({"char": 2})", family;
  std::size_t enum_n = 3, degree_bound = 1;
  bool no_witness_verify = false;

  auto* verify = app.add_subcommand("verify", "check the exponential axioms");
  verify->add_option("input", input_a, "matrix JSON file")->required();

  auto* classify = app.add_subcommand("classify", "birational class with witness chain");
  classify->add_option("input", input_a, "matrix JSON file")->required();
  classify->add_flag("--no-witness-verify", no_witness_verify,
                     "skip re-verification of the emitted witness");

  auto* equiv = app.add_subcommand("equiv", "decide birational equivalence");
  equiv->add_option("input_a", input_a, "first matrix JSON file")->required();
  equiv->add_option("input_b", input_b, "second matrix JSON file")->required();
  equiv->add_flag("--no-witness-verify", no_witness_verify,
                  "skip re-verification of the emitted witness");

  auto* witness = app.add_subcommand("witness", "re-verify a stored witness chain");
  witness->add_option("input", input_a, "witness JSON file")->required();

  auto* exp = app.add_subcommand("exp", "Exp of a nilpotent matrix (char 0)");
  exp->add_option("input", input_a, "nilpotent matrix JSON file")->required();

  auto* log = app.add_subcommand("log", "nilpotent logarithm (char 0)");
  log->add_option("input", input_a, "matrix JSON file")->required();

  auto* action = app.add_subcommand("action", "induced projective action");
  action->add_option("input", input_a, "matrix JSON file")->required();

  auto* enumerate = app.add_subcommand("enumerate", "stream family matrices as JSON lines");
  enumerate->add_option("--field", field_spec, "field spec JSON, e.g. {\"char\":2}");
  enumerate->add_option("--n", enum_n, "matrix size (2 or 3)");
  enumerate->add_option("--family", family, "A12 | A21 | J3 | Upper2");
  enumerate->add_option("--degree-bound", degree_bound, "max exponent i of T^{p^i}");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*verify) return cmd_verify(input_a);
    if (*classify) return cmd_classify(input_a, no_witness_verify);
    if (*equiv) return cmd_equiv(input_a, input_b, no_witness_verify);
    if (*witness) return cmd_witness(input_a);
    if (*exp) return cmd_exp(input_a);
    if (*log) return cmd_log(input_a);
    if (*action) return cmd_action(input_a);
    if (*enumerate) return cmd_enumerate(field_spec, enum_n, family, degree_bound);
  } catch (const expmat::error& e) {
    Json j;
    j["schema"] = expmat::kReportSchema;
    j["error"] = e.what();
    std::cout << j.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    Json j;
    j["schema"] = expmat::kReportSchema;
    j["error"] = e.what();
    std::cout << j.dump(2) << "\n";
    return 2;
  }
  return 2;
}
