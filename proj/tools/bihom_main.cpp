#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "bihom/catalog.hpp"
#include "bihom/construct.hpp"
#include "bihom/document.hpp"
#include "bihom/errors.hpp"
#include "bihom/expr.hpp"

namespace {

using namespace bihom;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

struct CommonFlags {
  std::string format = "text";
  int witness_cap = 16;
  bool fail_fast = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--format", flags.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--witness-cap", flags.witness_cap, "Maximum witnesses per axiom")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--fail-fast", flags.fail_fast, "Stop at the first failing axiom");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write '" + path + "'");
  out << text;
}

Rational parse_rational_value(const std::string& text) {
  Scalar s = parse_scalar(text, {});
  if (!s.is_rational()) throw PreconditionError("'" + text + "' is not a rational value");
  return s.rational_value();
}

AlgebraBundle apply_bindings(AlgebraBundle b, const std::vector<std::string>& bindings) {
  for (const auto& kv : bindings) {
    auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw PreconditionError("--param expects name=value, got '" + kv + "'");
    b = bundle_substitute(b, kv.substr(0, eq), parse_rational_value(kv.substr(eq + 1)));
  }
  return b;
}

void print_report(const ViolationReport& rep, const AlgebraBundle& b, const CommonFlags& flags) {
  if (flags.format == "json")
    std::cout << report_to_json(rep, b.basis);
  else
    std::cout << report_to_text(rep, b.basis);
}

int run_check(const std::string& file, const std::string& kind, const std::string& weight,
              const std::vector<std::string>& bindings, const CommonFlags& flags) {
  AlgebraBundle b = apply_bindings(bundle_from_json(read_file(file)), bindings);
  CheckOptions opt{flags.witness_cap, flags.fail_fast};

  ViolationReport rep;
  std::string selected = kind;
  if (selected.empty()) selected = kind_name(b.kind);
  if (selected == "structure-maps") {
    rep = check_structure_maps(b, opt);
  } else if (selected == "rota-baxter") {
    if (weight.empty()) throw PreconditionError("--kind rota-baxter requires --weight");
    rep = check_rota_baxter(b, parse_scalar(weight, b.parameters), opt);
  } else if (auto k = kind_from_name(selected)) {
    AlgebraBundle view = b;
    view.kind = *k;
    rep = check_by_kind(view, opt);
  } else {
    throw PreconditionError("unknown check kind '" + selected + "'");
  }
  print_report(rep, b, flags);
  return rep.ok() ? kExitPass : kExitViolation;
}

int run_construct(const std::string& name, const std::string& file, const std::string& weight,
                  const std::vector<std::string>& bindings, const std::string& out_path,
                  const CommonFlags& flags) {
  AlgebraBundle in = apply_bindings(bundle_from_json(read_file(file)), bindings);
  auto weight_scalar = [&]() {
    if (weight.empty()) throw PreconditionError("construction '" + name + "' requires --weight");
    return parse_scalar(weight, in.parameters);
  };

  AlgebraBundle out = [&]() -> AlgebraBundle {
    if (name == "sub-adjacent") return sub_adjacent(in);
    if (name == "admissible-product") return admissible_product(in);
    if (name == "commutator-lie") return commutator_bihom_lie(in);
    if (name == "black-transform") return black_transform(in);
    if (name == "flip-post-lie") return flip_post_lie(in);
    if (name == "double-bracket") return double_bracket(in);
    if (name == "lr-to-post") return lr_to_post(in);
    if (name == "tridend-to-post") return tridend_to_post(in);
    if (name == "tridend-to-assoc") return tridend_to_assoc(in);
    if (name == "rota-baxter-induced") return rota_baxter_induced(in, weight_scalar());
    if (name == "semidirect-adjoint") {
      auto reps = canonical_representations(in);
      return semidirect_lie(in, reps.front());
    }
    if (name == "semidirect-post-adjoint") {
      AlgebraBundle view = in;
      view.kind = Kind::BihomPostLie;
      auto reps = canonical_representations(view);
      if (reps.size() < 2) throw PreconditionError("no adjoint post-representation available");
      return semidirect_post_lie(view, reps[1]);
    }
    throw PreconditionError("unknown construction '" + name + "'");
  }();

  write_output(out_path, bundle_to_json(out));
  ViolationReport rep = check_by_kind(out, CheckOptions{flags.witness_cap, flags.fail_fast});
  print_report(rep, out, flags);
  return rep.ok() ? kExitPass : kExitViolation;
}

int run_catalog(const std::string& name, const std::string& weight,
                const std::vector<std::string>& bindings, const std::string& out_path) {
  std::vector<std::string> substitutions;
  AlgebraBundle b = [&]() -> AlgebraBundle {
    if (name != "splitting-rb") {
      substitutions = bindings;
      return catalog::by_name(name);
    }
    // splitting-rb: --param base=<catalog name>, --param i2=<basis names,+ separated>,
    // --weight <expr>; emits the base bundle with R attached.
    std::string base, i2;
    for (const auto& kv : bindings) {
      auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw PreconditionError("--param expects name=value, got '" + kv + "'");
      std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
      if (key == "base")
        base = value;
      else if (key == "i2")
        i2 = value;
      else
        substitutions.push_back(kv);
    }
    if (base.empty() || i2.empty())
      throw PreconditionError("splitting-rb requires --param base=<name> and --param i2=<names>");
    if (weight.empty()) throw PreconditionError("splitting-rb requires --weight");
    AlgebraBundle basealg = catalog::by_name(base);
    std::vector<int> part2;
    std::istringstream ss(i2);
    std::string tok;
    while (std::getline(ss, tok, '+')) {
      int idx = -1;
      for (std::size_t k = 0; k < basealg.basis.size(); ++k)
        if (basealg.basis[k] == tok) idx = static_cast<int>(k);
      if (idx < 0) throw PreconditionError("unknown basis name '" + tok + "' in i2");
      part2.push_back(idx);
    }
    std::vector<int> part1;
    for (int k = 0; k < basealg.dim; ++k)
      if (std::find(part2.begin(), part2.end(), k) == part2.end()) part1.push_back(k);
    MatrixS R = splitting_rota_baxter(basealg, part1, part2,
                                      parse_scalar(weight, basealg.parameters));
    basealg.maps.erase("R");
    basealg.maps.emplace("R", std::move(R));
    basealg.name = base + "-splitting-rb";
    return basealg;
  }();
  b = apply_bindings(std::move(b), substitutions);
  write_output(out_path, bundle_to_json(b));
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification and construction toolkit for BiHom-post-Lie algebras"};
  app.require_subcommand(1);

  CommonFlags check_flags, construct_flags;
  std::string check_file, check_kind, check_weight;
  std::vector<std::string> check_params;
  CLI::App* check = app.add_subcommand("check", "Check a bundle document against an axiom system");
  check->add_option("file", check_file, "Bundle document")->required();
  check->add_option("--kind", check_kind,
                    "Axiom system (defaults to the bundle's kind tag); one of bihom-lie, "
                    "bihom-post-lie, bihom-lr, bihom-tridendriform, bihom-product, "
                    "structure-maps, rota-baxter");
  check->add_option("--weight", check_weight, "Weight expression for rota-baxter checks");
  check->add_option("--param", check_params, "Specialize a parameter, name=value");
  add_common(check, check_flags);

  std::string cons_name, cons_file, cons_weight, cons_out;
  std::vector<std::string> cons_params;
  CLI::App* cons = app.add_subcommand("construct", "Run a construction and verify its output");
  cons->add_option("name", cons_name, "Construction name")->required();
  cons->add_option("file", cons_file, "Input bundle document")->required();
  cons->add_option("--weight", cons_weight, "Weight expression where applicable");
  cons->add_option("--param", cons_params, "Specialize a parameter, name=value");
  cons->add_option("--out", cons_out, "Output path (stdout when omitted)");
  add_common(cons, construct_flags);

  std::string cat_name, cat_weight, cat_out;
  std::vector<std::string> cat_params;
  CLI::App* cat = app.add_subcommand("catalog", "Emit a built-in bundle document");
  cat->add_option("name", cat_name, "One of sl2-bihom, sl2-post-lie, tridend-2dim, splitting-rb")
      ->required();
  cat->add_option("--weight", cat_weight, "Weight expression (splitting-rb)");
  cat->add_option("--param", cat_params, "Bindings (splitting-rb: base=, i2=) or specializations");
  cat->add_option("--out", cat_out, "Output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
    if (check->parsed())
      return run_check(check_file, check_kind, check_weight, check_params, check_flags);
    if (cons->parsed())
      return run_construct(cons_name, cons_file, cons_weight, cons_params, cons_out,
                           construct_flags);
    if (cat->parsed()) return run_catalog(cat_name, cat_weight, cat_params, cat_out);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
