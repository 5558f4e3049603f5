#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "wick/braid.hpp"
#include "wick/catalog.hpp"
#include "wick/diffcalc.hpp"
#include "wick/ideals.hpp"
#include "wick/io.hpp"
#include "wick/kms.hpp"
#include "wick/rewrite.hpp"
#include "wick/states.hpp"

using namespace wick;
using nlohmann::json;

namespace {

struct Common {
  std::string relations_file;
  std::string preset;
  std::vector<std::string> params;
  int nmax = 4;
  std::string phi;
  std::string json_out;
  std::size_t cap = kDefaultDimCap;
  bool timing = false;
};

void add_common(CLI::App* sub, Common& c, bool with_nmax = true) {
  auto* rel = sub->add_option("--relations", c.relations_file, "relation file (JSON)");
  auto* pre = sub->add_option("--preset", c.preset, "catalog family");
  rel->excludes(pre);
  sub->add_option("--param", c.params, "preset parameter k=v (repeatable)");
  if (with_nmax) sub->add_option("--nmax", c.nmax, "largest level")->check(CLI::NonNegativeNumber);
  sub->add_option("--phi", c.phi, "coherent parameter c1,c2,...");
  sub->add_option("--json", c.json_out, "write a JSON report");
  sub->add_option("--cap", c.cap, "dimension cap for d^n");
  sub->add_flag("--timing", c.timing, "record wall time in the report");
}

Scalar parse_scalar(const std::string& text) {
  Polynomial p = parse_expression(text, 1);
  if (p.max_length() != 0) throw PreconditionError("expected a scalar, got '" + text + "'");
  return p.coefficient(Word{});
}

PresetSpec preset_spec(const Common& c) {
  PresetSpec spec{c.preset, 0, {}};
  for (const auto& kv : c.params) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw PreconditionError("--param expects k=v, got '" + kv + "'");
    const std::string key = kv.substr(0, eq);
    const std::string value = kv.substr(eq + 1);
    if (key == "d")
      spec.d = std::stoi(value);
    else
      spec.params[key] = parse_scalar(value);
  }
  return spec;
}

RelationSystem load(const Common& c) {
  if (!c.relations_file.empty()) {
    std::vector<std::string> warnings;
    auto rs = load_relations(c.relations_file, &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
    return rs;
  }
  if (c.preset.empty()) throw PreconditionError("one of --relations or --preset is required");
  return make_preset(preset_spec(c));
}

CoherentParam load_phi(const Common& c, int d) {
  if (c.phi.empty()) return CoherentParam::fock(d);
  std::vector<Scalar> v;
  std::stringstream ss(c.phi);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_scalar(item));
  if (static_cast<int>(v.size()) != d)
    throw PreconditionError("--phi needs " + std::to_string(d) + " components");
  return CoherentParam{v};
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(8) << x;
  return os.str();
}

std::string yes(bool b) { return b ? "yes" : "no"; }

class Output {
 public:
  Output(const Common& c, const std::string& command, const RelationSystem& rs) : c_(c) {
    report_.command = command;
    report_.relations_name = rs.name;
    report_.relations_d = rs.tensor.d();
    report_.relations_params = rs.params;
    start_ = std::chrono::steady_clock::now();
    std::cout << command << ": " << (rs.name.empty() ? "relations" : rs.name) << " (d=" << rs.tensor.d();
    for (const auto& [k, v] : rs.params)
      if (k != "d") std::cout << ", " << k << "=" << v;
    std::cout << ")\n";
  }

  void add(CheckRecord rec) { report_.checks.push_back(std::move(rec)); }

  int finish(bool ok = true) {
    if (c_.timing)
      report_.timing_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    if (!c_.json_out.empty()) save_report(report_, c_.json_out);
    return ok ? 0 : 1;
  }

 private:
  const Common& c_;
  Report report_;
  std::chrono::steady_clock::time_point start_;
};

void print_row(std::initializer_list<std::string> cols, int width = 14) {
  for (const auto& s : cols) std::cout << std::left << std::setw(width) << s << ' ';
  std::cout << '\n';
}

// ---------------------------------------------------------------- commands

int cmd_order(const Common& c, const std::string& expr, const std::string& strategy, std::uint64_t seed) {
  auto rs = load(c);
  RewriteOptions opt;
  opt.seed = seed;
  if (strategy == "rightmost") opt.strategy = RewriteOptions::Strategy::Rightmost;
  if (strategy == "random") opt.strategy = RewriteOptions::Strategy::Random;
  Polynomial p = parse_expression(expr, rs.tensor.d());
  Polynomial out = wick_order(p, rs.tensor, opt);
  Output o(c, "order", rs);
  std::cout << "input:  " << format_polynomial(p) << '\n' << "normal: " << format_polynomial(out) << '\n';
  o.add({"order", {{"expression", expr}, {"strategy", strategy}}, {{"normal_form", format_polynomial(out)}, {"terms", out.size()}}, json::object()});
  return o.finish();
}

int cmd_identity(const Common& c, const std::string& lhs, const std::string& rhs) {
  auto rs = load(c);
  Polynomial p = parse_expression(lhs, rs.tensor.d());
  Polynomial q = parse_expression(rhs, rs.tensor.d());
  Polynomial diff = wick_order(p - q, rs.tensor);
  Output o(c, "identity", rs);
  std::cout << "holds: " << yes(diff.is_zero()) << '\n';
  if (!diff.is_zero()) std::cout << "lhs - rhs = " << format_polynomial(diff) << '\n';
  o.add({"identity", {{"lhs", lhs}, {"rhs", rhs}}, {{"holds", diff.is_zero()}}, {{"difference", format_polynomial(diff)}}});
  return o.finish(diff.is_zero());
}

int cmd_gram(const Common& c) {
  auto rs = load(c);
  const int d = rs.tensor.d();
  auto phi = load_phi(c, d);
  Output o(c, "gram", rs);
  print_row({"n", "dim", "rank", "eig_min", "psd"});
  json levels = json::array();
  bool all_psd = true;
  for (int n = 0; n <= c.nmax; ++n) {
    power_dim(d, n, c.cap);
    Matrix g = gram_matrix(all_words(d, n), phi, rs.tensor);
    auto s = spectral_summary(g);
    bool psd = exact_is_psd(g);
    all_psd = all_psd && psd;
    print_row({std::to_string(n), std::to_string(g.rows()), std::to_string(s.rank), fmt(s.eig_min), yes(psd)});
    levels.push_back({{"n", n}, {"dim", g.rows()}, {"rank", s.rank}, {"eig_min", s.eig_min}, {"psd", psd}});
  }
  json phij = json::array();
  for (const auto& v : phi.phi) phij.push_back(scalar_to_json(v));
  o.add({"gram", {{"n_max", c.nmax}, {"phi", phij}}, {{"levels", levels}, {"all_psd", all_psd}}, json::object()});
  return o.finish();
}

int cmd_positivity(const Common& c) {
  auto rs = load(c);
  auto rep = positivity_report(rs.tensor, c.nmax, c.cap);
  Output o(c, "positivity", rs);
  std::cout << "||T|| = " << fmt(rep.norm_t) << "  t+ = " << fmt(rep.t_plus) << "  t- = " << fmt(rep.t_minus)
            << "  braid: " << yes(rep.braid) << '\n';
  std::cout << "criteria: ||T||<=1/2 " << yes(rep.crit_norm_half) << ", T>=0 " << yes(rep.crit_positive)
            << ", braid&||T||<=1 " << yes(rep.crit_braid_norm1) << "; Cuntz-stable " << yes(rep.cuntz_stable)
            << '\n';
  if (rep.operator_bound) std::cout << "operator bound 1/(1-||T||) = " << fmt(*rep.operator_bound) << '\n';
  if (rep.collective_bound) std::cout << "collective bound 1/(1-t+) = " << fmt(*rep.collective_bound) << '\n';
  if (!rep.any_criterion() && rep.norm_t > 0.5) std::cout << "note: no criterion applies (||T|| > 1/2)\n";
  print_row({"n", "rank", "eig_min", "psd"});
  for (const auto& l : rep.levels) {
    print_row({std::to_string(l.n), std::to_string(l.summary.rank), fmt(l.summary.eig_min), yes(l.psd_exact)});
    if (l.witness)
      std::cout << "  witness " << l.witness->description << " value " << format_scalar(l.witness->value) << '\n';
  }
  o.add(positivity_record(rep));
  return o.finish();
}

int cmd_braid(const Common& c) {
  auto rs = load(c);
  const bool braided = braid_check(rs.tensor);
  Output o(c, "braid", rs);
  std::cout << "braid relation: " << yes(braided) << '\n';
  json results{{"braid", braided}};
  if (braided) {
    json levels = json::array();
    print_row({"n", "sum T(pi) = P_n", "kernel psd"}, 18);
    for (int n = 1; n <= c.nmax; ++n) {
      const bool eq = p_n_by_permutations(rs.tensor, n) == p_n(rs.tensor, n, c.cap);
      json lv{{"n", n}, {"factorization", eq}};
      std::string kpsd = "-";
      if (n <= 3) {
        auto k = permutation_kernel_psd(rs.tensor, n);
        lv["kernel_psd"] = k.psd;
        kpsd = yes(k.psd);
      }
      print_row({std::to_string(n), yes(eq), kpsd}, 18);
      levels.push_back(lv);
    }
    results["levels"] = levels;
  }
  o.add({"braid", {{"n_max", c.nmax}}, results, json::object()});
  return o.finish();
}

int cmd_ideal_check(const Common& c, std::size_t max_deg) {
  auto rs = load(c);
  Output o(c, "ideal-check", rs);
  auto p = minus_one_eigenprojection(rs.tensor);
  auto q = quadratic_ideal_check(rs.tensor, p);
  const std::size_t prank = rank(p.m);
  std::cout << "ker(1+T): dim " << prank << "; linear " << yes(q.linear) << ", quadratic " << yes(q.quadratic)
            << '\n';
  o.add({"quadratic_ideal", {{"projection", "minus_one_eigenprojection"}},
         {{"rank", prank}, {"linear", q.linear}, {"quadratic", q.quadratic}}, json::object()});
  if (rs.ideal_generators.empty()) {
    std::cout << "no ideal generators declared\n";
    return o.finish();
  }
  std::size_t longest = 0;
  json gens = json::array();
  for (const auto& g : rs.ideal_generators) {
    longest = std::max(longest, g.max_length());
    gens.push_back(format_polynomial(g));
  }
  if (max_deg == 0) max_deg = longest + 1;
  auto det = wick_ideal_condition_details(rs.tensor, rs.ideal_generators, max_deg);
  std::cout << "Wick ideal condition (" << rs.ideal_generators.size() << " generators, degree <= " << max_deg
            << "): " << yes(det.holds) << '\n';
  for (const auto& f : det.failures) std::cout << "  " << f << '\n';
  o.add({"wick_ideal", {{"generators", gens}, {"max_deg", max_deg}}, {{"holds", det.holds}},
         det.failures.empty() ? json::object() : json{{"failures", det.failures}}});
  if (!c.phi.empty()) {
    auto phi = load_phi(c, rs.tensor.d());
    const bool ann = coherent_annihilation_check(rs.ideal_generators, phi);
    std::cout << "coherent annihilation at phi: " << yes(ann) << '\n';
    o.add({"coherent_annihilation", {{"phi", c.phi}}, {{"holds", ann}}, json::object()});
  }
  return o.finish();
}

int cmd_forms(const Common& c) {
  auto rs = load(c);
  Output o(c, "forms", rs);
  print_row({"p", "dim"});
  json dims = json::array();
  for (int p = 0; p <= c.nmax; ++p) {
    auto dim = form_space_dim(rs.tensor, p, c.cap);
    print_row({std::to_string(p), std::to_string(dim)});
    dims.push_back(dim);
  }
  json results{{"dims", dims}};
  if (hermiticity_check(rs.tensor)) {
    auto ex = wick_diff_star_algebra_exists(rs.tensor);
    std::cout << "differential *-algebra: " << yes(ex.exists) << " (invertible " << yes(ex.invertible) << ", braid "
              << yes(ex.braid) << ")\n";
    results["diff_star_algebra"] = {{"exists", ex.exists}, {"invertible", ex.invertible}, {"braid", ex.braid}};
  }
  o.add({"forms", {{"p_max", c.nmax}}, results, json::object()});
  return o.finish();
}

int cmd_kms(const Common& c, const std::string& lambda_text, const std::vector<std::string>& exprs, int bidegree) {
  auto rs = load(c);
  const Scalar lambda = parse_scalar(lambda_text);
  auto series = kms_series(rs.tensor, lambda, c.nmax, c.cap);
  Output o(c, "kms", rs);
  std::cout << "lambda = " << format_scalar(lambda) << '\n';
  print_row({"n", "rank P_n", "partial sum"});
  json ranks = json::array(), sums = json::array();
  for (std::size_t n = 0; n < series.ranks.size(); ++n) {
    print_row({std::to_string(n), std::to_string(series.ranks[n]), format_scalar(series.partial_sums[n])});
    ranks.push_back(series.ranks[n]);
    sums.push_back(format_scalar(series.partial_sums[n]));
  }
  json values = json::object();
  if (!exprs.empty()) {
    KmsEvaluator ev(rs.tensor, lambda, bidegree);
    for (const auto& e : exprs) {
      Scalar v = ev.evaluate(parse_expression(e, rs.tensor.d()));
      std::cout << "kappa(" << e << ") = " << format_scalar(v) << '\n';
      values[e] = format_scalar(v);
    }
  }
  o.add({"kms", {{"lambda", format_scalar(lambda)}, {"n_max", c.nmax}, {"max_bidegree", bidegree}},
         {{"ranks", ranks}, {"partial_sums", sums}, {"values", values}}, json::object()});
  return o.finish();
}

int cmd_preset(const Common& c, const std::string& out) {
  auto rs = make_preset(preset_spec(c));
  json j = relations_to_json(rs);
  if (out.empty() || out == "-") {
    std::cout << j.dump(2) << '\n';
  } else {
    save_relations(rs, out);
    std::cerr << "wrote " << out << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wick algebra toolkit"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  Common c;
  std::string expr, lhs, rhs, strategy = "leftmost", lambda = "1/2", out;
  std::uint64_t seed = 0;
  std::size_t max_deg = 0;
  int bidegree = 4;
  std::vector<std::string> exprs;

  auto* order = app.add_subcommand("order", "Wick-order an expression");
  add_common(order, c, false);
  order->add_option("expr", expr, "expression")->required();
  order->add_option("--strategy", strategy)->check(CLI::IsMember({"leftmost", "rightmost", "random"}));
  order->add_option("--seed", seed);

  auto* identity = app.add_subcommand("identity", "check lhs = rhs in W(T)");
  add_common(identity, c, false);
  identity->add_option("lhs", lhs)->required();
  identity->add_option("rhs", rhs)->required();

  auto* gram = app.add_subcommand("gram", "Gram matrices of the coherent functional");
  add_common(gram, c);
  auto* positivity = app.add_subcommand("positivity", "Fock positivity report");
  add_common(positivity, c);
  auto* braid = app.add_subcommand("braid", "braid relation and permutation expansion");
  add_common(braid, c);
  auto* ideal = app.add_subcommand("ideal-check", "quadratic and Wick ideal conditions");
  add_common(ideal, c, false);
  ideal->add_option("--max-deg", max_deg, "truncation degree (default: longest generator + 1)");
  auto* forms = app.add_subcommand("forms", "constant-coefficient form dimensions");
  add_common(forms, c);
  auto* kms = app.add_subcommand("kms", "rank series and KMS values");
  add_common(kms, c);
  kms->add_option("--lambda", lambda, "fugacity");
  kms->add_option("--eval", exprs, "expression to evaluate (repeatable)");
  kms->add_option("--bidegree", bidegree, "largest n+m for the evaluator");
  auto* preset = app.add_subcommand("preset", "emit a preset relation file");
  preset->add_option("name", c.preset)->required();
  preset->add_option("--param", c.params);
  preset->add_option("-o,--out", out, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (order->parsed()) return cmd_order(c, expr, strategy, seed);
    if (identity->parsed()) return cmd_identity(c, lhs, rhs);
    if (gram->parsed()) return cmd_gram(c);
    if (positivity->parsed()) return cmd_positivity(c);
    if (braid->parsed()) return cmd_braid(c);
    if (ideal->parsed()) return cmd_ideal_check(c, max_deg);
    if (forms->parsed()) return cmd_forms(c);
    if (kms->parsed()) return cmd_kms(c, lambda, exprs, bidegree);
    if (preset->parsed()) return cmd_preset(c, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
