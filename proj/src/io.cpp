#include "wick/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace wick {

using nlohmann::json;

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, int d) : s_(text), d_(d) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool starts_factor() const {
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'a' || c == 'i' || c == '(';
  }

  Polynomial expr() {
    skip_ws();
    bool negate = false;
    if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      negate = s_[pos_] == '-';
      ++pos_;
    }
    Polynomial out = term();
    if (negate) out = -out;
    for (;;) {
      skip_ws();
      if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
      const bool minus = s_[pos_] == '-';
      ++pos_;
      Polynomial t = term();
      if (minus)
        out -= t;
      else
        out += t;
    }
    return out;
  }

  Polynomial term() {
    skip_ws();
    if (!starts_factor()) {
      if (pos_ >= s_.size()) throw ParseError("expected a term", pos_);
      throw ParseError("expected a term, got '" + std::string(1, s_[pos_]) + "'", pos_);
    }
    Polynomial out = factor();
    for (;;) {
      skip_ws();
      if (!starts_factor()) break;
      out = out * factor();
    }
    return out;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", pos_);
    return std::string(s_.substr(start, pos_ - start));
  }

  Polynomial factor() {
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(digits());
      mpz_class den(1);
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        const std::size_t at = pos_;
        den = mpz_class(digits());
        if (den == 0) throw ParseError("zero denominator", at);
      }
      return Polynomial(Scalar(Rational(num, den)));
    }
    if (c == 'i') {
      ++pos_;
      return Polynomial(Scalar::imag_unit());
    }
    if (c == 'a') {
      const std::size_t at = pos_;
      ++pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw ParseError("expected generator index after 'a'", pos_);
      const std::string idx = digits();
      if (idx.size() > 6 || std::stoi(idx) < 1 || std::stoi(idx) > d_)
        throw IndexError("generator index a" + idx + " at position " + std::to_string(at) + " outside 1.." +
                         std::to_string(d_));
      const int i = std::stoi(idx);
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        return Polynomial::dag(i);
      }
      return Polynomial::gen(i);
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
  }

  std::string_view s_;
  int d_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_expression(std::string_view text, int d) { return Parser(text, d).parse(); }

std::string format_scalar(const Scalar& s) {
  if (s.is_real()) return s.re_string();
  if (sgn(s.re()) == 0) return s.im() == 1 ? "i" : (s.im() == -1 ? "-i" : s.im_string() + "i");
  std::string im = s.im_string();
  if (sgn(s.im()) > 0) im = "+" + im;
  return "(" + s.re_string() + im + "i)";
}

std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c0] : p.terms()) {
    Scalar c = c0;
    const bool negative = sgn(c.re()) < 0 || (sgn(c.re()) == 0 && sgn(c.im()) < 0);
    if (negative) c = -c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const bool unit = c.is_one();
    if (w.empty()) {
      out += format_scalar(c);
    } else {
      if (!unit) out += format_scalar(c) + " ";
      out += w.to_string();
    }
  }
  return out;
}

// ---------------------------------------------------------------- relations

json scalar_to_json(const Scalar& s) { return json{{"re", s.re_string()}, {"im", s.im_string()}}; }

Scalar scalar_from_json(const json& j) {
  try {
    if (j.is_string()) return Scalar(Scalar::parse_rational(j.get<std::string>()));
    if (j.is_number_integer()) return Scalar(j.get<long>());
    Rational re = Scalar::parse_rational(j.value("re", std::string("0")));
    Rational im = Scalar::parse_rational(j.value("im", std::string("0")));
    return Scalar(re, im);
  } catch (const std::invalid_argument& e) {
    throw Error(std::string("malformed scalar: ") + e.what());
  }
}

json relations_to_json(const RelationSystem& rs) {
  json entries = json::array();
  for (const auto& [key, v] : rs.tensor.entries()) {
    entries.push_back({{"i", key[0]}, {"j", key[1]}, {"k", key[2]}, {"l", key[3]},
                       {"re", v.re_string()}, {"im", v.im_string()}});
  }
  json gens = json::array();
  for (const auto& g : rs.ideal_generators) gens.push_back(format_polynomial(g));
  return json{{"schema_version", kSchemaVersion}, {"name", rs.name},       {"d", rs.d()},
              {"params", rs.params},              {"entries", entries},    {"ideal_generators", gens}};
}

RelationSystem relations_from_json(const json& j, std::vector<std::string>* warnings) {
  try {
    if (!j.is_object()) throw Error("relation file: expected a JSON object");
    if (j.contains("schema_version") && j.at("schema_version").get<int>() != kSchemaVersion)
      throw Error("relation file: unsupported schema_version");
    const int d = j.at("d").get<int>();
    if (d < 1) throw Error("relation file: d must be positive");
    CoeffTensor t(d);
    for (const auto& e : j.value("entries", json::array())) {
      Scalar v(Scalar::parse_rational(e.value("re", std::string("0"))),
               Scalar::parse_rational(e.value("im", std::string("0"))));
      t.add(e.at("i").get<int>(), e.at("j").get<int>(), e.at("k").get<int>(), e.at("l").get<int>(), v);
    }
    std::vector<Polynomial> gens;
    for (const auto& g : j.value("ideal_generators", json::array()))
      gens.push_back(parse_expression(g.get<std::string>(), d));
    std::map<std::string, std::string> params;
    if (j.contains("params"))
      for (const auto& [k, v] : j.at("params").items())
        params[k] = v.is_string() ? v.get<std::string>() : v.dump();
    if (warnings && !hermiticity_check(t)) warnings->push_back("coefficient tensor is not hermitian");
    return RelationSystem(std::move(t), std::move(gens), j.value("name", std::string()), std::move(params));
  } catch (const json::exception& e) {
    throw Error(std::string("relation file: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(std::string("relation file: ") + e.what());
  }
}

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(path + ": " + e.what());
  }
}

void write_json_file(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace

RelationSystem load_relations(const std::string& path, std::vector<std::string>* warnings) {
  return relations_from_json(read_json_file(path), warnings);
}

void save_relations(const RelationSystem& rs, const std::string& path) {
  write_json_file(relations_to_json(rs), path);
}

// ---------------------------------------------------------------- reports

json report_to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"inputs", c.inputs}, {"results", c.results}, {"witnesses", c.witnesses}});
  return json{{"schema_version", r.schema_version},
              {"tool_version", r.tool_version},
              {"command", r.command},
              {"relations", {{"name", r.relations_name}, {"d", r.relations_d}, {"params", r.relations_params}}},
              {"checks", checks},
              {"timing_ms", r.timing_ms}};
}

Report report_from_json(const json& j) {
  try {
    Report r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != kSchemaVersion) throw Error("report: unsupported schema_version");
    r.tool_version = j.at("tool_version").get<std::string>();
    r.command = j.at("command").get<std::string>();
    const auto& rel = j.at("relations");
    r.relations_name = rel.at("name").get<std::string>();
    r.relations_d = rel.at("d").get<int>();
    r.relations_params = rel.at("params").get<std::map<std::string, std::string>>();
    for (const auto& c : j.at("checks"))
      r.checks.push_back({c.at("name").get<std::string>(), c.at("inputs"), c.at("results"), c.at("witnesses")});
    r.timing_ms = j.at("timing_ms").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw Error(std::string("report: ") + e.what());
  }
}

void save_report(const Report& r, const std::string& path) { write_json_file(report_to_json(r), path); }

Report load_report(const std::string& path) { return report_from_json(read_json_file(path)); }

CheckRecord positivity_record(const PositivityReport& rep) {
  CheckRecord c;
  c.name = "positivity";
  c.inputs = {{"n_max", rep.levels.size()}};
  json levels = json::array();
  json witnesses = json::array();
  for (const auto& l : rep.levels) {
    levels.push_back({{"n", l.n},
                      {"rank", l.summary.rank},
                      {"eig_min", l.summary.eig_min},
                      {"norm", l.summary.norm},
                      {"is_psd", l.summary.is_psd},
                      {"psd_exact", l.psd_exact}});
    if (l.witness) {
      json vec = json::array();
      for (const auto& v : l.witness->vector) vec.push_back(scalar_to_json(v));
      witnesses.push_back({{"n", l.n},
                           {"value", scalar_to_json(l.witness->value)},
                           {"value_text", l.witness->value.to_string()},
                           {"description", l.witness->description},
                           {"vector", vec}});
    }
  }
  c.results = {{"norm_T", rep.norm_t},
               {"t_plus", rep.t_plus},
               {"t_minus", rep.t_minus},
               {"braid", rep.braid},
               {"criterion_norm_le_half", rep.crit_norm_half},
               {"criterion_T_positive", rep.crit_positive},
               {"criterion_braid_norm_le_1", rep.crit_braid_norm1},
               {"any_criterion", rep.any_criterion()},
               {"cuntz_stable", rep.cuntz_stable},
               {"levels", levels}};
  c.results["operator_bound"] = rep.operator_bound ? json(*rep.operator_bound) : json(nullptr);
  c.results["collective_bound"] = rep.collective_bound ? json(*rep.collective_bound) : json(nullptr);
  if (!witnesses.empty()) c.witnesses = {{"negative_vectors", witnesses}};
  return c;
}

}  // namespace wick
