#include "wick/catalog.hpp"

#include <algorithm>
#include <functional>

namespace wick {

namespace {

Scalar param(const PresetSpec& spec, const std::string& key, std::optional<Scalar> fallback = {}) {
  auto it = spec.params.find(key);
  if (it != spec.params.end()) return it->second;
  if (fallback) return *fallback;
  throw PreconditionError("preset " + spec.family + ": missing parameter '" + key + "'");
}

void require_real(const Scalar& s, const std::string& what) {
  if (!s.is_real()) throw PreconditionError(what + " must be real");
}

void require_open_unit(const Scalar& mu, const std::string& what) {
  require_real(mu, what);
  if (!(mu.re() > 0 && mu.re() < 1)) throw PreconditionError(what + " must satisfy 0 < mu < 1");
}

int dimension(const PresetSpec& spec, int fallback) {
  int d = spec.d == 0 ? fallback : spec.d;
  if (d < 1) throw PreconditionError("preset " + spec.family + ": d must be positive");
  if (d > 64) throw PreconditionError("preset " + spec.family + ": d too large");
  return d;
}

int fixed_dimension(const PresetSpec& spec, int d) {
  if (spec.d != 0 && spec.d != d)
    throw PreconditionError("preset " + spec.family + " has exactly " + std::to_string(d) + " generators");
  return d;
}

void check_known_params(const PresetSpec& spec, const std::vector<std::string>& allowed) {
  for (const auto& [k, v] : spec.params)
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
      throw PreconditionError("preset " + spec.family + ": unknown parameter '" + k + "'");
}

Polynomial word(std::initializer_list<int> idx, const Scalar& c = Scalar(1)) {
  return Polynomial(Word::gens(idx), c);
}

std::map<std::string, std::string> param_strings(const PresetSpec& spec, int d) {
  std::map<std::string, std::string> out;
  out["d"] = std::to_string(d);
  for (const auto& [k, v] : spec.params) out[k] = v.to_string();
  return out;
}

CoeffTensor qccr_tensor(int d, const Scalar& q) {
  CoeffTensor t(d);
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) t.set(i, j, i, j, q);
  return t;
}

CoeffTensor twisted_tensor(int d, const Scalar& mu, bool fermionic) {
  CoeffTensor t(d);
  const Scalar tail = -(Scalar(1) - mu * mu);
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j)
      if (i != j) t.set(i, j, i, j, fermionic ? -mu : mu);
    t.set(i, i, i, i, fermionic ? Scalar(-1) : mu * mu);
    for (int k = 1; k < i; ++k) t.set(i, i, k, k, tail);
  }
  return t;
}

}  // namespace

std::vector<Polynomial> twisted_ccr_generators(int d, const Scalar& mu) {
  std::vector<Polynomial> out;
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j < i; ++j) out.push_back(word({i, j}) - word({j, i}, mu));
  return out;
}

std::vector<Polynomial> twisted_car_generators(int d, const Scalar& mu) {
  std::vector<Polynomial> out;
  for (int i = 1; i <= d; ++i) out.push_back(word({i, i}));
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j < i; ++j) out.push_back(word({i, j}) + word({j, i}, mu));
  return out;
}

std::vector<Polynomial> mucar_cubic_generators(int d, const Scalar& mu) {
  const Scalar mu2 = mu * mu;
  const Scalar inv = Scalar(1) / mu;
  std::vector<Polynomial> out;
  for (int i = 2; i <= d; ++i) out.push_back(word({1, 1, i}) - word({i, 1, 1}, mu2));
  for (int i = 2; i <= d; ++i)
    out.push_back(word({1, i, i}) + word({i, 1, i}, inv - mu) - word({i, i, 1}));
  for (int i = 2; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      out.push_back(word({1, i, j}) + word({i, 1, j}, inv) - word({j, 1, i}, mu2) - word({j, i, 1}, mu));
  for (int i = 2; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      out.push_back(word({1, j, i}) - word({i, 1, j}, mu2) - word({i, j, 1}, mu) -
                    word({j, 1, i}, -inv + mu - mu2 * mu) - word({j, i, 1}, Scalar(1) - mu2));
  return out;
}

RelationSystem make_preset(const PresetSpec& spec) {
  const std::string& f = spec.family;

  if (f == "zero") {
    check_known_params(spec, {});
    int d = dimension(spec, 2);
    return RelationSystem(CoeffTensor(d), {}, f, param_strings(spec, d));
  }
  if (f == "qccr" || f == "clifford") {
    int d = dimension(spec, 2);
    Scalar q(-1);
    if (f == "qccr") {
      check_known_params(spec, {"q"});
      q = param(spec, "q");
      require_real(q, "q");
    } else {
      check_known_params(spec, {});
    }
    return RelationSystem(qccr_tensor(d, q), {}, f, param_strings(spec, d));
  }
  if (f == "qij") {
    int d = dimension(spec, 2);
    std::vector<std::string> allowed;
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= d; ++j) allowed.push_back("q" + std::to_string(i) + std::to_string(j));
    check_known_params(spec, allowed);
    CoeffTensor t(d);
    for (int i = 1; i <= d; ++i)
      for (int j = i; j <= d; ++j) {
        const std::string key = "q" + std::to_string(i) + std::to_string(j);
        const std::string mirror = "q" + std::to_string(j) + std::to_string(i);
        std::optional<Scalar> q;
        if (spec.params.count(key)) q = spec.params.at(key);
        if (spec.params.count(mirror)) {
          Scalar m = spec.params.at(mirror).conj();
          if (q && *q != m) throw PreconditionError("qij: " + key + " and " + mirror + " are not conjugate");
          q = m;
        }
        Scalar v = q.value_or(Scalar(0));
        if (i == j) require_real(v, key);
        t.set(i, j, i, j, v);
        t.set(j, i, j, i, v.conj());
      }
    return RelationSystem(std::move(t), {}, f, param_strings(spec, d));
  }
  if (f == "tlw") {
    check_known_params(spec, {"q"});
    int d = dimension(spec, 2);
    Scalar q = param(spec, "q");
    require_real(q, "q");
    CoeffTensor t(d);
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= d; ++j) t.set(i, j, j, i, q);
    return RelationSystem(std::move(t), {}, f, param_strings(spec, d));
  }
  if (f == "twisted_ccr" || f == "twisted_car" || f == "mucar") {
    check_known_params(spec, {"mu"});
    int d = dimension(spec, 2);
    Scalar mu = param(spec, "mu");
    require_open_unit(mu, "mu");
    if (f == "twisted_ccr")
      return RelationSystem(twisted_tensor(d, mu, false), twisted_ccr_generators(d, mu), f,
                            param_strings(spec, d));
    auto gens = twisted_car_generators(d, mu);
    if (f == "mucar") {
      auto cubic = mucar_cubic_generators(d, mu);
      gens.insert(gens.end(), cubic.begin(), cubic.end());
    }
    return RelationSystem(twisted_tensor(d, mu, true), std::move(gens), f, param_strings(spec, d));
  }
  if (f == "snu2") {
    check_known_params(spec, {"nu"});
    int d = fixed_dimension(spec, 2);
    Scalar nu = param(spec, "nu");
    require_real(nu, "nu");
    if (nu.is_zero()) throw PreconditionError("snu2: nu must be nonzero");
    // g1 = alpha*, g2 = gamma*.
    CoeffTensor t(d);
    t.set(1, 1, 2, 2, -(nu * nu));
    t.set(2, 2, 1, 1, Scalar(-1));
    t.set(1, 2, 1, 2, nu);
    t.set(2, 1, 2, 1, nu);
    return RelationSystem(std::move(t), {}, f, param_strings(spec, d));
  }
  if (f == "degenerate") {
    check_known_params(spec, {});
    int d = dimension(spec, 2);
    CoeffTensor t(d);
    for (int i = 1; i <= d; ++i)
      for (int k = 1; k <= d; ++k) t.set(i, i, k, k, Scalar(-1));
    return RelationSystem(std::move(t), {}, f, param_strings(spec, d));
  }
  if (f == "usym") {
    check_known_params(spec, {"q", "lambda"});
    int d = dimension(spec, 2);
    Scalar q = param(spec, "q");
    Scalar lambda = param(spec, "lambda");
    require_real(q, "q");
    require_real(lambda, "lambda");
    CoeffTensor t(d);
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= d; ++j) t.add(i, j, i, j, q);
    for (int i = 1; i <= d; ++i)
      for (int k = 1; k <= d; ++k) t.add(i, i, k, k, -lambda);
    return RelationSystem(std::move(t), {}, f, param_strings(spec, d));
  }
  if (f == "aklt") {
    check_known_params(spec, {"lambda"});
    int d = fixed_dimension(spec, 3);
    Scalar lambda = param(spec, "lambda", Scalar(1));
    require_real(lambda, "lambda");
    // Sign of the delta_ij tail chosen so that ker(1+T) is the spin-0 plus
    // spin-1 subspace for every lambda != 0 (the opposite sign gives that
    // only at lambda = 2).
    CoeffTensor t(d);
    const Scalar half = Scalar::ratio(1, 2);
    for (int i = 1; i <= d; ++i)
      for (int k = 1; k <= d; ++k) t.add(i, i, k, k, (lambda - Scalar(2)) * half);
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= d; ++j) {
        t.add(i, j, i, j, lambda * half);
        t.add(i, j, j, i, -(lambda * Scalar::ratio(1, 3)));
      }
    auto ps = param_strings(spec, d);
    ps["lambda"] = lambda.to_string();
    return RelationSystem(std::move(t), {}, f, ps);
  }
  if (f == "bs_ce") {
    check_known_params(spec, {"tau"});
    int d = fixed_dimension(spec, 2);
    Scalar tau = param(spec, "tau");
    require_real(tau, "tau");
    CoeffTensor t(d);
    for (int i = 1; i <= d; ++i)
      for (int k = 1; k <= d; ++k) t.set(i, i, k, k, (i + k) % 2 == 0 ? tau : -tau);
    return RelationSystem(std::move(t), {}, f, param_strings(spec, d));
  }
  if (f == "bp_ce") {
    check_known_params(spec, {"lambda", "eps"});
    int d = fixed_dimension(spec, 2);
    Scalar lambda = param(spec, "lambda");
    Scalar eps = param(spec, "eps");
    require_real(lambda, "lambda");
    require_real(eps, "eps");
    CoeffTensor t(d);
    for (int i = 1; i <= d; ++i)
      for (int k = 1; k <= d; ++k) t.set(i, i, k, k, i == k ? lambda : eps);
    return RelationSystem(std::move(t), {}, f, param_strings(spec, d));
  }
  if (f == "e91") {
    check_known_params(spec, {"mu"});
    int d = fixed_dimension(spec, 2);
    Scalar mu = param(spec, "mu");
    require_real(mu, "mu");
    CoeffTensor t(d);
    t.set(1, 2, 1, 1, mu);
    t.set(2, 1, 1, 1, mu);
    return RelationSystem(std::move(t), {}, f, param_strings(spec, d));
  }
  throw PreconditionError("unknown preset family '" + f + "'");
}

std::vector<std::string> preset_families() {
  return {"zero", "qccr", "clifford", "qij", "tlw", "twisted_ccr", "twisted_car", "mucar",
          "snu2", "degenerate", "usym", "aklt", "bs_ce", "bp_ce", "e91"};
}

std::optional<std::vector<Scalar>> expected_t_spectrum(const PresetSpec& spec) {
  const std::string& f = spec.family;
  auto dedup = [](std::vector<Scalar> v) {
    std::vector<Scalar> out;
    for (auto& s : v)
      if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    return out;
  };
  if (f == "zero") return std::vector<Scalar>{Scalar(0)};
  if (f == "degenerate") return std::vector<Scalar>{Scalar(-1)};
  if (f == "qccr" || f == "clifford") {
    Scalar q = f == "qccr" ? param(spec, "q") : Scalar(-1);
    int d = dimension(spec, 2);
    return d == 1 ? std::vector<Scalar>{q} : dedup({q, -q});
  }
  if (f == "tlw") {
    Scalar q = param(spec, "q");
    int d = dimension(spec, 2);
    return d == 1 ? std::vector<Scalar>{q} : dedup({q * Scalar(d), Scalar(0)});
  }
  if (f == "twisted_ccr" || f == "twisted_car" || f == "mucar") {
    Scalar mu = param(spec, "mu");
    int d = dimension(spec, 2);
    if (d == 1) return std::vector<Scalar>{f == "twisted_ccr" ? mu * mu : Scalar(-1)};
    return dedup({mu * mu, Scalar(-1)});
  }
  if (f == "snu2") {
    Scalar nu = param(spec, "nu");
    return dedup({Scalar(0), -(Scalar(1) + nu * nu)});
  }
  if (f == "bs_ce") {
    Scalar tau = param(spec, "tau");
    return dedup({tau, -tau});
  }
  if (f == "bp_ce") return dedup({param(spec, "lambda"), param(spec, "eps")});
  return std::nullopt;
}

}  // namespace wick
