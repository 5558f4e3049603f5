#include "wick/rewrite.hpp"

#include <algorithm>
#include <random>

namespace wick {

bool is_normal(const Word& w) {
  bool seen_dag = false;
  for (Letter l : w) {
    if (l.is_dag())
      seen_dag = true;
    else if (seen_dag)
      return false;
  }
  return true;
}

namespace {

/// Positions p with w[p] = Dag and w[p+1] = Gen.
void collect_redexes(const Word& w, std::vector<std::size_t>& out) {
  out.clear();
  for (std::size_t p = 0; p + 1 < w.size(); ++p)
    if (w[p].is_dag() && w[p + 1].is_gen()) out.push_back(p);
}

}  // namespace

Polynomial wick_order(const Polynomial& p, const CoeffTensor& t, const RewriteOptions& options) {
  check_indices(p, t.d());
  std::map<Word, Scalar> pending(p.terms().begin(), p.terms().end());
  Polynomial result;
  std::mt19937_64 rng(options.seed);
  std::vector<std::size_t> redexes;
  std::vector<Letter> buf;

  auto push = [&](std::vector<Letter> letters, const Scalar& c) {
    auto [it, inserted] = pending.try_emplace(Word(std::move(letters)), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) pending.erase(it);
    }
  };

  while (!pending.empty()) {
    if (pending.size() > options.term_cap)
      throw ResourceCapError("wick_order: more than " + std::to_string(options.term_cap) +
                             " pending terms");
    auto node = pending.extract(std::prev(pending.end()));
    const Word& w = node.key();
    const Scalar& c = node.mapped();
    collect_redexes(w, redexes);
    if (redexes.empty()) {
      result.add_term(w, c);
      continue;
    }
    std::size_t pos = redexes.front();
    switch (options.strategy) {
      case RewriteOptions::Strategy::Leftmost:
        break;
      case RewriteOptions::Strategy::Rightmost:
        pos = redexes.back();
        break;
      case RewriteOptions::Strategy::Random:
        pos = redexes[std::uniform_int_distribution<std::size_t>(0, redexes.size() - 1)(rng)];
        break;
    }
    const int i = w[pos].index();
    const int j = w[pos + 1].index();
    const auto& letters = w.letters();
    if (i == j) {
      buf.assign(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(pos));
      buf.insert(buf.end(), letters.begin() + static_cast<std::ptrdiff_t>(pos + 2), letters.end());
      push(buf, c);
    }
    for (const auto& e : t.row(i, j)) {
      buf = letters;
      buf[pos] = Letter::gen(e.l);
      buf[pos + 1] = Letter::dag(e.k);
      push(buf, c * e.value);
    }
  }
  return result;
}

bool verify_identity(const Polynomial& p, const Polynomial& q, const CoeffTensor& t,
                     const RewriteOptions& options) {
  return wick_order(p - q, t, options).is_zero();
}

// ---------------------------------------------------------------- IdealSpan

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

std::size_t index_of(const Word& w, std::size_t d) {
  std::size_t idx = 0;
  for (Letter l : w) idx = idx * d + static_cast<std::size_t>(l.index() - 1);
  return idx;
}

void require_generator_only(const Polynomial& p, const char* what) {
  if (!p.generator_only()) throw PreconditionError(std::string(what) + " must contain generator letters only");
}

bool is_homogeneous(const Polynomial& p) {
  if (p.is_zero()) return true;
  const std::size_t len = p.terms().begin()->first.size();
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [&](const auto& t) { return t.first.size() == len; });
}

}  // namespace

IdealSpan::IdealSpan(std::vector<Polynomial> gens, int d, std::size_t max_deg)
    : gens_(std::move(gens)), d_(d), max_deg_(max_deg) {
  if (d < 1) throw PreconditionError("IdealSpan: d must be positive");
  for (const auto& g : gens_) {
    require_generator_only(g, "ideal generators");
    check_indices(g, d);
    if (!is_homogeneous(g)) homogeneous_ = false;
  }
  std::erase_if(gens_, [](const Polynomial& g) { return g.is_zero(); });
}

std::size_t IdealSpan::word_index(const Word& w) const {
  const auto d = static_cast<std::size_t>(d_);
  if (homogeneous_) return index_of(w, d);
  std::size_t offset = 0;
  for (std::size_t l = 0; l < w.size(); ++l) offset += ipow(d, l);
  return offset + index_of(w, d);
}

EchelonBasis& IdealSpan::span_for(std::size_t length) {
  const std::size_t key = homogeneous_ ? length : 0;
  auto it = spans_.find(key);
  if (it != spans_.end()) return it->second;

  const auto d = static_cast<std::size_t>(d_);
  std::size_t dim = 0;
  if (homogeneous_) {
    dim = ipow(d, length);
  } else {
    for (std::size_t l = 0; l <= max_deg_; ++l) dim += ipow(d, l);
  }
  EchelonBasis basis(dim);
  const std::size_t cap = homogeneous_ ? length : max_deg_;

  std::vector<int> u_idx;
  std::vector<int> v_idx;
  for (const auto& g : gens_) {
    const std::size_t glen = g.max_length();
    if (glen > cap) continue;
    for (std::size_t ulen = 0; ulen + glen <= cap; ++ulen) {
      for (std::size_t vlen = 0; ulen + glen + vlen <= cap; ++vlen) {
        if (homogeneous_ && ulen + glen + vlen != length) continue;
        const std::size_t nu = ipow(d, ulen);
        const std::size_t nv = ipow(d, vlen);
        for (std::size_t u = 0; u < nu; ++u) {
          for (std::size_t v = 0; v < nv; ++v) {
            std::vector<Scalar> vec(dim);
            for (const auto& [w, c] : g.terms()) {
              // Index of (u w v) in the chosen coordinates.
              std::size_t idx = u;
              idx = idx * ipow(d, w.size()) + index_of(w, d);
              idx = idx * nv + v;
              if (!homogeneous_) {
                const std::size_t len = ulen + w.size() + vlen;
                for (std::size_t l = 0; l < len; ++l) idx += ipow(d, l);
              }
              vec[idx] += c;
            }
            basis.insert(std::move(vec));
            if (basis.rank() == dim) break;
          }
          if (basis.rank() == dim) break;
        }
      }
    }
  }
  return spans_.emplace(key, std::move(basis)).first->second;
}

bool IdealSpan::contains(const Polynomial& p) {
  require_generator_only(p, "ideal_membership input");
  check_indices(p, d_);
  if (p.max_length() > max_deg_)
    throw PreconditionError("ideal_membership: polynomial longer than max_deg");
  if (p.is_zero()) return true;

  std::map<std::size_t, Polynomial> parts;
  if (homogeneous_) {
    for (const auto& [w, c] : p.terms()) parts[w.size()].add_term(w, c);
  } else {
    parts[0] = p;
  }
  for (const auto& [len, part] : parts) {
    EchelonBasis& basis = span_for(len);
    std::vector<Scalar> vec(basis.dim());
    for (const auto& [w, c] : part.terms()) vec[word_index(w)] += c;
    if (!basis.contains(std::move(vec))) return false;
  }
  return true;
}

bool ideal_membership(const Polynomial& p, const std::vector<Polynomial>& gens, std::size_t max_deg) {
  int d = std::max(1, p.max_index());
  for (const auto& g : gens) d = std::max(d, g.max_index());
  IdealSpan span(gens, d, max_deg);
  return span.contains(p);
}

}  // namespace wick
