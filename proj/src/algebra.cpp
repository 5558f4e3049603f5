#include "wick/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace wick {

// ---------------------------------------------------------------- Word

Word Word::gens(std::initializer_list<int> indices) {
  return gens(std::span<const int>(indices.begin(), indices.size()));
}

Word Word::gens(std::span<const int> indices) {
  std::vector<Letter> out;
  out.reserve(indices.size());
  for (int i : indices) out.push_back(Letter::gen(i));
  return Word(std::move(out));
}

Word Word::dags(std::initializer_list<int> indices) {
  std::vector<Letter> out;
  for (int i : indices) out.push_back(Letter::dag(i));
  return Word(std::move(out));
}

int Word::degree() const {
  int deg = 0;
  for (Letter l : letters_) deg += l.is_gen() ? 1 : -1;
  return deg;
}

std::size_t Word::gen_count() const {
  return static_cast<std::size_t>(
      std::count_if(letters_.begin(), letters_.end(), [](Letter l) { return l.is_gen(); }));
}

int Word::max_index() const {
  int m = 0;
  for (Letter l : letters_) m = std::max(m, l.index());
  return m;
}

Word Word::adjoint() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (Letter& l : out) l = l.adjoint();
  return Word(std::move(out));
}

Word Word::operator*(const Word& o) const {
  std::vector<Letter> out;
  out.reserve(size() + o.size());
  out.insert(out.end(), letters_.begin(), letters_.end());
  out.insert(out.end(), o.letters_.begin(), o.letters_.end());
  return Word(std::move(out));
}

Word Word::slice(std::size_t from, std::size_t count) const {
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(from),
                                  letters_.begin() + static_cast<std::ptrdiff_t>(from + count)));
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += 'a';
    out += std::to_string(letters_[i].index());
    if (letters_[i].is_dag()) out += '*';
  }
  return out;
}

bool operator<(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.letters_ < b.letters_;
}

int degree(const Word& w) { return w.degree(); }

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Word{}, c);
}

Polynomial::Polynomial(const Word& w, const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(w, c);
}

Scalar Polynomial::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Polynomial::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Polynomial::generator_only() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.generator_only(); });
}

int Polynomial::max_index() const {
  int m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, w.max_index());
  return m;
}

std::size_t Polynomial::max_length() const {
  std::size_t m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, w.size());
  return m;
}

Polynomial Polynomial::adjoint() const {
  Polynomial out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w.adjoint(), c.conj());
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

std::string Polynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c << "·" << w.to_string();
  }
  if (first) os << "0";
  return os.str();
}

Polynomial adjoint(const Polynomial& p) { return p.adjoint(); }

Polynomial multiply(const Polynomial& p, const Polynomial& q) {
  Polynomial out;
  for (const auto& [wp, cp] : p.terms_)
    for (const auto& [wq, cq] : q.terms_) out.add_term(wp * wq, cp * cq);
  return out;
}

void check_indices(const Polynomial& p, int d) {
  for (const auto& [w, c] : p.terms())
    for (Letter l : w)
      if (l.index() < 1 || l.index() > d)
        throw IndexError("generator index " + std::to_string(l.index()) + " outside 1.." +
                         std::to_string(d));
}

// ---------------------------------------------------------------- CoeffTensor

CoeffTensor::CoeffTensor(int d) : d_(d) {
  if (d < 1) throw PreconditionError("tensor dimension must be positive");
  rows_.resize(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
}

std::size_t CoeffTensor::index(int i, int j) const {
  if (i < 1 || i > d_ || j < 1 || j > d_)
    throw IndexError("tensor index outside 1.." + std::to_string(d_));
  return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(d_) +
         static_cast<std::size_t>(j - 1);
}

void CoeffTensor::rebuild_row(int i, int j) {
  auto& row = rows_[index(i, j)];
  row.clear();
  for (auto it = entries_.lower_bound({i, j, 0, 0});
       it != entries_.end() && it->first[0] == i && it->first[1] == j; ++it)
    row.push_back({it->first[2], it->first[3], it->second});
}

void CoeffTensor::set(int i, int j, int k, int l, const Scalar& value) {
  index(i, j);
  index(k, l);
  if (value.is_zero())
    entries_.erase({i, j, k, l});
  else
    entries_[{i, j, k, l}] = value;
  rebuild_row(i, j);
}

void CoeffTensor::add(int i, int j, int k, int l, const Scalar& value) {
  set(i, j, k, l, get(i, j, k, l) + value);
}

Scalar CoeffTensor::get(int i, int j, int k, int l) const {
  auto it = entries_.find({i, j, k, l});
  return it == entries_.end() ? Scalar(0) : it->second;
}

bool hermiticity_check(const CoeffTensor& t) {
  for (const auto& [key, v] : t.entries()) {
    auto [i, j, k, l] = key;
    if (t.get(j, i, l, k) != v.conj()) return false;
  }
  return true;
}

RelationSystem::RelationSystem(CoeffTensor t, std::vector<Polynomial> gens, std::string nm,
                               std::map<std::string, std::string> ps)
    : tensor(std::move(t)), ideal_generators(std::move(gens)), name(std::move(nm)), params(std::move(ps)) {
  for (const auto& g : ideal_generators) {
    if (!g.generator_only())
      throw PreconditionError("ideal generators must contain generator letters only");
    check_indices(g, tensor.d());
  }
}

}  // namespace wick
