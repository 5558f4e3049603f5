#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wick/errors.hpp"
#include "wick/scalar.hpp"

namespace wick {

/// A generator a_i (Gen) or its adjoint a_i^dagger (Dag). Indices are 1-based.
class Letter {
 public:
  enum class Kind : std::uint8_t { Gen, Dag };

  constexpr Letter() = default;
  constexpr Letter(Kind kind, int index)
      : code_(static_cast<std::int16_t>(kind == Kind::Gen ? index : -index)) {}

  static constexpr Letter gen(int i) { return {Kind::Gen, i}; }
  static constexpr Letter dag(int i) { return {Kind::Dag, i}; }

  constexpr Kind kind() const { return code_ > 0 ? Kind::Gen : Kind::Dag; }
  constexpr bool is_gen() const { return code_ > 0; }
  constexpr bool is_dag() const { return code_ < 0; }
  constexpr int index() const { return code_ > 0 ? code_ : -code_; }
  constexpr Letter adjoint() const { return from_code(static_cast<std::int16_t>(-code_)); }

  friend constexpr bool operator==(Letter a, Letter b) { return a.code_ == b.code_; }
  /// Gen letters sort before Dag letters, then by index.
  friend constexpr bool operator<(Letter a, Letter b) { return a.key() < b.key(); }

 private:
  static constexpr Letter from_code(std::int16_t c) {
    Letter l;
    l.code_ = c;
    return l;
  }
  constexpr int key() const { return code_ > 0 ? code_ : 100000 - code_; }

  std::int16_t code_ = 1;
};

/// Monomial in the free *-algebra, letters in product order. Empty word = 1.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Word of Gen letters with the given indices, e.g. gens({2,1}) = a2 a1.
  static Word gens(std::initializer_list<int> indices);
  static Word gens(std::span<const int> indices);
  static Word dags(std::initializer_list<int> indices);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  /// #Gen - #Dag.
  int degree() const;
  std::size_t gen_count() const;
  std::size_t dag_count() const { return size() - gen_count(); }
  bool generator_only() const { return gen_count() == size(); }
  int max_index() const;

  Word adjoint() const;
  Word operator*(const Word& o) const;
  Word slice(std::size_t from, std::size_t count) const;

  /// "a1 a2*"; the empty word prints as "1".
  std::string to_string() const;

  /// Shortlex order: shorter words first.
  friend bool operator<(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }

 private:
  std::vector<Letter> letters_;
};

/// Finite linear combination of words with exact coefficients. Zero
/// coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Word, Scalar>;

  Polynomial() = default;
  Polynomial(const Scalar& c);  // NOLINT(google-explicit-constructor)
  Polynomial(const Word& w, const Scalar& c = Scalar(1));  // NOLINT

  static Polynomial one() { return Polynomial(Scalar(1)); }
  static Polynomial gen(int i) { return Polynomial(Word{Letter::gen(i)}); }
  static Polynomial dag(int i) { return Polynomial(Word{Letter::dag(i)}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const Word& w) const;

  void add_term(const Word& w, const Scalar& c);

  bool generator_only() const;
  int max_index() const;
  std::size_t max_length() const;

  Polynomial adjoint() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Scalar& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply(a, b); }
  Polynomial operator-() const { return *this * Scalar(-1); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  friend Polynomial multiply(const Polynomial& p, const Polynomial& q);
  Terms terms_;
};

Polynomial adjoint(const Polynomial& p);
Polynomial multiply(const Polynomial& p, const Polynomial& q);
int degree(const Word& w);

/// Structure constants T_{ij}^{kl} of the relations
///   a_i^dagger a_j = delta_ij 1 + sum_{kl} T_{ij}^{kl} a_l a_k^dagger.
class CoeffTensor {
 public:
  struct Entry {
    int k;
    int l;
    Scalar value;
  };
  using Key = std::array<int, 4>;  // (i, j, k, l)

  explicit CoeffTensor(int d);

  int d() const { return d_; }

  /// Stores T_{ij}^{kl}; a zero value erases the entry.
  void set(int i, int j, int k, int l, const Scalar& value);
  void add(int i, int j, int k, int l, const Scalar& value);
  Scalar get(int i, int j, int k, int l) const;

  /// Nonzero entries T_{ij}^{kl} for fixed (i, j).
  std::span<const Entry> row(int i, int j) const { return rows_[index(i, j)]; }
  const std::map<Key, Scalar>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  friend bool operator==(const CoeffTensor& a, const CoeffTensor& b) {
    return a.d_ == b.d_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t index(int i, int j) const;
  void rebuild_row(int i, int j);

  int d_;
  std::map<Key, Scalar> entries_;
  std::vector<std::vector<Entry>> rows_;
};

/// T_{ji}^{lk} == conj(T_{ij}^{kl}) for all indices.
bool hermiticity_check(const CoeffTensor& t);

/// A coefficient tensor together with optional generator-only ideal
/// generators and descriptive metadata.
struct RelationSystem {
  CoeffTensor tensor;
  std::vector<Polynomial> ideal_generators;
  std::string name;
  std::map<std::string, std::string> params;

  explicit RelationSystem(CoeffTensor t, std::vector<Polynomial> gens = {}, std::string nm = {},
                          std::map<std::string, std::string> ps = {});

  int d() const { return tensor.d(); }
};

/// Throws IndexError if any index of p exceeds d.
void check_indices(const Polynomial& p, int d);

}  // namespace wick
