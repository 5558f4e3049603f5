#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "wick/algebra.hpp"
#include "wick/linalg.hpp"

namespace wick {

/// No Dag letter stands to the left of a Gen letter.
bool is_normal(const Word& w);

struct RewriteOptions {
  enum class Strategy { Leftmost, Rightmost, Random };
  Strategy strategy = Strategy::Leftmost;
  std::uint64_t seed = 0;  // used by Strategy::Random
  std::size_t term_cap = 1'000'000;
};

/// Wick-ordered normal form of p: every a_i^dagger a_j is replaced by
/// delta_ij + sum T_{ij}^{kl} a_l a_k^dagger until no such pair is left.
/// Throws IndexError for indices beyond T.d() and ResourceCapError when the
/// number of pending terms exceeds options.term_cap.
Polynomial wick_order(const Polynomial& p, const CoeffTensor& t, const RewriteOptions& options = {});

/// wick_order(p - q) == 0.
bool verify_identity(const Polynomial& p, const Polynomial& q, const CoeffTensor& t,
                     const RewriteOptions& options = {});

/// Degree-truncated two-sided ideal of the generator-only free algebra:
/// span{u g v : g in gens, u, v generator words, |u g v| <= max_deg}.
///
/// Spans are built lazily per word length (one shared span over all lengths
/// when some generator is inhomogeneous) and reused between queries.
class IdealSpan {
 public:
  IdealSpan(std::vector<Polynomial> gens, int d, std::size_t max_deg);

  /// Throws PreconditionError if p has Dag letters or words longer than
  /// max_deg.
  bool contains(const Polynomial& p);

  int d() const { return d_; }
  std::size_t max_deg() const { return max_deg_; }

 private:
  EchelonBasis& span_for(std::size_t length);
  std::size_t word_index(const Word& w) const;

  std::vector<Polynomial> gens_;
  int d_;
  std::size_t max_deg_;
  bool homogeneous_ = true;
  std::map<std::size_t, EchelonBasis> spans_;  // keyed by length; single key 0 if inhomogeneous
};

/// One-shot form of IdealSpan::contains. d is taken from the largest index
/// occurring in p and gens.
bool ideal_membership(const Polynomial& p, const std::vector<Polynomial>& gens, std::size_t max_deg);

}  // namespace wick
