#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hessgkm/combinat/permutation.hpp"
#include "hessgkm/combinat/skeletal.hpp"

namespace hessgkm {

/// Exponent vector of the monomial prod t_i^{a_i} on T = (C*)^n.
struct Character {
  std::vector<std::int64_t> exponents;

  static Character zero(int n);
  /// e_i (1-based).
  static Character unit(int n, int i);
  /// The ratio t_{X(i)} / t_i; with the convention t_0 = 1 when X(i) = 0.
  static Character ratio(int n, int numerator_index, int denominator_index);

  int size() const { return static_cast<int>(exponents.size()); }
  bool is_zero() const;
  /// Evaluate at a rational point of T.
  mpq_class evaluate(const std::vector<mpq_class>& t) const;
  std::string to_string() const;

  friend Character operator+(const Character& a, const Character& b);
  friend Character operator-(const Character& a, const Character& b);
  friend Character operator-(const Character& a);
  friend bool operator==(const Character&, const Character&) = default;
  friend auto operator<=>(const Character&, const Character&) = default;
};

/// A one-parameter subgroup t -> diag(t^{a_1}, .., t^{a_n}).
struct Cocharacter {
  std::vector<std::int64_t> exponents;

  /// S = (1, 2, .., n).
  static Cocharacter regular(int n);
  /// w S w^{-1} = (w(1), .., w(n)).
  static Cocharacter conjugated_regular(const Permutation& w);

  int size() const { return static_cast<int>(exponents.size()); }
  friend bool operator==(const Cocharacter&, const Cocharacter&) = default;
};

std::int64_t pairing(const Character& chi, const Cocharacter& lambda);

/// A connected subtorus of T, stored as the saturated lattice of characters
/// that are trivial on it. The basis is kept in reduced row Hermite normal
/// form, so two subtori are equal exactly when their bases are equal.
class Subtorus {
 public:
  /// The full torus T of rank n.
  Subtorus() = default;
  explicit Subtorus(int n) : n_(n) {}

  static Subtorus full(int n) { return Subtorus(n); }

  int ambient_rank() const { return n_; }
  int codimension() const { return static_cast<int>(basis_.size()); }
  int dimension() const { return n_ - codimension(); }
  bool is_full() const { return basis_.empty(); }
  const std::vector<Character>& basis() const { return basis_; }

  /// chi is trivial on this subtorus.
  bool kills(const Character& chi) const;
  /// this ⊆ other, i.e. every constraint of other is implied here.
  bool is_subtorus_of(const Subtorus& other) const;
  /// Intersection with another subtorus.
  Subtorus meet(const Subtorus& other) const;

  /// Integer cocharacters spanning the subtorus (a kernel basis).
  std::vector<Cocharacter> cocharacter_basis() const;

  /// A rational point: each kernel cocharacter is evaluated at a positive
  /// rational base drawn from a fixed pool.
  std::vector<mpq_class> sample_point(std::mt19937_64& rng) const;

  std::string to_string() const;

  friend bool operator==(const Subtorus&, const Subtorus&) = default;

 private:
  friend Subtorus subtorus_from_characters(const std::vector<Character>& chars, int n);
  int n_ = 0;
  std::vector<Character> basis_;
};

/// The subtorus cut out by `chars`, after saturating their lattice.
/// Throws InvalidArgument on a length mismatch.
Subtorus subtorus_from_characters(const std::vector<Character>& chars, int n);

struct CanonicalSubtorus {
  Subtorus torus;
  /// Set when X has no nonzero rows; the torus is then all of T.
  bool degenerate = false;
};

/// The subtorus on which all ratios t_{X(i)}/t_i agree; codimension is
/// (number of nonzero rows of X) - 1.
CanonicalSubtorus canonical_k(const SkeletalNilpotent& x);

/// Every basis constraint pairs to zero with lambda.
bool cochar_in_subtorus(const Cocharacter& lambda, const Subtorus& k);

/// No root e_i - e_j is trivial on k, so k-fixed flags are T-fixed flags.
bool is_regular(const Subtorus& k);

}  // namespace hessgkm
