#pragma once

#include <span>
#include <string>
#include <vector>

#include "wknots/rational.hpp"

namespace wk {

/// x_gen^exp with gen in 1..n and exp = +-1.
struct Letter {
  int gen = 1;
  int exp = 1;

  Letter inverse() const { return {gen, -exp}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A freely reduced word in F_n; the reduced word is the normal form of the group element.
class FreeWord {
 public:
  FreeWord() = default;

  static FreeWord generator(int gen, int exp = 1) { return FreeWord(std::vector<Letter>{{gen, exp}}); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  /// Largest generator index used, 0 for the identity.
  int max_generator() const;

  FreeWord inverse() const;
  FreeWord operator*(const FreeWord& o) const;
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

  /// Text form "x1 x2^-1 x1"; the identity prints as "1".
  std::string str() const;

 private:
  friend FreeWord word_reduce(std::span<const Letter> raw, int rank);
  explicit FreeWord(std::vector<Letter> reduced) : letters_(std::move(reduced)) {}
  std::vector<Letter> letters_;
};

/// Free reduction; throws on generator indices outside 1..rank or exponents other than +-1.
FreeWord word_reduce(std::span<const Letter> raw, int rank);
/// Parses "x1 x2^-1 x3^2" (powers expand); "1" or empty is the identity.
FreeWord parse_word(const std::string& text, int rank);

/// An endomorphism of F_n given by the images of the generators.
class FreeAut {
 public:
  FreeAut() = default;
  FreeAut(int rank, std::vector<FreeWord> images);
  static FreeAut identity(int rank);

  int rank() const { return rank_; }
  const FreeWord& image(int gen) const { return images_.at(gen - 1); }
  const std::vector<FreeWord>& images() const { return images_; }
  friend bool operator==(const FreeAut&, const FreeAut&) = default;

  std::string str() const;

 private:
  int rank_ = 0;
  std::vector<FreeWord> images_;
};

/// Substitutes generator images into w and reduces.
FreeWord aut_apply(const FreeAut& a, const FreeWord& w);
/// "a then b": aut_apply(aut_compose(a, b), w) == aut_apply(b, aut_apply(a, w)).
FreeAut aut_compose(const FreeAut& a, const FreeAut& b);
/// Sends x_k to the identity and renumbers x_j -> x_{j-1} for j > k (a map F_n -> F_{n-1}).
FreeWord kill_generator(const FreeWord& w, int k);

struct BasisConjugatingResult {
  bool conjugating = false;
  /// permutation[i-1] = pi(i), 1-based values.
  std::vector<int> permutation;
  /// image(x_i) = conjugators[i-1] * x_pi(i) * conjugators[i-1]^-1.
  std::vector<FreeWord> conjugators;
};

BasisConjugatingResult aut_is_basis_conjugating(const FreeAut& a);

}  // namespace wk
