#pragma once

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "wknots/freegroup.hpp"

namespace wk {

enum class BraidGen {
  Sigma,     // sigma_i, text "s<i>"
  SigmaInv,  // sigma_i^-1, text "S<i>"
  Virtual,   // s_i, text "v<i>"
  Flip,      // rho_i (ring flip), text "f<i>"
};

struct BraidLetter {
  BraidGen gen = BraidGen::Sigma;
  int index = 1;

  BraidLetter inverse() const;
  bool is_crossing() const { return gen == BraidGen::Sigma || gen == BraidGen::SigmaInv; }
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

/// A word in the generators of vB_n / wB_n, optionally extended by flips.
struct BraidWord {
  int n = 1;
  bool extended = false;
  std::vector<BraidLetter> letters;

  BraidWord() = default;
  BraidWord(int strands, std::vector<BraidLetter> ls, bool ext = false);

  /// Throws unless every index is in range and flips appear only when extended.
  void validate() const;
  BraidWord operator*(const BraidWord& o) const;
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Parses the braid text format: a header line `n=<k>` optionally followed by
/// `extended`, then whitespace separated tokens s<i>, S<i>, v<i>, f<i>.
/// `#` starts a comment running to the end of the line.
BraidWord parse_braid(std::string_view text);
/// Inverse of parse_braid (header line, then the tokens on one line).
std::string format_braid(const BraidWord& b);
/// Tokens only, e.g. "s1 v2 S1"; the empty word prints as "e".
std::string braid_tokens(const BraidWord& b);

/// perm[p-1] is the final position of the strand that starts at position p.
std::vector<int> braid_skeleton(const BraidWord& b);

/// The automorphism attached to a single generator on n strands.
FreeAut generator_action(const BraidLetter& l, int n);
/// Psi(b): letters act left to right, Psi(b1 b2) = aut_compose(Psi(b1), Psi(b2)).
FreeAut braid_action(const BraidWord& b);

enum class BraidGroup { V, W };

/// Decides equality in wB_n (or its flip extension) by comparing skeletons and
/// Psi. Throws for BraidGroup::V, where Psi is not faithful.
bool braid_equal(const BraidWord& a, const BraidWord& b, BraidGroup group = BraidGroup::W);
/// Sound one-sided test valid in vB_n: true means the braids certainly differ.
/// False is inconclusive.
bool braid_distinguished(const BraidWord& a, const BraidWord& b);

BraidWord braid_invert(const BraidWord& b);
/// Removes the strand starting at position k; the result has n - 1 strands.
BraidWord braid_delete_strand(const BraidWord& b, int k);
/// Doubles the strand starting at position k into two parallel strands.
BraidWord braid_clone_strand(const BraidWord& b, int k);

struct BraidRelation {
  std::string name;
  BraidWord lhs;
  BraidWord rhs;
};

/// Every instance of the relation templates on n strands.
std::vector<BraidRelation> relation_table(int n, bool extended = false);
/// The raw template text the table is built from.
std::string_view relation_template_text();

/// Random word: crossings, virtual crossings and (when extended) flips.
BraidWord random_braid(std::mt19937_64& rng, int n, int length, bool with_virtual = true, bool extended = false);

}  // namespace wk
