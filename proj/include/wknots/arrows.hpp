#pragma once

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "wknots/echelon.hpp"
#include "wknots/rational.hpp"

namespace wk {

enum class SkeletonKind { Long, Strands };

struct Skeleton {
  SkeletonKind kind = SkeletonKind::Long;
  int strands = 1;

  static Skeleton long_strand() { return {SkeletonKind::Long, 1}; }
  static Skeleton braid(int n);

  std::string str() const;
  friend auto operator<=>(const Skeleton&, const Skeleton&) = default;
};

/// On the long strand `tail` and `head` are slot positions along the line. On
/// strands(n) they are strand labels 1..n and the arrow's height is its index in
/// the diagram's word.
struct Arrow {
  int tail = 0;
  int head = 0;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

/// A pure arrow diagram in canonical form.
///
/// Long strand: endpoints relabeled to 1..2m in order, arrows sorted by tail.
/// strands(n): a horizontal diagram stored as a word of arrows; arrows with
/// disjoint strand pairs commute, and the word is the lexicographically least
/// representative of its commutation class.
class ArrowDiagram {
 public:
  ArrowDiagram() = default;
  /// Canonicalizes. Long-strand endpoints may be any distinct integers.
  ArrowDiagram(Skeleton skeleton, std::vector<Arrow> arrows);

  const Skeleton& skeleton() const { return skeleton_; }
  int degree() const { return static_cast<int>(arrows_.size()); }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  /// Long strand: "[1>3,2>4]"; strands: "a(1,3) a(2,1)", empty word "1".
  std::string str() const;

  friend auto operator<=>(const ArrowDiagram&, const ArrowDiagram&) = default;

 private:
  Skeleton skeleton_;
  std::vector<Arrow> arrows_;
};

/// Stacking: every endpoint of `a` precedes every endpoint of `b` on its strand.
ArrowDiagram concatenate(const ArrowDiagram& a, const ArrowDiagram& b);

/// A homogeneous rational combination of arrow diagrams.
class ArrowVector {
 public:
  ArrowVector() = default;
  ArrowVector(Skeleton skeleton, int degree) : skeleton_(skeleton), degree_(degree) {}
  static ArrowVector single(const ArrowDiagram& d, const Rational& c = 1);

  const Skeleton& skeleton() const { return skeleton_; }
  int degree() const { return degree_; }
  const std::map<ArrowDiagram, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const ArrowDiagram& d) const;

  void add(const ArrowDiagram& d, const Rational& c);
  ArrowVector& operator+=(const ArrowVector& o);
  ArrowVector& operator-=(const ArrowVector& o);
  ArrowVector& operator*=(const Rational& c);
  friend ArrowVector operator+(ArrowVector a, const ArrowVector& b) { return a += b; }
  friend ArrowVector operator-(ArrowVector a, const ArrowVector& b) { return a -= b; }
  friend ArrowVector operator*(ArrowVector a, const Rational& c) { return a *= c; }
  friend bool operator==(const ArrowVector& a, const ArrowVector& b) = default;

  std::string str() const;

 private:
  void check_compatible(const ArrowDiagram& d) const;
  Skeleton skeleton_;
  int degree_ = 0;
  std::map<ArrowDiagram, Rational> terms_;
};

/// Bilinear extension of concatenate.
ArrowVector operator*(const ArrowVector& a, const ArrowVector& b);

/// strands(n): relabels strand p as perm[p-1].
ArrowDiagram relabel_strands(const ArrowDiagram& d, const std::vector<int>& perm);
ArrowVector relabel_strands(const ArrowVector& v, const std::vector<int>& perm);
/// strands(n): drops every diagram with an endpoint on strand k and renumbers
/// the strands above k; the result lives on strands(n-1).
ArrowVector delete_strand(const ArrowVector& v, int k);

/// All canonical diagrams of degree m, sorted. Long strand: (2m)!/m! of them.
std::vector<ArrowDiagram> enumerate_diagrams(Skeleton skeleton, int m);
/// Closed-form count, independent of the enumeration. For strands(n) this is the
/// number of commutation classes of words of length m.
std::size_t diagram_count(Skeleton skeleton, int m);

enum class Relation { SixT, TC, FourT, FI, RI, CC };

/// A set of relation ids; ordering is irrelevant.
class RelationSet {
 public:
  RelationSet() = default;
  RelationSet(std::initializer_list<Relation> rs);
  bool contains(Relation r) const { return bits_ >> static_cast<int>(r) & 1u; }
  RelationSet with(Relation r) const;
  bool empty() const { return bits_ == 0; }
  /// Comma-separated lower-case ids in a fixed order, e.g. "tc,4t". Empty set: "none".
  std::string str() const;
  friend auto operator<=>(const RelationSet&, const RelationSet&) = default;

 private:
  unsigned bits_ = 0;
};

std::string relation_name(Relation r);
/// Accepts "6t", "tc", "4t", "fi", "ri", "cc" in any case, comma separated;
/// "" and "none" give the empty set. Unknown ids throw Error.
RelationSet parse_relation_set(std::string_view text);

struct TemplateLetter {
  char kind = 'a';  // 'a' arrow, 'R' or 'L' isolated arrow
  int from = 0;     // segment indices, 0-based
  int to = 0;
  friend bool operator==(const TemplateLetter&, const TemplateLetter&) = default;
};

struct RelatorTemplate {
  Relation relation = Relation::TC;
  int segments = 0;
  int degree = 0;
  std::vector<std::pair<Rational, std::vector<TemplateLetter>>> terms;
};

std::vector<RelatorTemplate> parse_relator_templates(std::string_view text);
/// The templates shipped in data/arrow_relators.txt.
const std::vector<RelatorTemplate>& relator_templates();

/// Every template of every relation in `rels`, instantiated in every context of
/// total degree m. FI and RI only exist on the long strand.
std::vector<ArrowVector> generate_relations(Skeleton skeleton, int m, RelationSet rels);

/// The quotient of the degree-m diagram space by the span of the generated
/// relators. Two-term relators are merged by union-find before the remaining
/// ones are row reduced. The basis consists of diagram classes.
class QuotientSpace {
 public:
  QuotientSpace(Skeleton skeleton, int m, RelationSet rels);

  const Skeleton& skeleton() const { return skeleton_; }
  int degree() const { return degree_; }
  RelationSet relations() const { return relations_; }
  std::size_t dimension() const { return basis_.size(); }
  /// One representative diagram per coordinate.
  const std::vector<ArrowDiagram>& basis() const { return basis_; }
  std::size_t diagram_count() const { return diagrams_.size(); }
  std::size_t relator_count() const { return relator_count_; }

  std::vector<Rational> project(const ArrowDiagram& d) const;
  std::vector<Rational> project(const ArrowVector& v) const;
  /// The combination of basis diagrams with the given coordinates.
  ArrowVector lift(const std::vector<Rational>& coords) const;

 private:
  std::size_t index_of(const ArrowDiagram& d) const;
  void require(const Skeleton& s, int degree) const;

  Skeleton skeleton_;
  int degree_;
  RelationSet relations_;
  std::vector<ArrowDiagram> diagrams_;
  std::map<ArrowDiagram, std::size_t> index_;
  std::size_t relator_count_ = 0;
  // Diagram i projects to factor_[i] * image_[class_[i]].
  std::vector<std::size_t> class_;
  std::vector<Rational> factor_;
  std::vector<SparseVec> image_;
  std::vector<ArrowDiagram> basis_;
};

/// Cached, shared construction.
std::shared_ptr<const QuotientSpace> quotient(Skeleton skeleton, int m, RelationSet rels);

}  // namespace wk
