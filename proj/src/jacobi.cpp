#include "wknots/jacobi.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace wk {

void TrivalentDiagram::validate() const {
  std::map<int, std::pair<int, int>> uses;  // edge -> (starts, ends)
  for (const auto& e : skeleton) (e.head ? uses[e.edge].second : uses[e.edge].first)++;
  for (const auto& v : vertices) {
    uses[v.in1].second++;
    uses[v.in2].second++;
    uses[v.out].first++;
  }
  for (const auto& [edge, u] : uses)
    if (u.first != 1 || u.second != 1)
      throw Error("edge " + std::to_string(edge) + " must have exactly one start and one end");
  if ((skeleton.size() + vertices.size()) % 2) throw Error("trivalent diagram has odd endpoint count");
}

namespace {

using Term = std::pair<Rational, TrivalentDiagram>;

ArrowDiagram to_arrow_diagram(const TrivalentDiagram& d) {
  std::map<int, Arrow> arrows;
  for (std::size_t p = 0; p < d.skeleton.size(); ++p) {
    auto& a = arrows[d.skeleton[p].edge];
    (d.skeleton[p].head ? a.head : a.tail) = static_cast<int>(p) + 1;
  }
  std::vector<Arrow> out;
  for (const auto& [e, a] : arrows) out.push_back(a);
  return ArrowDiagram(Skeleton::long_strand(), std::move(out));
}

std::size_t find_end(const TrivalentDiagram& d, int edge, bool head) {
  for (std::size_t p = 0; p < d.skeleton.size(); ++p)
    if (d.skeleton[p].edge == edge && d.skeleton[p].head == head) return p;
  return d.skeleton.size();
}

// Output of vertex v lands on the skeleton: [in1, in2] = in1 in2 - in2 in1.
void apply_stu_head(const TrivalentDiagram& d, std::size_t v, const Rational& c, std::vector<Term>& out) {
  const auto vert = d.vertices[v];
  const std::size_t p = find_end(d, vert.out, true);
  for (int order = 0; order < 2; ++order) {
    TrivalentDiagram x = d;
    x.vertices.erase(x.vertices.begin() + static_cast<std::ptrdiff_t>(v));
    const int first = order == 0 ? vert.in1 : vert.in2;
    const int second = order == 0 ? vert.in2 : vert.in1;
    x.skeleton[p] = {first, true};
    x.skeleton.insert(x.skeleton.begin() + static_cast<std::ptrdiff_t>(p) + 1, {second, true});
    out.emplace_back(order == 0 ? c : -c, std::move(x));
  }
}

// Vertex v is fed (in slot `port`) by an edge e starting at a skeleton tail t.
// With e in the first slot, v = (other head just before t) - (just after t).
void apply_stu_tail(const TrivalentDiagram& d, std::size_t v, int port, const Rational& c, std::vector<Term>& out) {
  const auto vert = d.vertices[v];
  const int e = port == 1 ? vert.in1 : vert.in2;
  const int other = port == 1 ? vert.in2 : vert.in1;
  const Rational sign = port == 1 ? c : -c;
  for (int after = 0; after < 2; ++after) {
    TrivalentDiagram x = d;
    x.vertices.erase(x.vertices.begin() + static_cast<std::ptrdiff_t>(v));
    int landing = other;
    if (other == vert.out) {
      // A loop: e itself becomes the arrow whose head lands next to t.
      landing = e;
    } else {
      const std::size_t h = find_end(x, vert.out, true);
      if (h < x.skeleton.size()) {
        x.skeleton[h].edge = e;
      } else {
        for (auto& w : x.vertices) {
          if (w.in1 == vert.out) w.in1 = e;
          if (w.in2 == vert.out) w.in2 = e;
        }
      }
    }
    const std::size_t t = find_end(x, e, false);
    x.skeleton.insert(x.skeleton.begin() + static_cast<std::ptrdiff_t>(t + after), {landing, true});
    out.emplace_back(after == 0 ? sign : -sign, std::move(x));
  }
}

}  // namespace

ArrowVector stu_eliminate(const TrivalentDiagram& d, EliminationOrder order) {
  d.validate();
  ArrowVector result(Skeleton::long_strand(), d.degree());
  std::vector<Term> work{{Rational(1), d}};
  while (!work.empty()) {
    Term term = std::move(work.back());
    work.pop_back();
    const auto& [c, x] = term;
    if (x.vertices.empty()) {
      result.add(to_arrow_diagram(x), c);
      continue;
    }
    // Candidates: (vertex, rule) with rule 0 = output on skeleton, 1/2 = tail in that slot.
    std::vector<std::pair<std::size_t, int>> head_moves, tail_moves;
    for (std::size_t v = 0; v < x.vertices.size(); ++v) {
      const auto& vert = x.vertices[v];
      if (find_end(x, vert.out, true) < x.skeleton.size()) head_moves.emplace_back(v, 0);
      if (find_end(x, vert.in1, false) < x.skeleton.size()) tail_moves.emplace_back(v, 1);
      if (find_end(x, vert.in2, false) < x.skeleton.size()) tail_moves.emplace_back(v, 2);
    }
    std::pair<std::size_t, int> pick;
    if (order.rng) {
      std::vector<std::pair<std::size_t, int>> all = head_moves;
      all.insert(all.end(), tail_moves.begin(), tail_moves.end());
      if (all.empty()) throw Error("not skeleton-reducible");
      std::uniform_int_distribution<std::size_t> u(0, all.size() - 1);
      pick = all[u(*order.rng)];
    } else if (!head_moves.empty()) {
      pick = head_moves.front();
    } else if (!tail_moves.empty()) {
      pick = tail_moves.front();
    } else {
      throw Error("not skeleton-reducible");
    }
    std::vector<Term> next;
    if (pick.second == 0) apply_stu_head(x, pick.first, c, next);
    else apply_stu_tail(x, pick.first, pick.second, c, next);
    for (auto& t : next) work.push_back(std::move(t));
  }
  return result;
}

TrivalentDiagram wheel_diagram(int k) {
  if (k < 1) throw Error("wheels have k >= 1");
  TrivalentDiagram w;
  for (int j = 0; j < k; ++j) {
    w.skeleton.push_back({j, false});
    w.vertices.push_back({j, k + (j + k - 1) % k, k + j});
  }
  return w;
}

ArrowVector wheel_to_arrows(int k) {
  if (k < 1 || k > kMaxWheel) throw Error("wheel index " + std::to_string(k) + " out of range 1.." + std::to_string(kMaxWheel));
  static std::mutex mutex;
  static std::map<int, ArrowVector> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, stu_eliminate(wheel_diagram(k))).first;
  return it->second;
}

ArrowVector isolated_arrow() { return ArrowVector::single(ArrowDiagram(Skeleton::long_strand(), {{1, 2}})); }

int WheelMonomial::degree() const {
  int d = a_power;
  for (int k : wheels) d += k;
  return d;
}

std::string WheelMonomial::str() const {
  std::ostringstream os;
  if (a_power > 0) os << 'a' << (a_power > 1 ? "^" + std::to_string(a_power) : "");
  int i = 0;
  while (i < static_cast<int>(wheels.size())) {
    int j = i;
    while (j < static_cast<int>(wheels.size()) && wheels[j] == wheels[i]) ++j;
    if (os.tellp() > 0) os << ' ';
    os << 'w' << wheels[i] << (j - i > 1 ? "^" + std::to_string(j - i) : "");
    i = j;
  }
  return os.tellp() > 0 ? os.str() : "1";
}

std::vector<WheelMonomial> wheel_monomial_basis(int m, RelationSet rels) {
  if (m < 0) throw Error("degree must be >= 0");
  const bool allow_a = !rels.contains(Relation::FI);
  const int min_wheel = rels.contains(Relation::FI) || rels.contains(Relation::RI) ? 2 : 1;
  std::vector<WheelMonomial> out;
  std::vector<int> parts;
  std::function<void(int, int, int)> rec = [&](int a, int left, int smallest) {
    if (left == 0) {
      out.push_back({a, parts});
      return;
    }
    for (int k = smallest; k <= left; ++k) {
      parts.push_back(k);
      rec(a, left - k, k);
      parts.pop_back();
    }
  };
  for (int a = 0; a <= (allow_a ? m : 0); ++a) rec(a, m - a, min_wheel);
  std::sort(out.begin(), out.end());
  return out;
}

ArrowVector monomial_to_arrows(const WheelMonomial& mono) {
  ArrowVector v = ArrowVector::single(ArrowDiagram());
  for (int i = 0; i < mono.a_power; ++i) v = v * isolated_arrow();
  for (int k : mono.wheels) v = v * wheel_to_arrows(k);
  return v;
}

// ---------------------------------------------------------------------------
// Relator instantiation

namespace {

// Places `ends`, in every order, among the endpoints of every pure diagram of
// degree `rest`; base arrows get edge names from `first_edge` on.
void for_each_arrangement(const std::vector<TrivalentDiagram::End>& ends, int rest, int first_edge,
                          const std::function<void(const std::vector<TrivalentDiagram::End>&)>& f) {
  if (rest < 0) return;
  const int c = static_cast<int>(ends.size());
  for (const auto& base : enumerate_diagrams(Skeleton::long_strand(), rest)) {
    std::vector<TrivalentDiagram::End> base_ends(2 * rest);
    for (int i = 0; i < rest; ++i) {
      base_ends[base.arrows()[i].tail - 1] = {first_edge + i, false};
      base_ends[base.arrows()[i].head - 1] = {first_edge + i, true};
    }
    const int total = 2 * rest + c;
    std::vector<int> seq(total, -1);
    std::vector<bool> used(c, false);
    std::vector<TrivalentDiagram::End> skeleton;
    std::function<void(int, int)> rec = [&](int pos, int placed) {
      if (pos == total) {
        skeleton.clear();
        std::size_t b = 0;
        for (int x : seq) skeleton.push_back(x < 0 ? base_ends[b++] : ends[x]);
        f(skeleton);
        return;
      }
      if (total - pos > c - placed) {
        seq[pos] = -1;
        rec(pos + 1, placed);
      }
      for (int x = 0; x < c; ++x) {
        if (used[x]) continue;
        used[x] = true;
        seq[pos] = x;
        rec(pos + 1, placed + 1);
        used[x] = false;
      }
    };
    rec(0, 0);
  }
}

int next_free_edge(const TrivalentDiagram& d) {
  int next = 0;
  for (const auto& e : d.skeleton) next = std::max(next, e.edge + 1);
  for (const auto& v : d.vertices) next = std::max({next, v.in1 + 1, v.in2 + 1, v.out + 1});
  return next;
}

void for_each_context(const TrivalentDiagram& core, int m, const std::function<void(const TrivalentDiagram&)>& f) {
  TrivalentDiagram d = core;
  for_each_arrangement(core.skeleton, m - core.degree(), next_free_edge(core), [&](const auto& skeleton) {
    d.skeleton = skeleton;
    f(d);
  });
}

TrivalentDiagram::End tail(int e) { return {e, false}; }
TrivalentDiagram::End head(int e) { return {e, true}; }

// Cores of degree <= 4 covering trees, wheels and wheels with tree spokes.
std::vector<TrivalentDiagram> jacobi_cores() {
  std::vector<TrivalentDiagram> cores;
  // [[A,B],C] with output on the skeleton.
  cores.push_back({{tail(0), tail(1), tail(2), head(4)}, {{0, 1, 3}, {3, 2, 4}}});
  // [[[A,B],C],D] and [[A,B],[C,D]].
  cores.push_back({{tail(0), tail(1), tail(2), tail(3), head(6)}, {{0, 1, 4}, {4, 2, 5}, {5, 3, 6}}});
  cores.push_back({{tail(0), tail(1), tail(2), tail(3), head(6)}, {{0, 1, 4}, {2, 3, 5}, {4, 5, 6}}});
  for (int k = 1; k <= 4; ++k) cores.push_back(wheel_diagram(k));
  // Wheels whose first spoke is the output of a Y fed by two tails.
  for (int k = 1; k <= 3; ++k) {
    TrivalentDiagram w = wheel_diagram(k);
    const int a = 2 * k, b = 2 * k + 1;
    w.skeleton.erase(w.skeleton.begin());
    w.skeleton.insert(w.skeleton.begin(), {tail(a), tail(b)});
    w.vertices.push_back({a, b, 0});
    cores.push_back(std::move(w));
  }
  // A 2-wheel with both spokes grown from Y's.
  {
    TrivalentDiagram w = wheel_diagram(2);
    w.skeleton = {tail(4), tail(5), tail(6), tail(7)};
    w.vertices.push_back({4, 5, 0});
    w.vertices.push_back({6, 7, 1});
    cores.push_back(std::move(w));
  }
  return cores;
}

}  // namespace

std::vector<ArrowVector> ihx_relators(int m) {
  std::vector<ArrowVector> out;
  for (const auto& core : jacobi_cores()) {
    for_each_context(core, m, [&](const TrivalentDiagram& host) {
      for (std::size_t ui = 0; ui < host.vertices.size(); ++ui) {
        for (std::size_t vi = 0; vi < host.vertices.size(); ++vi) {
          if (ui == vi) continue;
          const auto u = host.vertices[ui], v = host.vertices[vi];
          const int e = u.out;
          if (v.in1 != e && v.in2 != e) continue;
          const int a = u.in1, b = u.in2, c = v.in1 == e ? v.in2 : v.in1;
          ArrowVector rel(Skeleton::long_strand(), m);
          const std::array<std::array<int, 3>, 3> cyc{{{a, b, c}, {b, c, a}, {c, a, b}}};
          for (const auto& [x, y, z] : cyc) {
            TrivalentDiagram t = host;
            t.vertices[ui] = {x, y, e};
            t.vertices[vi] = {e, z, v.out};
            rel += stu_eliminate(t);
          }
          out.push_back(std::move(rel));
        }
      }
    });
  }
  return out;
}

std::vector<ArrowVector> as_relators(int m) {
  std::vector<ArrowVector> out;
  for (const auto& core : jacobi_cores()) {
    for_each_context(core, m, [&](const TrivalentDiagram& host) {
      for (std::size_t v = 0; v < host.vertices.size(); ++v) {
        TrivalentDiagram swapped = host;
        std::swap(swapped.vertices[v].in1, swapped.vertices[v].in2);
        out.push_back(stu_eliminate(host) + stu_eliminate(swapped));
      }
    });
  }
  return out;
}

std::vector<ArrowVector> cc_relators_from_trees(int m) {
  // Two Y's, [A,B] -> edge 4 and [C,D] -> edge 5, with adjacent heads. The
  // single end {4, head} below marks where the pair of heads goes.
  std::vector<ArrowVector> out;
  const std::vector<TrivalentDiagram::Vertex> ys{{0, 1, 4}, {2, 3, 5}};
  const std::vector<TrivalentDiagram::End> ends{tail(0), tail(1), tail(2), tail(3), head(4)};
  for_each_arrangement(ends, m - 4, 6, [&](const auto& skeleton) {
    ArrowVector rel(Skeleton::long_strand(), m);
    for (int order = 0; order < 2; ++order) {
      TrivalentDiagram d;
      d.vertices = ys;
      for (const auto& e : skeleton) {
        if (e.edge == 4 && e.head) {
          d.skeleton.push_back(head(order == 0 ? 4 : 5));
          d.skeleton.push_back(head(order == 0 ? 5 : 4));
        } else {
          d.skeleton.push_back(e);
        }
      }
      rel += stu_eliminate(d) * Rational(order == 0 ? 1 : -1);
    }
    out.push_back(std::move(rel));
  });
  return out;
}

}  // namespace wk
