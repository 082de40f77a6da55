#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "fibtype/presentation.hpp"
#include "fibtype/word.hpp"

namespace fibtype {

/// A face-pairing description of a closed 3-complex built from one ball:
/// the boundary sphere is tiled by n "plus" and n "minus" faces, and pair i
/// glues plus face i to minus face i.
///
/// Both stored walks of a pair spell the same relator letter by letter; the
/// walk actually embedded in the boundary for the minus face is the
/// reverse-inverse of its stored walk, so matching positions are glued
/// start-to-start and end-to-end.
struct FacePairingComplex {
  struct DirEdge {
    int tail = 0;
    int head = 0;
    int label = 0;  // generator index
    std::string name;
  };
  struct Step {
    int edge = 0;
    bool forward = true;
  };
  struct FacePair {
    std::vector<Step> plus;
    std::vector<Step> minus;
  };

  int n = 0;  // number of pairs
  std::vector<std::string> vertex_names;
  std::vector<DirEdge> edges;
  std::vector<FacePair> pairs;
  std::vector<Word> relators;  // what each pair spells

  int step_start(const Step& s) const {
    const DirEdge& e = edges[static_cast<std::size_t>(s.edge)];
    return s.forward ? e.tail : e.head;
  }
  int step_end(const Step& s) const {
    const DirEdge& e = edges[static_cast<std::size_t>(s.edge)];
    return s.forward ? e.head : e.tail;
  }

  Word spelled(const std::vector<Step>& walk) const {
    Word w;
    for (const Step& s : walk)
      w.letters.push_back(
          Letter{edges[static_cast<std::size_t>(s.edge)].label, s.forward ? 1 : -1});
    return w;
  }
};

/// Result of checking a face-pairing complex. The quotient cell counts are
/// reported even when a check fails, so diagnostics can point at them.
struct SpineCheck {
  bool valid = false;
  std::vector<std::string> diagnostics;
  int vertex_orbits = 0;
  int edge_orbits = 0;
  int face_count = 0;
  int quotient_euler = 0;  // c0 - c1 + c2 - c3 with c3 = 1
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : p_(static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) p_[static_cast<std::size_t>(i)] = i;
  }
  int find(int a) {
    while (p_[static_cast<std::size_t>(a)] != a) {
      p_[static_cast<std::size_t>(a)] = p_[static_cast<std::size_t>(p_[static_cast<std::size_t>(a)])];
      a = p_[static_cast<std::size_t>(a)];
    }
    return a;
  }
  void unite(int a, int b) { p_[static_cast<std::size_t>(find(a))] = find(b); }
  int classes(int n) {
    int c = 0;
    for (int i = 0; i < n; ++i)
      if (find(i) == i) ++c;
    return c;
  }

 private:
  std::vector<int> p_;
};

}  // namespace detail

/// Structural and quotient checks:
///  - every walk is a closed edge path and spells its pair's relator;
///  - every edge of the boundary sphere is traversed exactly twice among the
///    embedded faces, once per direction;
///  - the boundary complex is a connected sphere (V - E + F = 2);
///  - gluing matching positions yields cell counts (1, n, n, 1), hence
///    quotient Euler characteristic 0.
inline SpineCheck verify_face_pairing(const FacePairingComplex& c) {
  SpineCheck out;
  auto fail = [&](const std::string& msg) { out.diagnostics.push_back(msg); };

  const int nv = static_cast<int>(c.vertex_names.size());
  const int ne = static_cast<int>(c.edges.size());
  out.face_count = static_cast<int>(c.pairs.size());
  if (static_cast<int>(c.pairs.size()) != c.n || static_cast<int>(c.relators.size()) != c.n)
    fail("pair or relator count does not match n");

  // walk closure and spelling
  for (int i = 0; i < static_cast<int>(c.pairs.size()); ++i) {
    const auto& pr = c.pairs[static_cast<std::size_t>(i)];
    for (const auto* walk : {&pr.plus, &pr.minus}) {
      if (walk->empty()) {
        fail("pair " + std::to_string(i) + " has an empty walk");
        continue;
      }
      for (std::size_t j = 0; j < walk->size(); ++j) {
        const auto& cur = (*walk)[j];
        const auto& nxt = (*walk)[(j + 1) % walk->size()];
        if (c.step_end(cur) != c.step_start(nxt)) {
          fail("pair " + std::to_string(i) + " walk breaks after position " +
               std::to_string(j));
          break;
        }
      }
    }
    if (i < static_cast<int>(c.relators.size())) {
      const Word& r = c.relators[static_cast<std::size_t>(i)];
      if (expand_to_columns(c.spelled(pr.plus)) != expand_to_columns(r))
        fail("pair " + std::to_string(i) + " plus walk does not spell its relator");
      if (expand_to_columns(c.spelled(pr.minus)) != expand_to_columns(r))
        fail("pair " + std::to_string(i) + " minus walk does not spell its relator");
    }
    if (pr.plus.size() != pr.minus.size())
      fail("pair " + std::to_string(i) + " walks differ in length");
  }

  // each boundary edge must be used once in each direction by the embedded
  // faces (plus walks as stored, minus walks reverse-inverted)
  std::vector<int> fwd(static_cast<std::size_t>(ne), 0), bwd(static_cast<std::size_t>(ne), 0);
  for (const auto& pr : c.pairs) {
    for (const auto& s : pr.plus) ++(s.forward ? fwd : bwd)[static_cast<std::size_t>(s.edge)];
    for (const auto& s : pr.minus) ++(s.forward ? bwd : fwd)[static_cast<std::size_t>(s.edge)];
  }
  for (int e = 0; e < ne; ++e)
    if (fwd[static_cast<std::size_t>(e)] != 1 || bwd[static_cast<std::size_t>(e)] != 1)
      fail("edge " + c.edges[static_cast<std::size_t>(e)].name +
           " is not traversed exactly once per direction");

  // boundary sphere: connected and V - E + F = 2
  {
    detail::UnionFind comp(nv);
    for (const auto& e : c.edges) comp.unite(e.tail, e.head);
    if (nv > 0 && comp.classes(nv) != 1) fail("boundary complex is disconnected");
    long euler = nv - ne + static_cast<long>(2 * c.pairs.size());
    if (euler != 2)
      fail("boundary complex is not a sphere (V - E + F = " + std::to_string(euler) + ")");
  }

  // quotient cell counts via position-aligned gluing
  detail::UnionFind vorb(nv);
  detail::UnionFind eorb(ne);
  bool label_clash = false;
  for (const auto& pr : c.pairs) {
    std::size_t len = std::min(pr.plus.size(), pr.minus.size());
    for (std::size_t j = 0; j < len; ++j) {
      const auto& a = pr.plus[j];
      const auto& b = pr.minus[j];
      vorb.unite(c.step_start(a), c.step_start(b));
      vorb.unite(c.step_end(a), c.step_end(b));
      eorb.unite(a.edge, b.edge);
      if (c.edges[static_cast<std::size_t>(a.edge)].label !=
          c.edges[static_cast<std::size_t>(b.edge)].label)
        label_clash = true;
    }
  }
  if (label_clash) fail("an identification glues edges with different labels");
  out.vertex_orbits = vorb.classes(nv);
  out.edge_orbits = eorb.classes(ne);
  out.quotient_euler =
      out.vertex_orbits - out.edge_orbits + static_cast<int>(c.pairs.size()) - 1;
  if (out.vertex_orbits != 1)
    fail("quotient has " + std::to_string(out.vertex_orbits) + " vertices, expected 1");
  if (out.edge_orbits != c.n)
    fail("quotient has " + std::to_string(out.edge_orbits) + " edges, expected " +
         std::to_string(c.n));
  if (out.quotient_euler != 0)
    fail("quotient Euler characteristic is " + std::to_string(out.quotient_euler) +
         ", expected 0");

  out.valid = out.diagnostics.empty();
  return out;
}

/// The relators the pairs spell, compared as a multiset against the given
/// list up to rotation and inversion.
inline bool matches_presentation(const FacePairingComplex& c,
                                 const std::vector<Word>& relators) {
  return detail::relator_sets_match(c.relators, relators);
}

/// One identification cycle per edge orbit: the closed chain of edges linked
/// by matching walk positions, each hop annotated with the pair that makes
/// it. Every edge has exactly two incidences in the walks, so orbits are
/// cycles; walks start at the lexicographically smallest edge name.
struct EdgeCycleHop {
  std::string edge;
  int via_pair = 0;  // pair gluing this edge to the next one
};

inline std::vector<std::vector<EdgeCycleHop>> edge_identification_cycles(
    const FacePairingComplex& c) {
  struct Incidence {
    int pair;
    bool in_plus;
    int position;
  };
  std::vector<std::vector<Incidence>> inc(c.edges.size());
  for (int i = 0; i < static_cast<int>(c.pairs.size()); ++i) {
    const auto& pr = c.pairs[static_cast<std::size_t>(i)];
    for (int j = 0; j < static_cast<int>(pr.plus.size()); ++j)
      inc[static_cast<std::size_t>(pr.plus[static_cast<std::size_t>(j)].edge)].push_back(
          {i, true, j});
    for (int j = 0; j < static_cast<int>(pr.minus.size()); ++j)
      inc[static_cast<std::size_t>(pr.minus[static_cast<std::size_t>(j)].edge)].push_back(
          {i, false, j});
  }
  for (const auto& v : inc)
    if (v.size() != 2)
      throw std::invalid_argument("edge does not have exactly two walk incidences");

  auto partner_edge = [&](const Incidence& I) {
    const auto& pr = c.pairs[static_cast<std::size_t>(I.pair)];
    const auto& other = I.in_plus ? pr.minus : pr.plus;
    return other[static_cast<std::size_t>(I.position)].edge;
  };

  std::vector<std::vector<EdgeCycleHop>> out;
  std::vector<bool> done(c.edges.size(), false);
  // deterministic: orbits keyed by smallest edge name
  std::vector<int> order(c.edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return c.edges[static_cast<std::size_t>(a)].name <
           c.edges[static_cast<std::size_t>(b)].name;
  });
  for (int start : order) {
    if (done[static_cast<std::size_t>(start)]) continue;
    std::vector<EdgeCycleHop> cycle;
    int e = start;
    // leave the start edge through its first incidence
    Incidence via = inc[static_cast<std::size_t>(e)][0];
    while (true) {
      done[static_cast<std::size_t>(e)] = true;
      cycle.push_back({c.edges[static_cast<std::size_t>(e)].name, via.pair});
      int nxt = partner_edge(via);
      // continue through the incidence of nxt that is not the one we used
      const auto& cand = inc[static_cast<std::size_t>(nxt)];
      Incidence other = (cand[0].pair == via.pair && cand[0].in_plus != via.in_plus &&
                         cand[0].position == via.position)
                            ? cand[1]
                            : cand[0];
      e = nxt;
      via = other;
      if (e == start) break;
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

inline std::string format_edge_cycle(const std::vector<EdgeCycleHop>& cycle) {
  std::string s;
  for (const auto& hop : cycle) s += hop.edge + " -F" + std::to_string(hop.via_pair) + "- ";
  if (!cycle.empty()) s += cycle.front().edge;
  return s;
}

}  // namespace fibtype
