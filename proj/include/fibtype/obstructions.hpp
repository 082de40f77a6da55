#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fibtype/abelian.hpp"
#include "fibtype/embedding.hpp"
#include "fibtype/face_pairing.hpp"
#include "fibtype/graph.hpp"
#include "fibtype/planarity.hpp"
#include "fibtype/presentation.hpp"
#include "fibtype/whitehead.hpp"

namespace fibtype {

/// Evidence that a presentation cannot be the spine of a closed 3-manifold.
/// Only the fields of the reported kind are populated; every piece of
/// evidence can be re-checked from the presentation alone.
struct SpineObstruction {
  enum class Kind { RelatorMultiplicity, AssemblyReversal, NonPlanar };
  Kind kind = Kind::RelatorMultiplicity;
  std::string summary;

  // RelatorMultiplicity: an embedding face whose boundary edges charge one
  // relator with three or more 2-cells at the dual polyhedron vertex.
  int face = -1;
  int relator = -1;
  int multiplicity = 0;
  std::vector<VertexTag> face_vertices;

  // AssemblyReversal: generator subscripts of the disc boundary words and of
  // the disc obtained by the forced gluings.
  std::vector<int> disc_even;
  std::vector<int> disc_odd;
  std::vector<int> merged_boundary;

  // NonPlanar: a minor script from the Whitehead graph to a non-planar graph
  // together with a verified Kuratowski witness for the reduced graph.
  std::vector<MinorOp> reduction;
  std::optional<KuratowskiWitness> witness;
};

/// For a spherical embedding of the Whitehead graph, every face corresponds
/// to a vertex of a would-be face-pairing polyhedron, and each boundary edge
/// of the face charges one polyhedron 2-cell with the relator the edge came
/// from. A relator owns only two 2-cells in total, so a face whose boundary
/// carries the same relator three or more times rules the polyhedron out.
///
/// Applies only when the abelianization is finite of odd order (the closed
/// manifold case); otherwise throws, since the dual-polyhedron reading is
/// not available.
inline std::optional<SpineObstruction> corner_multiplicity_obstruction(
    const LabeledMultigraph& g, const SphericalEmbedding& e,
    const CyclicPresentation& p) {
  AbelianInvariants inv = abelianization(p);
  if (!inv.is_finite() || inv.order() % 2 == 0)
    throw std::invalid_argument(
        "corner multiplicity check needs a finite abelianization of odd order");

  for (int fi = 0; fi < static_cast<int>(e.faces.size()); ++fi) {
    const auto& face = e.faces[static_cast<std::size_t>(fi)];
    std::map<int, int> per_relator;
    for (int d : face)
      ++per_relator[g.edges()[static_cast<std::size_t>(d / 2)].provenance.relator];
    for (const auto& [r, cnt] : per_relator) {
      if (cnt < 3) continue;
      SpineObstruction out;
      out.kind = SpineObstruction::Kind::RelatorMultiplicity;
      out.face = fi;
      out.relator = r;
      out.multiplicity = cnt;
      for (int d : face) out.face_vertices.push_back(g.tag(detail::dart_vertex(g, d)));
      out.summary = "face " + std::to_string(fi) + " forces relator " +
                    std::to_string(r) + " into " + std::to_string(cnt) + " 2-cells";
      return out;
    }
  }
  return std::nullopt;
}

namespace detail {

/// Oriented boundary cell of a disc: a directed 1-cell labeled by a
/// generator subscript, traversed with (+1) or against (-1) its direction.
struct BoundaryCell {
  int label = 0;
  int dir = 1;
};

using DiscBoundary = std::vector<BoundaryCell>;

/// Glues patch onto base along base[pos]: the patch is reflected if needed so
/// it traverses the shared 1-cell oppositely, rotated to start there, and its
/// remaining cells replace base[pos].
inline void glue_disc_at(DiscBoundary& base, std::size_t pos, DiscBoundary patch) {
  const BoundaryCell at = base[pos];
  auto holds = [&](const DiscBoundary& d, int dir) {
    for (std::size_t j = 0; j < d.size(); ++j)
      if (d[j].label == at.label && d[j].dir == dir) return static_cast<long>(j);
    return -1l;
  };
  long j = holds(patch, -at.dir);
  if (j < 0) {
    std::reverse(patch.begin(), patch.end());
    for (auto& c : patch) c.dir = -c.dir;
    j = holds(patch, -at.dir);
    if (j < 0) throw std::invalid_argument("patch does not contain the shared 1-cell");
  }
  std::rotate(patch.begin(), patch.begin() + j, patch.end());
  DiscBoundary out(base.begin(), base.begin() + static_cast<long>(pos));
  out.insert(out.end(), patch.begin() + 1, patch.end());
  out.insert(out.end(), base.begin() + static_cast<long>(pos) + 1, base.end());
  base = std::move(out);
}

inline bool cyclically_equal(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t r = 0; r < a.size(); ++r) {
    bool ok = true;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[(r + j) % a.size()] != b[j]) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

/// Exhaustive oracle: glue all the discs at once along equally labeled
/// directed 1-cells (each label occurs exactly twice, so the pairing is
/// forced) and decide whether the closed surface so formed is a 2-sphere:
/// connected, orientable, Euler characteristic 2.
inline bool disc_assembly_forms_sphere(const std::vector<DiscBoundary>& discs, int n) {
  std::vector<int> uses(static_cast<std::size_t>(n), 0);
  for (const auto& d : discs)
    for (const auto& c : d) ++uses[static_cast<std::size_t>(c.label)];
  for (int s = 0; s < n; ++s)
    if (uses[static_cast<std::size_t>(s)] != 2)
      throw std::invalid_argument("label " + std::to_string(s) +
                                  " does not occur exactly twice");

  // vertices: tail node 2s and head node 2s+1 of each glued 1-cell
  UnionFind verts(2 * n);
  auto cell_start = [](const BoundaryCell& c) {
    return c.dir > 0 ? 2 * c.label : 2 * c.label + 1;
  };
  auto cell_end = [](const BoundaryCell& c) {
    return c.dir > 0 ? 2 * c.label + 1 : 2 * c.label;
  };
  for (const auto& d : discs)
    for (std::size_t j = 0; j < d.size(); ++j)
      verts.unite(cell_end(d[j]), cell_start(d[(j + 1) % d.size()]));
  int v = verts.classes(2 * n);
  int euler = v - n + static_cast<int>(discs.size());

  // orientability and connectivity over the disc adjacency induced by labels
  std::vector<std::vector<std::pair<int, int>>> at_label(
      static_cast<std::size_t>(n));  // (disc, dir)
  for (int di = 0; di < static_cast<int>(discs.size()); ++di)
    for (const auto& c : discs[static_cast<std::size_t>(di)])
      at_label[static_cast<std::size_t>(c.label)].push_back({di, c.dir});
  std::vector<int> color(discs.size(), 0);
  color[0] = 1;
  bool orientable = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (int s = 0; s < n; ++s) {
      auto [d1, dir1] = at_label[static_cast<std::size_t>(s)][0];
      auto [d2, dir2] = at_label[static_cast<std::size_t>(s)][1];
      // coherent orientations traverse a shared 1-cell in opposite ways
      int want = dir1 == dir2 ? -1 : 1;
      std::size_t u1 = static_cast<std::size_t>(d1), u2 = static_cast<std::size_t>(d2);
      if (color[u1] != 0 && color[u2] != 0) {
        if (color[u2] != want * color[u1]) orientable = false;
      } else if (color[u1] != 0) {
        color[u2] = want * color[u1];
        changed = true;
      } else if (color[u2] != 0) {
        color[u1] = want * color[u2];
        changed = true;
      }
    }
  }
  bool connected =
      std::none_of(color.begin(), color.end(), [](int c) { return c == 0; });
  return connected && orientable && euler == 2;
}

}  // namespace detail

/// For n even, k = n/2, gcd(m, n/2) = 1 and gcd(m + n/2, n) = 2, the sphere
/// boundary of a would-be polyhedron would have to be assembled from two
/// (n/2)-gon discs and n/2 bigons. The gluing of the even disc with the
/// bigons is forced and produces an (n/2)-gon whose boundary runs opposite to
/// the odd disc, so the sphere cannot close up. Returns the obstruction with
/// the disc boundary words as evidence; for n <= 12 the conclusion is
/// double-checked by assembling all discs at once and testing for a sphere.
inline SpineObstruction sphere_assembly_obstruction(const FibTypeParams& p) {
  const int n = p.n;
  const int h = n / 2;
  auto md = [&](int a) { return (a % n + n) % n; };
  if (n < 2 || n % 2 != 0 || p.k != h || std::gcd(p.m, h) != 1 ||
      std::gcd(md(p.m + h), n) != 2)
    throw std::invalid_argument(
        "sphere assembly check needs k = n/2, gcd(m, n/2) = 1, gcd(m + n/2, n) = 2");

  using detail::BoundaryCell;
  using detail::DiscBoundary;
  std::vector<DiscBoundary> bigons;
  for (int i = 0; i < h; ++i)
    bigons.push_back({{md(i + p.m), 1}, {md(i + p.m + h), 1}});
  DiscBoundary d_even, d_odd;
  std::vector<int> w_even, w_odd;
  for (int j = 1; j <= h; ++j) {
    int s = md(j * p.m + (j % 2 == 0 ? h : 0));
    w_even.push_back(s);
    w_odd.push_back(md(s + 1));
    d_even.push_back({s, 1});
    d_odd.push_back({md(s + 1), 1});
  }

  // forced gluing of the even disc with the bigons: each boundary 1-cell of
  // the even disc lies on exactly one bigon
  DiscBoundary merged = d_even;
  for (std::size_t pos = 0; pos < merged.size(); ++pos) {
    if (merged[pos].dir < 0) continue;  // already contributed by a bigon
    int s = merged[pos].label;
    std::vector<std::size_t> hits;
    for (std::size_t b = 0; b < bigons.size(); ++b)
      for (const auto& c : bigons[b])
        if (c.label == s) hits.push_back(b);
    if (hits.size() != 1)
      throw std::runtime_error("gluing of label " + std::to_string(s) +
                               " is not forced");
    DiscBoundary patch = bigons[hits[0]];
    detail::glue_disc_at(merged, pos, patch);
  }
  if (merged.size() != static_cast<std::size_t>(h))
    throw std::runtime_error("forced gluing did not produce an n/2-gon");

  // the merged disc must run through the odd disc's labels backwards: all its
  // cells are traversed against their direction while the odd disc traverses
  // the same labels forwards
  std::vector<int> merged_labels;
  for (const auto& c : merged) {
    if (c.dir != -1)
      throw std::runtime_error("forced gluing left a forward 1-cell on the boundary");
    merged_labels.push_back(c.label);
  }
  if (!detail::cyclically_equal(merged_labels, w_odd))
    throw std::runtime_error("merged boundary does not retrace the odd disc");
  std::vector<int> reversed_odd(w_odd.rbegin(), w_odd.rend());
  bool closes = detail::cyclically_equal(merged_labels, reversed_odd);

  if (n <= 12) {
    std::vector<DiscBoundary> all = bigons;
    all.push_back(d_even);
    all.push_back(d_odd);
    bool sphere = detail::disc_assembly_forms_sphere(all, n);
    if (sphere != closes)
      throw std::logic_error("forced-gluing argument disagrees with the assembly oracle");
  }
  if (closes)
    throw std::runtime_error("disc assembly closes into a sphere; no obstruction");

  SpineObstruction out;
  out.kind = SpineObstruction::Kind::AssemblyReversal;
  out.disc_even = w_even;
  out.disc_odd = w_odd;
  out.merged_boundary = merged_labels;
  out.summary =
      "forced gluing turns the even disc and the bigons into an n/2-gon that "
      "retraces the odd disc's boundary in the same direction, so the sphere "
      "cannot close up";
  return out;
}

/// For n >= 6 even, k = n/2, gcd(m, n/2) = 1 and gcd(m + n/2, n) = 1, the
/// Whitehead graph contracts onto a circulant graph with chords of lengths 1
/// and n/2, which is non-planar. Returns the contraction script together
/// with a verified Kuratowski witness for the reduced graph.
inline SpineObstruction nonplanar_branch_obstruction(const FibTypeParams& p) {
  const int n = p.n;
  const int h = n / 2;
  auto md = [&](int a) { return (a % n + n) % n; };
  if (n < 6 || n % 2 != 0 || p.k != h || std::gcd(p.m, h) != 1 ||
      std::gcd(md(p.m + h), n) != 1)
    throw std::invalid_argument(
        "non-planar branch needs n >= 6 even, k = n/2, gcd(m, n/2) = 1, "
        "gcd(m + n/2, n) = 1");

  LabeledMultigraph g = whitehead_graph(make_fib_presentation(p));
  std::vector<MinorOp> ops;
  for (int i = 0; i < n; ++i)
    ops.push_back({MinorOp::Kind::ContractEdge, VertexTag{i, false},
                   VertexTag{md(i + p.m), true}});
  ops.push_back({MinorOp::Kind::RemoveLoops, {}, {}});
  LabeledMultigraph reduced = minor_reduce(g, ops);

  // the survivors are the unprimed vertices; relabeled by j -> (m + n/2) j
  // they must form the cycle (j, j+1) plus the diameters (j, j+n/2)
  if (reduced.vertex_count() != n)
    throw std::logic_error("contraction did not leave one vertex per generator");
  auto w = [&](int j) { return VertexTag{md((p.m + h) * j), false}; };
  for (int j = 0; j < n; ++j) {
    if (!reduced.has_edge(reduced.vertex(w(j)), reduced.vertex(w(j + 1))) ||
        !reduced.has_edge(reduced.vertex(w(j)), reduced.vertex(w(j + h))))
      throw std::logic_error("reduced graph is not the expected circulant");
  }

  PlanarityResult pr = planarity_test(reduced);
  if (pr.planar || !pr.witness || !verify_witness(reduced, *pr.witness))
    throw std::logic_error("reduced circulant unexpectedly lacks a verified witness");

  SpineObstruction out;
  out.kind = SpineObstruction::Kind::NonPlanar;
  out.reduction = std::move(ops);
  out.witness = pr.witness;
  out.summary =
      "contracting the mixed edges of the Whitehead graph leaves a circulant "
      "with chords 1 and n/2, which carries a verified Kuratowski witness";
  return out;
}

}  // namespace fibtype
