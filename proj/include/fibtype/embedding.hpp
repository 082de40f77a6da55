#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "fibtype/graph.hpp"

namespace fibtype {

/// An embedding of a connected multigraph in the sphere, given combinatorially
/// by the clockwise dart order around every vertex. Edge e of the graph owns
/// darts 2e (leaving edge endpoint a) and 2e+1 (leaving endpoint b); a face is
/// the dart cycle of its oriented boundary.
struct SphericalEmbedding {
  std::vector<std::vector<int>> rotation;  // per vertex
  std::vector<std::vector<int>> faces;     // per face, darts in boundary order

  std::vector<int> face_sizes() const {
    std::vector<int> out;
    for (const auto& f : faces) out.push_back(static_cast<int>(f.size()));
    std::sort(out.begin(), out.end());
    return out;
  }
};

struct EmbeddingCensus {
  bool budget_exhausted = false;
  unsigned long long rotation_systems = 0;  // candidates examined
  std::vector<SphericalEmbedding> embeddings;

  /// Sorted face-size multisets, duplicates removed.
  std::vector<std::vector<int>> face_size_profiles() const {
    std::vector<std::vector<int>> out;
    for (const auto& e : embeddings) out.push_back(e.face_sizes());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

inline constexpr unsigned long long kDefaultEmbeddingBudget = 1ull << 24;

namespace detail {

inline int dart_vertex(const LabeledMultigraph& g, int d) {
  const auto& e = g.edges()[static_cast<std::size_t>(d / 2)];
  return d % 2 == 0 ? e.a : e.b;
}

/// Traces the orbits of (sigma compose theta), one orbit per face.
inline std::vector<std::vector<int>> trace_faces(
    const LabeledMultigraph& g, const std::vector<std::vector<int>>& rotation) {
  int darts = 2 * g.edge_count();
  std::vector<int> succ(static_cast<std::size_t>(darts), -1);  // sigma as a map
  for (const auto& rot : rotation)
    for (std::size_t i = 0; i < rot.size(); ++i)
      succ[static_cast<std::size_t>(rot[i])] = rot[(i + 1) % rot.size()];
  std::vector<std::vector<int>> faces;
  std::vector<bool> seen(static_cast<std::size_t>(darts), false);
  for (int s = 0; s < darts; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> face;
    int d = s;
    do {
      seen[static_cast<std::size_t>(d)] = true;
      face.push_back(d);
      d = succ[static_cast<std::size_t>(d ^ 1)];
    } while (d != s);
    faces.push_back(std::move(face));
  }
  return faces;
}

/// Canonical code of an oriented map: breadth-first dart relabeling from a
/// start dart, minimized over all start darts. Two rotation systems get the
/// same code exactly when they are isomorphic as oriented maps.
inline std::vector<int> oriented_map_code(int darts, const std::vector<int>& succ) {
  std::vector<int> best;
  for (int start = 0; start < darts; ++start) {
    std::vector<int> label(static_cast<std::size_t>(darts), -1);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(darts));
    int next = 0;
    auto visit = [&](int d) {
      if (label[static_cast<std::size_t>(d)] < 0) {
        label[static_cast<std::size_t>(d)] = next++;
        order.push_back(d);
      }
    };
    visit(start);
    std::vector<int> code;
    code.reserve(static_cast<std::size_t>(2 * darts));
    for (std::size_t i = 0; i < order.size(); ++i) {
      int d = order[i];
      visit(succ[static_cast<std::size_t>(d)]);
      visit(d ^ 1);
      code.push_back(label[static_cast<std::size_t>(succ[static_cast<std::size_t>(d)])]);
      code.push_back(label[static_cast<std::size_t>(d ^ 1)]);
    }
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

inline std::vector<int> embedding_code(const LabeledMultigraph& g,
                                       const std::vector<std::vector<int>>& rotation,
                                       bool reflected) {
  int darts = 2 * g.edge_count();
  std::vector<int> succ(static_cast<std::size_t>(darts), -1);
  for (const auto& rot : rotation)
    for (std::size_t i = 0; i < rot.size(); ++i) {
      std::size_t j = reflected ? (i + rot.size() - 1) % rot.size()
                                : (i + 1) % rot.size();
      succ[static_cast<std::size_t>(rot[i])] = rot[j];
    }
  return oriented_map_code(darts, succ);
}

}  // namespace detail

/// Enumerates all genus-0 rotation systems of a connected multigraph, one
/// representative per oriented-map isomorphism class (reflections optionally
/// identified). The number of candidate systems is prod (deg(v)-1)!; if it
/// exceeds the budget nothing is enumerated and budget_exhausted is set.
inline EmbeddingCensus enumerate_spherical_embeddings(
    const LabeledMultigraph& g, bool up_to_reflection = true,
    unsigned long long budget = kDefaultEmbeddingBudget) {
  if (!g.is_connected())
    throw std::invalid_argument("embedding enumeration needs a connected graph");
  EmbeddingCensus out;
  if (g.edge_count() == 0) {
    if (g.vertex_count() == 1) {
      out.rotation_systems = 1;
      out.embeddings.push_back(SphericalEmbedding{{{}}, {}});
    }
    return out;
  }

  std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.vertex_count()));
  for (int d = 0; d < 2 * g.edge_count(); ++d)
    incident[static_cast<std::size_t>(detail::dart_vertex(g, d))].push_back(d);

  unsigned long long total = 1;
  for (const auto& inc : incident) {
    unsigned long long f = 1;
    for (std::size_t i = 2; i + 1 <= inc.size(); ++i) {
      f *= static_cast<unsigned long long>(i);
      if (f > budget) break;
    }
    if (f > budget || total > budget / f) {  // overflow-safe: total * f > budget
      out.budget_exhausted = true;
      return out;
    }
    total *= f;
  }

  // odometer over the tail permutations of every vertex (first dart fixed,
  // which enumerates each cyclic order exactly once)
  std::vector<std::vector<int>> tails;
  for (const auto& inc : incident) {
    std::vector<int> t(inc.begin() + (inc.empty() ? 0 : 1), inc.end());
    tails.push_back(t);
  }

  std::vector<std::vector<int>> canon_seen;
  std::vector<std::vector<int>> rotation(static_cast<std::size_t>(g.vertex_count()));

  auto emit = [&]() {
    ++out.rotation_systems;
    for (int v = 0; v < g.vertex_count(); ++v) {
      rotation[static_cast<std::size_t>(v)].clear();
      if (!incident[static_cast<std::size_t>(v)].empty()) {
        rotation[static_cast<std::size_t>(v)].push_back(
            incident[static_cast<std::size_t>(v)].front());
        for (int d : tails[static_cast<std::size_t>(v)])
          rotation[static_cast<std::size_t>(v)].push_back(d);
      }
    }
    std::vector<std::vector<int>> faces = detail::trace_faces(g, rotation);
    long euler = g.vertex_count() - g.edge_count() + static_cast<long>(faces.size());
    if (euler != 2) return;
    std::vector<int> code = detail::embedding_code(g, rotation, false);
    if (up_to_reflection)
      code = std::min(code, detail::embedding_code(g, rotation, true));
    if (std::find(canon_seen.begin(), canon_seen.end(), code) != canon_seen.end())
      return;
    canon_seen.push_back(std::move(code));
    out.embeddings.push_back(SphericalEmbedding{rotation, std::move(faces)});
  };

  // lexicographic odometer across vertices
  std::vector<std::vector<int>> perm = tails;
  std::size_t nv = perm.size();
  while (true) {
    tails = perm;
    emit();
    std::size_t v = 0;
    while (v < nv && !std::next_permutation(perm[v].begin(), perm[v].end())) ++v;
    if (v == nv) break;
  }
  return out;
}

}  // namespace fibtype
