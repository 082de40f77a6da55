#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fibtype {

/// Vertex name of the form v3 or v3' (index plus an optional prime).
struct VertexTag {
  int index = 0;
  bool primed = false;

  friend bool operator==(const VertexTag&, const VertexTag&) = default;
  friend auto operator<=>(const VertexTag&, const VertexTag&) = default;

  std::string str() const {
    return "v" + std::to_string(index) + (primed ? "'" : "");
  }
};

/// Where an edge came from: consecutive-letter pair `position` of
/// relator `relator` (cyclic position in the expanded relator).
struct EdgeProvenance {
  int relator = -1;
  int position = -1;

  friend bool operator==(const EdgeProvenance&, const EdgeProvenance&) = default;
};

/// Undirected multigraph with tagged vertices. Loops and parallel edges are
/// kept; each edge remembers its provenance when one is given.
class LabeledMultigraph {
 public:
  struct Edge {
    int a = 0;
    int b = 0;
    EdgeProvenance provenance;
  };

  int add_vertex(const VertexTag& tag) {
    if (lookup_.count(tag)) throw std::invalid_argument("duplicate vertex " + tag.str());
    lookup_[tag] = static_cast<int>(tags_.size());
    tags_.push_back(tag);
    return static_cast<int>(tags_.size()) - 1;
  }

  int vertex_count() const { return static_cast<int>(tags_.size()); }
  const VertexTag& tag(int v) const { return tags_.at(static_cast<std::size_t>(v)); }
  const std::vector<VertexTag>& tags() const { return tags_; }

  bool has_vertex(const VertexTag& t) const { return lookup_.count(t) > 0; }

  int vertex(const VertexTag& t) const {
    auto it = lookup_.find(t);
    if (it == lookup_.end()) throw std::invalid_argument("no vertex " + t.str());
    return it->second;
  }

  void add_edge(int a, int b, EdgeProvenance p = {}) {
    if (a < 0 || a >= vertex_count() || b < 0 || b >= vertex_count())
      throw std::out_of_range("edge endpoint");
    edges_.push_back(Edge{a, b, p});
  }

  void add_edge(const VertexTag& a, const VertexTag& b, EdgeProvenance p = {}) {
    add_edge(vertex(a), vertex(b), p);
  }

  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  int degree(int v) const {
    int d = 0;
    for (const Edge& e : edges_) {
      if (e.a == v) ++d;
      if (e.b == v) ++d;  // loops count twice
    }
    return d;
  }

  bool has_edge(int a, int b) const {
    for (const Edge& e : edges_)
      if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return true;
    return false;
  }

  bool is_connected() const {
    if (vertex_count() == 0) return true;
    std::vector<bool> seen(static_cast<std::size_t>(vertex_count()), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const Edge& e : edges_) {
        for (int w : {e.a == v ? e.b : -1, e.b == v ? e.a : -1}) {
          if (w < 0 || seen[static_cast<std::size_t>(w)]) continue;
          seen[static_cast<std::size_t>(w)] = true;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    return reached == vertex_count();
  }

  /// Same vertex set, loops dropped, parallel edges collapsed.
  LabeledMultigraph simplified() const {
    LabeledMultigraph g;
    for (const VertexTag& t : tags_) g.add_vertex(t);
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : edges_) {
      if (e.a == e.b) continue;
      auto key = std::minmax(e.a, e.b);
      if (!seen.insert(key).second) continue;
      g.add_edge(e.a, e.b, e.provenance);
    }
    return g;
  }

  /// Edge multiset (as unordered tag pairs), for equality checks.
  std::multiset<std::pair<VertexTag, VertexTag>> edge_multiset() const {
    std::multiset<std::pair<VertexTag, VertexTag>> out;
    for (const Edge& e : edges_) {
      VertexTag x = tag(e.a), y = tag(e.b);
      if (y < x) std::swap(x, y);
      out.insert({x, y});
    }
    return out;
  }

  /// New graph with vertices renamed through `map` (applied to tags).
  template <typename F>
  LabeledMultigraph relabeled(F&& map) const {
    LabeledMultigraph g;
    for (const VertexTag& t : tags_) g.add_vertex(map(t));
    for (const Edge& e : edges_) g.add_edge(e.a, e.b, e.provenance);
    return g;
  }

 private:
  std::vector<VertexTag> tags_;
  std::map<VertexTag, int> lookup_;
  std::vector<Edge> edges_;
};

/// Sequence of minor operations taking one graph to another, with endpoints
/// referenced by tag so a script stays meaningful after renumbering.
struct MinorOp {
  enum class Kind { DeleteEdge, ContractEdge, RemoveLoops };
  Kind kind = Kind::RemoveLoops;
  VertexTag a;
  VertexTag b;
};

/// Applies the ops in order. Endpoint tags are resolved through earlier
/// contractions, so a script can keep naming vertices of the original graph.
/// ContractEdge merges (the representative of) b into a; contracting an edge
/// whose endpoints were already merged deletes one loop instead. DeleteEdge
/// removes one copy of the edge.
inline LabeledMultigraph minor_reduce(const LabeledMultigraph& g,
                                      const std::vector<MinorOp>& ops) {
  std::vector<VertexTag> tags = g.tags();
  std::vector<std::pair<VertexTag, VertexTag>> edges;
  for (const auto& e : g.edges()) edges.push_back({g.tag(e.a), g.tag(e.b)});
  std::map<VertexTag, VertexTag> merged;  // original -> surviving tag

  auto resolve = [&](VertexTag t) {
    while (true) {
      auto it = merged.find(t);
      if (it == merged.end()) return t;
      t = it->second;
    }
  };
  auto find_edge = [&](const VertexTag& a, const VertexTag& b) {
    return std::find_if(edges.begin(), edges.end(), [&](const auto& e) {
      return (e.first == a && e.second == b) || (e.first == b && e.second == a);
    });
  };

  for (const MinorOp& op : ops) {
    VertexTag a = resolve(op.a), b = resolve(op.b);
    switch (op.kind) {
      case MinorOp::Kind::DeleteEdge: {
        auto it = find_edge(a, b);
        if (it == edges.end())
          throw std::invalid_argument("delete: no edge " + op.a.str() + "-" +
                                      op.b.str());
        edges.erase(it);
        break;
      }
      case MinorOp::Kind::ContractEdge: {
        auto it = find_edge(a, b);
        if (it == edges.end())
          throw std::invalid_argument("contract: no edge " + op.a.str() + "-" +
                                      op.b.str());
        edges.erase(it);
        if (a == b) break;  // was a loop; contraction = deletion
        for (auto& e : edges) {
          if (e.first == b) e.first = a;
          if (e.second == b) e.second = a;
        }
        merged[b] = a;
        tags.erase(std::find(tags.begin(), tags.end(), b));
        break;
      }
      case MinorOp::Kind::RemoveLoops:
        edges.erase(std::remove_if(edges.begin(), edges.end(),
                                   [](const auto& e) { return e.first == e.second; }),
                    edges.end());
        break;
    }
  }

  LabeledMultigraph out;
  for (const VertexTag& t : tags) out.add_vertex(t);
  for (const auto& [x, y] : edges) out.add_edge(x, y);
  return out;
}

/// Recognizes the complete graph K_5 exactly (after simplification).
inline bool is_k5(const LabeledMultigraph& g_in) {
  LabeledMultigraph g = g_in.simplified();
  if (g.vertex_count() != 5 || g.edge_count() != 10) return false;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      if (!g.has_edge(a, b)) return false;
  return true;
}

/// Recognizes the complete bipartite graph K_{3,3} exactly.
inline bool is_k33(const LabeledMultigraph& g_in) {
  LabeledMultigraph g = g_in.simplified();
  if (g.vertex_count() != 6 || g.edge_count() != 9) return false;
  for (int v = 0; v < 6; ++v)
    if (g.degree(v) != 3) return false;
  // 2-color by BFS; must be proper and split 3/3
  std::vector<int> color(6, -1);
  color[0] = 0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& e : g.edges()) {
      int w = e.a == v ? e.b : (e.b == v ? e.a : -1);
      if (w < 0) continue;
      if (color[static_cast<std::size_t>(w)] < 0) {
        color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
        stack.push_back(w);
      } else if (color[static_cast<std::size_t>(w)] ==
                 color[static_cast<std::size_t>(v)]) {
        return false;
      }
    }
  }
  return std::count(color.begin(), color.end(), 0) == 3 &&
         std::count(color.begin(), color.end(), 1) == 3;
}

}  // namespace fibtype
