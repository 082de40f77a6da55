#pragma once

#include <vector>

#include "fibtype/graph.hpp"
#include "fibtype/presentation.hpp"
#include "fibtype/word.hpp"

namespace fibtype {

namespace detail {

struct SignedLetter {
  int gen = 0;
  int sign = 1;
};

inline std::vector<SignedLetter> expand_signed(const Word& w) {
  std::vector<SignedLetter> out;
  for (const Letter& l : w.letters)
    for (int i = 0; i < std::abs(l.exp); ++i)
      out.push_back({l.gen, l.exp > 0 ? 1 : -1});
  return out;
}

}  // namespace detail

/// Builds the Whitehead graph of the presentation: vertices v_g and v_g' for
/// every generator, one edge per consecutive (cyclic) letter pair of every
/// relator. The pair (x_g^eps, x_h^delta) joins the endpoint that x_g^eps
/// leaves through (v_g if eps > 0, else v_g') to the one x_h^delta enters
/// through (v_h if delta < 0, else v_h'). Each edge records the relator and
/// the cyclic position of the pair.
inline LabeledMultigraph whitehead_graph(const CyclicPresentation& p) {
  LabeledMultigraph g;
  for (int i = 0; i < p.n; ++i) g.add_vertex(VertexTag{i, false});
  for (int i = 0; i < p.n; ++i) g.add_vertex(VertexTag{i, true});
  for (int r = 0; r < p.n; ++r) {
    std::vector<detail::SignedLetter> letters =
        detail::expand_signed(cyclically_reduced(p.relator(r)));
    int len = static_cast<int>(letters.size());
    for (int pos = 0; pos < len; ++pos) {
      const auto& cur = letters[static_cast<std::size_t>(pos)];
      const auto& nxt = letters[static_cast<std::size_t>((pos + 1) % len)];
      VertexTag from{cur.gen, cur.sign <= 0};
      VertexTag to{nxt.gen, nxt.sign > 0};
      g.add_edge(from, to, EdgeProvenance{r, pos});
    }
  }
  return g;
}

}  // namespace fibtype
