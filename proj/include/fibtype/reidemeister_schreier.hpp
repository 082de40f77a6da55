#pragma once

#include <stdexcept>
#include <vector>

#include "fibtype/coset.hpp"
#include "fibtype/presentation.hpp"
#include "fibtype/word.hpp"

namespace fibtype {

/// Presentation of a finite-index subgroup computed from a completed coset
/// table. Generators are the Schreier generators attached to non-tree edges
/// of the coset graph; schreier_generator[coset][gen] is the generator index
/// for the edge coset -> coset*x_gen, or -1 on a spanning-tree edge.
struct SubgroupPresentation {
  GeneralPresentation presentation;
  std::vector<std::vector<int>> schreier_generator;
  std::vector<Word> coset_representatives;  // words in the ambient generators
};

/// Rewrites the relators of p at every coset, giving a presentation of the
/// subgroup the table enumerates. No simplification beyond free reduction:
/// the generator count is always index * gens - (index - 1).
inline SubgroupPresentation reidemeister_schreier(const GeneralPresentation& p,
                                                  const CosetTable& t) {
  if (t.status != EnumerationStatus::Complete)
    throw std::invalid_argument("reidemeister_schreier needs a complete table");
  if (t.generator_count != p.generator_count)
    throw std::invalid_argument("table does not match presentation");
  const int index = t.index();
  const int gens = p.generator_count;

  // spanning tree by BFS from coset 0; reps are shortest-word Schreier
  // transversal elements
  std::vector<Word> reps(static_cast<std::size_t>(index));
  std::vector<std::vector<bool>> tree(
      static_cast<std::size_t>(index), std::vector<bool>(static_cast<std::size_t>(gens), false));
  std::vector<bool> reached(static_cast<std::size_t>(index), false);
  reached[0] = true;
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : frontier)
      for (int c = 0; c < 2 * gens; ++c) {
        int b = t.apply(a, c);
        if (reached[static_cast<std::size_t>(b)]) continue;
        reached[static_cast<std::size_t>(b)] = true;
        int g = c / 2;
        // the tree edge is stored at its tail with respect to x_g
        if (c % 2 == 0)
          tree[static_cast<std::size_t>(a)][static_cast<std::size_t>(g)] = true;
        else
          tree[static_cast<std::size_t>(b)][static_cast<std::size_t>(g)] = true;
        reps[static_cast<std::size_t>(b)] =
            concat(reps[static_cast<std::size_t>(a)],
                   Word{{Letter{g, c % 2 == 0 ? 1 : -1}}});
        next.push_back(b);
      }
    frontier = std::move(next);
  }
  for (int a = 0; a < index; ++a)
    if (!reached[static_cast<std::size_t>(a)])
      throw std::invalid_argument("coset table is not connected");

  // number the non-tree edges
  std::vector<std::vector<int>> sg(
      static_cast<std::size_t>(index), std::vector<int>(static_cast<std::size_t>(gens), -1));
  int count = 0;
  for (int a = 0; a < index; ++a)
    for (int g = 0; g < gens; ++g)
      if (!tree[static_cast<std::size_t>(a)][static_cast<std::size_t>(g)])
        sg[static_cast<std::size_t>(a)][static_cast<std::size_t>(g)] = count++;

  SubgroupPresentation out;
  out.presentation.generator_count = count;
  out.schreier_generator = sg;
  out.coset_representatives = reps;

  for (const Word& r : p.relators) {
    std::vector<int> cols = expand_to_columns(r);
    for (int a = 0; a < index; ++a) {
      Word rewritten;
      int c = a;
      for (int col : cols) {
        int g = col / 2;
        if (col % 2 == 0) {
          int s = sg[static_cast<std::size_t>(c)][static_cast<std::size_t>(g)];
          if (s >= 0) rewritten.letters.push_back(Letter{s, 1});
          c = t.apply(c, col);
        } else {
          int d = t.apply(c, col);
          int s = sg[static_cast<std::size_t>(d)][static_cast<std::size_t>(g)];
          if (s >= 0) rewritten.letters.push_back(Letter{s, -1});
          c = d;
        }
      }
      if (c != a) throw std::logic_error("relator trace did not close");
      rewritten = freely_reduced(rewritten);
      if (!rewritten.letters.empty()) out.presentation.relators.push_back(rewritten);
    }
  }
  return out;
}

}  // namespace fibtype
