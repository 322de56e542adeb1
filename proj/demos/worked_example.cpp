// Walks through the running example 1 -> 2 <- 3 <- 4 -> 5: its 20
// quasi-hereditary structures, the deconcatenation into equioriented
// segments, and the tilting supports of one structure.

#include <cstdio>

#include "qhstruct/deconcat.hpp"
#include "qhstruct/io.hpp"
#include "qhstruct/qh_poset.hpp"

using namespace qhstruct;

int main() {
  Quiver q(5, {{0, 1}, {2, 1}, {3, 2}, {3, 4}});

  QhPoset p = enumerate_structures(q);
  std::printf("|qh.str| = %d\n\n", p.size());
  for (const QhStructure& s : p.structures)
    std::printf("  %s\n", order_label(s.min_order).c_str());

  Deconcatenation d = iterated_typeA(q);
  std::printf("\nsegments:");
  for (const DeconcatPart& part : d.parts)
    std::printf(" %s", vset_str(part.vertices).c_str());
  std::printf("  (2 x 5 x 2 = %d structures)\n\n", p.size());

  const QhStructure& s = p.structures[p.size() / 2];
  std::printf("tilting supports for %s:\n", order_label(s.min_order).c_str());
  std::vector<Vset> supp = tree_tilting_supports(q, s.min_order);
  for (int i = 0; i < q.n; ++i)
    std::printf("  T(%d): %s\n", i + 1, vset_str(supp[i]).c_str());
  return 0;
}
