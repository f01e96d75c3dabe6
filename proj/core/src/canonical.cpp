#include <set>

#include "filling/errors.hpp"
#include "filling/surfmap.hpp"

namespace filling::surfmap {

std::string canonical_label(int block, int index) {
  return "a" + std::to_string(block) + "_" + std::to_string(index);
}

GluingWord canonical_labels(int genus) {
  if (genus < 2) throw DomainError("canonical word needs genus >= 2");
  GluingWord w;
  auto put = [&w](int block, int index) { w.tokens.push_back({canonical_label(block, index), false}); };
  for (int i : {6, 3, 1, 4, 6}) put(0, i);
  for (int j = 1; j <= genus - 2; ++j)
    for (int i : {3, 1, 2, 3, 1, 4}) put(j, i);
  for (int i : {3, 5, 1, 2, 5, 4, 2}) put(0, i);
  for (int j = genus - 2; j >= 1; --j)
    for (int i : {4, 2}) put(j, i);
  return w;
}

GluingWord canonical_word(int genus) {
  // Every passing orientation pattern for g = 2, 3 primes each label exactly
  // once; which copy is primed only reverses that edge's arrow. Prime the second.
  GluingWord w = canonical_labels(genus);
  std::set<std::string> seen;
  for (auto& t : w.tokens) t.reversed = !seen.insert(t.label).second;
  return w;
}

}  // namespace filling::surfmap
