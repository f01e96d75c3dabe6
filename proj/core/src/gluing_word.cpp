#include <algorithm>
#include <map>
#include <sstream>

#include "filling/errors.hpp"
#include "filling/surfmap.hpp"

namespace filling::surfmap {

std::vector<std::string> GluingWord::labels() const {
  std::vector<std::string> out;
  for (const auto& t : tokens)
    if (std::find(out.begin(), out.end(), t.label) == out.end()) out.push_back(t.label);
  return out;
}

std::string GluingWord::to_string() const {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t.label;
    if (t.reversed) out += '\'';
  }
  return out;
}

void validate_word(const GluingWord& word) {
  if (word.tokens.empty()) throw InvalidInput("gluing word is empty");
  std::map<std::string, int> count;
  for (const auto& t : word.tokens) {
    if (t.label.empty()) throw InvalidInput("gluing word has an empty label");
    ++count[t.label];
  }
  for (const auto& [label, c] : count) {
    if (c != 2) {
      throw InvalidInput("label " + label + " appears " + std::to_string(c) +
                         " times, expected 2");
    }
  }
}

GluingWord parse_gluing_word(std::string_view text) {
  GluingWord word;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    Token t;
    while (!tok.empty() && tok.back() == '\'') {
      t.reversed = !t.reversed;
      tok.pop_back();
    }
    t.label = tok;
    word.tokens.push_back(t);
  }
  validate_word(word);
  return word;
}

namespace {

struct Occurrence {
  int corner;
  bool arriving;  // the dart ends the side before the corner
};

}  // namespace

CombinatorialMap build_map(const GluingWord& word) {
  validate_word(word);
  const auto labels = word.labels();
  const int L = static_cast<int>(word.tokens.size());
  std::map<std::string, int> index;
  for (int k = 0; k < static_cast<int>(labels.size()); ++k) index[labels[k]] = k;

  // Side i leaves its start corner along dep(i) and reaches the next along arr(i).
  std::vector<int> dep(L), arr(L);
  for (int i = 0; i < L; ++i) {
    const int k = index[word.tokens[i].label];
    dep[i] = word.tokens[i].reversed ? 2 * k + 1 : 2 * k;
    arr[i] = dep[i] ^ 1;
  }
  const int n = 2 * static_cast<int>(labels.size());
  // Corner i sits between side i-1 and side i; each dart occurs in exactly two corners.
  std::vector<std::vector<Occurrence>> occ(n);
  for (int i = 0; i < L; ++i) {
    occ[arr[(i + L - 1) % L]].push_back({i, true});
    occ[dep[i]].push_back({i, false});
  }
  auto corner_dart = [&](int corner, bool arriving) {
    return arriving ? arr[(corner + L - 1) % L] : dep[corner];
  };

  // Walk each vertex cycle; the rotation follows the walk. A corner is positive
  // when it is entered through its arriving dart.
  std::vector<int> sigma(n, -1), corner_sign(L, 0);
  for (int start = 0; start < n; ++start) {
    if (sigma[start] != -1) continue;
    const auto& mine = occ[start];
    Occurrence entry = mine[0].arriving || !mine[1].arriving ? mine[0] : mine[1];
    const Occurrence first = entry;
    int x = start;
    do {
      const bool out_role = !entry.arriving;
      const int y = corner_dart(entry.corner, out_role);
      sigma[x] = y;
      corner_sign[entry.corner] = entry.arriving ? 1 : -1;
      // Leave the corner through y's occurrence there, enter y's other corner.
      const auto& ys = occ[y];
      const bool first_is_exit = ys[0].corner == entry.corner && ys[0].arriving == out_role;
      entry = first_is_exit ? ys[1] : ys[0];
      x = y;
    } while (!(entry.corner == first.corner && entry.arriving == first.arriving));
  }

  std::vector<int> alpha(n);
  for (int d = 0; d < n; ++d) alpha[d] = d ^ 1;
  std::vector<bool> twisted(n, false);
  std::vector<int> seen(n / 2, 0);
  for (int i = 0; i < L; ++i) {
    const bool flip = corner_sign[i] != corner_sign[(i + 1) % L];
    const int edge = dep[i] / 2;
    if (seen[edge] && twisted[2 * edge] != flip) {
      throw InvariantViolation("build_map: inconsistent twist on label " +
                               word.tokens[i].label);
    }
    seen[edge] = 1;
    twisted[2 * edge] = twisted[2 * edge + 1] = flip;
  }
  return CombinatorialMap(std::move(alpha), std::move(sigma), {}, std::move(twisted));
}

std::vector<int> corner_classes(const GluingWord& word) {
  validate_word(word);
  const int L = static_cast<int>(word.tokens.size());
  // Polygon corner i is the start of side i; the tail/head ends of the two
  // copies of a label are identified.
  std::map<std::string, std::vector<int>> sides;
  for (int i = 0; i < L; ++i) sides[word.tokens[i].label].push_back(i);
  DisjointSets sets(L);
  for (const auto& [label, s] : sides) {
    auto tail = [&](int i) { return word.tokens[i].reversed ? (i + 1) % L : i; };
    auto head = [&](int i) { return word.tokens[i].reversed ? i : (i + 1) % L; };
    sets.unite(tail(s[0]), tail(s[1]));
    sets.unite(head(s[0]), head(s[1]));
  }
  std::vector<int> out(L);
  for (int i = 0; i < L; ++i) out[i] = sets.find(i);
  return out;
}

}  // namespace filling::surfmap
