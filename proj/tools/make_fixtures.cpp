// Regenerates the committed map fixtures in tests/fixtures/.
// Random maps are drawn from a fixed seed and kept only if they meet the stated
// shape, so reruns reproduce the same files on the same standard library.

#include <algorithm>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "filling/errors.hpp"
#include "filling/map_io.hpp"
#include "filling/reducer.hpp"
#include "filling/surfmap.hpp"

using namespace filling;

namespace {

struct Draw {
  std::vector<int> alpha, sigma;
  std::vector<bool> twisted;
};

// Vertex valences in order; darts of a vertex are consecutive and rotate ccw.
Draw random_map(std::mt19937_64& rng, const std::vector<int>& valences, bool twists) {
  Draw d;
  int n = 0;
  for (int v : valences) {
    for (int i = 0; i < v; ++i) d.sigma.push_back(n + (i + 1) % v);
    n += v;
  }
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  d.alpha.assign(n, 0);
  d.twisted.assign(n, false);
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < n; i += 2) {
    d.alpha[perm[i]] = perm[i + 1];
    d.alpha[perm[i + 1]] = perm[i];
    if (twists) d.twisted[perm[i]] = d.twisted[perm[i + 1]] = coin(rng);
  }
  return d;
}

bool rejected(const CombinatorialMap& m, int genus, const std::string& reason) {
  try {
    reducer::validate_input(m, genus);
    return false;
  } catch (const InvalidInput& e) {
    return std::string(e.what()).find(reason) != std::string::npos;
  }
}

bool reduces(const CombinatorialMap& m, int genus) {
  try {
    return reducer::reduce(reducer::validate_input(m, genus)).ok();
  } catch (const std::exception&) {
    return false;
  }
}

CombinatorialMap search(std::mt19937_64& rng, const std::vector<int>& valences, bool twists,
                        const std::function<bool(const CombinatorialMap&)>& keep) {
  for (long attempt = 0; attempt < 50'000'000; ++attempt) {
    const auto d = random_map(rng, valences, twists);
    CombinatorialMap m(d.alpha, d.sigma, {}, twists ? d.twisted : std::vector<bool>{});
    if (m.connected() && keep(m)) return m;
  }
  throw std::runtime_error("fixture search exhausted");
}

bool has_degree(const surfmap::SurfaceReport& r, int deg) {
  return std::find(r.face_degrees.begin(), r.face_degrees.end(), deg) != r.face_degrees.end();
}

void save(const std::string& dir, const std::string& name, const CombinatorialMap& m, int genus,
          const std::string& expect, const std::string& description) {
  auto j = map_to_json(m, genus);
  j["expect"] = expect;
  j["description"] = description;
  write_text_file(dir + "/" + name + ".json", j.dump(2) + "\n");
  std::cout << name << ": " << description << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "tests/fixtures";
  std::mt19937_64 rng(20240531);

  for (int g = 2; g <= 5; ++g) {
    save(dir, "canonical_g" + std::to_string(g), surfmap::build_map(surfmap::canonical_word(g)), g,
         "certificate", "single curve from the canonical gluing word");
  }

  const std::vector<int> quartic6(6, 4), quartic7(7, 4), quartic8(8, 4), quartic10(10, 4);
  auto triangle_map = [&](int genus) {
    return [genus](const CombinatorialMap& m) {
      const auto r = surfmap::surface_report(m);
      return r.genus == genus && has_degree(r, 3) && reduces(m, genus);
    };
  };
  save(dir, "triangle_g2_v6", search(rng, quartic6, false, triangle_map(2)), 2, "certificate",
       "4-regular genus-2 multi-curve with a triangle face");
  save(dir, "triangle_g2_v7", search(rng, quartic7, false, triangle_map(2)), 2, "certificate",
       "4-regular genus-2 multi-curve with a triangle face");
  save(dir, "triangle_g2_v8", search(rng, quartic8, false, triangle_map(2)), 2, "certificate",
       "4-regular genus-2 multi-curve with a triangle face");
  save(dir, "triangle_g3_v10", search(rng, quartic10, false, triangle_map(3)), 3, "certificate",
       "4-regular genus-3 multi-curve with a triangle face");

  auto sixvalent = [](const CombinatorialMap& m) {
    return surfmap::surface_report(m).genus == 2 && reduces(m, 2);
  };
  save(dir, "sixvalent_g2_v5", search(rng, {6, 4, 4, 4, 4}, false, sixvalent), 2, "certificate",
       "genus-2 multi-curve with one triple point");
  save(dir, "sixvalent_g2_v6", search(rng, {6, 4, 4, 4, 4, 4}, false, sixvalent), 2, "certificate",
       "genus-2 multi-curve with one triple point");

  save(dir, "bigon_g2", search(rng, quartic6, false,
                               [](const CombinatorialMap& m) {
                                 const auto r = surfmap::surface_report(m);
                                 return r.genus == 2 && !has_degree(r, 1) && rejected(m, 2, "bigon");
                               }),
       2, "rejected:bigon", "genus-2 multi-curve with a bigon face");
  save(dir, "nonfilling_g1_as_g2", search(rng, {4, 4, 4}, false,
                                          [](const CombinatorialMap& m) {
                                            const auto r = surfmap::surface_report(m);
                                            return r.genus == 1 && !has_degree(r, 1) &&
                                                   !has_degree(r, 2) && rejected(m, 2, "not filling");
                                          }),
       2, "rejected:not filling", "torus multi-curve declared on a genus-2 surface");
  auto clean_rejection = [](int genus, const std::string& reason) {
    return [genus, reason](const CombinatorialMap& m) {
      const auto r = surfmap::surface_report(m);
      return r.genus == genus && !has_degree(r, 1) && !has_degree(r, 2) && rejected(m, genus, reason);
    };
  };
  save(dir, "contractible_g1", search(rng, quartic7, false, clean_rejection(1, "contractible")), 1,
       "rejected:contractible", "torus multi-curve with a simple closed strand bounding a disk");
  save(dir, "parallel_g2", search(rng, quartic8, false, clean_rejection(2, "annulus")), 2,
       "rejected:annulus", "genus-2 multi-curve with two parallel simple strands");
  save(dir, "nonorientable_448", search(rng, {4, 4, 4, 4}, true,
                                        [](const CombinatorialMap& m) {
                                          if (m.orientable()) return false;
                                          std::vector<int> sizes;
                                          for (const auto& f : m.faces()) sizes.push_back(static_cast<int>(f.size()));
                                          std::sort(sizes.begin(), sizes.end());
                                          return sizes == std::vector<int>{4, 4, 8};
                                        }),
       2, "rejected:non-orientable", "faces of degrees 4, 4, 8 on a non-orientable surface of Euler characteristic -1");
  return 0;
}
