// Regenerates the shipped fixture files from the library builders.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "catv/congruence.hpp"
#include "catv/io.hpp"
#include "catv/suites.hpp"

using namespace catv;

namespace {

void write(const std::filesystem::path& p, const json& j) {
  std::ofstream f(p);
  f << j.dump(2) << "\n";
  std::cout << p.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path dir = argc > 1 ? argv[1] : "fixtures";
  std::filesystem::create_directories(dir);

  // Parse once before writing so the shipped files are in the normal form the
  // parser produces (identities first); round trips are then byte-identical.
  for (const auto& nc : standard_corpus()) {
    json j = cat_to_json(cat_from_json(cat_to_json(nc.cat)));
    if (cat_to_json(cat_from_json(j)) != j) {
      std::cerr << "round trip not stable for " << nc.name << "\n";
      return 1;
    }
    write(dir / (nc.name + ".json"), j);
  }

  auto nv = nerve(walking_arrow());
  RawDouble nraw{nv.dc.c0, nv.dc.c1, nv.dc.c2, nv.dc.p0, nv.dc.p1,
                 nv.dc.e,  nv.dc.p01, nv.dc.p12, nv.dc.p02};
  write(dir / "nerve_walking_arrow.json", double_to_json(nraw));

  // Kernel of the collapse of two objects onto one: gbo but not complete.
  write(dir / "kernel_pair.json", double_to_json(kernel_double(2, {0, 0})));

  // Same data with one composable-pair object removed: the squares level is
  // no longer the strict pullback, so validation must reject it.
  json broken = double_to_json(kernel_double(2, {0, 0}));
  broken["c2"]["objects"].erase(broken["c2"]["objects"].size() - 1);
  for (const char* t : {"p01", "p12", "p02"}) {
    broken[t]["obj"].erase(broken[t]["obj"].size() - 1);
    broken[t]["mor"].erase(broken[t]["mor"].size() - 1);
  }
  write(dir / "broken_c2.json", broken);

  // Composition table with a missing composite: rejected when rebuilt.
  json bad;
  bad["kind"] = "category";
  bad["name"] = "bad_composition";
  bad["objects"] = {"a", "b", "c"};
  bad["morphisms"] = json::array();
  bad["morphisms"].push_back({{"name", "f"}, {"dom", "a"}, {"cod", "b"}});
  bad["morphisms"].push_back({{"name", "g"}, {"dom", "b"}, {"cod", "c"}});
  bad["compose"] = json::array();
  write(dir / "bad_composition.json", bad);
  return 0;
}
