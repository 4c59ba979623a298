#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "rodier/weyl_cache.hpp"

using namespace rodier;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const char* name) {
  const fs::path p = fs::temp_directory_path() / name;
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("cache round trip reproduces elements and words") {
  const fs::path dir = scratch("rodier-cache-roundtrip");
  const auto rs = build_root_system(CartanType::parse("B3"));
  const WeylGroup g = generate_weyl(rs);
  CHECK_FALSE(load_weyl(dir, rs).has_value());
  store_weyl(dir, g);
  const auto back = load_weyl(dir, rs);
  REQUIRE(back.has_value());
  REQUIRE(back->size() == g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(back->elements()[i] == g.elements()[i]);
    CHECK(back->word(i) == g.word(i));
  }
  const auto stat = cache_stat(dir);
  REQUIRE(stat.size() == 1);
  CHECK(stat[0].type == "B3");
  CHECK(stat[0].elements == 48);
  CHECK(stat[0].valid);
  CHECK(cache_clear(dir) == 1);
  CHECK(cache_clear(dir) == 0);
  fs::remove_all(dir);
}

TEST_CASE("corrupted or mismatched cache files are misses") {
  const fs::path dir = scratch("rodier-cache-corrupt");
  const auto rs = build_root_system(CartanType::parse("A3"));
  store_weyl(dir, generate_weyl(rs));
  const fs::path file = cache_file(dir, rs->type());
  {
    std::fstream f(file, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(-3, std::ios::end);
    f.put('\x7f');
  }
  CHECK_FALSE(load_weyl(dir, rs).has_value());
  CHECK_FALSE(cache_stat(dir)[0].valid);
  // cached_weyl recovers by re-enumerating and rewriting.
  CHECK(cached_weyl(rs, dir).size() == 24);
  CHECK(load_weyl(dir, rs).has_value());

  fs::resize_file(file, fs::file_size(file) / 2);
  CHECK_FALSE(load_weyl(dir, rs).has_value());

  // A file stored under the wrong name does not validate for another type.
  const auto a2 = build_root_system(CartanType::parse("A2"));
  store_weyl(dir, generate_weyl(a2));
  fs::rename(cache_file(dir, a2->type()), file);
  CHECK_FALSE(load_weyl(dir, rs).has_value());
  fs::remove_all(dir);
}
