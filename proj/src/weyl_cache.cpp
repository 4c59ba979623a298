#include "rodier/weyl_cache.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iterator>

#include <boost/crc.hpp>

namespace rodier {

namespace fs = std::filesystem;

namespace {

constexpr const char* kMagic = "rodier-weyl-cache";
constexpr const char* kSuffix = ".weyl";

std::uint32_t crc32(const std::string& bytes) {
  boost::crc_32_type crc;
  crc.process_bytes(bytes.data(), bytes.size());
  return crc.checksum();
}

struct Parsed {
  std::string type;
  std::size_t elements = 0;
  std::size_t degree = 0;
  std::uint32_t checksum = 0;
  std::string payload;
};

std::optional<Parsed> parse_file(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  Parsed p;
  std::string magic, key;
  int version = 0;
  if (!(in >> magic >> version) || magic != kMagic || version != kCacheVersion) return std::nullopt;
  if (!(in >> key >> p.type) || key != "type") return std::nullopt;
  if (!(in >> key >> p.elements) || key != "elements") return std::nullopt;
  if (!(in >> key >> p.degree) || key != "degree") return std::nullopt;
  if (!(in >> key >> std::hex >> p.checksum >> std::dec) || key != "crc32") return std::nullopt;
  if (in.get() != '\n') return std::nullopt;
  p.payload.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  if (crc32(p.payload) != p.checksum) return std::nullopt;
  return p;
}

}  // namespace

fs::path default_cache_dir() {
  if (auto env = env_cache_dir()) return *env;
  return fs::path(".rodier-cache");
}

std::optional<fs::path> env_cache_dir() {
  const char* v = std::getenv("RODIER_CACHE_DIR");
  if (v == nullptr || *v == '\0') return std::nullopt;
  return fs::path(v);
}

fs::path cache_file(const fs::path& dir, const CartanType& type) { return dir / (type.name() + kSuffix); }

void store_weyl(const fs::path& dir, const WeylGroup& group) {
  const auto& rs = group.root_system();
  std::string payload;
  for (std::size_t i = 0; i < group.size(); ++i) {
    for (RootIndex r : group[i].perm()) {
      payload.push_back(static_cast<char>(r & 0xff));
      payload.push_back(static_cast<char>(r >> 8));
    }
    const auto& w = group.word(i);
    payload.push_back(static_cast<char>(w.size()));
    payload.append(w.begin(), w.end());
  }
  fs::create_directories(dir);
  const fs::path target = cache_file(dir, rs.type());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << kMagic << ' ' << kCacheVersion << '\n'
        << "type " << rs.type().name() << '\n'
        << "elements " << group.size() << '\n'
        << "degree " << rs.size() << '\n'
        << "crc32 " << std::hex << crc32(payload) << std::dec << '\n';
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  }
  fs::rename(tmp, target);
}

std::optional<WeylGroup> load_weyl(const fs::path& dir, const RootSystemPtr& rs) {
  const auto parsed = parse_file(cache_file(dir, rs->type()));
  if (!parsed || parsed->type != rs->type().name() || parsed->degree != static_cast<std::size_t>(rs->size()) ||
      parsed->elements != rs->type().weyl_order()) {
    return std::nullopt;
  }
  const std::string& bytes = parsed->payload;
  std::vector<WeylElement> elements;
  std::vector<std::vector<std::uint8_t>> words;
  elements.reserve(parsed->elements);
  words.reserve(parsed->elements);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < parsed->elements; ++i) {
    if (pos + 2 * parsed->degree + 1 > bytes.size()) return std::nullopt;
    std::vector<RootIndex> perm(parsed->degree);
    for (auto& r : perm) {
      r = static_cast<RootIndex>(static_cast<unsigned char>(bytes[pos]) | (static_cast<unsigned char>(bytes[pos + 1]) << 8));
      if (r >= parsed->degree) return std::nullopt;
      pos += 2;
    }
    const std::size_t len = static_cast<unsigned char>(bytes[pos++]);
    if (pos + len > bytes.size()) return std::nullopt;
    words.emplace_back(bytes.begin() + static_cast<std::ptrdiff_t>(pos), bytes.begin() + static_cast<std::ptrdiff_t>(pos + len));
    pos += len;
    elements.emplace_back(std::move(perm));
  }
  if (pos != bytes.size()) return std::nullopt;
  try {
    return WeylGroup(rs, std::move(elements), std::move(words));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

WeylGroup cached_weyl(const RootSystemPtr& rs, const std::optional<fs::path>& dir, std::size_t cap) {
  if (dir) {
    if (auto hit = load_weyl(*dir, rs)) return std::move(*hit);
  }
  WeylGroup group = generate_weyl(rs, cap);
  if (dir) store_weyl(*dir, group);
  return group;
}

std::vector<CacheEntry> cache_stat(const fs::path& dir) {
  std::vector<CacheEntry> out;
  if (!fs::is_directory(dir)) return out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() != kSuffix) continue;
    CacheEntry e;
    e.type = entry.path().stem().string();
    e.bytes = entry.file_size();
    if (const auto parsed = parse_file(entry.path())) {
      e.elements = parsed->elements;
      e.checksum = parsed->checksum;
      e.valid = parsed->type == e.type;
    }
    out.push_back(e);
  }
  std::sort(out.begin(), out.end(), [](const CacheEntry& a, const CacheEntry& b) { return a.type < b.type; });
  return out;
}

std::size_t cache_clear(const fs::path& dir) {
  std::size_t removed = 0;
  if (!fs::is_directory(dir)) return removed;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == kSuffix || entry.path().extension() == ".tmp") removed += fs::remove(entry.path());
  }
  return removed;
}

}  // namespace rodier
