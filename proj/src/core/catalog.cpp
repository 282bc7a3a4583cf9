#include "catalog.hpp"

#include "tangency.hpp"

#include <mutex>
#include <sstream>
#include <vector>

namespace trit {

namespace {
const char* kCatalogRaw =
#include "catalog_data.inc"
    ;

struct Row {
  int f[10];          // -1 = wildcard
  std::string label;
  char flavor;
};

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

struct Catalog {
  std::vector<Row> rows;
  uint64_t checksum = 0;
  uint64_t declared = 0;

  void parse(const std::string& text) {
    std::istringstream in(text);
    std::string line, hashed;
    while (std::getline(in, line)) {
      if (line.rfind("# checksum:", 0) == 0) {
        auto pos = line.find("fnv1a64:");
        if (pos != std::string::npos)
          declared = strtoull(line.substr(pos + 8).c_str(), nullptr, 16);
        continue;
      }
      hashed += line;
      hashed += '\n';
      std::string_view sv(line);
      if (sv.empty() || sv[0] == '#') continue;
      std::istringstream ls(line);
      Row r;
      bool ok = true;
      for (int i = 0; i < 10; i++) {
        std::string tok;
        if (!(ls >> tok)) {
          ok = false;
          break;
        }
        r.f[i] = tok == "*" ? -1 : atoi(tok.c_str());
      }
      std::string arrow;
      if (!ok || !(ls >> arrow >> r.label) || arrow != "->") continue;
      std::string fl;
      ls >> fl;
      r.flavor = fl.empty() ? 'N' : fl[0];
      rows.push_back(r);
    }
    checksum = fnv1a(hashed);
  }
};

const Catalog& catalog() {
  static Catalog c;
  static std::once_flag flag;
  std::call_once(flag, [] {
    c.parse(kCatalogRaw);
    if (c.declared != 0 && c.declared != c.checksum)
      throw std::runtime_error("tangency catalog checksum mismatch");
  });
  return c;
}

}  // namespace

const std::string& catalog_text() {
  static std::string t = kCatalogRaw;
  return t;
}

uint64_t catalog_checksum() { return catalog().checksum; }

TangencyType catalog_lookup(const CatalogKey& key) {
  int f[10] = {key.valency, key.dim,  key.mult,   key.lcar, key.gcar,
               key.dirclass, key.arms, key.ends, key.corner, key.disc};
  for (auto& r : catalog().rows) {
    bool match = true;
    for (int i = 0; i < 10 && match; i++)
      if (r.f[i] >= 0 && r.f[i] != f[i]) match = false;
    if (!match) continue;
    TangencyType t;
    t.label = r.label;
    switch (r.flavor) {
      case 'H':
        t.flavor = Flavor::Horizontal;
        break;
      case 'V':
        t.flavor = Flavor::Vertical;
        break;
      case 'D':
        t.flavor = Flavor::Diagonal;
        break;
      case '@':
        t.flavor = key.dirclass == 0   ? Flavor::Horizontal
                   : key.dirclass == 1 ? Flavor::Vertical
                   : key.dirclass == 2 ? Flavor::Diagonal
                                       : Flavor::None;
        break;
      default:
        t.flavor = Flavor::None;
    }
    return t;
  }
  std::string msg = "unclassifiable tangency component: key =";
  for (int i = 0; i < 10; i++) msg += " " + std::to_string(f[i]);
  throw std::runtime_error(msg);
}

}  // namespace trit
