#pragma once

#include <cstdint>
#include <string>

namespace trit {

struct TangencyType;

// integer-coded classification features; 9 (or 99 for ends) marks "not
// applicable"
struct CatalogKey {
  int valency = 9;   // 3 | 4
  int dim = 9;       // 0 | 1
  int mult = 9;      // stable multiplicity of the component
  int lcar = 9;      // 0 leg interior, 1 edge interior, 2 vertex
  int gcar = 9;      // 0 edge interior, 1 leg interior, 2 vertex
  int dirclass = 9;  // 0 horizontal, 1 vertical, 2 diagonal, 3 other
  int arms = 9;      // distinct overlap lines in the component
  int ends = 9;      // 4*min+max over end letters a=0 b=1 c=2 r=3
  int corner = 9;    // near-corner diagonal overlap with matching vertex
  int disc = 9;      // side split discriminator for vertex-to-vertex overlaps
};

TangencyType catalog_lookup(const CatalogKey& key);

const std::string& catalog_text();
uint64_t catalog_checksum();  // FNV-1a over the catalog text

}  // namespace trit
