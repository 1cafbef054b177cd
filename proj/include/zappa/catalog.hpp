#ifndef ZAPPA_CATALOG_HPP
#define ZAPPA_CATALOG_HPP

#include <string>
#include <vector>

#include "zappa/errors.hpp"
#include "zappa/group.hpp"
#include "zappa/group_file.hpp"
#include "zappa/projective.hpp"

namespace zappa {

/// Builtin ambient-group names: "sym:<n>", "alt:<n>", "psl3_<q>"; anything
/// prefixed "file:" loads a group file from disk.
inline PermutationGroup resolve_group(const std::string& name) {
  auto numeric_suffix = [&](std::size_t at) -> long long {
    std::string tail = name.substr(at);
    if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
      throw error("resolve_group: bad number in '" + name + "'");
    return std::stoll(tail);
  };
  if (name.rfind("sym:", 0) == 0) return symmetric_group(static_cast<point>(numeric_suffix(4)));
  if (name.rfind("alt:", 0) == 0) return alternating_group(static_cast<point>(numeric_suffix(4)));
  if (name.rfind("psl3_", 0) == 0) return psl3_group(static_cast<unsigned>(numeric_suffix(5)));
  if (name.rfind("file:", 0) == 0) return load_group(name.substr(5));
  throw error("resolve_group: unknown group '" + name +
              "' (expected sym:<n>, alt:<n>, psl3_<q>, or file:<path>)");
}

struct CatalogEntry {
  std::string name;
  std::string description;
};

inline std::vector<CatalogEntry> catalog_entries() {
  return {
      {"sym:<n>", "symmetric group on n points"},
      {"alt:<n>", "alternating group on n points (n >= 3)"},
      {"psl3_2", "PSL(3,2) on the 7 points of PG(2,2), order 168"},
      {"psl3_3", "PSL(3,3) on the 13 points of PG(2,3), order 5616"},
      {"psl3_4", "PSL(3,4) on the 21 points of PG(2,4), order 20160"},
      {"file:<path>", "group loaded from a group file"},
  };
}

}  // namespace zappa

#endif
