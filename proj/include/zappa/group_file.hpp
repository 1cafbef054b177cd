#ifndef ZAPPA_GROUP_FILE_HPP
#define ZAPPA_GROUP_FILE_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "zappa/errors.hpp"
#include "zappa/group.hpp"
#include "zappa/perm.hpp"

namespace zappa {

/// Line-oriented group description:
///
///   # optional comments anywhere
///   name <identifier>         (optional, at most once, before degree)
///   degree <n>
///   (1,2,3)(4,5)              (one generator per line, cycle notation)
///
/// The canonical printer emits name (if any), degree, then generators with
/// cycles sorted by minimal point; parse/print round-trips byte for byte.
struct GroupFile {
  std::string name;  // empty when absent
  point degree = 0;
  std::vector<Permutation> generators;
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

inline GroupFile parse_group_file(std::istream& in) {
  GroupFile gf;
  std::string raw;
  int lineno = 0;
  bool have_degree = false;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = detail::trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("name", 0) == 0 && (line.size() == 4 || std::isspace((unsigned char)line[4]))) {
      if (have_degree) throw parse_error("name must precede degree", lineno, 1);
      if (!gf.name.empty()) throw parse_error("duplicate name line", lineno, 1);
      gf.name = detail::trim(line.substr(4));
      if (gf.name.empty()) throw parse_error("empty name", lineno, 1);
      continue;
    }
    if (line.rfind("degree", 0) == 0) {
      if (have_degree) throw parse_error("duplicate degree line", lineno, 1);
      std::istringstream ss(line.substr(6));
      long long n = 0;
      if (!(ss >> n) || n < 1)
        throw parse_error("degree must be a positive integer", lineno, 8);
      std::string rest;
      if (ss >> rest) throw parse_error("trailing text after degree", lineno, 8);
      gf.degree = static_cast<point>(n);
      have_degree = true;
      continue;
    }
    if (!have_degree)
      throw parse_error("expected a degree line before generators", lineno, 1);
    std::size_t col = raw.find_first_not_of(" \t") + 1;
    gf.generators.push_back(parse_cycles(line, gf.degree, lineno, static_cast<int>(col)));
  }
  if (!have_degree) throw parse_error("missing degree line", lineno == 0 ? 1 : lineno, 1);
  return gf;
}

inline GroupFile parse_group_file(const std::string& text) {
  std::istringstream in(text);
  return parse_group_file(in);
}

inline std::string format_group_file(const GroupFile& gf) {
  std::string out;
  if (!gf.name.empty()) out += "name " + gf.name + "\n";
  out += "degree " + std::to_string(gf.degree) + "\n";
  for (const auto& g : gf.generators) out += format_cycles(g) + "\n";
  return out;
}

inline GroupFile load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open group file: " + path);
  return parse_group_file(in);
}

inline PermutationGroup load_group(const std::string& path) {
  GroupFile gf = load_group_file(path);
  return PermutationGroup(gf.degree, gf.generators);
}

inline void save_group_file(const std::string& path, const GroupFile& gf) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error("cannot write group file: " + path);
  out << format_group_file(gf);
}

}  // namespace zappa

#endif
