#ifndef ZAPPA_REPORT_HPP
#define ZAPPA_REPORT_HPP

#include <string>

#include <json.hpp>

#include "zappa/scan.hpp"

namespace zappa {

/// Serialized scan report. Key order is fixed; run metadata (duration,
/// thread count) is deliberately excluded so equal scans serialize to
/// identical bytes regardless of parallelism.
inline nlohmann::ordered_json report_to_json(const ZappaReport& r) {
  nlohmann::ordered_json j;
  j["ambient"] = r.ambient;
  j["p"] = r.p;
  j["order_g"] = r.order_g;
  j["order_p"] = r.order_p;
  j["cosets"] = r.cosets_scanned;
  j["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& w : r.witnesses) {
    nlohmann::ordered_json jw;
    jw["rep_cycles"] = format_cycles(w.representative);
    std::vector<std::uint64_t> orders;
    for (const auto& [ord, count] : w.order_histogram)
      for (std::uint64_t i = 0; i < count; ++i) orders.push_back(ord);
    jw["orders"] = orders;
    j["witnesses"].push_back(std::move(jw));
  }
  j["flags"] = r.flags;
  return j;
}

inline std::string format_report_structured(const ZappaReport& r) {
  return report_to_json(r).dump(2) + "\n";
}

inline std::string format_report_text(const ZappaReport& r) {
  std::string out;
  out += "ambient:  " + r.ambient + "\n";
  out += "p:        " + std::to_string(r.p) + "\n";
  out += "order_g:  " + std::to_string(r.order_g) + "\n";
  out += "order_p:  " + std::to_string(r.order_p) + "\n";
  out += "cosets:   " + std::to_string(r.cosets_scanned) + "\n";
  out += "witnesses: " + std::to_string(r.witnesses.size()) + "\n";
  for (const auto& w : r.witnesses) {
    out += "  rep " + format_cycles(w.representative) + " orders";
    for (const auto& [ord, count] : w.order_histogram)
      out += " " + std::to_string(ord) + "x" + std::to_string(count);
    out += "\n";
  }
  out += "flags:    ";
  if (r.flags.empty()) {
    out += "(none)";
  } else {
    for (std::size_t i = 0; i < r.flags.size(); ++i) {
      if (i) out += ", ";
      out += r.flags[i];
    }
  }
  out += "\n";
  return out;
}

}  // namespace zappa

#endif
