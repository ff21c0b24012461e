#pragma once

#include <limits>
#include <string>

#include "json.hpp"

#include "bcr/conventions.hpp"
#include "bcr/linalg.hpp"
#include "bcr/spaces.hpp"

namespace bcr {

inline constexpr int kFormatVersion = 1;

/// An integer as a JSON number when it fits in 64 bits, else as a decimal
/// string.
inline nlohmann::json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

/// Settings that every emitted table records about itself.
inline nlohmann::json table_header(Parity parity, const Caps& caps) {
  return {{"format_version", kFormatVersion},
          {"parity", to_string(parity)},
          {"caps", {{"max_vertices", caps.max_vertices}, {"max_edges", caps.max_edges}}},
          {"chord_row_sign", kChordRowSign},
          {"ihx_side_sign", kIhxSideSign},
          {"odd_convention", kOddConvention}};
}

/// Basis certificates and rows as (index, num, den) triples.
inline nlohmann::json matrix_json(const RelationSet& rows) {
  nlohmann::json out;
  out["basis"] = rows.basis();
  nlohmann::json rs = nlohmann::json::array();
  for (const auto& r : rows.rows()) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [c, q] : r.vec)
      entries.push_back({rows.index_of(c), integer_json(q.get_num()), integer_json(q.get_den())});
    std::sort(entries.begin(), entries.end());
    rs.push_back({{"tag", to_string(r.tag)}, {"sources", r.sources}, {"entries", entries}});
  }
  out["rows"] = rs;
  return out;
}

}  // namespace bcr
