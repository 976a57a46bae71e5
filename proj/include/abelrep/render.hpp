#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abelrep/char_counts.hpp"
#include "abelrep/field_spec.hpp"
#include "abelrep/group_model.hpp"

namespace abelrep {

/// Everything computed for one field of a run.
struct FieldResult {
  FieldSpec field;
  DegreeTable table;
  std::vector<DivisorContribution> contributions;  // empty unless requested
  std::optional<bool> verify_match;                // set when --verify ran
};

/// A full run over one group and one or more fields, ascending by m.
struct RunResult {
  CyclicFactorList group;
  PrimaryDecomposition decomposition;
  std::vector<FieldResult> fields;
  bool show_divisors = false;
  bool is_range = false;  // rendered as a JSON array when true
};

/// One-line summary of a table: "1, 2, 4^3, 6, 12^2".
std::string compact_degree_line(const DegreeTable& table);

/// Human-readable text: group header, then per field the compact line, an
/// aligned degree/multiplicity table, optional divisor table, verify status.
std::string render_table(const RunResult& result);

/// JSON document; all arbitrary-precision values are decimal strings. A
/// range run renders an array of per-field objects, a single run one object.
/// Output is byte-stable under parse + re-serialize.
std::string render_json(const RunResult& result);

/// CSV with header p,m,q,degree,multiplicity and one row per table entry.
std::string render_csv(const RunResult& result);

}  // namespace abelrep
