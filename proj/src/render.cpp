#include "abelrep/render.hpp"

#include <cstddef>
#include <sstream>

#include <json.hpp>

namespace abelrep {

namespace {

using nlohmann::json;

std::string group_name(const PrimaryDecomposition& G) {
  if (G.is_trivial()) return "Z/1";
  std::string out;
  for (const auto& comp : G.components()) {
    for (const unsigned a : comp.exponents) {
      if (!out.empty()) out += " x ";
      out += "Z/" + Int(boost::multiprecision::pow(comp.prime, a)).str();
    }
  }
  return out;
}

// Right-aligned columns, two-space gutters, two-space indent.
std::string aligned(const std::vector<std::string>& header,
                    const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());

  std::string out;
  const auto emit = [&](const std::vector<std::string>& cells) {
    out += " ";
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out += ' ';
      out.append(width[i] - cells[i].size(), ' ');
      out += cells[i];
      if (i + 1 < cells.size()) out += ' ';
    }
    out += '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return out;
}

json field_object(const RunResult& result, const FieldResult& fr) {
  json group;
  group["cyclic_factors"] = json::array();
  for (const Int& m : result.group.factors) group["cyclic_factors"].push_back(m.str());
  group["order"] = result.decomposition.order().value().str();
  group["exponent"] = result.decomposition.exponent().value().str();

  json field;
  field["p"] = fr.field.p().str();
  field["m"] = fr.field.m();
  field["q"] = fr.field.value().str();

  json degrees = json::array();
  for (const DegreeEntry& entry : fr.table.entries())
    degrees.push_back({{"degree", entry.degree.str()}, {"multiplicity", entry.multiplicity.str()}});

  json object;
  object["group"] = std::move(group);
  object["field"] = std::move(field);
  object["degrees"] = std::move(degrees);
  if (result.show_divisors) {
    json divisors = json::array();
    for (const DivisorContribution& c : fr.contributions)
      divisors.push_back({{"d", c.d.str()},
                          {"card_Id", c.card_Id.str()},
                          {"degree", c.degree.str()},
                          {"count", c.count.str()}});
    object["divisors"] = std::move(divisors);
  }
  if (fr.verify_match.has_value()) object["verify"] = {{"match", *fr.verify_match}};
  return object;
}

}  // namespace

std::string compact_degree_line(const DegreeTable& table) {
  std::string out;
  for (const DegreeEntry& entry : table.entries()) {
    if (!out.empty()) out += ", ";
    out += entry.degree.str();
    if (entry.multiplicity != 1) out += "^" + entry.multiplicity.str();
  }
  return out;
}

std::string render_table(const RunResult& result) {
  std::ostringstream out;
  out << "G = " << group_name(result.decomposition) << "  (order "
      << result.decomposition.order().value().str() << ", exponent "
      << result.decomposition.exponent().value().str() << ")\n";

  for (const FieldResult& fr : result.fields) {
    out << "\nq = " << fr.field.value().str() << " (p = " << fr.field.p().str()
        << ", m = " << fr.field.m() << ")\n";
    out << "  " << compact_degree_line(fr.table) << "\n\n";

    std::vector<std::vector<std::string>> rows;
    for (const DegreeEntry& entry : fr.table.entries())
      rows.push_back({entry.degree.str(), entry.multiplicity.str()});
    out << aligned({"degree", "multiplicity"}, rows);

    if (result.show_divisors && !fr.contributions.empty()) {
      std::vector<std::vector<std::string>> divisor_rows;
      for (const DivisorContribution& c : fr.contributions)
        divisor_rows.push_back({c.d.str(), c.card_Id.str(), c.degree.str(), c.count.str()});
      out << "\n" << aligned({"d", "|I_d|", "ord(q mod d)", "count"}, divisor_rows);
    }
    if (fr.verify_match.has_value())
      out << "\n  verify: " << (*fr.verify_match ? "MATCH" : "MISMATCH") << "\n";
  }
  return out.str();
}

std::string render_json(const RunResult& result) {
  if (result.is_range) {
    json array = json::array();
    for (const FieldResult& fr : result.fields) array.push_back(field_object(result, fr));
    return array.dump(2) + "\n";
  }
  return field_object(result, result.fields.front()).dump(2) + "\n";
}

std::string render_csv(const RunResult& result) {
  std::string out = "p,m,q,degree,multiplicity\n";
  for (const FieldResult& fr : result.fields) {
    for (const DegreeEntry& entry : fr.table.entries()) {
      out += fr.field.p().str() + "," + std::to_string(fr.field.m()) + "," +
             fr.field.value().str() + "," + entry.degree.str() + "," +
             entry.multiplicity.str() + "\n";
    }
  }
  return out;
}

}  // namespace abelrep
