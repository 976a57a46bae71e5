#include "abelrep/cli.hpp"

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "abelrep/char_counts.hpp"

namespace abelrep {

namespace {

Int parse_integer(const std::string& text, const std::string& what) {
  if (text.empty()) throw InputError(what + ": empty value");
  for (const char ch : text)
    if (ch < '0' || ch > '9') throw InputError(what + ": not a nonnegative integer: " + text);
  return Int(text);
}

unsigned long parse_degree(const std::string& text, const std::string& what) {
  const Int value = parse_integer(text, what);
  if (value > 1'000'000) throw InputError(what + ": extension degree too large");
  return static_cast<unsigned long>(value);
}

}  // namespace

FieldRange parse_field(const std::optional<std::string>& q, const std::optional<std::string>& p,
                       const std::optional<std::string>& m,
                       const std::optional<std::string>& m_range) {
  if (q.has_value()) {
    if (p || m || m_range) throw InputError("--q cannot be combined with --p/--m/--m-range");
    const FieldSpec field = FieldSpec::from_prime_power(parse_integer(*q, "--q"));
    return {field.p(), field.m(), field.m(), false};
  }
  if (!p.has_value()) throw InputError("specify the field with --q, or --p plus --m/--m-range");
  if (m.has_value() == m_range.has_value())
    throw InputError("--p requires exactly one of --m and --m-range");

  const Int prime = parse_integer(*p, "--p");
  if (!is_prime(prime)) throw NotAPrimePower("--p: " + prime.str() + " is not prime");

  if (m.has_value()) {
    const unsigned long degree = parse_degree(*m, "--m");
    if (degree < 1) throw InputError("--m must be at least 1");
    return {prime, degree, degree, false};
  }

  const std::string& range = *m_range;
  const std::size_t colon = range.find(':');
  if (colon == std::string::npos) throw InputError("--m-range must look like LO:HI");
  const unsigned long lo = parse_degree(range.substr(0, colon), "--m-range");
  const unsigned long hi = parse_degree(range.substr(colon + 1), "--m-range");
  if (lo < 1 || hi < lo) throw InputError("--m-range requires 1 <= LO <= HI");
  return {prime, lo, hi, true};
}

int exit_code_for(const std::exception& error) {
  if (dynamic_cast<const NotCoprime*>(&error)) return kExitNotCoprime;
  if (dynamic_cast<const OracleBoundExceeded*>(&error)) return kExitOracleBound;
  if (dynamic_cast<const Error*>(&error)) return kExitUsage;
  return kExitInternal;
}

int run(const RunRequest& request, std::ostream& out, std::ostream& err) {
  try {
    RunResult result;
    result.group = request.group;
    result.decomposition = primary_decomposition(request.group);
    result.show_divisors = request.show_divisors;
    result.is_range = request.field.is_range;

    for (unsigned long m = request.field.m_lo; m <= request.field.m_hi; ++m) {
      const FieldSpec field = FieldSpec::from_prime_and_exponent(request.field.p, m);
      DegreeTableResult computed = degree_table(result.decomposition, field);
      FieldResult fr{field, std::move(computed.table), {}, std::nullopt};
      if (request.show_divisors) fr.contributions = std::move(computed.contributions);
      if (request.verify) {
        const DegreeTable oracle =
            frobenius_orbits(result.decomposition, field, {request.oracle_bound, true});
        fr.verify_match = oracle.entries() == fr.table.entries();
      }
      result.fields.push_back(std::move(fr));
    }

    switch (request.format) {
      case OutputFormat::kTable:
        out << render_table(result);
        break;
      case OutputFormat::kJson:
        out << render_json(result);
        break;
      case OutputFormat::kCsv:
        out << render_csv(result);
        break;
    }

    for (const FieldResult& fr : result.fields) {
      if (fr.verify_match.has_value() && !*fr.verify_match) {
        err << "verification MISMATCH: enumeration disagrees with the computed table for q = "
            << fr.field.value().str() << "\n";
        return kExitMismatch;
      }
    }
    return kExitSuccess;
  } catch (const std::exception& error) {
    err << "error: " << error.what() << "\n";
    return exit_code_for(error);
  }
}

int run_main(int argc, const char* const* argv) {
  CLI::App app{"Irreducible representation degrees of finite abelian groups over finite fields"};

  std::string group_text;
  std::optional<std::string> q_text, p_text, m_text, m_range_text;
  std::string format = "table";
  bool verify = false;
  bool show_divisors = false;
  std::uint64_t oracle_bound = kDefaultOracleBound;

  app.add_option("--group", group_text, "group, e.g. \"C9xC5\" or \"9,5\"")->required();
  app.add_option("--q", q_text, "field size (a prime power)");
  app.add_option("--p", p_text, "field characteristic (a prime)");
  app.add_option("--m", m_text, "extension degree, q = p^m");
  app.add_option("--m-range", m_range_text, "inclusive degree range LO:HI");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_flag("--verify", verify, "cross-check against brute-force character enumeration");
  app.add_flag("--show-divisors", show_divisors, "include per-divisor character counts");
  app.add_option("--oracle-bound", oracle_bound, "max |G| for --verify enumeration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);  // prints help, exits 0
  } catch (const CLI::ParseError& parse_error) {
    app.exit(parse_error);
    return kExitUsage;
  }

  try {
    RunRequest request;
    request.group = parse_group_spec(group_text);
    request.field = parse_field(q_text, p_text, m_text, m_range_text);
    request.format = format == "json"  ? OutputFormat::kJson
                     : format == "csv" ? OutputFormat::kCsv
                                       : OutputFormat::kTable;
    request.verify = verify;
    request.show_divisors = show_divisors;
    request.oracle_bound = oracle_bound;
    return run(request, std::cout, std::cerr);
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return exit_code_for(error);
  }
}

}  // namespace abelrep
