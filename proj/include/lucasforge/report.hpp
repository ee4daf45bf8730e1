#pragma once
// Flat output records and the text/JSON/CSV emitters shared by the CLI.
// A record is {op, params, result, verdict?, expected?}; JSON and CSV carry
// exactly those fields, text adds the human-oriented pass/fail prefix and
// any note.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lucasforge/identities.hpp"
#include "lucasforge/valuation.hpp"

namespace lucasforge {

enum class OutputFormat { kText, kJson, kCsv };

OutputFormat parse_format(const std::string& name);  // throws Error

struct Record {
  std::string op;
  ParamList params;
  std::string result;
  std::optional<bool> verdict;
  std::optional<bool> expected;
  std::string note;
};

Record to_record(const IdentityReport& report);
Record to_record(const ValuationReport& report);
std::vector<Record> to_records(const SuiteReport& report);
std::vector<Record> to_records(const SearchOutcome& outcome);

// Single computed value: text mode prints the bare result, JSON emits one
// record object, CSV a header plus one row.
void emit_value(std::ostream& out, const Record& record, OutputFormat format);

// Record list: text mode prints one line per record plus the summary line
// when non-empty; JSON emits an array; CSV a header plus one row per record.
void emit_records(std::ostream& out, const std::vector<Record>& records, OutputFormat format,
                  const std::string& text_summary);

}  // namespace lucasforge
