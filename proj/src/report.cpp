#include "lucasforge/report.hpp"

#include <ostream>

#include "json.hpp"

namespace lucasforge {

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::kText;
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  throw Error("unknown output format '" + name + "' (expected text, json or csv)");
}

Record to_record(const IdentityReport& report) {
  Record rec;
  rec.op = report.id;
  rec.params = report.params;
  rec.result = report.verdict || report.rhs.empty() ? report.lhs
                                                    : report.lhs + " != " + report.rhs;
  rec.verdict = report.verdict;
  rec.expected = report.expected;
  rec.note = report.note;
  return rec;
}

Record to_record(const ValuationReport& report) {
  Record rec;
  rec.op = "valuation";
  for (std::size_t i = 0; i < report.numerator_indices.size(); ++i)
    rec.params.emplace_back("num" + std::to_string(i), report.numerator_indices[i]);
  for (std::size_t j = 0; j < report.denominator_indices.size(); ++j)
    rec.params.emplace_back("den" + std::to_string(j), report.denominator_indices[j]);
  rec.params.emplace_back("k", report.k);
  std::string rows;
  for (const auto& row : report.rows) {
    if (!rows.empty()) rows += ' ';
    rows += std::to_string(row.d) + ":" + std::to_string(row.num_exponent) + "/" +
            std::to_string(row.den_exponent);
  }
  rec.result = rows.empty() ? "no rows" : rows;
  rec.verdict = report.verdict;
  return rec;
}

std::vector<Record> to_records(const SuiteReport& report) {
  std::vector<Record> recs;
  recs.reserve(report.reports.size());
  for (const auto& rep : report.reports) recs.push_back(to_record(rep));
  return recs;
}

std::vector<Record> to_records(const SearchOutcome& outcome) {
  std::vector<Record> recs;
  const std::string op = "search:" + outcome.template_id + ":" + outcome.weight_id;
  for (const auto& point : outcome.holding) {
    Record rec;
    rec.op = op;
    rec.params = point;
    rec.result = "holds";
    recs.push_back(std::move(rec));
  }
  for (const auto& [point, residual] : outcome.residuals) {
    Record rec;
    rec.op = op;
    rec.params = point;
    rec.result = "residual=" + to_string(residual);
    recs.push_back(std::move(rec));
  }
  return recs;
}

namespace {

std::string params_text(const ParamList& params, char sep) {
  std::string out;
  for (const auto& [name, value] : params) {
    if (!out.empty()) out += sep;
    out += name + "=" + std::to_string(value);
  }
  return out;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void emit_text_line(std::ostream& out, const Record& rec) {
  if (rec.verdict.has_value()) {
    const bool pass = !rec.expected.has_value() || *rec.verdict == *rec.expected;
    out << (pass ? "ok   " : "FAIL ") << rec.op;
    if (!rec.params.empty()) out << ' ' << params_text(rec.params, ' ');
    out << " :: " << rec.result;
    if (rec.expected.has_value() && !*rec.expected) out << " (expected-negative)";
  } else {
    out << rec.op;
    if (!rec.params.empty()) out << ' ' << params_text(rec.params, ' ');
    out << " :: " << rec.result;
  }
  if (!rec.note.empty()) out << "  # " << rec.note;
  out << '\n';
}

nlohmann::ordered_json record_json(const Record& rec) {
  nlohmann::ordered_json j;
  j["op"] = rec.op;
  auto params = nlohmann::ordered_json::object();
  for (const auto& [name, value] : rec.params) params[name] = value;
  j["params"] = std::move(params);
  j["result"] = rec.result;
  if (rec.verdict.has_value()) j["verdict"] = *rec.verdict;
  if (rec.expected.has_value()) j["expected"] = *rec.expected;
  return j;
}

void emit_csv_header(std::ostream& out) { out << "op,params,result,verdict,expected\n"; }

void emit_csv_row(std::ostream& out, const Record& rec) {
  out << rec.op << ',' << csv_quote(params_text(rec.params, ';')) << ','
      << csv_quote(rec.result) << ',';
  if (rec.verdict.has_value()) out << (*rec.verdict ? "true" : "false");
  out << ',';
  if (rec.expected.has_value()) out << (*rec.expected ? "true" : "false");
  out << '\n';
}

}  // namespace

void emit_value(std::ostream& out, const Record& record, OutputFormat format) {
  switch (format) {
    case OutputFormat::kText:
      out << record.result << '\n';
      break;
    case OutputFormat::kJson:
      out << record_json(record).dump(2) << '\n';
      break;
    case OutputFormat::kCsv:
      emit_csv_header(out);
      emit_csv_row(out, record);
      break;
  }
}

void emit_records(std::ostream& out, const std::vector<Record>& records, OutputFormat format,
                  const std::string& text_summary) {
  switch (format) {
    case OutputFormat::kText:
      for (const auto& rec : records) emit_text_line(out, rec);
      if (!text_summary.empty()) out << text_summary << '\n';
      break;
    case OutputFormat::kJson: {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& rec : records) arr.push_back(record_json(rec));
      out << arr.dump(2) << '\n';
      break;
    }
    case OutputFormat::kCsv:
      emit_csv_header(out);
      for (const auto& rec : records) emit_csv_row(out, rec);
      break;
  }
}

}  // namespace lucasforge
