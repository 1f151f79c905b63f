#include "permsign/report.hpp"

#include <sstream>
#include <stdexcept>

namespace permsign {

OutputFormat parse_output_format(std::string_view text) {
  if (text == "human") return OutputFormat::Human;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown output format '" + std::string(text) + "'");
}

namespace {

template <typename T>
std::string or_empty(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

bool is_special(const VerificationRecord& rec) {
  return rec.case_tag.kind == CaseKind::SpecialForm;
}

}  // namespace

std::string csv_row(const VerificationRecord& rec) {
  std::ostringstream os;
  os << rec.p << ',' << case_name(rec.case_tag.kind) << ','
     << (is_special(rec) ? std::to_string(rec.case_tag.n) : "") << ','
     << or_empty(rec.discriminant) << ',' << or_empty(rec.class_number) << ','
     << rec.predicted.to_string() << ',' << rec.roots_total << ',' << rec.roots_even << ','
     << rec.roots_odd << ',' << (rec.passed ? "true" : "false");
  return os.str();
}

nlohmann::ordered_json to_json(const VerificationRecord& rec, bool include_roots) {
  nlohmann::ordered_json j;
  j["p"] = rec.p;
  j["case"] = case_name(rec.case_tag.kind);
  j["n"] = is_special(rec) ? nlohmann::ordered_json(rec.case_tag.n) : nullptr;
  j["mode"] = rec.mode.to_string();
  j["discriminant"] = rec.discriminant ? nlohmann::ordered_json(*rec.discriminant) : nullptr;
  j["class_number"] = rec.class_number ? nlohmann::ordered_json(*rec.class_number) : nullptr;
  j["predicted"] = rec.predicted.to_string();
  j["roots_total"] = rec.roots_total;
  j["roots_even"] = rec.roots_even;
  j["roots_odd"] = rec.roots_odd;
  j["passed"] = rec.passed;
  j["detail"] = rec.detail;
  if (include_roots) {
    auto roots = nlohmann::ordered_json::array();
    for (const auto& r : rec.per_root) {
      nlohmann::ordered_json e;
      e["g"] = r.g;
      e["tau"] = r.tau.to_string();
      e["sigma"] = r.sigma ? nlohmann::ordered_json(r.sigma->to_string()) : nullptr;
      roots.push_back(std::move(e));
    }
    j["per_root"] = std::move(roots);
  }
  return j;
}

std::string human_summary(const VerificationRecord& rec, bool include_roots) {
  std::ostringstream os;
  os << "p = " << rec.p << "  case " << case_name(rec.case_tag.kind);
  if (is_special(rec)) os << "(n=" << rec.case_tag.n << ")";
  os << "  mode " << rec.mode.to_string() << '\n';
  if (rec.discriminant) os << "  D = " << *rec.discriminant << ", h = " << *rec.class_number << '\n';
  if (rec.predicted.kind != PredictionKind::None) {
    os << "  predicted: " << rec.predicted.to_string() << '\n';
  }
  os << "  roots: " << rec.roots_total << " total, " << rec.roots_even << " even, "
     << rec.roots_odd << " odd\n";
  if (include_roots) {
    for (const auto& r : rec.per_root) {
      os << "    g = " << r.g << "  tau " << r.tau;
      if (r.sigma) os << "  sigma " << *r.sigma;
      os << '\n';
    }
  }
  if (!rec.detail.empty()) os << "  note: " << rec.detail << '\n';
  os << "  " << (rec.passed ? "PASSED" : "FAILED") << '\n';
  return os.str();
}

void write_records(std::ostream& os, std::span<const VerificationRecord> records,
                   OutputFormat format, bool include_roots) {
  switch (format) {
    case OutputFormat::Csv:
      os << kCsvHeader << '\n';
      for (const auto& rec : records) os << csv_row(rec) << '\n';
      break;
    case OutputFormat::Json:
      for (const auto& rec : records) os << to_json(rec, include_roots).dump() << '\n';
      break;
    case OutputFormat::Human:
      for (const auto& rec : records) os << human_summary(rec, include_roots);
      break;
  }
}

}  // namespace permsign
