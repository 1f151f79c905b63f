#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "permsign/verify.hpp"

namespace permsign {

enum class OutputFormat { Human, Csv, Json };

/// "human", "csv" or "json"; throws std::invalid_argument otherwise.
OutputFormat parse_output_format(std::string_view text);

inline constexpr std::string_view kCsvHeader =
    "p,case,n,discriminant,class_number,predicted,roots_total,roots_even,roots_odd,passed";

std::string csv_row(const VerificationRecord& rec);

/// Keys mirror the record; "per_root" only when include_roots is set.
nlohmann::ordered_json to_json(const VerificationRecord& rec, bool include_roots = false);

std::string human_summary(const VerificationRecord& rec, bool include_roots = false);

/// CSV gets a header line; JSON is one object per line.
void write_records(std::ostream& os, std::span<const VerificationRecord> records,
                   OutputFormat format, bool include_roots = false);

}  // namespace permsign
