// Copyright 2026 The advtext Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Report serialization. JSON is canonical and carries "kind" and
// "format_version"; CSV flattens the per-row data with fixed columns whose
// first column is the CSV format version; markdown is for reading.

#ifndef ADVTEXT_REPORT_HPP_
#define ADVTEXT_REPORT_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

#include "advtext/harness.hpp"

namespace advtext {

inline constexpr int kReportFormatVersion = 1;
inline constexpr int kCsvFormatVersion = 1;

using Report = std::variant<CampaignReport, AblationReport, ComparisonReport, AugmentReport,
                            SuspicionReport, GrammarEvalReport>;

enum class ReportFormat { kJson, kCsv, kMarkdown };

// Throws ConfigError for anything but json, csv or markdown (or md).
ReportFormat parse_report_format(std::string_view name);
std::string_view report_kind(const Report& report);

nlohmann::json report_to_json(const Report& report);
// Throws FormatError on a missing or unknown kind or a malformed body.
Report report_from_json(const nlohmann::json& j);

std::string render_json(const Report& report);
std::string render_csv(const Report& report);
std::string render_markdown(const Report& report);
std::string render(const Report& report, ReportFormat format);

// Throws IoError naming the path.
void write_report(const Report& report, ReportFormat format, const std::filesystem::path& path);
Report read_report(const std::filesystem::path& path);

}  // namespace advtext

#endif  // ADVTEXT_REPORT_HPP_
