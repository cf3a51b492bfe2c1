#include "drba/report.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include <json.hpp>

namespace drba {

void sort_report(std::vector<ReportEntry>& entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const ReportEntry& a, const ReportEntry& b) { return a.case_id < b.case_id; });
}

namespace {

// Column width in display cells, not bytes: every non-continuation byte of a
// UTF-8 sequence starts one (single-width) character.  The only multibyte
// characters we emit are · and ⊗, both one cell wide.
std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char b : s)
    if ((b & 0xC0) != 0x80) ++w;
  return w;
}

std::string emit_text(const std::vector<ReportEntry>& entries) {
  static constexpr std::array<const char*, 7> header = {"case",     "weight", "constraint", "computed",
                                                        "expected", "match",  "note"};
  std::vector<std::array<std::string, 7>> rows;
  rows.reserve(entries.size());
  for (const auto& e : entries) {
    rows.push_back({e.case_id, e.weight, e.constraint, e.computed, e.expected,
                    e.match ? std::string("ok") : std::string("FAIL"), e.note});
  }
  std::array<std::size_t, 7> width{};
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = std::string(header[c]).size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], display_width(row[c]));

  std::ostringstream out;
  auto line = [&](const std::array<std::string, 7>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << "  ";
      out << row[c];
      if (c + 1 < row.size()) out << std::string(width[c] - display_width(row[c]), ' ');
    }
    out << '\n';
  };
  std::array<std::string, 7> head;
  for (std::size_t c = 0; c < header.size(); ++c) head[c] = header[c];
  line(head);
  std::array<std::string, 7> rule;
  for (std::size_t c = 0; c < header.size(); ++c) rule[c] = std::string(width[c], '-');
  line(rule);
  for (const auto& row : rows) line(row);

  std::size_t mismatches = 0;
  for (const auto& e : entries)
    if (!e.match) ++mismatches;
  out << '\n' << entries.size() << (entries.size() == 1 ? " entry, " : " entries, ") << mismatches
      << " mismatch" << (mismatches == 1 ? "" : "es") << '\n';
  return out.str();
}

std::string emit_json(const std::vector<ReportEntry>& entries) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json obj;
    obj["case"] = e.case_id;
    obj["constraint"] = e.constraint;
    obj["weight"] = e.weight;
    obj["computed"] = e.computed;
    obj["expected"] = e.expected;
    obj["match"] = e.match;
    obj["seed"] = e.seed;
    obj["elapsed_ms"] = e.elapsed_ms;
    if (!e.note.empty()) obj["note"] = e.note;
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

}  // namespace

std::string emit_report(const std::vector<ReportEntry>& entries, ReportFormat format) {
  return format == ReportFormat::Json ? emit_json(entries) : emit_text(entries);
}

int report_exit_code(const std::vector<ReportEntry>& entries) {
  for (const auto& e : entries)
    if (!e.match) return 1;
  return 0;
}

}  // namespace drba
