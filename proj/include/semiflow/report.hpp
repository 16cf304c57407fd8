#pragma once

// Byte-deterministic report rendering: stable key order, no timestamps,
// newline-terminated output in json, csv or text form.

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "semiflow/claims.hpp"
#include "semiflow/finite_actions.hpp"

namespace semiflow {

inline nlohmann::ordered_json claim_report_json(const ClaimReport& r) {
  nlohmann::ordered_json j;
  j["claim"] = r.id;
  j["family"] = r.family;
  j["truncation"] = r.truncation;
  j["status"] = verdict_name(r.verdict);
  j["K"] = r.k_set;
  j["evidence"] = r.evidence;
  return j;
}

inline std::string render_claims_json(const std::vector<ClaimReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(claim_report_json(r));
  return arr.dump(2) + "\n";
}

namespace detail {

inline std::string csv_quote(const std::string& s) {
  bool needs = s.find_first_of(",\"\n") != std::string::npos;
  if (!needs) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace detail

inline std::string render_claims_csv(const std::vector<ClaimReport>& reports) {
  std::string out = "claim,family,truncation,status,k_size,evidence\n";
  for (const auto& r : reports) {
    std::string ev;
    for (std::size_t i = 0; i < r.evidence.size(); ++i) {
      if (i) ev += "; ";
      ev += r.evidence[i];
    }
    out += r.id + "," + r.family + "," + detail::csv_quote(r.truncation) + "," +
           verdict_name(r.verdict) + "," + std::to_string(r.k_set.size()) + "," +
           detail::csv_quote(ev) + "\n";
  }
  return out;
}

inline std::string render_claims_text(const std::vector<ClaimReport>& reports) {
  std::ostringstream out;
  out << "claim  verdict                 family  truncation\n";
  out << "-----  ----------------------  ------  ----------------\n";
  for (const auto& r : reports) {
    std::string id = r.id;
    id.resize(5, ' ');
    std::string v = verdict_name(r.verdict);
    v.resize(22, ' ');
    std::string fam = r.family;
    fam.resize(6, ' ');
    out << id << "  " << v << "  " << fam << "  " << r.truncation << "\n";
    for (const auto& e : r.evidence) out << "       - " << e << "\n";
  }
  int refuted = 0, inconclusive = 0, confirmed = 0;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Confirmed) ++confirmed;
    if (r.verdict == Verdict::Refuted) ++refuted;
    if (r.verdict == Verdict::InconclusiveAtScale) ++inconclusive;
  }
  out << "summary: " << confirmed << " confirmed, " << refuted << " refuted, "
      << inconclusive << " inconclusive\n";
  return out.str();
}

inline std::string render_claims(const std::vector<ClaimReport>& reports,
                                 const std::string& format) {
  if (format == "json") return render_claims_json(reports);
  if (format == "csv") return render_claims_csv(reports);
  return render_claims_text(reports);
}

// One CSV row per system: id, point count, generator count, pass, and the
// counterexample point when any.
inline std::string render_sweep_csv(const SweepResult& result) {
  std::string out = "id,n,generators,pass,counterexample\n";
  for (const auto& row : result.rows) {
    out += std::to_string(row.id) + "," + std::to_string(row.n) + "," +
           std::to_string(row.generators) + "," + (row.pass ? "pass" : "fail") +
           "," +
           (row.counterexample >= 0 ? std::to_string(row.counterexample) : "") +
           "\n";
  }
  return out;
}

inline std::string render_sweep_text(const SweepResult& result) {
  std::ostringstream out;
  out << sweep_check_name(result.check) << ": " << result.systems
      << " systems, " << result.failures << " failures\n";
  for (const auto& row : result.rows) {
    if (!row.pass)
      out << "  fail: system " << row.id << " (n=" << row.n
          << ", generators=" << row.generators << ")"
          << (row.counterexample >= 0
                  ? " at point " + std::to_string(row.counterexample)
                  : "")
          << "\n";
  }
  return out.str();
}

}  // namespace semiflow
