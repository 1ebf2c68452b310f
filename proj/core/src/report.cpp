#include "gtshift/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace gtshift::verify {
namespace {

using nlohmann::ordered_json;

std::string_view theorem_name(Theorem t) {
  switch (t) {
    case Theorem::GtsLambda: return "GTS_LAMBDA";
    case Theorem::GtsMu: return "GTS_MU";
    case Theorem::GtsRho: return "GTS_RHO";
    case Theorem::KelmansThm1: return "KELMANS_THM1";
    case Theorem::KelmansPendants: return "KELMANS_PENDANTS";
    case Theorem::KelmansDiameter: return "KELMANS_DIAMETER";
    case Theorem::CollapseThm2: return "COLLAPSE_THM2";
    case Theorem::Minimality: return "MINIMALITY";
    case Theorem::Identity2AJI: return "IDENTITY_2AJI";
    case Theorem::PosetMinimal: return "POSET_MINIMAL";
    case Theorem::PosetMaximal: return "POSET_MAXIMAL";
    case Theorem::PosetReachable: return "POSET_REACHABLE";
    case Theorem::PosetGrading: return "POSET_GRADING";
    case Theorem::CounterexampleThm2: return "COUNTEREXAMPLE_THM2";
  }
  return "UNKNOWN";
}

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ordered_json move_to_json(const MoveRecord& m) {
  ordered_json j;
  switch (m.kind) {
    case MoveRecord::Kind::Gts:
      j["u"] = m.u;
      j["v"] = m.v;
      j["path"] = m.path;
      j["w"] = m.w;
      j["proper"] = m.proper;
      break;
    case MoveRecord::Kind::Kelmans:
      j["u"] = m.u;
      j["v"] = m.v;
      break;
    case MoveRecord::Kind::Edge:
      j["edge"] = {m.u, m.v};
      break;
  }
  return j;
}

ordered_json matrix_to_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.order(); ++i) {
    rows.push_back(std::vector<double>(m.row(i).begin(), m.row(i).end()));
  }
  return rows;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string TheoremId::to_string() const {
  std::string out(theorem_name(theorem));
  if (!qualifier.empty()) out += "[" + qualifier + "]";
  if (alpha) {
    std::ostringstream ss;
    ss << *alpha;
    out += "(" + ss.str() + ")";
  }
  return out;
}

CheckRecord make_check(TheoremId id, CanonicalCode code, std::optional<MoveRecord> move,
                       double lhs, double rhs, CheckMode mode, double tol) {
  CheckRecord r;
  r.id = std::move(id);
  r.tree_code = std::move(code);
  r.move = std::move(move);
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = lhs - rhs;
  switch (mode) {
    case CheckMode::Strict: r.passed = r.margin > tol; break;
    case CheckMode::Equality: r.passed = std::abs(r.margin) <= tol; break;
    case CheckMode::Exact: r.passed = r.margin == 0.0; break;
  }
  return r;
}

void SpectralAudit::merge(const SpectralAudit& other) {
  matrices += other.matrices;
  max_oracle_gap = std::max(max_oracle_gap, other.max_oracle_gap);
  max_residual = std::max(max_residual, other.max_residual);
  min_perron_entry = std::min(min_perron_entry, other.min_perron_entry);
  max_norm_error = std::max(max_norm_error, other.max_norm_error);
  failures += other.failures;
}

void CampaignReport::finalize() {
  std::stable_sort(records.begin(), records.end(),
                   [](const CheckRecord& a, const CheckRecord& b) {
                     return std::tie(a.id, a.tree_code, a.move) <
                            std::tie(b.id, b.tree_code, b.move);
                   });
  summary.clear();
  for (const CheckRecord& r : records) {
    auto [it, inserted] = summary.try_emplace(r.id.to_string());
    TheoremSummary& s = it->second;
    s.min_margin = inserted ? r.margin : std::min(s.min_margin, r.margin);
    ++s.checked;
    if (!r.passed) ++s.failed;
  }
}

std::size_t CampaignReport::failed() const {
  std::size_t count = audit.failures;
  for (const CheckRecord& r : records) count += r.passed ? 0 : 1;
  return count;
}

std::string move_json(const MoveRecord& move) { return move_to_json(move).dump(); }

std::string to_json(const std::vector<CampaignReport>& reports) {
  ordered_json out = ordered_json::array();
  for (const CampaignReport& rep : reports) {
    ordered_json j;
    j["campaign"] = rep.campaign;
    j["n"] = rep.n;
    j["alpha_grid"] = rep.alpha_grid;
    j["tol"] = rep.tol;
    j["tool_version"] = rep.tool_version;
    j["timestamp"] = rep.timestamp;
    j["passed"] = rep.passed();
    ordered_json summary = ordered_json::object();
    for (const auto& [id, s] : rep.summary) {
      summary[id] = {{"checked", s.checked}, {"failed", s.failed}, {"min_margin", s.min_margin}};
    }
    j["summary"] = std::move(summary);
    j["audit"] = {{"matrices", rep.audit.matrices},
                  {"max_oracle_gap", rep.audit.max_oracle_gap},
                  {"max_residual", rep.audit.max_residual},
                  {"min_perron_entry", rep.audit.min_perron_entry},
                  {"max_norm_error", rep.audit.max_norm_error},
                  {"failures", rep.audit.failures}};
    j["metrics"] = rep.metrics;
    j["facts"] = rep.facts;
    ordered_json records = ordered_json::array();
    for (const CheckRecord& r : rep.records) {
      ordered_json rec;
      rec["theorem_id"] = r.id.to_string();
      rec["tree_code"] = r.tree_code.hex();
      rec["move"] = r.move ? move_to_json(*r.move) : ordered_json(nullptr);
      rec["lhs"] = r.lhs;
      rec["rhs"] = r.rhs;
      rec["margin"] = r.margin;
      rec["passed"] = r.passed;
      if (!r.note.empty()) rec["note"] = r.note;
      if (!r.matrices.empty()) {
        ordered_json dumps = ordered_json::array();
        for (const DumpedMatrix& d : r.matrices) {
          dumps.push_back({{"label", d.label}, {"entries", matrix_to_json(d.entries)}});
        }
        rec["matrices"] = std::move(dumps);
      }
      records.push_back(std::move(rec));
    }
    j["records"] = std::move(records);
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

std::string to_csv(const std::vector<CampaignReport>& reports) {
  std::string out = "theorem_id,tree_code,move,lhs,rhs,margin,passed\n";
  for (const CampaignReport& rep : reports) {
    for (const CheckRecord& r : rep.records) {
      out += csv_quote(r.id.to_string()) + ',' + r.tree_code.hex() + ',' +
             (r.move ? csv_quote(move_json(*r.move)) : std::string()) + ',' +
             number(r.lhs) + ',' + number(r.rhs) + ',' + number(r.margin) + ',' +
             (r.passed ? "true" : "false") + '\n';
    }
  }
  return out;
}

}  // namespace gtshift::verify
