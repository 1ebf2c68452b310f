#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gtshift/canonical.hpp"
#include "gtshift/matrix.hpp"
#include "gtshift/tree.hpp"

namespace gtshift::verify {

enum class Theorem {
  GtsLambda,
  GtsMu,
  GtsRho,
  KelmansThm1,
  KelmansPendants,
  KelmansDiameter,
  CollapseThm2,
  Minimality,
  Identity2AJI,
  PosetMinimal,
  PosetMaximal,
  PosetReachable,
  PosetGrading,
  CounterexampleThm2,
};

/// Theorem plus an optional alpha (GTS_RHO) or qualifier (e.g. which radius a
/// minimality record compares). Renders as GTS_RHO(0.25), MINIMALITY[mu1].
struct TheoremId {
  Theorem theorem;
  std::optional<double> alpha;
  std::string qualifier;

  std::string to_string() const;
  auto operator<=>(const TheoremId&) const = default;
};

struct MoveRecord {
  enum class Kind { Gts, Kelmans, Edge };

  Kind kind = Kind::Gts;
  Vertex u = 0;
  Vertex v = 0;
  std::vector<Vertex> path;  // Gts only
  Vertex w = 0;              // Gts only
  bool proper = false;       // Gts only

  auto operator<=>(const MoveRecord&) const = default;
};

struct DumpedMatrix {
  std::string label;
  Matrix entries;
};

enum class CheckMode { Strict, Equality, Exact };

struct CheckRecord {
  TheoremId id;
  CanonicalCode tree_code;
  std::optional<MoveRecord> move;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool passed = false;
  std::string note;
  // Filled only for failed spectral checks.
  std::vector<DumpedMatrix> matrices;
};

/// margin = lhs - rhs. Strict: margin > tol; Equality: |margin| <= tol;
/// Exact: margin == 0.
CheckRecord make_check(TheoremId id, CanonicalCode code,
                       std::optional<MoveRecord> move, double lhs, double rhs,
                       CheckMode mode, double tol);

/// Agreement of every spectral computation in a campaign with the Jacobi
/// oracle and the Perron-vector contract.
struct SpectralAudit {
  std::size_t matrices = 0;
  double max_oracle_gap = 0.0;
  double max_residual = 0.0;
  double min_perron_entry = 1.0;
  double max_norm_error = 0.0;
  std::size_t failures = 0;

  void merge(const SpectralAudit& other);
};

struct TheoremSummary {
  std::size_t checked = 0;
  std::size_t failed = 0;
  double min_margin = 0.0;
};

struct CampaignReport {
  std::string campaign;
  int n = 0;
  std::vector<double> alpha_grid;
  double tol = 0.0;
  std::vector<CheckRecord> records;
  std::map<std::string, TheoremSummary> summary;
  SpectralAudit audit;
  std::map<std::string, double> metrics;
  std::map<std::string, std::string> facts;
  std::string tool_version;
  std::string timestamp;

  /// Sorts records by (theorem, tree code, move) and rebuilds summary.
  void finalize();
  std::size_t failed() const;
  bool passed() const { return failed() == 0; }
};

std::string_view tool_version();

std::string to_json(const std::vector<CampaignReport>& reports);
std::string to_csv(const std::vector<CampaignReport>& reports);
std::string move_json(const MoveRecord& move);

}  // namespace gtshift::verify
