#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <functional>
#include <sstream>
#include <thread>

#include "gtshift/error.hpp"
#include "gtshift/metrics.hpp"
#include "gtshift/spectral.hpp"
#include "gtshift/transforms.hpp"
#include "gtshift/verify.hpp"

#ifndef GTSHIFT_VERSION
#define GTSHIFT_VERSION "0.0.0"
#endif

namespace gtshift::verify {

std::string_view tool_version() { return GTSHIFT_VERSION; }

namespace {

// Per-tree output of a campaign worker.
struct Shard {
  std::vector<CheckRecord> records;
  SpectralAudit audit;
  std::map<std::string, double> max_metrics;
  std::map<std::string, double> counters;

  void bump_max(const std::string& key, double value) {
    auto [it, inserted] = max_metrics.try_emplace(key, value);
    if (!inserted) it->second = std::max(it->second, value);
  }
};

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void require_order(int n, int lo, const CampaignOptions& opts, const char* campaign) {
  if (n < lo || n > opts.max_order) {
    throw Error(ErrorKind::OrderOutOfRange,
                std::string(campaign) + " needs " + std::to_string(lo) + " <= n <= " +
                    std::to_string(opts.max_order) + ", got " + std::to_string(n));
  }
}

CampaignReport new_report(const char* campaign, int n, const CampaignOptions& opts) {
  CampaignReport rep;
  rep.campaign = campaign;
  rep.n = n;
  rep.alpha_grid = opts.alpha_grid;
  rep.tol = opts.tol;
  rep.tool_version = std::string(tool_version());
  rep.timestamp = opts.timestamp.empty() ? utc_now() : opts.timestamp;
  return rep;
}

// Runs fn on every tree, `workers` at a time, and merges the shards in tree
// order so the result does not depend on scheduling.
void run_sharded(const std::vector<Tree>& trees, int workers, CampaignReport& rep,
                 const std::function<void(const Tree&, Shard&)>& fn) {
  std::vector<Shard> shards(trees.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < trees.size(); i = next++) fn(trees[i], shards[i]);
  };
  const int count = std::max(1, std::min<int>(workers, static_cast<int>(trees.size())));
  if (count == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int k = 0; k < count; ++k) pool.emplace_back(work);
  }
  for (Shard& s : shards) {
    std::move(s.records.begin(), s.records.end(), std::back_inserter(rep.records));
    rep.audit.merge(s.audit);
    for (const auto& [key, value] : s.max_metrics) {
      auto [it, inserted] = rep.metrics.try_emplace(key, value);
      if (!inserted) it->second = std::max(it->second, value);
    }
    for (const auto& [key, value] : s.counters) rep.metrics[key] += value;
  }
  rep.finalize();
}

// Power iteration plus the Jacobi cross-check, logged to the audit.
SpectralSummary evaluate(const DistMatrix& m, SpectralAudit& audit) {
  SpectralSummary s = spectral_radius(m);
  const double gap = std::abs(s.radius - eig_oracle(m));
  double norm2 = 0.0;
  double min_entry = s.perron.empty() ? 0.0 : s.perron.front();
  for (double x : s.perron) {
    norm2 += x * x;
    min_entry = std::min(min_entry, x);
  }
  const double norm_error = std::abs(std::sqrt(norm2) - 1.0);
  ++audit.matrices;
  audit.max_oracle_gap = std::max(audit.max_oracle_gap, gap);
  audit.max_residual = std::max(audit.max_residual, s.residual);
  audit.min_perron_entry = std::min(audit.min_perron_entry, min_entry);
  audit.max_norm_error = std::max(audit.max_norm_error, norm_error);
  if (gap > kOracleTol || !(min_entry > 0.0) || s.residual > kIterationTol ||
      norm_error > kUnitNormTol) {
    ++audit.failures;
  }
  return s;
}

struct Radii {
  double lambda = 0.0;
  double mu = 0.0;
  std::vector<double> rho;  // one per alpha in the grid
};

Radii complement_radii(const Tree& t, const std::vector<double>& alphas, SpectralAudit& audit) {
  const IntMatrix dist = complement_distances(t);
  const CanonicalCode code = canonical_code(t);
  Radii r;
  r.lambda = evaluate(from_distances(dist, DistanceKind{}, code), audit).radius;
  r.mu = evaluate(from_distances(dist, SignlessLaplacianKind{}, code), audit).radius;
  for (double a : alphas) {
    r.rho.push_back(evaluate(from_distances(dist, DAlphaKind{a}, code), audit).radius);
  }
  return r;
}

void dump_on_failure(CheckRecord& r, const Tree& before, const Tree& after,
                     const MatrixKind& kind) {
  if (r.passed) return;
  for (const auto& [label, t] : {std::pair{"before", &before}, std::pair{"after", &after}}) {
    try {
      r.matrices.push_back({std::string(label) + " " + kind_name(kind),
                            build_matrix(*t, kind).entries()});
    } catch (const Error&) {
      // Disconnected complement; the note already says so.
    }
  }
}

CheckRecord error_record(TheoremId id, const Tree& t, std::optional<MoveRecord> move,
                         const std::exception& e) {
  CheckRecord r;
  r.id = std::move(id);
  r.tree_code = canonical_code(t);
  r.move = std::move(move);
  r.lhs = r.rhs = r.margin = std::nan("");
  r.passed = false;
  r.note = e.what();
  return r;
}

MoveRecord gts_record(const Tree& t, const GtsMove& m) {
  MoveRecord r;
  r.kind = MoveRecord::Kind::Gts;
  r.u = m.u;
  r.v = m.v;
  r.path = m.path;
  r.w = m.w;
  r.proper = is_proper(t, m);
  return r;
}

std::optional<std::size_t> alpha_index(const std::vector<double>& grid, double alpha) {
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (grid[i] == alpha) return i;
  return std::nullopt;
}

}  // namespace

CampaignReport check_gts_monotonicity(int n, const CampaignOptions& opts) {
  require_order(n, 5, opts, "gts");
  CampaignReport rep = new_report("gts", n, opts);
  const auto& grid = opts.alpha_grid;
  const auto zero = alpha_index(grid, 0.0);
  const auto half = alpha_index(grid, 0.5);
  run_sharded(enumerate_trees(n, opts.max_order), opts.workers, rep,
              [&](const Tree& t, Shard& shard) {
    if (metrics(t).diameter < 4) return;
    shard.counters["trees"] += 1;
    const CanonicalCode code = canonical_code(t);
    const Radii base = complement_radii(t, grid, shard.audit);
    for (const GtsMove& m : enumerate_gts_moves(t)) {
      if (!is_proper(t, m)) continue;
      shard.counters["proper_moves"] += 1;
      const MoveRecord move = gts_record(t, m);
      const Tree image = gts(t, m);
      Radii after;
      try {
        after = complement_radii(image, grid, shard.audit);
      } catch (const Error& e) {
        shard.records.push_back(error_record({Theorem::GtsLambda, {}, {}}, t, move, e));
        continue;
      }
      auto add = [&](TheoremId id, double lhs, double rhs, const MatrixKind& kind) {
        CheckRecord r = make_check(std::move(id), code, move, lhs, rhs, CheckMode::Strict, opts.tol);
        dump_on_failure(r, t, image, kind);
        shard.records.push_back(std::move(r));
      };
      add({Theorem::GtsLambda, {}, {}}, after.lambda, base.lambda, DistanceKind{});
      add({Theorem::GtsMu, {}, {}}, after.mu, base.mu, SignlessLaplacianKind{});
      for (std::size_t k = 0; k < grid.size(); ++k) {
        add({Theorem::GtsRho, grid[k], {}}, after.rho[k], base.rho[k], DAlphaKind{grid[k]});
      }
      const double lambda_margin = after.lambda - base.lambda;
      const double mu_margin = after.mu - base.mu;
      if (zero) {
        shard.bump_max("consistency.rho0_vs_lambda",
                       std::abs((after.rho[*zero] - base.rho[*zero]) - lambda_margin));
      }
      if (half) {
        shard.bump_max("consistency.rho_half_vs_half_mu",
                       std::abs((after.rho[*half] - base.rho[*half]) - 0.5 * mu_margin));
      }
    }
  });
  return rep;
}

CampaignReport check_kelmans_thm1(int n, const CampaignOptions& opts) {
  require_order(n, 5, opts, "kelmans");
  CampaignReport rep = new_report("kelmans", n, opts);
  run_sharded(enumerate_trees(n, opts.max_order), opts.workers, rep,
              [&](const Tree& t, Shard& shard) {
    const TreeMetrics tm = metrics(t);
    if (tm.diameter < 4) return;
    shard.counters["trees"] += 1;
    const CanonicalCode code = canonical_code(t);
    const DistMatrix dm = build_matrix(t, DistanceKind{});
    const SpectralSummary base = evaluate(dm, shard.audit);
    const auto& x = base.perron;

    std::vector<std::pair<Vertex, Vertex>> oriented;
    for (const Edge& e : t.edges()) {
      if (std::abs(x[e.a] - x[e.b]) <= kPerronTieTol) {
        oriented.emplace_back(e.a, e.b);
        oriented.emplace_back(e.b, e.a);
        shard.counters["perron_ties"] += 1;
      } else if (x[e.a] > x[e.b]) {
        oriented.emplace_back(e.a, e.b);
      } else {
        oriented.emplace_back(e.b, e.a);
      }
    }
    for (const auto& [u, v] : oriented) {
      MoveRecord move;
      move.kind = MoveRecord::Kind::Kelmans;
      move.u = u;
      move.v = v;
      const Tree image = kelmans(t, {u, v});
      const bool fixed = t.degree(v) == 1;  // N(v) = {u}
      const TheoremId id{Theorem::KelmansThm1, {}, {}};
      try {
        const double after = evaluate(build_matrix(image, DistanceKind{}), shard.audit).radius;
        CheckRecord r = make_check(id, code, move, after, base.radius,
                                   fixed ? CheckMode::Equality : CheckMode::Strict, opts.tol);
        r.note = fixed ? "equality case" : "strict case";
        if (std::abs(x[u] - x[v]) <= kPerronTieTol) r.note += ", perron tie";
        dump_on_failure(r, t, image, DistanceKind{});
        shard.records.push_back(std::move(r));
      } catch (const Error& e) {
        shard.records.push_back(error_record(id, t, move, e));
      }
      if (fixed) continue;
      shard.records.push_back(make_check({Theorem::KelmansPendants, {}, {}}, code, move,
                                         image.pendant_count(), t.pendant_count() + 1,
                                         CheckMode::Exact, 0.0));
      const int diam_after = metrics(image).diameter;
      CheckRecord d = make_check({Theorem::KelmansDiameter, {}, {}}, code, move,
                                 diam_after, tm.diameter, CheckMode::Exact, 0.0);
      d.passed = d.margin == 0.0 || d.margin == -1.0;
      shard.records.push_back(std::move(d));
    }
  });
  return rep;
}

CampaignReport check_collapse_thm2(int n, const CampaignOptions& opts) {
  require_order(n, 5, opts, "collapse");
  CampaignReport rep = new_report("collapse", n, opts);
  run_sharded(enumerate_trees(n, opts.max_order), opts.workers, rep,
              [&](const Tree& t, Shard& shard) {
    if (metrics(t).diameter < 4) return;
    shard.counters["trees"] += 1;
    const CanonicalCode code = canonical_code(t);
    const double base = evaluate(build_matrix(t, DistanceKind{}), shard.audit).radius;
    for (const Edge& e : t.edges()) {
      if (t.is_pendant(e.a) || t.is_pendant(e.b)) {
        shard.counters["skipped_pendant_edges"] += 1;
        continue;
      }
      MoveRecord move;
      move.kind = MoveRecord::Kind::Edge;
      move.u = e.a;
      move.v = e.b;
      const Tree image = collapse_and_pendant(t, e);
      const TheoremId id{Theorem::CollapseThm2, {}, {}};
      try {
        const double after = evaluate(build_matrix(image, DistanceKind{}), shard.audit).radius;
        CheckRecord r = make_check(id, code, move, after, base, CheckMode::Strict, opts.tol);
        dump_on_failure(r, t, image, DistanceKind{});
        shard.records.push_back(std::move(r));
      } catch (const Error& e) {
        shard.records.push_back(error_record(id, t, move, e));
      }
    }
  });
  return rep;
}

CampaignReport check_minimality(int n, const CampaignOptions& opts) {
  require_order(n, 4, opts, "minimality");
  CampaignReport rep = new_report("minimality", n, opts);
  const auto& grid = opts.alpha_grid;
  const Tree path = Tree::path(n);
  const CanonicalCode path_code = canonical_code(path);
  const CanonicalCode star_code = canonical_code(Tree::star(n));

  std::vector<Tree> admissible;
  for (Tree& t : enumerate_trees(n, opts.max_order)) {
    if (canonical_code(t) != star_code) admissible.push_back(std::move(t));
  }
  const Radii reference = complement_radii(path, grid, rep.audit);

  // Radii of every admissible class, for the argmin facts.
  std::vector<Radii> all(admissible.size());
  run_sharded(admissible, opts.workers, rep, [&](const Tree& t, Shard& shard) {
    const std::size_t idx = static_cast<std::size_t>(&t - admissible.data());
    all[idx] = complement_radii(t, grid, shard.audit);
    const CanonicalCode code = canonical_code(t);
    if (code == path_code) return;
    auto add = [&](TheoremId id, double lhs, double rhs, const MatrixKind& kind) {
      CheckRecord r = make_check(std::move(id), code, std::nullopt, lhs, rhs,
                                 CheckMode::Strict, opts.tol);
      dump_on_failure(r, path, t, kind);
      shard.records.push_back(std::move(r));
    };
    add({Theorem::Minimality, {}, "lambda1"}, all[idx].lambda, reference.lambda, DistanceKind{});
    add({Theorem::Minimality, {}, "mu1"}, all[idx].mu, reference.mu, SignlessLaplacianKind{});
    for (std::size_t k = 0; k < grid.size(); ++k) {
      add({Theorem::Minimality, grid[k], "rho"}, all[idx].rho[k], reference.rho[k],
          DAlphaKind{grid[k]});
    }
  });

  auto argmin = [&](const std::string& key, auto value_of) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < all.size(); ++i)
      if (value_of(all[i]) < value_of(all[best])) best = i;
    rep.facts["argmin[" + key + "]"] = canonical_code(admissible[best]).hex();
  };
  argmin("lambda1", [](const Radii& r) { return r.lambda; });
  argmin("mu1", [](const Radii& r) { return r.mu; });
  for (std::size_t k = 0; k < grid.size(); ++k) {
    std::ostringstream key;
    key << "rho(" << grid[k] << ")";
    argmin(key.str(), [k](const Radii& r) { return r.rho[k]; });
  }
  rep.facts["path_code"] = path_code.hex();
  rep.metrics["admissible_classes"] = static_cast<double>(admissible.size());
  return rep;
}

CampaignReport check_identity(int n, const CampaignOptions& opts) {
  require_order(n, 4, opts, "identity");
  CampaignReport rep = new_report("identity", n, opts);
  run_sharded(enumerate_trees(n, opts.max_order), opts.workers, rep,
              [&](const Tree& t, Shard& shard) {
    const int diameter = metrics(t).diameter;
    if (diameter < 3) return;  // stars: complement disconnected
    const CanonicalCode code = canonical_code(t);
    const std::vector<Edge> bad = identity_mismatches(t);
    if (diameter >= 4) {
      shard.records.push_back(make_check({Theorem::Identity2AJI, {}, "exact"}, code,
                                         std::nullopt, static_cast<double>(bad.size()), 0.0,
                                         CheckMode::Exact, 0.0));
      return;
    }
    // Diameter 3 is a double star: the identity must fail exactly at the
    // pair of centers, which are 3 apart in the complement.
    std::vector<Vertex> hubs;
    for (Vertex v = 0; v < t.order(); ++v)
      if (t.degree(v) >= 2) hubs.push_back(v);
    CheckRecord r = make_check({Theorem::Identity2AJI, {}, "diam3_witness"}, code,
                               std::nullopt, static_cast<double>(bad.size()), 1.0,
                               CheckMode::Exact, 0.0);
    if (bad.size() == 1 && hubs.size() == 2) {
      const IntMatrix bfs = complement_distances(t);
      const IntMatrix formula = adjacency_formula(t);
      const Edge pair = bad.front();
      r.passed = pair.a == hubs[0] && pair.b == hubs[1] && bfs(pair.a, pair.b) == 3 &&
                 formula(pair.a, pair.b) == 2;
      r.note = "pair (" + std::to_string(pair.a) + "," + std::to_string(pair.b) +
               "): bfs " + std::to_string(bfs(pair.a, pair.b)) + " vs formula " +
               std::to_string(formula(pair.a, pair.b));
    } else {
      r.passed = false;
    }
    shard.records.push_back(std::move(r));
  });
  return rep;
}

CampaignReport check_counterexample(int n, const CampaignOptions& opts) {
  require_order(n, 6, opts, "counterexample");
  CampaignReport rep = new_report("counterexample", n, opts);
  const std::vector<CanonicalCode> images = one_step_collapse_images(n);
  const GtsPoset poset = build_poset(n, opts.max_order);
  const std::vector<bool> reachable =
      poset.reachable_from(poset.index_of(canonical_code(Tree::path(n))));
  rep.metrics["one_step_images"] = static_cast<double>(images.size());
  run_sharded(poset.trees, opts.workers, rep, [&](const Tree& t, Shard& shard) {
    if (t.pendant_count() != 3 || metrics(t).diameter > n - 3) return;
    shard.counters["classes_checked"] += 1;
    const CanonicalCode code = canonical_code(t);
    const bool in_images = std::binary_search(images.begin(), images.end(), code);
    const bool in_poset = reachable[poset.index_of(code)];
    CheckRecord r = make_check({Theorem::CounterexampleThm2, {}, {}}, code, std::nullopt,
                               (in_images ? 1.0 : 0.0) + (in_poset ? 0.0 : 1.0), 0.0,
                               CheckMode::Exact, 0.0);
    r.note = std::string(in_images ? "one-step collapse image" : "not a one-step collapse image") +
             (in_poset ? ", reachable from path" : ", unreachable from path");
    shard.records.push_back(std::move(r));
  });
  rep.metrics.try_emplace("classes_checked", 0.0);
  return rep;
}

CampaignReport check_poset(int n, const CampaignOptions& opts) {
  require_order(n, 4, opts, "poset");
  CampaignReport rep = new_report("poset", n, opts);
  const GtsPoset poset = build_poset(n, opts.max_order);
  const std::size_t path = poset.index_of(canonical_code(Tree::path(n)));
  const std::size_t star = poset.index_of(canonical_code(Tree::star(n)));
  const auto in_deg = poset.in_degrees();
  const auto out_deg = poset.out_degrees();
  const auto reachable = poset.reachable_from(path);

  for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
    CheckRecord minimal = make_check({Theorem::PosetMinimal, {}, {}}, poset.nodes[i],
                                     std::nullopt, static_cast<double>(in_deg[i]), 0.0,
                                     CheckMode::Exact, 0.0);
    minimal.passed = (in_deg[i] == 0) == (i == path);
    rep.records.push_back(std::move(minimal));
    CheckRecord maximal = make_check({Theorem::PosetMaximal, {}, {}}, poset.nodes[i],
                                     std::nullopt, static_cast<double>(out_deg[i]), 0.0,
                                     CheckMode::Exact, 0.0);
    maximal.passed = (out_deg[i] == 0) == (i == star);
    rep.records.push_back(std::move(maximal));
    rep.records.push_back(make_check({Theorem::PosetReachable, {}, {}}, poset.nodes[i],
                                     std::nullopt, reachable[i] ? 1.0 : 0.0, 1.0,
                                     CheckMode::Exact, 0.0));
  }
  for (const auto& [from, to] : poset.edges) {
    CheckRecord r = make_check({Theorem::PosetGrading, {}, "edge"}, poset.nodes[from],
                               std::nullopt,
                               poset.pendant_counts[to] - poset.pendant_counts[from], 1.0,
                               CheckMode::Exact, 0.0);
    r.note = "-> " + poset.nodes[to].hex();
    rep.records.push_back(std::move(r));
  }
  const auto [shortest, longest] = poset.path_length_range(path, star);
  rep.records.push_back(make_check({Theorem::PosetGrading, {}, "shortest_chain"},
                                   poset.nodes[path], std::nullopt, shortest, n - 3,
                                   CheckMode::Exact, 0.0));
  rep.records.push_back(make_check({Theorem::PosetGrading, {}, "longest_chain"},
                                   poset.nodes[path], std::nullopt, longest, n - 3,
                                   CheckMode::Exact, 0.0));
  rep.metrics["nodes"] = static_cast<double>(poset.nodes.size());
  rep.metrics["edges"] = static_cast<double>(poset.edges.size());
  rep.finalize();
  return rep;
}

}  // namespace gtshift::verify
