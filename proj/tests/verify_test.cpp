#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include <json.hpp>

#include "gtshift/error.hpp"
#include "gtshift/metrics.hpp"
#include "gtshift/spectral.hpp"
#include "gtshift/transforms.hpp"
#include "gtshift/verify.hpp"

using namespace gtshift;
using namespace gtshift::verify;

namespace {

// lambda_1 of the complement of T(1,1,2) minus that of P5, frozen from a
// numpy eigvalsh run on networkx Floyd-Warshall complement distances.
constexpr double kP5ShiftMargin = 0.5809650620847107;

const std::vector<int> kLegs222{2, 2, 2};

CampaignOptions fixed_time() {
  CampaignOptions o;
  o.timestamp = "2026-01-01T00:00:00Z";
  return o;
}

std::vector<const CheckRecord*> select(const CampaignReport& rep, Theorem th) {
  std::vector<const CheckRecord*> out;
  for (const CheckRecord& r : rep.records)
    if (r.id.theorem == th) out.push_back(&r);
  return out;
}

}  // namespace

TEST_CASE("make_check modes") {
  const TheoremId id{Theorem::GtsLambda, {}, {}};
  CHECK(make_check(id, {}, {}, 2.0, 1.0, CheckMode::Strict, 1e-9).passed);
  CHECK_FALSE(make_check(id, {}, {}, 1.0, 1.0, CheckMode::Strict, 1e-9).passed);
  CHECK(make_check(id, {}, {}, 1.0 + 1e-12, 1.0, CheckMode::Equality, 1e-9).passed);
  CHECK_FALSE(make_check(id, {}, {}, 1.1, 1.0, CheckMode::Equality, 1e-9).passed);
  CHECK(make_check(id, {}, {}, 3.0, 3.0, CheckMode::Exact, 0.0).passed);
  CHECK_FALSE(make_check(id, {}, {}, 3.0, 2.0, CheckMode::Exact, 0.0).passed);
  CHECK(make_check(id, {}, {}, 3.0, 2.0, CheckMode::Exact, 0.0).margin == 1.0);
}

TEST_CASE("theorem ids render with alpha and qualifier") {
  CHECK(TheoremId{Theorem::GtsRho, 0.25, {}}.to_string() == "GTS_RHO(0.25)");
  CHECK(TheoremId{Theorem::Minimality, {}, "mu1"}.to_string() == "MINIMALITY[mu1]");
  CHECK(TheoremId{Theorem::Identity2AJI, {}, {}}.to_string() == "IDENTITY_2AJI");
}

TEST_CASE("gts campaign at n = 5 reproduces the pinned P5 margin") {
  const Tree p5 = Tree::path(5);
  const Tree image = gts(p5, make_gts_move(p5, 1, 3));
  const double oracle_margin = eig_oracle(build_matrix(image, DistanceKind{})) -
                               eig_oracle(build_matrix(p5, DistanceKind{}));
  CHECK(std::abs(oracle_margin - kP5ShiftMargin) <= 1e-10);

  const CampaignReport rep = check_gts_monotonicity(5, fixed_time());
  CHECK(rep.passed());
  const auto lambda = select(rep, Theorem::GtsLambda);
  // Every proper shift of P5 lands on T(1,1,2).
  REQUIRE(lambda.size() == 6);
  for (const CheckRecord* r : lambda) {
    CHECK(r->tree_code == canonical_code(p5));
    CHECK(std::abs(r->margin - kP5ShiftMargin) <= 1e-10);
    CHECK(r->move->proper);
  }
}

TEST_CASE("gts campaign: alpha = 0 duplicates lambda, alpha = 1/2 halves mu") {
  const CampaignReport rep = check_gts_monotonicity(7, fixed_time());
  CHECK(rep.passed());
  std::map<std::pair<CanonicalCode, MoveRecord>, double> lambda, mu, rho0, rho_half;
  for (const CheckRecord& r : rep.records) {
    const auto key = std::pair{r.tree_code, *r.move};
    if (r.id.theorem == Theorem::GtsLambda) lambda[key] = r.margin;
    if (r.id.theorem == Theorem::GtsMu) mu[key] = r.margin;
    if (r.id.theorem == Theorem::GtsRho && r.id.alpha == 0.0) rho0[key] = r.margin;
    if (r.id.theorem == Theorem::GtsRho && r.id.alpha == 0.5) rho_half[key] = r.margin;
  }
  REQUIRE(!lambda.empty());
  for (const auto& [key, m] : lambda) {
    CHECK(std::abs(rho0.at(key) - m) <= 1e-12);
    CHECK(std::abs(rho_half.at(key) - 0.5 * mu.at(key)) <= 1e-12);
  }
  CHECK(rep.metrics.at("consistency.rho0_vs_lambda") <= 1e-12);
  CHECK(rep.metrics.at("consistency.rho_half_vs_half_mu") <= 1e-12);
}

TEST_CASE("campaigns reject orders outside their range") {
  CHECK_THROWS_AS(check_gts_monotonicity(4), Error);
  CHECK_THROWS_AS(check_gts_monotonicity(13), Error);
  CHECK_THROWS_AS(check_kelmans_thm1(4), Error);
  CHECK_THROWS_AS(check_collapse_thm2(4), Error);
  CHECK_THROWS_AS(check_minimality(3), Error);
  CHECK_THROWS_AS(check_counterexample(5), Error);
  CHECK_THROWS_AS(build_poset(3), Error);
}

TEST_CASE("kelmans campaign: equality exactly for leaves, ties take both sides") {
  const CampaignReport rep = check_kelmans_thm1(6, fixed_time());
  CHECK(rep.passed());
  CHECK(rep.metrics.at("perron_ties") >= 1.0);
  bool saw_tie = false, saw_equal = false, saw_strict = false;
  for (const CheckRecord* r : select(rep, Theorem::KelmansThm1)) {
    if (r->note.find("equality") != std::string::npos) {
      saw_equal = true;
      CHECK(std::abs(r->margin) <= 1e-9);
    } else {
      saw_strict = true;
      CHECK(r->margin > 1e-9);
    }
    if (r->note.find("tie") != std::string::npos) {
      saw_tie = true;
      const auto both = std::count_if(rep.records.begin(), rep.records.end(), [&](const CheckRecord& o) {
        return o.id.theorem == Theorem::KelmansThm1 && o.tree_code == r->tree_code &&
               o.move->u == r->move->v && o.move->v == r->move->u;
      });
      CHECK(both == 1);
    }
  }
  CHECK(saw_tie);
  CHECK(saw_equal);
  CHECK(saw_strict);
  CHECK_FALSE(select(rep, Theorem::KelmansPendants).empty());
  CHECK_FALSE(select(rep, Theorem::KelmansDiameter).empty());
}

TEST_CASE("collapse campaign covers every non-pendant edge") {
  const CampaignReport rep = check_collapse_thm2(7, fixed_time());
  CHECK(rep.passed());
  std::size_t expected = 0;
  for (const Tree& t : enumerate_trees(7)) {
    if (metrics(t).diameter < 4) continue;
    for (const Edge& e : t.edges()) expected += (t.degree(e.a) >= 2 && t.degree(e.b) >= 2);
  }
  CHECK(rep.records.size() == expected);
}

TEST_CASE("minimality campaign") {
  const CampaignReport four = check_minimality(4, fixed_time());
  CHECK(four.records.empty());
  CHECK(four.facts.at("argmin[lambda1]") == canonical_code(Tree::path(4)).hex());

  const CampaignReport seven = check_minimality(7, fixed_time());
  CHECK(seven.passed());
  std::set<CanonicalCode> compared;
  for (const CheckRecord& r : seven.records) compared.insert(r.tree_code);
  CHECK(compared.size() == 9);
  CHECK(seven.records.size() == 9 * (2 + kDefaultAlphaGrid.size()));
  for (const auto& [key, code] : seven.facts) {
    if (key.rfind("argmin", 0) == 0) CHECK(code == canonical_code(Tree::path(7)).hex());
  }
}

TEST_CASE("identity campaign records the diameter-3 witnesses") {
  const CampaignReport six = check_identity(6, fixed_time());
  CHECK(six.passed());
  const CanonicalCode s22 = canonical_code(Tree::double_star(2, 2));
  const auto it = std::find_if(six.records.begin(), six.records.end(),
                               [&](const CheckRecord& r) { return r.tree_code == s22; });
  REQUIRE(it != six.records.end());
  CHECK(it->id.qualifier == "diam3_witness");
  CHECK(it->lhs == 1.0);
  CHECK(it->note.find("bfs 3 vs formula 2") != std::string::npos);

  const CampaignReport four = check_identity(4, fixed_time());
  REQUIRE(four.records.size() == 1);
  CHECK(four.records[0].tree_code == canonical_code(Tree::path(4)));
  CHECK(four.records[0].passed);
}

TEST_CASE("counterexample campaign") {
  const CampaignReport seven = check_counterexample(7, fixed_time());
  REQUIRE(seven.records.size() == 1);
  CHECK(seven.records[0].tree_code == canonical_code(Tree::spider(kLegs222)));
  CHECK(seven.records[0].passed);
  // No 6-vertex tree has 3 pendants and diameter <= 3.
  const CampaignReport six = check_counterexample(6, fixed_time());
  CHECK(six.records.empty());
  CHECK(six.metrics.at("classes_checked") == 0.0);
}

TEST_CASE("poset at n = 4 and n = 7") {
  const GtsPoset four = build_poset(4);
  CHECK(four.nodes.size() == 2);
  REQUIRE(four.edges.size() == 1);
  CHECK(four.nodes[four.edges[0].first] == canonical_code(Tree::path(4)));
  CHECK(four.nodes[four.edges[0].second] == canonical_code(Tree::star(4)));

  const GtsPoset seven = build_poset(7);
  CHECK(seven.nodes.size() == 11);
  const std::size_t path = seven.index_of(canonical_code(Tree::path(7)));
  const std::size_t star = seven.index_of(canonical_code(Tree::star(7)));
  CHECK(seven.sources() == std::vector<std::size_t>{path});
  CHECK(seven.sinks() == std::vector<std::size_t>{star});
  const auto reach = seven.reachable_from(path);
  CHECK(std::all_of(reach.begin(), reach.end(), [](bool b) { return b; }));
  for (const auto& [from, to] : seven.edges) {
    CHECK(from != to);
    CHECK(seven.pendant_counts[to] == seven.pendant_counts[from] + 1);
  }
  CHECK(seven.path_length_range(path, star) == std::pair{4, 4});

  const std::string dot = seven.to_dot();
  CHECK(dot.rfind("digraph gts_poset_n7 {", 0) == 0);
  CHECK(dot.find("P7\\n") != std::string::npos);
  CHECK(dot.find("K1,6\\n") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '>') == static_cast<long>(seven.edges.size()));
}

TEST_CASE("poset grading: chains from path to star have length n - 3") {
  for (int n = 4; n <= 10; ++n) {
    const CampaignReport rep = check_poset(n, fixed_time());
    CHECK(rep.passed());
  }
}

TEST_CASE("failures are recorded with matrices, not thrown") {
  CampaignOptions opts = fixed_time();
  opts.tol = 1.0;  // larger than any margin at n = 5
  opts.alpha_grid = {0.5};
  const CampaignReport rep = check_gts_monotonicity(5, opts);
  CHECK_FALSE(rep.passed());
  CHECK(rep.failed() > 0);
  for (const CheckRecord& r : rep.records) {
    if (r.passed) continue;
    REQUIRE(r.matrices.size() == 2);
    CHECK(r.matrices[0].entries.order() == 5);
  }
  const auto json = nlohmann::json::parse(to_json({rep}));
  CHECK(json[0]["passed"] == false);
  CHECK(json[0]["records"][0].contains("matrices"));
}

TEST_CASE("reports are deterministic modulo timestamp and worker count") {
  CampaignOptions one = fixed_time();
  CampaignOptions many = fixed_time();
  many.workers = 3;
  const std::string a = to_json({check_gts_monotonicity(8, one), check_kelmans_thm1(8, one)});
  const std::string b = to_json({check_gts_monotonicity(8, many), check_kelmans_thm1(8, many)});
  CHECK(a == b);
  CHECK(to_csv({check_collapse_thm2(8, one)}) == to_csv({check_collapse_thm2(8, many)}));
}

TEST_CASE("report serialization") {
  const CampaignReport rep = check_gts_monotonicity(6, fixed_time());
  const auto json = nlohmann::json::parse(to_json({rep}));
  REQUIRE(json.is_array());
  const auto& j = json[0];
  CHECK(j["campaign"] == "gts");
  CHECK(j["n"] == 6);
  CHECK(j["tol"] == 1e-9);
  CHECK(j["timestamp"] == "2026-01-01T00:00:00Z");
  CHECK(j["tool_version"] == std::string(tool_version()));
  CHECK(j["alpha_grid"].size() == kDefaultAlphaGrid.size());
  CHECK(j["records"].size() == rep.records.size());
  const auto& move = j["records"][0]["move"];
  for (const char* key : {"u", "v", "path", "w", "proper"}) CHECK(move.contains(key));
  std::size_t checked = 0;
  for (const auto& [id, s] : j["summary"].items()) checked += s["checked"].get<std::size_t>();
  CHECK(checked == rep.records.size());

  const std::string csv = to_csv({rep});
  CHECK(csv.rfind("theorem_id,tree_code,move,lhs,rhs,margin,passed\n", 0) == 0);
  CHECK(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) ==
        rep.records.size() + 1);

  MoveRecord edge;
  edge.kind = MoveRecord::Kind::Edge;
  edge.u = 1;
  edge.v = 2;
  CHECK(move_json(edge) == R"({"edge":[1,2]})");
}

TEST_CASE("records are sorted by theorem, tree code and move") {
  const CampaignReport rep = check_gts_monotonicity(7, fixed_time());
  CHECK(std::is_sorted(rep.records.begin(), rep.records.end(),
                       [](const CheckRecord& a, const CheckRecord& b) {
                         return std::tie(a.id, a.tree_code, a.move) <
                                std::tie(b.id, b.tree_code, b.move);
                       }));
}
