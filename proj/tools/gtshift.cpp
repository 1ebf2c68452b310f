// gtshift: enumerate trees, inspect tree complements, run verification
// campaigns and export the generalized-tree-shift poset.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gtshift/canonical.hpp"
#include "gtshift/enumerate.hpp"
#include "gtshift/error.hpp"
#include "gtshift/metrics.hpp"
#include "gtshift/spectral.hpp"
#include "gtshift/tree_io.hpp"
#include "gtshift/verify.hpp"

namespace {

using namespace gtshift;

constexpr int kExitPassed = 0;
constexpr int kExitFailed = 1;
constexpr int kExitRejected = 2;
constexpr int kExitInternal = 3;

// Invalid user input; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OrderRange {
  int lo = 0;
  int hi = 0;
};

// "7" or "5..10".
OrderRange parse_range(const std::string& text) {
  auto parse_int = [&](std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw UsageError("invalid --n value '" + text + "'");
    }
    return value;
  };
  const auto dots = text.find("..");
  OrderRange r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_int(text);
  } else {
    r.lo = parse_int(std::string_view(text).substr(0, dots));
    r.hi = parse_int(std::string_view(text).substr(dots + 2));
  }
  if (r.lo > r.hi) throw UsageError("empty --n range '" + text + "'");
  return r;
}

std::vector<double> parse_alphas(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double a = 0.0;
    try {
      a = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw UsageError("invalid alpha '" + item + "'");
    if (!(a >= 0.0 && a < 1.0)) {
      throw UsageError("alpha must lie in [0, 1), got " + item);
    }
    out.push_back(a);
  }
  if (out.empty()) throw UsageError("--alpha needs at least one value");
  return out;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path);
}

struct Options {
  std::string n = "5..10";
  std::string alpha = "0,0.25,0.5,0.75,0.9";
  double tol = verify::kMarginTol;
  int workers = 1;
  std::string out;
  std::string format = "json";
  std::string selector;
  std::string tree_file;
};

int cmd_enumerate(const Options& opt) {
  const OrderRange r = parse_range(opt.n);
  if (r.lo < 1 || r.hi > kDefaultMaxOrder) {
    throw UsageError("--n must lie in [1, " + std::to_string(kDefaultMaxOrder) + "]");
  }
  std::ostringstream text;
  for (int n = r.lo; n <= r.hi; ++n) write_tree_set(text, enumerate_trees(n));
  write_output(opt.out, text.str());
  return kExitPassed;
}

int cmd_inspect(const Options& opt) {
  std::ifstream in(opt.tree_file);
  if (!in) throw UsageError("cannot open " + opt.tree_file);
  const Tree t = read_edge_list(in);
  const std::vector<double> alphas = parse_alphas(opt.alpha);
  const TreeMetrics m = metrics(t);

  std::cout << "n: " << t.order() << '\n';
  std::cout << "diameter: " << m.diameter << '\n';
  std::cout << "pendants:";
  for (Vertex v : m.pendant_vertices) std::cout << ' ' << v;
  std::cout << '\n';
  std::cout << "code: " << canonical_code(t).hex() << '\n';

  IntMatrix dist;
  try {
    dist = complement_distances(t);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ComplementDisconnected) throw;
    std::cerr << "complement disconnected\n";
    return kExitRejected;
  }
  std::cout << "identity A+J-I holds: " << (dist == adjacency_formula(t) ? "yes" : "no") << '\n';
  std::cout << std::setprecision(12);
  std::cout << "lambda1: " << spectral_radius(from_distances(dist, DistanceKind{})).radius << '\n';
  std::cout << "mu1: " << spectral_radius(from_distances(dist, SignlessLaplacianKind{})).radius
            << '\n';
  for (double a : alphas) {
    std::cout << "rho(" << a << "): "
              << spectral_radius(from_distances(dist, DAlphaKind{a})).radius << '\n';
  }
  return kExitPassed;
}

int cmd_verify(const Options& opt) {
  static const std::vector<std::string> kSelectors{
      "gts", "kelmans", "collapse", "minimality", "identity", "counterexample", "poset"};
  std::vector<std::string> selected;
  if (opt.selector == "all") {
    selected = kSelectors;
  } else if (std::find(kSelectors.begin(), kSelectors.end(), opt.selector) != kSelectors.end()) {
    selected = {opt.selector};
  } else {
    throw UsageError("unknown theorem selector '" + opt.selector + "'");
  }
  const OrderRange r = parse_range(opt.n);
  if (r.lo < 4 || r.hi > kDefaultMaxOrder) {
    throw UsageError("--n must lie in [4, " + std::to_string(kDefaultMaxOrder) + "]");
  }
  if (!(opt.tol > 0.0)) throw UsageError("--tol must be positive");
  if (opt.workers < 1) throw UsageError("--workers must be at least 1");

  verify::CampaignOptions copts;
  copts.alpha_grid = parse_alphas(opt.alpha);
  copts.tol = opt.tol;
  copts.workers = opt.workers;

  struct Campaign {
    std::string name;
    int min_order;
    verify::CampaignReport (*run)(int, const verify::CampaignOptions&);
  };
  const std::vector<Campaign> campaigns{
      {"gts", 5, verify::check_gts_monotonicity}, {"kelmans", 5, verify::check_kelmans_thm1},
      {"collapse", 5, verify::check_collapse_thm2}, {"minimality", 4, verify::check_minimality},
      {"identity", 4, verify::check_identity},    {"counterexample", 6, verify::check_counterexample},
      {"poset", 4, verify::check_poset}};

  std::vector<verify::CampaignReport> reports;
  for (const Campaign& c : campaigns) {
    if (std::find(selected.begin(), selected.end(), c.name) == selected.end()) continue;
    for (int n = std::max(r.lo, c.min_order); n <= r.hi; ++n) {
      reports.push_back(c.run(n, copts));
      const verify::CampaignReport& rep = reports.back();
      std::cerr << rep.campaign << " n=" << n << ": " << rep.records.size() << " records, "
                << rep.failed() << " failed\n";
      for (const auto& [id, s] : rep.summary) {
        std::cerr << "  " << id << ": checked " << s.checked << ", failed " << s.failed
                  << ", min margin " << s.min_margin << '\n';
      }
    }
  }

  if (opt.format == "csv") {
    write_output(opt.out, verify::to_csv(reports));
  } else {
    write_output(opt.out, verify::to_json(reports));
  }
  std::size_t failed = 0;
  for (const auto& rep : reports) failed += rep.failed();
  std::cerr << (failed == 0 ? "all checks passed" : std::to_string(failed) + " checks failed")
            << '\n';
  return failed == 0 ? kExitPassed : kExitFailed;
}

int cmd_poset(const Options& opt) {
  const OrderRange r = parse_range(opt.n);
  if (r.lo != r.hi) throw UsageError("poset takes a single order");
  if (r.lo < 4 || r.lo > kDefaultMaxOrder) {
    throw UsageError("--n must lie in [4, " + std::to_string(kDefaultMaxOrder) + "]");
  }
  const verify::GtsPoset poset = verify::build_poset(r.lo);
  write_output(opt.out, poset.to_dot());
  auto describe = [&](const std::vector<std::size_t>& ids) {
    std::string s;
    for (std::size_t i : ids) s += (s.empty() ? "" : " ") + poset.nodes[i].hex();
    return s;
  };
  std::ostream& log = (opt.out.empty() || opt.out == "-") ? std::cerr : std::cout;
  log << "nodes: " << poset.nodes.size() << "\nedges: " << poset.edges.size()
      << "\nsources: " << describe(poset.sources()) << "\nsinks: " << describe(poset.sinks())
      << "\npath: " << canonical_code(Tree::path(r.lo)).hex()
      << "\nstar: " << canonical_code(Tree::star(r.lo)).hex() << '\n';
  return kExitPassed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized tree shift and distance spectra of tree complements"};
  app.require_subcommand(1);
  Options opt;

  auto* enumerate = app.add_subcommand("enumerate", "Write one JSONL line per tree class");
  enumerate->add_option("--n", opt.n, "Order k or range a..b")->required();
  enumerate->add_option("--out", opt.out, "Output path (default stdout)");

  auto* inspect = app.add_subcommand("inspect", "Complement spectra of one edge-list tree");
  inspect->add_option("tree_file", opt.tree_file, "Edge-list file")->required();
  inspect->add_option("--alpha", opt.alpha, "Comma-separated alphas in [0, 1)");

  auto* verify_cmd = app.add_subcommand("verify", "Run verification campaigns");
  verify_cmd->add_option("selector", opt.selector,
                         "gts | kelmans | collapse | minimality | identity | counterexample | "
                         "poset | all")
      ->required();
  verify_cmd->add_option("--n", opt.n, "Order k or range a..b (default 5..10)");
  verify_cmd->add_option("--alpha", opt.alpha, "Comma-separated alphas in [0, 1)");
  verify_cmd->add_option("--tol", opt.tol, "Strict-inequality margin");
  verify_cmd->add_option("--workers", opt.workers, "Worker threads");
  verify_cmd->add_option("--out", opt.out, "Report path (default stdout)");
  verify_cmd->add_option("--format", opt.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* poset = app.add_subcommand("poset", "Export the proper-GTS poset as DOT");
  poset->add_option("--n", opt.n, "Order")->required();
  poset->add_option("--out", opt.out, "DOT output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPassed : kExitRejected;
  }

  try {
    if (*enumerate) return cmd_enumerate(opt);
    if (*inspect) return cmd_inspect(opt);
    if (*verify_cmd) return cmd_verify(opt);
    if (*poset) return cmd_poset(opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRejected;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::NoConvergence ? kExitInternal : kExitRejected;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}
