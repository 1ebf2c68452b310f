#include "gtshift/tree_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gtshift/canonical.hpp"
#include "gtshift/error.hpp"

namespace gtshift {
namespace {

bool next_content_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos) return true;
  }
  return false;
}

[[noreturn]] void parse_fail(int lineno, const std::string& msg) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": " + msg);
}

}  // namespace

Tree read_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_content_line(in, line, lineno)) parse_fail(lineno, "missing vertex count");
  int n = 0;
  {
    std::istringstream ss(line);
    std::string extra;
    if (!(ss >> n) || (ss >> extra)) parse_fail(lineno, "expected a single integer n");
  }
  if (n < 1) parse_fail(lineno, "vertex count must be positive");
  std::vector<Edge> edges;
  while (next_content_line(in, line, lineno)) {
    std::istringstream ss(line);
    Edge e{};
    std::string extra;
    if (!(ss >> e.a >> e.b) || (ss >> extra)) parse_fail(lineno, "expected \"u v\"");
    edges.push_back(e);
  }
  return Tree::from_edges(n, edges);
}

void write_edge_list(std::ostream& out, const Tree& t) {
  out << t.order() << '\n';
  for (const Edge& e : t.edges()) out << e.a << ' ' << e.b << '\n';
}

void write_tree_set(std::ostream& out, std::span<const Tree> trees) {
  for (const Tree& t : trees) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : t.edges()) edges.push_back({e.a, e.b});
    nlohmann::ordered_json row;
    row["n"] = t.order();
    row["edges"] = std::move(edges);
    row["code"] = canonical_code(t).hex();
    out << row.dump() << '\n';
  }
}

std::vector<Tree> read_tree_set(std::istream& in) {
  std::vector<Tree> trees;
  std::string line;
  int lineno = 0;
  while (next_content_line(in, line, lineno)) {
    nlohmann::json row;
    try {
      row = nlohmann::json::parse(line);
      std::vector<Edge> edges;
      for (const auto& e : row.at("edges")) {
        edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
      }
      Tree t = Tree::from_edges(row.at("n").get<int>(), edges);
      if (row.contains("code") &&
          CanonicalCode::from_hex(row["code"].get<std::string>()) != canonical_code(t)) {
        parse_fail(lineno, "canonical code does not match the edges");
      }
      trees.push_back(std::move(t));
    } catch (const nlohmann::json::exception& e) {
      parse_fail(lineno, e.what());
    }
  }
  return trees;
}

}  // namespace gtshift
