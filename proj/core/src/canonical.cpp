#include "gtshift/canonical.hpp"

#include <algorithm>

#include "gtshift/error.hpp"

namespace gtshift {
namespace {

std::string rooted_code(const Tree& t, Vertex v, Vertex parent) {
  std::vector<std::string> children;
  for (Vertex c : t.neighbors(v)) {
    if (c != parent) children.push_back(rooted_code(t, c, v));
  }
  std::sort(children.begin(), children.end());
  std::string code = "(";
  for (const auto& c : children) code += c;
  code += ')';
  return code;
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string CanonicalCode::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (unsigned char c : bytes_) {
    out += kDigits[c >> 4];
    out += kDigits[c & 0xf];
  }
  return out;
}

CanonicalCode CanonicalCode::from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) {
    throw Error(ErrorKind::Parse, "odd-length hex canonical code");
  }
  std::string bytes;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    int hi = hex_value(hex[i]);
    int lo = hex_value(hex[i + 1]);
    if (hi < 0 || lo < 0) {
      throw Error(ErrorKind::Parse, "non-hex character in canonical code");
    }
    bytes += static_cast<char>(hi * 16 + lo);
  }
  return CanonicalCode(std::move(bytes));
}

std::vector<Vertex> centers(const Tree& t) {
  const int n = t.order();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    return all;
  }
  std::vector<int> degree(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex x : t.neighbors(leaf)) {
        if (--degree[x] == 1) next.push_back(x);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

CanonicalCode canonical_code(const Tree& t) {
  std::string best;
  for (Vertex c : centers(t)) {
    std::string code = rooted_code(t, c, -1);
    if (best.empty() || code < best) best = std::move(code);
  }
  return CanonicalCode(std::move(best));
}

}  // namespace gtshift
