#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "gtshift/tree.hpp"

namespace gtshift {

/// Isomorphism-class identifier of a tree: the AHU parenthesis string of the
/// tree rooted at its center ('(' opens a vertex, ')' closes it). For a
/// bicentral tree the lexicographically smaller of the two rootings is used.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string bytes) : bytes_(std::move(bytes)) {}

  static CanonicalCode from_hex(std::string_view hex);

  const std::string& bytes() const noexcept { return bytes_; }
  std::string hex() const;
  bool empty() const noexcept { return bytes_.empty(); }

  auto operator<=>(const CanonicalCode&) const = default;

 private:
  std::string bytes_;
};

CanonicalCode canonical_code(const Tree& t);

/// One or two centers, ascending.
std::vector<Vertex> centers(const Tree& t);

inline bool isomorphic(const Tree& a, const Tree& b) {
  return a.order() == b.order() && canonical_code(a) == canonical_code(b);
}

}  // namespace gtshift
