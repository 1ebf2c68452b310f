#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "gtshift/canonical.hpp"
#include "gtshift/matrix.hpp"
#include "gtshift/tree.hpp"

namespace gtshift {

inline constexpr double kIterationTol = 1e-12;
inline constexpr long kMaxIterations = 1'000'000;
inline constexpr double kOracleOffNormTol = 1e-12;
inline constexpr double kUnitNormTol = 1e-12;

struct DistanceKind {
  bool operator==(const DistanceKind&) const = default;
};
struct SignlessLaplacianKind {
  bool operator==(const SignlessLaplacianKind&) const = default;
};
/// alpha * Tr + (1 - alpha) * D, alpha in [0, 1).
struct DAlphaKind {
  double alpha;
  bool operator==(const DAlphaKind&) const = default;
};

using MatrixKind = std::variant<DistanceKind, SignlessLaplacianKind, DAlphaKind>;

std::string kind_name(const MatrixKind& kind);

/// A distance-type matrix of a tree complement (or of a supplied distance
/// matrix), tagged with its kind and the canonical code of its source tree.
class DistMatrix {
 public:
  DistMatrix(Matrix entries, MatrixKind kind, CanonicalCode source)
      : entries_(std::move(entries)), kind_(kind), source_(std::move(source)) {}

  int order() const noexcept { return entries_.order(); }
  const Matrix& entries() const noexcept { return entries_; }
  const MatrixKind& kind() const noexcept { return kind_; }
  const CanonicalCode& source_code() const noexcept { return source_; }
  double operator()(int i, int j) const { return entries_(i, j); }

 private:
  Matrix entries_;
  MatrixKind kind_;
  CanonicalCode source_;
};

/// Row sums of a distance matrix. Rejects asymmetric or negative input.
std::vector<double> transmissions(const IntMatrix& dist);

/// Builds the matrix of `kind` over a given distance matrix.
DistMatrix from_distances(const IntMatrix& dist, MatrixKind kind,
                          CanonicalCode source = {});

/// D, D^Q or D_alpha of the complement of t.
DistMatrix build_matrix(const Tree& t, MatrixKind kind);

struct SpectralSummary {
  double radius = 0.0;
  std::vector<double> perron;
  double residual = 0.0;  // max-norm of M x - radius x
  long iterations = 0;
};

/// Power iteration from the all-ones vector. Stops once two successive
/// Rayleigh quotients differ by less than tol and the residual is below tol.
SpectralSummary spectral_radius(const Matrix& m, double tol = kIterationTol,
                                long max_iterations = kMaxIterations);
inline SpectralSummary spectral_radius(const DistMatrix& m,
                                       double tol = kIterationTol,
                                       long max_iterations = kMaxIterations) {
  return spectral_radius(m.entries(), tol, max_iterations);
}

/// Largest eigenvalue by cyclic Jacobi rotations. Independent of
/// spectral_radius.
double eig_oracle(const Matrix& m);
inline double eig_oracle(const DistMatrix& m) { return eig_oracle(m.entries()); }

/// x^T M x for a unit vector x.
double rayleigh(const Matrix& m, std::span<const double> x);
inline double rayleigh(const DistMatrix& m, std::span<const double> x) {
  return rayleigh(m.entries(), x);
}

}  // namespace gtshift
