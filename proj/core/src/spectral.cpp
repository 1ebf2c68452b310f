#include "gtshift/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "gtshift/error.hpp"
#include "gtshift/metrics.hpp"

namespace gtshift {

std::string kind_name(const MatrixKind& kind) {
  if (std::holds_alternative<DistanceKind>(kind)) return "D";
  if (std::holds_alternative<SignlessLaplacianKind>(kind)) return "DQ";
  std::ostringstream ss;
  ss << "DAlpha(" << std::get<DAlphaKind>(kind).alpha << ")";
  return ss.str();
}

std::vector<double> transmissions(const IntMatrix& dist) {
  const int n = dist.order();
  std::vector<double> tr(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (dist(i, j) < 0) {
        throw Error(ErrorKind::InvalidMatrix, "negative distance entry");
      }
      if (dist(i, j) != dist(j, i)) {
        throw Error(ErrorKind::InvalidMatrix, "distance matrix is not symmetric");
      }
      tr[i] += dist(i, j);
    }
  }
  return tr;
}

DistMatrix from_distances(const IntMatrix& dist, MatrixKind kind, CanonicalCode source) {
  double alpha = 0.0;
  if (std::holds_alternative<SignlessLaplacianKind>(kind)) {
    alpha = 0.5;
  } else if (const auto* da = std::get_if<DAlphaKind>(&kind)) {
    if (!(da->alpha >= 0.0 && da->alpha < 1.0)) {
      std::ostringstream ss;
      ss << "alpha " << da->alpha << " outside [0, 1)";
      throw Error(ErrorKind::AlphaOutOfRange, ss.str());
    }
    alpha = da->alpha;
  }
  const std::vector<double> tr = transmissions(dist);
  const int n = dist.order();
  Matrix m(n);
  if (std::holds_alternative<SignlessLaplacianKind>(kind)) {
    // Tr + D, kept integral rather than 2 * D_{1/2}.
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m(i, j) = dist(i, j);
      m(i, i) += tr[i];
    }
  } else {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m(i, j) = (1.0 - alpha) * dist(i, j);
      m(i, i) += alpha * tr[i];
    }
  }
  return DistMatrix(std::move(m), kind, std::move(source));
}

DistMatrix build_matrix(const Tree& t, MatrixKind kind) {
  return from_distances(complement_distances(t), kind, canonical_code(t));
}

SpectralSummary spectral_radius(const Matrix& m, double tol, long max_iterations) {
  const int n = m.order();
  if (n == 0) throw Error(ErrorKind::InvalidMatrix, "empty matrix");
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n);
  double previous = std::numeric_limits<double>::quiet_NaN();
  for (long it = 1; it <= max_iterations; ++it) {
    for (int i = 0; i < n; ++i) {
      double acc = 0.0;
      const auto row = m.row(i);
      for (int j = 0; j < n; ++j) acc += row[j] * x[j];
      y[i] = acc;
    }
    double quotient = 0.0;
    for (int i = 0; i < n; ++i) quotient += x[i] * y[i];
    double residual = 0.0;
    for (int i = 0; i < n; ++i) {
      residual = std::max(residual, std::abs(y[i] - quotient * x[i]));
    }
    if (std::abs(quotient - previous) < tol && residual < tol) {
      return {quotient, x, residual, it};
    }
    double norm = 0.0;
    for (double v : y) norm += v * v;
    norm = std::sqrt(norm);
    if (norm == 0.0) {
      // x lies in the kernel; only possible for the zero matrix here.
      return {0.0, x, residual, it};
    }
    for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
    previous = quotient;
  }
  throw Error(ErrorKind::NoConvergence,
              "power iteration did not converge in " +
                  std::to_string(max_iterations) + " iterations");
}

double eig_oracle(const Matrix& input) {
  const int n = input.order();
  if (n == 0) throw Error(ErrorKind::InvalidMatrix, "empty matrix");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (input(i, j) != input(j, i)) {
        throw Error(ErrorKind::InvalidMatrix, "Jacobi oracle needs a symmetric matrix");
      }
    }
  }
  Matrix a = input;
  auto off_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };
  for (int sweep = 0; sweep < 100 && off_norm() >= kOracleOffNormTol; ++sweep) {
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }
  double largest = a(0, 0);
  for (int i = 1; i < n; ++i) largest = std::max(largest, a(i, i));
  return largest;
}

double rayleigh(const Matrix& m, std::span<const double> x) {
  const int n = m.order();
  if (static_cast<int>(x.size()) != n) {
    throw Error(ErrorKind::NonUnitVector, "vector length does not match the matrix");
  }
  double norm2 = 0.0;
  for (double v : x) norm2 += v * v;
  if (std::abs(std::sqrt(norm2) - 1.0) > kUnitNormTol) {
    throw Error(ErrorKind::NonUnitVector, "rayleigh quotient needs a unit vector");
  }
  double value = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto row = m.row(i);
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += row[j] * x[j];
    value += x[i] * acc;
  }
  return value;
}

}  // namespace gtshift
