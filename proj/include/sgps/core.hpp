#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sgps {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Guard used whenever a vector norm appears in a denominator.
inline constexpr double kNormEps = 1e-12;

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DegenerateInputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Parse failure in a text input; line is 1-based.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what_),
        line(line_) {}
};

/// v / max(|v|, eps). A zero vector maps to itself.
template <typename Derived>
Vector l2_normalize(const Eigen::MatrixBase<Derived>& v) {
  const double n = v.norm();
  return v / std::max(n, kNormEps);
}

/// Cosine similarity clamped to [-1, 1].
template <typename DerivedA, typename DerivedB>
double cosine_sim(const Eigen::MatrixBase<DerivedA>& u,
                  const Eigen::MatrixBase<DerivedB>& v) {
  if (u.size() != v.size()) {
    throw DimensionError("cosine_sim: length mismatch (" +
                         std::to_string(u.size()) + " vs " +
                         std::to_string(v.size()) + ")");
  }
  const double nu = u.norm();
  const double nv = v.norm();
  if (nu < kNormEps || nv < kNormEps) {
    throw DegenerateInputError("cosine_sim: zero vector");
  }
  const double s = u.dot(v) / (nu * nv);
  return std::clamp(s, -1.0, 1.0);
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  return m.allFinite();
}

}  // namespace sgps
