#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "ebc/error.hpp"

namespace ebc {

/// Real tridiagonal matrix. Row i holds lower[i] (column i-1), diag[i] and
/// upper[i] (column i+1); lower[0] and upper[n-1] are ignored.
struct Tridiagonal {
  std::vector<double> lower, diag, upper;

  Tridiagonal() = default;
  explicit Tridiagonal(std::size_t n) : lower(n, 0.0), diag(n, 0.0), upper(n, 0.0) {}

  std::size_t size() const { return diag.size(); }

  /// Turns row i into the identity row u_i = rhs_i.
  void pin(std::size_t i) {
    lower[i] = 0.0;
    upper[i] = 0.0;
    diag[i] = 1.0;
  }

  template <class T>
  std::vector<T> multiply(std::span<const T> x) const {
    const std::size_t n = size();
    std::vector<T> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      T s = diag[i] * x[i];
      if (i > 0) s += lower[i] * x[i - 1];
      if (i + 1 < n) s += upper[i] * x[i + 1];
      y[i] = s;
    }
    return y;
  }
};

/// Thomas elimination, factored once and reused across right-hand sides.
/// Intended for the diagonally dominant M-matrices the solvers assemble;
/// a vanishing pivot throws SolverError.
class TridiagonalLU {
public:
  TridiagonalLU() = default;
  explicit TridiagonalLU(const Tridiagonal& a) : lower_(a.lower), upper_(a.upper), inv_pivot_(a.size()) {
    const std::size_t n = a.size();
    double prev_c = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double pivot = a.diag[i] - (i > 0 ? a.lower[i] * prev_c : 0.0);
      if (pivot == 0.0 || !std::isfinite(pivot)) throw SolverError("singular tridiagonal system");
      inv_pivot_[i] = 1.0 / pivot;
      prev_c = (i + 1 < n ? a.upper[i] : 0.0) * inv_pivot_[i];
      upper_[i] = prev_c;
    }
  }

  std::size_t size() const { return inv_pivot_.size(); }

  /// Solves in place.
  template <class T>
  void solve(std::span<T> x) const {
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0) x[i] -= lower_[i] * x[i - 1];
      x[i] *= inv_pivot_[i];
    }
    for (std::size_t i = n - 1; i-- > 0;) x[i] -= upper_[i] * x[i + 1];
  }

private:
  std::vector<double> lower_, upper_, inv_pivot_;
};

} // namespace ebc
