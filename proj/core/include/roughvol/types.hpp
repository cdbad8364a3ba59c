#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "roughvol/errors.hpp"

namespace roughvol {

/// Hurst parameter H of the Riemann-Liouville fBM. Valid range (0, 1/2];
/// H = 1/2 is the Brownian degeneration used in sanity checks.
class HurstParam {
 public:
  explicit HurstParam(double h) : h_(h) {
    if (!(h > 0.0) || h > 0.5)
      throw std::domain_error("HurstParam: H must be in (0, 1/2], got " + std::to_string(h));
  }
  double value() const { return h_; }

 private:
  double h_;
};

/// Haar grid level N; the grid mesh is eps = 2^-N. Capped to keep the
/// 2^N coefficient vectors in memory.
class HaarLevel {
 public:
  static constexpr int default_max_level = 20;

  explicit HaarLevel(int n, int n_max = default_max_level) : n_(n) {
    if (n < 0) throw config_error("HaarLevel: N must be nonnegative");
    if (n > n_max)
      throw config_error("HaarLevel: N=" + std::to_string(n) + " exceeds cap N_max=" +
                         std::to_string(n_max));
  }
  int level() const { return n_; }
  double eps() const { return std::ldexp(1.0, -n_); }
  std::size_t cell_count() const { return std::size_t{1} << n_; }

 private:
  int n_;
};

/// Which renormalization enters the corrected integrals: the eps-periodic
/// diagonal function C^eps(t), or its diverging cell mean C_eps.
enum class RenormScheme { NonConstant, Constant };

inline const char* to_string(RenormScheme s) {
  return s == RenormScheme::NonConstant ? "nonconstant" : "constant";
}

/// Trapezoidal rule resolution: d nodes per Haar cell, both endpoints
/// included, so the step is delta = 2^-N / (d-1).
struct QuadratureConfig {
  int points_per_cell = 2;

  explicit QuadratureConfig(int d) : points_per_cell(d) {
    if (d < 2) throw config_error("QuadratureConfig: d must be >= 2");
  }

  double delta(HaarLevel lvl) const { return lvl.eps() / (points_per_cell - 1); }

  /// Nearest d so that the cell step matches a global delta (the paper
  /// reports resolution as delta, e.g. 2^-17).
  static QuadratureConfig from_delta(HaarLevel lvl, double target_delta) {
    if (!(target_delta > 0.0)) throw config_error("QuadratureConfig: delta must be > 0");
    double ratio = lvl.eps() / target_delta;
    long long d = std::llround(ratio) + 1;
    if (d < 2) d = 2;
    if (d > (1 << 22)) throw config_error("QuadratureConfig: delta too small for this level");
    return QuadratureConfig(static_cast<int>(d));
  }
};

/// Dyadic cell index floor(t * 2^N). Multiplying by a power of two is
/// exact in binary floating point, so grid points land in their own cell
/// without any epsilon guard.
inline std::int64_t cell_floor(double t, int level) {
  return static_cast<std::int64_t>(std::floor(std::ldexp(t, level)));
}

}  // namespace roughvol
