#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace hilbert {

/// Halton radical-inverse in the given base.
inline double halton(std::uint64_t index, unsigned base) {
  double f = 1.0, r = 0.0;
  std::uint64_t i = index + 1;  // skip the origin
  while (i > 0) {
    f /= base;
    r += f * static_cast<double>(i % base);
    i /= base;
  }
  return r;
}

/// Deterministic low-discrepancy direction on S^{dim-1} (dim = 1, 2 or 3).
inline Eigen::VectorXd halton_direction(std::uint64_t index, int dim) {
  Eigen::VectorXd w(dim);
  if (dim == 1) {
    w[0] = (index % 2 == 0) ? 1.0 : -1.0;
  } else if (dim == 2) {
    double phi = 2.0 * M_PI * halton(index, 2);
    w << std::cos(phi), std::sin(phi);
  } else if (dim == 3) {
    double z = 2.0 * halton(index, 2) - 1.0;
    double phi = 2.0 * M_PI * halton(index, 3);
    double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    w << rho * std::cos(phi), rho * std::sin(phi), z;
  } else {
    // Box-Muller off Halton coordinates; adequate for the few higher-d uses.
    for (int i = 0; i < dim; i += 2) {
      double u1 = std::min(1.0 - 1e-16, std::max(1e-16, halton(index, 2 + 3 * i)));
      double u2 = halton(index, 5 + 3 * i);
      double r = std::sqrt(-2.0 * std::log(u1));
      w[i] = r * std::cos(2.0 * M_PI * u2);
      if (i + 1 < dim) w[i + 1] = r * std::sin(2.0 * M_PI * u2);
    }
    w.normalize();
    return w;
  }
  return w;
}

/// Seeded RNG with a bit-stable uniform; distributions are hand-rolled so
/// outputs do not depend on the standard library's implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() {  // [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(uniform() * (hi - lo + 1));
  }
  double normal() {
    double u1 = std::max(uniform(), 1e-300);
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }
  Eigen::VectorXd direction(int dim) {
    Eigen::VectorXd w(dim);
    do {
      for (int i = 0; i < dim; ++i) w[i] = normal();
    } while (w.norm() < 1e-12);
    w.normalize();
    return w;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hilbert
