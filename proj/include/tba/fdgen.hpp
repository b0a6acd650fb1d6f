#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace tba {

// Basic parameters of a triangular (inverse-lambda) fundamental diagram.
// Speeds in km/hr, densities in veh/km, r_mc dimensionless.
struct BasicParams {
  double v_free = 0.0;  // free-flow speed
  double v_cr = 0.0;    // critical speed (max speed of the congested branch)
  double w = 0.0;       // backward shock wave speed
  double d_jam = 0.0;   // jam density
  double r_mc = 0.0;    // capacity drop ratio (q_cr - q_max) / q_max

  void validate() const;  // throws StructuralError
};

// Coefficients of the two-branch flow -> travel-time mapping of one link.
//   uncongested branch: t(x) = t_free + alpha * x        on [0, q_cr]
//   congested branch:   t(x) = gamma + beta / x          on [delta, q_max]
struct LinkParams {
  double alpha = 0.0;   // hr per (veh/hr), slope of the uncongested branch
  double beta = 0.0;    // hr * veh/hr, congested-branch numerator
  double gamma = 0.0;   // hr, congested-branch intercept (negative)
  double t_free = 0.0;  // hr, free-flow travel time
  double q_max = 0.0;   // veh/hr, top flow of the congested branch
  double q_cr = 0.0;    // veh/hr, top flow of the uncongested branch
  // Derived quantities, populated by derive_link_params or the loader.
  double d_max = 0.0;  // veh/km, density at q_max
  double t_cr = 0.0;   // hr, travel time shared by both branches at their tops
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Closed sampling intervals for each basic parameter.
struct ParamRanges {
  Interval v_free{60.0, 80.0};
  Interval v_cr{40.0, 45.0};
  Interval w{15.0, 20.0};
  Interval d_jam{110.0, 145.0};
  Interval r_mc{0.05, 0.08};

  void validate() const;  // throws StructuralError
};

// Explicit-state generator so sampled fixtures replay bit-for-bit. The
// algorithm is pinned (mt19937_64, raw draws mapped to [0,1) without
// std::uniform_real_distribution, whose rounding is implementation-defined);
// the algorithm name is recorded next to the seed in generated files.
class ParamSampler {
 public:
  explicit ParamSampler(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  std::uint64_t seed() const { return seed_; }
  static const char* algorithm() { return "mt19937_64"; }

  // Interval mapping used for every draw, exposed so it can be checked
  // against hand values (zeta = 0.5 on [15,20] gives 17.5).
  static double map_to_interval(const Interval& iv, double zeta) {
    return iv.lo + (iv.hi - iv.lo) * zeta;
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

// Draws each basic parameter as lo + (hi - lo) * zeta, zeta uniform on [0,1).
// Field order is fixed: v_free, v_cr, w, d_jam, r_mc.
BasicParams sample_basic_params(const ParamRanges& ranges, ParamSampler& rng);

// Computes the travel-time coefficients of a link of the given length (km)
// from its fundamental-diagram basics. Branch continuity
// t_free + alpha*q_cr == gamma + beta/q_max == t_cr holds by construction.
LinkParams derive_link_params(const BasicParams& basic, double length_km);

enum class CheckSeverity { failure, warning };

struct ConsistencyCheck {
  std::string name;
  bool pass = false;
  double residual = 0.0;  // magnitude of the violation, 0 when pass
  CheckSeverity severity = CheckSeverity::failure;
  std::string detail;
};

struct ConsistencyReport {
  std::vector<ConsistencyCheck> checks;
  bool ok() const;     // no failed failure-severity checks
  bool clean() const;  // no failed checks at all
  std::string summary() const;
};

// Checks the mathematical identities of LinkParams (failures) and the
// reconstructed basic parameters against the configured ranges (warnings).
// continuity_tol absorbs print rounding when params come from a table.
ConsistencyReport verify_consistency(const LinkParams& p, double length_km,
                                     const ParamRanges& ranges = {},
                                     double continuity_tol = 1e-6);

}  // namespace tba
