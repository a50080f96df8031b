#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace orbifold {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpecParseError : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct NotNormal : Error { using Error::Error; };
struct AmbiguousSelector : Error { using Error::Error; };
struct DegenerateInstance : Error { using Error::Error; };
struct NotACharacter : Error { using Error::Error; };
struct SplitFailure : Error { using Error::Error; };
struct CocycleInvalid : Error { using Error::Error; };
struct SchurViolation : Error { using Error::Error; };
struct NonIntegralFusion : Error { using Error::Error; };
struct NonIntegralMultiplicity : Error { using Error::Error; };
struct AxiomFailure : Error { using Error::Error; };
struct DescentFailure : Error { using Error::Error; };
struct YBEFailure : Error { using Error::Error; };
struct MatchFailure : Error { using Error::Error; };

struct ToleranceConfig {
  double eps_abs = 1e-9;
  double eps_rel = 1e-9;
  std::uint64_t rng_seed = 0;
};

inline bool approx_eq(double a, double b, const ToleranceConfig& tol) {
  return std::abs(a - b) <= tol.eps_abs + tol.eps_rel * std::max(std::abs(a), std::abs(b));
}

inline bool approx_eq(std::complex<double> a, std::complex<double> b, const ToleranceConfig& tol) {
  return std::abs(a - b) <= tol.eps_abs + tol.eps_rel * std::max(std::abs(a), std::abs(b));
}

// Stable string hash (FNV-1a), used to derive per-instance RNG streams so that
// the same config and instance spec always see the same random draws.
inline std::uint64_t stable_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Deterministic xorshift-based generator.  std::mt19937_64 would also be
// reproducible, but the distributions on top of it are not pinned by the
// standard, so we keep the whole chain explicit.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ull) {
    if (state_ == 0) state_ = 0x9e3779b97f4a7c15ull;
    next_u64();
    next_u64();
  }

  std::uint64_t next_u64() {
    std::uint64_t x = state_;
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    state_ = x;
    return x * 0x2545f4914f6cdd1dull;
  }

  // uniform in [-1, 1]
  double next_real() {
    return static_cast<double>(next_u64() >> 11) * (2.0 / 9007199254740992.0) - 1.0;
  }

  std::complex<double> next_complex() {
    double re = next_real();
    double im = next_real();
    return {re, im};
  }

  // uniform integer in [0, n)
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

 private:
  std::uint64_t state_;
};

}  // namespace orbifold
