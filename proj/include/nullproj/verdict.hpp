#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nullproj {

enum class ZeroStatus { ZeroExact, Nonzero, ZeroProbable };

inline const char* to_string(ZeroStatus s) {
  switch (s) {
    case ZeroStatus::ZeroExact: return "ZERO_EXACT";
    case ZeroStatus::Nonzero: return "NONZERO";
    case ZeroStatus::ZeroProbable: return "ZERO_PROBABLE";
  }
  return "?";
}

inline ZeroStatus zero_status_from_string(const std::string& s) {
  if (s == "ZERO_EXACT") return ZeroStatus::ZeroExact;
  if (s == "NONZERO") return ZeroStatus::Nonzero;
  if (s == "ZERO_PROBABLE") return ZeroStatus::ZeroProbable;
  throw std::invalid_argument("unknown verdict status: " + s);
}

// Result of a projects-to-zero decision. NONZERO always carries either a
// sampled witness point (chart coordinates) with its winding, or a surviving
// overlay cell; ZERO_EXACT only ever comes from exact procedures.
struct ZeroVerdict {
  ZeroStatus status = ZeroStatus::ZeroProbable;
  std::string method;
  long samples_used = 0;
  std::optional<std::vector<double>> witness_point;
  std::optional<long long> witness_winding;
  std::optional<std::string> witness_cell;

  bool zero() const { return status != ZeroStatus::Nonzero; }
};

struct ZeroOptions {
  long budget = 256;
  std::uint64_t seed = 0xb0b5eedULL;
};

}  // namespace nullproj
