#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace moncat {

// Objects and morphisms of a finite category are dense integer ids.
enum class ObjId : std::uint32_t {};
enum class MorId : std::uint32_t {};

constexpr std::size_t idx(ObjId x) noexcept { return static_cast<std::size_t>(x); }
constexpr std::size_t idx(MorId f) noexcept { return static_cast<std::size_t>(f); }
constexpr ObjId obj_id(std::size_t i) noexcept { return static_cast<ObjId>(static_cast<std::uint32_t>(i)); }
constexpr MorId mor_id(std::size_t i) noexcept { return static_cast<MorId>(static_cast<std::uint32_t>(i)); }

/// Default cap on brute-force enumeration work (candidate counts, coend triples).
inline constexpr std::size_t kDefaultWorkBound = 1'000'000;

/// Thrown when an enumeration would exceed its configured work bound.
class ResourceExceeded : public std::runtime_error {
 public:
  ResourceExceeded(const std::string& what, std::size_t needed, std::size_t bound)
      : std::runtime_error(what + ": needs " + std::to_string(needed) + " candidates, bound is " +
                           std::to_string(bound)),
        needed_(needed),
        bound_(bound) {}

  std::size_t needed() const noexcept { return needed_; }
  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t needed_;
  std::size_t bound_;
};

/// Multiplies without overflow, saturating at SIZE_MAX.
constexpr std::size_t saturating_mul(std::size_t a, std::size_t b) noexcept {
  if (a == 0 || b == 0) return 0;
  if (a > static_cast<std::size_t>(-1) / b) return static_cast<std::size_t>(-1);
  return a * b;
}

}  // namespace moncat
