#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace moncat {

enum class ViolationKind {
  Structural,  // malformed data: dangling ids, wrong endpoints, missing table entries
  Law,         // well-formed data that fails an equation
};

struct Violation {
  ViolationKind kind;
  std::string law;                     // short tag, e.g. "associativity", "pentagon"
  std::vector<std::uint32_t> witness;  // the ids the violation is about
  std::string message;
};

/// Accumulates violations found by a checker. Keeps at most `cap` entries
/// but counts all of them.
class LawReport {
 public:
  explicit LawReport(std::size_t cap = 256) : cap_(cap) {}

  void structural(std::string law, std::vector<std::uint32_t> witness, std::string message = {});
  void violation(std::string law, std::vector<std::uint32_t> witness, std::string message = {});
  void add(Violation v);
  void append(const LawReport& other);

  bool empty() const noexcept { return total_ == 0; }
  bool ok() const noexcept { return total_ == 0; }
  std::size_t total() const noexcept { return total_; }
  bool has_structural() const noexcept { return structural_ > 0; }
  bool mentions(std::string_view law) const;
  const std::vector<Violation>& violations() const noexcept { return items_; }

  std::string summary(std::size_t max_lines = 10) const;

 private:
  std::size_t cap_;
  std::size_t total_ = 0;
  std::size_t structural_ = 0;
  std::vector<Violation> items_;
};

std::ostream& operator<<(std::ostream& os, const Violation& v);

}  // namespace moncat
