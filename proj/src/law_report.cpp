#include "moncat/law_report.hpp"

#include <algorithm>
#include <sstream>

namespace moncat {

void LawReport::structural(std::string law, std::vector<std::uint32_t> witness, std::string message) {
  add(Violation{ViolationKind::Structural, std::move(law), std::move(witness), std::move(message)});
}

void LawReport::violation(std::string law, std::vector<std::uint32_t> witness, std::string message) {
  add(Violation{ViolationKind::Law, std::move(law), std::move(witness), std::move(message)});
}

void LawReport::add(Violation v) {
  ++total_;
  if (v.kind == ViolationKind::Structural) ++structural_;
  if (items_.size() < cap_) items_.push_back(std::move(v));
}

void LawReport::append(const LawReport& other) {
  for (const auto& v : other.items_) add(v);
  // Count what the other report dropped at its own cap.
  const std::size_t dropped = other.total_ - other.items_.size();
  total_ += dropped;
}

bool LawReport::mentions(std::string_view law) const {
  return std::any_of(items_.begin(), items_.end(), [&](const Violation& v) { return v.law == law; });
}

std::string LawReport::summary(std::size_t max_lines) const {
  std::ostringstream os;
  std::size_t n = 0;
  for (const auto& v : items_) {
    if (n++ == max_lines) break;
    os << v << '\n';
  }
  if (total_ > std::min(max_lines, items_.size())) {
    os << "... " << (total_ - std::min(max_lines, items_.size())) << " more\n";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Violation& v) {
  os << (v.kind == ViolationKind::Structural ? "structural " : "") << v.law << " (";
  for (std::size_t i = 0; i < v.witness.size(); ++i) {
    if (i) os << ',';
    os << v.witness[i];
  }
  os << ')';
  if (!v.message.empty()) os << ": " << v.message;
  return os;
}

}  // namespace moncat
