#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "moncat/transport.hpp"

namespace moncat::io {

inline constexpr int kFormatVersion = 1;

/// Malformed document. `pointer()` is a JSON pointer to the offending value
/// ("" for the whole document, e.g. on truncated input).
class JsonError : public std::runtime_error {
 public:
  JsonError(std::string pointer, const std::string& message)
      : std::runtime_error((pointer.empty() ? std::string("(root)") : pointer) + ": " + message),
        pointer_(std::move(pointer)) {}

  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

// Documents look like {"format_version": 1, "kind": ..., "categories": [...],
// "monoidal": [...], "value": ...}. Categories and monoidal structures are
// stored once and referenced by index; pointer-equal or equal references are
// shared again after reading.

std::string to_json(const FinCat& c);
std::string to_json(const MonoidalCategory& m);
std::string to_json(const Functor& f);
std::string to_json(const NatTrans& t);
std::string to_json(const LaxMonoidalFunctor& f);
std::string to_json(const WeakEquivalence& w);
std::string to_json(const TransportedMonoidal& t);
std::string to_json(const Skeleton& s);

using Value =
    std::variant<CatRef, MonRef, Functor, NatTrans, LaxMonoidalFunctor, WeakEquivalence, TransportedMonoidal, Skeleton>;

struct Document {
  std::string kind;  // "category", "monoidal", "functor", "nat_trans", "lax_functor",
                     // "weak_equivalence", "transported_monoidal", "skeleton"
  Value value;
};

/// Fully faithful evidence of weak equivalences is recomputed, and a
/// non-fully-faithful functor is rejected. Skeleton targets must be skeletal.
Document from_json(std::string_view text);

/// from_json() requiring a specific kind.
template <class T>
T from_json_as(std::string_view text) {
  Document d = from_json(text);
  if (T* v = std::get_if<T>(&d.value)) return std::move(*v);
  throw JsonError("/kind", "unexpected kind '" + d.kind + "'");
}

}  // namespace moncat::io
