#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "moncat/monoidal.hpp"

namespace moncat::dsl {

/// 1-based line and column (columns count code points).
struct Span {
  std::uint32_t line = 1;
  std::uint32_t column = 1;

  // Spans are metadata: they never take part in AST equality.
  friend bool operator==(const Span&, const Span&) { return true; }
  bool same_position(const Span& o) const { return line == o.line && column == o.column; }
};

enum class Severity { Error, Warning };

/// Codes starting with "E" are input errors; "L" codes are law failures of
/// well-formed input.
struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;
  std::string message;
  Span span;
};

std::string format(const Diagnostic& d, std::string_view file = {});

struct Name {
  std::string text;
  Span span;

  friend bool operator==(const Name&, const Name&) = default;
};

/// `morph f: a -> b;` or, with `identity` set, `id a = f;` naming the
/// identity of a. Morphism ids follow declaration order; identities without
/// an `id` declaration come first, in object order.
struct MorphDecl {
  Name name, src, tgt;
  bool identity = false;
  friend bool operator==(const MorphDecl&, const MorphDecl&) = default;
};

struct ComposeEq {
  Name f, g, h;
  friend bool operator==(const ComposeEq&, const ComposeEq&) = default;
};

enum class TensorKind { Auto, Objects, Morphisms };

struct TensorEq {
  TensorKind kind = TensorKind::Auto;
  Name left, right, result;
  friend bool operator==(const TensorEq&, const TensorEq&) = default;
};

/// `lunitor a = f`, `assoc a b c = f`, `mu a b = f`, `eps = f`, `at a = f`.
struct ComponentEq {
  std::vector<Name> args;
  Name value;
  friend bool operator==(const ComponentEq&, const ComponentEq&) = default;
};

struct MonoidalBlock {
  Span span;
  std::optional<Name> unit;
  std::vector<TensorEq> tensors;
  std::vector<ComponentEq> lunitors, runitors, assocs;
  friend bool operator==(const MonoidalBlock&, const MonoidalBlock&) = default;
};

struct CategoryAst {
  Name name;
  std::vector<Name> objects;
  std::vector<MorphDecl> morphisms;
  std::vector<ComposeEq> equations;
  std::optional<Span> derive;
  std::optional<MonoidalBlock> monoidal;
  friend bool operator==(const CategoryAst&, const CategoryAst&) = default;
};

struct MapEntry {
  Name from, to;
  friend bool operator==(const MapEntry&, const MapEntry&) = default;
};

struct FunctorAst {
  Name name;
  bool lax = false;
  Name dom, cod;
  std::vector<MapEntry> objects, morphisms;
  std::vector<ComponentEq> mu;
  std::optional<ComponentEq> eps;
  friend bool operator==(const FunctorAst&, const FunctorAst&) = default;
};

struct NatTransAst {
  Name name;
  Name source, target;
  std::vector<ComponentEq> components;
  friend bool operator==(const NatTransAst&, const NatTransAst&) = default;
};

struct CatSpecAst {
  std::vector<CategoryAst> categories;
  std::vector<FunctorAst> functors;
  std::vector<NatTransAst> nattrans;
  friend bool operator==(const CatSpecAst&, const CatSpecAst&) = default;
};

struct ParseResult {
  std::optional<CatSpecAst> ast;  // present iff there are no errors
  std::vector<Diagnostic> diagnostics;
};

/// Total: never throws on any byte input.
ParseResult parse(std::string_view text);

/// Elaborated values by block name.
struct Environment {
  std::map<std::string, CatRef> categories;
  std::map<std::string, MonRef> monoidal;
  std::map<std::string, Functor> functors;
  std::map<std::string, LaxMonoidalFunctor> lax;
  std::map<std::string, NatTrans> nattrans;
};

struct ElabResult {
  Environment env;
  std::vector<Diagnostic> diagnostics;
  /// Monoidal blocks that were well formed but failed a layer.
  std::map<std::string, LayerFailure> layer_failures;
  /// Functor, lax functor and nat-trans blocks failing their laws.
  std::map<std::string, LawReport> law_failures;

  bool ok() const;
  bool input_error() const;  // some "E" diagnostic
};

/// Categories named in `external` can be referenced by functor blocks.
ElabResult elaborate(const CatSpecAst& ast, const Environment& external = {});

/// parse() then elaborate(); parse diagnostics are returned as is.
ElabResult load(std::string_view text, const Environment& external = {});

/// Deterministic text. Declarations follow id order and every composite of
/// non-identities is listed; tensor entries and components forced by
/// singleton hom-sets are omitted.
std::string print_canonical(const FinCat& c, std::string_view name);
std::string print_canonical(const MonoidalCategory& m, std::string_view name);
std::string print_canonical(const Functor& f, std::string_view name, std::string_view dom, std::string_view cod);
std::string print_canonical(const LaxMonoidalFunctor& f, std::string_view name, std::string_view dom,
                            std::string_view cod);
std::string print_canonical(const Environment& env);

/// A name as it must be written: bare if it is a plain word, quoted otherwise.
std::string quote(std::string_view name);

}  // namespace moncat::dsl
