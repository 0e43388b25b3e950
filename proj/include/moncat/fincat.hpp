#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "moncat/ids.hpp"
#include "moncat/law_report.hpp"

namespace moncat {

struct MorphismDecl {
  std::string name;
  ObjId src;
  ObjId tgt;

  friend bool operator==(const MorphismDecl&, const MorphismDecl&) = default;
};

/// A finite category given by tables.
///
/// Composition is diagrammatic: `then(f, g)` is "f, then g" and is defined
/// exactly when tgt(f) == src(g). The table is dense (|mor| x |mor|) and holds
/// -1 for undefined entries.
///
/// The constructor does not validate the category axioms, so malformed tables
/// can be represented and reported by check_category_laws(). Every other
/// operation assumes a category that passed that check.
class FinCat {
 public:
  static constexpr std::int32_t kUndefined = -1;

  FinCat() = default;
  FinCat(std::vector<std::string> objects, std::vector<MorphismDecl> morphisms, std::vector<MorId> identities,
         std::vector<std::int32_t> table);

  std::size_t num_objects() const noexcept { return objects_.size(); }
  std::size_t num_morphisms() const noexcept { return morphisms_.size(); }

  ObjId src(MorId f) const { return morphisms_[idx(f)].src; }
  ObjId tgt(MorId f) const { return morphisms_[idx(f)].tgt; }
  MorId identity(ObjId x) const { return identities_[idx(x)]; }
  bool is_identity(MorId f) const;

  /// Raw table lookup; nullopt when the entry is undefined or out of range.
  std::optional<MorId> compose(MorId f, MorId g) const;
  /// Composite f·g of a composable pair. Throws std::logic_error if undefined.
  MorId then(MorId f, MorId g) const;
  std::int32_t raw_entry(MorId f, MorId g) const { return table_[idx(f) * morphisms_.size() + idx(g)]; }

  /// Morphisms x -> y in increasing id order.
  std::span<const MorId> hom(ObjId x, ObjId y) const;

  const std::string& object_name(ObjId x) const { return objects_[idx(x)]; }
  const std::string& morphism_name(MorId f) const { return morphisms_[idx(f)].name; }
  std::optional<ObjId> find_object(std::string_view name) const;
  std::optional<MorId> find_morphism(std::string_view name) const;

  const std::vector<std::string>& object_names() const noexcept { return objects_; }
  const std::vector<MorphismDecl>& morphisms() const noexcept { return morphisms_; }
  const std::vector<MorId>& identities() const noexcept { return identities_; }
  const std::vector<std::int32_t>& table() const noexcept { return table_; }

  /// Copy with one table entry replaced (mutation testing, fixtures).
  FinCat with_entry(MorId f, MorId g, std::int32_t h) const;
  /// Copy with different display names; the tables are unchanged.
  FinCat renamed(std::vector<std::string> objects, std::vector<std::string> morphisms) const;

  /// Same tables, ignoring names.
  bool same_shape(const FinCat& other) const;
  friend bool operator==(const FinCat& a, const FinCat& b);

 private:
  void index_homs();

  std::vector<std::string> objects_;
  std::vector<MorphismDecl> morphisms_;
  std::vector<MorId> identities_;
  std::vector<std::int32_t> table_;
  // hom_offsets_[x*n+y] .. hom_offsets_[x*n+y+1] delimits hom(x,y) inside hom_items_.
  std::vector<std::uint32_t> hom_offsets_;
  std::vector<MorId> hom_items_;
};

using CatRef = std::shared_ptr<const FinCat>;

inline CatRef share(FinCat c) { return std::make_shared<const FinCat>(std::move(c)); }

/// Problems found while completing a composition table from equations.
struct BuildIssue {
  enum class Kind { NotComposable, WrongEndpoints, Conflict, Missing };
  Kind kind;
  MorId f;
  MorId g;
  std::size_t equation;  // index into the equation list; npos for Missing
};

struct BuildResult {
  std::optional<FinCat> category;
  std::vector<BuildIssue> issues;
};

/// Builds a category from objects, generating morphisms and composites.
/// Identities get ids 0..n-1 in object order and are named `id_<object>`;
/// declared morphisms follow in declaration order.
class CategoryBuilder {
 public:
  explicit CategoryBuilder(std::vector<std::string> objects);

  ObjId object(std::string_view name) const;
  MorId morphism(std::string name, ObjId src, ObjId tgt);
  MorId morphism(std::string name, std::string_view src, std::string_view tgt);
  MorId id(ObjId x) const { return mor_id(idx(x)); }
  MorId find(std::string_view name) const;
  /// Records the equation f·g = h. Returns the equation index.
  std::size_t compose(MorId f, MorId g, MorId h);

  /// Identity composites are always filled in. With `derive`, missing
  /// composites are closed under two forcing rules until a fixpoint:
  /// a singleton target hom-set, and associativity against known entries
  /// (f = p·q with q·g and p·(q·g) known). Forced values that disagree are
  /// reported as conflicts; nothing is ever guessed.
  BuildResult try_build(bool derive = false) const;
  /// try_build() that throws std::invalid_argument on any issue.
  FinCat build(bool derive = false) const;

  std::size_t num_morphisms() const noexcept { return morphisms_.size(); }

 private:
  std::vector<std::string> objects_;
  std::vector<MorphismDecl> morphisms_;
  std::vector<std::tuple<MorId, MorId, MorId>> equations_;
};

/// Validates every category axiom exhaustively. Structural violations
/// (dangling ids, entries on non-composable pairs, missing entries) are
/// reported distinctly from law violations.
LawReport check_category_laws(const FinCat& c);

/// Objects (x,y) are numbered x*|D.obj| + y, morphisms (f,g) as f*|D.mor| + g.
FinCat product_category(const FinCat& c, const FinCat& d);

inline ObjId pair_object(ObjId x, ObjId y, std::size_t right_objects) {
  return obj_id(idx(x) * right_objects + idx(y));
}
inline MorId pair_morphism(MorId f, MorId g, std::size_t right_morphisms) {
  return mor_id(idx(f) * right_morphisms + idx(g));
}

}  // namespace moncat
