#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "moncat/equivalence.hpp"
#include "moncat/functor.hpp"

namespace moncat {

/// A unitor: a natural transformation into the identity functor, together
/// with candidate inverse components. Iso-ness is checked in the laws layer.
struct Unitor {
  NatTrans forward;
  std::vector<MorId> inverse;

  friend bool operator==(const Unitor&, const Unitor&) = default;
};

/// Associator components alpha_{x,y,z}: (x⊗y)⊗z -> x⊗(y⊗z), indexed by
/// (x*n + y)*n + z, with candidate inverses.
struct AssociatorData {
  std::vector<MorId> forward;
  std::vector<MorId> inverse;

  friend bool operator==(const AssociatorData&, const AssociatorData&) = default;
};

/// Layers of a monoidal structure, in validation order.
enum class Layer { Base, Tensor, Unit, LeftUnitor, RightUnitor, Associator, Laws };

const char* layer_name(Layer l);

struct LayerFailure {
  Layer layer;
  LawReport report;
};

class LayerError : public std::runtime_error {
 public:
  explicit LayerError(LayerFailure f);
  const LayerFailure& failure() const noexcept { return failure_; }

 private:
  LayerFailure failure_;
};

struct MonoidalCategory {
  CatRef base;
  Functor tensor;  // base x base -> base
  ObjId unit;
  Unitor left;
  Unitor right;
  AssociatorData assoc;

  std::size_t n() const { return base->num_objects(); }
  ObjId operator()(ObjId x, ObjId y) const { return tensor.omap[idx(x) * n() + idx(y)]; }
  MorId operator()(MorId f, MorId g) const { return tensor.mmap[idx(f) * base->num_morphisms() + idx(g)]; }
  MorId alpha(ObjId x, ObjId y, ObjId z) const { return assoc.forward[(idx(x) * n() + idx(y)) * n() + idx(z)]; }
  MorId alpha_inv(ObjId x, ObjId y, ObjId z) const { return assoc.inverse[(idx(x) * n() + idx(y)) * n() + idx(z)]; }
  MorId lambda(ObjId x) const { return left.forward[x]; }
  MorId rho(ObjId x) const { return right.forward[x]; }
  MorId id(ObjId x) const { return base->identity(x); }

  friend bool operator==(const MonoidalCategory& a, const MonoidalCategory& b);
};

using MonRef = std::shared_ptr<const MonoidalCategory>;

inline MonRef share(MonoidalCategory m) { return std::make_shared<const MonoidalCategory>(std::move(m)); }

/// I ⊗ - and - ⊗ I as endofunctors of the base.
Functor left_tensor_functor(const CatRef& base, const Functor& tensor, ObjId unit);
Functor right_tensor_functor(const CatRef& base, const Functor& tensor, ObjId unit);

/// Validates the layers strictly in order and returns the first failure.
std::optional<LayerFailure> validate_layers(const CatRef& base, const Functor& tensor, ObjId unit, const Unitor& left,
                                            const Unitor& right, const AssociatorData& assoc);

/// validate_layers() that throws LayerError on failure.
MonoidalCategory assemble_monoidal(CatRef base, Functor tensor, ObjId unit, Unitor left, Unitor right,
                                   AssociatorData assoc);

/// Structure given as raw tables: tensor on objects indexed x*n + y, on
/// morphisms f*m + g; unitor components per object; associator components
/// indexed (x*n + y)*n + z. Inverse components are found by search (a
/// component without inverse keeps itself as placeholder, which the
/// validation then rejects). The tensor domain is a fresh product category.
struct MonoidalTables {
  std::vector<ObjId> tensor_objects;
  std::vector<MorId> tensor_morphisms;
  ObjId unit;
  std::vector<MorId> lambda;
  std::vector<MorId> rho;
  std::vector<MorId> alpha;
};

struct MonoidalParts {
  Functor tensor;
  Unitor left;
  Unitor right;
  AssociatorData assoc;
};

/// No validation beyond table sizes (std::invalid_argument).
MonoidalParts monoidal_parts(const CatRef& base, const MonoidalTables& t);
/// monoidal_parts() followed by assemble_monoidal().
MonoidalCategory monoidal_from_tables(const CatRef& base, const MonoidalTables& t);

/// Iso-ness of the structure cells, the triangle equality for every pair and
/// the pentagon equality for every quadruple. Witnesses name the objects.
LawReport check_monoidal_laws(const MonoidalCategory& m);

// ---------------------------------------------------------------------------

struct StrongData {
  std::vector<MorId> mu_inverse;
  MorId eps_inverse;

  friend bool operator==(const StrongData&, const StrongData&) = default;
};

/// A lax monoidal functor: mu_{x,y}: Fx ⊗ Fy -> F(x ⊗ y), eps: I -> F I.
struct LaxMonoidalFunctor {
  MonRef dom;
  MonRef cod;
  Functor functor;
  std::vector<MorId> mu;  // indexed x * |dom| + y
  MorId eps;
  std::optional<StrongData> strong;

  MorId mu_at(ObjId x, ObjId y) const { return mu[idx(x) * dom->n() + idx(y)]; }

  /// Extensional equality of functor, mu and eps (strong data ignored).
  friend bool operator==(const LaxMonoidalFunctor& a, const LaxMonoidalFunctor& b);
};

LaxMonoidalFunctor identity_lax_monoidal(const MonRef& m);

/// mu naturality, the left and right unitor laws and the associativity
/// hexagon; when strong data is present, its inverses are checked too.
LawReport check_lax_monoidal_functor(const LaxMonoidalFunctor& f);

struct StrongResult {
  bool strong = false;
  std::optional<StrongData> inverses;
};

StrongResult is_strong_monoidal(const LaxMonoidalFunctor& f);
/// Copy of f with synthesized inverse data; throws if f is not strong.
LaxMonoidalFunctor make_strong(const LaxMonoidalFunctor& f);

/// Diagrammatic composite: first f then g.
LaxMonoidalFunctor compose_lax_monoidal(const LaxMonoidalFunctor& f, const LaxMonoidalFunctor& g);

struct MonoidalNatTrans {
  LaxMonoidalFunctor source;
  LaxMonoidalFunctor target;
  NatTrans underlying;
};

/// Naturality plus tensor and unit compatibility.
LawReport check_monoidal_nat_trans(const LaxMonoidalFunctor& f, const LaxMonoidalFunctor& g, const NatTrans& t);
inline LawReport check_monoidal_nat_trans(const MonoidalNatTrans& t) {
  return check_monoidal_nat_trans(t.source, t.target, t.underlying);
}
/// Tensor and unit compatibility only; `t` is assumed natural.
bool is_monoidal_cell(const LaxMonoidalFunctor& f, const LaxMonoidalFunctor& g, const NatTrans& t);

/// All monoidal natural transformations f => g.
std::vector<NatTrans> enumerate_monoidal_nat_trans(const LaxMonoidalFunctor& f, const LaxMonoidalFunctor& g,
                                                   std::size_t bound = kDefaultWorkBound);

/// The full subcategory of a monoidal hom-category on a supplied list of lax
/// monoidal functors. Morphism k of `category` is `cells[k]`.
struct MonoidalHomCategory {
  MonRef dom;
  MonRef cod;
  std::vector<LaxMonoidalFunctor> objects;
  std::vector<NatTrans> cells;
  CatRef category;
};

/// Throws std::invalid_argument if a candidate fails its checks.
MonoidalHomCategory monoidal_hom_category(const MonRef& dom, const MonRef& cod,
                                          std::vector<LaxMonoidalFunctor> candidates,
                                          std::size_t bound = kDefaultWorkBound);

/// Precomposition with a lax monoidal functor h: C -> D between the
/// hom-categories over `candidates` (D -> E) and over their images (C -> E).
struct MonoidalPrecomp {
  MonoidalHomCategory source;
  MonoidalHomCategory target;
  Functor mapping;  // source.category -> target.category
  LawReport report;  // whiskered cells that failed to be monoidal
};

MonoidalPrecomp monoidal_precomp(const LaxMonoidalFunctor& h, const MonRef& target,
                                 std::vector<LaxMonoidalFunctor> candidates, std::size_t bound = kDefaultWorkBound);

}  // namespace moncat
