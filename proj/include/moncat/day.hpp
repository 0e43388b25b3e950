#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "moncat/monoidal.hpp"
#include "moncat/presheaf.hpp"
#include "moncat/transport.hpp"

namespace moncat {

/// (h: c -> a⊗b, x in F(a), y in G(b)).
struct Triple {
  ObjId a, b;
  MorId h;
  std::uint32_t x, y;

  friend bool operator==(const Triple&, const Triple&) = default;
};

/// All triples at a fixed c, in encoding order (a, b, h in hom order, x, y),
/// partitioned by the zigzag relation. Each class is represented by its
/// smallest encoded triple and classes are numbered in representative order.
struct CoendTable {
  ObjId c;
  std::vector<Triple> triples;
  std::vector<std::uint32_t> class_of;
  std::vector<std::uint32_t> representative;
  std::vector<std::vector<std::uint32_t>> members;
  std::size_t generators = 0;

  std::size_t size() const noexcept { return representative.size(); }
  std::uint32_t class_at(const Triple& t) const { return class_of[index(t)]; }
  std::size_t index(const Triple& t) const;

  // encoding data
  std::size_t n = 0;
  std::vector<std::size_t> block_offset;  // per (a, b)
  std::vector<std::size_t> fsize, gsize;
  std::vector<std::uint32_t> hom_pos;
};

struct CoendOptions {
  std::size_t bound = kDefaultWorkBound;
  std::optional<std::uint64_t> shuffle_seed;  // generator application order
};

/// Throws ResourceExceeded when triples plus generators exceed the bound.
CoendTable coend_quotient(const MonoidalCategory& m, const Presheaf& f, const Presheaf& g, ObjId c,
                          const CoendOptions& opt = {});

/// F ⊗_Day G with the coend tables it was computed from (one per object).
struct DayProduct {
  Presheaf presheaf;
  std::vector<CoendTable> tables;
};

DayProduct day_product(const MonoidalCategory& m, const Presheaf& f, const Presheaf& g, const CoendOptions& opt = {});
Presheaf day_tensor(const MonoidalCategory& m, const Presheaf& f, const Presheaf& g, const CoendOptions& opt = {});

/// a ⊗_Day b: class of (h, x, y) |-> class of (h, a x, b y).
PresheafMap day_map(const DayProduct& source, const DayProduct& target, const PresheafMap& a, const PresheafMap& b);

struct PresheafIso {
  Presheaf source;
  Presheaf target;
  PresheafMap forward;
  PresheafMap inverse;
};

/// Naturality of both directions and mutual inverseness.
LawReport check_presheaf_iso(const PresheafIso& i);

/// Unitors and associator of ⊗_Day with unit y(I).
class DayStructure {
 public:
  explicit DayStructure(MonRef m, std::size_t bound = kDefaultWorkBound);

  const MonRef& monoidal() const noexcept { return m_; }
  const Presheaf& unit() const noexcept { return unit_; }
  DayProduct product(const Presheaf& f, const Presheaf& g) const;

  /// y(I) ⊗ F -> F: (h, f, y) |-> F(h·(f⊗id)·λ)(y).
  PresheafIso left_unitor(const Presheaf& f) const;
  /// F ⊗ y(I) -> F: (h, x, g) |-> F(h·(id⊗g)·ρ)(x).
  PresheafIso right_unitor(const Presheaf& f) const;
  /// (F ⊗ G) ⊗ K -> F ⊗ (G ⊗ K):
  /// (h, [h', x, y], z) |-> (h·(h'⊗id)·α, x, [id, y, z]).
  PresheafIso associator(const Presheaf& f, const Presheaf& g, const Presheaf& k) const;

 private:
  MonRef m_;
  std::size_t bound_;
  Presheaf unit_;
};

DayStructure day_structure_cells(const MonRef& m, std::size_t bound = kDefaultWorkBound);

/// y(x) ⊗_Day y(y) ≅ y(x⊗y): (h, f, g) |-> h·(f⊗g), inverse h |-> (h, id, id).
PresheafIso representability_witness(const DayStructure& day, ObjId x, ObjId y);

/// The full subcategory of representables with the Day structure carried to
/// representatives, and yon: C -> R strong monoidal (mu, eps identities).
/// Morphism k of R is the presheaf map matched to yon(k) after enumeration.
struct YonedaCompletion {
  MonRef monoidal;
  LaxMonoidalFunctor yon;
  std::vector<Presheaf> representables;
  std::vector<PresheafMap> maps;
};

/// Throws ResourceExceeded if the base has more than `max_morphisms`
/// morphisms or any enumeration exceeds `bound`.
YonedaCompletion restricted_yoneda_completion(const MonRef& m, std::size_t max_morphisms = 64,
                                              std::size_t bound = kDefaultWorkBound);

/// Rezk structure (transport of M along yon·K) against Day structure
/// (transport of the completion along K) on the skeleton of the
/// representables, compared by an identity-on-objects strong monoidal
/// functor lifted from yon·K.
struct DayComparison {
  YonedaCompletion completion;
  Skeleton skeleton;
  TransportedMonoidal rezk;
  TransportedMonoidal day;
  LaxMonoidalFunctor comparison;  // Rezk -> Day on the skeleton
  LawReport report;
};

DayComparison compare_day_vs_transport(const MonRef& m, std::size_t max_morphisms = 64,
                                       std::size_t bound = kDefaultWorkBound);

}  // namespace moncat
