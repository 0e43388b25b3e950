#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "moncat/functor.hpp"

namespace moncat {

struct IsoWitness {
  MorId forward;
  MorId backward;

  friend bool operator==(const IsoWitness&, const IsoWitness&) = default;
};

/// All pairs (f: x -> y, g: y -> x) with f·g = id_x and g·f = id_y, ordered
/// by (f, g).
std::vector<IsoWitness> find_isos(const FinCat& c, ObjId x, ObjId y);
/// The two-sided inverse of f, if any.
std::optional<MorId> inverse_of(const FinCat& c, MorId f);
bool is_iso(const FinCat& c, MorId f);
bool is_valid_iso(const FinCat& c, IsoWitness w);

/// Inverse hom-set maps of a fully faithful functor: for each domain pair
/// (x, y), the preimage of every morphism F x -> F y.
class FfEvidence {
 public:
  FfEvidence() = default;
  explicit FfEvidence(std::size_t dom_objects) : n_(dom_objects), inverse_(dom_objects * dom_objects) {}

  void record(ObjId x, ObjId y, MorId image, MorId preimage);
  std::optional<MorId> preimage(ObjId x, ObjId y, MorId image) const;
  std::size_t dom_objects() const noexcept { return n_; }
  /// Entries for (x, y) sorted by image id.
  const std::vector<std::pair<MorId, MorId>>& entries(ObjId x, ObjId y) const { return inverse_[idx(x) * n_ + idx(y)]; }

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<std::pair<MorId, MorId>>> inverse_;
};

struct FullyFaithfulResult {
  bool fully_faithful = false;
  std::vector<std::pair<ObjId, ObjId>> failing_pairs;  // pairs where F is not a bijection on homs
  FfEvidence evidence;                                 // complete only when fully_faithful
};

FullyFaithfulResult is_fully_faithful(const Functor& f);

/// A fully faithful functor together with a chosen preimage s(d) for every
/// target object d and an isomorphism eta(d): F(s(d)) -> d.
struct WeakEquivalence {
  Functor functor;
  FfEvidence ff;
  std::vector<ObjId> section;
  std::vector<IsoWitness> eta;

  const CatRef& dom() const { return functor.dom; }
  const CatRef& cod() const { return functor.cod; }
  /// The unique c: x -> y with F c = k. Throws if k is not in the image.
  MorId preimage(ObjId x, ObjId y, MorId k) const;
};

struct SplitEsoResult {
  std::optional<WeakEquivalence> equivalence;
  std::vector<std::pair<ObjId, ObjId>> not_fully_faithful;
  std::vector<ObjId> unreachable;  // target objects with no isomorphic image

  bool ok() const noexcept { return equivalence.has_value(); }
};

/// Chooses s(d) and eta(d) by exhaustive search. A preimage with F x == d is
/// preferred (eta is then the identity); otherwise the smallest x admitting
/// an iso, with the smallest witness.
SplitEsoResult split_eso_witness(const Functor& f);

/// Checks the WeakEquivalence invariants: functor laws, evidence agreeing
/// with the functor, totality of the section, validity of every eta.
LawReport check_weak_equivalence(const WeakEquivalence& w);

/// W1 x W2 between the product categories `dom` = C1 x C2 and `cod` = D1 x D2.
WeakEquivalence product_weak_equivalence(const WeakEquivalence& a, const WeakEquivalence& b, const CatRef& dom,
                                         const CatRef& cod);

/// Diagrammatic composite (first a, then b).
WeakEquivalence compose_weak_equivalences(const WeakEquivalence& a, const WeakEquivalence& b);

/// A category in which isomorphic objects are equal.
class SkeletalCat {
 public:
  /// Throws std::invalid_argument if two distinct objects are isomorphic.
  explicit SkeletalCat(CatRef c);

  const CatRef& category() const noexcept { return cat_; }
  const FinCat& operator*() const noexcept { return *cat_; }
  const FinCat* operator->() const noexcept { return cat_.get(); }

 private:
  CatRef cat_;
};

/// Pairs of distinct isomorphic objects (empty iff skeletal).
std::vector<std::pair<ObjId, ObjId>> cross_isomorphic_pairs(const FinCat& c);
bool is_skeletal(const FinCat& c);

}  // namespace moncat
