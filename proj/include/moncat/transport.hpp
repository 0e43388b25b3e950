#pragma once

#include <optional>
#include <vector>

#include "moncat/equivalence.hpp"
#include "moncat/monoidal.hpp"

namespace moncat {

/// A skeleton D of C together with the weak equivalence H: C -> D.
struct Skeleton {
  SkeletalCat skeleton;
  WeakEquivalence h;
};

/// Objects of D are the isomorphism classes of C, represented by their
/// smallest member; hom_D(d, d') = hom_C(rep d, rep d'). H sends f: x -> y to
/// e_x^{-1} · f · e_y, where e_x: x -> rep(x) is the smallest iso witness.
Skeleton skeletalize(const CatRef& c);

/// A functor G with an isomorphism W·G => G0.
struct LiftedFunctor {
  Functor functor;
  NatTrans iso;
  std::vector<MorId> iso_inverse;
};

/// G(d) = G0(s d); G(k) = G0 of the preimage of eta(d) · k · eta(d')^{-1}.
LiftedFunctor lift_functor_along(const WeakEquivalence& w, const Functor& g0);

/// The lifted tensor on D with mu: (H x H)·⊗̂ => ⊗·H.
struct TransportedTensor {
  Functor tensor;
  NatTrans mu;  // indexed by pairs of source objects
  std::vector<MorId> mu_inverse;
  std::size_t source_objects = 0;

  MorId mu_at(ObjId x, ObjId y) const { return mu.components[idx(x) * source_objects + idx(y)]; }
  MorId mu_inverse_at(ObjId x, ObjId y) const { return mu_inverse[idx(x) * source_objects + idx(y)]; }
};

TransportedTensor transport_tensor(const WeakEquivalence& w, const MonoidalCategory& m);

struct TransportedUnit {
  ObjId unit;
  MorId eps;  // identity on the unit
};

TransportedUnit transport_unit(const WeakEquivalence& w, ObjId unit);

/// H·(Î ⊗̂ -) => (I ⊗ -)·H (left) or H·(- ⊗̂ Î) => (- ⊗ I)·H (right), with
/// inverse components.
struct PretensorIso {
  NatTrans forward;
  std::vector<MorId> inverse;
};

PretensorIso lift_pretensor_iso(const WeakEquivalence& w, const MonoidalCategory& m, const TransportedTensor& t,
                                bool left = true);

/// Unitors on D whose H-whiskered images are the pretensor iso followed by
/// the unitors of C.
std::pair<Unitor, Unitor> transport_unitors(const WeakEquivalence& w, const MonoidalCategory& m,
                                            const TransportedTensor& t);

AssociatorData transport_associator(const WeakEquivalence& w, const MonoidalCategory& m, const TransportedTensor& t);

struct TransportedMonoidal {
  MonRef monoidal;
  LaxMonoidalFunctor h;  // strong
  TransportedTensor tensor;
};

/// Transports all structure along w. The target of w must be skeletal
/// (std::invalid_argument otherwise). Throws LayerError if the assembled
/// structure fails a layer.
TransportedMonoidal transport_monoidal(const WeakEquivalence& w, const MonRef& m);

/// Lax structure on G: D -> E from one on H·G. `h` must be strong and have
/// underlying functor w.functor.
LaxMonoidalFunctor lift_lax_structure(const WeakEquivalence& w, const LaxMonoidalFunctor& h, const Functor& g,
                                      const MonRef& e, const std::vector<MorId>& mu_hg, MorId eps_hg);

/// A lax monoidal functor G: D -> E with a monoidal iso H·G => F.
struct Factorization {
  LaxMonoidalFunctor g;
  NatTrans iso;
  std::vector<MorId> iso_inverse;
  LawReport report;  // empty iff g is lax monoidal and iso is a monoidal iso
};

Factorization factor_through(const WeakEquivalence& w, const LaxMonoidalFunctor& h, const LaxMonoidalFunctor& f);

struct PairCount {
  std::size_t first, second;  // candidate indices
  std::size_t cells_d;        // monoidal cells G1 => G2
  std::size_t cells_c;        // monoidal cells H·G1 => H·G2
  bool bijective;
};

struct PrecompReport {
  std::vector<std::size_t> invalid_candidates;
  std::vector<std::size_t> invalid_lifts;
  std::vector<std::size_t> non_strong_candidates;  // excluded in the strong variant
  std::vector<std::size_t> non_strong_lifts;
  std::vector<PairCount> pairs;
  std::vector<std::pair<std::size_t, Factorization>> factorizations;  // keyed by lift index
  LawReport failures;

  bool ok() const noexcept;
};

/// (a) whiskering by H is a bijection on monoidal cells for every pair of
/// valid candidates D -> E; (b) every valid lax functor C -> E in `lifts`
/// factors through H up to a verified monoidal iso. With `strong`, only
/// strong functors take part and each factor must be strong.
PrecompReport verify_precomp_equivalence(const WeakEquivalence& w, const LaxMonoidalFunctor& h, const MonRef& e,
                                         const std::vector<LaxMonoidalFunctor>& candidates,
                                         const std::vector<LaxMonoidalFunctor>& lifts, bool strong = false,
                                         std::size_t bound = kDefaultWorkBound);

/// Every lax monoidal functor C -> E (brute force over functors, mu and eps).
std::vector<LaxMonoidalFunctor> enumerate_lax_monoidal(const MonRef& c, const MonRef& e,
                                                       std::size_t bound = kDefaultWorkBound);

}  // namespace moncat
