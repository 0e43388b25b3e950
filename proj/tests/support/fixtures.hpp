#pragma once

#include <string>
#include <vector>

#include "moncat/monoidal.hpp"

namespace fixtures {

using namespace moncat;

CatRef t1();
CatRef z2d();
/// Walking isomorphism: objects a, b; id_a = 0, id_b = 1, f: a -> b = 2, g: b -> a = 3.
CatRef wi();
/// Objects 0a, 0b, 1a, 1b; a single morphism between any two objects of equal parity.
CatRef z2fat();
/// One object, morphisms e, s with s·s = e.
CatRef bz2();
/// One object, morphisms 1, t with t·t = t.
CatRef bidem();
/// Walking arrow 0 -> 1.
CatRef arrow();

/// The unique morphism x -> y; throws if the hom-set is not a singleton.
MorId unique(const FinCat& c, ObjId x, ObjId y);

MonRef mon_t1();
MonRef mon_z2d();      // xor, I = 0, identities
MonRef mon_z2fat();    // (x, y) -> (p(x) xor p(y))a, I = 0b
MonRef mon_bz2();      // tensor = group multiplication
MonRef mon_bidem();    // tensor = monoid multiplication
MonRef mon_arrow();    // max, I = 0

/// Monoidal structure on a category whose relevant hom-sets are singletons:
/// every component is the unique morphism of its type.
MonRef thin_monoidal(const CatRef& base, const std::vector<ObjId>& tensor_objects, ObjId unit);

struct NamedMonoidal {
  std::string name;
  MonRef m;
};

std::vector<NamedMonoidal> monoidal_fixtures();

/// Lax F: T1 -> arrow with F * = 1, mu = id, eps = the arrow 0 -> 1.
LaxMonoidalFunctor arrow_point();

/// Identity functor on B(Z/2) with mu = e and eps = s.
LaxMonoidalFunctor bz2_bad_eps();

/// Parity functor Z2FAT -> Z2D with identity witnesses.
LaxMonoidalFunctor parity();

}  // namespace fixtures
