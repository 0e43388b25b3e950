#pragma once

#include <vector>

#include "moncat/fincat.hpp"

namespace moncat {

/// A functor between finite categories, stored as object and morphism maps.
/// Equality is extensional.
struct Functor {
  CatRef dom;
  CatRef cod;
  std::vector<ObjId> omap;
  std::vector<MorId> mmap;

  ObjId operator()(ObjId x) const { return omap[idx(x)]; }
  MorId operator()(MorId f) const { return mmap[idx(f)]; }

  friend bool operator==(const Functor& a, const Functor& b);
};

Functor identity_functor(const CatRef& c);
/// Diagrammatic composite: `compose(f, g)` applies f first.
Functor compose(const Functor& f, const Functor& g);
/// The unique functor into a category with one object and one morphism.
Functor to_terminal(const CatRef& c, const CatRef& terminal);
/// F x G between product categories (see product_category for numbering).
Functor product_functor(const Functor& f, const Functor& g, const CatRef& dom, const CatRef& cod);

/// Structural problems (wrong map sizes, dangling ids) are reported as such;
/// endpoint, identity and composition preservation as law violations.
LawReport check_functor_laws(const Functor& f);

struct NatTrans {
  Functor source;
  Functor target;
  std::vector<MorId> components;

  MorId operator[](ObjId x) const { return components[idx(x)]; }
  const CatRef& dom() const { return source.dom; }
  const CatRef& cod() const { return source.cod; }

  friend bool operator==(const NatTrans& a, const NatTrans& b) {
    return a.components == b.components && a.source == b.source && a.target == b.target;
  }
};

NatTrans identity_nat_trans(const Functor& f);
/// Componentwise s_x · t_x.
NatTrans vertical(const NatTrans& s, const NatTrans& t);
/// f ◁ t: components t_{f x}. Requires cod(f) == dom(t).
NatTrans whisker_left(const Functor& f, const NatTrans& t);
/// t ▷ h: components h(t_x). Requires cod(t) == dom(h).
NatTrans whisker_right(const NatTrans& t, const Functor& h);

/// Checks F f · t_y = t_x · G f for every f: x -> y.
LawReport check_naturality(const NatTrans& t);

/// Every natural transformation F => G, in lexicographic order of component
/// ids. Throws ResourceExceeded when the candidate count prod_x |hom(Fx,Gx)|
/// exceeds `bound`.
std::vector<NatTrans> enumerate_nat_trans(const Functor& f, const Functor& g, std::size_t bound = kDefaultWorkBound);

/// Every functor C -> D, ordered lexicographically by (omap, mmap). Throws
/// ResourceExceeded when the search visits more than `bound` partial maps.
std::vector<Functor> enumerate_functors(const CatRef& c, const CatRef& d, std::size_t bound = kDefaultWorkBound);

/// Precomposition with a fixed functor f: C -> D and target E, mapping
/// functors D -> E to functors C -> E. Objects g go to f·g, natural
/// transformations α to f ◁ α.
struct Precomposition {
  Functor along;
  CatRef target;

  Functor on_functor(const Functor& g) const;
  NatTrans on_nat_trans(const NatTrans& a) const;
};

inline Precomposition precomp_functor(const Functor& f, const CatRef& target) { return Precomposition{f, target}; }

/// True when both categories are the same object or have equal tables.
bool same_category(const CatRef& a, const CatRef& b);

}  // namespace moncat
