#include "moncat/functor.hpp"

#include <stdexcept>

namespace moncat {

namespace {

std::uint32_t u32(std::size_t v) { return static_cast<std::uint32_t>(v); }

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

}  // namespace

bool same_category(const CatRef& a, const CatRef& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool operator==(const Functor& a, const Functor& b) {
  return a.omap == b.omap && a.mmap == b.mmap && same_category(a.dom, b.dom) && same_category(a.cod, b.cod);
}

Functor identity_functor(const CatRef& c) {
  Functor f{c, c, {}, {}};
  for (std::size_t x = 0; x < c->num_objects(); ++x) f.omap.push_back(obj_id(x));
  for (std::size_t m = 0; m < c->num_morphisms(); ++m) f.mmap.push_back(mor_id(m));
  return f;
}

Functor compose(const Functor& f, const Functor& g) {
  require(same_category(f.cod, g.dom), "compose: codomain of first functor differs from domain of second");
  Functor h{f.dom, g.cod, {}, {}};
  h.omap.reserve(f.omap.size());
  h.mmap.reserve(f.mmap.size());
  for (ObjId x : f.omap) h.omap.push_back(g(x));
  for (MorId m : f.mmap) h.mmap.push_back(g(m));
  return h;
}

Functor to_terminal(const CatRef& c, const CatRef& terminal) {
  require(terminal->num_objects() == 1 && terminal->num_morphisms() == 1, "to_terminal: target is not terminal");
  return Functor{c, terminal, std::vector<ObjId>(c->num_objects(), obj_id(0)),
                 std::vector<MorId>(c->num_morphisms(), mor_id(0))};
}

Functor product_functor(const Functor& f, const Functor& g, const CatRef& dom, const CatRef& cod) {
  const std::size_t nd = g.dom->num_objects(), md = g.dom->num_morphisms();
  const std::size_t ncod = g.cod->num_objects(), mcod = g.cod->num_morphisms();
  require(dom->num_objects() == f.dom->num_objects() * nd, "product_functor: domain is not the product");
  require(cod->num_objects() == f.cod->num_objects() * ncod, "product_functor: codomain is not the product");
  Functor p{dom, cod, {}, {}};
  p.omap.resize(dom->num_objects());
  p.mmap.resize(dom->num_morphisms());
  for (std::size_t x = 0; x < f.dom->num_objects(); ++x) {
    for (std::size_t y = 0; y < nd; ++y) {
      p.omap[x * nd + y] = pair_object(f(obj_id(x)), g(obj_id(y)), ncod);
    }
  }
  for (std::size_t a = 0; a < f.dom->num_morphisms(); ++a) {
    for (std::size_t b = 0; b < md; ++b) {
      p.mmap[a * md + b] = pair_morphism(f(mor_id(a)), g(mor_id(b)), mcod);
    }
  }
  return p;
}

LawReport check_functor_laws(const Functor& f) {
  LawReport report;
  const FinCat& c = *f.dom;
  const FinCat& d = *f.cod;
  if (f.omap.size() != c.num_objects() || f.mmap.size() != c.num_morphisms()) {
    report.structural("functor-totality", {u32(f.omap.size()), u32(f.mmap.size())},
                      "object/morphism maps must be total on the domain");
    return report;
  }
  for (std::size_t x = 0; x < f.omap.size(); ++x) {
    if (idx(f.omap[x]) >= d.num_objects()) report.structural("dangling-id", {u32(x)}, "object image out of range");
  }
  for (std::size_t m = 0; m < f.mmap.size(); ++m) {
    if (idx(f.mmap[m]) >= d.num_morphisms()) report.structural("dangling-id", {u32(m)}, "morphism image out of range");
  }
  if (report.has_structural()) return report;

  for (std::size_t m = 0; m < c.num_morphisms(); ++m) {
    const MorId fm = mor_id(m);
    if (d.src(f(fm)) != f(c.src(fm)) || d.tgt(f(fm)) != f(c.tgt(fm))) {
      report.violation("functor-endpoints", {u32(m)});
    }
  }
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    if (f(c.identity(obj_id(x))) != d.identity(f(obj_id(x)))) report.violation("functor-identity", {u32(x)});
  }
  for (std::size_t a = 0; a < c.num_morphisms(); ++a) {
    const MorId am = mor_id(a);
    for (std::size_t y = 0; y < c.num_objects(); ++y) {
      for (MorId bm : c.hom(c.tgt(am), obj_id(y))) {
        auto image = d.compose(f(am), f(bm));
        if (!image || *image != f(c.then(am, bm))) {
          report.violation("functor-composition", {u32(a), u32(idx(bm))});
        }
      }
    }
  }
  return report;
}

NatTrans identity_nat_trans(const Functor& f) {
  NatTrans t{f, f, {}};
  for (ObjId y : f.omap) t.components.push_back(f.cod->identity(y));
  return t;
}

NatTrans vertical(const NatTrans& s, const NatTrans& t) {
  require(s.target == t.source, "vertical: target of first differs from source of second");
  NatTrans r{s.source, t.target, {}};
  const FinCat& d = *s.cod();
  for (std::size_t x = 0; x < s.components.size(); ++x) r.components.push_back(d.then(s.components[x], t.components[x]));
  return r;
}

NatTrans whisker_left(const Functor& f, const NatTrans& t) {
  require(same_category(f.cod, t.dom()), "whisker_left: signature mismatch");
  NatTrans r{compose(f, t.source), compose(f, t.target), {}};
  for (ObjId x : f.omap) r.components.push_back(t[x]);
  return r;
}

NatTrans whisker_right(const NatTrans& t, const Functor& h) {
  require(same_category(t.cod(), h.dom), "whisker_right: signature mismatch");
  NatTrans r{compose(t.source, h), compose(t.target, h), {}};
  for (MorId m : t.components) r.components.push_back(h(m));
  return r;
}

LawReport check_naturality(const NatTrans& t) {
  LawReport report;
  const FinCat& c = *t.dom();
  const FinCat& d = *t.cod();
  if (t.components.size() != c.num_objects()) {
    report.structural("nat-trans-totality", {u32(t.components.size())});
    return report;
  }
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    const MorId k = t.components[x];
    if (idx(k) >= d.num_morphisms() || d.src(k) != t.source(obj_id(x)) || d.tgt(k) != t.target(obj_id(x))) {
      report.structural("component-endpoints", {u32(x)}, "component must have type F x -> G x");
    }
  }
  if (report.has_structural()) return report;
  for (std::size_t m = 0; m < c.num_morphisms(); ++m) {
    const MorId fm = mor_id(m);
    const MorId lhs = d.then(t.source(fm), t[c.tgt(fm)]);
    const MorId rhs = d.then(t[c.src(fm)], t.target(fm));
    if (lhs != rhs) report.violation("naturality", {u32(m)});
  }
  return report;
}

std::vector<NatTrans> enumerate_nat_trans(const Functor& f, const Functor& g, std::size_t bound) {
  require(same_category(f.dom, g.dom) && same_category(f.cod, g.cod), "enumerate_nat_trans: signature mismatch");
  const FinCat& c = *f.dom;
  const FinCat& d = *f.cod;
  const std::size_t n = c.num_objects();

  std::size_t candidates = 1;
  std::vector<std::span<const MorId>> options(n);
  for (std::size_t x = 0; x < n; ++x) {
    options[x] = d.hom(f(obj_id(x)), g(obj_id(x)));
    candidates = saturating_mul(candidates, options[x].size());
  }
  if (candidates > bound) throw ResourceExceeded("enumerate_nat_trans", candidates, bound);

  // Squares become checkable once both endpoints have components; attach
  // each morphism to the later of its endpoints.
  std::vector<std::vector<MorId>> squares(n);
  for (std::size_t m = 0; m < c.num_morphisms(); ++m) {
    const MorId fm = mor_id(m);
    squares[std::max(idx(c.src(fm)), idx(c.tgt(fm)))].push_back(fm);
  }

  std::vector<NatTrans> out;
  std::vector<MorId> comp(n);
  auto square_ok = [&](MorId fm) {
    return d.then(f(fm), comp[idx(c.tgt(fm))]) == d.then(comp[idx(c.src(fm))], g(fm));
  };
  auto go = [&](auto&& self, std::size_t x) -> void {
    if (x == n) {
      out.push_back(NatTrans{f, g, comp});
      return;
    }
    for (MorId k : options[x]) {
      comp[x] = k;
      bool ok = true;
      for (MorId fm : squares[x]) {
        if (!square_ok(fm)) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, x + 1);
    }
  };
  go(go, 0);
  return out;
}

std::vector<Functor> enumerate_functors(const CatRef& c, const CatRef& d, std::size_t bound) {
  const std::size_t n = c->num_objects(), m = c->num_morphisms(), nd = d->num_objects();
  std::vector<Functor> out;
  Functor f{c, d, std::vector<ObjId>(n), std::vector<MorId>(m)};
  std::size_t visited = 0;
  auto tick = [&] {
    if (++visited > bound) throw ResourceExceeded("enumerate_functors", visited, bound);
  };
  // Composites a·b are checked once both a and b are assigned, at max(a, b).
  auto morphisms = [&](auto&& self, std::size_t a) -> void {
    if (a == m) {
      out.push_back(f);
      return;
    }
    const MorId am = mor_id(a);
    if (c->is_identity(am)) {
      f.mmap[a] = d->identity(f(c->src(am)));
      self(self, a + 1);
      return;
    }
    for (MorId k : d->hom(f(c->src(am)), f(c->tgt(am)))) {
      tick();
      f.mmap[a] = k;
      bool ok = true;
      for (std::size_t b = 0; b <= a && ok; ++b) {
        const MorId bm = mor_id(b);
        if (auto ab = c->compose(am, bm); ab && idx(*ab) <= a) ok = d->then(k, f(bm)) == f(*ab);
        if (auto ba = c->compose(bm, am); ok && ba && idx(*ba) <= a) ok = d->then(f(bm), k) == f(*ba);
      }
      if (ok) self(self, a + 1);
    }
  };
  auto objects = [&](auto&& self, std::size_t x) -> void {
    if (x == n) {
      morphisms(morphisms, 0);
      return;
    }
    for (std::size_t y = 0; y < nd; ++y) {
      tick();
      f.omap[x] = obj_id(y);
      self(self, x + 1);
    }
  };
  objects(objects, 0);
  // Composites whose id exceeds both factors were skipped above.
  std::erase_if(out, [](const Functor& g) { return !check_functor_laws(g).ok(); });
  return out;
}

Functor Precomposition::on_functor(const Functor& g) const {
  require(!target || same_category(g.cod, target), "precomposition: functor has the wrong target");
  return compose(along, g);
}

NatTrans Precomposition::on_nat_trans(const NatTrans& a) const {
  require(!target || same_category(a.cod(), target), "precomposition: transformation has the wrong target");
  return whisker_left(along, a);
}

}  // namespace moncat
