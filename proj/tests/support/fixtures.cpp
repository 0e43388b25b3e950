#include "fixtures.hpp"

#include <stdexcept>

namespace fixtures {

CatRef t1() { return share(CategoryBuilder({"*"}).build()); }

CatRef z2d() { return share(CategoryBuilder({"0", "1"}).build()); }

CatRef wi() {
  CategoryBuilder b({"a", "b"});
  const MorId f = b.morphism("f", "a", "b");
  const MorId g = b.morphism("g", "b", "a");
  b.compose(f, g, b.id(obj_id(0)));
  b.compose(g, f, b.id(obj_id(1)));
  return share(b.build());
}

CatRef z2fat() {
  CategoryBuilder b({"0a", "0b", "1a", "1b"});
  b.morphism("u0", "0a", "0b");
  b.morphism("v0", "0b", "0a");
  b.morphism("u1", "1a", "1b");
  b.morphism("v1", "1b", "1a");
  return share(b.build(true));
}

CatRef bz2() {
  CategoryBuilder b({"*"});
  const MorId s = b.morphism("s", "*", "*");
  b.compose(s, s, b.id(obj_id(0)));
  return share(b.build());
}

CatRef bidem() {
  CategoryBuilder b({"*"});
  const MorId t = b.morphism("t", "*", "*");
  b.compose(t, t, t);
  return share(b.build());
}

CatRef arrow() {
  CategoryBuilder b({"0", "1"});
  b.morphism("u", "0", "1");
  return share(b.build(true));
}

MorId unique(const FinCat& c, ObjId x, ObjId y) {
  auto h = c.hom(x, y);
  if (h.size() != 1) throw std::logic_error("unique: hom-set is not a singleton");
  return h.front();
}

MonRef thin_monoidal(const CatRef& base, const std::vector<ObjId>& tensor_objects, ObjId unit) {
  const FinCat& c = *base;
  const std::size_t n = c.num_objects(), m = c.num_morphisms();
  MonoidalTables t{tensor_objects, {}, unit, {}, {}, {}};
  auto ten = [&](ObjId x, ObjId y) { return tensor_objects[idx(x) * n + idx(y)]; };
  for (std::size_t f = 0; f < m; ++f) {
    for (std::size_t g = 0; g < m; ++g) {
      const MorId fm = mor_id(f), gm = mor_id(g);
      t.tensor_morphisms.push_back(unique(c, ten(c.src(fm), c.src(gm)), ten(c.tgt(fm), c.tgt(gm))));
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    t.lambda.push_back(unique(c, ten(unit, obj_id(x)), obj_id(x)));
    t.rho.push_back(unique(c, ten(obj_id(x), unit), obj_id(x)));
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const ObjId xo = obj_id(x), yo = obj_id(y), zo = obj_id(z);
        t.alpha.push_back(unique(c, ten(ten(xo, yo), zo), ten(xo, ten(yo, zo))));
      }
    }
  }
  return share(monoidal_from_tables(base, t));
}

MonRef mon_t1() { return thin_monoidal(t1(), {obj_id(0)}, obj_id(0)); }

MonRef mon_z2d() {
  return thin_monoidal(z2d(), {obj_id(0), obj_id(1), obj_id(1), obj_id(0)}, obj_id(0));
}

MonRef mon_z2fat() {
  std::vector<ObjId> t;
  for (std::size_t x = 0; x < 4; ++x) {
    for (std::size_t y = 0; y < 4; ++y) t.push_back(obj_id(((x / 2) ^ (y / 2)) * 2));
  }
  return thin_monoidal(z2fat(), t, obj_id(1));
}

namespace {

// One-object category with a commutative monoid; structure maps are identities.
MonRef one_object(const CatRef& base) {
  const FinCat& c = *base;
  const std::size_t m = c.num_morphisms();
  const MorId e = c.identity(obj_id(0));
  MonoidalTables t{{obj_id(0)}, {}, obj_id(0), {e}, {e}, {e}};
  for (std::size_t f = 0; f < m; ++f) {
    for (std::size_t g = 0; g < m; ++g) t.tensor_morphisms.push_back(c.then(mor_id(f), mor_id(g)));
  }
  return share(monoidal_from_tables(base, t));
}

}  // namespace

MonRef mon_bz2() { return one_object(bz2()); }
MonRef mon_bidem() { return one_object(bidem()); }

MonRef mon_arrow() {
  return thin_monoidal(arrow(), {obj_id(0), obj_id(1), obj_id(1), obj_id(1)}, obj_id(0));
}

std::vector<NamedMonoidal> monoidal_fixtures() {
  return {{"t1", mon_t1()},     {"z2d", mon_z2d()},     {"z2fat", mon_z2fat()},
          {"bz2", mon_bz2()},   {"bidem", mon_bidem()}, {"arrow", mon_arrow()}};
}

LaxMonoidalFunctor arrow_point() {
  MonRef c = mon_t1();
  MonRef d = mon_arrow();
  const FinCat& a = *d->base;
  Functor f{c->base, d->base, {obj_id(1)}, {a.identity(obj_id(1))}};
  return LaxMonoidalFunctor{c, d, f, {a.identity(obj_id(1))}, unique(a, obj_id(0), obj_id(1)), std::nullopt};
}

LaxMonoidalFunctor bz2_bad_eps() {
  MonRef m = mon_bz2();
  LaxMonoidalFunctor f = identity_lax_monoidal(m);
  f.eps = m->base->find_morphism("s").value();
  f.strong.reset();
  return f;
}

LaxMonoidalFunctor parity() {
  MonRef c = mon_z2fat();
  MonRef d = mon_z2d();
  const FinCat& cc = *c->base;
  const FinCat& dc = *d->base;
  Functor f{c->base, d->base, {}, {}};
  for (std::size_t x = 0; x < 4; ++x) f.omap.push_back(obj_id(x / 2));
  for (std::size_t k = 0; k < cc.num_morphisms(); ++k) f.mmap.push_back(dc.identity(f(cc.src(mor_id(k)))));
  LaxMonoidalFunctor lf{c, d, f, {}, dc.identity(obj_id(0)), std::nullopt};
  for (std::size_t x = 0; x < 4; ++x) {
    for (std::size_t y = 0; y < 4; ++y) lf.mu.push_back(dc.identity(obj_id((x / 2) ^ (y / 2))));
  }
  return lf;
}

}  // namespace fixtures
