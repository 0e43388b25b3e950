#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "generators.hpp"
#include "moncat/equivalence.hpp"
#include "oracle.hpp"

using namespace moncat;
using namespace fixtures;

namespace {

std::vector<CatRef> small_categories() {
  std::vector<CatRef> out{t1(), z2d(), wi(), z2fat(), bz2(), bidem(), arrow()};
  gen::Rng rng(7);
  while (out.size() < 40) {
    auto s = gen::category(rng);
    if (s.cat->num_objects() <= 3 && s.cat->num_morphisms() <= 9) out.push_back(s.cat);
  }
  return out;
}

}  // namespace

TEST_CASE("category laws on fixtures") {
  for (const CatRef& c : small_categories()) {
    CHECK(check_category_laws(*c).ok());
    CHECK(oracle::category_ok(oracle::raw(*c)));
  }
}

TEST_CASE("dangling composite is structural") {
  CatRef c = t1();
  FinCat broken = c->with_entry(mor_id(0), mor_id(0), 1);
  LawReport r = check_category_laws(broken);
  CHECK(r.has_structural());
  CHECK(r.mentions("dangling-id"));
}

TEST_CASE("swapped inverse entries in the walking iso") {
  CatRef c = wi();
  const MorId f = c->find_morphism("f").value(), g = c->find_morphism("g").value();
  FinCat broken = c->with_entry(f, g, static_cast<std::int32_t>(idx(c->then(g, f))))
                      .with_entry(g, f, static_cast<std::int32_t>(idx(c->then(f, g))));
  LawReport r = check_category_laws(broken);
  CHECK_FALSE(r.ok());
  CHECK((r.mentions("associativity") || r.mentions("identity")));
  CHECK_FALSE(oracle::category_ok(oracle::raw(broken)));
}

TEST_CASE("functor laws") {
  CatRef w = wi(), t = t1();
  CHECK(check_functor_laws(identity_functor(w)).ok());
  CHECK(check_functor_laws(to_terminal(w, t)).ok());

  Functor bad = identity_functor(w);
  const MorId f = w->find_morphism("f").value();
  bad.mmap[idx(f)] = w->identity(obj_id(0));
  LawReport r = check_functor_laws(bad);
  REQUIRE_FALSE(r.ok());
  CHECK(std::any_of(r.violations().begin(), r.violations().end(),
                    [&](const Violation& v) { return !v.witness.empty() && v.witness[0] == idx(f); }));

  // Z/3 with m1 -> m1, m2 -> m1 breaks m1·m1 = m2.
  std::vector<int> z3{0, 1, 2, 1, 2, 0, 2, 0, 1};
  CatRef c = gen::one_object(z3, 3);
  Functor h{c, c, {obj_id(0)}, {mor_id(0), mor_id(1), mor_id(1)}};
  LawReport hr = check_functor_laws(h);
  CHECK(hr.mentions("functor-composition"));
  CHECK_FALSE(hr.has_structural());

  Functor partial{w, w, {obj_id(0)}, {}};
  CHECK(check_functor_laws(partial).has_structural());
}

TEST_CASE("naturality") {
  CatRef w = wi();
  CHECK(check_naturality(identity_nat_trans(identity_functor(w))).ok());
  CatRef d = z2d();
  NatTrans any{identity_functor(d), identity_functor(d), {d->identity(obj_id(0)), d->identity(obj_id(1))}};
  CHECK(check_naturality(any).ok());

  // WI x B(Z/2): components (id_a, s) at a and (id_b, e) at b fail at (f, e).
  CatRef b = bz2();
  CatRef p = share(product_category(*w, *b));
  const std::size_t mb = b->num_morphisms();
  const MorId s = b->find_morphism("s").value(), e = b->identity(obj_id(0));
  const MorId f = w->find_morphism("f").value();
  NatTrans t{identity_functor(p), identity_functor(p),
             {pair_morphism(w->identity(obj_id(0)), s, mb), pair_morphism(w->identity(obj_id(1)), e, mb)}};
  LawReport r = check_naturality(t);
  CHECK(r.mentions("naturality"));
  const std::uint32_t fe = static_cast<std::uint32_t>(idx(pair_morphism(f, e, mb)));
  CHECK(std::any_of(r.violations().begin(), r.violations().end(),
                    [&](const Violation& v) { return v.witness == std::vector<std::uint32_t>{fe}; }));

  NatTrans mistyped{identity_functor(w), identity_functor(w), {f, w->identity(obj_id(1))}};
  CHECK(check_naturality(mistyped).has_structural());
}

TEST_CASE("product category sizes") {
  FinCat tt = product_category(*t1(), *t1());
  CHECK(tt.num_objects() == 1);
  CHECK(tt.num_morphisms() == 1);
  FinCat wt = product_category(*wi(), *t1());
  CHECK(wt.num_objects() == 2);
  CHECK(wt.num_morphisms() == 4);
  FinCat dd = product_category(*z2d(), *z2d());
  CHECK(dd.num_objects() == 4);
  CHECK(dd.num_morphisms() == 4);
  auto cats = small_categories();
  for (std::size_t i = 0; i < cats.size(); i += 3) {
    for (std::size_t j = 1; j < cats.size(); j += 5) {
      FinCat p = product_category(*cats[i], *cats[j]);
      CHECK(p.num_objects() == cats[i]->num_objects() * cats[j]->num_objects());
      CHECK(p.num_morphisms() == cats[i]->num_morphisms() * cats[j]->num_morphisms());
      CHECK(check_category_laws(p).ok());
    }
  }
}

TEST_CASE("whiskering") {
  CatRef w = wi(), t = t1();
  NatTrans id_t = identity_nat_trans(identity_functor(w));
  CHECK(whisker_left(identity_functor(w), id_t) == id_t);
  Functor h = to_terminal(w, t);
  NatTrans on_t = identity_nat_trans(identity_functor(t));
  NatTrans wh = whisker_left(h, on_t);
  CHECK(wh == identity_nat_trans(h));
  CHECK(check_naturality(wh).ok());
  CHECK_THROWS_AS(whisker_left(identity_functor(t), id_t), std::invalid_argument);
}

TEST_CASE("enumerate_nat_trans counts") {
  CHECK(enumerate_nat_trans(identity_functor(t1()), identity_functor(t1())).size() == 1);
  CHECK(enumerate_nat_trans(identity_functor(z2d()), identity_functor(z2d())).size() == 1);
  // hom(a, a) and hom(b, b) are both trivial in the walking iso.
  CHECK(oracle::nat_trans(identity_functor(wi()), identity_functor(wi())).size() == 1);
  CHECK(enumerate_nat_trans(identity_functor(wi()), identity_functor(wi())).size() == 1);
  CHECK(enumerate_nat_trans(identity_functor(bz2()), identity_functor(bz2())).size() == 2);
}

TEST_CASE("enumerate_nat_trans agrees with the brute-force filter") {
  auto cats = small_categories();
  std::size_t compared = 0;
  for (std::size_t i = 0; i < cats.size(); ++i) {
    for (std::size_t j = 0; j < cats.size(); ++j) {
      if (cats[i]->num_objects() > 3 || cats[j]->num_morphisms() > 6) continue;
      std::vector<Functor> fs;
      try {
        fs = enumerate_functors(cats[i], cats[j], 20000);
      } catch (const ResourceExceeded&) {
        continue;
      }
      if (fs.size() > 6) fs.resize(6);
      for (const auto& f : fs) {
        for (const auto& g : fs) {
          auto mine = enumerate_nat_trans(f, g);
          auto theirs = oracle::nat_trans(f, g);
          std::vector<std::vector<MorId>> got;
          for (auto& t : mine) {
            CHECK(check_naturality(t).ok());
            got.push_back(t.components);
          }
          std::sort(got.begin(), got.end());
          std::sort(theirs.begin(), theirs.end());
          CHECK(got == theirs);
          ++compared;
        }
      }
    }
  }
  CHECK(compared > 100);
}

TEST_CASE("enumerate_functors agrees with exhaustive counting") {
  auto cats = small_categories();
  for (std::size_t i = 0; i < cats.size(); i += 2) {
    for (std::size_t j = 1; j < cats.size(); j += 3) {
      if (cats[i]->num_morphisms() > 5 || cats[j]->num_morphisms() > 5) continue;
      auto fs = enumerate_functors(cats[i], cats[j]);
      CHECK(fs.size() == oracle::count_functors(*cats[i], *cats[j]));
      for (auto& f : fs) CHECK(check_functor_laws(f).ok());
    }
  }
}

TEST_CASE("enumeration bound") {
  CatRef d = z2d();
  CatRef b = bz2();
  CatRef p = share(product_category(*share(product_category(*b, *b)), *b));
  Functor id = identity_functor(p);
  CHECK_THROWS_AS(enumerate_nat_trans(id, id, 4), ResourceExceeded);
  CHECK(enumerate_nat_trans(id, id, 8).size() == 8);
}

TEST_CASE("find_isos") {
  CHECK(find_isos(*t1(), obj_id(0), obj_id(0)).size() == 1);
  CHECK(find_isos(*wi(), obj_id(0), obj_id(1)).size() == 1);
  CHECK(find_isos(*z2d(), obj_id(0), obj_id(1)).empty());
  CHECK(find_isos(*bz2(), obj_id(0), obj_id(0)).size() == 2);
  CHECK(find_isos(*bidem(), obj_id(0), obj_id(0)).size() == 1);
}

TEST_CASE("fully faithful") {
  CatRef t = t1();
  CHECK(is_fully_faithful(identity_functor(wi())).fully_faithful);
  CHECK(is_fully_faithful(to_terminal(wi(), t)).fully_faithful);
  auto r = is_fully_faithful(to_terminal(z2d(), t));
  CHECK_FALSE(r.fully_faithful);
  CHECK(r.failing_pairs.size() == 2);
  auto cats = small_categories();
  for (std::size_t i = 0; i < cats.size(); i += 2) {
    for (std::size_t j = 0; j < cats.size(); j += 3) {
      if (cats[i]->num_morphisms() > 5 || cats[j]->num_morphisms() > 6) continue;
      for (auto& f : enumerate_functors(cats[i], cats[j])) {
        CHECK(is_fully_faithful(f).fully_faithful == oracle::fully_faithful(f));
      }
    }
  }
}

TEST_CASE("split essential surjectivity") {
  CatRef w = wi(), t = t1();
  auto id = split_eso_witness(identity_functor(w));
  REQUIRE(id.ok());
  CHECK(id.equivalence->section == std::vector<ObjId>{obj_id(0), obj_id(1)});
  CHECK(id.equivalence->eta[1] == IsoWitness{w->identity(obj_id(1)), w->identity(obj_id(1))});
  CHECK(check_weak_equivalence(*id.equivalence).ok());

  auto collapse = split_eso_witness(to_terminal(w, t));
  REQUIRE(collapse.ok());
  CHECK(collapse.equivalence->section[0] == obj_id(0));
  CHECK(collapse.equivalence->eta[0] == IsoWitness{mor_id(0), mor_id(0)});

  CatRef d = z2d();
  Functor incl{t, d, {obj_id(0)}, {d->identity(obj_id(0))}};
  auto fail = split_eso_witness(incl);
  CHECK_FALSE(fail.ok());
  CHECK(fail.unreachable == std::vector<ObjId>{obj_id(1)});
  CHECK(fail.not_fully_faithful.empty());

  auto notff = split_eso_witness(to_terminal(d, t));
  CHECK_FALSE(notff.ok());
  CHECK_FALSE(notff.not_fully_faithful.empty());
  CHECK(notff.unreachable.empty());
}

TEST_CASE("weak equivalences compose and multiply") {
  CatRef w = wi(), t = t1();
  auto a = split_eso_witness(to_terminal(w, t)).equivalence.value();
  auto b = split_eso_witness(identity_functor(t)).equivalence.value();
  WeakEquivalence ab = compose_weak_equivalences(a, b);
  CHECK(check_weak_equivalence(ab).ok());
  CatRef ww = share(product_category(*w, *w));
  CatRef tt = share(product_category(*t, *t));
  WeakEquivalence p = product_weak_equivalence(a, a, ww, tt);
  CHECK(check_weak_equivalence(p).ok());
  CHECK(check_functor_laws(p.functor).ok());
}

TEST_CASE("precomposition") {
  CatRef w = wi(), t = t1();
  Precomposition id = precomp_functor(identity_functor(w), w);
  Functor g = identity_functor(w);
  CHECK(id.on_functor(g) == g);
  NatTrans a = identity_nat_trans(g);
  CHECK(id.on_nat_trans(a) == a);

  Functor f = to_terminal(w, t);
  CHECK(precomp_functor(f, t).on_functor(identity_functor(t)) == f);

  Functor tt = identity_functor(t);
  auto cells = enumerate_nat_trans(tt, tt);
  Precomposition p = precomp_functor(tt, t);
  std::size_t n = 0;
  for (auto& c : cells) n += check_naturality(p.on_nat_trans(c)).ok();
  CHECK(n == 1);
}

TEST_CASE("precomposition is functorial") {
  auto cats = small_categories();
  gen::Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const CatRef& c = cats[rng() % cats.size()];
    const CatRef& d = cats[rng() % cats.size()];
    const CatRef& e = cats[rng() % cats.size()];
    if (c->num_morphisms() > 5 || d->num_morphisms() > 5 || e->num_morphisms() > 5) continue;
    auto fs = enumerate_functors(c, d);
    auto gs = enumerate_functors(d, e);
    if (fs.empty() || gs.empty()) continue;
    Precomposition p = precomp_functor(fs[rng() % fs.size()], e);
    const Functor& g1 = gs[rng() % gs.size()];
    const Functor& g2 = gs[rng() % gs.size()];
    const Functor& g3 = gs[rng() % gs.size()];
    CHECK(p.on_nat_trans(identity_nat_trans(g1)) == identity_nat_trans(p.on_functor(g1)));
    for (auto& s : enumerate_nat_trans(g1, g2)) {
      for (auto& t : enumerate_nat_trans(g2, g3)) {
        CHECK(p.on_nat_trans(vertical(s, t)) == vertical(p.on_nat_trans(s), p.on_nat_trans(t)));
      }
    }
  }
}

TEST_CASE("skeletal detection") {
  CHECK(is_skeletal(*z2d()));
  CHECK_FALSE(is_skeletal(*wi()));
  CHECK_THROWS_AS(SkeletalCat(wi()), std::invalid_argument);
  CHECK_NOTHROW(SkeletalCat(bz2()));
}

TEST_CASE("empty category") {
  CatRef e = share(CategoryBuilder({}).build());
  CHECK(check_category_laws(*e).ok());
  CHECK(check_functor_laws(identity_functor(e)).ok());
  CHECK(enumerate_nat_trans(identity_functor(e), identity_functor(e)).size() == 1);
  CHECK(split_eso_witness(identity_functor(e)).ok());
}

TEST_CASE("builder derives forced composites and reports gaps") {
  CategoryBuilder b({"a", "b"});
  const MorId f = b.morphism("f", "a", "b");
  const MorId g = b.morphism("g", "b", "a");
  b.compose(f, g, b.id(obj_id(0)));
  auto r = b.try_build(false);
  CHECK_FALSE(r.category);
  REQUIRE_FALSE(r.issues.empty());
  CHECK(r.issues.front().kind == BuildIssue::Kind::Missing);
  auto d = b.try_build(true);
  REQUIRE(d.category);  // hom(b, b) = {id_b} forces g·f
  CHECK(check_category_laws(*d.category).ok());

  CategoryBuilder c({"*"});
  const MorId s = c.morphism("s", "*", "*");
  c.compose(s, s, c.id(obj_id(0)));
  c.compose(s, s, s);
  auto cr = c.try_build(true);
  CHECK_FALSE(cr.category);
  CHECK(std::any_of(cr.issues.begin(), cr.issues.end(),
                    [](const BuildIssue& i) { return i.kind == BuildIssue::Kind::Conflict; }));
}

TEST_CASE("mutations of a composition entry are detected") {
  gen::Rng rng(11);
  std::size_t mutations = 0, detected = 0;
  for (int k = 0; k < 60; ++k) {
    auto s = gen::category(rng);
    const FinCat& c = *s.cat;
    for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
      for (std::size_t g = 0; g < c.num_morphisms(); ++g) {
        auto h = c.compose(mor_id(f), mor_id(g));
        if (!h) continue;
        for (MorId other : c.hom(c.src(mor_id(f)), c.tgt(mor_id(g)))) {
          if (other == *h) continue;
          FinCat mutated = c.with_entry(mor_id(f), mor_id(g), static_cast<std::int32_t>(idx(other)));
          const bool caught = !check_category_laws(mutated).ok();
          CHECK(caught == !oracle::category_ok(oracle::raw(mutated)));
          ++mutations;
          detected += caught;
        }
      }
    }
  }
  CHECK(mutations > 1000);
  CHECK(static_cast<double>(detected) >= 0.95 * static_cast<double>(mutations));
}
