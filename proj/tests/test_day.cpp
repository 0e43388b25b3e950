#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "generators.hpp"
#include "moncat/day.hpp"
#include "oracle.hpp"

using namespace moncat;
using namespace fixtures;

namespace {

std::vector<std::size_t> sizes(const Presheaf& p) {
  std::vector<std::size_t> out;
  for (const auto& s : p.at) out.push_back(s.size());
  return out;
}

std::vector<Presheaf> presheaves(const CatRef& c, unsigned seed, std::size_t count) {
  gen::Rng rng(seed);
  std::vector<Presheaf> out{gen::empty_presheaf(c), gen::terminal_presheaf(c)};
  for (std::size_t x = 0; x < c->num_objects(); ++x) out.push_back(yoneda(c, obj_id(x)));
  while (out.size() < count) out.push_back(gen::presheaf(rng, c));
  return out;
}

}  // namespace

TEST_CASE("representable presheaves") {
  CHECK(sizes(yoneda(t1(), obj_id(0))) == std::vector<std::size_t>{1});
  CHECK(sizes(yoneda(z2d(), obj_id(1))) == std::vector<std::size_t>{0, 1});
  CatRef w = wi();
  CHECK(yoneda(w, w->find_object("a").value()).at[idx(w->find_object("b").value())].size() == 1);
  for (auto& [name, m] : monoidal_fixtures()) {
    const CatRef& c = m->base;
    for (std::size_t x = 0; x < c->num_objects(); ++x) CHECK(check_presheaf(yoneda(c, obj_id(x))).ok());
    for (std::size_t f = 0; f < c->num_morphisms(); ++f) {
      const MorId fm = mor_id(f);
      const PresheafMap yf = yoneda_on_morphisms(c, fm);
      CHECK(check_presheaf_map(yoneda(c, c->src(fm)), yoneda(c, c->tgt(fm)), yf).ok());
      for (std::size_t g = 0; g < c->num_morphisms(); ++g) {
        if (auto fg = c->compose(fm, mor_id(g))) {
          CHECK(yoneda_on_morphisms(c, *fg) == then(yf, yoneda_on_morphisms(c, mor_id(g))));
        }
      }
      if (c->is_identity(fm)) CHECK(yf == identity_map(yoneda(c, c->src(fm))));
    }
  }
}

TEST_CASE("presheaf checks reject broken actions") {
  CatRef b = bz2();
  Presheaf p = yoneda(b, obj_id(0));
  CHECK(check_presheaf(p).ok());
  const MorId s = b->find_morphism("s").value();
  p.action[idx(s)] = {0, 0};
  CHECK(check_presheaf(p).mentions("presheaf-composition"));
  p.action[idx(s)] = {0, 5};
  CHECK(check_presheaf(p).has_structural());
  Presheaf q = gen::sized(z2d(), {2, 2});
  q.at[0].labels = {"x", "x"};
  CHECK(check_presheaf(q).mentions("finset-labels"));
}

TEST_CASE("Yoneda lemma") {
  CatRef d = z2d();
  auto b = yoneda_lemma_bijection(d, obj_id(1), yoneda(d, obj_id(1)));
  CHECK(b.bijective);
  CHECK(b.nat.size() == 1);
  CatRef w = wi();
  CHECK(enumerate_presheaf_maps(yoneda(w, obj_id(0)), yoneda(w, obj_id(1))).size() == 1);
  for (auto& [name, m] : monoidal_fixtures()) {
    INFO(name);
    const CatRef& c = m->base;
    for (const Presheaf& f : presheaves(c, 23, 8)) {
      REQUIRE(check_presheaf(f).ok());
      for (std::size_t x = 0; x < c->num_objects(); ++x) {
        auto y = yoneda_lemma_bijection(c, obj_id(x), f);
        CHECK(y.bijective);
        CHECK(y.nat.size() == f.at[x].size());
        for (auto& a : y.nat) CHECK(check_presheaf_map(yoneda(c, obj_id(x)), f, a).ok());
      }
    }
  }
}

TEST_CASE("coend sizes on the discrete base") {
  MonRef m = mon_z2d();
  Presheaf f = gen::sized(m->base, {1, 2});
  Presheaf g = gen::sized(m->base, {3, 1});
  CHECK(coend_quotient(*m, f, g, obj_id(0)).size() == 5);
  CHECK(coend_quotient(*m, f, g, obj_id(1)).size() == 7);
  Presheaf t = day_tensor(*m, f, g);
  CHECK(sizes(t) == std::vector<std::size_t>{5, 7});
  CHECK(check_presheaf(t).ok());
  Presheaf e = gen::empty_presheaf(m->base);
  CHECK(sizes(day_tensor(*m, e, g)) == std::vector<std::size_t>{0, 0});
  CHECK(sizes(day_tensor(*m, f, e)) == std::vector<std::size_t>{0, 0});

  gen::Rng rng(29);
  for (int k = 0; k < 50; ++k) {
    std::vector<std::size_t> fs{rng() % 5, rng() % 5}, gs{rng() % 5, rng() % 5};
    Presheaf a = gen::sized(m->base, fs), b = gen::sized(m->base, gs);
    const std::vector<std::size_t> expected{fs[0] * gs[0] + fs[1] * gs[1], fs[0] * gs[1] + fs[1] * gs[0]};
    CHECK(sizes(day_tensor(*m, a, b)) == expected);
  }
}

TEST_CASE("Day tensor agrees with the breadth-first oracle") {
  std::size_t compared = 0;
  auto fx = monoidal_fixtures();
  fx.push_back({"z2d x bz2", gen::product(mon_z2d(), mon_bz2())});
  for (auto& [name, m] : fx) {
    INFO(name);
    auto ps = presheaves(m->base, 31, 7);
    for (const Presheaf& f : ps) {
      for (const Presheaf& g : ps) {
        Presheaf t = day_tensor(*m, f, g);
        CHECK(check_presheaf(t).ok());
        CHECK(sizes(t) == oracle::day_sizes(oracle::raw(*m), oracle::raw(f), oracle::raw(g)));
        ++compared;
      }
    }
  }
  CHECK(compared > 200);
}

TEST_CASE("coend partition does not depend on generator order") {
  for (auto& [name, m] : monoidal_fixtures()) {
    auto ps = presheaves(m->base, 37, 5);
    for (const Presheaf& f : ps) {
      for (const Presheaf& g : ps) {
        for (std::size_t c = 0; c < m->n(); ++c) {
          CoendTable base = coend_quotient(*m, f, g, obj_id(c));
          for (std::uint64_t seed : {1u, 2u, 3u}) {
            CoendTable other = coend_quotient(*m, f, g, obj_id(c), CoendOptions{kDefaultWorkBound, seed});
            CHECK(other.class_of == base.class_of);
            CHECK(other.representative == base.representative);
          }
          for (std::size_t k = 0; k < base.size(); ++k) {
            CHECK(base.members[k].front() == base.representative[k]);
          }
        }
      }
    }
  }
}

TEST_CASE("coend work bound") {
  MonRef m = mon_bz2();
  Presheaf f = yoneda(m->base, obj_id(0));
  for (int i = 0; i < 4; ++i) f = gen::coproduct(f, f);
  CHECK_THROWS_AS(coend_quotient(*m, f, f, obj_id(0), CoendOptions{1000, std::nullopt}), ResourceExceeded);
  CHECK_NOTHROW(coend_quotient(*m, f, f, obj_id(0)));
}

TEST_CASE("Day unitors and associator are natural isomorphisms") {
  for (auto& [name, m] : monoidal_fixtures()) {
    INFO(name);
    DayStructure day = day_structure_cells(m);
    auto ps = presheaves(m->base, 41, 6);
    for (const Presheaf& f : ps) {
      PresheafIso l = day.left_unitor(f), r = day.right_unitor(f);
      CHECK(check_presheaf_iso(l).ok());
      CHECK(check_presheaf_iso(r).ok());
      CHECK(sizes(l.source) == sizes(f));
      for (const Presheaf& g : ps) {
        for (const Presheaf& k : ps) {
          CHECK(check_presheaf_iso(day.associator(f, g, k)).ok());
        }
      }
    }
  }
}

TEST_CASE("triangle and pentagon for presheaves") {
  for (auto& [name, m] : monoidal_fixtures()) {
    INFO(name);
    DayStructure day = day_structure_cells(m);
    auto ps = presheaves(m->base, 43, 4);
    const Presheaf& u = day.unit();
    for (const Presheaf& f : ps) {
      for (const Presheaf& g : ps) {
        // α_{F,I,G}·(id⊗λ_G) = ρ_F⊗id
        const DayProduct fu = day.product(f, u), ug = day.product(u, g), fg = day.product(f, g);
        const DayProduct fu_g = day.product(fu.presheaf, g), f_ug = day.product(f, ug.presheaf);
        PresheafMap lhs = then(day.associator(f, u, g).forward,
                               day_map(f_ug, fg, identity_map(f), day.left_unitor(g).forward));
        PresheafMap rhs = day_map(fu_g, fg, day.right_unitor(f).forward, identity_map(g));
        CHECK(lhs == rhs);
      }
    }
    for (const Presheaf& w : ps) {
      for (const Presheaf& x : ps) {
        for (const Presheaf& y : ps) {
          for (const Presheaf& z : ps) {
            const DayProduct wx = day.product(w, x), xy = day.product(x, y), yz = day.product(y, z);
            const DayProduct wx_y = day.product(wx.presheaf, y), x_yz = day.product(x, yz.presheaf);
            const DayProduct xy_z = day.product(xy.presheaf, z);
            const DayProduct wxy_z = day.product(wx_y.presheaf, z);
            const DayProduct w_xy_z = day.product(day.product(w, xy.presheaf).presheaf, z);
            const DayProduct w_xyz = day.product(w, xy_z.presheaf);
            const DayProduct w__x_yz = day.product(w, x_yz.presheaf);
            // (α⊗1)·α·(1⊗α) = α·α
            PresheafMap lhs =
                then(then(day_map(wxy_z, w_xy_z, day.associator(w, x, y).forward, identity_map(z)),
                          day.associator(w, xy.presheaf, z).forward),
                     day_map(w_xyz, w__x_yz, identity_map(w), day.associator(x, y, z).forward));
            PresheafMap rhs = then(day.associator(wx.presheaf, y, z).forward, day.associator(w, x, yz.presheaf).forward);
            CHECK(lhs == rhs);
          }
        }
      }
    }
  }
}

TEST_CASE("representability of Day products") {
  MonRef z = mon_z2d();
  DayStructure dz(z);
  PresheafIso w11 = representability_witness(dz, obj_id(1), obj_id(1));
  CHECK(sizes(w11.source) == std::vector<std::size_t>{1, 0});
  CHECK(check_presheaf_iso(w11).ok());
  PresheafIso t = representability_witness(DayStructure(mon_t1()), obj_id(0), obj_id(0));
  CHECK(sizes(t.source) == std::vector<std::size_t>{1});

  for (auto& [name, m] : monoidal_fixtures()) {
    INFO(name);
    DayStructure day(m);
    for (std::size_t x = 0; x < m->n(); ++x) {
      for (std::size_t y = 0; y < m->n(); ++y) {
        PresheafIso r = representability_witness(day, obj_id(x), obj_id(y));
        CHECK(check_presheaf_iso(r).ok());
        CHECK(sizes(r.source) == sizes(yoneda(m->base, (*m)(obj_id(x), obj_id(y)))));
      }
    }
    // at x = y = I the witness followed by y(λ_I) or y(ρ_I) is the unitor
    const ObjId i = m->unit;
    PresheafIso r = representability_witness(day, i, i);
    CHECK(then(r.forward, yoneda_on_morphisms(m->base, m->lambda(i))) == day.left_unitor(day.unit()).forward);
    CHECK(then(r.forward, yoneda_on_morphisms(m->base, m->rho(i))) == day.right_unitor(day.unit()).forward);
  }
}

TEST_CASE("restricted Yoneda completion") {
  YonedaCompletion t = restricted_yoneda_completion(mon_t1());
  CHECK(t.monoidal->base->num_objects() == 1);
  CHECK(t.monoidal->base->num_morphisms() == 1);

  MonRef z = mon_z2d();
  YonedaCompletion d = restricted_yoneda_completion(z);
  CHECK(d.monoidal->base->num_objects() == 2);
  CHECK(d.monoidal->tensor.omap == z->tensor.omap);
  CHECK(d.monoidal->unit == z->unit);

  YonedaCompletion fat = restricted_yoneda_completion(mon_z2fat());
  CHECK(fat.monoidal->base->num_objects() == 4);
  Skeleton k = skeletalize(fat.monoidal->base);
  CHECK(k.skeleton->num_objects() == 2);
  CHECK(is_fully_faithful(k.h.functor).fully_faithful);
  CHECK(split_eso_witness(k.h.functor).ok());

  for (auto& [name, m] : monoidal_fixtures()) {
    INFO(name);
    YonedaCompletion c = restricted_yoneda_completion(m);
    CHECK(check_monoidal_laws(*c.monoidal).ok());
    CHECK(oracle::monoidal_ok(oracle::raw(*c.monoidal)));
    CHECK(check_lax_monoidal_functor(c.yon).ok());
    CHECK(is_strong_monoidal(c.yon).strong);
    CHECK(is_fully_faithful(c.yon.functor).fully_faithful);
    // the structure matches C's under the Yoneda identification
    CHECK(c.monoidal->tensor.mmap == m->tensor.mmap);
    CHECK(c.monoidal->left.forward.components == m->left.forward.components);
    CHECK(c.monoidal->assoc.forward == m->assoc.forward);
  }
  CHECK_THROWS_AS(restricted_yoneda_completion(mon_z2fat(), 4), ResourceExceeded);
}

TEST_CASE("Rezk and Day structures agree") {
  DayComparison t = compare_day_vs_transport(mon_t1());
  CHECK(t.report.ok());
  CHECK(t.comparison.mu == std::vector<MorId>{mor_id(0)});

  DayComparison z = compare_day_vs_transport(mon_z2d());
  REQUIRE(z.report.ok());
  CHECK(z.rezk.monoidal->tensor.mmap == z.day.monoidal->tensor.mmap);
  CHECK(z.rezk.monoidal->assoc == z.day.monoidal->assoc);
  CHECK(z.rezk.monoidal->left == z.day.monoidal->left);
  for (MorId c : z.comparison.mu) CHECK(z.comparison.cod->base->is_identity(c));

  for (auto& [name, m] : monoidal_fixtures()) {
    INFO(name);
    DayComparison c = compare_day_vs_transport(m);
    CHECK(c.report.ok());
    CHECK(c.comparison.functor == identity_functor(c.skeleton.skeleton.category()));
    REQUIRE(c.comparison.strong);
    CHECK(oracle::lax_ok(c.comparison));
  }

  auto fat = gen::product(mon_z2fat(), mon_bz2());
  DayComparison f = compare_day_vs_transport(fat);
  CHECK(f.report.ok());
}
