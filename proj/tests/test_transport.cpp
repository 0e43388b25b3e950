#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "generators.hpp"
#include "moncat/transport.hpp"
#include "oracle.hpp"

using namespace moncat;
using namespace fixtures;

namespace {

std::size_t iso_classes(const FinCat& c) {
  std::vector<bool> seen(c.num_objects(), false);
  std::size_t classes = 0;
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    if (seen[x]) continue;
    ++classes;
    for (std::size_t y = x; y < c.num_objects(); ++y) {
      for (MorId f : c.hom(obj_id(x), obj_id(y))) {
        for (MorId g : c.hom(obj_id(y), obj_id(x))) {
          if (c.then(f, g) == c.identity(obj_id(x)) && c.then(g, f) == c.identity(obj_id(y))) seen[y] = true;
        }
      }
    }
  }
  return classes;
}

std::vector<NamedMonoidal> sources() {
  auto out = monoidal_fixtures();
  out.push_back({"z2fat x bz2", gen::product(mon_z2fat(), mon_bz2())});
  out.push_back({"z2fat x arrow", gen::product(mon_z2fat(), mon_arrow())});
  gen::Rng rng(19);
  for (int k = 0; k < 40; ++k) {
    auto s = gen::monoidal(rng);
    out.push_back({s.label, *s.monoidal});
  }
  return out;
}

std::vector<MonRef> targets() { return {mon_t1(), mon_z2d(), mon_bz2(), mon_bidem(), mon_arrow()}; }

}  // namespace

TEST_CASE("skeletalize") {
  Skeleton w = skeletalize(wi());
  CHECK(w.skeleton->num_objects() == 1);
  CHECK(w.skeleton->num_morphisms() == 1);
  CHECK(check_weak_equivalence(w.h).ok());

  Skeleton z = skeletalize(z2fat());
  CHECK(z.skeleton->num_objects() == 2);
  CHECK(z.skeleton->num_morphisms() == 2);

  for (auto& [name, m] : sources()) {
    INFO(name);
    Skeleton s = skeletalize(m->base);
    CHECK(is_skeletal(*s.skeleton));
    CHECK(s.skeleton->num_objects() == iso_classes(*m->base));
    CHECK(check_weak_equivalence(s.h).ok());
    CHECK(check_category_laws(*s.skeleton).ok());
    CHECK(oracle::fully_faithful(s.h.functor));
  }
}

TEST_CASE("lifting a functor along a weak equivalence") {
  for (auto& [name, m] : sources()) {
    if (m->base->num_morphisms() > 12) continue;
    INFO(name);
    Skeleton s = skeletalize(m->base);
    for (const MonRef& e : targets()) {
      std::vector<Functor> gs;
      try {
        gs = enumerate_functors(m->base, e->base, 50000);
      } catch (const ResourceExceeded&) {
        continue;
      }
      for (const Functor& g0 : gs) {
        LiftedFunctor l = lift_functor_along(s.h, g0);
        CHECK(check_functor_laws(l.functor).ok());
        CHECK(l.iso.source == compose(s.h.functor, l.functor));
        CHECK(l.iso.target == g0);
        CHECK(check_naturality(l.iso).ok());
        const FinCat& c = *e->base;
        for (std::size_t x = 0; x < l.iso.components.size(); ++x) {
          CHECK(c.then(l.iso.components[x], l.iso_inverse[x]) == c.identity(c.src(l.iso.components[x])));
        }
        // lifting W·G recovers G exactly when G0 already factors
        LiftedFunctor again = lift_functor_along(s.h, compose(s.h.functor, l.functor));
        CHECK(again.functor == l.functor);
      }
    }
  }
}

TEST_CASE("transported structure satisfies every law") {
  for (auto& [name, m] : sources()) {
    INFO(name);
    Skeleton s = skeletalize(m->base);
    TransportedMonoidal t = transport_monoidal(s.h, m);
    CHECK(check_monoidal_laws(*t.monoidal).ok());
    CHECK(oracle::monoidal_ok(oracle::raw(*t.monoidal)));
    CHECK(check_lax_monoidal_functor(t.h).ok());
    CHECK(oracle::lax_ok(t.h));
    REQUIRE(t.h.strong);
    CHECK(is_strong_monoidal(t.h).strong);
    CHECK(t.h.eps == t.monoidal->base->identity(t.monoidal->unit));
  }
}

TEST_CASE("transport along an identity reproduces the structure") {
  for (auto& [name, m] : sources()) {
    if (!is_skeletal(*m->base)) continue;
    INFO(name);
    auto w = split_eso_witness(identity_functor(m->base)).equivalence.value();
    TransportedMonoidal t = transport_monoidal(w, m);
    CHECK(t.monoidal->tensor.omap == m->tensor.omap);
    CHECK(t.monoidal->tensor.mmap == m->tensor.mmap);
    CHECK(t.monoidal->unit == m->unit);
    CHECK(t.monoidal->left.forward.components == m->left.forward.components);
    CHECK(t.monoidal->right.forward.components == m->right.forward.components);
    CHECK(t.monoidal->assoc.forward == m->assoc.forward);
  }
}

TEST_CASE("transport requires a skeletal target") {
  MonRef m = mon_z2fat();
  auto w = split_eso_witness(identity_functor(m->base)).equivalence.value();
  CHECK_THROWS_AS(transport_monoidal(w, m), std::invalid_argument);
}

TEST_CASE("every lax functor factors through the skeleton") {
  std::size_t factored = 0;
  for (auto& [name, m] : sources()) {
    if (m->base->num_morphisms() > 12) continue;
    INFO(name);
    Skeleton s = skeletalize(m->base);
    TransportedMonoidal t = transport_monoidal(s.h, m);
    for (const MonRef& e : targets()) {
      std::vector<LaxMonoidalFunctor> lifts, candidates;
      try {
        lifts = enumerate_lax_monoidal(m, e, 200000);
        candidates = enumerate_lax_monoidal(t.monoidal, e, 200000);
      } catch (const ResourceExceeded&) {
        continue;
      }
      for (const auto& f : lifts) {
        Factorization fac = factor_through(s.h, t.h, f);
        CHECK(fac.report.ok());
        CHECK(oracle::lax_ok(fac.g));
        std::vector<MorId> comps = fac.iso.components;
        CHECK(oracle::monoidal_cell_ok(compose_lax_monoidal(t.h, fac.g), f, comps));
        ++factored;
      }
      PrecompReport r = verify_precomp_equivalence(s.h, t.h, e, candidates, lifts);
      CHECK(r.ok());
      CHECK(r.invalid_candidates.empty());
      for (const auto& p : r.pairs) CHECK(p.bijective);
    }
  }
  CHECK(factored > 50);
}

TEST_CASE("strong functors factor through strong functors") {
  MonRef m = mon_z2fat();
  Skeleton s = skeletalize(m->base);
  TransportedMonoidal t = transport_monoidal(s.h, m);
  for (const MonRef& e : targets()) {
    auto lifts = enumerate_lax_monoidal(m, e);
    auto candidates = enumerate_lax_monoidal(t.monoidal, e);
    PrecompReport r = verify_precomp_equivalence(s.h, t.h, e, candidates, lifts, true);
    CHECK(r.ok());
    std::size_t strong_lifts = 0;
    for (auto& f : lifts) strong_lifts += is_strong_monoidal(f).strong;
    CHECK(r.factorizations.size() == strong_lifts);
    CHECK(r.non_strong_lifts.size() == lifts.size() - strong_lifts);
    for (auto& [k, fac] : r.factorizations) CHECK(is_strong_monoidal(fac.g).strong);
  }
}

TEST_CASE("an invalid candidate is reported, not counted") {
  MonRef m = mon_t1();
  Skeleton s = skeletalize(m->base);
  TransportedMonoidal t = transport_monoidal(s.h, m);
  LaxMonoidalFunctor bad = bz2_bad_eps();
  Functor point{t.monoidal->base, bad.cod->base, {obj_id(0)}, {bad.cod->base->identity(obj_id(0))}};
  LaxMonoidalFunctor from_t{t.monoidal, bad.cod, point, {bad.mu[0]}, bad.eps, std::nullopt};
  PrecompReport r = verify_precomp_equivalence(s.h, t.h, bad.cod, {from_t}, {});
  CHECK(r.invalid_candidates == std::vector<std::size_t>{0});
  CHECK(r.ok());
}

TEST_CASE("lax structure lifted along H makes H·G equal the given data") {
  MonRef m = mon_z2fat();
  Skeleton s = skeletalize(m->base);
  TransportedMonoidal t = transport_monoidal(s.h, m);
  for (const MonRef& e : targets()) {
    for (auto& g : enumerate_lax_monoidal(t.monoidal, e)) {
      LaxMonoidalFunctor hg = compose_lax_monoidal(t.h, g);
      LaxMonoidalFunctor back = lift_lax_structure(s.h, t.h, g.functor, e, hg.mu, hg.eps);
      CHECK(back == g);
    }
  }
}
