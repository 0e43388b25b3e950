#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fixtures.hpp"
#include "generators.hpp"
#include "moncat/json_io.hpp"

using namespace moncat;
using namespace moncat::io;

namespace {

std::string error_pointer(const std::string& text) {
  try {
    from_json(text);
  } catch (const JsonError& e) {
    return e.pointer();
  }
  FAIL("document was accepted");
  return {};
}

// Same outcome and same violation list.
void same_outcome(const LawReport& a, const LawReport& b) {
  CHECK(a.ok() == b.ok());
  CHECK(a.total() == b.total());
  REQUIRE(a.violations().size() == b.violations().size());
  for (std::size_t i = 0; i < a.violations().size(); ++i) {
    CHECK(a.violations()[i].law == b.violations()[i].law);
    CHECK(a.violations()[i].witness == b.violations()[i].witness);
  }
}

MonoidalCategory mutated(const MonoidalCategory& m, std::mt19937& rng) {
  MonoidalCategory out = m;
  const std::size_t k = m.base->num_morphisms();
  switch (rng() % 3) {
    case 0: out.assoc.forward[rng() % out.assoc.forward.size()] = mor_id(rng() % k); break;
    case 1: out.left.forward.components[rng() % m.n()] = mor_id(rng() % k); break;
    default: out.tensor.mmap[rng() % out.tensor.mmap.size()] = mor_id(rng() % k); break;
  }
  return out;
}

}  // namespace

TEST_CASE("round trip T1") {
  CatRef t = fixtures::t1();
  const std::string text = to_json(*t);
  CHECK(*from_json_as<CatRef>(text) == *t);
  CHECK(to_json(*from_json_as<CatRef>(text)) == text);
  Document d = from_json(text);
  CHECK(d.kind == "category");
}

TEST_CASE("round trip monoidal fixtures") {
  for (const auto& [name, m] : fixtures::monoidal_fixtures()) {
    INFO(name);
    const std::string text = to_json(*m);
    MonRef back = from_json_as<MonRef>(text);
    CHECK(*back == *m);
    CHECK(back->left == m->left);
    CHECK(back->assoc == m->assoc);
    same_outcome(check_monoidal_laws(*back), check_monoidal_laws(*m));
    CHECK(to_json(*back) == text);
  }
}

TEST_CASE("round trip transported Z2FAT") {
  MonRef m = fixtures::mon_z2fat();
  Skeleton sk = skeletalize(m->base);
  TransportedMonoidal t = transport_monoidal(sk.h, m);
  const std::string text = to_json(t);
  TransportedMonoidal back = from_json_as<TransportedMonoidal>(text);
  CHECK(*back.monoidal == *t.monoidal);
  CHECK(back.h == t.h);
  REQUIRE(back.h.strong);
  CHECK(*back.h.strong == *t.h.strong);
  CHECK(back.tensor.tensor == t.tensor.tensor);
  CHECK(back.tensor.mu == t.tensor.mu);
  CHECK(back.tensor.mu_inverse == t.tensor.mu_inverse);
  CHECK(back.tensor.source_objects == t.tensor.source_objects);

  CHECK(check_monoidal_laws(*back.monoidal).ok());
  CHECK(check_lax_monoidal_functor(back.h).ok());
  CHECK(is_strong_monoidal(back.h).strong);
  CHECK(to_json(back) == text);
}

TEST_CASE("round trip transported structures of all fixtures") {
  for (const auto& [name, m] : fixtures::monoidal_fixtures()) {
    INFO(name);
    Skeleton sk = skeletalize(m->base);
    TransportedMonoidal t = transport_monoidal(sk.h, m);
    TransportedMonoidal back = from_json_as<TransportedMonoidal>(to_json(t));
    same_outcome(check_monoidal_laws(*back.monoidal), check_monoidal_laws(*t.monoidal));
    same_outcome(check_lax_monoidal_functor(back.h), check_lax_monoidal_functor(t.h));
    CHECK(is_strong_monoidal(back.h).strong == is_strong_monoidal(t.h).strong);
  }
}

TEST_CASE("round trip skeleton and weak equivalence") {
  for (CatRef c : {fixtures::z2fat(), fixtures::wi(), fixtures::bz2()}) {
    Skeleton sk = skeletalize(c);
    Skeleton back = from_json_as<Skeleton>(to_json(sk));
    CHECK(*back.skeleton == *sk.skeleton);
    CHECK(back.h.functor == sk.h.functor);
    CHECK(back.h.section == sk.h.section);
    CHECK(back.h.eta == sk.h.eta);
    CHECK(check_weak_equivalence(back.h).ok());
    for (std::size_t x = 0; x < c->num_objects(); ++x) {
      for (std::size_t y = 0; y < c->num_objects(); ++y) {
        CHECK(back.h.ff.entries(obj_id(x), obj_id(y)) == sk.h.ff.entries(obj_id(x), obj_id(y)));
      }
    }
    WeakEquivalence w = from_json_as<WeakEquivalence>(to_json(sk.h));
    CHECK(w.functor == sk.h.functor);
    CHECK(check_weak_equivalence(w).ok());
  }
}

TEST_CASE("round trip functors and transformations") {
  for (const LaxMonoidalFunctor& f : {fixtures::arrow_point(), fixtures::parity(), fixtures::bz2_bad_eps()}) {
    LaxMonoidalFunctor back = from_json_as<LaxMonoidalFunctor>(to_json(f));
    CHECK(back == f);
    CHECK(same_category(back.functor.dom, back.dom->base));
    same_outcome(check_lax_monoidal_functor(back), check_lax_monoidal_functor(f));
    CHECK(from_json_as<Functor>(to_json(f.functor)) == f.functor);
  }
  const Functor id = identity_functor(fixtures::bz2());
  for (const NatTrans& t : enumerate_nat_trans(id, id)) {
    NatTrans back = from_json_as<NatTrans>(to_json(t));
    CHECK(back == t);
    same_outcome(check_naturality(back), check_naturality(t));
  }
  LaxMonoidalFunctor strong = make_strong(fixtures::parity());
  CHECK(*from_json_as<LaxMonoidalFunctor>(to_json(strong)).strong == *strong.strong);
}

TEST_CASE("law outcomes survive the round trip") {
  gen::Rng rng(3);
  std::mt19937 mut(9);
  std::size_t failing = 0;
  for (int i = 0; i < 120; ++i) {
    gen::Sample s = gen::category(rng);
    INFO(s.label);
    if (s.cat->num_morphisms() == 0) continue;
    const FinCat broken = s.cat->with_entry(mor_id(mut() % s.cat->num_morphisms()),
                                            mor_id(mut() % s.cat->num_morphisms()),
                                            static_cast<std::int32_t>(mut() % s.cat->num_morphisms()));
    same_outcome(check_category_laws(*from_json_as<CatRef>(to_json(broken))), check_category_laws(broken));
    if (!s.monoidal) continue;
    const MonoidalCategory bad = mutated(**s.monoidal, mut);
    const MonoidalCategory back = *from_json_as<MonRef>(to_json(bad));
    CHECK(back == bad);
    auto f1 = validate_layers(back.base, back.tensor, back.unit, back.left, back.right, back.assoc);
    auto f2 = validate_layers(bad.base, bad.tensor, bad.unit, bad.left, bad.right, bad.assoc);
    REQUIRE(f1.has_value() == f2.has_value());
    if (f1) {
      ++failing;
      CHECK(f1->layer == f2->layer);
      same_outcome(f1->report, f2->report);
    }
  }
  CHECK(failing > 0);
}

TEST_CASE("truncated input") {
  const std::string text = to_json(*fixtures::mon_bz2());
  for (std::size_t cut : {std::size_t{0}, std::size_t{1}, text.size() / 2, text.size() - 2}) {
    CHECK(error_pointer(text.substr(0, cut)) == "");
  }
}

TEST_CASE("schema violations name the pointer") {
  const std::string text = to_json(*fixtures::wi());
  auto edit = [&](const std::string& from, const std::string& to) {
    std::string s = text;
    const auto at = s.find(from);
    REQUIRE(at != std::string::npos);
    s.replace(at, from.size(), to);
    return s;
  };
  CHECK(error_pointer(edit("\"format_version\":1", "\"format_version\":2")) == "/format_version");
  CHECK(error_pointer(edit("\"kind\":\"category\"", "\"kind\":\"poset\"")) == "/kind");
  CHECK(error_pointer(edit("\"src\":0", "\"src\":\"a\"")) == "/categories/0/morphisms/0/src");
  CHECK(error_pointer(edit("\"tgt\":1", "\"tgt\":7")) == "/categories/0/morphisms/1/tgt");
  CHECK(error_pointer(edit("\"identities\":[0,1]", "\"identities\":[0]")) == "/categories/0/identities");
  CHECK(error_pointer(edit("\"value\":0", "\"value\":3")) == "/value");
  CHECK(error_pointer("[1,2]") == "");
  CHECK_THROWS_AS(from_json_as<MonRef>(text), JsonError);
}

TEST_CASE("weak equivalence evidence is recomputed") {
  Skeleton sk = skeletalize(fixtures::wi());
  std::string text = to_json(sk.h);
  CHECK(from_json_as<WeakEquivalence>(text).ff.dom_objects() == 2);
  // B(Z/2) -> T1 is not faithful
  Functor collapse = to_terminal(fixtures::bz2(), fixtures::t1());
  WeakEquivalence fake{collapse, FfEvidence(1), {obj_id(0)}, {{mor_id(0), mor_id(0)}}};
  CHECK(error_pointer(to_json(fake)) == "/value/functor");
}
