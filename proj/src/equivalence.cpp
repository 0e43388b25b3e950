#include "moncat/equivalence.hpp"

#include <algorithm>
#include <stdexcept>

namespace moncat {

namespace {
std::uint32_t u32(std::size_t v) { return static_cast<std::uint32_t>(v); }
}  // namespace

std::vector<IsoWitness> find_isos(const FinCat& c, ObjId x, ObjId y) {
  std::vector<IsoWitness> out;
  for (MorId f : c.hom(x, y)) {
    for (MorId g : c.hom(y, x)) {
      if (is_valid_iso(c, {f, g})) out.push_back({f, g});
    }
  }
  return out;
}

bool is_valid_iso(const FinCat& c, IsoWitness w) {
  if (idx(w.forward) >= c.num_morphisms() || idx(w.backward) >= c.num_morphisms()) return false;
  const ObjId x = c.src(w.forward), y = c.tgt(w.forward);
  if (c.src(w.backward) != y || c.tgt(w.backward) != x) return false;
  return c.then(w.forward, w.backward) == c.identity(x) && c.then(w.backward, w.forward) == c.identity(y);
}

std::optional<MorId> inverse_of(const FinCat& c, MorId f) {
  for (MorId g : c.hom(c.tgt(f), c.src(f))) {
    if (is_valid_iso(c, {f, g})) return g;
  }
  return std::nullopt;
}

bool is_iso(const FinCat& c, MorId f) { return inverse_of(c, f).has_value(); }

void FfEvidence::record(ObjId x, ObjId y, MorId image, MorId preimage) {
  auto& v = inverse_[idx(x) * n_ + idx(y)];
  auto it = std::lower_bound(v.begin(), v.end(), image, [](const auto& e, MorId k) { return e.first < k; });
  v.insert(it, {image, preimage});
}

std::optional<MorId> FfEvidence::preimage(ObjId x, ObjId y, MorId image) const {
  if (idx(x) >= n_ || idx(y) >= n_) return std::nullopt;
  const auto& v = inverse_[idx(x) * n_ + idx(y)];
  auto it = std::lower_bound(v.begin(), v.end(), image, [](const auto& e, MorId k) { return e.first < k; });
  if (it == v.end() || it->first != image) return std::nullopt;
  return it->second;
}

FullyFaithfulResult is_fully_faithful(const Functor& f) {
  const FinCat& c = *f.dom;
  const FinCat& d = *f.cod;
  FullyFaithfulResult r;
  r.evidence = FfEvidence(c.num_objects());
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    for (std::size_t y = 0; y < c.num_objects(); ++y) {
      const ObjId xo = obj_id(x), yo = obj_id(y);
      auto source = c.hom(xo, yo);
      auto target = d.hom(f(xo), f(yo));
      std::vector<MorId> images;
      images.reserve(source.size());
      for (MorId m : source) images.push_back(f(m));
      std::vector<MorId> sorted = images;
      std::sort(sorted.begin(), sorted.end());
      const bool injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
      // hom spans are sorted by id, so equality means a bijection onto target.
      const bool bijective = injective && std::equal(sorted.begin(), sorted.end(), target.begin(), target.end());
      if (!bijective) {
        r.failing_pairs.emplace_back(xo, yo);
        continue;
      }
      for (std::size_t i = 0; i < source.size(); ++i) r.evidence.record(xo, yo, images[i], source[i]);
    }
  }
  r.fully_faithful = r.failing_pairs.empty();
  return r;
}

MorId WeakEquivalence::preimage(ObjId x, ObjId y, MorId k) const {
  auto p = ff.preimage(x, y, k);
  if (!p) throw std::logic_error("weak equivalence: morphism has no preimage");
  return *p;
}

SplitEsoResult split_eso_witness(const Functor& f) {
  SplitEsoResult r;
  auto ff = is_fully_faithful(f);
  r.not_fully_faithful = ff.failing_pairs;
  const FinCat& c = *f.dom;
  const FinCat& d = *f.cod;
  std::vector<ObjId> section(d.num_objects());
  std::vector<IsoWitness> eta(d.num_objects());
  for (std::size_t t = 0; t < d.num_objects(); ++t) {
    const ObjId dt = obj_id(t);
    bool found = false;
    for (std::size_t x = 0; x < c.num_objects() && !found; ++x) {
      if (f(obj_id(x)) == dt) {
        section[t] = obj_id(x);
        eta[t] = {d.identity(dt), d.identity(dt)};
        found = true;
      }
    }
    for (std::size_t x = 0; x < c.num_objects() && !found; ++x) {
      auto isos = find_isos(d, f(obj_id(x)), dt);
      if (!isos.empty()) {
        section[t] = obj_id(x);
        eta[t] = isos.front();
        found = true;
      }
    }
    if (!found) r.unreachable.push_back(dt);
  }
  if (ff.fully_faithful && r.unreachable.empty()) {
    r.equivalence = WeakEquivalence{f, std::move(ff.evidence), std::move(section), std::move(eta)};
  }
  return r;
}

LawReport check_weak_equivalence(const WeakEquivalence& w) {
  LawReport report = check_functor_laws(w.functor);
  if (!report.ok()) return report;
  const FinCat& c = *w.dom();
  const FinCat& d = *w.cod();
  if (w.section.size() != d.num_objects() || w.eta.size() != d.num_objects()) {
    report.structural("section-totality", {u32(w.section.size()), u32(w.eta.size())});
    return report;
  }
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    for (std::size_t y = 0; y < c.num_objects(); ++y) {
      const ObjId xo = obj_id(x), yo = obj_id(y);
      for (MorId m : c.hom(xo, yo)) {
        if (w.ff.preimage(xo, yo, w.functor(m)) != m) report.violation("ff-evidence", {u32(x), u32(y), u32(idx(m))});
      }
      for (MorId k : d.hom(w.functor(xo), w.functor(yo))) {
        auto p = w.ff.preimage(xo, yo, k);
        if (!p || w.functor(*p) != k) report.violation("ff-evidence", {u32(x), u32(y), u32(idx(k))}, "not full");
      }
    }
  }
  for (std::size_t t = 0; t < d.num_objects(); ++t) {
    const ObjId s = w.section[t];
    if (idx(s) >= c.num_objects()) {
      report.structural("dangling-id", {u32(t)}, "section out of range");
      continue;
    }
    const IsoWitness e = w.eta[t];
    if (!is_valid_iso(d, e) || d.src(e.forward) != w.functor(s) || d.tgt(e.forward) != obj_id(t)) {
      report.violation("eta-iso", {u32(t)});
    }
  }
  return report;
}

WeakEquivalence product_weak_equivalence(const WeakEquivalence& a, const WeakEquivalence& b, const CatRef& dom,
                                         const CatRef& cod) {
  WeakEquivalence w;
  w.functor = product_functor(a.functor, b.functor, dom, cod);
  const std::size_t na = a.dom()->num_objects(), nb = b.dom()->num_objects();
  const std::size_t mb_dom = b.dom()->num_morphisms(), mb_cod = b.cod()->num_morphisms();
  const std::size_t db = b.cod()->num_objects();
  w.ff = FfEvidence(na * nb);
  for (std::size_t x1 = 0; x1 < na; ++x1) {
    for (std::size_t x2 = 0; x2 < nb; ++x2) {
      for (std::size_t y1 = 0; y1 < na; ++y1) {
        for (std::size_t y2 = 0; y2 < nb; ++y2) {
          const ObjId x = obj_id(x1 * nb + x2), y = obj_id(y1 * nb + y2);
          for (auto [k1, p1] : a.ff.entries(obj_id(x1), obj_id(y1))) {
            for (auto [k2, p2] : b.ff.entries(obj_id(x2), obj_id(y2))) {
              w.ff.record(x, y, pair_morphism(k1, k2, mb_cod), pair_morphism(p1, p2, mb_dom));
            }
          }
        }
      }
    }
  }
  const std::size_t da = a.cod()->num_objects();
  w.section.resize(da * db);
  w.eta.resize(da * db);
  for (std::size_t d1 = 0; d1 < da; ++d1) {
    for (std::size_t d2 = 0; d2 < db; ++d2) {
      w.section[d1 * db + d2] = pair_object(a.section[d1], b.section[d2], nb);
      w.eta[d1 * db + d2] = {pair_morphism(a.eta[d1].forward, b.eta[d2].forward, mb_cod),
                             pair_morphism(a.eta[d1].backward, b.eta[d2].backward, mb_cod)};
    }
  }
  return w;
}

WeakEquivalence compose_weak_equivalences(const WeakEquivalence& a, const WeakEquivalence& b) {
  WeakEquivalence w;
  w.functor = compose(a.functor, b.functor);
  const FinCat& c = *a.dom();
  const FinCat& e = *b.cod();
  w.ff = FfEvidence(c.num_objects());
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    for (std::size_t y = 0; y < c.num_objects(); ++y) {
      const ObjId xo = obj_id(x), yo = obj_id(y);
      for (auto [k, p] : b.ff.entries(a.functor(xo), a.functor(yo))) {
        auto q = a.ff.preimage(xo, yo, p);
        if (q) w.ff.record(xo, yo, k, *q);
      }
    }
  }
  w.section.resize(e.num_objects());
  w.eta.resize(e.num_objects());
  for (std::size_t t = 0; t < e.num_objects(); ++t) {
    const ObjId mid = b.section[t];
    w.section[t] = a.section[idx(mid)];
    // G(F(s_a(mid))) --G(eta_a)--> G(mid) --eta_b--> t
    const IsoWitness ea = a.eta[idx(mid)];
    const IsoWitness eb = b.eta[t];
    w.eta[t] = {e.then(b.functor(ea.forward), eb.forward), e.then(eb.backward, b.functor(ea.backward))};
  }
  return w;
}

std::vector<std::pair<ObjId, ObjId>> cross_isomorphic_pairs(const FinCat& c) {
  std::vector<std::pair<ObjId, ObjId>> out;
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    for (std::size_t y = x + 1; y < c.num_objects(); ++y) {
      if (!find_isos(c, obj_id(x), obj_id(y)).empty()) out.emplace_back(obj_id(x), obj_id(y));
    }
  }
  return out;
}

bool is_skeletal(const FinCat& c) { return cross_isomorphic_pairs(c).empty(); }

SkeletalCat::SkeletalCat(CatRef c) : cat_(std::move(c)) {
  auto pairs = cross_isomorphic_pairs(*cat_);
  if (!pairs.empty()) {
    throw std::invalid_argument("category is not skeletal: objects '" + cat_->object_name(pairs[0].first) + "' and '" +
                                cat_->object_name(pairs[0].second) + "' are isomorphic");
  }
}

}  // namespace moncat
