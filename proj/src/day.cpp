#include "moncat/day.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace moncat {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }

  // The smaller root survives, so every root is the least member of its class.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Evaluates `image` on every member of a class and insists on one answer.
template <typename Fn>
std::uint32_t constant_on(const std::vector<std::uint32_t>& members, const char* what, Fn image) {
  std::optional<std::uint32_t> value;
  for (auto t : members) {
    const std::uint32_t v = image(t);
    if (value && *value != v) throw std::logic_error(std::string(what) + " is not well defined on classes");
    value = v;
  }
  if (!value) throw std::logic_error(std::string(what) + ": empty class");
  return *value;
}

std::uint32_t position_of(const FinCat& c, ObjId x, ObjId y, MorId f) {
  auto h = c.hom(x, y);
  auto it = std::find(h.begin(), h.end(), f);
  if (it == h.end()) throw std::logic_error("morphism outside its hom-set");
  return static_cast<std::uint32_t>(it - h.begin());
}

}  // namespace

std::size_t CoendTable::index(const Triple& t) const {
  return block_offset[idx(t.a) * n + idx(t.b)] +
         (static_cast<std::size_t>(hom_pos[idx(t.h)]) * fsize[idx(t.a)] + t.x) * gsize[idx(t.b)] + t.y;
}

CoendTable coend_quotient(const MonoidalCategory& m, const Presheaf& f, const Presheaf& g, ObjId c,
                          const CoendOptions& opt) {
  const FinCat& base = *m.base;
  CoendTable t;
  t.c = c;
  t.n = m.n();
  t.hom_pos = hom_positions(base);
  for (std::size_t a = 0; a < t.n; ++a) {
    t.fsize.push_back(f.at[a].size());
    t.gsize.push_back(g.at[a].size());
  }
  t.block_offset.assign(t.n * t.n + 1, 0);
  for (std::size_t a = 0; a < t.n; ++a) {
    for (std::size_t b = 0; b < t.n; ++b) {
      const std::size_t k = a * t.n + b;
      const std::size_t homs = base.hom(c, m(obj_id(a), obj_id(b))).size();
      t.block_offset[k + 1] = t.block_offset[k] + saturating_mul(homs, saturating_mul(t.fsize[a], t.gsize[b]));
    }
  }
  const std::size_t total = t.block_offset.back();

  std::size_t generators = 0;
  for (std::size_t a = 0; a < t.n; ++a) {
    for (std::size_t b = 0; b < t.n; ++b) {
      const std::size_t homs = base.hom(c, m(obj_id(a), obj_id(b))).size();
      for (std::size_t a2 = 0; a2 < t.n; ++a2) {
        for (std::size_t b2 = 0; b2 < t.n; ++b2) {
          const std::size_t uv = base.hom(obj_id(a), obj_id(a2)).size() * base.hom(obj_id(b), obj_id(b2)).size();
          generators += saturating_mul(saturating_mul(homs, uv), saturating_mul(t.fsize[a2], t.gsize[b2]));
        }
      }
    }
  }
  if (total + generators > opt.bound || total + generators < total) {
    throw ResourceExceeded("coend_quotient", total + generators, opt.bound);
  }

  t.triples.reserve(total);
  for (std::size_t a = 0; a < t.n; ++a) {
    for (std::size_t b = 0; b < t.n; ++b) {
      for (MorId h : base.hom(c, m(obj_id(a), obj_id(b)))) {
        for (std::uint32_t x = 0; x < t.fsize[a]; ++x) {
          for (std::uint32_t y = 0; y < t.gsize[b]; ++y) t.triples.push_back({obj_id(a), obj_id(b), h, x, y});
        }
      }
    }
  }

  // (h·(u⊗v), x', y') ~ (h, F(u) x', G(v) y')
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  UnionFind uf(total);
  auto emit = [&](std::size_t i, std::size_t j) {
    if (opt.shuffle_seed) {
      pairs.emplace_back(i, j);
    } else {
      uf.unite(i, j);
    }
  };
  for (std::size_t a = 0; a < t.n; ++a) {
    for (std::size_t b = 0; b < t.n; ++b) {
      const ObjId ab = m(obj_id(a), obj_id(b));
      for (std::size_t a2 = 0; a2 < t.n; ++a2) {
        for (std::size_t b2 = 0; b2 < t.n; ++b2) {
          for (MorId u : base.hom(obj_id(a), obj_id(a2))) {
            for (MorId v : base.hom(obj_id(b), obj_id(b2))) {
              if (base.is_identity(u) && base.is_identity(v)) continue;
              const MorId uv = m(u, v);
              for (MorId h : base.hom(c, ab)) {
                const MorId h2 = base.then(h, uv);
                for (std::uint32_t x = 0; x < t.fsize[a2]; ++x) {
                  for (std::uint32_t y = 0; y < t.gsize[b2]; ++y) {
                    const Triple lhs{obj_id(a2), obj_id(b2), h2, x, y};
                    const Triple rhs{obj_id(a), obj_id(b), h, f.action[idx(u)][x], g.action[idx(v)][y]};
                    emit(t.index(lhs), t.index(rhs));
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  t.generators = generators;
  if (opt.shuffle_seed) {
    std::mt19937_64 rng(*opt.shuffle_seed);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    for (auto [i, j] : pairs) {
      if (rng() & 1) std::swap(i, j);
      uf.unite(i, j);
    }
  }

  t.class_of.assign(total, 0);
  std::vector<std::uint32_t> class_of_root(total, 0);
  for (std::size_t i = 0; i < total; ++i) {
    const std::size_t r = uf.find(i);
    if (r == i) {
      class_of_root[i] = static_cast<std::uint32_t>(t.representative.size());
      t.representative.push_back(static_cast<std::uint32_t>(i));
      t.members.emplace_back();
    }
    t.class_of[i] = class_of_root[r];
    t.members[t.class_of[i]].push_back(static_cast<std::uint32_t>(i));
  }
  return t;
}

DayProduct day_product(const MonoidalCategory& m, const Presheaf& f, const Presheaf& g, const CoendOptions& opt) {
  const FinCat& base = *m.base;
  DayProduct d;
  d.presheaf.base = m.base;
  for (std::size_t c = 0; c < m.n(); ++c) {
    d.tables.push_back(coend_quotient(m, f, g, obj_id(c), opt));
    const CoendTable& t = d.tables.back();
    FinSet s;
    for (auto r : t.representative) {
      const Triple& tr = t.triples[r];
      s.labels.push_back("[" + base.morphism_name(tr.h) + "|" + base.object_name(tr.a) + ":" +
                         f.at[idx(tr.a)].labels[tr.x] + "|" + base.object_name(tr.b) + ":" +
                         g.at[idx(tr.b)].labels[tr.y] + "]");
    }
    d.presheaf.at.push_back(std::move(s));
  }
  // g: c' -> c acts by (h, x, y) |-> (g·h, x, y)
  for (std::size_t k = 0; k < base.num_morphisms(); ++k) {
    const MorId km = mor_id(k);
    const CoendTable& from = d.tables[idx(base.tgt(km))];
    const CoendTable& to = d.tables[idx(base.src(km))];
    SetMap a;
    for (const auto& members : from.members) {
      a.push_back(constant_on(members, "Day action", [&](std::uint32_t i) {
        Triple tr = from.triples[i];
        tr.h = base.then(km, tr.h);
        return to.class_at(tr);
      }));
    }
    d.presheaf.action.push_back(std::move(a));
  }
  return d;
}

Presheaf day_tensor(const MonoidalCategory& m, const Presheaf& f, const Presheaf& g, const CoendOptions& opt) {
  return day_product(m, f, g, opt).presheaf;
}

PresheafMap day_map(const DayProduct& source, const DayProduct& target, const PresheafMap& a, const PresheafMap& b) {
  PresheafMap out;
  for (std::size_t c = 0; c < source.tables.size(); ++c) {
    const CoendTable& from = source.tables[c];
    const CoendTable& to = target.tables[c];
    SetMap comp;
    for (const auto& members : from.members) {
      comp.push_back(constant_on(members, "day_map", [&](std::uint32_t i) {
        Triple tr = from.triples[i];
        tr.x = a.components[idx(tr.a)][tr.x];
        tr.y = b.components[idx(tr.b)][tr.y];
        return to.class_at(tr);
      }));
    }
    out.components.push_back(std::move(comp));
  }
  return out;
}

LawReport check_presheaf_iso(const PresheafIso& i) {
  LawReport r;
  r.append(check_presheaf_map(i.source, i.target, i.forward));
  r.append(check_presheaf_map(i.target, i.source, i.inverse));
  if (!r.ok()) return r;
  if (then(i.forward, i.inverse) != identity_map(i.source)) r.violation("iso-inverse", {0}, "inverse after forward");
  if (then(i.inverse, i.forward) != identity_map(i.target)) r.violation("iso-inverse", {1}, "forward after inverse");
  return r;
}

DayStructure::DayStructure(MonRef m, std::size_t bound)
    : m_(std::move(m)), bound_(bound), unit_(yoneda(m_->base, m_->unit)) {}

DayProduct DayStructure::product(const Presheaf& f, const Presheaf& g) const {
  return day_product(*m_, f, g, CoendOptions{bound_, std::nullopt});
}

PresheafIso DayStructure::left_unitor(const Presheaf& f) const {
  const MonoidalCategory& m = *m_;
  const FinCat& base = *m.base;
  DayProduct s = product(unit_, f);
  PresheafIso out{s.presheaf, f, {}, {}};
  const std::uint32_t id_unit = position_of(base, m.unit, m.unit, m.id(m.unit));
  for (std::size_t c = 0; c < m.n(); ++c) {
    const CoendTable& t = s.tables[c];
    SetMap fwd, inv;
    for (const auto& members : t.members) {
      fwd.push_back(constant_on(members, "left unitor", [&](std::uint32_t i) {
        const Triple& tr = t.triples[i];
        const MorId u = base.hom(tr.a, m.unit)[tr.x];
        const MorId k = base.then(base.then(tr.h, m(u, m.id(tr.b))), m.lambda(tr.b));
        return f.action[idx(k)][tr.y];
      }));
    }
    for (std::uint32_t y = 0; y < f.at[c].size(); ++y) {
      inv.push_back(t.class_at({m.unit, obj_id(c), m.left.inverse[c], id_unit, y}));
    }
    out.forward.components.push_back(std::move(fwd));
    out.inverse.components.push_back(std::move(inv));
  }
  return out;
}

PresheafIso DayStructure::right_unitor(const Presheaf& f) const {
  const MonoidalCategory& m = *m_;
  const FinCat& base = *m.base;
  DayProduct s = product(f, unit_);
  PresheafIso out{s.presheaf, f, {}, {}};
  const std::uint32_t id_unit = position_of(base, m.unit, m.unit, m.id(m.unit));
  for (std::size_t c = 0; c < m.n(); ++c) {
    const CoendTable& t = s.tables[c];
    SetMap fwd, inv;
    for (const auto& members : t.members) {
      fwd.push_back(constant_on(members, "right unitor", [&](std::uint32_t i) {
        const Triple& tr = t.triples[i];
        const MorId v = base.hom(tr.b, m.unit)[tr.y];
        const MorId k = base.then(base.then(tr.h, m(m.id(tr.a), v)), m.rho(tr.a));
        return f.action[idx(k)][tr.x];
      }));
    }
    for (std::uint32_t x = 0; x < f.at[c].size(); ++x) {
      inv.push_back(t.class_at({obj_id(c), m.unit, m.right.inverse[c], x, id_unit}));
    }
    out.forward.components.push_back(std::move(fwd));
    out.inverse.components.push_back(std::move(inv));
  }
  return out;
}

PresheafIso DayStructure::associator(const Presheaf& f, const Presheaf& g, const Presheaf& k) const {
  const MonoidalCategory& m = *m_;
  const FinCat& base = *m.base;
  const DayProduct fg = product(f, g);
  const DayProduct gk = product(g, k);
  const DayProduct left = product(fg.presheaf, k);
  const DayProduct right = product(f, gk.presheaf);
  PresheafIso out{left.presheaf, right.presheaf, {}, {}};
  for (std::size_t c = 0; c < m.n(); ++c) {
    const CoendTable& lt = left.tables[c];
    const CoendTable& rt = right.tables[c];
    SetMap fwd, inv;
    for (const auto& members : lt.members) {
      fwd.push_back(constant_on(members, "associator", [&](std::uint32_t i) {
        const Triple& outer = lt.triples[i];  // (h: c -> d⊗e, p, z)
        const CoendTable& inner = fg.tables[idx(outer.a)];
        return constant_on(inner.members[outer.x], "associator", [&](std::uint32_t j) {
          const Triple& in = inner.triples[j];  // (h': d -> a⊗b, x, y)
          const ObjId be = m(in.b, outer.b);
          const MorId h = base.then(base.then(outer.h, m(in.h, m.id(outer.b))), m.alpha(in.a, in.b, outer.b));
          const std::uint32_t q = gk.tables[idx(be)].class_at({in.b, outer.b, m.id(be), in.y, outer.y});
          return rt.class_at({in.a, be, h, in.x, q});
        });
      }));
    }
    for (const auto& members : rt.members) {
      inv.push_back(constant_on(members, "associator inverse", [&](std::uint32_t i) {
        const Triple& outer = rt.triples[i];  // (h: c -> a⊗d, x, q)
        const CoendTable& inner = gk.tables[idx(outer.b)];
        return constant_on(inner.members[outer.y], "associator inverse", [&](std::uint32_t j) {
          const Triple& in = inner.triples[j];  // (h': d -> b⊗e, y, z)
          const ObjId ab = m(outer.a, in.a);
          const MorId h = base.then(base.then(outer.h, m(m.id(outer.a), in.h)), m.alpha_inv(outer.a, in.a, in.b));
          const std::uint32_t p = fg.tables[idx(ab)].class_at({outer.a, in.a, m.id(ab), outer.x, in.x});
          return lt.class_at({ab, in.b, h, p, in.y});
        });
      }));
    }
    out.forward.components.push_back(std::move(fwd));
    out.inverse.components.push_back(std::move(inv));
  }
  return out;
}

DayStructure day_structure_cells(const MonRef& m, std::size_t bound) { return DayStructure(m, bound); }

PresheafIso representability_witness(const DayStructure& day, ObjId x, ObjId y) {
  const MonoidalCategory& m = *day.monoidal();
  const FinCat& base = *m.base;
  const Presheaf yx = yoneda(m.base, x), yy = yoneda(m.base, y);
  const DayProduct s = day.product(yx, yy);
  const ObjId xy = m(x, y);
  PresheafIso out{s.presheaf, yoneda(m.base, xy), {}, {}};
  const std::uint32_t id_x = position_of(base, x, x, m.id(x)), id_y = position_of(base, y, y, m.id(y));
  const auto pos = hom_positions(base);
  for (std::size_t c = 0; c < m.n(); ++c) {
    const CoendTable& t = s.tables[c];
    SetMap fwd, inv;
    for (const auto& members : t.members) {
      fwd.push_back(constant_on(members, "representability witness", [&](std::uint32_t i) {
        const Triple& tr = t.triples[i];
        const MorId f = base.hom(tr.a, x)[tr.x];
        const MorId g = base.hom(tr.b, y)[tr.y];
        return pos[idx(base.then(tr.h, m(f, g)))];
      }));
    }
    for (MorId h : base.hom(obj_id(c), xy)) inv.push_back(t.class_at({x, y, h, id_x, id_y}));
    out.forward.components.push_back(std::move(fwd));
    out.inverse.components.push_back(std::move(inv));
  }
  return out;
}

YonedaCompletion restricted_yoneda_completion(const MonRef& mref, std::size_t max_morphisms, std::size_t bound) {
  const MonoidalCategory& m = *mref;
  const CatRef& base = m.base;
  const std::size_t n = m.n(), nm = base->num_morphisms();
  if (nm > max_morphisms) throw ResourceExceeded("restricted_yoneda_completion", nm, max_morphisms);

  YonedaCompletion out;
  for (std::size_t x = 0; x < n; ++x) out.representables.push_back(yoneda(base, obj_id(x)));
  out.maps.resize(nm);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      auto maps = enumerate_presheaf_maps(out.representables[x], out.representables[y], bound);
      auto hom = base->hom(obj_id(x), obj_id(y));
      if (maps.size() != hom.size()) throw std::logic_error("Yoneda embedding is not bijective on a hom-set");
      for (MorId f : hom) {
        const PresheafMap yf = yoneda_on_morphisms(base, f);
        auto it = std::find(maps.begin(), maps.end(), yf);
        if (it == maps.end()) throw std::logic_error("y(f) missing from the enumerated presheaf maps");
        out.maps[idx(f)] = *it;
      }
    }
  }

  auto find_map = [&](ObjId x, ObjId y, const PresheafMap& a) -> MorId {
    for (MorId f : base->hom(x, y)) {
      if (out.maps[idx(f)] == a) return f;
    }
    throw std::logic_error("presheaf map between representables not found");
  };

  std::vector<std::string> objects;
  for (std::size_t x = 0; x < n; ++x) objects.push_back("y(" + base->object_name(obj_id(x)) + ")");
  std::vector<MorphismDecl> decls;
  for (std::size_t f = 0; f < nm; ++f) {
    decls.push_back({"y(" + base->morphism_name(mor_id(f)) + ")", base->src(mor_id(f)), base->tgt(mor_id(f))});
  }
  std::vector<MorId> identities;
  for (std::size_t x = 0; x < n; ++x) {
    identities.push_back(find_map(obj_id(x), obj_id(x), identity_map(out.representables[x])));
  }
  std::vector<std::int32_t> table(nm * nm, FinCat::kUndefined);
  for (std::size_t f = 0; f < nm; ++f) {
    for (std::size_t g = 0; g < nm; ++g) {
      if (decls[f].tgt != decls[g].src) continue;
      const MorId fg = find_map(decls[f].src, decls[g].tgt, then(out.maps[f], out.maps[g]));
      table[f * nm + g] = static_cast<std::int32_t>(idx(fg));
    }
  }
  CatRef r = share(FinCat(objects, decls, identities, table));
  if (!check_category_laws(*r).ok()) throw std::logic_error("representables do not form a category");

  DayStructure day(mref, bound);
  std::vector<PresheafIso> rep(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) rep[x * n + y] = representability_witness(day, obj_id(x), obj_id(y));
  }
  auto rep_at = [&](ObjId x, ObjId y) -> const PresheafIso& { return rep[idx(x) * n + idx(y)]; };
  // Day products in the same order as representability_witness builds them.
  auto prod = [&](ObjId x, ObjId y) { return day.product(out.representables[idx(x)], out.representables[idx(y)]); };

  CatRef rr = share(product_category(*r, *r));
  Functor tensor{rr, r, {}, {}};
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) tensor.omap.push_back(m(obj_id(x), obj_id(y)));
  }
  tensor.mmap.resize(nm * nm);
  std::vector<DayProduct> products(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) products[x * n + y] = prod(obj_id(x), obj_id(y));
  }
  for (std::size_t f = 0; f < nm; ++f) {
    for (std::size_t g = 0; g < nm; ++g) {
      const MorId fm = mor_id(f), gm = mor_id(g);
      const ObjId x1 = base->src(fm), x2 = base->tgt(fm), y1 = base->src(gm), y2 = base->tgt(gm);
      const PresheafMap mid = day_map(products[idx(x1) * n + idx(y1)], products[idx(x2) * n + idx(y2)],
                                      out.maps[f], out.maps[g]);
      const PresheafMap a = then(then(rep_at(x1, y1).inverse, mid), rep_at(x2, y2).forward);
      tensor.mmap[f * nm + g] = find_map(m(x1, y1), m(x2, y2), a);
    }
  }

  Unitor left{NatTrans{Functor{}, identity_functor(r), {}}, {}};
  Unitor right{NatTrans{Functor{}, identity_functor(r), {}}, {}};
  const ObjId i = m.unit;
  for (std::size_t x = 0; x < n; ++x) {
    const ObjId xo = obj_id(x);
    const PresheafIso l = day.left_unitor(out.representables[x]);
    const PresheafIso rr2 = day.right_unitor(out.representables[x]);
    left.forward.components.push_back(find_map(m(i, xo), xo, then(rep_at(i, xo).inverse, l.forward)));
    left.inverse.push_back(find_map(xo, m(i, xo), then(l.inverse, rep_at(i, xo).forward)));
    right.forward.components.push_back(find_map(m(xo, i), xo, then(rep_at(xo, i).inverse, rr2.forward)));
    right.inverse.push_back(find_map(xo, m(xo, i), then(rr2.inverse, rep_at(xo, i).forward)));
  }
  left.forward.source = left_tensor_functor(r, tensor, i);
  right.forward.source = right_tensor_functor(r, tensor, i);

  AssociatorData assoc;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const ObjId xo = obj_id(x), yo = obj_id(y), zo = obj_id(z);
        const Presheaf& px = out.representables[x];
        const Presheaf& py = out.representables[y];
        const Presheaf& pz = out.representables[z];
        const ObjId xy = m(xo, yo), yz = m(yo, zo);
        const PresheafIso a = day.associator(px, py, pz);
        const DayProduct xy_z = prod(xy, zo);
        const DayProduct x_yz = prod(xo, yz);
        const DayProduct pxy = day.product(px, py), pyz = day.product(py, pz);
        const DayProduct l = day.product(pxy.presheaf, pz);
        const DayProduct rgt = day.product(px, pyz.presheaf);
        const PresheafMap in_l = day_map(xy_z, l, rep_at(xo, yo).inverse, identity_map(pz));
        const PresheafMap out_r = day_map(rgt, x_yz, identity_map(px), rep_at(yo, zo).forward);
        const PresheafMap fwd = then(then(then(then(rep_at(xy, zo).inverse, in_l), a.forward), out_r),
                                     rep_at(xo, yz).forward);
        const PresheafMap back_r = day_map(x_yz, rgt, identity_map(px), rep_at(yo, zo).inverse);
        const PresheafMap back_l = day_map(l, xy_z, rep_at(xo, yo).forward, identity_map(pz));
        const PresheafMap inv = then(then(then(then(rep_at(xo, yz).inverse, back_r), a.inverse), back_l),
                                     rep_at(xy, zo).forward);
        assoc.forward.push_back(find_map(m(xy, zo), m(xo, yz), fwd));
        assoc.inverse.push_back(find_map(m(xo, yz), m(xy, zo), inv));
      }
    }
  }

  out.monoidal = share(assemble_monoidal(r, tensor, i, left, right, assoc));
  Functor yon{base, r, {}, {}};
  for (std::size_t x = 0; x < n; ++x) yon.omap.push_back(obj_id(x));
  for (std::size_t f = 0; f < nm; ++f) yon.mmap.push_back(mor_id(f));
  std::vector<MorId> mu;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) mu.push_back(r->identity(m(obj_id(x), obj_id(y))));
  }
  const MorId eps = r->identity(i);
  out.yon = LaxMonoidalFunctor{mref, out.monoidal, yon, mu, eps, StrongData{mu, eps}};
  return out;
}

DayComparison compare_day_vs_transport(const MonRef& m, std::size_t max_morphisms, std::size_t bound) {
  YonedaCompletion completion = restricted_yoneda_completion(m, max_morphisms, bound);
  Skeleton k = skeletalize(completion.monoidal->base);
  auto yon_w = split_eso_witness(completion.yon.functor);
  if (!yon_w.ok()) throw std::logic_error("Yoneda corestriction is not a weak equivalence");
  WeakEquivalence w = compose_weak_equivalences(*yon_w.equivalence, k.h);
  TransportedMonoidal rezk = transport_monoidal(w, m);
  TransportedMonoidal day = transport_monoidal(k.h, completion.monoidal);
  const LaxMonoidalFunctor via = compose_lax_monoidal(completion.yon, day.h);
  LaxMonoidalFunctor cmp =
      lift_lax_structure(w, rezk.h, identity_functor(k.skeleton.category()), day.monoidal, via.mu, via.eps);
  LawReport report;
  report.append(check_lax_monoidal_functor(cmp));
  if (report.ok()) {
    if (is_strong_monoidal(cmp).strong) {
      cmp = make_strong(cmp);
    } else {
      report.violation("comparison-not-strong", {}, "a comparison cell is not invertible");
    }
    report.append(check_monoidal_nat_trans(compose_lax_monoidal(rezk.h, cmp), via, identity_nat_trans(via.functor)));
  }
  return DayComparison{std::move(completion), std::move(k), std::move(rezk), std::move(day), std::move(cmp),
                       std::move(report)};
}

}  // namespace moncat
