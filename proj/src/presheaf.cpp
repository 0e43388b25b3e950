#include "moncat/presheaf.hpp"

#include <set>

namespace moncat {

namespace {

using Witness = std::vector<std::uint32_t>;

Witness w1(std::size_t a) { return {static_cast<std::uint32_t>(a)}; }
Witness w2(std::size_t a, std::size_t b) { return {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)}; }

bool same_shape(const Presheaf& f, const Presheaf& g) {
  return f.base && g.base && (f.base == g.base || f.base->same_shape(*g.base)) && f.at.size() == g.at.size();
}

}  // namespace

FinSet FinSet::numbered(std::size_t n) {
  FinSet s;
  for (std::size_t i = 0; i < n; ++i) s.labels.push_back(std::to_string(i));
  return s;
}

bool operator==(const Presheaf& a, const Presheaf& b) {
  return same_shape(a, b) && a.at == b.at && a.action == b.action;
}

LawReport check_presheaf(const Presheaf& p) {
  LawReport r;
  if (!p.base) {
    r.structural("presheaf-signature", {}, "no base category");
    return r;
  }
  const FinCat& c = *p.base;
  if (p.at.size() != c.num_objects() || p.action.size() != c.num_morphisms()) {
    r.structural("presheaf-signature", {}, "one value set per object and one action per morphism");
    return r;
  }
  for (std::size_t x = 0; x < p.at.size(); ++x) {
    std::set<std::string> seen(p.at[x].labels.begin(), p.at[x].labels.end());
    if (seen.size() != p.at[x].size()) r.structural("finset-labels", w1(x), "duplicate labels");
  }
  bool typed = true;
  for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
    const MorId fm = mor_id(f);
    const SetMap& a = p.action[f];
    const std::size_t from = p.at[idx(c.tgt(fm))].size(), to = p.at[idx(c.src(fm))].size();
    bool ok = a.size() == from;
    for (auto v : a) ok = ok && v < to;
    if (!ok) {
      r.structural("action-signature", w1(f), "action of " + c.morphism_name(fm) + " is not a function of the right type");
      typed = false;
    }
  }
  if (!typed) return r;
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    const SetMap& a = p.action[idx(c.identity(obj_id(x)))];
    for (std::size_t e = 0; e < a.size(); ++e) {
      if (a[e] != e) {
        r.violation("presheaf-identity", w1(x), "identity acts non-trivially on " + p.at[x].labels[e]);
        break;
      }
    }
  }
  for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
    for (std::size_t g = 0; g < c.num_morphisms(); ++g) {
      auto fg = c.compose(mor_id(f), mor_id(g));
      if (!fg) continue;
      const SetMap& af = p.action[f];
      const SetMap& ag = p.action[g];
      const SetMap& afg = p.action[idx(*fg)];
      for (std::size_t e = 0; e < ag.size(); ++e) {
        if (afg[e] != af[ag[e]]) {
          r.violation("presheaf-composition", w2(f, g));
          break;
        }
      }
    }
  }
  return r;
}

LawReport check_presheaf_map(const Presheaf& f, const Presheaf& g, const PresheafMap& a) {
  LawReport r;
  if (!same_shape(f, g) || a.components.size() != f.at.size()) {
    r.structural("presheaf-map-signature", {}, "mismatched bases or component count");
    return r;
  }
  for (std::size_t x = 0; x < f.at.size(); ++x) {
    bool ok = a.components[x].size() == f.at[x].size();
    for (auto v : a.components[x]) ok = ok && v < g.at[x].size();
    if (!ok) r.structural("presheaf-map-signature", w1(x), "component is not a function F(x) -> G(x)");
  }
  if (!r.ok()) return r;
  const FinCat& c = *f.base;
  for (std::size_t k = 0; k < c.num_morphisms(); ++k) {
    const MorId km = mor_id(k);
    const auto s = idx(c.src(km)), t = idx(c.tgt(km));
    for (std::size_t e = 0; e < f.at[t].size(); ++e) {
      if (a.components[s][f.action[k][e]] != g.action[k][a.components[t][e]]) {
        r.violation("presheaf-naturality", w1(k), "square fails at " + c.morphism_name(km));
        break;
      }
    }
  }
  return r;
}

bool is_bijective(const Presheaf& f, const Presheaf& g, const PresheafMap& a) {
  if (a.components.size() != f.at.size() || f.at.size() != g.at.size()) return false;
  for (std::size_t x = 0; x < f.at.size(); ++x) {
    if (f.at[x].size() != g.at[x].size() || a.components[x].size() != f.at[x].size()) return false;
    std::vector<bool> hit(g.at[x].size(), false);
    for (auto v : a.components[x]) {
      if (v >= hit.size() || hit[v]) return false;
      hit[v] = true;
    }
  }
  return true;
}

PresheafMap identity_map(const Presheaf& f) {
  PresheafMap m;
  for (const auto& s : f.at) {
    SetMap id(s.size());
    for (std::size_t e = 0; e < id.size(); ++e) id[e] = static_cast<std::uint32_t>(e);
    m.components.push_back(std::move(id));
  }
  return m;
}

PresheafMap then(const PresheafMap& a, const PresheafMap& b) {
  if (a.components.size() != b.components.size()) throw std::invalid_argument("then: component counts differ");
  PresheafMap m;
  for (std::size_t x = 0; x < a.components.size(); ++x) {
    SetMap c;
    for (auto v : a.components[x]) c.push_back(b.components[x].at(v));
    m.components.push_back(std::move(c));
  }
  return m;
}

std::vector<std::uint32_t> hom_positions(const FinCat& c) {
  std::vector<std::uint32_t> pos(c.num_morphisms(), 0);
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    for (std::size_t y = 0; y < c.num_objects(); ++y) {
      auto h = c.hom(obj_id(x), obj_id(y));
      for (std::size_t i = 0; i < h.size(); ++i) pos[idx(h[i])] = static_cast<std::uint32_t>(i);
    }
  }
  return pos;
}

Presheaf yoneda(const CatRef& c, ObjId x) {
  Presheaf p{c, {}, {}};
  const auto pos = hom_positions(*c);
  for (std::size_t y = 0; y < c->num_objects(); ++y) {
    FinSet s;
    for (MorId f : c->hom(obj_id(y), x)) s.labels.push_back(c->morphism_name(f));
    p.at.push_back(std::move(s));
  }
  for (std::size_t g = 0; g < c->num_morphisms(); ++g) {
    const MorId gm = mor_id(g);
    SetMap a;
    for (MorId k : c->hom(c->tgt(gm), x)) a.push_back(pos[idx(c->then(gm, k))]);
    p.action.push_back(std::move(a));
  }
  return p;
}

PresheafMap yoneda_on_morphisms(const CatRef& c, MorId f) {
  const auto pos = hom_positions(*c);
  PresheafMap m;
  for (std::size_t y = 0; y < c->num_objects(); ++y) {
    SetMap comp;
    for (MorId k : c->hom(obj_id(y), c->src(f))) comp.push_back(pos[idx(c->then(k, f))]);
    m.components.push_back(std::move(comp));
  }
  return m;
}

std::vector<PresheafMap> enumerate_presheaf_maps(const Presheaf& f, const Presheaf& g, std::size_t bound) {
  if (!same_shape(f, g)) throw std::invalid_argument("enumerate_presheaf_maps: different bases");
  const FinCat& c = *f.base;
  // One variable per (object, element); constraints attach to the later of
  // their two variables.
  std::vector<std::size_t> offset(c.num_objects() + 1, 0);
  for (std::size_t x = 0; x < c.num_objects(); ++x) offset[x + 1] = offset[x] + f.at[x].size();
  const std::size_t nvars = offset.back();
  std::vector<std::size_t> obj_of(nvars);
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    for (std::size_t v = offset[x]; v < offset[x + 1]; ++v) obj_of[v] = x;
  }
  // G(k)(a(t, e)) = a(s, F(k)(e)) for k: s -> t
  struct Constraint {
    std::size_t k, var_t, var_s;
  };
  std::vector<std::vector<Constraint>> at_var(nvars);
  for (std::size_t k = 0; k < c.num_morphisms(); ++k) {
    const auto s = idx(c.src(mor_id(k))), t = idx(c.tgt(mor_id(k)));
    for (std::size_t e = 0; e < f.at[t].size(); ++e) {
      const std::size_t vt = offset[t] + e, vs = offset[s] + f.action[k][e];
      at_var[std::max(vt, vs)].push_back({k, vt, vs});
    }
  }
  std::vector<std::uint32_t> value(nvars, 0);
  std::vector<PresheafMap> out;
  std::size_t work = 0;
  auto consistent = [&](std::size_t v) {
    for (const auto& cn : at_var[v]) {
      if (value[cn.var_s] != g.action[cn.k][value[cn.var_t]]) return false;
    }
    return true;
  };
  std::size_t v = 0;
  bool descending = true;
  if (nvars == 0) {
    PresheafMap m;
    m.components.resize(c.num_objects());
    return {m};
  }
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    if (f.at[x].size() > 0 && g.at[x].size() == 0) return {};
  }
  // Iterative backtracking over value[v] in 0..|G(obj_of v)|-1.
  while (true) {
    if (descending) {
      value[v] = 0;
    } else {
      ++value[v];
    }
    const std::size_t range = g.at[obj_of[v]].size();
    while (value[v] < range) {
      if (++work > bound) throw ResourceExceeded("enumerate_presheaf_maps", work, bound);
      if (consistent(v)) break;
      ++value[v];
    }
    if (value[v] < range) {
      if (v + 1 == nvars) {
        PresheafMap m;
        for (std::size_t x = 0; x < c.num_objects(); ++x) {
          m.components.emplace_back(value.begin() + static_cast<std::ptrdiff_t>(offset[x]),
                                    value.begin() + static_cast<std::ptrdiff_t>(offset[x + 1]));
        }
        out.push_back(std::move(m));
        descending = false;
      } else {
        ++v;
        descending = true;
      }
    } else {
      if (v == 0) break;
      --v;
      descending = false;
    }
  }
  return out;
}

YonedaBijection yoneda_lemma_bijection(const CatRef& c, ObjId x, const Presheaf& f, std::size_t bound) {
  YonedaBijection b;
  const Presheaf yx = yoneda(c, x);
  const auto pos = hom_positions(*c);
  for (std::size_t e = 0; e < f.at[idx(x)].size(); ++e) {
    PresheafMap m;
    for (std::size_t y = 0; y < c->num_objects(); ++y) {
      SetMap comp;
      for (MorId h : c->hom(obj_id(y), x)) comp.push_back(f.action[idx(h)][e]);
      m.components.push_back(std::move(comp));
    }
    b.forward.push_back(std::move(m));
  }
  b.nat = enumerate_presheaf_maps(yx, f, bound);
  const std::uint32_t id_pos = pos[idx(c->identity(x))];
  for (const auto& a : b.nat) b.backward.push_back(a.components[idx(x)][id_pos]);

  bool ok = b.forward.size() == b.nat.size();
  for (std::size_t e = 0; ok && e < b.forward.size(); ++e) {
    ok = check_presheaf_map(yx, f, b.forward[e]).ok() && b.forward[e].components[idx(x)][id_pos] == e;
  }
  for (std::size_t k = 0; ok && k < b.nat.size(); ++k) ok = b.forward[b.backward[k]] == b.nat[k];
  b.bijective = ok;
  return b;
}

}  // namespace moncat
