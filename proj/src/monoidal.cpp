#include "moncat/monoidal.hpp"

#include <map>

namespace moncat {

namespace {

std::uint32_t u32(std::size_t v) { return static_cast<std::uint32_t>(v); }
std::uint32_t u32(ObjId x) { return static_cast<std::uint32_t>(x); }

bool same_monoidal(const MonRef& a, const MonRef& b) { return a == b || (a && b && *a == *b); }

bool typed(const FinCat& c, MorId f, ObjId s, ObjId t) {
  return idx(f) < c.num_morphisms() && c.src(f) == s && c.tgt(f) == t;
}

void check_unitor_layer(const MonoidalCategory& m, const Unitor& u, const Functor& expected_source, bool left,
                        LawReport& report) {
  const FinCat& c = *m.base;
  const std::size_t n = c.num_objects();
  const char* tag = left ? "left-unitor" : "right-unitor";
  if (u.forward.components.size() != n || u.inverse.size() != n) {
    report.structural(std::string(tag) + "-totality", {u32(u.forward.components.size()), u32(u.inverse.size())});
    return;
  }
  if (!(u.forward.source == expected_source) || !(u.forward.target == identity_functor(m.base))) {
    report.structural(std::string(tag) + "-signature", {}, left ? "must be a transformation (I ⊗ -) => id"
                                                                : "must be a transformation (- ⊗ I) => id");
    return;
  }
  report.append(check_naturality(u.forward));
  for (std::size_t x = 0; x < n; ++x) {
    if (!typed(c, u.inverse[x], obj_id(x), expected_source(obj_id(x)))) {
      report.structural(std::string(tag) + "-inverse-endpoints", {u32(x)});
    }
  }
}

}  // namespace

const char* layer_name(Layer l) {
  switch (l) {
    case Layer::Base: return "base";
    case Layer::Tensor: return "tensor";
    case Layer::Unit: return "unit";
    case Layer::LeftUnitor: return "left-unitor";
    case Layer::RightUnitor: return "right-unitor";
    case Layer::Associator: return "associator";
    case Layer::Laws: return "laws";
  }
  return "?";
}

LayerError::LayerError(LayerFailure f)
    : std::runtime_error(std::string("monoidal structure rejected at the ") + layer_name(f.layer) + " layer\n" +
                         f.report.summary(5)),
      failure_(std::move(f)) {}

bool operator==(const MonoidalCategory& a, const MonoidalCategory& b) {
  return same_category(a.base, b.base) && a.tensor == b.tensor && a.unit == b.unit && a.left == b.left &&
         a.right == b.right && a.assoc == b.assoc;
}

Functor left_tensor_functor(const CatRef& base, const Functor& tensor, ObjId unit) {
  const std::size_t n = base->num_objects(), m = base->num_morphisms();
  Functor f{base, base, {}, {}};
  const MorId id_unit = base->identity(unit);
  for (std::size_t x = 0; x < n; ++x) f.omap.push_back(tensor.omap[idx(unit) * n + x]);
  for (std::size_t g = 0; g < m; ++g) f.mmap.push_back(tensor.mmap[idx(id_unit) * m + g]);
  return f;
}

Functor right_tensor_functor(const CatRef& base, const Functor& tensor, ObjId unit) {
  const std::size_t n = base->num_objects(), m = base->num_morphisms();
  Functor f{base, base, {}, {}};
  const MorId id_unit = base->identity(unit);
  for (std::size_t x = 0; x < n; ++x) f.omap.push_back(tensor.omap[x * n + idx(unit)]);
  for (std::size_t g = 0; g < m; ++g) f.mmap.push_back(tensor.mmap[g * m + idx(id_unit)]);
  return f;
}

std::optional<LayerFailure> validate_layers(const CatRef& base, const Functor& tensor, ObjId unit, const Unitor& left,
                                            const Unitor& right, const AssociatorData& assoc) {
  {
    LawReport r = check_category_laws(*base);
    if (!r.ok()) return LayerFailure{Layer::Base, std::move(r)};
  }
  const FinCat& c = *base;
  const std::size_t n = c.num_objects(), m = c.num_morphisms();
  {
    LawReport r;
    if (!tensor.dom || !tensor.cod || tensor.dom->num_objects() != n * n || tensor.dom->num_morphisms() != m * m ||
        !same_category(tensor.cod, base) || !tensor.dom->same_shape(product_category(c, c))) {
      r.structural("tensor-signature", {}, "tensor must be a functor C x C -> C");
    } else {
      r.append(check_functor_laws(tensor));
    }
    if (!r.ok()) return LayerFailure{Layer::Tensor, std::move(r)};
  }
  if (idx(unit) >= n) {
    LawReport r;
    r.structural("dangling-id", {u32(unit)}, "unit is not an object");
    return LayerFailure{Layer::Unit, std::move(r)};
  }
  // Scratch structure so the unitor helpers can use the tensor accessors.
  MonoidalCategory scratch{base, tensor, unit, left, right, assoc};
  {
    LawReport r;
    check_unitor_layer(scratch, left, left_tensor_functor(base, tensor, unit), true, r);
    if (!r.ok()) return LayerFailure{Layer::LeftUnitor, std::move(r)};
  }
  {
    LawReport r;
    check_unitor_layer(scratch, right, right_tensor_functor(base, tensor, unit), false, r);
    if (!r.ok()) return LayerFailure{Layer::RightUnitor, std::move(r)};
  }
  {
    LawReport r;
    if (assoc.forward.size() != n * n * n || assoc.inverse.size() != n * n * n) {
      r.structural("associator-totality", {u32(assoc.forward.size()), u32(assoc.inverse.size())});
      return LayerFailure{Layer::Associator, std::move(r)};
    }
    const auto& t = scratch;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          const ObjId xo = obj_id(x), yo = obj_id(y), zo = obj_id(z);
          const ObjId lhs = t(t(xo, yo), zo), rhs = t(xo, t(yo, zo));
          if (!typed(c, t.alpha(xo, yo, zo), lhs, rhs)) {
            r.structural("associator-endpoints", {u32(x), u32(y), u32(z)},
                         "component must have type (x⊗y)⊗z -> x⊗(y⊗z)");
          }
          if (!typed(c, t.alpha_inv(xo, yo, zo), rhs, lhs)) {
            r.structural("associator-inverse-endpoints", {u32(x), u32(y), u32(z)});
          }
        }
      }
    }
    if (!r.ok()) return LayerFailure{Layer::Associator, std::move(r)};
    for (std::size_t f = 0; f < m; ++f) {
      for (std::size_t g = 0; g < m; ++g) {
        const MorId fm = mor_id(f), gm = mor_id(g);
        const MorId fg = t(fm, gm);
        for (std::size_t h = 0; h < m; ++h) {
          const MorId hm = mor_id(h);
          const MorId lhs = c.then(t(fg, hm), t.alpha(c.tgt(fm), c.tgt(gm), c.tgt(hm)));
          const MorId rhs = c.then(t.alpha(c.src(fm), c.src(gm), c.src(hm)), t(fm, t(gm, hm)));
          if (lhs != rhs) r.violation("associator-naturality", {u32(f), u32(g), u32(h)});
        }
      }
    }
    if (!r.ok()) return LayerFailure{Layer::Associator, std::move(r)};
  }
  {
    LawReport r = check_monoidal_laws(scratch);
    if (!r.ok()) return LayerFailure{Layer::Laws, std::move(r)};
  }
  return std::nullopt;
}

MonoidalCategory assemble_monoidal(CatRef base, Functor tensor, ObjId unit, Unitor left, Unitor right,
                                   AssociatorData assoc) {
  if (auto failure = validate_layers(base, tensor, unit, left, right, assoc)) throw LayerError(std::move(*failure));
  return MonoidalCategory{std::move(base), std::move(tensor), unit, std::move(left), std::move(right),
                          std::move(assoc)};
}

MonoidalParts monoidal_parts(const CatRef& base, const MonoidalTables& t) {
  const FinCat& c = *base;
  const std::size_t n = c.num_objects(), m = c.num_morphisms();
  if (t.tensor_objects.size() != n * n || t.tensor_morphisms.size() != m * m || t.lambda.size() != n ||
      t.rho.size() != n || t.alpha.size() != n * n * n) {
    throw std::invalid_argument("monoidal_parts: table sizes do not match the base category");
  }
  auto inv = [&](MorId f) {
    if (idx(f) >= m) return f;
    return inverse_of(c, f).value_or(f);
  };
  MonoidalParts p{Functor{share(product_category(c, c)), base, t.tensor_objects, t.tensor_morphisms}, {}, {}, {}};
  const bool unit_ok = idx(t.unit) < n;
  const Functor none{base, base, {}, {}};
  p.left.forward = NatTrans{unit_ok ? left_tensor_functor(base, p.tensor, t.unit) : none, identity_functor(base),
                            t.lambda};
  p.right.forward = NatTrans{unit_ok ? right_tensor_functor(base, p.tensor, t.unit) : none, identity_functor(base),
                             t.rho};
  for (MorId f : t.lambda) p.left.inverse.push_back(inv(f));
  for (MorId f : t.rho) p.right.inverse.push_back(inv(f));
  p.assoc.forward = t.alpha;
  for (MorId f : t.alpha) p.assoc.inverse.push_back(inv(f));
  return p;
}

MonoidalCategory monoidal_from_tables(const CatRef& base, const MonoidalTables& t) {
  MonoidalParts p = monoidal_parts(base, t);
  return assemble_monoidal(base, std::move(p.tensor), t.unit, std::move(p.left), std::move(p.right),
                           std::move(p.assoc));
}

LawReport check_monoidal_laws(const MonoidalCategory& t) {
  LawReport r;
  const FinCat& c = *t.base;
  const std::size_t n = c.num_objects();
  for (std::size_t x = 0; x < n; ++x) {
    const ObjId xo = obj_id(x);
    if (!is_valid_iso(c, {t.lambda(xo), t.left.inverse[x]})) r.violation("left-unitor-iso", {u32(x)});
    if (!is_valid_iso(c, {t.rho(xo), t.right.inverse[x]})) r.violation("right-unitor-iso", {u32(x)});
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const ObjId xo = obj_id(x), yo = obj_id(y), zo = obj_id(z);
        if (!is_valid_iso(c, {t.alpha(xo, yo, zo), t.alpha_inv(xo, yo, zo)})) {
          r.violation("associator-iso", {u32(x), u32(y), u32(z)});
        }
      }
    }
  }
  const ObjId i = t.unit;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const ObjId xo = obj_id(x), yo = obj_id(y);
      // alpha_{x,I,y} · (id_x ⊗ lambda_y) = rho_x ⊗ id_y
      const MorId lhs = c.then(t.alpha(xo, i, yo), t(t.id(xo), t.lambda(yo)));
      const MorId rhs = t(t.rho(xo), t.id(yo));
      if (lhs != rhs) r.violation("triangle", {u32(x), u32(y)});
    }
  }
  for (std::size_t w = 0; w < n; ++w) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          const ObjId wo = obj_id(w), xo = obj_id(x), yo = obj_id(y), zo = obj_id(z);
          // (alpha_{w,x,y} ⊗ id_z) · alpha_{w,x⊗y,z} · (id_w ⊗ alpha_{x,y,z})
          //   = alpha_{w⊗x,y,z} · alpha_{w,x,y⊗z}
          const MorId lhs = c.then(c.then(t(t.alpha(wo, xo, yo), t.id(zo)), t.alpha(wo, t(xo, yo), zo)),
                                   t(t.id(wo), t.alpha(xo, yo, zo)));
          const MorId rhs = c.then(t.alpha(t(wo, xo), yo, zo), t.alpha(wo, xo, t(yo, zo)));
          if (lhs != rhs) r.violation("pentagon", {u32(w), u32(x), u32(y), u32(z)});
        }
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

bool operator==(const LaxMonoidalFunctor& a, const LaxMonoidalFunctor& b) {
  return a.mu == b.mu && a.eps == b.eps && a.functor == b.functor && same_monoidal(a.dom, b.dom) &&
         same_monoidal(a.cod, b.cod);
}

LaxMonoidalFunctor identity_lax_monoidal(const MonRef& m) {
  LaxMonoidalFunctor f{m, m, identity_functor(m->base), {}, m->id(m->unit), StrongData{}};
  const std::size_t n = m->n();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) f.mu.push_back(m->id((*m)(obj_id(x), obj_id(y))));
  }
  f.strong = StrongData{f.mu, f.eps};
  return f;
}

LawReport check_lax_monoidal_functor(const LaxMonoidalFunctor& lf) {
  LawReport r;
  const MonoidalCategory& cm = *lf.dom;
  const MonoidalCategory& dm = *lf.cod;
  const FinCat& c = *cm.base;
  const FinCat& d = *dm.base;
  const Functor& f = lf.functor;
  const std::size_t n = c.num_objects();
  if (!same_category(f.dom, cm.base) || !same_category(f.cod, dm.base)) {
    r.structural("lax-signature", {}, "functor must run between the underlying categories");
    return r;
  }
  r.append(check_functor_laws(f));
  if (!r.ok()) return r;
  if (lf.mu.size() != n * n) {
    r.structural("mu-totality", {u32(lf.mu.size())});
    return r;
  }
  if (!typed(d, lf.eps, dm.unit, f(cm.unit))) r.structural("eps-endpoints", {}, "eps must have type I -> F I");
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const ObjId xo = obj_id(x), yo = obj_id(y);
      if (!typed(d, lf.mu_at(xo, yo), dm(f(xo), f(yo)), f(cm(xo, yo)))) {
        r.structural("mu-endpoints", {u32(x), u32(y)}, "mu_{x,y} must have type Fx ⊗ Fy -> F(x ⊗ y)");
      }
    }
  }
  if (lf.strong) {
    const auto& s = *lf.strong;
    if (s.mu_inverse.size() != n * n) {
      r.structural("mu-inverse-totality", {u32(s.mu_inverse.size())});
    } else {
      for (std::size_t k = 0; k < n * n; ++k) {
        if (!is_valid_iso(d, {lf.mu[k], s.mu_inverse[k]})) r.violation("mu-iso", {u32(k / n), u32(k % n)});
      }
    }
    if (!is_valid_iso(d, {lf.eps, s.eps_inverse})) r.violation("eps-iso", {});
  }
  if (r.has_structural()) return r;

  const std::size_t m = c.num_morphisms();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const MorId am = mor_id(a), bm = mor_id(b);
      const MorId lhs = d.then(dm(f(am), f(bm)), lf.mu_at(c.tgt(am), c.tgt(bm)));
      const MorId rhs = d.then(lf.mu_at(c.src(am), c.src(bm)), f(cm(am, bm)));
      if (lhs != rhs) r.violation("mu-naturality", {u32(a), u32(b)});
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    const ObjId xo = obj_id(x);
    // (eps ⊗ id_{Fx}) · mu_{I,x} · F lambda_x = lambda_{Fx}
    const MorId lhs_l =
        d.then(d.then(dm(lf.eps, dm.id(f(xo))), lf.mu_at(cm.unit, xo)), f(cm.lambda(xo)));
    if (lhs_l != dm.lambda(f(xo))) r.violation("left-unitor-law", {u32(x)});
    // (id_{Fx} ⊗ eps) · mu_{x,I} · F rho_x = rho_{Fx}
    const MorId lhs_r = d.then(d.then(dm(dm.id(f(xo)), lf.eps), lf.mu_at(xo, cm.unit)), f(cm.rho(xo)));
    if (lhs_r != dm.rho(f(xo))) r.violation("right-unitor-law", {u32(x)});
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const ObjId xo = obj_id(x), yo = obj_id(y), zo = obj_id(z);
        // (mu_{x,y} ⊗ id_{Fz}) · mu_{x⊗y,z} · F alpha_{x,y,z}
        //   = alpha_{Fx,Fy,Fz} · (id_{Fx} ⊗ mu_{y,z}) · mu_{x,y⊗z}
        const MorId lhs = d.then(d.then(dm(lf.mu_at(xo, yo), dm.id(f(zo))), lf.mu_at(cm(xo, yo), zo)),
                                 f(cm.alpha(xo, yo, zo)));
        const MorId rhs = d.then(d.then(dm.alpha(f(xo), f(yo), f(zo)), dm(dm.id(f(xo)), lf.mu_at(yo, zo))),
                                 lf.mu_at(xo, cm(yo, zo)));
        if (lhs != rhs) r.violation("hexagon", {u32(x), u32(y), u32(z)});
      }
    }
  }
  return r;
}

StrongResult is_strong_monoidal(const LaxMonoidalFunctor& f) {
  const FinCat& d = *f.cod->base;
  StrongResult r;
  auto eps_inv = inverse_of(d, f.eps);
  if (!eps_inv) return r;
  StrongData data{{}, *eps_inv};
  data.mu_inverse.reserve(f.mu.size());
  for (MorId k : f.mu) {
    auto inv = inverse_of(d, k);
    if (!inv) return r;
    data.mu_inverse.push_back(*inv);
  }
  r.strong = true;
  r.inverses = std::move(data);
  return r;
}

LaxMonoidalFunctor make_strong(const LaxMonoidalFunctor& f) {
  auto r = is_strong_monoidal(f);
  if (!r.strong) throw std::invalid_argument("make_strong: functor is not strong monoidal");
  LaxMonoidalFunctor g = f;
  g.strong = std::move(r.inverses);
  return g;
}

LaxMonoidalFunctor compose_lax_monoidal(const LaxMonoidalFunctor& f, const LaxMonoidalFunctor& g) {
  if (!same_monoidal(f.cod, g.dom)) throw std::invalid_argument("compose_lax_monoidal: signature mismatch");
  const FinCat& e = *g.cod->base;
  const Functor& ff = f.functor;
  LaxMonoidalFunctor h{f.dom, g.cod, compose(ff, g.functor), {}, e.then(g.eps, g.functor(f.eps)), std::nullopt};
  const std::size_t n = f.dom->n();
  h.mu.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const ObjId xo = obj_id(x), yo = obj_id(y);
      h.mu.push_back(e.then(g.mu_at(ff(xo), ff(yo)), g.functor(f.mu_at(xo, yo))));
    }
  }
  if (f.strong && g.strong) {
    StrongData s{{}, e.then(g.functor(f.strong->eps_inverse), g.strong->eps_inverse)};
    const std::size_t nd = g.dom->n();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const ObjId xo = obj_id(x), yo = obj_id(y);
        s.mu_inverse.push_back(e.then(g.functor(f.strong->mu_inverse[x * n + y]),
                                      g.strong->mu_inverse[idx(ff(xo)) * nd + idx(ff(yo))]));
      }
    }
    h.strong = std::move(s);
  }
  return h;
}

bool is_monoidal_cell(const LaxMonoidalFunctor& f, const LaxMonoidalFunctor& g, const NatTrans& t) {
  const MonoidalCategory& cm = *f.dom;
  const MonoidalCategory& dm = *f.cod;
  const FinCat& d = *dm.base;
  const std::size_t n = cm.n();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const ObjId xo = obj_id(x), yo = obj_id(y);
      // (t_x ⊗ t_y) · mu^G_{x,y} = mu^F_{x,y} · t_{x⊗y}
      if (d.then(dm(t[xo], t[yo]), g.mu_at(xo, yo)) != d.then(f.mu_at(xo, yo), t[cm(xo, yo)])) return false;
    }
  }
  return d.then(f.eps, t[cm.unit]) == g.eps;
}

LawReport check_monoidal_nat_trans(const LaxMonoidalFunctor& f, const LaxMonoidalFunctor& g, const NatTrans& t) {
  LawReport r;
  if (!same_monoidal(f.dom, g.dom) || !same_monoidal(f.cod, g.cod) || !(t.source == f.functor) ||
      !(t.target == g.functor)) {
    r.structural("monoidal-cell-signature", {}, "transformation must run between the two functors");
    return r;
  }
  r.append(check_naturality(t));
  if (!r.ok()) return r;
  const MonoidalCategory& cm = *f.dom;
  const MonoidalCategory& dm = *f.cod;
  const FinCat& d = *dm.base;
  const std::size_t n = cm.n();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const ObjId xo = obj_id(x), yo = obj_id(y);
      if (d.then(dm(t[xo], t[yo]), g.mu_at(xo, yo)) != d.then(f.mu_at(xo, yo), t[cm(xo, yo)])) {
        r.violation("tensor-compatibility", {u32(x), u32(y)});
      }
    }
  }
  if (d.then(f.eps, t[cm.unit]) != g.eps) r.violation("unit-compatibility", {});
  return r;
}

std::vector<NatTrans> enumerate_monoidal_nat_trans(const LaxMonoidalFunctor& f, const LaxMonoidalFunctor& g,
                                                   std::size_t bound) {
  std::vector<NatTrans> out;
  for (auto& t : enumerate_nat_trans(f.functor, g.functor, bound)) {
    if (is_monoidal_cell(f, g, t)) out.push_back(std::move(t));
  }
  return out;
}

MonoidalHomCategory monoidal_hom_category(const MonRef& dom, const MonRef& cod,
                                          std::vector<LaxMonoidalFunctor> candidates, std::size_t bound) {
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& f = candidates[i];
    if (!same_monoidal(f.dom, dom) || !same_monoidal(f.cod, cod)) {
      throw std::invalid_argument("candidate " + std::to_string(i) + " has the wrong signature");
    }
    auto r = check_lax_monoidal_functor(f);
    if (!r.ok()) throw std::invalid_argument("candidate " + std::to_string(i) + " is not lax monoidal:\n" + r.summary(3));
  }
  MonoidalHomCategory hc{dom, cod, std::move(candidates), {}, nullptr};
  const std::size_t k = hc.objects.size();
  std::vector<std::string> names;
  std::vector<MorphismDecl> decls;
  std::vector<std::vector<std::size_t>> homs(k * k);
  for (std::size_t i = 0; i < k; ++i) names.push_back("F" + std::to_string(i));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (auto& t : enumerate_monoidal_nat_trans(hc.objects[i], hc.objects[j], bound)) {
        homs[i * k + j].push_back(hc.cells.size());
        decls.push_back({"c" + std::to_string(hc.cells.size()), obj_id(i), obj_id(j)});
        hc.cells.push_back(std::move(t));
      }
    }
  }
  const std::size_t m = hc.cells.size();
  auto lookup = [&](std::size_t i, std::size_t j, const NatTrans& t) -> std::size_t {
    for (std::size_t c : homs[i * k + j]) {
      if (hc.cells[c].components == t.components) return c;
    }
    throw std::logic_error("monoidal hom-category is not closed under vertical composition");
  };
  std::vector<MorId> ids;
  for (std::size_t i = 0; i < k; ++i) {
    ids.push_back(mor_id(lookup(i, i, identity_nat_trans(hc.objects[i].functor))));
  }
  std::vector<std::int32_t> table(m * m, FinCat::kUndefined);
  for (std::size_t a = 0; a < m; ++a) {
    const std::size_t i = idx(decls[a].src), j = idx(decls[a].tgt);
    for (std::size_t l = 0; l < k; ++l) {
      for (std::size_t b : homs[j * k + l]) {
        table[a * m + b] = static_cast<std::int32_t>(lookup(i, l, vertical(hc.cells[a], hc.cells[b])));
      }
    }
  }
  hc.category = share(FinCat(std::move(names), std::move(decls), std::move(ids), std::move(table)));
  return hc;
}

MonoidalPrecomp monoidal_precomp(const LaxMonoidalFunctor& h, const MonRef& target,
                                 std::vector<LaxMonoidalFunctor> candidates, std::size_t bound) {
  std::vector<LaxMonoidalFunctor> images;
  for (const auto& g : candidates) {
    if (!same_monoidal(g.dom, h.cod)) throw std::invalid_argument("monoidal_precomp: candidate domain mismatch");
    images.push_back(compose_lax_monoidal(h, g));
  }
  MonoidalPrecomp p{monoidal_hom_category(h.cod, target, std::move(candidates), bound),
                    monoidal_hom_category(h.dom, target, std::move(images), bound),
                    {},
                    LawReport{}};
  const FinCat& src = *p.source.category;
  p.mapping = Functor{p.source.category, p.target.category, {}, {}};
  for (std::size_t i = 0; i < src.num_objects(); ++i) p.mapping.omap.push_back(obj_id(i));
  for (std::size_t a = 0; a < src.num_morphisms(); ++a) {
    const NatTrans w = whisker_left(h.functor, p.source.cells[a]);
    const std::size_t i = idx(src.src(mor_id(a))), j = idx(src.tgt(mor_id(a)));
    std::optional<MorId> image;
    for (MorId b : p.target.category->hom(obj_id(i), obj_id(j))) {
      if (p.target.cells[idx(b)].components == w.components) image = b;
    }
    if (!image) {
      p.report.violation("whisker-not-monoidal", {u32(a)});
      image = p.target.category->identity(obj_id(i));
    }
    p.mapping.mmap.push_back(*image);
  }
  return p;
}

}  // namespace moncat
