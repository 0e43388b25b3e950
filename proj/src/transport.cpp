#include "moncat/transport.hpp"

#include <algorithm>
#include <stdexcept>

namespace moncat {

namespace {

std::uint32_t u32(std::size_t v) { return static_cast<std::uint32_t>(v); }

MorId on_pair(const Functor& tensor, MorId f, MorId g) {
  return tensor.mmap[idx(f) * tensor.cod->num_morphisms() + idx(g)];
}

}  // namespace

Skeleton skeletalize(const CatRef& cref) {
  const FinCat& c = *cref;
  const std::size_t n = c.num_objects();
  std::vector<ObjId> reps;
  std::vector<std::size_t> cls(n);
  std::vector<IsoWitness> to_rep(n);
  for (std::size_t x = 0; x < n; ++x) {
    const ObjId xo = obj_id(x);
    bool found = false;
    for (std::size_t r = 0; r < reps.size() && !found; ++r) {
      auto isos = find_isos(c, xo, reps[r]);
      if (!isos.empty()) {
        cls[x] = r;
        to_rep[x] = isos.front();
        found = true;
      }
    }
    if (!found) {
      cls[x] = reps.size();
      to_rep[x] = {c.identity(xo), c.identity(xo)};
      reps.push_back(xo);
    }
  }
  std::vector<std::int32_t> dmap(c.num_morphisms(), -1);
  std::vector<MorId> kept;
  std::vector<MorphismDecl> decls;
  for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
    const MorId fm = mor_id(f);
    const ObjId s = c.src(fm), t = c.tgt(fm);
    if (reps[cls[idx(s)]] == s && reps[cls[idx(t)]] == t) {
      dmap[f] = static_cast<std::int32_t>(kept.size());
      kept.push_back(fm);
      decls.push_back({c.morphism_name(fm), obj_id(cls[idx(s)]), obj_id(cls[idx(t)])});
    }
  }
  std::vector<std::string> names;
  std::vector<MorId> ids;
  for (ObjId r : reps) {
    names.push_back(c.object_name(r));
    ids.push_back(mor_id(static_cast<std::size_t>(dmap[idx(c.identity(r))])));
  }
  const std::size_t m = kept.size();
  std::vector<std::int32_t> table(m * m, FinCat::kUndefined);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (auto ab = c.compose(kept[a], kept[b])) table[a * m + b] = dmap[idx(*ab)];
    }
  }
  CatRef d = share(FinCat(std::move(names), std::move(decls), std::move(ids), std::move(table)));
  Functor h{cref, d, {}, {}};
  for (std::size_t x = 0; x < n; ++x) h.omap.push_back(obj_id(cls[x]));
  for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
    const MorId fm = mor_id(f);
    const MorId g = c.then(c.then(to_rep[idx(c.src(fm))].backward, fm), to_rep[idx(c.tgt(fm))].forward);
    h.mmap.push_back(mor_id(static_cast<std::size_t>(dmap[idx(g)])));
  }
  auto eso = split_eso_witness(h);
  if (!eso.equivalence) throw std::logic_error("skeletalize: constructed functor is not a weak equivalence");
  return Skeleton{SkeletalCat(d), std::move(*eso.equivalence)};
}

LiftedFunctor lift_functor_along(const WeakEquivalence& w, const Functor& g0) {
  if (!same_category(w.dom(), g0.dom)) throw std::invalid_argument("lift_functor_along: signature mismatch");
  const FinCat& c = *w.dom();
  const FinCat& d = *w.cod();
  Functor g{w.cod(), g0.cod, {}, {}};
  for (std::size_t t = 0; t < d.num_objects(); ++t) g.omap.push_back(g0(w.section[t]));
  for (std::size_t k = 0; k < d.num_morphisms(); ++k) {
    const MorId km = mor_id(k);
    const std::size_t s = idx(d.src(km)), t = idx(d.tgt(km));
    const MorId conj = d.then(d.then(w.eta[s].forward, km), w.eta[t].backward);
    g.mmap.push_back(g0(w.preimage(w.section[s], w.section[t], conj)));
  }
  LiftedFunctor out{g, NatTrans{compose(w.functor, g), g0, {}}, {}};
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    const ObjId xo = obj_id(x);
    const std::size_t t = idx(w.functor(xo));
    const ObjId s = w.section[t];
    out.iso.components.push_back(g0(w.preimage(s, xo, w.eta[t].forward)));
    out.iso_inverse.push_back(g0(w.preimage(xo, s, w.eta[t].backward)));
  }
  return out;
}

TransportedTensor transport_tensor(const WeakEquivalence& w, const MonoidalCategory& m) {
  CatRef dd = share(product_category(*w.cod(), *w.cod()));
  WeakEquivalence ww = product_weak_equivalence(w, w, m.tensor.dom, dd);
  LiftedFunctor lifted = lift_functor_along(ww, compose(m.tensor, w.functor));
  return TransportedTensor{std::move(lifted.functor), std::move(lifted.iso), std::move(lifted.iso_inverse), m.n()};
}

TransportedUnit transport_unit(const WeakEquivalence& w, ObjId unit) {
  const ObjId u = w.functor(unit);
  return {u, w.cod()->identity(u)};
}

PretensorIso lift_pretensor_iso(const WeakEquivalence& w, const MonoidalCategory& m, const TransportedTensor& t,
                                bool left) {
  const ObjId hat_unit = w.functor(m.unit);
  const Functor hat_side = left ? left_tensor_functor(w.cod(), t.tensor, hat_unit)
                                : right_tensor_functor(w.cod(), t.tensor, hat_unit);
  const Functor side = left ? left_tensor_functor(m.base, m.tensor, m.unit)
                            : right_tensor_functor(m.base, m.tensor, m.unit);
  PretensorIso p{NatTrans{compose(w.functor, hat_side), compose(side, w.functor), {}}, {}};
  for (std::size_t x = 0; x < m.n(); ++x) {
    const ObjId a = left ? m.unit : obj_id(x), b = left ? obj_id(x) : m.unit;
    p.forward.components.push_back(t.mu_at(a, b));
    p.inverse.push_back(t.mu_inverse_at(a, b));
  }
  return p;
}

std::pair<Unitor, Unitor> transport_unitors(const WeakEquivalence& w, const MonoidalCategory& m,
                                            const TransportedTensor& t) {
  const FinCat& d = *w.cod();
  const Functor& h = w.functor;
  const ObjId hat_unit = h(m.unit);
  const MorId id_unit = d.identity(hat_unit);
  Unitor left{NatTrans{left_tensor_functor(w.cod(), t.tensor, hat_unit), identity_functor(w.cod()), {}}, {}};
  Unitor right{NatTrans{right_tensor_functor(w.cod(), t.tensor, hat_unit), identity_functor(w.cod()), {}}, {}};
  for (std::size_t k = 0; k < d.num_objects(); ++k) {
    const ObjId x = w.section[k];
    const IsoWitness e = w.eta[k];
    // At H x: mu_{I,x} · H(lambda_x), then conjugate by eta.
    const MorId lam = d.then(t.mu_at(m.unit, x), h(m.lambda(x)));
    const MorId lam_inv = d.then(h(m.left.inverse[idx(x)]), t.mu_inverse_at(m.unit, x));
    left.forward.components.push_back(d.then(d.then(on_pair(t.tensor, id_unit, e.backward), lam), e.forward));
    left.inverse.push_back(d.then(d.then(e.backward, lam_inv), on_pair(t.tensor, id_unit, e.forward)));
    const MorId rho = d.then(t.mu_at(x, m.unit), h(m.rho(x)));
    const MorId rho_inv = d.then(h(m.right.inverse[idx(x)]), t.mu_inverse_at(x, m.unit));
    right.forward.components.push_back(d.then(d.then(on_pair(t.tensor, e.backward, id_unit), rho), e.forward));
    right.inverse.push_back(d.then(d.then(e.backward, rho_inv), on_pair(t.tensor, e.forward, id_unit)));
  }
  return {std::move(left), std::move(right)};
}

AssociatorData transport_associator(const WeakEquivalence& w, const MonoidalCategory& m, const TransportedTensor& t) {
  const FinCat& d = *w.cod();
  const Functor& h = w.functor;
  const Functor& ht = t.tensor;
  const std::size_t nd = d.num_objects();
  AssociatorData a;
  a.forward.reserve(nd * nd * nd);
  a.inverse.reserve(nd * nd * nd);
  for (std::size_t k1 = 0; k1 < nd; ++k1) {
    for (std::size_t k2 = 0; k2 < nd; ++k2) {
      for (std::size_t k3 = 0; k3 < nd; ++k3) {
        const ObjId x = w.section[k1], y = w.section[k2], z = w.section[k3];
        const IsoWitness e1 = w.eta[k1], e2 = w.eta[k2], e3 = w.eta[k3];
        const ObjId hx = h(x), hz = h(z);
        // (mu_{x,y} ⊗̂ id) · mu_{x⊗y,z} · H(alpha) · mu^{-1}_{x,y⊗z} · (id ⊗̂ mu^{-1}_{y,z})
        const MorId into = d.then(on_pair(ht, t.mu_at(x, y), d.identity(hz)), t.mu_at(m(x, y), z));
        const MorId out_of = d.then(t.mu_inverse_at(x, m(y, z)), on_pair(ht, d.identity(hx), t.mu_inverse_at(y, z)));
        const MorId rep = d.then(d.then(into, h(m.alpha(x, y, z))), out_of);
        const MorId into_inv = d.then(on_pair(ht, d.identity(hx), t.mu_at(y, z)), t.mu_at(x, m(y, z)));
        const MorId out_inv = d.then(t.mu_inverse_at(m(x, y), z), on_pair(ht, t.mu_inverse_at(x, y), d.identity(hz)));
        const MorId rep_inv = d.then(d.then(into_inv, h(m.alpha_inv(x, y, z))), out_inv);
        const MorId pre = on_pair(ht, on_pair(ht, e1.backward, e2.backward), e3.backward);
        const MorId post = on_pair(ht, e1.forward, on_pair(ht, e2.forward, e3.forward));
        a.forward.push_back(d.then(d.then(pre, rep), post));
        const MorId pre_inv = on_pair(ht, e1.backward, on_pair(ht, e2.backward, e3.backward));
        const MorId post_inv = on_pair(ht, on_pair(ht, e1.forward, e2.forward), e3.forward);
        a.inverse.push_back(d.then(d.then(pre_inv, rep_inv), post_inv));
      }
    }
  }
  return a;
}

TransportedMonoidal transport_monoidal(const WeakEquivalence& w, const MonRef& m) {
  if (!same_category(w.dom(), m->base)) throw std::invalid_argument("transport_monoidal: signature mismatch");
  SkeletalCat target(w.cod());
  TransportedTensor t = transport_tensor(w, *m);
  const TransportedUnit u = transport_unit(w, m->unit);
  auto [left, right] = transport_unitors(w, *m, t);
  AssociatorData assoc = transport_associator(w, *m, t);
  MonRef md = share(assemble_monoidal(w.cod(), t.tensor, u.unit, std::move(left), std::move(right), std::move(assoc)));
  LaxMonoidalFunctor h{m, md, w.functor, t.mu.components, u.eps, StrongData{t.mu_inverse, u.eps}};
  return TransportedMonoidal{std::move(md), std::move(h), std::move(t)};
}

LaxMonoidalFunctor lift_lax_structure(const WeakEquivalence& w, const LaxMonoidalFunctor& h, const Functor& g,
                                      const MonRef& e, const std::vector<MorId>& mu_hg, MorId eps_hg) {
  if (!h.strong) throw std::invalid_argument("lift_lax_structure: H must carry strong data");
  if (!same_category(g.dom, h.cod->base) || !same_category(g.cod, e->base)) {
    throw std::invalid_argument("lift_lax_structure: signature mismatch");
  }
  const FinCat& d = *h.cod->base;
  const FinCat& ec = *e->base;
  const MonoidalCategory& dm = *h.cod;
  const std::size_t nc = h.dom->n(), nd = d.num_objects();
  LaxMonoidalFunctor out{h.cod, e, g, {}, eps_hg, std::nullopt};
  out.mu.reserve(nd * nd);
  for (std::size_t k1 = 0; k1 < nd; ++k1) {
    for (std::size_t k2 = 0; k2 < nd; ++k2) {
      const ObjId x1 = w.section[k1], x2 = w.section[k2];
      const IsoWitness e1 = w.eta[k1], e2 = w.eta[k2];
      const std::size_t p = idx(x1) * nc + idx(x2);
      const MorId rep = ec.then(mu_hg[p], g(h.strong->mu_inverse[p]));
      out.mu.push_back(ec.then(ec.then((*e)(g(e1.backward), g(e2.backward)), rep), g(dm(e1.forward, e2.forward))));
    }
  }
  return out;
}

Factorization factor_through(const WeakEquivalence& w, const LaxMonoidalFunctor& h, const LaxMonoidalFunctor& f) {
  const MonoidalCategory& cm = *f.dom;
  const MonoidalCategory& em = *f.cod;
  const FinCat& ec = *em.base;
  LiftedFunctor lifted = lift_functor_along(w, f.functor);
  const auto& theta = lifted.iso.components;
  const auto& theta_inv = lifted.iso_inverse;
  const std::size_t n = cm.n();
  std::vector<MorId> mu_wg;
  mu_wg.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const ObjId xo = obj_id(x), yo = obj_id(y);
      mu_wg.push_back(ec.then(ec.then(em(theta[x], theta[y]), f.mu_at(xo, yo)), theta_inv[idx(cm(xo, yo))]));
    }
  }
  const MorId eps_wg = ec.then(f.eps, theta_inv[idx(cm.unit)]);
  Factorization out{lift_lax_structure(w, h, lifted.functor, f.cod, mu_wg, eps_wg), {}, theta_inv, LawReport{}};
  out.report = check_lax_monoidal_functor(out.g);
  const LaxMonoidalFunctor composite = compose_lax_monoidal(h, out.g);
  out.iso = NatTrans{composite.functor, f.functor, theta};
  if (out.report.ok()) out.report.append(check_monoidal_nat_trans(composite, f, out.iso));
  for (std::size_t x = 0; x < n; ++x) {
    if (!is_valid_iso(ec, {theta[x], theta_inv[x]})) out.report.violation("iso-component", {u32(x)});
  }
  return out;
}

bool PrecompReport::ok() const noexcept { return failures.ok(); }

PrecompReport verify_precomp_equivalence(const WeakEquivalence& w, const LaxMonoidalFunctor& h, const MonRef& e,
                                         const std::vector<LaxMonoidalFunctor>& candidates,
                                         const std::vector<LaxMonoidalFunctor>& lifts, bool strong,
                                         std::size_t bound) {
  PrecompReport r;
  auto valid = [&](const LaxMonoidalFunctor& g, const MonRef& dom) {
    return (g.dom == dom || *g.dom == *dom) && (g.cod == e || *g.cod == *e) &&
           check_lax_monoidal_functor(g).ok();
  };
  std::vector<std::size_t> used;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!valid(candidates[i], h.cod)) {
      r.invalid_candidates.push_back(i);
    } else if (strong && !is_strong_monoidal(candidates[i]).strong) {
      r.non_strong_candidates.push_back(i);
    } else {
      used.push_back(i);
    }
  }
  std::vector<LaxMonoidalFunctor> composites;
  for (std::size_t i : used) composites.push_back(compose_lax_monoidal(h, candidates[i]));
  for (std::size_t a = 0; a < used.size(); ++a) {
    for (std::size_t b = 0; b < used.size(); ++b) {
      const auto cells_d = enumerate_monoidal_nat_trans(candidates[used[a]], candidates[used[b]], bound);
      const auto cells_c = enumerate_monoidal_nat_trans(composites[a], composites[b], bound);
      std::vector<std::vector<MorId>> images;
      bool into = true;
      for (const auto& t : cells_d) {
        NatTrans wt = whisker_left(h.functor, t);
        into = into && std::any_of(cells_c.begin(), cells_c.end(),
                                   [&](const NatTrans& c) { return c.components == wt.components; });
        images.push_back(std::move(wt.components));
      }
      std::sort(images.begin(), images.end());
      const bool injective = std::adjacent_find(images.begin(), images.end()) == images.end();
      const bool bijective = into && injective && cells_d.size() == cells_c.size();
      r.pairs.push_back({used[a], used[b], cells_d.size(), cells_c.size(), bijective});
      if (!bijective) r.failures.violation("whisker-bijection", {u32(used[a]), u32(used[b])});
    }
  }
  for (std::size_t k = 0; k < lifts.size(); ++k) {
    if (!valid(lifts[k], h.dom)) {
      r.invalid_lifts.push_back(k);
      continue;
    }
    if (strong && !is_strong_monoidal(lifts[k]).strong) {
      r.non_strong_lifts.push_back(k);
      continue;
    }
    Factorization fz = factor_through(w, h, lifts[k]);
    if (!fz.report.ok()) r.failures.violation("factorization", {u32(k)}, fz.report.summary(3));
    if (strong && fz.report.ok() && !is_strong_monoidal(fz.g).strong) {
      r.failures.violation("factor-not-strong", {u32(k)});
    }
    r.factorizations.emplace_back(k, std::move(fz));
  }
  return r;
}

std::vector<LaxMonoidalFunctor> enumerate_lax_monoidal(const MonRef& c, const MonRef& e, std::size_t bound) {
  const MonoidalCategory& cm = *c;
  const MonoidalCategory& em = *e;
  const FinCat& ec = *em.base;
  const std::size_t n = cm.n();
  std::vector<LaxMonoidalFunctor> out;
  std::size_t work = 0;
  for (Functor& f : enumerate_functors(c->base, e->base, bound)) {
    std::vector<std::span<const MorId>> options;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const ObjId xo = obj_id(x), yo = obj_id(y);
        options.push_back(ec.hom(em(f(xo), f(yo)), f(cm(xo, yo))));
      }
    }
    options.push_back(ec.hom(em.unit, f(cm.unit)));
    std::size_t count = 1;
    for (auto o : options) count = saturating_mul(count, o.size());
    work = count > bound ? count : work + count;
    if (work > bound) throw ResourceExceeded("enumerate_lax_monoidal", work, bound);
    if (count == 0) continue;
    std::vector<std::size_t> pick(options.size(), 0);
    LaxMonoidalFunctor lf{c, e, std::move(f), std::vector<MorId>(n * n), MorId{}, std::nullopt};
    while (true) {
      for (std::size_t i = 0; i < n * n; ++i) lf.mu[i] = options[i][pick[i]];
      lf.eps = options.back()[pick.back()];
      if (check_lax_monoidal_functor(lf).ok()) out.push_back(lf);
      std::size_t i = pick.size();
      while (i > 0 && ++pick[i - 1] == options[i - 1].size()) pick[--i] = 0;
      if (i == 0) break;
    }
  }
  return out;
}

}  // namespace moncat
