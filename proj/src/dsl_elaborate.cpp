#include <algorithm>
#include <set>

#include "moncat/dsl.hpp"

namespace moncat::dsl {

namespace {

bool objects_witness(std::string_view law) {
  static const std::set<std::string, std::less<>> laws = {
      "triangle",         "pentagon",        "associator-iso",         "left-unitor-iso",
      "right-unitor-iso", "hexagon",         "associator-endpoints",   "associator-inverse-endpoints",
      "mu-endpoints",     "mu-iso",          "left-unitor-law",        "right-unitor-law",
      "functor-identity", "component-endpoints", "tensor-compatibility", "left-unitor-inverse-endpoints",
      "right-unitor-inverse-endpoints"};
  return laws.count(law) > 0;
}

bool morphisms_witness(std::string_view law) {
  return law == "functor-composition" || law == "functor-endpoints" || law == "naturality" ||
         law == "associator-naturality" || law == "mu-naturality";
}

// "pentagon fails at (a, b, c, d)"
std::string describe(const Violation& v, const FinCat& c) {
  std::string out = v.law + " fails";
  const bool objs = objects_witness(v.law);
  const bool mors = morphisms_witness(v.law);
  if (!v.witness.empty()) {
    out += " at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      if (i) out += ", ";
      const std::uint32_t w = v.witness[i];
      if (objs && w < c.num_objects()) {
        out += c.object_name(obj_id(w));
      } else if (mors && w < c.num_morphisms()) {
        out += c.morphism_name(mor_id(w));
      } else {
        out += std::to_string(w);
      }
    }
    out += ")";
  }
  if (!v.message.empty()) out += ": " + v.message;
  return out;
}

class Elaborator {
 public:
  Elaborator(ElabResult& r, const Environment& external) : r_(r), ext_(external) {}

  void run(const CatSpecAst& ast) {
    for (const auto& c : ast.categories) category(c);
    for (const auto& f : ast.functors) functor(f);
    for (const auto& n : ast.nattrans) nattrans(n);
  }

 private:
  ElabResult& r_;
  const Environment& ext_;

  void err(std::string code, std::string msg, Span s) {
    r_.diagnostics.push_back({Severity::Error, std::move(code), std::move(msg), s});
  }

  std::optional<ObjId> object(const FinCat& c, const Name& n) {
    if (auto x = c.find_object(n.text)) return x;
    err("E004", "unknown object '" + n.text + "'", n.span);
    return std::nullopt;
  }

  std::optional<MorId> morphism(const FinCat& c, const Name& n) {
    if (auto f = c.find_morphism(n.text)) return f;
    err("E005", "unknown morphism '" + n.text + "'", n.span);
    return std::nullopt;
  }

  // Sole element of hom(x, y), if any.
  static std::optional<MorId> forced(const FinCat& c, ObjId x, ObjId y) {
    auto h = c.hom(x, y);
    if (h.size() == 1) return h[0];
    return std::nullopt;
  }

  std::string arrow(const FinCat& c, ObjId x, ObjId y) { return c.object_name(x) + " -> " + c.object_name(y); }

  // A table slot filled at most once; a second different value is a conflict.
  template <class Id>
  bool fill(std::vector<std::optional<Id>>& slots, std::size_t k, Id v, const Name& at, const std::string& what) {
    if (slots[k] && *slots[k] != v) {
      err("E007", "conflicting " + what, at.span);
      return false;
    }
    slots[k] = v;
    return true;
  }

  // ---------------------------------------------------------------- category

  void category(const CategoryAst& a) {
    const std::size_t before = r_.diagnostics.size();
    std::vector<std::string> objects;
    std::map<std::string, ObjId> obj_index;
    for (const auto& o : a.objects) {
      obj_index.emplace(o.text, obj_id(objects.size()));
      objects.push_back(o.text);
    }
    const std::size_t n = objects.size();
    CategoryBuilder b(objects);

    // Builder ids: identities 0..n-1, then non-identity declarations in order.
    std::vector<std::string> names(n);
    std::vector<const MorphDecl*> identity_decl(n, nullptr);
    std::vector<MorId> decl_id;
    for (const auto& d : a.morphisms) {
      if (d.identity) {
        const ObjId x = obj_index.at(d.src.text);
        identity_decl[idx(x)] = &d;
        decl_id.push_back(b.id(x));
      } else {
        decl_id.push_back(b.morphism(d.name.text, obj_index.at(d.src.text), obj_index.at(d.tgt.text)));
        names.push_back(d.name.text);
      }
    }
    std::map<std::string, MorId> mor_index;
    for (std::size_t x = 0; x < n; ++x) {
      names[x] = identity_decl[x] ? identity_decl[x]->name.text : "id_" + objects[x];
    }
    for (std::size_t i = 0; i < a.morphisms.size(); ++i) mor_index.emplace(a.morphisms[i].name.text, decl_id[i]);
    for (std::size_t x = 0; x < n; ++x) {
      if (identity_decl[x]) continue;
      if (!mor_index.emplace(names[x], mor_id(x)).second) {
        const auto& d = *std::find_if(a.morphisms.begin(), a.morphisms.end(),
                                      [&](const MorphDecl& m) { return m.name.text == names[x]; });
        err("E003", "'" + names[x] + "' clashes with the implicit identity of '" + objects[x] + "'", d.name.span);
      }
    }

    auto resolve = [&](const Name& nm) -> std::optional<MorId> {
      auto it = mor_index.find(nm.text);
      if (it != mor_index.end()) return it->second;
      err("E005", "unknown morphism '" + nm.text + "'", nm.span);
      return std::nullopt;
    };
    std::vector<std::size_t> eq_ast;
    for (std::size_t i = 0; i < a.equations.size(); ++i) {
      const auto& e = a.equations[i];
      auto f = resolve(e.f), g = resolve(e.g), h = resolve(e.h);
      if (f && g && h) {
        b.compose(*f, *g, *h);
        eq_ast.push_back(i);
      }
    }
    if (r_.diagnostics.size() != before) return;

    const BuildResult built = b.try_build(a.derive.has_value());
    for (const auto& is : built.issues) {
      const std::string pair = "'" + names[idx(is.f)] + "." + names[idx(is.g)] + "'";
      const bool located = is.equation < eq_ast.size();
      const Span at = located ? a.equations[eq_ast[is.equation]].f.span : a.name.span;
      switch (is.kind) {
        case BuildIssue::Kind::NotComposable:
          err("E011", pair + " is not composable", at);
          break;
        case BuildIssue::Kind::WrongEndpoints:
          err("E011", "composite " + pair + " has the wrong endpoints", located ? a.equations[eq_ast[is.equation]].h.span : at);
          break;
        case BuildIssue::Kind::Conflict:
          err("E007", "conflicting equations for " + pair, located ? at : (a.derive ? *a.derive : at));
          break;
        case BuildIssue::Kind::Missing:
          err("E006", "missing composite " + pair, a.name.span);
          break;
      }
    }
    if (!built.category) return;

    FinCat c = layout(*built.category, identity_decl, decl_id);
    const LawReport laws = check_category_laws(c);
    if (!laws.ok()) {
      err("L001", "category '" + a.name.text + "': " + describe(laws.violations().front(), c), a.name.span);
      r_.law_failures.emplace(a.name.text, laws);
      return;
    }
    CatRef ref = share(std::move(c));
    r_.env.categories[a.name.text] = ref;
    if (a.monoidal) monoidal(a, *a.monoidal, ref);
  }

  // Reorders morphism ids to the declared layout and applies identity names.
  static FinCat layout(const FinCat& c, const std::vector<const MorphDecl*>& identity_decl,
                       const std::vector<MorId>& decl_id) {
    const std::size_t n = c.num_objects(), m = c.num_morphisms();
    std::vector<MorId> order;  // new id -> builder id
    for (std::size_t x = 0; x < n; ++x) {
      if (!identity_decl[x]) order.push_back(mor_id(x));
    }
    for (const MorId d : decl_id) order.push_back(d);
    std::vector<std::string> name_of(m);
    for (std::size_t k = 0; k < m; ++k) name_of[k] = c.morphism_name(mor_id(k));
    for (std::size_t x = 0; x < n; ++x) {
      if (identity_decl[x]) name_of[x] = identity_decl[x]->name.text;
    }
    std::vector<std::size_t> new_of(m);
    for (std::size_t k = 0; k < m; ++k) new_of[idx(order[k])] = k;
    std::vector<MorphismDecl> decls;
    for (const MorId old : order) decls.push_back({name_of[idx(old)], c.src(old), c.tgt(old)});
    std::vector<MorId> ids;
    for (std::size_t x = 0; x < n; ++x) ids.push_back(mor_id(new_of[idx(c.identity(obj_id(x)))]));
    std::vector<std::int32_t> table(m * m, FinCat::kUndefined);
    for (std::size_t f = 0; f < m; ++f) {
      for (std::size_t g = 0; g < m; ++g) {
        const std::int32_t h = c.raw_entry(order[f], order[g]);
        if (h >= 0) table[f * m + g] = static_cast<std::int32_t>(new_of[static_cast<std::size_t>(h)]);
      }
    }
    return FinCat(c.object_names(), std::move(decls), std::move(ids), std::move(table));
  }

  // ---------------------------------------------------------------- monoidal

  void monoidal(const CategoryAst& a, const MonoidalBlock& blk, const CatRef& ref) {
    const FinCat& c = *ref;
    const std::size_t before = r_.diagnostics.size();
    const std::size_t n = c.num_objects(), m = c.num_morphisms();
    if (!blk.unit) {
      err("E010", "monoidal block has no unit", blk.span);
      return;
    }
    auto unit = object(c, *blk.unit);

    std::vector<std::optional<ObjId>> tobj(n * n);
    std::vector<std::optional<MorId>> tmor(m * m);
    std::vector<const TensorEq*> tmor_eq(m * m, nullptr), tobj_eq(n * n, nullptr);
    for (const auto& e : blk.tensors) {
      TensorKind kind = e.kind;
      if (kind == TensorKind::Auto) {
        kind = c.find_object(e.left.text) && c.find_object(e.right.text) ? TensorKind::Objects : TensorKind::Morphisms;
      }
      const std::string what = "tensor entry '" + e.left.text + " * " + e.right.text + "'";
      if (kind == TensorKind::Objects) {
        auto x = object(c, e.left), y = object(c, e.right), z = object(c, e.result);
        if (x && y && z && fill(tobj, idx(*x) * n + idx(*y), *z, e.result, what)) tobj_eq[idx(*x) * n + idx(*y)] = &e;
      } else {
        auto f = morphism(c, e.left), g = morphism(c, e.right), h = morphism(c, e.result);
        if (f && g && h && fill(tmor, idx(*f) * m + idx(*g), *h, e.result, what)) tmor_eq[idx(*f) * m + idx(*g)] = &e;
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (!tobj[x * n + y]) {
          err("E010", "missing tensor entry '" + c.object_name(obj_id(x)) + " * " + c.object_name(obj_id(y)) + "'",
              blk.span);
        }
      }
    }
    if (r_.diagnostics.size() != before) return;
    auto T = [&](ObjId x, ObjId y) { return *tobj[idx(x) * n + idx(y)]; };

    // Checks a given component against its type or fills a forced one.
    auto settle = [&](std::optional<MorId>& slot, const Name* at, ObjId s, ObjId t, const std::string& what) {
      if (slot) {
        if (c.src(*slot) != s || c.tgt(*slot) != t) {
          err("E011", what + " must have type " + arrow(c, s, t), at ? at->span : blk.span);
        }
        return;
      }
      slot = forced(c, s, t);
      if (!slot) err("E010", "missing " + what + " (" + arrow(c, s, t) + ")", blk.span);
    };

    // given entries first, then the forced ones
    for (const bool given : {true, false}) {
      for (std::size_t f = 0; f < m; ++f) {
        for (std::size_t g = 0; g < m; ++g) {
          const MorId fm = mor_id(f), gm = mor_id(g);
          auto& slot = tmor[f * m + g];
          if (slot.has_value() != given) continue;
          if (!slot && c.is_identity(fm) && c.is_identity(gm)) slot = c.identity(T(c.src(fm), c.src(gm)));
          settle(slot, tmor_eq[f * m + g] ? &tmor_eq[f * m + g]->result : nullptr, T(c.src(fm), c.src(gm)),
                 T(c.tgt(fm), c.tgt(gm)), "tensor entry '" + c.morphism_name(fm) + " * " + c.morphism_name(gm) + "'");
        }
      }
    }
    if (!unit) return;

    auto components = [&](const std::vector<ComponentEq>& eqs, std::size_t arity, const char* what,
                          std::vector<const ComponentEq*>& at) {
      std::size_t size = 1;
      for (std::size_t i = 0; i < arity; ++i) size *= n;
      std::vector<std::optional<MorId>> slots(size);
      at.assign(size, nullptr);
      for (const auto& e : eqs) {
        std::size_t k = 0;
        bool ok = true;
        for (const auto& arg : e.args) {
          auto x = object(c, arg);
          ok = ok && x.has_value();
          if (x) k = k * n + idx(*x);
        }
        auto v = morphism(c, e.value);
        if (ok && v && fill(slots, k, *v, e.value, std::string(what) + " component")) at[k] = &e;
      }
      return slots;
    };
    std::vector<const ComponentEq*> lam_at, rho_at, alpha_at;
    auto lam = components(blk.lunitors, 1, "lunitor", lam_at);
    auto rho = components(blk.runitors, 1, "runitor", rho_at);
    auto alpha = components(blk.assocs, 3, "assoc", alpha_at);
    if (r_.diagnostics.size() != before) return;
    const ObjId I = *unit;
    for (std::size_t x = 0; x < n; ++x) {
      const ObjId xo = obj_id(x);
      settle(lam[x], lam_at[x] ? &lam_at[x]->value : nullptr, T(I, xo), xo, "lunitor " + c.object_name(xo));
      settle(rho[x], rho_at[x] ? &rho_at[x]->value : nullptr, T(xo, I), xo, "runitor " + c.object_name(xo));
    }
    for (std::size_t k = 0; k < n * n * n; ++k) {
      const ObjId x = obj_id(k / (n * n)), y = obj_id(k / n % n), z = obj_id(k % n);
      settle(alpha[k], alpha_at[k] ? &alpha_at[k]->value : nullptr, T(T(x, y), z), T(x, T(y, z)),
             "assoc " + c.object_name(x) + " " + c.object_name(y) + " " + c.object_name(z));
    }
    if (r_.diagnostics.size() != before) return;

    MonoidalTables t;
    t.unit = I;
    for (const auto& v : tobj) t.tensor_objects.push_back(*v);
    for (const auto& v : tmor) t.tensor_morphisms.push_back(*v);
    for (const auto& v : lam) t.lambda.push_back(*v);
    for (const auto& v : rho) t.rho.push_back(*v);
    for (const auto& v : alpha) t.alpha.push_back(*v);
    MonoidalParts parts = monoidal_parts(ref, t);
    if (auto fail = validate_layers(ref, parts.tensor, I, parts.left, parts.right, parts.assoc)) {
      Span at = blk.span;
      std::string msg = "monoidal structure on '" + a.name.text + "', layer " + layer_name(fail->layer);
      if (!fail->report.violations().empty()) {
        const Violation& v = fail->report.violations().front();
        const auto& w = v.witness;
        if (fail->layer == Layer::Tensor && !v.witness.empty() && morphisms_witness(v.law) && w[0] < m * m) {
          if (tmor_eq[w[0]]) at = tmor_eq[w[0]]->result.span;
          msg += ": " + v.law + " fails at (" + c.morphism_name(mor_id(w[0] / m)) + ", " +
                 c.morphism_name(mor_id(w[0] % m)) + ")";
        } else {
          if (fail->layer == Layer::Unit) at = blk.unit->span;
          if (objects_witness(v.law) && w.size() >= 3 && w[0] < n && w[1] < n && w[2] < n) {
            if (auto* e = alpha_at[(w[0] * n + w[1]) * n + w[2]]) at = e->value.span;
          } else if (objects_witness(v.law) && w.size() == 1 && w[0] < n) {
            const auto& src = fail->layer == Layer::RightUnitor || v.law.starts_with("right") ? rho_at : lam_at;
            if (src[w[0]]) at = src[w[0]]->value.span;
          }
          msg += ": " + describe(v, c);
        }
      }
      err("L002", msg, at);
      r_.layer_failures.emplace(a.name.text, *fail);
      return;
    }
    r_.env.monoidal[a.name.text] =
        share(MonoidalCategory{ref, std::move(parts.tensor), I, std::move(parts.left), std::move(parts.right),
                               std::move(parts.assoc)});
  }

  // ---------------------------------------------------------------- functors

  std::optional<CatRef> find_category(const Name& n) {
    if (auto it = r_.env.categories.find(n.text); it != r_.env.categories.end()) return it->second;
    if (auto it = ext_.categories.find(n.text); it != ext_.categories.end()) return it->second;
    if (auto it = ext_.monoidal.find(n.text); it != ext_.monoidal.end()) return it->second->base;
    if (!r_.layer_failures.count(n.text) && !r_.law_failures.count(n.text)) {
      err("E009", "unknown category '" + n.text + "'", n.span);
    }
    return std::nullopt;
  }

  std::optional<MonRef> find_monoidal(const Name& n) {
    if (auto it = r_.env.monoidal.find(n.text); it != r_.env.monoidal.end()) return it->second;
    if (auto it = ext_.monoidal.find(n.text); it != ext_.monoidal.end()) return it->second;
    if (r_.layer_failures.count(n.text) || r_.law_failures.count(n.text)) return std::nullopt;
    if (r_.env.categories.count(n.text) || ext_.categories.count(n.text)) {
      err("E009", "category '" + n.text + "' has no monoidal structure", n.span);
    } else {
      err("E009", "unknown category '" + n.text + "'", n.span);
    }
    return std::nullopt;
  }

  void functor(const FunctorAst& a) {
    const std::size_t before = r_.diagnostics.size();
    std::optional<MonRef> mdom, mcod;
    std::optional<CatRef> dom, cod;
    if (a.lax) {
      mdom = find_monoidal(a.dom);
      mcod = find_monoidal(a.cod);
      if (mdom) dom = (*mdom)->base;
      if (mcod) cod = (*mcod)->base;
    } else {
      dom = find_category(a.dom);
      cod = find_category(a.cod);
    }
    if (!dom || !cod) return;
    const FinCat& C = **dom;
    const FinCat& D = **cod;

    std::vector<std::optional<ObjId>> omap(C.num_objects());
    for (const auto& e : a.objects) {
      auto x = object(C, e.from), y = object(D, e.to);
      if (x && y) fill(omap, idx(*x), *y, e.to, "image of '" + e.from.text + "'");
    }
    for (std::size_t x = 0; x < omap.size(); ++x) {
      if (!omap[x]) err("E010", "missing image of object '" + C.object_name(obj_id(x)) + "'", a.name.span);
    }
    std::vector<std::optional<MorId>> mmap(C.num_morphisms());
    std::vector<const MapEntry*> mmap_at(C.num_morphisms(), nullptr);
    for (const auto& e : a.morphisms) {
      auto f = morphism(C, e.from), g = morphism(D, e.to);
      if (f && g && fill(mmap, idx(*f), *g, e.to, "image of '" + e.from.text + "'")) mmap_at[idx(*f)] = &e;
    }
    if (r_.diagnostics.size() != before) return;
    auto F = [&](ObjId x) { return *omap[idx(x)]; };
    for (std::size_t k = 0; k < mmap.size(); ++k) {
      const MorId f = mor_id(k);
      if (!mmap[k]) continue;
      const ObjId s = F(C.src(f)), t = F(C.tgt(f));
      if (D.src(*mmap[k]) != s || D.tgt(*mmap[k]) != t) {
        err("E011", "image of '" + C.morphism_name(f) + "' must have type " + arrow(D, s, t), mmap_at[k]->to.span);
      }
    }
    for (std::size_t k = 0; k < mmap.size(); ++k) {
      const MorId f = mor_id(k);
      if (mmap[k]) continue;
      if (C.is_identity(f)) {
        mmap[k] = D.identity(F(C.src(f)));
      } else if (!(mmap[k] = forced(D, F(C.src(f)), F(C.tgt(f))))) {
        err("E010", "missing image of morphism '" + C.morphism_name(f) + "'", a.name.span);
      }
    }
    if (r_.diagnostics.size() != before) return;

    Functor fn{*dom, *cod, {}, {}};
    for (const auto& v : omap) fn.omap.push_back(*v);
    for (const auto& v : mmap) fn.mmap.push_back(*v);
    LawReport laws = check_functor_laws(fn);
    if (!laws.ok()) {
      const Violation& v = laws.violations().front();
      Span at = a.name.span;
      if (morphisms_witness(v.law) && !v.witness.empty() && v.witness[0] < mmap_at.size() && mmap_at[v.witness[0]]) {
        at = mmap_at[v.witness[0]]->to.span;
      }
      err("L003", "functor '" + a.name.text + "': " + describe(v, C), at);
      r_.law_failures.emplace(a.name.text, std::move(laws));
      return;
    }
    if (!a.lax) {
      r_.env.functors.emplace(a.name.text, std::move(fn));
      return;
    }

    const MonoidalCategory& M = **mdom;
    const MonoidalCategory& N = **mcod;
    const std::size_t n = C.num_objects();
    std::vector<std::optional<MorId>> mu(n * n);
    std::vector<const ComponentEq*> mu_at(n * n, nullptr);
    for (const auto& e : a.mu) {
      auto x = object(C, e.args[0]), y = object(C, e.args[1]);
      auto v = morphism(D, e.value);
      if (x && y && v && fill(mu, idx(*x) * n + idx(*y), *v, e.value, "mu component")) mu_at[idx(*x) * n + idx(*y)] = &e;
    }
    std::optional<MorId> eps;
    if (a.eps) eps = morphism(D, a.eps->value);
    if (r_.diagnostics.size() != before) return;
    for (std::size_t k = 0; k < n * n; ++k) {
      const ObjId x = obj_id(k / n), y = obj_id(k % n);
      const ObjId s = N(F(x), F(y)), t = F(M(x, y));
      const std::string what = "mu " + C.object_name(x) + " " + C.object_name(y);
      if (mu[k]) {
        if (D.src(*mu[k]) != s || D.tgt(*mu[k]) != t) err("E011", what + " must have type " + arrow(D, s, t), mu_at[k]->value.span);
      } else if (!(mu[k] = forced(D, s, t))) {
        err("E010", "missing " + what + " (" + arrow(D, s, t) + ")", a.name.span);
      }
    }
    {
      const ObjId s = N.unit, t = F(M.unit);
      if (eps) {
        if (D.src(*eps) != s || D.tgt(*eps) != t) err("E011", "eps must have type " + arrow(D, s, t), a.eps->value.span);
      } else if (!(eps = forced(D, s, t))) {
        err("E010", "missing eps (" + arrow(D, s, t) + ")", a.name.span);
      }
    }
    if (r_.diagnostics.size() != before) return;
    LaxMonoidalFunctor lf{*mdom, *mcod, std::move(fn), {}, *eps, std::nullopt};
    for (const auto& v : mu) lf.mu.push_back(*v);
    LawReport lax = check_lax_monoidal_functor(lf);
    if (!lax.ok()) {
      const Violation& v = lax.violations().front();
      Span at = a.name.span;
      if (v.law == "mu-naturality" || v.law == "hexagon") {
        // witnesses are not mu slots; keep the block span
      } else if (v.witness.size() == 2 && v.witness[0] < n && v.witness[1] < n && mu_at[v.witness[0] * n + v.witness[1]]) {
        at = mu_at[v.witness[0] * n + v.witness[1]]->value.span;
      }
      err("L004", "lax functor '" + a.name.text + "': " + describe(v, C), at);
      r_.law_failures.emplace(a.name.text, std::move(lax));
      return;
    }
    r_.env.lax.emplace(a.name.text, std::move(lf));
  }

  std::optional<Functor> find_functor(const Name& n) {
    if (auto it = r_.env.functors.find(n.text); it != r_.env.functors.end()) return it->second;
    if (auto it = r_.env.lax.find(n.text); it != r_.env.lax.end()) return it->second.functor;
    if (auto it = ext_.functors.find(n.text); it != ext_.functors.end()) return it->second;
    if (auto it = ext_.lax.find(n.text); it != ext_.lax.end()) return it->second.functor;
    if (!r_.law_failures.count(n.text)) err("E009", "unknown functor '" + n.text + "'", n.span);
    return std::nullopt;
  }

  void nattrans(const NatTransAst& a) {
    const std::size_t before = r_.diagnostics.size();
    auto F = find_functor(a.source);
    auto G = find_functor(a.target);
    if (!F || !G) return;
    if (!same_category(F->dom, G->dom) || !same_category(F->cod, G->cod)) {
      err("E011", "'" + a.source.text + "' and '" + a.target.text + "' are not parallel", a.name.span);
      return;
    }
    const FinCat& C = *F->dom;
    const FinCat& D = *F->cod;
    const std::size_t n = C.num_objects();
    std::vector<std::optional<MorId>> comp(n);
    std::vector<const ComponentEq*> comp_at(n, nullptr);
    for (const auto& e : a.components) {
      auto x = object(C, e.args[0]);
      auto v = morphism(D, e.value);
      if (x && v && fill(comp, idx(*x), *v, e.value, "component at '" + e.args[0].text + "'")) comp_at[idx(*x)] = &e;
    }
    if (r_.diagnostics.size() != before) return;
    for (std::size_t x = 0; x < n; ++x) {
      const ObjId xo = obj_id(x);
      const ObjId s = (*F)(xo), t = (*G)(xo);
      const std::string what = "component at '" + C.object_name(xo) + "'";
      if (comp[x]) {
        if (D.src(*comp[x]) != s || D.tgt(*comp[x]) != t) err("E011", what + " must have type " + arrow(D, s, t), comp_at[x]->value.span);
      } else if (!(comp[x] = forced(D, s, t))) {
        err("E010", "missing " + what + " (" + arrow(D, s, t) + ")", a.name.span);
      }
    }
    if (r_.diagnostics.size() != before) return;
    NatTrans t{*F, *G, {}};
    for (const auto& v : comp) t.components.push_back(*v);
    LawReport laws = check_naturality(t);
    if (!laws.ok()) {
      err("L005", "transformation '" + a.name.text + "': " + describe(laws.violations().front(), C), a.name.span);
      r_.law_failures.emplace(a.name.text, std::move(laws));
      return;
    }
    r_.env.nattrans.emplace(a.name.text, std::move(t));
  }
};

}  // namespace

bool ElabResult::ok() const { return diagnostics.empty(); }

bool ElabResult::input_error() const {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error && d.code.starts_with("E"); });
}

ElabResult elaborate(const CatSpecAst& ast, const Environment& external) {
  ElabResult r;
  Elaborator(r, external).run(ast);
  return r;
}

ElabResult load(std::string_view text, const Environment& external) {
  ParseResult p = parse(text);
  if (!p.ast) {
    ElabResult r;
    r.diagnostics = std::move(p.diagnostics);
    return r;
  }
  return elaborate(*p.ast, external);
}

}  // namespace moncat::dsl
