#include "moncat/json_io.hpp"

#include <json.hpp>

namespace moncat::io {

namespace {

using json = nlohmann::json;

template <class Id>
json ids(const std::vector<Id>& v) {
  json a = json::array();
  for (const Id x : v) a.push_back(static_cast<std::uint32_t>(x));
  return a;
}

json encode(const FinCat& c) {
  json morphisms = json::array();
  for (const auto& d : c.morphisms()) morphisms.push_back({{"name", d.name}, {"src", idx(d.src)}, {"tgt", idx(d.tgt)}});
  json table = json::array();
  const std::size_t m = c.num_morphisms();
  for (std::size_t f = 0; f < m; ++f) {
    json row = json::array();
    for (std::size_t g = 0; g < m; ++g) row.push_back(c.table()[f * m + g]);
    table.push_back(std::move(row));
  }
  return {{"objects", c.object_names()},
          {"morphisms", std::move(morphisms)},
          {"identities", ids(c.identities())},
          {"table", std::move(table)}};
}

class Writer {
 public:
  std::size_t cat(const CatRef& c) {
    for (std::size_t i = 0; i < cat_refs_.size(); ++i) {
      if (cat_refs_[i] == c) return i;
    }
    for (std::size_t i = 0; i < cat_refs_.size(); ++i) {
      if (*cat_refs_[i] == *c) return i;
    }
    cat_refs_.push_back(c);
    cats_.push_back(encode(*c));
    return cat_refs_.size() - 1;
  }

  std::size_t mon(const MonRef& m) {
    for (std::size_t i = 0; i < mon_refs_.size(); ++i) {
      if (mon_refs_[i] == m || *mon_refs_[i] == *m) return i;
    }
    json v = {{"base", cat(m->base)},
              {"tensor", functor(m->tensor)},
              {"unit", idx(m->unit)},
              {"left", {{"forward", nat(m->left.forward)}, {"inverse", ids(m->left.inverse)}}},
              {"right", {{"forward", nat(m->right.forward)}, {"inverse", ids(m->right.inverse)}}},
              {"assoc", {{"forward", ids(m->assoc.forward)}, {"inverse", ids(m->assoc.inverse)}}}};
    mon_refs_.push_back(m);
    mons_.push_back(std::move(v));
    return mon_refs_.size() - 1;
  }

  json functor(const Functor& f) {
    return {{"dom", cat(f.dom)}, {"cod", cat(f.cod)}, {"omap", ids(f.omap)}, {"mmap", ids(f.mmap)}};
  }

  json nat(const NatTrans& t) {
    return {{"source", functor(t.source)}, {"target", functor(t.target)}, {"components", ids(t.components)}};
  }

  json lax(const LaxMonoidalFunctor& f) {
    json strong = nullptr;
    if (f.strong) strong = {{"mu_inverse", ids(f.strong->mu_inverse)}, {"eps_inverse", idx(f.strong->eps_inverse)}};
    return {{"dom", mon(f.dom)}, {"cod", mon(f.cod)}, {"functor", functor(f.functor)}, {"mu", ids(f.mu)},
            {"eps", idx(f.eps)},  {"strong", std::move(strong)}};
  }

  json weq(const WeakEquivalence& w) {
    json eta = json::array();
    for (const auto& e : w.eta) eta.push_back({idx(e.forward), idx(e.backward)});
    return {{"functor", functor(w.functor)}, {"section", ids(w.section)}, {"eta", std::move(eta)}};
  }

  std::string document(std::string_view kind, json value) {
    json d;
    d["format_version"] = kFormatVersion;
    d["kind"] = kind;
    d["categories"] = std::move(cats_);
    d["monoidal"] = std::move(mons_);
    d["value"] = std::move(value);
    return d.dump() + "\n";
  }

 private:
  json cats_ = json::array();
  json mons_ = json::array();
  std::vector<CatRef> cat_refs_;
  std::vector<MonRef> mon_refs_;
};

// ---------------------------------------------------------------------------

class Reader {
 public:
  explicit Reader(const json& root) : root_(root) {}

  Document run() {
    if (!root_.is_object()) throw JsonError("", "document must be an object");
    const json& version = field(root_, "format_version", "");
    if (!version.is_number_integer()) throw JsonError("/format_version", "must be an integer");
    if (version.get<long long>() != kFormatVersion) {
      throw JsonError("/format_version", "unsupported version " + version.dump() + ", expected " +
                                             std::to_string(kFormatVersion));
    }
    const json& kind = field(root_, "kind", "");
    if (!kind.is_string()) throw JsonError("/kind", "must be a string");
    const json& cats = array(root_, "categories", "");
    for (std::size_t i = 0; i < cats.size(); ++i) categories_.push_back(share(category(cats[i], at("/categories", i))));
    const json& mons = array(root_, "monoidal", "");
    for (std::size_t i = 0; i < mons.size(); ++i) monoidals_.push_back(share(monoidal(mons[i], at("/monoidal", i))));

    const json& v = field(root_, "value", "");
    const std::string k = kind.get<std::string>();
    Document d{k, CatRef{}};
    if (k == "category") {
      d.value = categories_[index(v, "/value", categories_.size())];
    } else if (k == "monoidal") {
      d.value = monoidals_[index(v, "/value", monoidals_.size())];
    } else if (k == "functor") {
      d.value = functor(v, "/value");
    } else if (k == "nat_trans") {
      d.value = nat(v, "/value");
    } else if (k == "lax_functor") {
      d.value = lax(v, "/value");
    } else if (k == "weak_equivalence") {
      d.value = weq(v, "/value");
    } else if (k == "transported_monoidal") {
      d.value = transported(v, "/value");
    } else if (k == "skeleton") {
      d.value = skeleton(v, "/value");
    } else {
      throw JsonError("/kind", "unknown kind '" + k + "'");
    }
    return d;
  }

 private:
  const json& root_;
  std::vector<CatRef> categories_;
  std::vector<MonRef> monoidals_;

  static std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }
  static std::string at(const std::string& path, const char* key) { return path + "/" + key; }

  static const json& field(const json& o, const char* key, const std::string& path) {
    if (!o.is_object()) throw JsonError(path, "must be an object");
    auto it = o.find(key);
    if (it == o.end()) throw JsonError(path, std::string("missing field '") + key + "'");
    return *it;
  }

  static const json& array(const json& o, const char* key, const std::string& path) {
    const json& a = field(o, key, path);
    if (!a.is_array()) throw JsonError(at(path, key), "must be an array");
    return a;
  }

  static std::size_t index(const json& v, const std::string& path, std::size_t limit) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
      throw JsonError(path, "must be a non-negative integer");
    }
    const auto i = v.get<unsigned long long>();
    if (i >= limit) throw JsonError(path, "index " + std::to_string(i) + " out of range (" + std::to_string(limit) + ")");
    return static_cast<std::size_t>(i);
  }

  template <class Id>
  static std::vector<Id> id_list(const json& o, const char* key, const std::string& path, std::size_t size,
                                 std::size_t limit) {
    const json& a = array(o, key, path);
    const std::string p = at(path, key);
    if (a.size() != size) {
      throw JsonError(p, "expected " + std::to_string(size) + " entries, found " + std::to_string(a.size()));
    }
    std::vector<Id> out;
    out.reserve(size);
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(static_cast<Id>(index(a[i], at(p, i), limit)));
    return out;
  }

  FinCat category(const json& v, const std::string& path) {
    const json& objs = array(v, "objects", path);
    std::vector<std::string> objects;
    for (std::size_t i = 0; i < objs.size(); ++i) {
      if (!objs[i].is_string()) throw JsonError(at(at(path, "objects"), i), "must be a string");
      objects.push_back(objs[i].get<std::string>());
    }
    const std::size_t n = objects.size();
    const json& mors = array(v, "morphisms", path);
    std::vector<MorphismDecl> decls;
    for (std::size_t i = 0; i < mors.size(); ++i) {
      const std::string p = at(at(path, "morphisms"), i);
      const json& name = field(mors[i], "name", p);
      if (!name.is_string()) throw JsonError(at(p, "name"), "must be a string");
      decls.push_back({name.get<std::string>(), obj_id(index(field(mors[i], "src", p), at(p, "src"), n)),
                       obj_id(index(field(mors[i], "tgt", p), at(p, "tgt"), n))});
    }
    const std::size_t m = decls.size();
    auto identities = id_list<MorId>(v, "identities", path, n, m);
    const json& rows = array(v, "table", path);
    const std::string tp = at(path, "table");
    if (rows.size() != m) throw JsonError(tp, "expected " + std::to_string(m) + " rows");
    std::vector<std::int32_t> table;
    table.reserve(m * m);
    for (std::size_t f = 0; f < m; ++f) {
      const std::string rp = at(tp, f);
      if (!rows[f].is_array() || rows[f].size() != m) throw JsonError(rp, "expected " + std::to_string(m) + " entries");
      for (std::size_t g = 0; g < m; ++g) {
        const json& e = rows[f][g];
        if (e.is_number_integer() && e.get<long long>() == -1) {
          table.push_back(FinCat::kUndefined);
        } else {
          table.push_back(static_cast<std::int32_t>(index(e, at(rp, g), m)));
        }
      }
    }
    return FinCat(std::move(objects), std::move(decls), std::move(identities), std::move(table));
  }

  CatRef cat_ref(const json& o, const char* key, const std::string& path) {
    return categories_[index(field(o, key, path), at(path, key), categories_.size())];
  }

  MonRef mon_ref(const json& o, const char* key, const std::string& path) {
    return monoidals_[index(field(o, key, path), at(path, key), monoidals_.size())];
  }

  Functor functor(const json& v, const std::string& path) {
    Functor f{cat_ref(v, "dom", path), cat_ref(v, "cod", path), {}, {}};
    f.omap = id_list<ObjId>(v, "omap", path, f.dom->num_objects(), f.cod->num_objects());
    f.mmap = id_list<MorId>(v, "mmap", path, f.dom->num_morphisms(), f.cod->num_morphisms());
    return f;
  }

  NatTrans nat(const json& v, const std::string& path) {
    NatTrans t{functor(field(v, "source", path), at(path, "source")),
               functor(field(v, "target", path), at(path, "target")),
               {}};
    if (!same_category(t.source.dom, t.target.dom) || !same_category(t.source.cod, t.target.cod)) {
      throw JsonError(at(path, "target"), "functors are not parallel");
    }
    t.components = id_list<MorId>(v, "components", path, t.dom()->num_objects(), t.cod()->num_morphisms());
    return t;
  }

  MonoidalCategory monoidal(const json& v, const std::string& path) {
    CatRef base = cat_ref(v, "base", path);
    const std::size_t n = base->num_objects(), m = base->num_morphisms();
    Functor tensor = functor(field(v, "tensor", path), at(path, "tensor"));
    if (!same_category(tensor.cod, base) || !(*tensor.dom == product_category(*base, *base))) {
      throw JsonError(at(path, "tensor"), "tensor must be a functor base x base -> base");
    }
    const ObjId unit = obj_id(index(field(v, "unit", path), at(path, "unit"), n));
    auto unitor = [&](const char* key) {
      const std::string p = at(path, key);
      const json& u = field(v, key, path);
      Unitor out{nat(field(u, "forward", p), at(p, "forward")), id_list<MorId>(u, "inverse", p, n, m)};
      if (!same_category(out.forward.dom(), base) || !same_category(out.forward.cod(), base)) {
        throw JsonError(at(p, "forward"), "must be a transformation on the base");
      }
      return out;
    };
    Unitor left = unitor("left");
    Unitor right = unitor("right");
    const std::string ap = at(path, "assoc");
    const json& a = field(v, "assoc", path);
    AssociatorData assoc{id_list<MorId>(a, "forward", ap, n * n * n, m), id_list<MorId>(a, "inverse", ap, n * n * n, m)};
    return MonoidalCategory{base, std::move(tensor), unit, std::move(left), std::move(right), std::move(assoc)};
  }

  LaxMonoidalFunctor lax(const json& v, const std::string& path) {
    MonRef dom = mon_ref(v, "dom", path), cod = mon_ref(v, "cod", path);
    Functor f = functor(field(v, "functor", path), at(path, "functor"));
    if (!same_category(f.dom, dom->base) || !same_category(f.cod, cod->base)) {
      throw JsonError(at(path, "functor"), "functor must run between the underlying categories");
    }
    const std::size_t n = dom->n(), m = cod->base->num_morphisms();
    LaxMonoidalFunctor out{dom, cod, std::move(f), id_list<MorId>(v, "mu", path, n * n, m),
                           mor_id(index(field(v, "eps", path), at(path, "eps"), m)), std::nullopt};
    const json& s = field(v, "strong", path);
    if (!s.is_null()) {
      const std::string sp = at(path, "strong");
      out.strong = StrongData{id_list<MorId>(s, "mu_inverse", sp, n * n, m),
                              mor_id(index(field(s, "eps_inverse", sp), at(sp, "eps_inverse"), m))};
    }
    return out;
  }

  WeakEquivalence weq(const json& v, const std::string& path) {
    Functor f = functor(field(v, "functor", path), at(path, "functor"));
    const std::size_t dn = f.dom->num_objects(), cn = f.cod->num_objects(), cm = f.cod->num_morphisms();
    auto section = id_list<ObjId>(v, "section", path, cn, dn);
    const json& eta = array(v, "eta", path);
    const std::string ep = at(path, "eta");
    if (eta.size() != cn) throw JsonError(ep, "expected " + std::to_string(cn) + " entries");
    std::vector<IsoWitness> witnesses;
    for (std::size_t i = 0; i < cn; ++i) {
      const std::string p = at(ep, i);
      if (!eta[i].is_array() || eta[i].size() != 2) throw JsonError(p, "must be a pair");
      witnesses.push_back({mor_id(index(eta[i][0], at(p, std::size_t{0}), cm)), mor_id(index(eta[i][1], at(p, std::size_t{1}), cm))});
    }
    if (!check_functor_laws(f).ok()) throw JsonError(at(path, "functor"), "not a functor");
    FullyFaithfulResult ff = is_fully_faithful(f);
    if (!ff.fully_faithful) throw JsonError(at(path, "functor"), "not fully faithful");
    return WeakEquivalence{std::move(f), std::move(ff.evidence), std::move(section), std::move(witnesses)};
  }

  TransportedMonoidal transported(const json& v, const std::string& path) {
    MonRef m = mon_ref(v, "monoidal", path);
    LaxMonoidalFunctor h = lax(field(v, "h", path), at(path, "h"));
    const std::string tp = at(path, "tensor");
    const json& t = field(v, "tensor", path);
    TransportedTensor tensor;
    tensor.tensor = functor(field(t, "tensor", tp), at(tp, "tensor"));
    tensor.mu = nat(field(t, "mu", tp), at(tp, "mu"));
    tensor.mu_inverse = id_list<MorId>(t, "mu_inverse", tp, tensor.mu.components.size(), tensor.mu.cod()->num_morphisms());
    tensor.source_objects = index(field(t, "source_objects", tp), at(tp, "source_objects"), static_cast<std::size_t>(-1));
    if (tensor.source_objects * tensor.source_objects != tensor.mu.components.size()) {
      throw JsonError(at(tp, "source_objects"), "does not match the mu components");
    }
    return TransportedMonoidal{std::move(m), std::move(h), std::move(tensor)};
  }

  Skeleton skeleton(const json& v, const std::string& path) {
    CatRef c = cat_ref(v, "skeleton", path);
    WeakEquivalence h = weq(field(v, "h", path), at(path, "h"));
    if (!same_category(h.cod(), c)) throw JsonError(at(path, "h"), "must land in the skeleton");
    try {
      return Skeleton{SkeletalCat(c), std::move(h)};
    } catch (const std::invalid_argument& e) {
      throw JsonError(at(path, "skeleton"), e.what());
    }
  }
};

template <class F>
std::string write(std::string_view kind, F&& body) {
  Writer w;
  json v = body(w);
  return w.document(kind, std::move(v));
}

}  // namespace

std::string to_json(const FinCat& c) {
  return write("category", [&](Writer& w) { return json(w.cat(share(c))); });
}

std::string to_json(const MonoidalCategory& m) {
  return write("monoidal", [&](Writer& w) { return json(w.mon(share(m))); });
}

std::string to_json(const Functor& f) {
  return write("functor", [&](Writer& w) { return w.functor(f); });
}

std::string to_json(const NatTrans& t) {
  return write("nat_trans", [&](Writer& w) { return w.nat(t); });
}

std::string to_json(const LaxMonoidalFunctor& f) {
  return write("lax_functor", [&](Writer& w) { return w.lax(f); });
}

std::string to_json(const WeakEquivalence& e) {
  return write("weak_equivalence", [&](Writer& w) { return w.weq(e); });
}

std::string to_json(const TransportedMonoidal& t) {
  return write("transported_monoidal", [&](Writer& w) {
    json tensor = {{"tensor", w.functor(t.tensor.tensor)},
                   {"mu", w.nat(t.tensor.mu)},
                   {"mu_inverse", ids(t.tensor.mu_inverse)},
                   {"source_objects", t.tensor.source_objects}};
    return json{{"monoidal", w.mon(t.monoidal)}, {"h", w.lax(t.h)}, {"tensor", std::move(tensor)}};
  });
}

std::string to_json(const Skeleton& s) {
  return write("skeleton", [&](Writer& w) { return json{{"skeleton", w.cat(s.skeleton.category())}, {"h", w.weq(s.h)}}; });
}

Document from_json(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw JsonError("", std::string("malformed JSON at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
  return Reader(root).run();
}

}  // namespace moncat::io
