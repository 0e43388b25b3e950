#include <cctype>
#include <sstream>
#include <stdexcept>

#include "moncat/dsl.hpp"

namespace moncat::dsl {

namespace {

bool plain_word(std::string_view s) {
  if (s.empty()) return false;
  for (const char ch : s) {
    const auto c = static_cast<unsigned char>(ch);
    if (!(std::isalnum(c) || c == '_' || c == '\'')) return false;
  }
  return true;
}

bool singleton(const FinCat& c, ObjId x, ObjId y) { return c.hom(x, y).size() == 1; }

std::string ob(const FinCat& c, ObjId x) { return quote(c.object_name(x)); }
std::string mo(const FinCat& c, MorId f) { return quote(c.morphism_name(f)); }

bool default_layout(const FinCat& c) {
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    const MorId i = c.identity(obj_id(x));
    if (idx(i) != x || c.morphism_name(i) != "id_" + c.object_name(obj_id(x))) return false;
  }
  return true;
}

void category_body(std::ostream& os, const FinCat& c) {
  os << "  objects";
  for (std::size_t x = 0; x < c.num_objects(); ++x) os << ' ' << ob(c, obj_id(x));
  os << ";\n";
  const bool implicit = default_layout(c);
  for (std::size_t k = 0; k < c.num_morphisms(); ++k) {
    const MorId f = mor_id(k);
    if (c.is_identity(f)) {
      if (!implicit) os << "  id " << ob(c, c.src(f)) << " = " << mo(c, f) << ";\n";
    } else {
      os << "  morph " << mo(c, f) << ": " << ob(c, c.src(f)) << " -> " << ob(c, c.tgt(f)) << ";\n";
    }
  }
  for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
    if (c.is_identity(mor_id(f))) continue;
    for (std::size_t g = 0; g < c.num_morphisms(); ++g) {
      if (c.is_identity(mor_id(g))) continue;
      if (auto h = c.compose(mor_id(f), mor_id(g))) {
        os << "  compose " << mo(c, mor_id(f)) << '.' << mo(c, mor_id(g)) << " = " << mo(c, *h) << ";\n";
      }
    }
  }
}

void monoidal_block(std::ostream& os, const MonoidalCategory& m) {
  const FinCat& c = *m.base;
  const std::size_t n = c.num_objects(), k = c.num_morphisms();
  os << "  monoidal {\n";
  os << "    unit " << ob(c, m.unit) << ";\n";
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      os << "    tensor " << ob(c, obj_id(x)) << " * " << ob(c, obj_id(y)) << " = " << ob(c, m(obj_id(x), obj_id(y)))
         << ";\n";
    }
  }
  for (std::size_t f = 0; f < k; ++f) {
    for (std::size_t g = 0; g < k; ++g) {
      const MorId fm = mor_id(f), gm = mor_id(g);
      if (c.is_identity(fm) && c.is_identity(gm)) continue;
      if (singleton(c, m(c.src(fm), c.src(gm)), m(c.tgt(fm), c.tgt(gm)))) continue;
      // `mor` only when both names would otherwise resolve as objects
      const bool ambiguous = c.find_object(c.morphism_name(fm)) && c.find_object(c.morphism_name(gm));
      os << "    tensor " << (ambiguous ? "mor " : "") << mo(c, fm) << " * " << mo(c, gm) << " = " << mo(c, m(fm, gm))
         << ";\n";
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    const ObjId xo = obj_id(x);
    if (!singleton(c, m(m.unit, xo), xo)) os << "    lunitor " << ob(c, xo) << " = " << mo(c, m.lambda(xo)) << ";\n";
  }
  for (std::size_t x = 0; x < n; ++x) {
    const ObjId xo = obj_id(x);
    if (!singleton(c, m(xo, m.unit), xo)) os << "    runitor " << ob(c, xo) << " = " << mo(c, m.rho(xo)) << ";\n";
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const ObjId a = obj_id(x), b = obj_id(y), d = obj_id(z);
        if (singleton(c, m(m(a, b), d), m(a, m(b, d)))) continue;
        os << "    assoc " << ob(c, a) << ' ' << ob(c, b) << ' ' << ob(c, d) << " = " << mo(c, m.alpha(a, b, d)) << ";\n";
      }
    }
  }
  os << "  }\n";
}

void functor_body(std::ostream& os, const Functor& f) {
  const FinCat& C = *f.dom;
  const FinCat& D = *f.cod;
  for (std::size_t x = 0; x < C.num_objects(); ++x) {
    os << "  obj " << ob(C, obj_id(x)) << " -> " << ob(D, f(obj_id(x))) << ";\n";
  }
  for (std::size_t k = 0; k < C.num_morphisms(); ++k) {
    const MorId g = mor_id(k);
    if (C.is_identity(g) && D.is_identity(f(g))) continue;
    if (singleton(D, f(C.src(g)), f(C.tgt(g)))) continue;
    os << "  mor " << mo(C, g) << " -> " << mo(D, f(g)) << ";\n";
  }
}

void lax_body(std::ostream& os, const LaxMonoidalFunctor& f) {
  functor_body(os, f.functor);
  const MonoidalCategory& M = *f.dom;
  const MonoidalCategory& N = *f.cod;
  const FinCat& C = *M.base;
  const FinCat& D = *N.base;
  const std::size_t n = C.num_objects();
  const Functor& F = f.functor;
  for (std::size_t k = 0; k < n * n; ++k) {
    const ObjId x = obj_id(k / n), y = obj_id(k % n);
    if (singleton(D, N(F(x), F(y)), F(M(x, y)))) continue;
    os << "  mu " << ob(C, x) << ' ' << ob(C, y) << " = " << mo(D, f.mu[k]) << ";\n";
  }
  if (!singleton(D, N.unit, F(M.unit))) os << "  eps = " << mo(D, f.eps) << ";\n";
}

template <class Map>
std::string name_of(const Map& m, const CatRef& c) {
  for (const auto& [name, v] : m) {
    if (v == c) return name;
  }
  for (const auto& [name, v] : m) {
    if (*v == *c) return name;
  }
  return {};
}

}  // namespace

std::string quote(std::string_view name) {
  if (plain_word(name)) return std::string(name);
  std::string out = "\"";
  for (const char ch : name) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

std::string print_canonical(const FinCat& c, std::string_view name) {
  std::ostringstream os;
  os << "category " << quote(name) << " {\n";
  category_body(os, c);
  os << "}\n";
  return os.str();
}

std::string print_canonical(const MonoidalCategory& m, std::string_view name) {
  std::ostringstream os;
  os << "category " << quote(name) << " {\n";
  category_body(os, *m.base);
  monoidal_block(os, m);
  os << "}\n";
  return os.str();
}

std::string print_canonical(const Functor& f, std::string_view name, std::string_view dom, std::string_view cod) {
  std::ostringstream os;
  os << "functor " << quote(name) << ": " << quote(dom) << " -> " << quote(cod) << " {\n";
  functor_body(os, f);
  os << "}\n";
  return os.str();
}

std::string print_canonical(const LaxMonoidalFunctor& f, std::string_view name, std::string_view dom,
                            std::string_view cod) {
  std::ostringstream os;
  os << "lax " << quote(name) << ": " << quote(dom) << " -> " << quote(cod) << " {\n";
  lax_body(os, f);
  os << "}\n";
  return os.str();
}

std::string print_canonical(const Environment& env) {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << '\n';
    first = false;
  };
  std::map<std::string, CatRef> bases;
  for (const auto& [name, c] : env.categories) bases[name] = c;
  for (const auto& [name, m] : env.monoidal) bases[name] = m->base;
  auto cat_name = [&](const CatRef& c) {
    std::string s = name_of(bases, c);
    if (s.empty()) throw std::invalid_argument("print_canonical: functor refers to an unnamed category");
    return s;
  };
  for (const auto& [name, c] : bases) {
    sep();
    auto it = env.monoidal.find(name);
    os << (it != env.monoidal.end() ? print_canonical(*it->second, name) : print_canonical(*c, name));
  }
  for (const auto& [name, f] : env.functors) {
    sep();
    os << print_canonical(f, name, cat_name(f.dom), cat_name(f.cod));
  }
  for (const auto& [name, f] : env.lax) {
    sep();
    os << print_canonical(f, name, cat_name(f.functor.dom), cat_name(f.functor.cod));
  }
  for (const auto& [name, t] : env.nattrans) {
    std::string s, g;
    for (const auto& [fn, f] : env.functors) {
      if (s.empty() && f == t.source) s = fn;
      if (g.empty() && f == t.target) g = fn;
    }
    for (const auto& [fn, f] : env.lax) {
      if (s.empty() && f.functor == t.source) s = fn;
      if (g.empty() && f.functor == t.target) g = fn;
    }
    if (s.empty() || g.empty()) throw std::invalid_argument("print_canonical: transformation between unnamed functors");
    sep();
    const FinCat& C = *t.dom();
    const FinCat& D = *t.cod();
    os << "nattrans " << quote(name) << ": " << quote(s) << " => " << quote(g) << " {\n";
    for (std::size_t x = 0; x < C.num_objects(); ++x) {
      const ObjId xo = obj_id(x);
      if (singleton(D, t.source(xo), t.target(xo))) continue;
      os << "  at " << ob(C, xo) << " = " << mo(D, t[xo]) << ";\n";
    }
    os << "}\n";
  }
  return os.str();
}

}  // namespace moncat::dsl
