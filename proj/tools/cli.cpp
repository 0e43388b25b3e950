#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "moncat/day.hpp"
#include "moncat/dsl.hpp"
#include "moncat/json_io.hpp"

namespace moncat::cli {

namespace {

using json = nlohmann::json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Diagnostics were already recorded.
struct Rejected {};
struct FailFast {};

struct Options {
  bool json = false;
  bool fail_fast = false;
  bool timing = false;
  bool strong = false;
  std::size_t max_candidates = 0;  // 0: no limit
  std::optional<std::uint64_t> seed;
  std::string block, target_block;
  std::string file, target, output, candidates = "all";
  std::vector<std::string> presheaves;
};

json law_details(const LawReport& r) {
  json v = json::array();
  for (const auto& x : r.violations()) {
    if (v.size() == 20) break;
    v.push_back({{"law", x.law},
                 {"witness", x.witness},
                 {"message", x.message},
                 {"kind", x.kind == ViolationKind::Structural ? "structural" : "law"}});
  }
  return {{"total", r.total()}, {"violations", std::move(v)}};
}

std::string first_violation(const LawReport& r) {
  if (r.violations().empty()) return {};
  const Violation& v = r.violations().front();
  std::ostringstream os;
  os << v;
  return os.str();
}

class Session {
 public:
  Session(Options opt, std::ostream& out, std::ostream& err, std::string command)
      : opt_(std::move(opt)), out_(out), err_(err), command_(std::move(command)) {
    if (const char* w = std::getenv("MONCAT_MAX_WORK")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(w, &end, 10);
      if (end == w || *end != '\0' || v == 0) throw InputError("MONCAT_MAX_WORK must be a positive integer");
      bound_ = static_cast<std::size_t>(v);
    }
  }

  const Options& opt() const { return opt_; }
  std::size_t bound() const { return bound_; }

  void input(const std::string& path) { inputs_.push_back(path); }
  void output(const std::string& path) { outputs_.push_back(path); }

  void check(std::string name, bool pass, std::string message = {}, json details = json::object()) {
    if (!opt_.json) {
      out_ << (pass ? "PASS  " : "FAIL  ") << name;
      if (!message.empty()) out_ << ": " << message;
      out_ << '\n';
      out_.flush();
    }
    checks_.push_back({{"name", std::move(name)},
                       {"status", pass ? "pass" : "fail"},
                       {"message", std::move(message)},
                       {"details", std::move(details)}});
    if (!pass) {
      ++failed_;
      if (opt_.fail_fast) throw FailFast{};
    }
  }

  void diagnostic(const dsl::Diagnostic& d, const std::string& file) {
    if (!opt_.json) err_ << dsl::format(d, file) << '\n';
    diagnostics_.push_back({{"file", file},
                            {"line", d.span.line},
                            {"column", d.span.column},
                            {"code", d.code},
                            {"severity", d.severity == dsl::Severity::Error ? "error" : "warning"},
                            {"message", d.message}});
  }

  void error(const std::string& message) {
    if (!opt_.json) err_ << "error: " << message << '\n';
    errors_.push_back(message);
  }

  int finish(int status, double elapsed_ms) {
    if (opt_.json) {
      json r = {{"command", command_},     {"inputs", inputs_}, {"outputs", outputs_}, {"checks", checks_},
                {"diagnostics", diagnostics_}, {"errors", errors_}, {"exit_status", status}};
      if (opt_.timing) r["timing_ms"] = elapsed_ms;
      out_ << r.dump(2) << '\n';
    } else {
      out_ << (checks_.size() - failed_) << " passed, " << failed_ << " failed";
      if (opt_.timing) out_ << " in " << static_cast<long long>(elapsed_ms) << " ms";
      out_ << '\n';
    }
    return status;
  }

  std::size_t failed() const { return failed_; }

 private:
  Options opt_;
  std::ostream& out_;
  std::ostream& err_;
  std::string command_;
  std::size_t bound_ = kDefaultWorkBound;
  std::vector<std::string> inputs_, outputs_, errors_;
  json checks_ = json::array();
  json diagnostics_ = json::array();
  std::size_t failed_ = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(Session& s, const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write '" + path + "'");
  s.output(path);
}

bool is_json(const std::string& path) { return path.ends_with(".json"); }

struct Loaded {
  dsl::CatSpecAst ast;
  dsl::ElabResult result;
};

Loaded load_cat(Session& s, const std::string& path, const dsl::Environment& external = {}) {
  s.input(path);
  const std::string text = read_file(path);
  dsl::ParseResult p = dsl::parse(text);
  if (!p.ast) {
    for (const auto& d : p.diagnostics) s.diagnostic(d, path);
    throw Rejected{};
  }
  dsl::ElabResult r = dsl::elaborate(*p.ast, external);
  Loaded l{std::move(*p.ast), std::move(r)};
  for (const auto& d : l.result.diagnostics) s.diagnostic(d, path);
  if (l.result.input_error()) throw Rejected{};
  return l;
}

// The L diagnostic for a block, if any.
std::string failure_message(const dsl::ElabResult& r, const std::string& name) {
  for (const auto& d : r.diagnostics) {
    if (d.code.starts_with("L") && d.message.find("'" + name + "'") != std::string::npos) return d.message;
  }
  return {};
}

json shape(const FinCat& c) { return {{"objects", c.num_objects()}, {"morphisms", c.num_morphisms()}}; }

// Monoidal block named by `wanted`, or the only one. A block that failed
// its layers is reported as a failed check.
MonRef pick_monoidal(Session& s, const Loaded& l, const std::string& wanted, const std::string& path) {
  std::vector<std::string> names;
  for (const auto& c : l.ast.categories) {
    if (c.monoidal) names.push_back(c.name.text);
  }
  std::string name = wanted;
  if (name.empty()) {
    if (names.size() != 1) {
      throw InputError("'" + path + "' has " + std::to_string(names.size()) +
                       " monoidal categories; choose one with --block");
    }
    name = names.front();
  } else if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw InputError("'" + path + "' has no monoidal category '" + name + "'");
  }
  if (auto it = l.result.env.monoidal.find(name); it != l.result.env.monoidal.end()) return it->second;
  if (auto it = l.result.layer_failures.find(name); it != l.result.layer_failures.end()) {
    s.check(name + ": monoidal-laws", false, failure_message(l.result, name), law_details(it->second.report));
  } else {
    s.check(name + ": category-laws", false, failure_message(l.result, name));
  }
  throw FailFast{};
}

std::pair<std::string, CatRef> pick_category(const Loaded& l, const std::string& wanted, const std::string& path) {
  std::vector<std::string> names;
  for (const auto& c : l.ast.categories) names.push_back(c.name.text);
  std::string name = wanted;
  if (name.empty()) {
    if (names.size() != 1) {
      throw InputError("'" + path + "' has " + std::to_string(names.size()) + " categories; choose one with --block");
    }
    name = names.front();
  }
  auto it = l.result.env.categories.find(name);
  if (it == l.result.env.categories.end()) throw InputError("'" + path + "' has no valid category '" + name + "'");
  return {name, it->second};
}

void check_layers(Session& s, const std::string& name, const MonoidalCategory& m) {
  auto fail = validate_layers(m.base, m.tensor, m.unit, m.left, m.right, m.assoc);
  if (fail) {
    s.check(name, false, std::string("layer ") + layer_name(fail->layer) + ": " + first_violation(fail->report),
            law_details(fail->report));
  } else {
    s.check(name, true, {}, shape(*m.base));
  }
}

void report(Session& s, const std::string& name, const LawReport& r, json details = json::object()) {
  if (r.ok()) {
    s.check(name, true, {}, std::move(details));
  } else {
    details["report"] = law_details(r);
    s.check(name, false, first_violation(r), std::move(details));
  }
}

void check_strong(Session& s, const std::string& name, const LaxMonoidalFunctor& h) {
  s.check(name, is_strong_monoidal(h).strong, is_strong_monoidal(h).strong ? "" : "not strong monoidal");
}

// ---------------------------------------------------------------- commands

void cmd_check_json(Session& s, const std::string& path) {
  s.input(path);
  io::Document d;
  try {
    d = io::from_json(read_file(path));
  } catch (const io::JsonError& e) {
    throw InputError(path + ": " + e.what());
  }
  const std::string k = d.kind;
  if (auto* c = std::get_if<CatRef>(&d.value)) report(s, "category-laws", check_category_laws(**c), shape(**c));
  if (auto* m = std::get_if<MonRef>(&d.value)) check_layers(s, "monoidal-laws", **m);
  if (auto* f = std::get_if<Functor>(&d.value)) report(s, "functor-laws", check_functor_laws(*f));
  if (auto* t = std::get_if<NatTrans>(&d.value)) report(s, "naturality", check_naturality(*t));
  if (auto* f = std::get_if<LaxMonoidalFunctor>(&d.value)) {
    report(s, "lax-monoidal-laws", check_lax_monoidal_functor(*f));
  }
  if (auto* w = std::get_if<WeakEquivalence>(&d.value)) report(s, "weak-equivalence", check_weak_equivalence(*w));
  if (auto* sk = std::get_if<Skeleton>(&d.value)) {
    report(s, "weak-equivalence", check_weak_equivalence(sk->h));
    report(s, "category-laws", check_category_laws(*sk->skeleton), shape(*sk->skeleton));
  }
  if (auto* t = std::get_if<TransportedMonoidal>(&d.value)) {
    check_layers(s, "transported-laws", *t->monoidal);
    report(s, "h-lax-monoidal-laws", check_lax_monoidal_functor(t->h));
    check_strong(s, "h-strong", t->h);
  }
}

void cmd_check(Session& s) {
  const std::string& path = s.opt().file;
  if (is_json(path)) return cmd_check_json(s, path);
  Loaded l = load_cat(s, path);
  const auto& env = l.result.env;
  for (const auto& c : l.ast.categories) {
    const std::string& n = c.name.text;
    auto it = env.categories.find(n);
    if (it == env.categories.end()) {
      s.check(n + ": category-laws", false, failure_message(l.result, n), law_details(l.result.law_failures.at(n)));
      continue;
    }
    s.check(n + ": category-laws", true, {}, shape(*it->second));
    if (!c.monoidal) continue;
    if (env.monoidal.count(n)) {
      s.check(n + ": monoidal-laws", true);
    } else {
      s.check(n + ": monoidal-laws", false, failure_message(l.result, n),
              law_details(l.result.layer_failures.at(n).report));
    }
  }
  for (const auto& f : l.ast.functors) {
    const std::string& n = f.name.text;
    const std::string what = n + (f.lax ? ": lax-monoidal-laws" : ": functor-laws");
    if (f.lax && env.lax.count(n)) {
      s.check(what, true, {}, {{"strong", is_strong_monoidal(env.lax.at(n)).strong}});
    } else if (!f.lax && env.functors.count(n)) {
      s.check(what, true);
    } else {
      s.check(what, false, failure_message(l.result, n), law_details(l.result.law_failures.at(n)));
    }
  }
  for (const auto& t : l.ast.nattrans) {
    const std::string& n = t.name.text;
    if (env.nattrans.count(n)) {
      s.check(n + ": naturality", true);
    } else {
      s.check(n + ": naturality", false, failure_message(l.result, n), law_details(l.result.law_failures.at(n)));
    }
  }
}

void cmd_skeletalize(Session& s) {
  Loaded l = load_cat(s, s.opt().file);
  auto [name, c] = pick_category(l, s.opt().block, s.opt().file);
  Skeleton sk = skeletalize(c);
  report(s, name + ": weak-equivalence", check_weak_equivalence(sk.h),
         {{"source", shape(*c)}, {"skeleton", shape(*sk.skeleton)}});
  const std::string& out = s.opt().output;
  write_file(s, out, is_json(out) ? io::to_json(sk) : dsl::print_canonical(*sk.skeleton, name + "_skeleton"));
}

void cmd_complete(Session& s) {
  Loaded l = load_cat(s, s.opt().file);
  MonRef m = pick_monoidal(s, l, s.opt().block, s.opt().file);
  std::string name = s.opt().block;
  for (const auto& [n, v] : l.result.env.monoidal) {
    if (v == m) name = n;
  }
  Skeleton sk = skeletalize(m->base);
  TransportedMonoidal t = [&] {
    try {
      return transport_monoidal(sk.h, m);
    } catch (const LayerError& e) {
      s.check(name + ": transported-laws", false, e.what(), law_details(e.failure().report));
      throw FailFast{};
    }
  }();
  check_layers(s, name + ": transported-laws", *t.monoidal);
  report(s, name + ": h-lax-monoidal-laws", check_lax_monoidal_functor(t.h));
  check_strong(s, name + ": h-strong", t.h);
  const std::string& out = s.opt().output;
  write_file(s, out, is_json(out) ? io::to_json(t) : dsl::print_canonical(*t.monoidal, name + "_rezk"));
}

Presheaf coproduct(const Presheaf& a, const Presheaf& b) {
  Presheaf p{a.base, {}, {}};
  for (std::size_t x = 0; x < a.at.size(); ++x) {
    FinSet set;
    for (const auto& l : a.at[x].labels) set.labels.push_back("L" + l);
    for (const auto& l : b.at[x].labels) set.labels.push_back("R" + l);
    p.at.push_back(std::move(set));
  }
  const FinCat& c = *a.base;
  for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
    const std::size_t y = idx(c.tgt(mor_id(f)));
    const auto shift = static_cast<std::uint32_t>(a.at[idx(c.src(mor_id(f)))].size());
    SetMap m = a.action[f];
    for (std::size_t i = 0; i < b.at[y].size(); ++i) m.push_back(b.action[f][i] + shift);
    p.action.push_back(std::move(m));
  }
  return p;
}

Presheaf constant(const CatRef& c, std::size_t n) {
  Presheaf p{c, std::vector<FinSet>(c->num_objects(), FinSet::numbered(n)), {}};
  SetMap id;
  for (std::size_t i = 0; i < n; ++i) id.push_back(static_cast<std::uint32_t>(i));
  p.action.assign(c->num_morphisms(), id);
  return p;
}

// SPEC: terms joined by '+'; a term is y:OBJ, 0 (empty), 1 (terminal), or
// sizes:N,N,... on a discrete base.
Presheaf presheaf_spec(const CatRef& c, const std::string& spec) {
  std::optional<Presheaf> out;
  std::stringstream terms(spec);
  std::string t;
  while (std::getline(terms, t, '+')) {
    Presheaf p;
    if (t == "0" || t == "1") {
      p = constant(c, t == "1" ? 1 : 0);
    } else if (t.starts_with("y:")) {
      auto x = c->find_object(t.substr(2));
      if (!x) throw InputError("presheaf '" + spec + "': unknown object '" + t.substr(2) + "'");
      p = yoneda(c, *x);
    } else if (t.starts_with("sizes:")) {
      for (std::size_t f = 0; f < c->num_morphisms(); ++f) {
        if (!c->is_identity(mor_id(f))) throw InputError("presheaf '" + spec + "': sizes need a discrete base");
      }
      std::vector<std::size_t> sizes;
      std::stringstream ns(t.substr(6));
      std::string n;
      while (std::getline(ns, n, ',')) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(n.c_str(), &end, 10);
        if (n.empty() || *end != '\0') throw InputError("presheaf '" + spec + "': bad size '" + n + "'");
        sizes.push_back(v);
      }
      if (sizes.size() != c->num_objects()) throw InputError("presheaf '" + spec + "': one size per object expected");
      p = Presheaf{c, {}, {}};
      for (std::size_t s : sizes) p.at.push_back(FinSet::numbered(s));
      for (std::size_t f = 0; f < c->num_morphisms(); ++f) {
        SetMap id;
        for (std::size_t i = 0; i < sizes[idx(c->src(mor_id(f)))]; ++i) id.push_back(static_cast<std::uint32_t>(i));
        p.action.push_back(std::move(id));
      }
    } else {
      throw InputError("presheaf '" + spec + "': unknown term '" + t + "'");
    }
    out = out ? coproduct(*out, p) : p;
  }
  if (!out) throw InputError("empty presheaf spec");
  return *out;
}

json sizes(const Presheaf& p) {
  json a = json::array();
  for (const auto& s : p.at) a.push_back(s.size());
  return a;
}

void cmd_day(Session& s) {
  Loaded l = load_cat(s, s.opt().file);
  MonRef m = pick_monoidal(s, l, s.opt().block, s.opt().file);
  const FinCat& c = *m->base;
  std::vector<Presheaf> specs;
  for (const auto& spec : s.opt().presheaves) specs.push_back(presheaf_spec(m->base, spec));
  CoendOptions opt{s.bound(), s.opt().seed};
  for (std::size_t i = 0; i < specs.size(); ++i) {
    for (std::size_t j = 0; j < specs.size(); ++j) {
      Presheaf p = day_tensor(*m, specs[i], specs[j], opt);
      report(s, "day " + s.opt().presheaves[i] + " * " + s.opt().presheaves[j], check_presheaf(p),
             {{"sizes", sizes(p)}});
    }
  }
  DayStructure day(m, s.bound());
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    for (std::size_t y = 0; y < c.num_objects(); ++y) {
      const ObjId xo = obj_id(x), yo = obj_id(y);
      PresheafIso w = representability_witness(day, xo, yo);
      report(s, "representable y(" + c.object_name(xo) + ") * y(" + c.object_name(yo) + ")", check_presheaf_iso(w),
             {{"sizes", sizes(w.source)}, {"tensor", c.object_name((*m)(xo, yo))}});
    }
  }
}

std::vector<LaxMonoidalFunctor> first(std::vector<LaxMonoidalFunctor> v, std::size_t n) {
  if (n != 0 && v.size() > n) v.resize(n);
  return v;
}

void cmd_precomp(Session& s) {
  const Options& o = s.opt();
  Loaded src = load_cat(s, o.file);
  MonRef c = pick_monoidal(s, src, o.block, o.file);
  dsl::Environment ext;
  for (const auto& [n, v] : src.result.env.categories) ext.categories[n] = v;
  for (const auto& [n, v] : src.result.env.monoidal) ext.monoidal[n] = v;
  Loaded tgt = load_cat(s, o.target, ext);
  MonRef e = pick_monoidal(s, tgt, o.target_block, o.target);
  try {
    SkeletalCat check(e->base);
  } catch (const std::invalid_argument&) {
    throw InputError("target '" + o.target + "' is not skeletal");
  }

  Skeleton sk = skeletalize(c->base);
  TransportedMonoidal t = transport_monoidal(sk.h, c);
  std::vector<LaxMonoidalFunctor> cands = first(enumerate_lax_monoidal(t.monoidal, e, s.bound()), o.max_candidates);
  std::vector<LaxMonoidalFunctor> lifts;
  std::vector<std::string> lift_names;
  const std::string& spec = o.candidates;
  if (spec == "all" || std::all_of(spec.begin(), spec.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
    const std::size_t n = spec == "all" ? o.max_candidates : std::stoul(spec);
    lifts = first(enumerate_lax_monoidal(c, e, s.bound()), n);
    for (std::size_t i = 0; i < lifts.size(); ++i) lift_names.push_back("#" + std::to_string(i));
  } else {
    std::stringstream names(spec);
    std::string n;
    while (std::getline(names, n, ',')) {
      auto it = tgt.result.env.lax.find(n);
      if (it == tgt.result.env.lax.end()) throw InputError("no lax functor '" + n + "' in '" + o.target + "'");
      if (!(*it->second.dom == *c) || !(*it->second.cod == *e)) {
        throw InputError("lax functor '" + n + "' does not run from the source to the target");
      }
      lifts.push_back(it->second);
      lift_names.push_back(n);
    }
  }

  PrecompReport r = verify_precomp_equivalence(sk.h, t.h, e, cands, lifts, o.strong, s.bound());
  json pairs = json::array();
  bool bijective = true;
  for (const auto& p : r.pairs) {
    bijective = bijective && p.bijective;
    pairs.push_back({{"first", p.first}, {"second", p.second}, {"cells_d", p.cells_d}, {"cells_c", p.cells_c},
                     {"bijective", p.bijective}});
  }
  s.check("whiskering-bijection", bijective, bijective ? "" : "cell counts differ",
          {{"candidates", cands.size()},
           {"pairs", std::move(pairs)},
           {"invalid_candidates", r.invalid_candidates},
           {"non_strong_candidates", r.non_strong_candidates}});
  for (std::size_t i = 0; i < lifts.size(); ++i) {
    const std::string name = "factorization " + lift_names[i];
    if (std::find(r.invalid_lifts.begin(), r.invalid_lifts.end(), i) != r.invalid_lifts.end()) {
      s.check(name, false, "not a lax monoidal functor");
      continue;
    }
    if (std::find(r.non_strong_lifts.begin(), r.non_strong_lifts.end(), i) != r.non_strong_lifts.end()) {
      s.check(name, true, "skipped: not strong", {{"skipped", true}});
      continue;
    }
    auto it = std::find_if(r.factorizations.begin(), r.factorizations.end(), [&](const auto& f) { return f.first == i; });
    if (it == r.factorizations.end()) {
      s.check(name, false, "no factorization");
      continue;
    }
    report(s, name, it->second.report, {{"strong", is_strong_monoidal(it->second.g).strong}});
  }
  if (!r.failures.ok()) report(s, "precomposition", r.failures);
}

void cmd_compare(Session& s) {
  Loaded l = load_cat(s, s.opt().file);
  MonRef m = pick_monoidal(s, l, s.opt().block, s.opt().file);
  DayComparison dc = compare_day_vs_transport(m, 64, s.bound());
  report(s, "rezk-vs-day", dc.report,
         {{"skeleton", shape(*dc.skeleton.skeleton)},
          {"representables", dc.completion.representables.size()},
          {"comparison_strong", is_strong_monoidal(dc.comparison).strong}});
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite monoidal category checker"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Emit a JSON run report");
  app.add_flag("--fail-fast", o.fail_fast, "Stop at the first failing check");
  app.add_flag("--timing", o.timing, "Include timing in the report");
  app.add_option("--max-candidates", o.max_candidates, "Cap on enumerated candidates (0: none)");
  app.add_option("--seed", o.seed, "Shuffle seed for coend quotients");
  app.add_option("--block", o.block, "Category block to use");

  auto* check = app.add_subcommand("check", "Check every block of a .cat or .cat.json file");
  check->add_option("FILE", o.file)->required();
  auto* skel = app.add_subcommand("skeletalize", "Skeleton of a category");
  skel->add_option("FILE", o.file)->required();
  skel->add_option("-o", o.output, "Output (.cat.json or .cat)")->required();
  auto* complete = app.add_subcommand("complete", "Transport a monoidal structure to the skeleton");
  complete->add_option("FILE", o.file)->required();
  complete->add_option("-o", o.output, "Output (.cat.json or .cat)")->required();
  auto* day = app.add_subcommand("day", "Day convolution sizes and representability");
  day->add_option("FILE", o.file)->required();
  day->add_option("--presheaf", o.presheaves, "y:OBJ, 0, 1 or sizes:N,...; joined by +");
  auto* precomp = app.add_subcommand("precomp", "Precomposition with the skeleton map");
  precomp->add_option("FILE", o.file)->required();
  precomp->add_option("TARGETFILE", o.target)->required();
  precomp->add_option("--candidates", o.candidates, "all, a count, or lax functor names (comma separated)");
  precomp->add_option("--target-block", o.target_block, "Monoidal block of TARGETFILE");
  precomp->add_flag("--strong", o.strong, "Strong monoidal variant");
  auto* compare = app.add_subcommand("compare", "Compare transported and Day structures");
  compare->add_option("FILE", o.file)->required();

  std::vector<std::string> rev(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rev.begin(), rev.end());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  };
  std::optional<Session> s;
  try {
    s.emplace(o, out, err, command);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  try {
    if (command == "check") cmd_check(*s);
    if (command == "skeletalize") cmd_skeletalize(*s);
    if (command == "complete") cmd_complete(*s);
    if (command == "day") cmd_day(*s);
    if (command == "precomp") cmd_precomp(*s);
    if (command == "compare") cmd_compare(*s);
  } catch (const FailFast&) {
  } catch (const Rejected&) {
    return s->finish(kInputError, elapsed());
  } catch (const InputError& e) {
    s->error(e.what());
    return s->finish(kInputError, elapsed());
  } catch (const ResourceExceeded& e) {
    s->error(e.what());
    return s->finish(kResourceExceeded, elapsed());
  }
  return s->finish(s->failed() > 0 ? kCheckFailed : kOk, elapsed());
}

}  // namespace moncat::cli
