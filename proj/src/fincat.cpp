#include "moncat/fincat.hpp"

#include <algorithm>
#include <map>
#include <functional>
#include <stdexcept>

namespace moncat {

namespace {

std::uint32_t u32(std::size_t v) { return static_cast<std::uint32_t>(v); }

}  // namespace

FinCat::FinCat(std::vector<std::string> objects, std::vector<MorphismDecl> morphisms, std::vector<MorId> identities,
               std::vector<std::int32_t> table)
    : objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      identities_(std::move(identities)),
      table_(std::move(table)) {
  if (table_.size() != morphisms_.size() * morphisms_.size()) {
    throw std::invalid_argument("composition table must have |mor|^2 entries");
  }
  index_homs();
}

void FinCat::index_homs() {
  const std::size_t n = objects_.size();
  std::vector<std::uint32_t> counts(n * n + 1, 0);
  auto valid = [&](const MorphismDecl& m) { return idx(m.src) < n && idx(m.tgt) < n; };
  for (const auto& m : morphisms_) {
    if (valid(m)) ++counts[idx(m.src) * n + idx(m.tgt) + 1];
  }
  for (std::size_t i = 1; i < counts.size(); ++i) counts[i] += counts[i - 1];
  hom_offsets_ = counts;
  hom_items_.assign(counts.back(), MorId{});
  std::vector<std::uint32_t> cursor(counts.begin(), counts.end() - 1);
  for (std::size_t f = 0; f < morphisms_.size(); ++f) {
    const auto& m = morphisms_[f];
    if (!valid(m)) continue;
    hom_items_[cursor[idx(m.src) * n + idx(m.tgt)]++] = mor_id(f);
  }
}

bool FinCat::is_identity(MorId f) const {
  return idx(src(f)) < identities_.size() && identities_[idx(src(f))] == f;
}

std::optional<MorId> FinCat::compose(MorId f, MorId g) const {
  const std::size_t m = morphisms_.size();
  if (idx(f) >= m || idx(g) >= m) return std::nullopt;
  const std::int32_t e = table_[idx(f) * m + idx(g)];
  if (e < 0 || static_cast<std::size_t>(e) >= m) return std::nullopt;
  return mor_id(static_cast<std::size_t>(e));
}

MorId FinCat::then(MorId f, MorId g) const {
  auto h = compose(f, g);
  if (!h) {
    throw std::logic_error("composite of '" + morphism_name(f) + "' and '" + morphism_name(g) + "' is undefined");
  }
  return *h;
}

std::span<const MorId> FinCat::hom(ObjId x, ObjId y) const {
  const std::size_t n = objects_.size();
  if (idx(x) >= n || idx(y) >= n) return {};
  const std::size_t k = idx(x) * n + idx(y);
  return {hom_items_.data() + hom_offsets_[k], hom_items_.data() + hom_offsets_[k + 1]};
}

std::optional<ObjId> FinCat::find_object(std::string_view name) const {
  auto it = std::find(objects_.begin(), objects_.end(), name);
  if (it == objects_.end()) return std::nullopt;
  return obj_id(static_cast<std::size_t>(it - objects_.begin()));
}

std::optional<MorId> FinCat::find_morphism(std::string_view name) const {
  auto it = std::find_if(morphisms_.begin(), morphisms_.end(), [&](const auto& m) { return m.name == name; });
  if (it == morphisms_.end()) return std::nullopt;
  return mor_id(static_cast<std::size_t>(it - morphisms_.begin()));
}

FinCat FinCat::with_entry(MorId f, MorId g, std::int32_t h) const {
  FinCat copy = *this;
  copy.table_[idx(f) * morphisms_.size() + idx(g)] = h;
  return copy;
}

FinCat FinCat::renamed(std::vector<std::string> objects, std::vector<std::string> morphisms) const {
  if (objects.size() != objects_.size() || morphisms.size() != morphisms_.size()) {
    throw std::invalid_argument("renamed: name count mismatch");
  }
  FinCat copy = *this;
  copy.objects_ = std::move(objects);
  for (std::size_t i = 0; i < morphisms.size(); ++i) copy.morphisms_[i].name = std::move(morphisms[i]);
  return copy;
}

bool FinCat::same_shape(const FinCat& other) const {
  if (objects_.size() != other.objects_.size() || morphisms_.size() != other.morphisms_.size()) return false;
  for (std::size_t i = 0; i < morphisms_.size(); ++i) {
    if (morphisms_[i].src != other.morphisms_[i].src || morphisms_[i].tgt != other.morphisms_[i].tgt) return false;
  }
  return identities_ == other.identities_ && table_ == other.table_;
}

bool operator==(const FinCat& a, const FinCat& b) {
  return a.same_shape(b) && a.objects_ == b.objects_ && a.morphisms_ == b.morphisms_;
}

// ---------------------------------------------------------------------------

CategoryBuilder::CategoryBuilder(std::vector<std::string> objects) : objects_(std::move(objects)) {
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    morphisms_.push_back({"id_" + objects_[i], obj_id(i), obj_id(i)});
  }
}

ObjId CategoryBuilder::object(std::string_view name) const {
  auto it = std::find(objects_.begin(), objects_.end(), name);
  if (it == objects_.end()) throw std::invalid_argument("unknown object '" + std::string(name) + "'");
  return obj_id(static_cast<std::size_t>(it - objects_.begin()));
}

MorId CategoryBuilder::morphism(std::string name, ObjId src, ObjId tgt) {
  if (idx(src) >= objects_.size() || idx(tgt) >= objects_.size()) {
    throw std::invalid_argument("morphism '" + name + "' has an unknown endpoint");
  }
  morphisms_.push_back({std::move(name), src, tgt});
  return mor_id(morphisms_.size() - 1);
}

MorId CategoryBuilder::morphism(std::string name, std::string_view src, std::string_view tgt) {
  return morphism(std::move(name), object(src), object(tgt));
}

MorId CategoryBuilder::find(std::string_view name) const {
  for (std::size_t i = 0; i < morphisms_.size(); ++i) {
    if (morphisms_[i].name == name) return mor_id(i);
  }
  throw std::invalid_argument("unknown morphism '" + std::string(name) + "'");
}

std::size_t CategoryBuilder::compose(MorId f, MorId g, MorId h) {
  equations_.emplace_back(f, g, h);
  return equations_.size() - 1;
}

BuildResult CategoryBuilder::try_build(bool derive) const {
  const std::size_t n = objects_.size();
  const std::size_t m = morphisms_.size();
  BuildResult result;
  std::vector<std::int32_t> table(m * m, FinCat::kUndefined);
  // Which equation set each entry; npos for identity laws and derived values.
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> origin(m * m, npos);

  auto at = [&](MorId f, MorId g) -> std::int32_t& { return table[idx(f) * m + idx(g)]; };
  auto src = [&](MorId f) { return morphisms_[idx(f)].src; };
  auto tgt = [&](MorId f) { return morphisms_[idx(f)].tgt; };

  for (std::size_t f = 0; f < m; ++f) {
    const MorId fm = mor_id(f);
    at(mor_id(idx(src(fm))), fm) = static_cast<std::int32_t>(f);
    at(fm, mor_id(idx(tgt(fm)))) = static_cast<std::int32_t>(f);
  }

  for (std::size_t e = 0; e < equations_.size(); ++e) {
    auto [f, g, h] = equations_[e];
    if (tgt(f) != src(g)) {
      result.issues.push_back({BuildIssue::Kind::NotComposable, f, g, e});
      continue;
    }
    if (src(h) != src(f) || tgt(h) != tgt(g)) {
      result.issues.push_back({BuildIssue::Kind::WrongEndpoints, f, g, e});
      continue;
    }
    std::int32_t& slot = at(f, g);
    if (slot != FinCat::kUndefined && slot != static_cast<std::int32_t>(idx(h))) {
      result.issues.push_back({BuildIssue::Kind::Conflict, f, g, e});
      continue;
    }
    slot = static_cast<std::int32_t>(idx(h));
    if (origin[idx(f) * m + idx(g)] == npos) origin[idx(f) * m + idx(g)] = e;
  }

  if (derive) {
    // Homs for the singleton rule.
    std::vector<std::vector<MorId>> homs(n * n);
    for (std::size_t f = 0; f < m; ++f) homs[idx(src(mor_id(f))) * n + idx(tgt(mor_id(f)))].push_back(mor_id(f));
    bool changed = true;
    while (changed) {
      changed = false;
      // known decompositions: result -> list of (p, q)
      std::vector<std::vector<std::pair<MorId, MorId>>> splits(m);
      for (std::size_t p = 0; p < m; ++p) {
        for (std::size_t q = 0; q < m; ++q) {
          const std::int32_t r = table[p * m + q];
          if (r >= 0) splits[static_cast<std::size_t>(r)].emplace_back(mor_id(p), mor_id(q));
        }
      }
      for (std::size_t f = 0; f < m; ++f) {
        for (std::size_t g = 0; g < m; ++g) {
          const MorId fm = mor_id(f), gm = mor_id(g);
          if (tgt(fm) != src(gm) || at(fm, gm) != FinCat::kUndefined) continue;
          std::vector<std::int32_t> forced;
          const auto& hs = homs[idx(src(fm)) * n + idx(tgt(gm))];
          if (hs.size() == 1) forced.push_back(static_cast<std::int32_t>(idx(hs[0])));
          // f = p·q  =>  f·g = p·(q·g)
          for (auto [p, q] : splits[f]) {
            const std::int32_t qg = at(q, gm);
            if (qg < 0) continue;
            const std::int32_t s = at(p, mor_id(static_cast<std::size_t>(qg)));
            if (s >= 0) forced.push_back(s);
          }
          // g = p·q  =>  f·g = (f·p)·q
          for (auto [p, q] : splits[g]) {
            const std::int32_t fp = at(fm, p);
            if (fp < 0) continue;
            const std::int32_t s = at(mor_id(static_cast<std::size_t>(fp)), q);
            if (s >= 0) forced.push_back(s);
          }
          if (forced.empty()) continue;
          if (std::adjacent_find(forced.begin(), forced.end(), std::not_equal_to<>()) != forced.end()) {
            result.issues.push_back({BuildIssue::Kind::Conflict, fm, gm, npos});
            at(fm, gm) = -2;  // poison so we do not report it twice
            continue;
          }
          at(fm, gm) = forced.front();
          changed = true;
        }
      }
    }
    for (auto& e : table) {
      if (e == -2) e = FinCat::kUndefined;
    }
  }

  for (std::size_t f = 0; f < m; ++f) {
    for (std::size_t g = 0; g < m; ++g) {
      const MorId fm = mor_id(f), gm = mor_id(g);
      if (tgt(fm) == src(gm) && at(fm, gm) == FinCat::kUndefined) {
        const bool reported = std::any_of(result.issues.begin(), result.issues.end(), [&](const BuildIssue& i) {
          return i.kind == BuildIssue::Kind::Conflict && i.f == fm && i.g == gm;
        });
        if (!reported) result.issues.push_back({BuildIssue::Kind::Missing, fm, gm, npos});
      }
    }
  }

  if (result.issues.empty()) {
    std::vector<MorId> ids;
    for (std::size_t i = 0; i < n; ++i) ids.push_back(mor_id(i));
    result.category = FinCat(objects_, morphisms_, std::move(ids), std::move(table));
  }
  return result;
}

FinCat CategoryBuilder::build(bool derive) const {
  auto r = try_build(derive);
  if (!r.category) {
    const auto& i = r.issues.front();
    const char* what = i.kind == BuildIssue::Kind::Missing         ? "missing composite"
                       : i.kind == BuildIssue::Kind::Conflict      ? "conflicting composite"
                       : i.kind == BuildIssue::Kind::NotComposable ? "equation on a non-composable pair"
                                                                   : "equation result has wrong endpoints";
    throw std::invalid_argument(std::string(what) + " for " + morphisms_[idx(i.f)].name + "." +
                                morphisms_[idx(i.g)].name);
  }
  return std::move(*r.category);
}

// ---------------------------------------------------------------------------

LawReport check_category_laws(const FinCat& c) {
  LawReport report;
  const std::size_t n = c.num_objects();
  const std::size_t m = c.num_morphisms();

  if (c.identities().size() != n) {
    report.structural("identity-table", {u32(c.identities().size())}, "identity table must have one entry per object");
    return report;
  }
  for (std::size_t f = 0; f < m; ++f) {
    const auto& d = c.morphisms()[f];
    if (idx(d.src) >= n || idx(d.tgt) >= n) report.structural("dangling-id", {u32(f)}, "morphism endpoint out of range");
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (idx(c.identities()[x]) >= m) report.structural("dangling-id", {u32(x)}, "identity out of range");
  }
  for (std::size_t f = 0; f < m; ++f) {
    for (std::size_t g = 0; g < m; ++g) {
      const std::int32_t e = c.table()[f * m + g];
      if (e != FinCat::kUndefined && (e < 0 || static_cast<std::size_t>(e) >= m)) {
        report.structural("dangling-id", {u32(f), u32(g)}, "composite refers to morphism " + std::to_string(e));
      }
    }
  }
  if (report.has_structural()) return report;

  for (std::size_t f = 0; f < m; ++f) {
    for (std::size_t g = 0; g < m; ++g) {
      const MorId fm = mor_id(f), gm = mor_id(g);
      const bool composable = c.tgt(fm) == c.src(gm);
      const std::int32_t e = c.raw_entry(fm, gm);
      if (composable && e == FinCat::kUndefined) {
        report.structural("missing-composite", {u32(f), u32(g)});
      } else if (!composable && e != FinCat::kUndefined) {
        report.structural("non-composable-entry", {u32(f), u32(g)});
      }
    }
  }

  for (std::size_t x = 0; x < n; ++x) {
    const MorId i = c.identity(obj_id(x));
    if (idx(c.src(i)) != x || idx(c.tgt(i)) != x) report.violation("identity-endpoints", {u32(x)});
  }
  for (std::size_t f = 0; f < m; ++f) {
    const MorId fm = mor_id(f);
    for (std::size_t y = 0; y < n; ++y) {
      for (MorId gm : c.hom(c.tgt(fm), obj_id(y))) {
        auto h = c.compose(fm, gm);
        if (h && (c.src(*h) != c.src(fm) || c.tgt(*h) != c.tgt(gm))) {
          report.violation("composite-endpoints", {u32(f), u32(idx(gm))});
        }
      }
    }
  }
  for (std::size_t f = 0; f < m; ++f) {
    const MorId fm = mor_id(f);
    auto left = c.compose(c.identity(c.src(fm)), fm);
    auto right = c.compose(fm, c.identity(c.tgt(fm)));
    if (left && *left != fm) report.violation("identity", {u32(f)}, "left identity law fails");
    if (right && *right != fm) report.violation("identity", {u32(f)}, "right identity law fails");
  }
  // Associativity over every composable triple.
  for (std::size_t f = 0; f < m; ++f) {
    const MorId fm = mor_id(f);
    for (std::size_t y = 0; y < n; ++y) {
      for (MorId gm : c.hom(c.tgt(fm), obj_id(y))) {
        auto fg = c.compose(fm, gm);
        if (!fg) continue;
        for (std::size_t z = 0; z < n; ++z) {
          for (MorId hm : c.hom(obj_id(y), obj_id(z))) {
            auto gh = c.compose(gm, hm);
            if (!gh) continue;
            auto lhs = c.compose(*fg, hm);
            auto rhs = c.compose(fm, *gh);
            if (!lhs || !rhs || *lhs != *rhs) {
              report.violation("associativity", {u32(f), u32(idx(gm)), u32(idx(hm))});
            }
          }
        }
      }
    }
  }
  return report;
}

FinCat product_category(const FinCat& c, const FinCat& d) {
  const std::size_t nc = c.num_objects(), nd = d.num_objects();
  const std::size_t mc = c.num_morphisms(), md = d.num_morphisms();
  std::vector<std::string> objects;
  objects.reserve(nc * nd);
  for (std::size_t x = 0; x < nc; ++x) {
    for (std::size_t y = 0; y < nd; ++y) {
      objects.push_back("(" + c.object_name(obj_id(x)) + "," + d.object_name(obj_id(y)) + ")");
    }
  }
  std::vector<MorphismDecl> morphisms;
  morphisms.reserve(mc * md);
  for (std::size_t f = 0; f < mc; ++f) {
    for (std::size_t g = 0; g < md; ++g) {
      const MorId fm = mor_id(f), gm = mor_id(g);
      morphisms.push_back({"(" + c.morphism_name(fm) + "," + d.morphism_name(gm) + ")",
                           pair_object(c.src(fm), d.src(gm), nd), pair_object(c.tgt(fm), d.tgt(gm), nd)});
    }
  }
  std::vector<MorId> ids;
  ids.reserve(nc * nd);
  for (std::size_t x = 0; x < nc; ++x) {
    for (std::size_t y = 0; y < nd; ++y) {
      ids.push_back(pair_morphism(c.identity(obj_id(x)), d.identity(obj_id(y)), md));
    }
  }
  const std::size_t m = mc * md;
  std::vector<std::int32_t> table(m * m, FinCat::kUndefined);
  for (std::size_t f1 = 0; f1 < mc; ++f1) {
    for (std::size_t f2 = 0; f2 < mc; ++f2) {
      auto f12 = c.compose(mor_id(f1), mor_id(f2));
      if (!f12) continue;
      for (std::size_t g1 = 0; g1 < md; ++g1) {
        const std::size_t row = (f1 * md + g1) * m;
        for (std::size_t g2 = 0; g2 < md; ++g2) {
          auto g12 = d.compose(mor_id(g1), mor_id(g2));
          if (!g12) continue;
          table[row + f2 * md + g2] = static_cast<std::int32_t>(idx(*f12) * md + idx(*g12));
        }
      }
    }
  }
  return FinCat(std::move(objects), std::move(morphisms), std::move(ids), std::move(table));
}

}  // namespace moncat
