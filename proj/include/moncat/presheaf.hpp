#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "moncat/fincat.hpp"
#include "moncat/law_report.hpp"

namespace moncat {

struct FinSet {
  std::vector<std::string> labels;

  std::size_t size() const noexcept { return labels.size(); }
  static FinSet numbered(std::size_t n);

  friend bool operator==(const FinSet&, const FinSet&) = default;
};

/// A function between finite sets, as the image of each element index.
using SetMap = std::vector<std::uint32_t>;

/// A presheaf C^op -> FinSet. action[f] for f: x -> y maps at[y] to at[x].
struct Presheaf {
  CatRef base;
  std::vector<FinSet> at;
  std::vector<SetMap> action;

  friend bool operator==(const Presheaf& a, const Presheaf& b);
};

/// Sizes, distinct labels, action ranges, identities and contravariant
/// composition: action(f·g) = action(f) after action(g).
LawReport check_presheaf(const Presheaf& p);

struct PresheafMap {
  std::vector<SetMap> components;

  friend bool operator==(const PresheafMap&, const PresheafMap&) = default;
};

LawReport check_presheaf_map(const Presheaf& f, const Presheaf& g, const PresheafMap& a);
bool is_bijective(const Presheaf& f, const Presheaf& g, const PresheafMap& a);

PresheafMap identity_map(const Presheaf& f);
/// Diagrammatic: a, then b.
PresheafMap then(const PresheafMap& a, const PresheafMap& b);

/// Position of every morphism inside its hom-set (the order of FinCat::hom).
std::vector<std::uint32_t> hom_positions(const FinCat& c);

/// y(x): c |-> hom(c, x), acting by precomposition. Labels are morphism names.
Presheaf yoneda(const CatRef& c, ObjId x);
/// y(f): y(x) -> y(x') for f: x -> x', postcomposition with f.
PresheafMap yoneda_on_morphisms(const CatRef& c, MorId f);

/// Every natural transformation f => g, by backtracking with naturality
/// pruning. Throws ResourceExceeded past `bound` search nodes.
std::vector<PresheafMap> enumerate_presheaf_maps(const Presheaf& f, const Presheaf& g,
                                                 std::size_t bound = kDefaultWorkBound);

/// F(x) ≅ Nat(y(x), F): forward[e] is h |-> F(h)(e), backward evaluates at id_x.
struct YonedaBijection {
  std::vector<PresheafMap> forward;   // indexed by elements of F(x)
  std::vector<PresheafMap> nat;       // Nat(y(x), F) by enumeration
  std::vector<std::uint32_t> backward;  // per element of `nat`
  bool bijective = false;
};

YonedaBijection yoneda_lemma_bijection(const CatRef& c, ObjId x, const Presheaf& f,
                                       std::size_t bound = kDefaultWorkBound);

}  // namespace moncat
