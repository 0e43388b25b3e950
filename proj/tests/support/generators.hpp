#pragma once

#include <random>
#include <string>
#include <vector>

#include "moncat/monoidal.hpp"
#include "moncat/presheaf.hpp"

namespace gen {

using namespace moncat;
using Rng = std::mt19937;

/// One-object category from a monoid multiplication table on 0..k-1 with
/// unit element 0.
CatRef one_object(const std::vector<int>& mul, int k);

/// Thin category on 0..n-1 with a morphism x -> y iff leq[x*n+y].
CatRef thin(const std::vector<bool>& leq, int n);

/// Disjoint union of connected groupoids; block sizes and vertex group Z/g.
CatRef groupoid(const std::vector<int>& blocks, int g);

struct Sample {
  std::string label;
  CatRef cat;
  std::optional<MonRef> monoidal;
};

/// A random category with at most 5 objects and 40 morphisms, drawn from
/// groups, monoids, posets, groupoids and discrete categories, with a
/// monoidal structure when the family supports one.
Sample category(Rng& rng);

/// Monoidal categories only.
Sample monoidal(Rng& rng);

/// Componentwise product of two monoidal categories.
MonRef product(const MonRef& a, const MonRef& b);

/// Commutative monoid tables: Z/n, Z/2 x Z/2, and truncated or idempotent
/// monoids. Each entry is (table, size).
std::vector<std::pair<std::vector<int>, int>> commutative_monoids();

Presheaf empty_presheaf(const CatRef& c);
Presheaf terminal_presheaf(const CatRef& c);
Presheaf coproduct(const Presheaf& f, const Presheaf& g);
/// Discrete bases only: arbitrary sizes.
Presheaf sized(const CatRef& c, const std::vector<std::size_t>& sizes);

/// A random presheaf: random action tables kept when functorial, otherwise
/// a coproduct of representables and the terminal presheaf.
Presheaf presheaf(Rng& rng, const CatRef& c);

}  // namespace gen
