#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "character.hpp"
#include "errors.hpp"
#include "fusion.hpp"
#include "lattice.hpp"

// Fusion-stable characters: the lattice of virtual characters of S that are
// constant on fused element classes, enumeration of the genuine ones of a
// given degree, and the same data computed as a limit over a family of
// subgroups (so the two routes can be compared).

namespace fuselab {

inline constexpr std::int64_t kDefaultDegreeFactor = 4;

namespace detail {

inline void check_table_on_underlying(const FusionSystem& f, const CharacterTable& table) {
  input_check(table.group().parent().get() == f.ambient().get() &&
                  table.group().elems() == f.underlying_group().elems(),
              "character table does not belong to the fusion system's underlying group");
}

inline std::int64_t div_floor(std::int64_t a, std::int64_t b) {  // b > 0
  std::int64_t q = a / b, r = a % b;
  return (r != 0 && r < 0) ? q - 1 : q;
}

inline std::int64_t div_ceil(std::int64_t a, std::int64_t b) {  // b > 0
  std::int64_t q = a / b, r = a % b;
  return (r != 0 && r > 0) ? q + 1 : q;
}

// One integer row per cyclotomic coordinate of each value difference
// chi_i(x) - chi_i(y) over the supplied element pairs. A virtual character
// with multiplicity vector v takes equal values at x and y for every pair
// exactly when each row annihilates v. Rows are deduplicated and zero rows
// dropped.
inline IntMat value_difference_rows(const CharacterTable& table,
                                    const std::vector<std::pair<int, int>>& pairs) {
  const int r = table.num_irreducibles();
  const int m = table.cyclo_order();
  std::set<IntVec> rows;
  for (const auto& [x, y] : pairs) {
    std::vector<std::vector<Rational>> slot;  // coefficient index -> row over irreducibles
    for (int i = 0; i < r; ++i) {
      Cyclotomic d = (table.irreducible(i).value_at_element(x) -
                      table.irreducible(i).value_at_element(y))
                         .promoted(m);
      const auto& c = d.coeffs();
      if (slot.empty()) slot.assign(c.size(), std::vector<Rational>(r, Rational(0)));
      internal_check(slot.size() == c.size(), "cyclotomic coordinate count mismatch");
      for (std::size_t s = 0; s < c.size(); ++s) slot[s][i] = c[s];
    }
    for (const auto& rational_row : slot) {
      IntVec z = lat::scale_to_integers(rational_row);
      if (std::any_of(z.begin(), z.end(), [](std::int64_t e) { return e != 0; }))
        rows.insert(std::move(z));
    }
  }
  return IntMat(rows.begin(), rows.end());
}

// Nonnegative points of the row lattice (rows in canonical HNF) whose total
// degree is exactly n, ascending lexicographic. Row j fixes coordinate
// piv[j] for all deeper rows, so the interval 0 <= v[piv_j] <= n/deg[piv_j]
// prunes exactly.
inline std::vector<IntVec> lattice_points_of_degree(const IntMat& basis,
                                                    const std::vector<std::int64_t>& deg,
                                                    std::int64_t n) {
  const int r = static_cast<int>(deg.size());
  const int k = static_cast<int>(basis.size());
  std::vector<int> piv(k);
  for (int j = 0; j < k; ++j) {
    int c = 0;
    while (c < r && basis[j][c] == 0) ++c;
    internal_check(c < r, "zero row in lattice basis");
    piv[j] = c;
  }
  std::vector<IntVec> out;
  IntVec v(r, 0);
  std::function<void(int)> rec = [&](int j) {
    if (j == k) {
      std::int64_t total = 0;
      for (int i = 0; i < r; ++i) {
        if (v[i] < 0) return;
        total = checked::add(total, checked::mul(v[i], deg[i]));
      }
      if (total == n) out.push_back(v);
      return;
    }
    const IntVec& row = basis[j];
    const std::int64_t pv = row[piv[j]];
    const std::int64_t cur = v[piv[j]];
    const std::int64_t cap = n / deg[piv[j]];
    const std::int64_t lo = div_ceil(-cur, pv);
    const std::int64_t hi = div_floor(cap - cur, pv);
    for (std::int64_t c = lo; c <= hi; ++c) {
      for (int i = 0; i < r; ++i) v[i] = checked::add(v[i], checked::mul(c, row[i]));
      rec(j + 1);
      for (int i = 0; i < r; ++i) v[i] -= c * row[i];
    }
  };
  if (k > 0)
    rec(0);
  else if (n == 0)
    out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// A class function of S extends the fusion system exactly when it is constant
// on fused element classes.
inline bool is_fusion_preserving(const FusionSystem& f, const ClassFunction& chi) {
  input_check(chi.group().parent().get() == f.ambient().get() &&
                  chi.group().elems() == f.underlying_group().elems(),
              "class function is not defined on the fusion system's underlying group");
  for (const auto& cls : f.element_classes()) {
    const Cyclotomic& v0 = chi.value_at_element(cls[0]);
    for (std::size_t j = 1; j < cls.size(); ++j)
      if (!(chi.value_at_element(cls[j]) == v0)) return false;
  }
  return true;
}

// Canonical basis (HNF rows in irreducible-multiplicity coordinates) of the
// lattice of virtual characters that are constant on fused element classes.
inline IntMat stable_ring_basis(const FusionSystem& f, const CharacterTable& table) {
  detail::check_table_on_underlying(f, table);
  std::vector<std::pair<int, int>> pairs;
  for (const auto& cls : f.element_classes())
    for (std::size_t j = 1; j < cls.size(); ++j) pairs.emplace_back(cls[0], cls[j]);
  IntMat a = detail::value_difference_rows(table, pairs);
  IntMat k = lat::kernel_basis(a, table.num_irreducibles());
  internal_check(k.size() == f.element_classes().size(),
                 "stable lattice rank must equal the number of fused element classes");
  return k;
}

// All genuine characters of S of degree n whose class function is constant on
// fused classes, as multiplicity vectors in ascending lexicographic order.
// Enumeration walks the stable lattice itself, so candidates outside the
// lattice are never generated.
inline std::vector<IntVec> fusion_reps(const FusionSystem& f, const CharacterTable& table,
                                       std::int64_t n, std::int64_t degree_bound = -1) {
  detail::check_table_on_underlying(f, table);
  input_check(n >= 0, "degree must be nonnegative");
  if (degree_bound < 0) degree_bound = kDefaultDegreeFactor * f.underlying_group().order();
  if (n > degree_bound)
    throw RefusalError("degree " + std::to_string(n) + " exceeds the enumeration bound " +
                       std::to_string(degree_bound));
  IntMat basis = stable_ring_basis(f, table);
  return detail::lattice_points_of_degree(basis, table.degrees(), n);
}

// Families of subgroups the limit is taken over.
enum class OrbitFamily { centric, centric_radical };

inline const char* orbit_family_name(OrbitFamily fam) {
  return fam == OrbitFamily::centric ? "centric" : "centric-radical";
}

// Canonical representatives (least fully normalized member of each conjugacy
// class) of the chosen family. The limit construction below identifies an
// element with its component at S, so the family must contain S.
inline std::vector<int> orbit_family_representatives(const FusionSystem& f, OrbitFamily fam) {
  std::vector<int> member = (fam == OrbitFamily::centric) ? f.centric_indices()
                                                          : f.centric_radical_indices();
  std::set<int> member_set(member.begin(), member.end());
  input_check(member_set.count(f.whole_index()) != 0,
              std::string("the ") + orbit_family_name(fam) +
                  " family does not contain the whole group, so the limit has no component at S");
  std::vector<int> reps;
  for (const auto& cls : f.subgroup_classes()) {
    if (member_set.count(cls[0]) == 0) continue;
    int rep = -1;
    for (int idx : cls)
      if (f.is_fully_normalized(idx)) {
        rep = idx;
        break;
      }
    internal_check(rep >= 0, "subgroup class without a fully normalized member");
    reps.push_back(rep);
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

namespace detail {

// Element pairs (q, phi(q)) over every morphism between family
// representatives; a character of S restricts to a compatible tuple exactly
// when it takes equal values at each pair.
inline std::vector<std::pair<int, int>> family_fused_pairs(const FusionSystem& f,
                                                           const std::vector<int>& reps) {
  std::set<std::pair<int, int>> pairs;
  for (int qi : reps) {
    const Subgroup& q = f.subgroup(qi);
    for (int pi : reps) {
      for (const auto& m : f.hom_set(q, f.subgroup(pi)))
        for (int x : q.elems()) {
          int y = m.apply(x);
          if (x != y) pairs.emplace(std::min(x, y), std::max(x, y));
        }
    }
  }
  return std::vector<std::pair<int, int>>(pairs.begin(), pairs.end());
}

}  // namespace detail

// Canonical basis of the lattice of virtual characters of S compatible with
// every morphism between family representatives. For a saturated system this
// must coincide with stable_ring_basis; computing it independently is the
// point.
inline IntMat orbit_limit_ring(const FusionSystem& f, const CharacterTable& table,
                               OrbitFamily fam) {
  detail::check_table_on_underlying(f, table);
  std::vector<int> reps = orbit_family_representatives(f, fam);
  IntMat a = detail::value_difference_rows(table, detail::family_fused_pairs(f, reps));
  return lat::kernel_basis(a, table.num_irreducibles());
}

struct OrbitLimitElement {
  IntVec s_multiplicities;                       // component at S, in table coordinates
  std::vector<IntVec> component_multiplicities;  // per family representative, own table
};

struct OrbitLimitReps {
  std::vector<int> family;  // representative subgroup indices, ascending
  std::vector<OrbitLimitElement> elements;
};

// Degree-n elements of the limit over the family: genuine degree-n characters
// of S compatible with every family morphism, each carrying its component
// (restriction, decomposed in the member's own table) at every
// representative. Elements ascend lexicographically by their S component.
inline OrbitLimitReps orbit_limit_reps(const FusionSystem& f, const CharacterTable& table,
                                       std::int64_t n, OrbitFamily fam,
                                       std::int64_t degree_bound = -1) {
  detail::check_table_on_underlying(f, table);
  input_check(n >= 0, "degree must be nonnegative");
  if (degree_bound < 0) degree_bound = kDefaultDegreeFactor * f.underlying_group().order();
  if (n > degree_bound)
    throw RefusalError("degree " + std::to_string(n) + " exceeds the enumeration bound " +
                       std::to_string(degree_bound));

  OrbitLimitReps out;
  out.family = orbit_family_representatives(f, fam);
  IntMat a = detail::value_difference_rows(table, detail::family_fused_pairs(f, out.family));

  const int r = table.num_irreducibles();
  IntMat identity_basis(r, IntVec(r, 0));
  for (int i = 0; i < r; ++i) identity_basis[i][i] = 1;
  std::vector<IntVec> candidates = detail::lattice_points_of_degree(identity_basis,
                                                                    table.degrees(), n);

  std::vector<CharacterTable> member_tables;
  member_tables.reserve(out.family.size());
  for (int idx : out.family) member_tables.push_back(CharacterTable::compute(f.subgroup(idx)));

  for (const auto& v : candidates) {
    bool compatible = true;
    for (const auto& row : a) {
      std::int64_t dot = 0;
      for (int i = 0; i < r; ++i) dot = checked::add(dot, checked::mul(row[i], v[i]));
      if (dot != 0) {
        compatible = false;
        break;
      }
    }
    if (!compatible) continue;
    OrbitLimitElement el;
    el.s_multiplicities = v;
    ClassFunction x = table.combination(v);
    for (const auto& mt : member_tables) {
      ClassFunction res = restrict_to(x, mt.classes());
      DecomposeResult dec = mt.decompose(res);
      internal_check(dec.is_character, "limit component must decompose as a genuine character");
      IntVec mult;
      mult.reserve(dec.multiplicities.size());
      for (const auto& q : dec.multiplicities) mult.push_back(q.as_integer());
      el.component_multiplicities.push_back(std::move(mult));
    }
    out.elements.push_back(std::move(el));
  }
  return out;
}

}  // namespace fuselab
