#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "character.hpp"
#include "errors.hpp"
#include "fusion.hpp"
#include "group.hpp"
#include "lattice.hpp"
#include "stable.hpp"

// (S,S)-bisets with free right action: transitive types (P, phi) standing for
// S x_{(P,phi)} S, explicit realization, restriction along a twisted left
// action computed by two independent routes, left stability, a search for a
// minimal characteristic element, and the induced action on characters.

namespace fuselab {

inline constexpr std::int64_t kDefaultRealizeBound = 100000;
inline constexpr int kDefaultKernelRankBound = 12;
inline constexpr int kMaxSweepLevels = 64;
inline constexpr double kSweepBudget = 3.0e7;  // box points per sweep level

// --- transitive type --------------------------------------------------------

// The (A,B)-biset A x B / (ar, b) ~ (a, theta(r) b), recorded by its left
// stabilizer R <= A and twist theta : R -> B. Both actions are free because
// theta is injective.
struct BisetType {
  Subgroup left;   // R
  GroupMap twist;  // theta, stored with target = B

  std::pair<std::vector<int>, std::vector<int>> key() const {
    return {left.elems(), twist.images()};
  }
  friend bool operator<(const BisetType& a, const BisetType& b) { return a.key() < b.key(); }
  friend bool operator==(const BisetType& a, const BisetType& b) { return a.key() == b.key(); }
  friend bool operator!=(const BisetType& a, const BisetType& b) { return !(a == b); }
};

// A formal integer combination of transitive types (all keys canonical, no
// zero multiplicities).
struct FormalBiset {
  std::map<BisetType, std::int64_t> terms;

  void add(const BisetType& t, std::int64_t m) {
    if (m == 0) return;
    auto [it, inserted] = terms.emplace(t, m);
    if (!inserted) {
      it->second = checked::add(it->second, m);
      if (it->second == 0) terms.erase(it);
    }
  }
  bool empty() const { return terms.empty(); }
  friend bool operator==(const FormalBiset& a, const FormalBiset& b) { return a.terms == b.terms; }
  friend bool operator!=(const FormalBiset& a, const FormalBiset& b) { return !(a == b); }
};

// number of points of the realized biset: sum of |S|^2 / |P| over terms
inline std::int64_t biset_size(const Subgroup& s, const FormalBiset& omega) {
  std::int64_t total = 0;
  for (const auto& [t, m] : omega.terms)
    total = checked::add(total,
                         checked::mul(m, checked::mul(s.order(), s.order()) / t.left.order()));
  return total;
}

// |Omega| / |S|: sum of indexes [S : P] over terms
inline std::int64_t biset_ratio(const Subgroup& s, const FormalBiset& omega) {
  std::int64_t total = 0;
  for (const auto& [t, m] : omega.terms)
    total = checked::add(total, checked::mul(m, s.order() / t.left.order()));
  return total;
}

namespace detail {

// Canonical form of the type (R, theta) of a transitive (A,B)-biset:
// minimize (elements of aRa^{-1}, images of c_b . theta . c_{a^{-1}}) over
// a in A, b in B.
inline BisetType canonical_biset_type(const Subgroup& a_grp, const Subgroup& b_grp,
                                      const Subgroup& r, const GroupMap& theta) {
  const Group& amb = r.group();
  std::optional<std::pair<std::vector<int>, std::vector<int>>> best;
  for (int a : a_grp.elems()) {
    std::vector<int> relems = detail::conjugate_indices(amb, r.elems(), a);
    int ai = amb.inv(a);
    for (int b : b_grp.elems()) {
      int bi = amb.inv(b);
      std::vector<int> images;
      images.reserve(relems.size());
      for (int xc : relems) {
        int x = amb.mul(amb.mul(ai, xc), a);
        int y = theta.apply(x);
        images.push_back(amb.mul(amb.mul(b, y), bi));
      }
      std::pair<std::vector<int>, std::vector<int>> cand{relems, std::move(images)};
      if (!best || cand < *best) best = std::move(cand);
    }
  }
  Subgroup rbest(r.parent(), best->first);
  return BisetType{rbest, GroupMap::from_element_table(rbest, b_grp, best->second, true)};
}

}  // namespace detail

// All canonical (S,S)-types (P, phi) with P in the subgroup universe and
// phi : P -> S a morphism of the fusion system.
inline std::vector<BisetType> biset_types(const FusionSystem& f) {
  const Subgroup& s = f.underlying_group();
  std::set<BisetType> acc;
  for (int i = 0; i < f.num_subgroups(); ++i)
    for (const GroupMap& phi : f.hom_set(f.subgroup(i), s))
      acc.insert(detail::canonical_biset_type(s, s, f.subgroup(i), phi));
  return std::vector<BisetType>(acc.begin(), acc.end());
}

// --- explicit realization ---------------------------------------------------

// The points of S x_{(P,phi)} S: equivalence classes of pairs under
// (u p^{-1}, phi(p) v) ~ (u, v), each stored as its least representative.
// Both actions are computed on the fly.
class ExplicitBiset {
 public:
  ExplicitBiset(Subgroup s, BisetType type, std::int64_t bound = kDefaultRealizeBound)
      : s_(std::move(s)), type_(std::move(type)) {
    input_check(s_.contains_subgroup(type_.left), "biset type: left subgroup not inside S");
    input_check(s_.contains_subgroup(type_.twist.image_subgroup()),
                "biset type: twist does not map into S");
    std::int64_t expected =
        checked::mul(s_.order(), s_.order()) / static_cast<std::int64_t>(type_.left.order());
    if (expected > bound)
      throw RefusalError("biset realization refused: " + std::to_string(expected) +
                         " points exceed the bound " + std::to_string(bound));
    std::set<std::pair<int, int>> reps;
    for (int u : s_.elems())
      for (int v : s_.elems()) reps.insert(canonical_pair(u, v));
    points_.assign(reps.begin(), reps.end());
    internal_check(static_cast<std::int64_t>(points_.size()) == expected,
                   "biset point count mismatch");
  }

  int size() const { return static_cast<int>(points_.size()); }
  const std::pair<int, int>& point(int i) const { return points_[i]; }
  const Subgroup& group() const { return s_; }
  const BisetType& type() const { return type_; }

  int left_mul(int s_elem, int i) const {
    const Group& amb = *s_.parent();
    return index_of(canonical_pair(amb.mul(s_elem, points_[i].first), points_[i].second));
  }

  int right_mul(int i, int s_elem) const {
    const Group& amb = *s_.parent();
    return index_of(canonical_pair(points_[i].first, amb.mul(points_[i].second, s_elem)));
  }

 private:
  std::pair<int, int> canonical_pair(int u, int v) const {
    const Group& amb = *s_.parent();
    std::pair<int, int> best{amb.order(), amb.order()};
    for (int p : type_.left.elems()) {
      std::pair<int, int> cand{amb.mul(u, amb.inv(p)), amb.mul(type_.twist.apply(p), v)};
      best = std::min(best, cand);
    }
    return best;
  }

  int index_of(const std::pair<int, int>& pr) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), pr);
    internal_check(it != points_.end() && *it == pr, "point missing from biset");
    return static_cast<int>(it - points_.begin());
  }

  Subgroup s_;
  BisetType type_;
  std::vector<std::pair<int, int>> points_;
};

// --- restriction, two routes ------------------------------------------------

// Orbit decomposition of the (Q,S)-biset obtained from an explicit (S,S)-biset
// by letting Q act on the left through lambda : Q -> S. Orbits are enumerated
// directly as Q.x0.S (the two actions commute); the type of an orbit is read
// off from its least point.
inline std::map<BisetType, std::int64_t> orbit_types(const ExplicitBiset& x, const Subgroup& q,
                                                     const GroupMap& lambda) {
  input_check(lambda.source().elems() == q.elems() &&
                  x.group().contains_subgroup(lambda.image_subgroup()),
              "left twist must be defined on Q with values in S");
  const Subgroup& s = x.group();
  std::vector<char> seen(x.size(), 0);
  std::map<BisetType, std::int64_t> out;
  int covered = 0;
  for (int i = 0; i < x.size(); ++i) {
    if (seen[i]) continue;
    // x0 . S with the right-acting element recorded; freeness is verified
    std::map<int, int> right_of;
    for (int b : s.elems()) {
      bool fresh = right_of.emplace(x.right_mul(i, b), b).second;
      internal_check(fresh, "right action is not free");
    }
    std::vector<int> relems, images;
    int orbit_size = 0;
    for (int a : q.elems()) {
      int la = lambda.apply(a);
      int j = x.left_mul(la, i);
      auto it = right_of.find(j);
      if (it != right_of.end()) {
        relems.push_back(a);
        images.push_back(it->second);
      }
      for (const auto& [pt, b] : right_of) {
        (void)b;
        int moved = x.left_mul(la, pt);
        if (!seen[moved]) {
          seen[moved] = 1;
          ++orbit_size;
        }
      }
    }
    internal_check(orbit_size * static_cast<int>(relems.size()) == q.order() * s.order(),
                   "orbit size must be |Q||S|/|R|");
    Subgroup r(q.parent(), relems);
    GroupMap theta = GroupMap::from_element_table(r, s, images, true);
    out[detail::canonical_biset_type(q, s, r, theta)] += 1;
    covered += orbit_size;
  }
  internal_check(covered == x.size(), "orbits must cover the biset");
  return out;
}

// Independent route: the restriction along (Q, lambda) of the single type
// S x_{(P,phi)} S decomposes with one orbit per double coset lambda(Q) u P;
// the orbit at the least coset representative u has left stabilizer
// R = {a in Q : u^{-1} lambda(a) u in P} and twist a -> phi(u^{-1} lambda(a) u).
// No explicit point set is built.
inline std::map<BisetType, std::int64_t> restrict_type_by_double_cosets(const Subgroup& s,
                                                                        const BisetType& type,
                                                                        const Subgroup& q,
                                                                        const GroupMap& lambda) {
  const Group& amb = *s.parent();
  std::map<BisetType, std::int64_t> out;
  std::vector<char> seen(amb.order(), 0);
  for (int u : s.elems()) {
    if (seen[u]) continue;
    for (int a : q.elems()) {
      int la = amb.mul(lambda.apply(a), u);
      for (int p : type.left.elems()) seen[amb.mul(la, p)] = 1;
    }
    int ui = amb.inv(u);
    std::vector<int> relems, images;
    for (int a : q.elems()) {
      int c = amb.mul(amb.mul(ui, lambda.apply(a)), u);
      if (type.left.contains(c)) {
        relems.push_back(a);
        images.push_back(type.twist.apply(c));
      }
    }
    Subgroup r(q.parent(), relems);
    GroupMap theta = GroupMap::from_element_table(r, s, images, true);
    out[detail::canonical_biset_type(q, s, r, theta)] += 1;
  }
  return out;
}

// restriction of a formal (S,S)-biset along (Q, lambda), via realization and
// orbit decomposition
inline FormalBiset restrict_biset(const Subgroup& s, const FormalBiset& omega, const Subgroup& q,
                                  const GroupMap& lambda,
                                  std::int64_t realize_bound = kDefaultRealizeBound) {
  FormalBiset acc;
  for (const auto& [t, m] : omega.terms) {
    ExplicitBiset x(s, t, realize_bound);
    for (const auto& [rt, c] : orbit_types(x, q, lambda)) acc.add(rt, checked::mul(m, c));
  }
  return acc;
}

// --- stability and characteristic elements ----------------------------------

struct StabilityReport {
  bool stable = true;
  // first failing pair, when not stable
  std::optional<int> subgroup_index;
  std::optional<GroupMap> morphism;
};

// Left stability: for every P <= S and every morphism phi : P -> S of the
// fusion system, restriction along (P, phi) equals restriction along the
// inclusion, as formal (P,S)-bisets.
inline StabilityReport is_stable(const FusionSystem& f, const FormalBiset& omega,
                                 std::int64_t realize_bound = kDefaultRealizeBound) {
  const Subgroup& s = f.underlying_group();
  std::vector<std::pair<ExplicitBiset, std::int64_t>> realized;
  for (const auto& [t, m] : omega.terms) realized.emplace_back(ExplicitBiset(s, t, realize_bound), m);

  auto restriction = [&](const Subgroup& q, const GroupMap& lambda) {
    FormalBiset acc;
    for (const auto& [x, m] : realized)
      for (const auto& [rt, c] : orbit_types(x, q, lambda)) acc.add(rt, checked::mul(m, c));
    return acc;
  };

  for (int pi = 0; pi < f.num_subgroups(); ++pi) {
    const Subgroup& p = f.subgroup(pi);
    GroupMap incl = GroupMap::inclusion(p, s);
    FormalBiset base = restriction(p, incl);
    for (const GroupMap& phi : f.hom_set(p, s)) {
      if (phi.images() == incl.images()) continue;
      if (restriction(p, phi) != base) {
        StabilityReport rep;
        rep.stable = false;
        rep.subgroup_index = pi;
        rep.morphism = phi;
        return rep;
      }
    }
  }
  return StabilityReport{};
}

struct CharacteristicCheck {
  bool genuine = false;    // all multiplicities positive
  bool stable = false;     // left stability
  bool congruent = false;  // |Omega|/|S| = 1 mod p
  std::int64_t ratio = 0;
  StabilityReport stability;
};

inline CharacteristicCheck check_characteristic(const FusionSystem& f, const FormalBiset& omega,
                                                std::int64_t realize_bound = kDefaultRealizeBound) {
  CharacteristicCheck out;
  out.genuine = !omega.empty();
  for (const auto& [t, m] : omega.terms) {
    if (m <= 0) out.genuine = false;
    input_check(f.contains_morphism(t.twist),
                "biset twist is not a morphism of the fusion system");
  }
  out.ratio = biset_ratio(f.underlying_group(), omega);
  out.congruent = out.ratio > 0 && out.ratio % f.prime() == 1;
  out.stability = is_stable(f, omega, realize_bound);
  out.stable = out.stability.stable;
  return out;
}

struct CharacteristicElement {
  std::vector<BisetType> types;  // solver variable order: all canonical types
  IntVec multiplicities;         // dense over types, >= 0
  FormalBiset omega;
  std::int64_t ratio = 0;
  std::int64_t size = 0;
  int kernel_rank = 0;
  int levels_swept = 0;
  std::size_t candidates_found = 0;
  bool from_ambient_seed = false;  // the winner came from the ambient decomposition
  bool sweep_budget_hit = false;
};

namespace detail {

// G as an (S,S)-biset: one transitive type per double coset S g S, with left
// stabilizer S meet gSg^{-1} and twist conjugation by g^{-1}.
inline std::map<BisetType, std::int64_t> ambient_biset_types(const FusionSystem& f) {
  const Group& amb = *f.ambient();
  const Subgroup& s = f.underlying_group();
  std::map<BisetType, std::int64_t> out;
  std::vector<char> seen(amb.order(), 0);
  for (int g = 0; g < amb.order(); ++g) {
    if (seen[g]) continue;
    for (int a : s.elems()) {
      int ag = amb.mul(a, g);
      for (int b : s.elems()) seen[amb.mul(ag, b)] = 1;
    }
    int gi = amb.inv(g);
    std::vector<int> relems, images;
    for (int t : s.elems()) {
      int c = amb.mul(amb.mul(gi, t), g);
      if (s.contains(c)) {
        relems.push_back(t);
        images.push_back(c);
      }
    }
    Subgroup r(f.ambient(), relems);
    GroupMap theta = GroupMap::from_element_table(r, s, images, true);
    out[canonical_biset_type(s, s, r, theta)] += 1;
  }
  return out;
}

inline std::int64_t inverse_mod(std::int64_t a, int p) {
  a %= p;
  if (a < 0) a += p;
  for (std::int64_t t = 1; t < p; ++t)
    if (t * a % p == 1) return t;
  throw InternalError("no modular inverse");
}

}  // namespace detail

// Search for a genuine stable element with |Omega|/|S| = 1 mod p, minimal by
// (point count, then lexicographic multiplicity vector) among the candidates
// found. Candidates come from a box sweep of the stability kernel (complete
// levels, one extra level after the first hit) and, for systems realized from
// an ambient group, from the scaled ambient biset. Exhaustion is reported,
// never silent.
inline CharacteristicElement characteristic_biset(const FusionSystem& f,
                                                  bool use_ambient_seed = true,
                                                  std::int64_t realize_bound = kDefaultRealizeBound,
                                                  int kernel_rank_bound = kDefaultKernelRankBound) {
  input_check(f.is_saturated(), "a characteristic element requires a saturated fusion system");
  const Subgroup& s = f.underlying_group();
  CharacteristicElement out;
  out.types = biset_types(f);
  const int nvars = static_cast<int>(out.types.size());
  std::map<BisetType, int> type_index;
  for (int v = 0; v < nvars; ++v) type_index.emplace(out.types[v], v);

  std::vector<ExplicitBiset> realized;
  realized.reserve(out.types.size());
  for (const auto& t : out.types) realized.emplace_back(s, t, realize_bound);

  // stability constraints: for each (P, phi), each restricted (P,S)-type gives
  // one row of differences against restriction along the inclusion
  std::set<IntVec> rows;
  for (int pi = 0; pi < f.num_subgroups(); ++pi) {
    const Subgroup& p = f.subgroup(pi);
    GroupMap incl = GroupMap::inclusion(p, s);
    std::vector<std::map<BisetType, std::int64_t>> base(nvars);
    for (int v = 0; v < nvars; ++v) base[v] = orbit_types(realized[v], p, incl);
    for (const GroupMap& phi : f.hom_set(p, s)) {
      if (phi.images() == incl.images()) continue;
      std::vector<std::map<BisetType, std::int64_t>> cand(nvars);
      std::set<BisetType> keys;
      for (int v = 0; v < nvars; ++v) {
        cand[v] = orbit_types(realized[v], p, phi);
        for (const auto& [k, c] : cand[v]) keys.insert(k);
        for (const auto& [k, c] : base[v]) keys.insert(k);
      }
      for (const BisetType& k : keys) {
        IntVec row(nvars, 0);
        bool nonzero = false;
        for (int v = 0; v < nvars; ++v) {
          auto cv = cand[v].find(k);
          auto bv = base[v].find(k);
          std::int64_t d = (cv != cand[v].end() ? cv->second : 0) -
                           (bv != base[v].end() ? bv->second : 0);
          row[v] = d;
          if (d != 0) nonzero = true;
        }
        if (nonzero) rows.insert(std::move(row));
      }
    }
  }

  IntMat kernel = lat::kernel_basis(IntMat(rows.begin(), rows.end()), nvars);
  out.kernel_rank = static_cast<int>(kernel.size());

  std::vector<std::int64_t> index_of_var(nvars), size_of_var(nvars);
  for (int v = 0; v < nvars; ++v) {
    index_of_var[v] = s.order() / out.types[v].left.order();
    size_of_var[v] = checked::mul(s.order(), static_cast<std::int64_t>(s.order())) /
                     out.types[v].left.order();
  }

  std::vector<IntVec> candidates;
  const int k = out.kernel_rank;
  if (k > 0 && k <= kernel_rank_bound) {
    int found_level = -1;
    for (int level = 1; level <= kMaxSweepLevels; ++level) {
      if (std::pow(2.0 * level + 1.0, k) > kSweepBudget) {
        out.sweep_budget_hit = true;
        break;
      }
      IntVec c(k, -level);
      while (true) {
        bool on_shell = false;
        for (int j = 0; j < k; ++j)
          if (c[j] == level || c[j] == -level) {
            on_shell = true;
            break;
          }
        if (on_shell) {
          IntVec x(nvars, 0);
          bool nonneg = true, nonzero = false;
          for (int j = 0; j < k; ++j) {
            if (c[j] == 0) continue;
            for (int v = 0; v < nvars; ++v)
              x[v] = checked::add(x[v], checked::mul(c[j], kernel[j][v]));
          }
          for (int v = 0; v < nvars; ++v) {
            if (x[v] < 0) nonneg = false;
            if (x[v] != 0) nonzero = true;
          }
          if (nonneg && nonzero) {
            std::int64_t ratio = 0;
            for (int v = 0; v < nvars; ++v)
              ratio = checked::add(ratio, checked::mul(x[v], index_of_var[v]));
            if (ratio % f.prime() == 1) candidates.push_back(std::move(x));
          }
        }
        int j = 0;
        while (j < k && c[j] == level) c[j++] = -level;
        if (j == k) break;
        ++c[j];
      }
      out.levels_swept = level;
      if (found_level < 0 && !candidates.empty()) found_level = level;
      if (found_level >= 0 && level > found_level) break;
    }
  }

  std::optional<IntVec> seed;
  if (use_ambient_seed && f.realized_from_ambient()) {
    std::map<BisetType, std::int64_t> gdec = detail::ambient_biset_types(f);
    std::int64_t index = f.ambient()->order() / s.order();
    std::int64_t scale = detail::inverse_mod(index, f.prime());
    IntVec x(nvars, 0);
    for (const auto& [t, m] : gdec) {
      auto it = type_index.find(t);
      internal_check(it != type_index.end(),
                     "ambient orbit type is not a type of the fusion system");
      x[it->second] = checked::add(x[it->second], checked::mul(m, scale));
    }
    // the ambient biset satisfies every stability constraint
    for (const auto& row : rows) {
      std::int64_t dot = 0;
      for (int v = 0; v < nvars; ++v) dot = checked::add(dot, checked::mul(row[v], x[v]));
      internal_check(dot == 0, "ambient biset violates a stability constraint");
    }
    seed = x;
    candidates.push_back(std::move(x));
  }

  out.candidates_found = candidates.size();
  if (candidates.empty()) {
    std::string why = k == 0 ? "the stability kernel is trivial"
                     : k > kernel_rank_bound
                         ? "stability kernel rank " + std::to_string(k) +
                               " exceeds the sweep bound " + std::to_string(kernel_rank_bound)
                         : out.sweep_budget_hit
                             ? "the box sweep exhausted its budget after level " +
                                   std::to_string(out.levels_swept)
                             : "the box sweep found nothing through level " +
                                   std::to_string(out.levels_swept);
    throw RefusalError("no characteristic element found: " + why +
                       (use_ambient_seed ? "" : " (ambient seeding disabled)"));
  }

  auto size_of = [&](const IntVec& x) {
    std::int64_t total = 0;
    for (int v = 0; v < nvars; ++v) total = checked::add(total, checked::mul(x[v], size_of_var[v]));
    return total;
  };
  const IntVec* best = &candidates[0];
  std::int64_t best_size = size_of(candidates[0]);
  for (const auto& x : candidates) {
    std::int64_t sz = size_of(x);
    if (sz < best_size || (sz == best_size && x < *best)) {
      best = &x;
      best_size = sz;
    }
  }
  out.multiplicities = *best;
  out.size = best_size;
  out.from_ambient_seed = seed && *best == *seed;
  for (int v = 0; v < nvars; ++v)
    if (out.multiplicities[v] != 0) out.omega.add(out.types[v], out.multiplicities[v]);
  out.ratio = biset_ratio(s, out.omega);
  internal_check(out.ratio % f.prime() == 1, "characteristic element congruence");
  return out;
}

// --- action on characters ---------------------------------------------------

// The induced endomorphism of class functions of S: chi goes to the sum over
// terms (P, phi) of n . Ind_P^S (chi o phi). No property of omega is checked.
inline ClassFunction omega_action(const FusionSystem& f, const FormalBiset& omega,
                                  const ClassFunction& chi) {
  input_check(chi.group().parent().get() == f.ambient().get() &&
                  chi.group().elems() == f.underlying_group().elems(),
              "class function is not defined on the fusion system's underlying group");
  const ClassesPtr& scl = chi.classes();
  ClassFunction acc(scl,
                    std::vector<Cyclotomic>(scl->classes.size(), Cyclotomic::zero()));
  for (const auto& [t, m] : omega.terms) {
    ClassesPtr pcl = make_classes(t.left);
    ClassFunction ind = induce(pullback(chi, t.twist, pcl), scl);
    acc = acc + ind.scaled(Rational(m));
  }
  return acc;
}

struct InduceResult {
  IntVec multiplicities;  // of the induced character, in table coordinates
  std::int64_t ratio = 0;
  ClassFunction character;
};

// Induction along a characteristic element: vetts omega (genuine, morphisms of
// the system, stable, ratio 1 mod p) and rho (genuine unless accept_virtual),
// applies omega, and decomposes the result, asserting that it is again a
// character, fusion preserving, of degree ratio times deg(rho), and dominates
// rho when rho is genuine.
inline InduceResult induce_fusion(const FusionSystem& f, const CharacterTable& table,
                                  const IntVec& rho, const FormalBiset& omega,
                                  bool accept_virtual = false,
                                  std::int64_t realize_bound = kDefaultRealizeBound) {
  detail::check_table_on_underlying(f, table);
  input_check(static_cast<int>(rho.size()) == table.num_irreducibles(),
              "multiplicity vector length mismatch");
  bool genuine_rho = true;
  for (std::int64_t m : rho)
    if (m < 0) genuine_rho = false;
  input_check(genuine_rho || accept_virtual,
              "virtual input refused; pass accept_virtual to allow it");
  CharacteristicCheck chk = check_characteristic(f, omega, realize_bound);
  input_check(chk.genuine && chk.stable && chk.congruent,
              "the supplied element is not characteristic for the fusion system");

  ClassFunction chi = omega_action(f, omega, table.combination(rho));
  DecomposeResult dec = table.decompose(chi);
  internal_check(dec.is_virtual_character, "induced class function must be a virtual character");
  InduceResult out;
  out.ratio = chk.ratio;
  out.character = chi;
  out.multiplicities.reserve(dec.multiplicities.size());
  for (const auto& q : dec.multiplicities) out.multiplicities.push_back(q.as_integer());
  if (genuine_rho) {
    internal_check(dec.is_character, "induction of a genuine character must be genuine");
    for (std::size_t i = 0; i < rho.size(); ++i)
      internal_check(out.multiplicities[i] >= rho[i],
                     "induction must dominate the original character");
  }
  internal_check(is_fusion_preserving(f, chi), "induced character must be fusion preserving");
  std::int64_t expected_degree = 0, got_degree = 0;
  const auto deg = table.degrees();
  for (std::size_t i = 0; i < rho.size(); ++i) {
    expected_degree = checked::add(expected_degree, checked::mul(rho[i], deg[i]));
    got_degree = checked::add(got_degree, checked::mul(out.multiplicities[i], deg[i]));
  }
  internal_check(got_degree == checked::mul(chk.ratio, expected_degree),
                 "induced degree must be the ratio times the original degree");
  return out;
}

}  // namespace fuselab
