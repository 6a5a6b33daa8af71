#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "perm.hpp"

namespace fuselab {

constexpr std::int64_t kDefaultClosureBound = 1000000;
constexpr int kDefaultSubgroupOrderBound = 512;

// Ambient finite permutation group. Immutable after construction; elements are
// kept sorted by image sequence, and the rest of the library addresses them by
// index into that list. Multiplication/inverse/order tables are built lazily
// behind a mutex (write-once; concurrent readers see either absence or the
// complete table).
class Group {
 public:
  Group(int degree, std::vector<Permutation> generators, std::string name = "",
        std::int64_t closure_bound = kDefaultClosureBound)
      : degree_(degree), name_(std::move(name)) {
    input_check(degree >= 1, "group degree must be at least 1");
    for (const auto& g : generators)
      input_check(g.degree() == degree, "generator degree does not match group degree");
    std::set<Permutation> elems;
    std::vector<Permutation> work;
    Permutation id(degree);
    elems.insert(id);
    work.push_back(id);
    while (!work.empty()) {
      Permutation cur = work.back();
      work.pop_back();
      for (const auto& g : generators) {
        Permutation next = cur * g;
        if (elems.insert(next).second) {
          if (static_cast<std::int64_t>(elems.size()) > closure_bound)
            throw RefusalError("group closure exceeds configured order bound " +
                               std::to_string(closure_bound));
          work.push_back(next);
        }
      }
    }
    elements_.assign(elems.begin(), elems.end());  // std::set iterates sorted
    generators_ = std::move(generators);
  }

  int degree() const { return degree_; }
  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(int i) const { return elements_[i]; }
  const std::vector<Permutation>& generators() const { return generators_; }

  int index_of(const Permutation& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    internal_check(it != elements_.end() && *it == p, "permutation not in group");
    return static_cast<int>(it - elements_.begin());
  }

  int identity_index() const {
    return index_of(Permutation(degree_));  // cheap: log(n) lookup
  }

  int mul(int a, int b) const {
    ensure_tables();
    if (!mul_table_.empty()) return mul_table_[static_cast<std::size_t>(a) * order() + b];
    return index_of(elements_[a] * elements_[b]);
  }

  int inv(int a) const {
    ensure_tables();
    return inv_table_[a];
  }

  int conj(int g, int x) const {  // g x g^{-1}
    return mul(mul(g, x), inv(g));
  }

  int element_order(int a) const {
    ensure_tables();
    return order_table_[a];
  }

  // closure of a set of element indices inside this group
  std::vector<int> close(std::vector<int> seed) const {
    std::set<int> have;
    int e = identity_index();
    have.insert(e);
    std::vector<int> work{e};
    for (int s : seed)
      if (have.insert(s).second) work.push_back(s);
    while (!work.empty()) {
      int cur = work.back();
      work.pop_back();
      for (int s : seed) {
        int nx = mul(cur, s);
        if (have.insert(nx).second) work.push_back(nx);
      }
    }
    return std::vector<int>(have.begin(), have.end());
  }

 private:
  void ensure_tables() const {
    std::lock_guard<std::mutex> lock(table_mutex_);
    if (!inv_table_.empty()) return;
    const int n = order();
    std::vector<int> inv(n);
    std::vector<int> ord(n);
    if (n <= 4096) {
      std::vector<std::int32_t> table(static_cast<std::size_t>(n) * n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          table[static_cast<std::size_t>(a) * n + b] = index_of(elements_[a] * elements_[b]);
      mul_table_ = std::move(table);
    }
    for (int a = 0; a < n; ++a) inv[a] = index_of(elements_[a].inverse());
    for (int a = 0; a < n; ++a) ord[a] = elements_[a].order();
    inv_table_ = std::move(inv);
    order_table_ = std::move(ord);
  }

  int degree_;
  std::string name_;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;

  mutable std::mutex table_mutex_;
  mutable std::vector<std::int32_t> mul_table_;
  mutable std::vector<int> inv_table_;
  mutable std::vector<int> order_table_;
};

using GroupPtr = std::shared_ptr<const Group>;

namespace detail {

// smallest generating prefix found by scanning elements in canonical order
inline std::vector<int> greedy_generators(const Group& g, const std::vector<int>& elems) {
  std::vector<int> gens;
  std::vector<int> have{g.identity_index()};
  for (int x : elems) {
    if (std::binary_search(have.begin(), have.end(), x)) continue;
    gens.push_back(x);
    have = g.close(gens);
    if (have.size() == elems.size()) break;
  }
  return gens;
}

inline std::vector<int> conjugate_indices(const Group& g, const std::vector<int>& elems, int by) {
  std::vector<int> out;
  out.reserve(elems.size());
  for (int x : elems) out.push_back(g.conj(by, x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// A subgroup of an ambient Group, canonically represented by its sorted list
// of element indices. Value type; cheap to copy at the scales this library
// targets.
class Subgroup {
 public:
  Subgroup() = default;

  // elems must be closed under the ambient multiplication; verified.
  Subgroup(GroupPtr parent, std::vector<int> elems) : parent_(std::move(parent)) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    input_check(!elems.empty(), "subgroup needs at least the identity");
    elems_ = std::move(elems);
    auto closed = parent_->close(elems_);
    input_check(closed == elems_, "element set is not closed under multiplication");
    gens_ = detail::greedy_generators(*parent_, elems_);
  }

  static Subgroup whole(GroupPtr parent) {
    std::vector<int> all(parent->order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup(std::move(parent), std::move(all), from_sorted_closed{});
  }

  static Subgroup trivial(GroupPtr parent) {
    int e = parent->identity_index();
    return Subgroup(std::move(parent), {e}, from_sorted_closed{});
  }

  static Subgroup generated(GroupPtr parent, const std::vector<int>& gen_indices) {
    auto elems = parent->close(gen_indices);
    Subgroup s(std::move(parent), std::move(elems), from_sorted_closed{});
    return s;
  }

  const GroupPtr& parent() const { return parent_; }
  const Group& group() const { return *parent_; }
  const std::vector<int>& elems() const { return elems_; }
  const std::vector<int>& gens() const { return gens_; }
  int order() const { return static_cast<int>(elems_.size()); }

  bool contains(int idx) const { return std::binary_search(elems_.begin(), elems_.end(), idx); }

  bool contains_subgroup(const Subgroup& other) const {
    check_same_parent(other);
    return std::includes(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end());
  }

  // position of an ambient element index within this subgroup's element list
  int pos_of(int idx) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), idx);
    internal_check(it != elems_.end() && *it == idx, "element not in subgroup");
    return static_cast<int>(it - elems_.begin());
  }

  bool is_whole_group() const { return order() == parent_->order(); }

  bool is_p_group(int p) const {
    int n = order();
    while (n % p == 0) n /= p;
    return n == 1;
  }

  int exponent() const {
    std::int64_t e = 1;
    for (int x : elems_) e = std::lcm<std::int64_t>(e, parent_->element_order(x));
    return static_cast<int>(e);
  }

  Subgroup conjugated_by(int g) const {
    return Subgroup(parent_, detail::conjugate_indices(*parent_, elems_, g), from_sorted_closed{});
  }

  bool operator==(const Subgroup& o) const {
    check_same_parent(o);
    return elems_ == o.elems_;
  }
  bool operator!=(const Subgroup& o) const { return !(*this == o); }
  bool operator<(const Subgroup& o) const {
    check_same_parent(o);
    if (elems_.size() != o.elems_.size()) return elems_.size() < o.elems_.size();
    return elems_ < o.elems_;
  }

 private:
  struct from_sorted_closed {};
  Subgroup(GroupPtr parent, std::vector<int> elems, from_sorted_closed)
      : parent_(std::move(parent)), elems_(std::move(elems)) {
    gens_ = detail::greedy_generators(*parent_, elems_);
  }

  void check_same_parent(const Subgroup& o) const {
    internal_check(parent_.get() == o.parent_.get(),
                   "subgroups of different ambient groups compared");
  }

  GroupPtr parent_;
  std::vector<int> elems_;
  std::vector<int> gens_;

  friend class GroupMap;
};

// ---------------------------------------------------------------------------
// subgroup-level algorithms
// ---------------------------------------------------------------------------

// Conjugacy classes of P (conjugation by P itself). Classes are listed by
// their least element, so the identity's class is always first; within a
// class, elements are sorted.
inline std::vector<std::vector<int>> conjugacy_classes(const Subgroup& p) {
  const Group& g = p.group();
  std::set<int> remaining(p.elems().begin(), p.elems().end());
  std::vector<std::vector<int>> classes;
  while (!remaining.empty()) {
    int seed = *remaining.begin();
    std::set<int> orbit{seed};
    std::vector<int> work{seed};
    while (!work.empty()) {
      int cur = work.back();
      work.pop_back();
      for (int s : p.gens()) {
        int nx = g.conj(s, cur);
        if (orbit.insert(nx).second) work.push_back(nx);
      }
    }
    std::vector<int> cls(orbit.begin(), orbit.end());
    for (int x : cls) remaining.erase(x);
    classes.push_back(std::move(cls));
  }
  return classes;
}

inline Subgroup normalizer(const Subgroup& g, const Subgroup& p) {
  internal_check(g.parent().get() == p.parent().get(), "normalizer across ambient groups");
  internal_check(g.contains_subgroup(p), "normalizer: P not inside G");
  const Group& amb = g.group();
  std::vector<int> result;
  for (int x : g.elems())
    if (detail::conjugate_indices(amb, p.elems(), x) == p.elems()) result.push_back(x);
  return Subgroup(g.parent(), std::move(result));
}

inline Subgroup centralizer(const Subgroup& g, const Subgroup& p) {
  internal_check(g.parent().get() == p.parent().get(), "centralizer across ambient groups");
  const Group& amb = g.group();
  std::vector<int> result;
  for (int x : g.elems()) {
    bool commutes = true;
    for (int y : p.gens())
      if (amb.mul(x, y) != amb.mul(y, x)) {
        commutes = false;
        break;
      }
    if (commutes) result.push_back(x);
  }
  return Subgroup(g.parent(), std::move(result));
}

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline bool is_p_power_order(int n, int p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

// Sylow p-subgroup of G. Grown from the trivial subgroup through normalizers
// (a proper p-subgroup always has a p-element outside itself in its
// normalizer), then made canonical by taking the lexicographically least
// conjugate. Returns the trivial subgroup when p does not divide |G|.
inline Subgroup sylow_subgroup(const Subgroup& g, int p) {
  input_check(is_prime(p), "p must be prime");
  const Group& amb = g.group();
  int pk = 1;
  {
    int n = g.order();
    while (n % p == 0) {
      n /= p;
      pk *= p;
    }
  }
  Subgroup cur = Subgroup::trivial(g.parent());
  while (cur.order() < pk) {
    Subgroup n = normalizer(g, cur);
    bool grown = false;
    for (int x : n.elems()) {
      if (cur.contains(x)) continue;
      if (!is_p_power_order(amb.element_order(x), p)) continue;
      std::vector<int> seed = cur.elems();
      seed.push_back(x);
      auto cand = amb.close(seed);
      if (is_p_power_order(static_cast<int>(cand.size()), p)) {
        cur = Subgroup(g.parent(), std::move(cand));
        grown = true;
        break;
      }
    }
    internal_check(grown, "Sylow growth step found no extension");
  }
  // canonical representative among the conjugates
  std::vector<int> best = cur.elems();
  for (int x : g.elems()) {
    auto cand = detail::conjugate_indices(amb, cur.elems(), x);
    if (cand < best) best = std::move(cand);
  }
  return Subgroup(g.parent(), std::move(best));
}

// Largest normal p-subgroup: the intersection of all conjugates of one Sylow
// p-subgroup.
inline Subgroup p_core(const Subgroup& g, int p) {
  const Group& amb = g.group();
  Subgroup s = sylow_subgroup(g, p);
  std::vector<int> core = s.elems();
  for (int x : g.elems()) {
    auto conj = detail::conjugate_indices(amb, s.elems(), x);
    std::vector<int> inter;
    std::set_intersection(core.begin(), core.end(), conj.begin(), conj.end(),
                          std::back_inserter(inter));
    core = std::move(inter);
    if (core.size() == 1) break;
  }
  return Subgroup(g.parent(), std::move(core));
}

// Every subgroup of S, built bottom-up: cyclic subgroups first, then joins of
// pairs until nothing new appears. Canonically ordered by (order, element
// list). Intended for p-groups; refuses beyond the order bound.
inline std::vector<Subgroup> all_subgroups(const Subgroup& s,
                                           int order_bound = kDefaultSubgroupOrderBound) {
  if (s.order() > order_bound)
    throw RefusalError("subgroup enumeration refused: |S| = " + std::to_string(s.order()) +
                       " exceeds bound " + std::to_string(order_bound));
  const Group& amb = s.group();
  std::set<std::vector<int>> subs;
  subs.insert({amb.identity_index()});
  for (int x : s.elems()) subs.insert(amb.close({x}));
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::vector<int>> cur(subs.begin(), subs.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        std::vector<int> seed = cur[i];
        seed.insert(seed.end(), cur[j].begin(), cur[j].end());
        auto join = amb.close(seed);
        if (static_cast<int>(join.size()) <= s.order() && subs.insert(join).second) changed = true;
      }
  }
  std::vector<Subgroup> out;
  out.reserve(subs.size());
  for (const auto& e : subs) out.emplace_back(s.parent(), e);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// GroupMap: an injective homomorphism between subgroups, stored as the full
// element table (source element position -> target ambient element index).
// ---------------------------------------------------------------------------

class GroupMap {
 public:
  GroupMap() = default;

  // images aligned with source.elems(); verified to be an injective
  // homomorphism into target unless the caller vouches for it.
  static GroupMap from_element_table(Subgroup source, Subgroup target, std::vector<int> images,
                                     bool verify = true) {
    GroupMap m;
    m.source_ = std::move(source);
    m.target_ = std::move(target);
    m.images_ = std::move(images);
    if (verify) m.verify();
    return m;
  }

  // generator_images: pairs (source ambient index, target ambient index).
  // The listed sources must generate the source subgroup.
  static GroupMap from_generator_images(const Subgroup& source, const Subgroup& target,
                                        const std::vector<std::pair<int, int>>& generator_images) {
    const Group& sa = source.group();
    const Group& ta = target.group();
    std::vector<int> gen_src, gen_img;
    for (auto [a, b] : generator_images) {
      input_check(source.contains(a), "map generator not in source subgroup");
      input_check(target.contains(b), "map generator image not in target subgroup");
      gen_src.push_back(a);
      gen_img.push_back(b);
    }
    input_check(sa.close(gen_src) == source.elems(),
                "listed generators do not generate the source subgroup");
    const int n = source.order();
    std::vector<int> images(n, -1);
    images[source.pos_of(sa.identity_index())] = ta.identity_index();
    std::vector<int> work{sa.identity_index()};
    while (!work.empty()) {
      int cur = work.back();
      work.pop_back();
      int img_cur = images[source.pos_of(cur)];
      for (std::size_t k = 0; k < gen_src.size(); ++k) {
        int nx = sa.mul(cur, gen_src[k]);
        int img_nx = ta.mul(img_cur, gen_img[k]);
        int& slot = images[source.pos_of(nx)];
        if (slot == -1) {
          slot = img_nx;
          work.push_back(nx);
        } else {
          input_check(slot == img_nx, "generator images do not define a homomorphism");
        }
      }
    }
    return from_element_table(source, target, std::move(images), true);
  }

  static GroupMap identity(const Subgroup& p) {
    std::vector<int> images = p.elems();
    return from_element_table(p, p, std::move(images), false);
  }

  static GroupMap inclusion(const Subgroup& p, const Subgroup& q) {
    internal_check(p.parent().get() == q.parent().get(), "inclusion across ambient groups");
    internal_check(q.contains_subgroup(p), "inclusion: P not inside Q");
    std::vector<int> images = p.elems();
    return from_element_table(p, q, std::move(images), false);
  }

  // x -> g x g^{-1}, landing in q (which must contain gPg^{-1})
  static GroupMap conjugation(const Subgroup& p, int g, const Subgroup& q) {
    const Group& amb = p.group();
    std::vector<int> images;
    images.reserve(p.order());
    for (int x : p.elems()) {
      int y = amb.conj(g, x);
      internal_check(q.contains(y), "conjugation image leaves the stated target");
      images.push_back(y);
    }
    return from_element_table(p, q, std::move(images), false);
  }

  const Subgroup& source() const { return source_; }
  const Subgroup& target() const { return target_; }
  const std::vector<int>& images() const { return images_; }

  int apply(int ambient_idx) const { return images_[source_.pos_of(ambient_idx)]; }

  Subgroup image_subgroup() const {
    std::vector<int> img = images_;
    return Subgroup(target_.parent(), std::move(img));
  }

  bool is_identity_map() const {
    return source_.parent().get() == target_.parent().get() && images_ == source_.elems();
  }

  // this after inner; inner's image must lie in this->source
  GroupMap after(const GroupMap& inner) const {
    internal_check(inner.target_.parent().get() == source_.parent().get(),
                   "composition across ambient groups");
    std::vector<int> images;
    images.reserve(inner.source_.order());
    for (int x : inner.source_.elems()) images.push_back(apply(inner.apply(x)));
    return from_element_table(inner.source_, target_, std::move(images), false);
  }

  GroupMap restrict_to(const Subgroup& r) const {
    internal_check(source_.contains_subgroup(r), "restriction to a non-subgroup");
    std::vector<int> images;
    images.reserve(r.order());
    for (int x : r.elems()) images.push_back(apply(x));
    return from_element_table(r, target_, std::move(images), false);
  }

  GroupMap corestricted() const {
    return from_element_table(source_, image_subgroup(), images_, false);
  }

  GroupMap widened(const Subgroup& bigger_target) const {
    internal_check(bigger_target.contains_subgroup(image_subgroup()),
                   "widened target does not contain the image");
    return from_element_table(source_, bigger_target, images_, false);
  }

  // inverse of an isomorphism onto the full target
  GroupMap inverse() const {
    internal_check(static_cast<int>(images_.size()) == target_.order() &&
                       image_subgroup() == target_,
                   "inverse of a map that is not onto its target");
    std::vector<int> inv(target_.order());
    for (int i = 0; i < source_.order(); ++i) inv[target_.pos_of(images_[i])] = source_.elems()[i];
    return from_element_table(target_, source_, std::move(inv), false);
  }

  bool operator==(const GroupMap& o) const {
    return source_.elems() == o.source_.elems() && target_.elems() == o.target_.elems() &&
           images_ == o.images_;
  }
  bool operator!=(const GroupMap& o) const { return !(*this == o); }
  bool operator<(const GroupMap& o) const {
    if (source_.elems() != o.source_.elems()) return source_.elems() < o.source_.elems();
    if (images_ != o.images_) return images_ < o.images_;
    return target_.elems() < o.target_.elems();
  }

 private:
  void verify() const {
    input_check(images_.size() == source_.elems().size(), "element table size mismatch");
    const Group& sa = source_.group();
    const Group& ta = target_.group();
    std::set<int> seen;
    for (int y : images_) {
      input_check(target_.contains(y), "map image leaves target subgroup");
      input_check(seen.insert(y).second, "map is not injective");
    }
    input_check(apply(sa.identity_index()) == ta.identity_index(), "map does not fix identity");
    for (int x : source_.elems())
      for (int g : source_.gens())
        input_check(apply(sa.mul(x, g)) == ta.mul(apply(x), apply(g)),
                    "element table is not multiplicative");
  }

  Subgroup source_;
  Subgroup target_;
  std::vector<int> images_;
};

// ---------------------------------------------------------------------------
// isomorphism search (order-profile pruned backtracking over generator images)
// ---------------------------------------------------------------------------

namespace detail {

// Try to extend generator images to a full injective homomorphism from the
// subgroup generated by gen_src. Returns the element table on success.
inline std::optional<std::vector<int>> extend_gen_images(const Subgroup& source,
                                                         const std::vector<int>& gen_src,
                                                         const std::vector<int>& gen_img,
                                                         const Subgroup& target) {
  const Group& sa = source.group();
  const Group& ta = target.group();
  const int n = source.order();
  std::vector<int> images(n, -1);
  images[source.pos_of(sa.identity_index())] = ta.identity_index();
  std::vector<int> work{sa.identity_index()};
  while (!work.empty()) {
    int cur = work.back();
    work.pop_back();
    int img_cur = images[source.pos_of(cur)];
    for (std::size_t k = 0; k < gen_src.size(); ++k) {
      int nx = sa.mul(cur, gen_src[k]);
      int img_nx = ta.mul(img_cur, gen_img[k]);
      if (!target.contains(img_nx)) return std::nullopt;
      int& slot = images[source.pos_of(nx)];
      if (slot == -1) {
        slot = img_nx;
        work.push_back(nx);
      } else if (slot != img_nx) {
        return std::nullopt;
      }
    }
  }
  // injectivity over the generated subgroup
  std::set<int> seen;
  for (int i = 0; i < n; ++i) {
    if (images[i] == -1) continue;
    if (!seen.insert(images[i]).second) return std::nullopt;
  }
  return images;
}

inline void isomorphism_search(const Subgroup& source, const Subgroup& target,
                               const std::vector<int>& gens, std::size_t depth,
                               std::vector<int>& chosen, std::vector<GroupMap>& out,
                               bool stop_at_first) {
  if (stop_at_first && !out.empty()) return;
  const Group& sa = source.group();
  const Group& ta = target.group();
  if (depth == gens.size()) {
    std::vector<int> full_src = gens;
    auto table = extend_gen_images(source, full_src, chosen, target);
    if (!table) return;
    for (int v : *table)
      internal_check(v != -1, "generator set failed to cover the source subgroup");
    out.push_back(GroupMap::from_element_table(source, target, std::move(*table), false));
    return;
  }
  int g = gens[depth];
  int want_order = sa.element_order(g);
  for (int cand : target.elems()) {
    if (ta.element_order(cand) != want_order) continue;
    chosen.push_back(cand);
    // prefix pruning: the partial assignment must already be consistent
    std::vector<int> prefix_src(gens.begin(), gens.begin() + depth + 1);
    Subgroup gen_sub = Subgroup::generated(source.parent(), prefix_src);
    if (extend_gen_images(gen_sub, prefix_src, chosen, target))
      isomorphism_search(source, target, gens, depth + 1, chosen, out, stop_at_first);
    chosen.pop_back();
    if (stop_at_first && !out.empty()) return;
  }
}

inline std::multiset<int> order_profile(const Subgroup& p) {
  std::multiset<int> prof;
  for (int x : p.elems()) prof.insert(p.group().element_order(x));
  return prof;
}

}  // namespace detail

// All automorphisms of P, canonically ordered. Backtracking over generator
// images, pruned by element order.
inline std::vector<GroupMap> automorphisms(const Subgroup& p,
                                           int order_bound = kDefaultSubgroupOrderBound) {
  if (p.order() > order_bound)
    throw RefusalError("automorphism search refused: |P| exceeds bound " +
                       std::to_string(order_bound));
  std::vector<GroupMap> out;
  std::vector<int> chosen;
  detail::isomorphism_search(p, p, p.gens(), 0, chosen, out, false);
  for (const auto& m : out)
    internal_check(m.image_subgroup() == p, "injective endomorphism failed to be onto");
  std::sort(out.begin(), out.end());
  internal_check(!out.empty(), "automorphism set cannot be empty");
  return out;
}

inline bool is_isomorphic(const Subgroup& p, const Subgroup& q,
                          int order_bound = kDefaultSubgroupOrderBound) {
  if (p.order() > order_bound || q.order() > order_bound)
    throw RefusalError("isomorphism test refused: order exceeds bound " +
                       std::to_string(order_bound));
  if (p.order() != q.order()) return false;
  if (detail::order_profile(p) != detail::order_profile(q)) return false;
  std::vector<GroupMap> found;
  std::vector<int> chosen;
  detail::isomorphism_search(p, q, p.gens(), 0, chosen, found, true);
  return !found.empty();
}

}  // namespace fuselab
