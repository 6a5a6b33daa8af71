#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "group.hpp"
#include "rational.hpp"

namespace fuselab {

namespace detail {
inline bool is_prime_power_or_one(int n) {
  if (n == 1) return true;
  int p = 0;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return true;  // prime
  while (n % p == 0) n /= p;
  return n == 1;
}
}  // namespace detail

// Conjugacy class data of a subgroup, shared by the class functions living on
// it. The identity's class is always class 0 (classes are listed by least
// element, and the identity is the least element of any permutation group).
struct ConjClasses {
  Subgroup group;
  std::vector<std::vector<int>> classes;
  std::map<int, int> class_of;  // ambient element index -> class position
  int cyclo_order;              // exponent of the group if a prime power, else 0

  const std::vector<int>& class_members(int c) const { return classes[c]; }
  int rep(int c) const { return classes[c][0]; }
  int num_classes() const { return static_cast<int>(classes.size()); }
};

using ClassesPtr = std::shared_ptr<const ConjClasses>;

inline ClassesPtr make_classes(const Subgroup& p) {
  auto data = std::make_shared<ConjClasses>();
  data->group = p;
  data->classes = conjugacy_classes(p);
  for (int c = 0; c < static_cast<int>(data->classes.size()); ++c)
    for (int x : data->classes[c]) data->class_of.emplace(x, c);
  int e = p.exponent();
  data->cyclo_order = detail::is_prime_power_or_one(e) ? e : 0;
  return data;
}

// A class function with exact cyclotomic values, indexed by conjugacy class.
class ClassFunction {
 public:
  ClassFunction() = default;

  ClassFunction(ClassesPtr classes, std::vector<Cyclotomic> values)
      : classes_(std::move(classes)), values_(std::move(values)) {
    internal_check(values_.size() == classes_->classes.size(),
                   "class function value count mismatch");
    if (classes_->cyclo_order > 0)
      for (auto& v : values_)
        if (classes_->cyclo_order % v.order() == 0) v = v.promoted(classes_->cyclo_order);
  }

  const ClassesPtr& classes() const { return classes_; }
  const Subgroup& group() const { return classes_->group; }
  const std::vector<Cyclotomic>& values() const { return values_; }

  const Cyclotomic& value_at_class(int c) const { return values_[c]; }

  const Cyclotomic& value_at_element(int ambient_idx) const {
    auto it = classes_->class_of.find(ambient_idx);
    internal_check(it != classes_->class_of.end(), "element outside the function's group");
    return values_[it->second];
  }

  Rational degree() const {
    internal_check(values_[0].is_rational(), "degree of a class function must be rational");
    return values_[0].as_rational();
  }

  ClassFunction operator+(const ClassFunction& o) const {
    check_same_group(o);
    std::vector<Cyclotomic> v = values_;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.values_[i];
    return ClassFunction(classes_, std::move(v));
  }

  ClassFunction operator-(const ClassFunction& o) const {
    check_same_group(o);
    std::vector<Cyclotomic> v = values_;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= o.values_[i];
    return ClassFunction(classes_, std::move(v));
  }

  ClassFunction scaled(const Rational& r) const {
    std::vector<Cyclotomic> v = values_;
    for (auto& x : v) x = x * r;
    return ClassFunction(classes_, std::move(v));
  }

  // pointwise product (tensor product of characters)
  ClassFunction pointwise(const ClassFunction& o) const {
    check_same_group(o);
    std::vector<Cyclotomic> v(values_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i] * o.values_[i];
    return ClassFunction(classes_, std::move(v));
  }

  bool operator==(const ClassFunction& o) const {
    check_same_group(o);
    for (std::size_t i = 0; i < values_.size(); ++i)
      if (values_[i] != o.values_[i]) return false;
    return true;
  }
  bool operator!=(const ClassFunction& o) const { return !(*this == o); }

 private:
  void check_same_group(const ClassFunction& o) const {
    input_check(classes_->group.parent().get() == o.classes_->group.parent().get() &&
                    classes_->group.elems() == o.classes_->group.elems(),
                "class functions on different groups");
  }

  ClassesPtr classes_;
  std::vector<Cyclotomic> values_;
};

// <f, g> = (1/|P|) sum_g f(g) conj(g(g)); exact, and rational for virtual
// characters. A non-rational result means the inputs were not virtual
// characters and is reported as invalid input.
inline Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
  input_check(f.group().parent().get() == g.group().parent().get() &&
                  f.group().elems() == g.group().elems(),
              "inner product across different groups");
  Cyclotomic acc;
  for (int c = 0; c < f.classes()->num_classes(); ++c) {
    Rational size(static_cast<std::int64_t>(f.classes()->class_members(c).size()));
    acc += f.value_at_class(c) * g.value_at_class(c).conj() * size;
  }
  Cyclotomic result = acc * Rational(1, f.group().order());
  input_check(result.is_rational(), "inner product is irrational; inputs are not virtual characters");
  return result.as_rational();
}

inline ClassFunction trivial_character(const ClassesPtr& classes) {
  std::vector<Cyclotomic> v(classes->classes.size(), Cyclotomic::one());
  return ClassFunction(classes, std::move(v));
}

inline ClassFunction regular_character(const ClassesPtr& classes) {
  std::vector<Cyclotomic> v(classes->classes.size(), Cyclotomic::zero());
  v[0] = Cyclotomic::rational(Rational(classes->group.order()));
  return ClassFunction(classes, std::move(v));
}

// restriction to a subgroup of f's group (same ambient group)
inline ClassFunction restrict_to(const ClassFunction& f, const ClassesPtr& sub_classes) {
  input_check(f.group().contains_subgroup(sub_classes->group),
              "restriction target is not a subgroup of the function's group");
  std::vector<Cyclotomic> v;
  v.reserve(sub_classes->classes.size());
  for (int c = 0; c < sub_classes->num_classes(); ++c)
    v.push_back(f.value_at_element(sub_classes->rep(c)));
  return ClassFunction(sub_classes, std::move(v));
}

// pullback along an injective homomorphism phi: P -> Q of a class function on
// Q (or on any group containing the image): (phi^* f)(g) = f(phi(g))
inline ClassFunction pullback(const ClassFunction& f, const GroupMap& phi,
                              const ClassesPtr& source_classes) {
  input_check(source_classes->group.elems() == phi.source().elems(),
              "pullback class data does not match the map's source");
  std::vector<Cyclotomic> v;
  v.reserve(source_classes->classes.size());
  for (int c = 0; c < source_classes->num_classes(); ++c)
    v.push_back(f.value_at_element(phi.apply(source_classes->rep(c))));
  return ClassFunction(source_classes, std::move(v));
}

// induction from P up to S:
// (Ind f)(t) = (1/|P|) sum_{x in S, x^{-1} t x in P} f(x^{-1} t x)
inline ClassFunction induce(const ClassFunction& f, const ClassesPtr& super_classes) {
  const Subgroup& p = f.group();
  const Subgroup& s = super_classes->group;
  input_check(s.contains_subgroup(p), "induction target does not contain the source group");
  const Group& amb = s.group();
  std::vector<Cyclotomic> v;
  v.reserve(super_classes->classes.size());
  for (int c = 0; c < super_classes->num_classes(); ++c) {
    int t = super_classes->rep(c);
    Cyclotomic acc;
    for (int x : s.elems()) {
      int y = amb.mul(amb.mul(amb.inv(x), t), x);
      if (p.contains(y)) acc += f.value_at_element(y);
    }
    v.push_back(acc * Rational(1, p.order()));
  }
  return ClassFunction(super_classes, std::move(v));
}

struct DecomposeResult {
  std::vector<Rational> multiplicities;
  bool is_character;          // all multiplicities nonnegative integers
  bool is_virtual_character;  // all multiplicities integers
};

// The complete character table of a p-group, irreducibles computed by
// inducing linear characters of subgroups (p-groups are monomial). Canonical
// irreducible order: degree ascending, then value sequence, larger
// coordinate vectors first; this places the trivial character first.
class CharacterTable {
 public:
  static CharacterTable compute(const Subgroup& p, int order_bound = kDefaultSubgroupOrderBound);

  const ClassesPtr& classes() const { return classes_; }
  const Subgroup& group() const { return classes_->group; }
  const std::vector<ClassFunction>& irreducibles() const { return irreducibles_; }
  int cyclo_order() const { return classes_->cyclo_order; }
  int num_irreducibles() const { return static_cast<int>(irreducibles_.size()); }

  const ClassFunction& irreducible(int i) const { return irreducibles_[i]; }

  // index of the trivial character in canonical order
  int trivial_index() const {
    for (int i = 0; i < num_irreducibles(); ++i) {
      bool all_one = true;
      for (const auto& v : irreducibles_[i].values())
        if (v != Cyclotomic::one()) {
          all_one = false;
          break;
        }
      if (all_one) return i;
    }
    throw InternalError("character table without a trivial character");
  }

  std::vector<std::int64_t> degrees() const {
    std::vector<std::int64_t> d;
    d.reserve(irreducibles_.size());
    for (const auto& chi : irreducibles_) d.push_back(chi.degree().as_integer());
    return d;
  }

  ClassFunction combination(const std::vector<std::int64_t>& mults) const {
    input_check(mults.size() == irreducibles_.size(), "multiplicity vector length mismatch");
    std::vector<Cyclotomic> v(classes_->classes.size(), Cyclotomic::zero());
    for (std::size_t i = 0; i < mults.size(); ++i) {
      if (mults[i] == 0) continue;
      for (std::size_t c = 0; c < v.size(); ++c)
        v[c] += irreducibles_[i].value_at_class(static_cast<int>(c)) * Rational(mults[i]);
    }
    return ClassFunction(classes_, std::move(v));
  }

  DecomposeResult decompose(const ClassFunction& f) const {
    DecomposeResult out;
    out.is_character = true;
    out.is_virtual_character = true;
    for (const auto& chi : irreducibles_) {
      Rational m = inner_product(f, chi);
      if (!m.is_integer()) out.is_virtual_character = out.is_character = false;
      else if (m.num() < 0) out.is_character = false;
      out.multiplicities.push_back(m);
    }
    return out;
  }

 private:
  CharacterTable(ClassesPtr classes, std::vector<ClassFunction> irrs)
      : classes_(std::move(classes)), irreducibles_(std::move(irrs)) {}

  ClassesPtr classes_;
  std::vector<ClassFunction> irreducibles_;
};

namespace detail {

// All homomorphisms H -> C^* as exponents of zeta_m, that is, the linear
// characters of H. Computed on the abelianization H/[H,H].
inline std::vector<ClassFunction> linear_characters(const Subgroup& h, const ClassesPtr& h_classes,
                                                    int m) {
  const Group& amb = h.group();
  // commutator subgroup
  std::vector<int> comm_seed;
  for (int x : h.elems())
    for (int y : h.elems())
      comm_seed.push_back(amb.mul(amb.mul(amb.inv(x), amb.inv(y)), amb.mul(x, y)));
  std::vector<int> derived = amb.close(comm_seed);

  // cosets of the derived subgroup
  const int n = h.order();
  std::vector<int> coset_of(n, -1);
  std::vector<int> coset_rep;
  for (int i = 0; i < n; ++i) {
    if (coset_of[i] != -1) continue;
    int c = static_cast<int>(coset_rep.size());
    int x = h.elems()[i];
    coset_rep.push_back(x);
    for (int d : derived) coset_of[h.pos_of(amb.mul(x, d))] = c;
  }
  const int ncos = static_cast<int>(coset_rep.size());
  auto cmul = [&](int a, int b) { return coset_of[h.pos_of(amb.mul(coset_rep[a], coset_rep[b]))]; };

  // generators of the quotient (greedy), their orders, and spanning words
  std::vector<int> qgens;
  {
    std::vector<char> have(ncos, 0);
    have[coset_of[h.pos_of(amb.identity_index())]] = 1;
    int count = 1;
    auto close_in = [&]() {
      bool grew = true;
      while (grew) {
        grew = false;
        for (int a = 0; a < ncos; ++a) {
          if (!have[a]) continue;
          for (int g : qgens) {
            int b = cmul(a, g);
            if (!have[b]) {
              have[b] = 1;
              ++count;
              grew = true;
            }
          }
        }
      }
    };
    for (int c = 0; c < ncos && count < ncos; ++c) {
      if (have[c]) continue;
      qgens.push_back(c);
      close_in();
    }
  }
  const int id_coset = coset_of[h.pos_of(amb.identity_index())];
  std::vector<int> qorder(qgens.size());
  for (std::size_t k = 0; k < qgens.size(); ++k) {
    int o = 1, cur = qgens[k];
    while (cur != id_coset) {
      cur = cmul(cur, qgens[k]);
      ++o;
    }
    qorder[k] = o;
    internal_check(m % o == 0, "abelianization exponent does not divide the table order");
  }
  // spanning tree: parent coset and generator used
  std::vector<int> prev(ncos, -1), via(ncos, -1);
  {
    std::vector<int> work{id_coset};
    prev[id_coset] = id_coset;
    while (!work.empty()) {
      int cur = work.back();
      work.pop_back();
      for (std::size_t k = 0; k < qgens.size(); ++k) {
        int nx = cmul(cur, qgens[k]);
        if (prev[nx] == -1) {
          prev[nx] = cur;
          via[nx] = static_cast<int>(k);
          work.push_back(nx);
        }
      }
    }
  }

  // enumerate exponent tuples and keep the multiplicative ones
  std::vector<std::vector<int>> valid_expos;  // each entry: exponent per coset
  std::vector<int> tuple(qgens.size(), 0);
  while (true) {
    std::vector<int> expo(ncos, -1);
    expo[id_coset] = 0;
    // fill along the spanning tree
    std::vector<int> lexp(qgens.size());
    for (std::size_t k = 0; k < qgens.size(); ++k) lexp[k] = (m / qorder[k]) * tuple[k] % m;
    {
      std::vector<int> order_fill{id_coset};
      std::vector<char> seen(ncos, 0);
      seen[id_coset] = 1;
      while (!order_fill.empty()) {
        int cur = order_fill.back();
        order_fill.pop_back();
        for (std::size_t k = 0; k < qgens.size(); ++k) {
          int nx = cmul(cur, qgens[k]);
          if (!seen[nx]) {
            seen[nx] = 1;
            expo[nx] = (expo[cur] + lexp[k]) % m;
            order_fill.push_back(nx);
          }
        }
      }
    }
    // multiplicativity against every generator edge
    bool ok = true;
    for (int a = 0; a < ncos && ok; ++a)
      for (std::size_t k = 0; k < qgens.size(); ++k)
        if (expo[cmul(a, static_cast<int>(qgens[k]))] != (expo[a] + lexp[k]) % m) {
          ok = false;
          break;
        }
    if (ok) valid_expos.push_back(std::move(expo));
    // odometer
    std::size_t pos = 0;
    while (pos < tuple.size()) {
      if (++tuple[pos] < qorder[pos]) break;
      tuple[pos] = 0;
      ++pos;
    }
    if (pos == tuple.size()) break;
  }
  internal_check(static_cast<int>(valid_expos.size()) == ncos,
                 "linear character count must equal the abelianization order");

  std::vector<ClassFunction> out;
  out.reserve(valid_expos.size());
  for (const auto& expo : valid_expos) {
    std::vector<Cyclotomic> vals;
    vals.reserve(h_classes->classes.size());
    for (int c = 0; c < h_classes->num_classes(); ++c) {
      int x = h_classes->rep(c);
      vals.push_back(Cyclotomic::root_of_unity(m, expo[coset_of[h.pos_of(x)]]));
    }
    out.emplace_back(h_classes, std::move(vals));
  }
  return out;
}

inline bool canonical_char_before(const ClassFunction& a, const ClassFunction& b) {
  Rational da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.values().size(); ++i) {
    int c = Cyclotomic::compare(a.values()[i], b.values()[i]);
    if (c != 0) return c > 0;  // larger coordinate vector first
  }
  return false;
}

}  // namespace detail

inline CharacterTable CharacterTable::compute(const Subgroup& p, int order_bound) {
  if (p.order() > order_bound)
    throw RefusalError("character table refused: |P| = " + std::to_string(p.order()) +
                       " exceeds bound " + std::to_string(order_bound));
  auto classes = make_classes(p);
  input_check(classes->cyclo_order > 0,
              "character tables are computed for p-groups only (prime-power exponent)");
  const int m = classes->cyclo_order;
  const int r = classes->num_classes();

  std::vector<ClassFunction> irrs;
  auto already = [&](const ClassFunction& f) {
    for (const auto& g : irrs)
      if (g == f) return true;
    return false;
  };

  auto subs = all_subgroups(p, order_bound);
  for (const auto& h : subs) {
    auto h_classes = (h.elems() == p.elems()) ? classes : make_classes(h);
    for (const auto& lin : detail::linear_characters(h, h_classes, m)) {
      ClassFunction cand = (h.elems() == p.elems()) ? lin : induce(lin, classes);
      if (inner_product(cand, cand) != Rational(1)) continue;
      if (!already(cand)) irrs.push_back(cand);
      if (static_cast<int>(irrs.size()) == r) break;
    }
    if (static_cast<int>(irrs.size()) == r) break;
  }
  internal_check(static_cast<int>(irrs.size()) == r,
                 "monomial induction did not produce a full character table");
  std::sort(irrs.begin(), irrs.end(), detail::canonical_char_before);

  std::int64_t sumsq = 0;
  for (const auto& chi : irrs) {
    std::int64_t d = chi.degree().as_integer();
    sumsq += d * d;
  }
  internal_check(sumsq == p.order(), "degree squares must sum to the group order");
  return CharacterTable(std::move(classes), std::move(irrs));
}

}  // namespace fuselab
