#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

// Finite-dimensional graded-commutative monomial algebras over F_p and the
// top-class duality test: the quotient of F_p[x_1..x_n] (generators in
// prescribed positive degrees, odd-degree generators anticommuting in odd
// characteristic) by an ideal of monomial relations. The quotient is finite
// dimensional exactly when every generator carries a pure power relation
// (odd-degree generators in odd characteristic square to zero implicitly).

namespace fuselab {

inline constexpr std::int64_t kDefaultAlgebraDimBound = 1 << 20;

struct AlgebraGenerator {
  std::string name;
  int degree = 0;
};

struct GradedMonomialAlgebra {
  int characteristic = 2;
  std::vector<AlgebraGenerator> generators;
  std::vector<std::vector<int>> relations;  // monomials as exponent vectors
};

namespace detail {

inline bool is_prime_int(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline bool divides_monomial(const std::vector<int>& divisor, const std::vector<int>& e) {
  for (std::size_t i = 0; i < e.size(); ++i)
    if (divisor[i] > e[i]) return false;
  return true;
}

}  // namespace detail

// The expanded monomial basis of a finite-dimensional quotient. Monomials are
// exponent vectors, sorted by (degree, exponents).
class MonomialBasis {
 public:
  explicit MonomialBasis(GradedMonomialAlgebra algebra,
                         std::int64_t dim_bound = kDefaultAlgebraDimBound)
      : algebra_(std::move(algebra)) {
    const int n = static_cast<int>(algebra_.generators.size());
    input_check(detail::is_prime_int(algebra_.characteristic),
                "the characteristic must be a prime");
    for (const auto& g : algebra_.generators)
      input_check(g.degree >= 1, "generator degrees must be positive");
    for (const auto& r : algebra_.relations) {
      input_check(static_cast<int>(r.size()) == n,
                  "relation exponent vector length must match the generator count");
      bool nonzero = false;
      for (int e : r) {
        input_check(e >= 0, "relation exponents must be nonnegative");
        if (e > 0) nonzero = true;
      }
      input_check(nonzero, "a relation must involve at least one generator");
    }
    relations_ = algebra_.relations;
    if (algebra_.characteristic != 2) {
      // odd-degree generators anticommute, so they square to zero
      for (int i = 0; i < n; ++i)
        if (algebra_.generators[i].degree % 2 == 1) {
          std::vector<int> sq(n, 0);
          sq[i] = 2;
          relations_.push_back(std::move(sq));
        }
    }

    // finiteness: a cap from a pure power relation for every generator
    caps_.assign(n, -1);
    for (const auto& r : relations_) {
      int support = -1;
      bool pure = true;
      for (int i = 0; i < n && pure; ++i)
        if (r[i] > 0) {
          if (support >= 0)
            pure = false;
          else
            support = i;
        }
      if (pure && support >= 0 && (caps_[support] < 0 || r[support] < caps_[support]))
        caps_[support] = r[support];
    }
    for (int i = 0; i < n; ++i)
      if (caps_[i] < 0)
        throw RefusalError("the algebra is infinite dimensional: generator " +
                           algebra_.generators[i].name + " has no pure power relation");

    std::int64_t box = 1;
    for (int i = 0; i < n; ++i) {
      box = checked::mul(box, caps_[i]);
      if (box > dim_bound)
        throw RefusalError("monomial basis refused: the exponent box exceeds " +
                           std::to_string(dim_bound) + " monomials");
    }

    std::vector<int> e(n, 0);
    while (true) {
      bool killed = false;
      for (const auto& r : relations_)
        if (detail::divides_monomial(r, e)) {
          killed = true;
          break;
        }
      if (!killed) monomials_.push_back(e);
      int j = n - 1;
      while (j >= 0 && e[j] == caps_[j] - 1) e[j--] = 0;
      if (j < 0) break;
      ++e[j];
    }
    std::sort(monomials_.begin(), monomials_.end(),
              [this](const std::vector<int>& a, const std::vector<int>& b) {
                int da = degree_of(a), db = degree_of(b);
                return da != db ? da < db : a < b;
              });
  }

  const GradedMonomialAlgebra& algebra() const { return algebra_; }
  const std::vector<std::vector<int>>& monomials() const { return monomials_; }
  std::int64_t dimension() const { return static_cast<std::int64_t>(monomials_.size()); }

  int degree_of(const std::vector<int>& e) const {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * algebra_.generators[i].degree;
    return d;
  }

  int top_degree() const { return degree_of(monomials_.back()); }

  // dimensions per degree, indexed 0..top_degree()
  std::vector<std::int64_t> hilbert() const {
    std::vector<std::int64_t> h(top_degree() + 1, 0);
    for (const auto& e : monomials_) ++h[degree_of(e)];
    return h;
  }

  // product of two basis monomials: (coefficient mod p, exponent vector);
  // coefficient 0 when the product lies in the relation ideal. The sign is
  // the parity of transpositions of odd-degree generators needed to merge
  // the two factors into canonical order.
  std::pair<int, std::vector<int>> product(const std::vector<int>& a,
                                           const std::vector<int>& b) const {
    const int n = static_cast<int>(a.size());
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[i] = a[i] + b[i];
    for (const auto& r : relations_)
      if (detail::divides_monomial(r, e)) return {0, std::move(e)};
    int coeff = 1;
    if (algebra_.characteristic != 2) {
      long parity = 0;
      for (int i = 0; i < n; ++i) {
        if (algebra_.generators[i].degree % 2 == 0 || b[i] == 0) continue;
        long later = 0;
        for (int j = i + 1; j < n; ++j)
          if (algebra_.generators[j].degree % 2 == 1) later += a[j];
        parity += static_cast<long>(b[i]) * later;
      }
      if (parity % 2 != 0) coeff = algebra_.characteristic - 1;
    }
    return {coeff, std::move(e)};
  }

 private:
  GradedMonomialAlgebra algebra_;
  std::vector<std::vector<int>> relations_;  // supplied plus implicit odd squares
  std::vector<int> caps_;
  std::vector<std::vector<int>> monomials_;
};

struct PoincareCheck {
  bool poincare_duality = false;
  int top_degree = 0;
  std::int64_t dimension = 0;
  std::vector<std::int64_t> hilbert;
  // when duality holds, the basis monomial pairing with monomials()[i] into
  // the top class; empty otherwise
  std::vector<int> dual_partner;
  // monomials annihilated by every generator; exactly {top} when duality holds
  std::vector<std::vector<int>> socle;
  // degrees d <= top/2 whose pairing into the top class is singular
  std::vector<int> failing_degrees;
};

namespace detail {

// rank of an integer matrix over F_p
inline int rank_mod_p(std::vector<std::vector<int>> m, int p) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] % p != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    int inv = 0;
    int lead = ((m[rank][c] % p) + p) % p;
    for (int t = 1; t < p; ++t)
      if (t * lead % p == 1) {
        inv = t;
        break;
      }
    for (int r = rank + 1; r < rows; ++r) {
      int factor = ((m[r][c] % p) + p) % p * inv % p;
      if (factor == 0) continue;
      for (int cc = c; cc < cols; ++cc)
        m[r][cc] = ((m[r][cc] - factor * m[rank][cc]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

// Does multiplication into the top degree give a perfect pairing? Checks that
// the top degree is one dimensional and that every graded pairing matrix has
// full rank over F_p, and reports the socle (the annihilator of the
// generators) as the certificate either way.
inline PoincareCheck poincare_duality(const GradedMonomialAlgebra& algebra,
                                      std::int64_t dim_bound = kDefaultAlgebraDimBound) {
  MonomialBasis basis(algebra, dim_bound);
  const auto& mons = basis.monomials();
  const int n = static_cast<int>(algebra.generators.size());
  const int p = algebra.characteristic;

  PoincareCheck out;
  out.dimension = basis.dimension();
  out.top_degree = basis.top_degree();
  out.hilbert = basis.hilbert();

  std::map<int, std::vector<int>> bucket;  // degree -> monomial indices
  for (std::size_t i = 0; i < mons.size(); ++i)
    bucket[basis.degree_of(mons[i])].push_back(static_cast<int>(i));

  // socle: monomials killed by every generator
  for (const auto& e : mons) {
    bool annihilated = true;
    for (int i = 0; i < n && annihilated; ++i) {
      std::vector<int> unit(n, 0);
      unit[i] = 1;
      if (basis.product(e, unit).first != 0) annihilated = false;
    }
    if (annihilated) out.socle.push_back(e);
  }

  bool ok = bucket[out.top_degree].size() == 1;
  for (int d = 0; 2 * d <= out.top_degree; ++d) {
    const auto lo = bucket.find(d);
    const auto hi = bucket.find(out.top_degree - d);
    std::size_t nlo = lo == bucket.end() ? 0 : lo->second.size();
    std::size_t nhi = hi == bucket.end() ? 0 : hi->second.size();
    if (nlo != nhi) {
      ok = false;
      out.failing_degrees.push_back(d);
      continue;
    }
    if (nlo == 0) continue;
    std::vector<std::vector<int>> pairing(nlo, std::vector<int>(nhi, 0));
    for (std::size_t r = 0; r < nlo; ++r)
      for (std::size_t c = 0; c < nhi; ++c) {
        auto [coeff, e] = basis.product(mons[lo->second[r]], mons[hi->second[c]]);
        if (coeff != 0 && e == mons.back()) pairing[r][c] = coeff;
      }
    if (detail::rank_mod_p(pairing, p) != static_cast<int>(nlo)) {
      ok = false;
      out.failing_degrees.push_back(d);
    }
  }
  out.poincare_duality = ok;

  if (ok) {
    out.dual_partner.assign(mons.size(), -1);
    const std::vector<int>& top = mons.back();
    for (std::size_t i = 0; i < mons.size(); ++i) {
      std::vector<int> comp(n);
      for (int j = 0; j < n; ++j) comp[j] = top[j] - mons[i][j];
      auto it = std::lower_bound(mons.begin(), mons.end(), comp,
                                 [&basis](const std::vector<int>& a, const std::vector<int>& b) {
                                   int da = basis.degree_of(a), db = basis.degree_of(b);
                                   return da != db ? da < db : a < b;
                                 });
      internal_check(it != mons.end() && *it == comp,
                     "duality holds but a dual partner is missing");
      out.dual_partner[i] = static_cast<int>(it - mons.begin());
    }
  }
  return out;
}

}  // namespace fuselab
