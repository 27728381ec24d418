#pragma once

// Sparse multivariate polynomials over the rationals. Monomials are dense
// exponent vectors of a fixed length; terms live in an ordered map so every
// traversal is deterministic.

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "quiveralg/rational.hpp"

namespace qalg {

using Mono = std::vector<int>;

inline int mono_degree(const Mono& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

struct GradedLexLess {
  bool operator()(const Mono& a, const Mono& b) const {
    int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

class Poly {
 public:
  using TermMap = std::map<Mono, Rat, GradedLexLess>;

  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, const Rat& c) {
    Poly p(nvars);
    if (c != 0) p.terms_[Mono(nvars, 0)] = c;
    return p;
  }
  static Poly variable(int nvars, int idx, int exp = 1) {
    Poly p(nvars);
    Mono m(nvars, 0);
    m[idx] = exp;
    p.terms_[m] = 1;
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0);
  }
  Rat constant_value() const {
    if (terms_.empty()) return 0;
    return terms_.begin()->second;
  }

  void add_term(const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r(a.nvars_);
    Mono m(a.nvars_, 0);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
        r.add_term(m, ca * cb);
      }
    }
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly& operator*=(const Rat& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
  }
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  int degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
  }

  // Substitute variable `var` by the polynomial `value` (same variable space;
  // `value` must not involve `var`).
  Poly substitute(int var, const Poly& value) const {
    int dmax = degree_in(var);
    std::vector<Poly> pow(dmax + 1, Poly(nvars_));
    pow[0] = Poly::constant(nvars_, 1);
    for (int k = 1; k <= dmax; ++k) pow[k] = pow[k - 1] * value;
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
      Mono rest = m;
      int e = rest[var];
      rest[var] = 0;
      Poly t(nvars_);
      t.add_term(rest, c);
      r += t * pow[e];
    }
    return r;
  }

  // Reindex into a new variable space: new index of old variable i is map[i].
  Poly remap(int new_nvars, const std::vector<int>& map) const {
    Poly r(new_nvars);
    Mono mm(new_nvars, 0);
    for (const auto& [m, c] : terms_) {
      std::fill(mm.begin(), mm.end(), 0);
      for (int i = 0; i < nvars_; ++i) mm[map[i]] += m[i];
      r.add_term(mm, c);
    }
    return r;
  }

  // Exact division by (x_a - x_b); throws InternalError if not divisible.
  Poly divide_by_difference(int a, int b) const {
    // Horner division in x_a: substitute x_a = q*(x_a - x_b) + x_b mentally;
    // collect coefficients of powers of x_a, fold from the top.
    // P = sum_k c_k(rest) x_a^k ; quotient Q = sum q_k x_a^k with
    // q_{k-1} = c_k + x_b*q_k (descending), remainder c_0 + x_b*q_0 must be 0.
    int d = degree_in(a);
    std::vector<Poly> coef(d + 1, Poly(nvars_));
    for (const auto& [m, c] : terms_) {
      Mono rest = m;
      int e = rest[a];
      rest[a] = 0;
      coef[e].add_term(rest, c);
    }
    Poly xb = Poly::variable(nvars_, b);
    Poly quot(nvars_);
    Poly carry(nvars_);  // q_k while descending
    for (int k = d; k >= 1; --k) {
      Poly qk = coef[k] + xb * carry;
      // qk is the coefficient of x_a^{k-1} in the quotient
      for (const auto& [m, c] : qk.terms()) {
        Mono mm = m;
        mm[a] += k - 1;
        quot.add_term(mm, c);
      }
      carry = std::move(qk);
    }
    Poly rem = coef[0] + xb * carry;
    if (!rem.is_zero()) throw InternalError("divide_by_difference: non-exact division");
    return quot;
  }

  std::string str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) os << (c > 0 ? " + " : " - ");
      if (first && c < 0) os << "-";
      first = false;
      Rat ac = abs(c);
      bool printed = false;
      if (ac != 1 || mono_degree(m) == 0) {
        os << ac;
        printed = true;
      }
      for (int i = 0; i < nvars_; ++i) {
        if (m[i] == 0) continue;
        if (printed) os << "*";
        os << names[i];
        if (m[i] > 1) os << "^" << m[i];
        printed = true;
      }
    }
    return os.str();
  }

 private:
  int nvars_;
  TermMap terms_;
};

}  // namespace qalg
