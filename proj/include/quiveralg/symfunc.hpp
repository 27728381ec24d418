#pragma once

// Symmetric functions in infinitely many variables, stored as finite rational
// combinations of monomial symmetric functions m_lambda. The product expands
// through the combinatorial structure constants n^nu_{lambda,mu}.

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "quiveralg/rational.hpp"

namespace qalg {

// Partition: weakly decreasing positive parts.
using Partition = std::vector<int>;

inline int partition_weight(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

inline bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i && p[i] > p[i - 1]) return false;
  }
  return true;
}

inline std::vector<Partition> partitions_of(int n, int max_part = -1) {
  if (max_part < 0) max_part = n;
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int rest, int cap) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, cap); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, max_part);
  return out;
}

// n^nu_{lambda,mu}: the number of tuples (d_1,...,d_l(nu)) such that (d_i) is
// a rearrangement of mu (padded by zeros) and (nu_i - d_i) one of lambda.
inline Int monomial_structure_constant(const Partition& lam, const Partition& mu,
                                       const Partition& nu) {
  int L = static_cast<int>(nu.size());
  std::vector<int> mu_parts(mu.begin(), mu.end());
  mu_parts.resize(L, 0);  // pad with zeros
  if (static_cast<int>(mu.size()) > L) return 0;
  std::sort(mu_parts.begin(), mu_parts.end());
  std::vector<int> lam_pad(lam.begin(), lam.end());
  if (static_cast<int>(lam.size()) > L) return 0;
  lam_pad.resize(L, 0);
  std::multiset<int> lam_ms(lam_pad.begin(), lam_pad.end());

  Int count = 0;
  std::vector<int> d = mu_parts;
  // iterate over distinct permutations of the padded mu-parts
  do {
    std::multiset<int> rest;
    bool ok = true;
    for (int i = 0; i < L && ok; ++i) {
      int r = nu[i] - d[i];
      if (r < 0) ok = false;
      rest.insert(r);
    }
    if (ok && rest == lam_ms) ++count;
  } while (std::next_permutation(d.begin(), d.end()));
  return count;
}

class SymFunc {
 public:
  using TermMap = std::map<Partition, Rat>;

  SymFunc() = default;
  static SymFunc monomial(const Partition& p, const Rat& c = 1) {
    if (!is_partition(p)) throw DomainError("SymFunc: parts must be weakly decreasing and positive");
    SymFunc f;
    if (c != 0) f.terms_[p] = c;
    return f;
  }
  static SymFunc one() {
    SymFunc f;
    f.terms_[{}] = 1;
    return f;
  }
  // power sum p_n = m_(n); elementary e_n = m_(1^n)
  static SymFunc power_sum(int n) { return monomial(Partition{n}); }
  static SymFunc elementary(int n) { return monomial(Partition(n, 1)); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Partition& p, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(p);
    if (it == terms_.end())
      terms_.emplace(p, c);
    else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SymFunc& operator+=(const SymFunc& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
  }
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) {
    for (const auto& [p, c] : b.terms_) a.add_term(p, -c);
    return a;
  }
  friend SymFunc operator*(const Rat& c, SymFunc f) {
    if (c == 0) return SymFunc();
    for (auto& [p, v] : f.terms_) v *= c;
    return f;
  }
  bool operator==(const SymFunc& o) const { return terms_ == o.terms_; }

  // Truncate to total degree <= cap (used when exponentiating series of
  // symmetric functions).
  SymFunc truncated(int cap) const {
    SymFunc r;
    for (const auto& [p, c] : terms_)
      if (partition_weight(p) <= cap) r.terms_.emplace(p, c);
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << c << "*m[";
      for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
      os << "]";
    }
    return os.str();
  }

 private:
  TermMap terms_;
};

inline SymFunc symfunc_mul(const SymFunc& f, const SymFunc& g) {
  SymFunc r;
  for (const auto& [lam, cf] : f.terms()) {
    for (const auto& [mu, cg] : g.terms()) {
      int w = partition_weight(lam) + partition_weight(mu);
      int maxpart = 0;
      if (!lam.empty()) maxpart = std::max(maxpart, lam[0]);
      if (!mu.empty()) maxpart = std::max(maxpart, mu[0]);
      maxpart = std::max(maxpart, (lam.empty() ? 0 : lam[0]) + (mu.empty() ? 0 : mu[0]));
      for (const auto& nu : partitions_of(w, maxpart)) {
        if (nu.size() > lam.size() + mu.size()) continue;
        Int n = monomial_structure_constant(lam, mu, nu);
        if (n != 0) r.add_term(nu, cf * cg * Rat(n));
      }
    }
  }
  return r;
}

}  // namespace qalg
