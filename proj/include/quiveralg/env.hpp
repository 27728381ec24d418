#pragma once

// PBW calculus in the enveloping algebra of the elliptic Lie algebra and of
// its ambient full loop algebra. Basis symbols are interned; the monomial
// order puts all non-negative-half factors on the left, and orders negative
// half factors by increasing theta-slope, so that
//   * the projection to U(n_ell) just drops monomials with a left block, and
//   * slope ideals J_{theta,kappa} become monomial filters.

#include <deque>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>

#include "quiveralg/loop.hpp"
#include "quiveralg/series.hpp"

namespace qalg {

using Word = std::vector<int>;       // interned basis ids, left to right
using EnvElt = std::map<Word, Rat>;  // PBW combinations

inline void env_add(EnvElt& out, const Word& w, const Rat& c) {
  if (c == 0) return;
  auto it = out.find(w);
  if (it == out.end())
    out.emplace(w, c);
  else {
    it->second += c;
    if (it->second == 0) out.erase(it);
  }
}

inline EnvElt env_sum(EnvElt a, const EnvElt& b) {
  for (const auto& [w, c] : b) env_add(a, w, c);
  return a;
}

inline EnvElt env_scale(const Rat& c, EnvElt a) {
  if (c == 0) return {};
  for (auto& [w, v] : a) v *= c;
  return a;
}

// unreduced concatenation product
inline EnvElt env_concat(const EnvElt& a, const EnvElt& b) {
  EnvElt out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      env_add(out, w, ca * cb);
    }
  return out;
}

struct ConfigurationError : DomainError {
  using DomainError::DomainError;
};

// Slope interval (a, b], with a = -inf / b = +inf allowed, or a singleton.
struct SlopeInterval {
  std::optional<Rat> lo;  // open lower end
  std::optional<Rat> hi;  // closed upper end
  bool singleton = false; // [v, v] given through lo = hi = v

  static SlopeInterval half_open(std::optional<Rat> a, std::optional<Rat> b) {
    if (a && b && !(*a < *b))
      throw DomainError("SlopeInterval: need a < b");
    return {a, b, false};
  }
  static SlopeInterval point(const Rat& v) { return {v, v, true}; }
  static SlopeInterval up_to(const Rat& b) { return {std::nullopt, b, false}; }

  bool contains(const Rat& mu) const {
    if (singleton) return mu == *lo;
    if (lo && !(mu > *lo)) return false;
    if (hi && !(mu <= *hi)) return false;
    return true;
  }
};

struct SlopeIdealSpec {
  CoweightVector theta;
  SlopeInterval interval;
};

class EnvAlgebra {
 public:
  EnvAlgebra(Quiver affine, CoweightVector theta)
      : loop_(std::move(affine)), theta_(std::move(theta)) {
    if (theta_.size() != loop_.quiver().vertex_count())
      throw ConfigurationError("EnvAlgebra: theta size mismatch");
  }

  const LoopAlgebra& loop() const { return loop_; }
  const CoweightVector& theta() const { return theta_; }
  const LoopKey& key(int id) const { return keys_[id]; }

  int intern(const LoopKey& k) {
    auto it = ids_.find(k);
    if (it != ids_.end()) return it->second;
    int id = static_cast<int>(keys_.size());
    keys_.push_back(k);
    ids_.emplace(k, id);
    sort_keys_.push_back(make_sort_key(k));
    return id;
  }

  // strict PBW order
  bool id_less(int a, int b) const { return sort_keys_[a] < sort_keys_[b]; }

  Rat slope_of(int id) const {
    DimVector w = loop_.weight(keys_[id]);
    if (w.is_zero()) return 0;
    return slope(theta_, -w);
  }
  bool negative_half(int id) const { return loop_.in_negative_half(keys_[id]); }

  EnvElt one() const { return {{Word{}, Rat(1)}}; }

  EnvElt from_lie(const LieEltLoop& x) {
    EnvElt out;
    for (const auto& [k, c] : x) env_add(out, Word{intern(k)}, c);
    return out;
  }

  LieEltLoop lie_of(int id) const { return {{keys_[id], Rat(1)}}; }

  // PBW normal form: straighten adjacent inversions through the bracket.
  EnvElt normalize(const EnvElt& x, long step_cap = 50'000'000) {
    EnvElt result;
    std::deque<std::pair<Word, Rat>> work(x.begin(), x.end());
    long steps = 0;
    while (!work.empty()) {
      auto [w, c] = work.front();
      work.pop_front();
      if (++steps > step_cap)
        throw DomainError("pbw normalize: straightening step cap exceeded");
      std::size_t bad = w.size();
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (id_less(w[i + 1], w[i])) {
          bad = i;
          break;
        }
      if (bad == w.size()) {
        env_add(result, w, c);
        continue;
      }
      Word swapped = w;
      std::swap(swapped[bad], swapped[bad + 1]);
      work.push_back({std::move(swapped), c});
      LieEltLoop br = loop_.bracket(keys_[w[bad]], keys_[w[bad + 1]]);
      for (const auto& [z, cz] : br) {
        Word shorter;
        shorter.reserve(w.size() - 1);
        for (std::size_t i = 0; i < w.size(); ++i) {
          if (i == bad) shorter.push_back(intern(z));
          if (i != bad && i != bad + 1) shorter.push_back(w[i]);
        }
        work.push_back({std::move(shorter), c * cz});
      }
    }
    return result;
  }

  EnvElt mul(const EnvElt& a, const EnvElt& b) { return normalize(env_concat(a, b)); }

  EnvElt power(const EnvElt& a, int n) {
    EnvElt r = one();
    for (int k = 0; k < n; ++k) r = mul(r, a);
    return r;
  }

  // divided power a^(n) = a^n / n!
  EnvElt divided_power(const EnvElt& a, int n) {
    return env_scale(Rat(1, factorial(n)), power(a, n));
  }

  // drop monomials containing any non-negative-half factor (the PBW
  // projection U(g_ell) -> U(n_ell) along the left ideal)
  EnvElt project_negative(const EnvElt& x) const {
    EnvElt out;
    for (const auto& [w, c] : x) {
      bool ok = true;
      for (int id : w)
        if (!negative_half(id)) {
          ok = false;
          break;
        }
      if (ok) out.emplace(w, c);
    }
    return out;
  }

  // kill normal monomials containing a factor whose slope lies outside the
  // interval; input must be in normal form w.r.t. this algebra's theta
  EnvElt slope_project(const SlopeIdealSpec& spec, const EnvElt& x) const {
    if (!(spec.theta == theta_))
      throw ConfigurationError("slope_project: spec theta differs from the PBW order theta");
    EnvElt out;
    for (const auto& [w, c] : x) {
      bool ok = true;
      for (int id : w) {
        if (!negative_half(id)) {
          ok = false;
          break;
        }
        if (!spec.interval.contains(slope_of(id))) {
          ok = false;
          break;
        }
      }
      if (ok) out.emplace(w, c);
    }
    return out;
  }

  // weight of a word in Z^I
  DimVector word_weight(const Word& w) const {
    DimVector d(loop_.quiver().vertex_count());
    for (int id : w) d = d + loop_.weight(keys_[id]);
    return d;
  }
  int word_tdeg(const Word& w) const {
    int t = 0;
    for (int id : w) t += loop_.tdegree(keys_[id]);
    return t;
  }

  // Basis of (n_ell)_{-d, tdeg}: loop elements and central symbols.
  std::vector<LoopKey> negative_basis(const DimVector& d, int tdeg) const {
    std::vector<LoopKey> out;
    if (!d.is_nonnegative() || d.is_zero()) return out;
    const auto& rs = loop_.finite();
    const auto& delta = loop_.affine_data().delta;
    for (int fin = 0; fin < rs.basis_size(); ++fin) {
      DimVector need = -d - loop_.embed(rs.weight(fin));  // = k delta
      // solve need = k * delta
      bool ok = true;
      std::optional<Int> k;
      for (int i = 0; i < need.size() && ok; ++i) {
        if (delta[i] == 0) {
          if (need[i] != 0) ok = false;
          continue;
        }
        if (need[i] % delta[i] != 0) {
          ok = false;
          break;
        }
        Int q = need[i] / delta[i];
        if (!k)
          k = q;
        else if (*k != q)
          ok = false;
      }
      if (!ok || !k) continue;
      LoopKey cand = LoopKey::elem(fin, to_int(*k), tdeg);
      if (loop_.in_negative_half(cand)) out.push_back(cand);
    }
    // central c_{-n, l}: weight -n delta, vertical l >= 1
    if (tdeg >= 1 && is_delta_multiple(d, delta)) {
      Int n = d[0] / delta[0];
      out.push_back(LoopKey::central(-to_int(n), tdeg));
    }
    return out;
  }

  // dim (n_ell)_{-d, t}
  Int lie_dimension(const DimVector& d, int tdeg) const {
    return Int(negative_basis(d, tdeg).size());
  }

  // number of PBW monomials in U(n_ell) of weight -d and total t-degree tdeg
  Int pbw_dimension(const DimVector& d, int tdeg) const {
    if (d.is_zero()) return tdeg == 0 ? 1 : 0;
    // collect all basis symbols with weight <= d and t <= tdeg
    struct Item {
      std::vector<int> wt;  // small copy of the weight, size n
      int t;
      Int count;  // multiplicity of basis elements with this (wt, t)
    };
    std::map<std::pair<std::vector<int>, int>, Int> items;
    int n = d.size();
    DimVector cur(n);
    auto rec = [&](auto&& self, int i) -> void {
      if (i == n) {
        if (cur.is_zero()) return;
        for (int t = 0; t <= tdeg; ++t) {
          Int m = lie_dimension(cur, t);
          if (m > 0) {
            std::vector<int> w(n);
            for (int k = 0; k < n; ++k) w[k] = to_int(cur[k]);
            items[{w, t}] += m;
          }
        }
        return;
      }
      for (Int v = 0; v <= d[i]; ++v) {
        cur[i] = v;
        self(self, i + 1);
      }
      cur[i] = 0;
    };
    rec(rec, 0);

    // multiset count: polynomial algebra on the graded basis
    // dp indexed by (weight <= d, t <= tdeg)
    auto index_of = [&](const std::vector<int>& w, int t) {
      long idx = t;
      for (int i = 0; i < n; ++i) idx = idx * (to_int(d[i]) + 1) + w[i];
      return idx;
    };
    long total = tdeg + 1;
    for (int i = 0; i < n; ++i) total *= to_int(d[i]) + 1;
    std::vector<Int> dp(total, 0);
    std::vector<int> zero(n, 0);
    dp[index_of(zero, 0)] = 1;
    for (const auto& [key, mult] : items) {
      const auto& [w, t] = key;
      // unbounded multiplicity with `mult` colors: standard coin-change over
      // a basis of size mult at this bidegree; iterate mult times
      for (Int copy = 0; copy < mult; ++copy) {
        // ascending order so each basis element may repeat
        std::vector<int> cw(n, 0);
        for (long idx = 0; idx < total; ++idx) {
          // decode idx
          long rest = idx;
          for (int i = n - 1; i >= 0; --i) {
            cw[i] = static_cast<int>(rest % (to_int(d[i]) + 1));
            rest /= to_int(d[i]) + 1;
          }
          int ct = static_cast<int>(rest);
          // target = current + (w, t)
          bool fits = ct + t <= tdeg;
          std::vector<int> tw(n);
          for (int i = 0; i < n && fits; ++i) {
            tw[i] = cw[i] + w[i];
            if (tw[i] > to_int(d[i])) fits = false;
          }
          if (fits && dp[idx] != 0) dp[index_of(tw, ct + t)] += dp[idx];
        }
      }
    }
    std::vector<int> wd(n);
    for (int i = 0; i < n; ++i) wd[i] = to_int(d[i]);
    return dp[index_of(wd, tdeg)];
  }

  std::string str(const EnvElt& x) const {
    if (x.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : x) {
      if (!first) os << " + ";
      first = false;
      os << c;
      for (int id : w) os << " " << loop_.key_name(keys_[id]);
    }
    return os.str();
  }

 private:
  // order key: (half, slope, central-first, weight, s, t, fin)
  using SortKey = std::tuple<int, Rat, int, std::vector<Int>, int, int, int>;
  SortKey make_sort_key(const LoopKey& k) const {
    DimVector w = loop_.weight(k);
    int half = loop_.in_negative_half(k) ? 1 : 0;
    Rat mu = 0;
    if (half == 1) mu = slope(theta_, -w);
    return {half, mu, k.kind == LoopKey::Central ? 0 : 1, w.c, k.s, k.t, k.fin};
  }

  LoopAlgebra loop_;
  CoweightVector theta_;
  std::vector<LoopKey> keys_;
  std::map<LoopKey, int> ids_;
  std::vector<SortKey> sort_keys_;
};

}  // namespace qalg
