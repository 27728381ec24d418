#pragma once

// Truncated multivariate formal series in z^d q^k, the plethystic
// exponential, and the Kac-polynomial character generating functions.
//
// Convention: q tracks half the (shifted) cohomological degree, so character
// series live in non-positive powers of q; the window carries an explicit
// q-exponent range [qmin, qmax].

#include <map>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "quiveralg/quiver.hpp"

namespace qalg {

struct TruncationWindow {
  DimVector max_weight;  // componentwise bound, entries >= 0
  int qmin = 0;
  int qmax = 0;

  TruncationWindow() = default;
  TruncationWindow(DimVector mw, int lo, int hi)
      : max_weight(std::move(mw)), qmin(lo), qmax(hi) {
    if (!max_weight.is_nonnegative() || qmin > qmax)
      throw DomainError("TruncationWindow: bounds must be nonnegative and qmin <= qmax");
  }

  bool contains(const DimVector& d, int k) const {
    if (k < qmin || k > qmax) return false;
    for (int i = 0; i < d.size(); ++i)
      if (d[i] < 0 || d[i] > max_weight[i]) return false;
    return true;
  }

  // window of a product is the min of the windows
  static TruncationWindow meet(const TruncationWindow& a, const TruncationWindow& b) {
    DimVector mw(a.max_weight.size());
    for (int i = 0; i < mw.size(); ++i)
      mw[i] = std::min(a.max_weight[i], b.max_weight[i]);
    return TruncationWindow(mw, std::max(a.qmin, b.qmin), std::min(a.qmax, b.qmax));
  }

  bool operator==(const TruncationWindow& o) const {
    return max_weight == o.max_weight && qmin == o.qmin && qmax == o.qmax;
  }
};

class GradedSeries {
 public:
  using Key = std::pair<std::vector<Int>, int>;  // (d, q-exponent)
  using TermMap = std::map<Key, Rat>;

  GradedSeries() = default;
  explicit GradedSeries(TruncationWindow w) : window_(std::move(w)) {}

  static GradedSeries one(const TruncationWindow& w) {
    GradedSeries s(w);
    s.add_term(DimVector(w.max_weight.size()), 0, 1);
    return s;
  }

  const TruncationWindow& window() const { return window_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rat coeff(const DimVector& d, int k) const {
    auto it = terms_.find({d.c, k});
    return it == terms_.end() ? Rat(0) : it->second;
  }

  void add_term(const DimVector& d, int k, const Rat& c) {
    if (c == 0 || !window_.contains(d, k)) return;
    Key key{d.c, k};
    auto it = terms_.find(key);
    if (it == terms_.end())
      terms_.emplace(std::move(key), c);
    else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  GradedSeries& operator+=(const GradedSeries& o) {
    for (const auto& [key, c] : o.terms_) {
      DimVector d;
      d.c = key.first;
      add_term(d, key.second, c);
    }
    return *this;
  }
  friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
  friend GradedSeries operator*(const Rat& c, GradedSeries s) {
    if (c == 0) return GradedSeries(s.window_);
    for (auto& [k, v] : s.terms_) v *= c;
    return s;
  }

  friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
    GradedSeries r(TruncationWindow::meet(a.window_, b.window_));
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) {
        DimVector d;
        d.c = ka.first;
        for (std::size_t i = 0; i < kb.first.size(); ++i) d.c[i] += kb.first[i];
        r.add_term(d, ka.second + kb.second, ca * cb);
      }
    return r;
  }

  bool operator==(const GradedSeries& o) const { return terms_ == o.terms_; }

  // Adams operation: z^d q^k -> z^{nd} q^{nk}, truncated.
  GradedSeries adams(int n) const {
    GradedSeries r(window_);
    for (const auto& [key, c] : terms_) {
      DimVector d;
      d.c = key.first;
      for (auto& v : d.c) v *= n;
      r.add_term(d, n * key.second, c);
    }
    return r;
  }

  // Sorted term list `coeff * z^(d_0,...,d_e) * q^k`.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
      if (!first) os << "\n";
      first = false;
      os << c << " * z^(";
      for (std::size_t i = 0; i < key.first.size(); ++i)
        os << (i ? "," : "") << key.first[i];
      os << ") * q^" << key.second;
    }
    return os.str();
  }

 private:
  TruncationWindow window_;
  TermMap terms_;
};

// ---------------------------------------------------------------------------
// Plethystic exponential

// Exp(f) = exp(sum_{n>=1} psi_n(f)/n) with psi_n the Adams operation; f must
// have no constant (d,k) = (0,0) term, and any d = 0 terms must sit on one
// side of q so the truncation terminates.
inline GradedSeries plethystic_exp(const GradedSeries& f) {
  const auto& w = f.window();
  bool has_pos_q0 = false, has_neg_q0 = false;
  for (const auto& [key, c] : f.terms()) {
    bool dzero = true;
    for (const auto& v : key.first)
      if (v != 0) dzero = false;
    if (dzero) {
      if (key.second == 0) throw DomainError("plethystic_exp: nonzero constant term");
      (key.second > 0 ? has_pos_q0 : has_neg_q0) = true;
    }
  }
  if (has_pos_q0 && has_neg_q0)
    throw DomainError("plethystic_exp: weight-zero terms of mixed q-sign do not truncate");

  // g = sum_n psi_n(f)/n ; n is bounded by the window in every direction
  GradedSeries g(w);
  int zbound = 0;
  for (int i = 0; i < w.max_weight.size(); ++i)
    zbound = std::max(zbound, to_int(w.max_weight[i]));
  int qbound = std::max(std::abs(w.qmin), std::abs(w.qmax));
  int nmax = std::max(1, std::max(zbound, qbound));
  for (int n = 1; n <= nmax; ++n) {
    GradedSeries a = f.adams(n);
    if (a.is_zero()) continue;
    g += Rat(1, n) * a;
  }
  // exp(g): every term moves strictly away from (0,0), so powers die out
  GradedSeries result = GradedSeries::one(w);
  GradedSeries power = GradedSeries::one(w);
  for (int m = 1;; ++m) {
    power = power * g;
    if (power.is_zero()) break;
    result += Rat(1, factorial(m)) * power;
    if (m > 4 * (nmax + 1) * (w.max_weight.size() + 1))
      throw InternalError("plethystic_exp: exponential failed to truncate");
  }
  return result;
}

// (1 - q^{-1})^{-expo} truncated to the window.
inline GradedSeries torus_prefactor(const TruncationWindow& w, int expo) {
  GradedSeries s(w);
  DimVector zero(w.max_weight.size());
  for (int j = 0; -j >= w.qmin; ++j)
    s.add_term(zero, -j, Rat(binomial(Int(expo) + j - 1, static_cast<unsigned>(j))));
  return s;
}

// ---------------------------------------------------------------------------
// Slope filters

struct SlopeSet {
  enum Kind { All, Finite, Interval } kind = All;
  std::set<Rat> values;              // Finite
  bool lo_inf = true, hi_inf = true; // Interval (lo, hi], infinities allowed
  Rat lo = 0, hi = 0;

  static SlopeSet all() { return {}; }
  static SlopeSet finite(std::set<Rat> vals) {
    SlopeSet s;
    s.kind = Finite;
    s.values = std::move(vals);
    return s;
  }
  static SlopeSet interval(std::optional<Rat> lo, std::optional<Rat> hi) {
    SlopeSet s;
    s.kind = Interval;
    s.lo_inf = !lo.has_value();
    s.hi_inf = !hi.has_value();
    if (lo) s.lo = *lo;
    if (hi) s.hi = *hi;
    return s;
  }
  static SlopeSet empty() { return finite({}); }

  bool contains(const Rat& mu) const {
    switch (kind) {
      case All: return true;
      case Finite: return values.count(mu) > 0;
      case Interval:
        if (!lo_inf && !(mu > lo)) return false;
        if (!hi_inf && !(mu <= hi)) return false;
        return true;
    }
    return false;
  }
};

// ---------------------------------------------------------------------------
// Character generating functions

namespace detail {

// enumerate 0 < d <= max_weight (componentwise)
template <typename F>
void for_each_weight(const DimVector& max_weight, F&& fn) {
  int n = max_weight.size();
  DimVector d(n);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      if (!d.is_zero()) fn(d);
      return;
    }
    for (Int v = 0; v <= max_weight[i]; ++v) {
      d[i] = v;
      self(self, i + 1);
    }
    d[i] = 0;
  };
  rec(rec, 0);
}

// A_d(q^{-1}) / (1 - q^{-1}) * z^d summed over admissible d, truncated
inline GradedSeries kac_argument(const Quiver& q, const AffineData& ad,
                                 const TruncationWindow& w,
                                 const CoweightVector* theta,
                                 const SlopeSet* slopes) {
  GradedSeries arg(w);
  for_each_weight(w.max_weight, [&](const DimVector& d) {
    if (theta && slopes && !slopes->contains(slope(*theta, d))) return;
    KacPolynomial a = kac_polynomial(q, d, ad);
    if (a.is_zero()) return;
    for (std::size_t k = 0; k < a.coeff.size(); ++k) {
      if (a.coeff[k] == 0) continue;
      // a_k q^{-k} * (1 + q^{-1} + q^{-2} + ...)
      for (int j = 0; -(static_cast<int>(k) + j) >= w.qmin; ++j)
        arg.add_term(d, -(static_cast<int>(k) + j), Rat(a.coeff[k]));
    }
  });
  return arg;
}

}  // namespace detail

// Graded dimension series (1-q^{-1})^{-dim_torus} Exp( sum_d A_d(q^{-1})
// /(1-q^{-1}) z^d ) truncated to the window. Coefficients are the graded
// dimensions of the nilpotent Hall algebra of the quiver.
inline GradedSeries coha_character(const Quiver& q, const TruncationWindow& w,
                                   int dim_torus = 0) {
  AffineData ad = find_delta(q);
  GradedSeries arg = detail::kac_argument(q, ad, w, nullptr, nullptr);
  GradedSeries e = plethystic_exp(arg);
  if (dim_torus == 0) return e;
  return e * torus_prefactor(w, dim_torus);
}

// Same, restricted to weights whose theta-slope lies in `slopes`; the torus
// prefactor exponent is a parameter (the paper's convention has 2).
inline GradedSeries semistable_character(const Quiver& q, const CoweightVector& theta,
                                         const SlopeSet& slopes,
                                         const TruncationWindow& w,
                                         int prefactor_exponent = 2) {
  AffineData ad = find_delta(q);
  GradedSeries arg = detail::kac_argument(q, ad, w, &theta, &slopes);
  GradedSeries e = plethystic_exp(arg);
  if (prefactor_exponent == 0) return e;
  return e * torus_prefactor(w, prefactor_exponent);
}

// All slopes realized by weights inside the window.
inline std::set<Rat> slopes_in_window(const Quiver& q, const CoweightVector& theta,
                                      const TruncationWindow& w) {
  std::set<Rat> out;
  detail::for_each_weight(w.max_weight,
                          [&](const DimVector& d) { out.insert(slope(theta, d)); });
  return out;
}

}  // namespace qalg
