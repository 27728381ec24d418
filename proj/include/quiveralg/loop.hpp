#pragma once

// The elliptic Lie algebra g_f[s^{+-1}, t] (+) K: loop elements x s^k t^m and
// the central basis c_l = t^l s^{-1} ds, c_{k,l} = t^l s^{k-1} ds (k != 0,
// l >= 1). The bracket follows the Kahler-differential description of the
// universal central extension:
//
//   [x a, y b] = [x,y] ab + (x,y) * (b da mod exact forms),
//
// which on monomials a = s^k t^l, b = s^h t^n evaluates to
//
//   k (x,y) c_{l+n}                              if k + h = 0,
//   ((kn - lh)/(l+n)) (x,y) c_{k+h, l+n}         if k + h != 0, l + n >= 1,
//   0                                            if k + h != 0, l + n = 0.
//
// (The middle coefficient comes from reducing s^{k+h} t^{l+n-1} dt by the
// exact form d(s^{k+h} t^{l+n}); it is rational, not integral, in general.)

#include <map>
#include <sstream>
#include <string>

#include "quiveralg/lie.hpp"
#include "quiveralg/weyl.hpp"

namespace qalg {

struct LoopKey {
  enum Kind : int { Elem = 0, Central = 1 };
  int kind = Elem;
  int fin = -1;  // Elem: basis index in g_f
  int s = 0;     // Elem: s-exponent; Central: k (0 means c_l)
  int t = 0;     // Elem: t-degree (>= 0); Central: l

  auto tie() const { return std::tuple(kind, fin, s, t); }
  bool operator<(const LoopKey& o) const { return tie() < o.tie(); }
  bool operator==(const LoopKey& o) const { return tie() == o.tie(); }

  static LoopKey elem(int fin, int s, int t = 0) { return {Elem, fin, s, t}; }
  static LoopKey central(int k, int l) { return {Central, -1, k, l}; }
};

using LieEltLoop = std::map<LoopKey, Rat>;

inline void loop_add(LieEltLoop& out, const LoopKey& k, const Rat& c) {
  if (c == 0) return;
  auto it = out.find(k);
  if (it == out.end())
    out.emplace(k, c);
  else {
    it->second += c;
    if (it->second == 0) out.erase(it);
  }
}

inline LieEltLoop loop_scale(const Rat& c, LieEltLoop x) {
  if (c == 0) return {};
  for (auto& [k, v] : x) v *= c;
  return x;
}

inline LieEltLoop loop_sum(LieEltLoop a, const LieEltLoop& b) {
  for (const auto& [k, c] : b) loop_add(a, k, c);
  return a;
}

// Context shared by the loop-algebra layer: the affine quiver, its finite
// root system, the embedding of finite weights, and the grading data.
class LoopAlgebra {
 public:
  explicit LoopAlgebra(Quiver affine)
      : q_(std::move(affine)), ad_(find_delta(q_)), rs_(finite_part(q_)) {}

  const Quiver& quiver() const { return q_; }
  const AffineData& affine_data() const { return ad_; }
  const RootSystemF& finite() const { return rs_; }

  // embedding of the finite weight lattice (vertices 1..e) into Z^I
  DimVector embed(const DimVector& fin) const {
    DimVector d(q_.vertex_count());
    for (int i = 0; i < fin.size(); ++i) d[i + 1] = fin[i];
    return d;
  }

  // horizontal weight in Z^I
  DimVector weight(const LoopKey& k) const {
    if (k.kind == LoopKey::Central) return Int(k.s) * ad_.delta;
    return embed(rs_.weight(k.fin)) + Int(k.s) * ad_.delta;
  }
  int tdegree(const LoopKey& k) const { return k.t; }

  // negative half membership: horizontal weight in -N I \ {0}
  bool in_negative_half(const LoopKey& k) const {
    DimVector w = weight(k);
    return !w.is_zero() && (-w).is_nonnegative();
  }

  // bracket of basis symbols
  LieEltLoop bracket(const LoopKey& a, const LoopKey& b) const {
    LieEltLoop out;
    if (a.kind == LoopKey::Central || b.kind == LoopKey::Central) return out;
    int k = a.s, l = a.t, h = b.s, n = b.t;
    // Lie part
    for (const auto& [z, cz] : rs_.bracket(a.fin, b.fin))
      loop_add(out, LoopKey::elem(z, k + h, l + n), cz);
    // central part
    Rat f = rs_.form(a.fin, b.fin);
    if (f != 0) {
      if (k + h == 0) {
        if (k != 0) loop_add(out, LoopKey::central(0, l + n), Rat(k) * f);
      } else if (l + n >= 1) {
        Rat coef = (Rat(k) * n - Rat(l) * h) / Rat(l + n);
        loop_add(out, LoopKey::central(k + h, l + n), coef * f);
      }
    }
    return out;
  }

  LieEltLoop bracket(const LieEltLoop& a, const LieEltLoop& b) const {
    LieEltLoop out;
    for (const auto& [x, cx] : a)
      for (const auto& [y, cy] : b)
        for (const auto& [z, cz] : bracket(x, y)) loop_add(out, z, cx * cy * cz);
    return out;
  }

  // affine Chevalley generators x_i^{+-} and h_i (t-degree zero): for i != 0
  // the finite generators, for i = 0 the highest-root vectors dressed by s.
  LieEltLoop chevalley_x(int i, bool plus, int tdeg = 0) const {
    LieEltLoop out;
    if (i != 0) {
      int fi = i - 1;
      int idx = plus ? rs_.root_index(DimVector::simple_root(rs_.rank(), fi))
                     : rs_.root_index(-DimVector::simple_root(rs_.rank(), fi));
      loop_add(out, LoopKey::elem(idx, 0, tdeg), plus ? 1 : -1);
      return out;
    }
    int hi = rs_.highest_root_index();
    if (plus) {
      // x_0^+ = X_{-phi} s = -e_{-phi} s
      loop_add(out, LoopKey::elem(rs_.e_neg(hi), 1, tdeg), -1);
    } else {
      // x_0^- = X_{phi} s^{-1} = e_{phi} s^{-1}
      loop_add(out, LoopKey::elem(rs_.e_pos(hi), -1, tdeg), 1);
    }
    return out;
  }

  LieEltLoop chevalley_h(int i, int tdeg = 0) const {
    return bracket(chevalley_x(i, true, tdeg), chevalley_x(i, false, 0));
  }

  std::string str(const LieEltLoop& x) const {
    if (x.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : x) {
      if (!first) os << " + ";
      first = false;
      if (c != 1) os << c << "*";
      os << key_name(k);
    }
    return os.str();
  }

  std::string key_name(const LoopKey& k) const {
    std::ostringstream os;
    if (k.kind == LoopKey::Central) {
      if (k.s == 0)
        os << "c[" << k.t << "]";
      else
        os << "c[" << k.s << "," << k.t << "]";
      return os.str();
    }
    os << rs_.basis_name(k.fin);
    if (k.s != 0) os << "s^" << k.s;
    if (k.t != 0) os << "t^" << k.t;
    return os.str();
  }

 private:
  Quiver q_;
  AffineData ad_;
  RootSystemF rs_;
};

}  // namespace qalg
