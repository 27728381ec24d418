#pragma once

// The shuffle algebra of a quiver over the equivariant coefficient ring
// Q[eps_e, hbar]/(eps_e + eps_{e*} = hbar): symmetric polynomials in colored
// variables with the kernel-weighted shuffle product. Starred equivariant
// parameters are eliminated on sight, so the polynomial ring carries one
// eps variable per arrow of Omega plus hbar.
//
// Variable layout for an element of weight d:
//   [ eps_0 .. eps_{m-1}, hbar, z_{0,1..d_0}, z_{1,1..d_1}, ... ]

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "quiveralg/poly.hpp"
#include "quiveralg/quiver.hpp"

namespace qalg {

// Small-integer weight vector for shuffle elements.
using Weight = std::vector<int>;

inline Weight weight_add(const Weight& a, const Weight& b) {
  Weight r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

struct ShuffleElt {
  Weight wt;
  Poly poly;

  bool is_zero() const { return poly.is_zero(); }
  bool operator==(const ShuffleElt& o) const { return wt == o.wt && poly == o.poly; }
};

// Arrow of the doubled quiver from i to j: the arrow itself or a starred one.
struct DoubledArrow {
  int arrow;     // index into Quiver::arrows()
  bool starred;  // eps value is hbar - eps_arrow when starred
};

class ShuffleAlgebra {
 public:
  explicit ShuffleAlgebra(Quiver q, bool flip_hbar_in_zeta = false)
      : q_(std::move(q)),
        n_eps_(q_.arrow_count()),
        flip_hbar_(flip_hbar_in_zeta) {}

  const Quiver& quiver() const { return q_; }
  int eps_count() const { return n_eps_; }
  int hbar_var() const { return n_eps_; }
  int scalar_vars() const { return n_eps_ + 1; }

  int nvars(const Weight& wt) const {
    int n = scalar_vars();
    for (int c : wt) n += c;
    return n;
  }
  int zvar(const Weight& wt, int color, int k) const {
    int idx = scalar_vars();
    for (int i = 0; i < color; ++i) idx += wt[i];
    return idx + k;
  }

  std::vector<DoubledArrow> doubled_arrows(int i, int j) const {
    std::vector<DoubledArrow> out;
    const auto& arr = q_.arrows();
    for (int k = 0; k < static_cast<int>(arr.size()); ++k) {
      if (arr[k].src == i && arr[k].tgt == j) out.push_back({k, false});
      if (arr[k].src == j && arr[k].tgt == i) out.push_back({k, true});
    }
    return out;
  }

  // eps_e as a polynomial in the variable space of size nv
  Poly eps_poly(const DoubledArrow& e, int nv) const {
    Poly x = Poly::variable(nv, e.arrow);
    if (!e.starred) return x;
    return Poly::variable(nv, hbar_var()) - x;
  }

  ShuffleElt zero(const Weight& wt) const { return {wt, Poly(nvars(wt))}; }

  ShuffleElt unit() const {
    Weight wt(q_.vertex_count(), 0);
    return {wt, Poly::constant(nvars(wt), 1)};
  }

  // x^-_{i,l} realized as z_{i,1}^l in weight alpha_i.
  ShuffleElt generator(int i, int l) const {
    Weight wt(q_.vertex_count(), 0);
    wt[i] = 1;
    ShuffleElt e{wt, Poly::variable(nvars(wt), zvar(wt, i, 0), l)};
    return e;
  }

  ShuffleElt scale(const Rat& c, ShuffleElt p) const {
    p.poly *= c;
    return p;
  }
  ShuffleElt add(ShuffleElt p, const ShuffleElt& r) const {
    if (p.wt != r.wt) throw DomainError("shuffle add: weight mismatch");
    p.poly += r.poly;
    return p;
  }

  // Multiply by a scalar-variable polynomial (eps/hbar only), e.g. a
  // coefficient from a relation prefactor given in a scalar space.
  ShuffleElt scalar_mul(const Poly& scalar, const ShuffleElt& p) const {
    int nv = nvars(p.wt);
    std::vector<int> map(scalar.nvars());
    for (int i = 0; i < scalar.nvars(); ++i) map[i] = i;
    return {p.wt, scalar.remap(nv, map) * p.poly};
  }

  bool is_symmetric(const ShuffleElt& p) const {
    int nv = nvars(p.wt);
    for (int i = 0; i < q_.vertex_count(); ++i)
      for (int k = 0; k + 1 < p.wt[i]; ++k) {
        int a = zvar(p.wt, i, k), b = zvar(p.wt, i, k + 1);
        std::vector<int> swp(nv);
        for (int v = 0; v < nv; ++v) swp[v] = v;
        std::swap(swp[a], swp[b]);
        if (p.poly.remap(nv, swp) != p.poly) return false;
      }
    return true;
  }

  ShuffleElt mul(const ShuffleElt& P, const ShuffleElt& Q) const;

  // p_l(z_i) cap P: multiply by the l-th power sum of the color-i variables
  // (l >= 1), or by the scalar d_i for l = 0.
  ShuffleElt taut_action(int l, int i, const ShuffleElt& P) const {
    if (l == 0) return scale(Rat(P.wt[i]), P);
    int nv = nvars(P.wt);
    Poly s(nv);
    for (int k = 0; k < P.wt[i]; ++k)
      s += Poly::variable(nv, zvar(P.wt, i, k), l);
    return {P.wt, s * P.poly};
  }

  // Specialization eps_e -> eps_1, eps_{e*} -> eps_2 (i.e. hbar -> eps_1 +
  // eps_2): a ring map into the two-parameter coefficient ring. The resulting
  // layout is [eps_1, eps_2, z...].
  ShuffleElt specialize_two_param(const ShuffleElt& P) const {
    int nv = nvars(P.wt);
    int nz = nv - scalar_vars();
    // work in [orig..., E1, E2]
    int big = nv + 2;
    Poly r = P.poly.remap(big, identity_map(nv));
    Poly e1 = Poly::variable(big, nv), e2 = Poly::variable(big, nv + 1);
    for (int e = 0; e < n_eps_; ++e) r = r.substitute(e, e1);
    r = r.substitute(hbar_var(), e1 + e2);
    std::vector<int> fin(big, 0);  // dead slots map anywhere
    for (int k = 0; k < nz; ++k) fin[scalar_vars() + k] = 2 + k;
    fin[nv] = 0;
    fin[nv + 1] = 1;
    return {P.wt, r.remap(2 + nz, fin)};
  }

  std::vector<std::string> var_names(const Weight& wt) const {
    std::vector<std::string> names;
    for (int e = 0; e < n_eps_; ++e)
      names.push_back("eps_" + q_.arrows()[e].label);
    names.push_back("hbar");
    for (int i = 0; i < q_.vertex_count(); ++i)
      for (int k = 0; k < wt[i]; ++k)
        names.push_back("z_" + std::to_string(i) + "_" + std::to_string(k + 1));
    return names;
  }

 private:
  static std::vector<int> identity_map(int n) {
    std::vector<int> m(n);
    for (int i = 0; i < n; ++i) m[i] = i;
    return m;
  }

  Quiver q_;
  int n_eps_;
  bool flip_hbar_;

  template <typename F>
  void for_each_split(const Weight& total, const Weight& left, F&& fn) const;
};

// ---------------------------------------------------------------------------

template <typename F>
void ShuffleAlgebra::for_each_split(const Weight& total, const Weight& left,
                                    F&& fn) const {
  // iterate over per-color subsets A_i of {0..total_i-1} with |A_i| = left_i
  int nc = q_.vertex_count();
  std::vector<std::vector<int>> A(nc);
  auto rec = [&](auto&& self, int color) -> void {
    if (color == nc) {
      fn(A);
      return;
    }
    int n = total[color], k = left[color];
    std::vector<int> sel(k);
    auto choose = [&](auto&& me, int pos, int start) -> void {
      if (pos == k) {
        A[color] = sel;
        self(self, color + 1);
        return;
      }
      for (int v = start; v < n; ++v) {
        sel[pos] = v;
        me(me, pos + 1, v + 1);
      }
    };
    choose(choose, 0, 0);
  };
  rec(rec, 0);
}

inline ShuffleElt ShuffleAlgebra::mul(const ShuffleElt& P, const ShuffleElt& Q) const {
  int nc = q_.vertex_count();
  Weight n = weight_add(P.wt, Q.wt);
  int nv = nvars(n);
  Poly total(nv);

  for_each_split(n, P.wt, [&](const std::vector<std::vector<int>>& A) {
    // complements
    std::vector<std::vector<int>> B(nc);
    for (int i = 0; i < nc; ++i) {
      std::vector<bool> in(n[i], false);
      for (int a : A[i]) in[a] = true;
      for (int v = 0; v < n[i]; ++v)
        if (!in[v]) B[i].push_back(v);
    }
    // remap P and Q variables into the product space
    std::vector<int> mapP(nvars(P.wt)), mapQ(nvars(Q.wt));
    for (int s = 0; s < scalar_vars(); ++s) mapP[s] = mapQ[s] = s;
    for (int i = 0; i < nc; ++i) {
      for (int k = 0; k < P.wt[i]; ++k)
        mapP[zvar(P.wt, i, k)] = zvar(n, i, A[i][k]);
      for (int k = 0; k < Q.wt[i]; ++k)
        mapQ[zvar(Q.wt, i, k)] = zvar(n, i, B[i][k]);
    }
    Poly num = P.poly.remap(nv, mapP) * Q.poly.remap(nv, mapQ);

    int sign = 1;
    Poly hbar = Poly::variable(nv, hbar_var());
    for (int i = 0; i < nc; ++i) {
      for (int a : A[i])
        for (int b : B[i]) {
          Poly za = Poly::variable(nv, zvar(n, i, a));
          Poly zb = Poly::variable(nv, zvar(n, i, b));
          num *= flip_hbar_ ? (za - zb + hbar) : (za - zb - hbar);
          if (b < a) sign = -sign;
        }
      // complement of the split denominator inside the full pair product
      auto vand = [&](const std::vector<int>& side) {
        for (std::size_t x = 0; x < side.size(); ++x)
          for (std::size_t y = x + 1; y < side.size(); ++y)
            num *= Poly::variable(nv, zvar(n, i, side[x])) -
                   Poly::variable(nv, zvar(n, i, side[y]));
      };
      vand(A[i]);
      vand(B[i]);
    }
    for (int i = 0; i < nc; ++i) {
      for (int j = 0; j < nc; ++j) {
        if (i == j) continue;
        auto zf = doubled_arrows(i, j);
        if (zf.empty()) continue;
        for (int a : A[i])
          for (int b : B[j]) {
            Poly diff = Poly::variable(nv, zvar(n, i, a)) -
                        Poly::variable(nv, zvar(n, j, b));
            for (const auto& e : zf) num *= diff + eps_poly(e, nv);
          }
      }
    }
    if (sign < 0) num *= Rat(-1);
    total += num;
  });

  // divide by the full same-color pair product
  for (int i = 0; i < nc; ++i)
    for (int a = 0; a < n[i]; ++a)
      for (int b = a + 1; b < n[i]; ++b) {
        if (total.is_zero()) break;
        total = total.divide_by_difference(zvar(n, i, a), zvar(n, i, b));
      }

  // global sign (-1)^{<d,e>}
  DimVector dd(nc), ee(nc);
  for (int i = 0; i < nc; ++i) {
    dd[i] = P.wt[i];
    ee[i] = Q.wt[i];
  }
  Int euler = euler_form(q_, dd, ee);
  if (euler % 2 != 0) total *= Rat(-1);
  return {n, total};
}

// ---------------------------------------------------------------------------
// Sign twists

// Bilinear form Z^I x Z^I -> Z/2 with Theta(d,e) + Theta(e,d) = (d,e) mod 2.
struct TwistForm {
  std::vector<std::vector<int>> m;  // values on basis pairs, mod 2

  static TwistForm euler(const Quiver& q) {
    int n = q.vertex_count();
    TwistForm t;
    t.m.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Int v = euler_form(q, DimVector::simple_root(n, i), DimVector::simple_root(n, j));
        t.m[i][j] = static_cast<int>(((v % 2) + 2) % 2);
      }
    return t;
  }

  // The resolution twist: Theta(a_i,a_j) = <a_i,a_j> on the finite part,
  // Theta(delta,-) = Theta(-,delta) = 0. Needs the affine basis {delta,
  // alpha_1..alpha_e}; expressed back in the simple-root basis.
  static TwistForm resolution(const Quiver& q, const AffineData& ad) {
    int n = q.vertex_count();
    // alpha_0 = delta - sum_{i>0} r_i alpha_i ; Theta bilinear
    auto theta_basis = [&](int i, int j) -> Int {
      // i,j in {1..n-1}: Euler form; anything with index 0 meaning delta: 0
      if (i == 0 || j == 0) return 0;
      return euler_form(q, DimVector::simple_root(n, i), DimVector::simple_root(n, j));
    };
    TwistForm t;
    t.m.assign(n, std::vector<int>(n, 0));
    // alpha_0 = delta - phi with phi = sum_{i>=1} r_i alpha_i
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Int v = 0;
        // expand alpha_i, alpha_j in {delta, alpha_1..} coordinates
        // alpha_i (i>=1) is itself; alpha_0 = delta - sum r_k alpha_k
        auto expand = [&](int idx) {
          std::vector<Int> c(n, 0);  // c[0] ~ delta coefficient
          if (idx >= 1)
            c[idx] = 1;
          else {
            c[0] = 1;
            for (int k = 1; k < n; ++k) c[k] = -ad.marks[k];
          }
          return c;
        };
        auto ci = expand(i), cj = expand(j);
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            if (ci[a] != 0 && cj[b] != 0) v += ci[a] * cj[b] * theta_basis(a, b);
        t.m[i][j] = static_cast<int>(((v % 2) + 2) % 2);
      }
    return t;
  }

  int value(const Weight& d, const Weight& e) const {
    int v = 0;
    int n = static_cast<int>(m.size());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v += d[i] * m[i][j] * e[j];
    return ((v % 2) + 2) % 2;
  }

  bool valid_for(const Quiver& q) const {
    int n = q.vertex_count();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Int s = sym_form(q, DimVector::simple_root(n, i), DimVector::simple_root(n, j));
        if (((m[i][j] + m[j][i]) % 2) != ((s % 2 + 2) % 2)) return false;
      }
    return true;
  }
};

// m^Theta: twisted product (-1)^{Theta(|P|,|Q|)} P * Q.
inline ShuffleElt twist_mul(const ShuffleAlgebra& sh, const TwistForm& theta,
                            const ShuffleElt& P, const ShuffleElt& Q) {
  ShuffleElt r = sh.mul(P, Q);
  if (theta.value(P.wt, Q.wt) % 2 != 0) r.poly *= Rat(-1);
  return r;
}

// u_gamma for the difference form theta - omega (antisymmetric mod 2): the
// scaling of the algebra isomorphism (A, star_omega) -> (A, star_theta).
inline int twist_iso_sign(const TwistForm& theta, const TwistForm& omega,
                          const Weight& gamma) {
  int n = static_cast<int>(theta.m.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int diff_ij = ((theta.m[i][j] - omega.m[i][j]) % 2 + 2) % 2;
      int diff_ji = ((theta.m[j][i] - omega.m[j][i]) % 2 + 2) % 2;
      if ((diff_ij + diff_ji) % 2 != 0)
        throw DomainError("twist_iso: forms do not share a symmetrization");
    }
  int s = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      s += gamma[i] * gamma[j] * (((theta.m[i][j] - omega.m[i][j]) % 2 + 2) % 2);
  return (s % 2 == 0) ? 1 : -1;
}

inline ShuffleElt twist_iso(const ShuffleAlgebra& sh, const TwistForm& theta,
                            const TwistForm& omega, const ShuffleElt& P) {
  int u = twist_iso_sign(theta, omega, P.wt);
  return u == 1 ? P : sh.scale(Rat(-1), P);
}

}  // namespace qalg
