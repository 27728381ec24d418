#pragma once

// Images of the distinguished zero- and one-dimensional classes inside the
// (completed) enveloping algebra, the two A_1 generating-series identities,
// and the stabilizing limit multiplication.

#include <functional>

#include "quiveralg/braid_loop.hpp"

namespace qalg {

struct PrecisionError : DomainError {
  using DomainError::DomainError;
};

class ThetaCalculus {
 public:
  explicit ThetaCalculus(EnvAlgebra& env) : env_(env), braid_(env) {}

  EnvAlgebra& env() { return env_; }
  LoopBraid& braid() { return braid_; }

  // P_0..P_N with exp(sum_{k>=1} h_i s^{-k} u^{-k}/k) = sum_j P_j u^{-j}
  std::vector<EnvElt> cartan_exp_series(int i, int N) {
    std::vector<EnvElt> g(N + 1);  // g[k] = h_i s^{-k} / k
    for (int k = 1; k <= N; ++k)
      g[k] = env_scale(Rat(1, k),
                       env_.from_lie(cartan_s(i, -k)));
    std::vector<EnvElt> out(N + 1);
    out[0] = env_.one();
    std::vector<EnvElt> pow(N + 1);  // current g^m graded by u-order
    pow[0] = env_.one();
    for (int m = 1; m <= N; ++m) {
      std::vector<EnvElt> next(N + 1);
      for (int a = 0; a <= N; ++a)
        for (int b = 1; a + b <= N; ++b)
          if (!pow[a].empty() && !g[b].empty())
            next[a + b] = env_sum(next[a + b], env_.mul(pow[a], g[b]));
      pow = std::move(next);
      Rat inv(1, factorial(m));
      for (int j = 0; j <= N; ++j)
        if (!pow[j].empty()) out[j] = env_sum(out[j], env_scale(inv, pow[j]));
    }
    return out;
  }

  // Theta(Y(i,n)) = (-1)^{n-1} h_i s^{-n}, n >= 1, i a finite vertex (1..e).
  EnvElt theta_Y(int i, int n) {
    if (n < 1) throw DomainError("theta_Y: n >= 1 required");
    EnvElt h = env_.from_lie(cartan_s(i, -n));
    return n % 2 == 1 ? h : env_scale(-1, h);
  }

  // Theta(Z(i,n)) truncated at exp order N:
  //   (-1)^n sum_{j=0}^{N} x_i^+ s^{j-n} P_j(h_i s^{-1}, ...).
  EnvElt theta_Z(int i, int n, int N) {
    if (N < 0) throw DomainError("theta_Z: window must be nonnegative");
    auto P = cartan_exp_series(i, N);
    EnvElt acc;
    for (int j = 0; j <= N; ++j) {
      EnvElt x = env_.from_lie(plus_root_s(i, j - n));
      acc = env_sum(acc, env_.mul(x, P[j]));
    }
    return n % 2 == 0 ? acc : env_scale(-1, acc);
  }

  // ------------------------------------------------------------------
  // A_1 identities in U^-(L sl_2)/J, J = left ideal of positive slopes.

  enum class SeriesKind { HSeries, ESeries };

  struct IdentityResult {
    bool ok;
    EnvElt lhs, rhs;  // after projection mod J
  };

  // order-by-order check of
  //   h: sum_l (-1)^l f^(l) (e s^-1)^(l) u^-l        = exp(sum h s^-k u^-k / k)
  //   e: sum_l (-1)^l f^(l) (e s^-1)^(l+1) u^-l-1    = (sum e s^-k u^-k) exp(...)
  IdentityResult verify_identity_A1(SeriesKind kind, int order) {
    const Quiver& q = env_.loop().quiver();
    if (q.vertex_count() != 2)
      throw DomainError("verify_identity_A1: quiver is not A_1^(1)");
    if (order < 1) throw DomainError("verify_identity_A1: order >= 1");
    SlopeIdealSpec kappa0{env_.theta(), SlopeInterval::up_to(0)};
    EnvElt f = env_.from_lie(env_.loop().chevalley_x(1, false));
    EnvElt es1 = env_.from_lie(env_.loop().chevalley_x(0, false));  // e s^{-1}
    auto P = cartan_exp_series(1, order);

    EnvElt lhs, rhs;
    if (kind == SeriesKind::HSeries) {
      int l = order;
      lhs = env_.mul(env_.divided_power(f, l), env_.divided_power(es1, l));
      if (l % 2 == 1) lhs = env_scale(-1, lhs);
      rhs = P[order];
    } else {
      int l = order - 1;
      lhs = env_.mul(env_.divided_power(f, l), env_.divided_power(es1, l + 1));
      if (l % 2 == 1) lhs = env_scale(-1, lhs);
      for (int k = 1; k <= order; ++k) {
        EnvElt e_k = env_.from_lie(loop_e_power(k));
        rhs = env_sum(rhs, env_.mul(e_k, P[order - k]));
      }
    }
    IdentityResult r;
    r.lhs = env_.slope_project(kappa0, lhs);
    r.rhs = env_.slope_project(kappa0, rhs);
    r.ok = r.lhs == r.rhs;
    return r;
  }

  // ------------------------------------------------------------------
  // Limit multiplication. A limit class is described by a global expansion
  // callback: global(depth) returns a finite element of U(g_ell) containing
  // every term visible at that depth; the depth-l component is
  //   comp_l = projJ( pr( L_{4 l theta_f}( global(l) ) ) ).

  using GlobalExpansion = std::function<EnvElt(int depth)>;

  std::vector<Rat> translation_pairing(int multiple) const {
    // values of (4*multiple*theta_f, alpha_j) on the finite simple roots
    const CoweightVector& th = env_.theta();
    std::vector<Rat> lam(env_.loop().finite().rank());
    for (int j = 0; j < static_cast<int>(lam.size()); ++j)
      lam[j] = Rat(4 * multiple) * th[j + 1];
    return lam;
  }

  EnvElt component(const EnvElt& global, int depth) {
    SlopeIdealSpec kappa0{env_.theta(), SlopeInterval::up_to(0)};
    EnvElt t = braid_.translate(translation_pairing(depth), global);
    return env_.slope_project(kappa0, env_.project_negative(t));
  }

  EnvElt component(const GlobalExpansion& g, int depth) {
    return component(g(depth), depth);
  }

  // push a depth-`from` component down to depth `to` (to <= from)
  EnvElt push_down(const EnvElt& comp, int from, int to) {
    if (to > from) throw DomainError("push_down: target depth must not exceed source");
    SlopeIdealSpec kappa0{env_.theta(), SlopeInterval::up_to(0)};
    EnvElt t = braid_.translate(translation_pairing(to - from), comp);
    return env_.slope_project(kappa0, env_.project_negative(t));
  }

  struct LimitProduct {
    EnvElt component;   // at the requested output depth
    int stabilized_at;  // working depth at which two consecutive depths agreed
  };

  // (x y)_out_depth = push_down(x_n y_n) for n >> 0, detected by agreement of
  // two consecutive working depths.
  LimitProduct limit_multiply(const GlobalExpansion& x, const GlobalExpansion& y,
                              int out_depth, int precision_cap = 8) {
    SlopeIdealSpec kappa0{env_.theta(), SlopeInterval::up_to(0)};
    std::optional<EnvElt> prev;
    for (int n = out_depth; n <= out_depth + precision_cap; ++n) {
      EnvElt prod = env_.mul(component(x, n), component(y, n));
      EnvElt at_out = push_down(env_.slope_project(kappa0, prod), n, out_depth);
      if (prev && *prev == at_out) return {at_out, n - 1};
      prev = std::move(at_out);
    }
    throw PrecisionError("limit_multiply: stabilization not reached at precision cap");
  }

 private:
  // h_i s^k as a Lie element (i = finite vertex index 1..e in affine labels)
  LieEltLoop cartan_s(int i, int sexp) {
    const RootSystemF& rs = env_.loop().finite();
    LieEltLoop h;
    loop_add(h, LoopKey::elem(rs.h(i - 1), sexp, 0), 1);
    return h;
  }
  // x_i^+ s^k
  LieEltLoop plus_root_s(int i, int sexp) {
    const RootSystemF& rs = env_.loop().finite();
    int idx = rs.root_index(DimVector::simple_root(rs.rank(), i - 1));
    LieEltLoop x;
    loop_add(x, LoopKey::elem(idx, sexp, 0), 1);
    return x;
  }
  // e s^{-k} for A_1 (finite vertex 1)
  LieEltLoop loop_e_power(int k) {
    const RootSystemF& rs = env_.loop().finite();
    int idx = rs.root_index(DimVector::simple_root(rs.rank(), 0));
    LieEltLoop x;
    loop_add(x, LoopKey::elem(idx, -k, 0), 1);
    return x;
  }

  EnvAlgebra& env_;
  LoopBraid braid_;
};

}  // namespace qalg
