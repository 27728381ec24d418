#pragma once

// Braid operators T_i = exp(ad x_i^+) exp(-ad x_i^-) exp(ad x_i^+) on the
// elliptic loop algebra and its enveloping algebra, translation operators
// L_lambda in closed form, and the truncated operators pr . T_w on U(n_ell).

#include "quiveralg/env.hpp"

namespace qalg {

class LoopBraid {
 public:
  explicit LoopBraid(EnvAlgebra& env) : env_(env) {}

  // exp(ad x)(v), truncated by local nilpotency; the guard is twice the
  // height bound of the weight window reachable from v.
  LieEltLoop exp_ad(const LieEltLoop& x, const LieEltLoop& v, int guard = 64) const {
    LieEltLoop acc = v, term = v;
    for (int k = 1; !term.empty(); ++k) {
      if (k > guard)
        throw DomainError("exp_ad: nilpotency not reached within the grading window");
      term = env_.loop().bracket(x, term);
      term = loop_scale(Rat(1, k), term);
      acc = loop_sum(acc, term);
    }
    return acc;
  }

  // T_i^{eps} on a Lie element; eps = -1 gives the inverse operator.
  LieEltLoop braid_T(int i, const LieEltLoop& v, int exponent = 1) const {
    const LoopAlgebra& L = env_.loop();
    LieEltLoop xp = L.chevalley_x(i, true);
    LieEltLoop xm = L.chevalley_x(i, false);
    if (exponent == 1)
      return exp_ad(xp, exp_ad(loop_scale(-1, xm), exp_ad(xp, v)));
    return exp_ad(loop_scale(-1, xp), exp_ad(xm, exp_ad(loop_scale(-1, xp), v)));
  }

  // apply T_i factorwise to a PBW element and renormalize
  EnvElt braid_T(int i, const EnvElt& x, int exponent = 1) {
    EnvElt out;
    for (const auto& [w, c] : x) {
      EnvElt prod = {{Word{}, c}};
      for (int id : w) {
        LieEltLoop img = braid_T(i, env_.lie_of(id), exponent);
        prod = env_concat(prod, env_.from_lie(img));
      }
      out = env_sum(out, prod);
    }
    return env_.normalize(out);
  }

  // Full braid word acting as an operator: the rightmost letter acts first,
  // matching the matrix product of the letters. Automorphism letters are not
  // realized on the loop algebra.
  EnvElt braid_word(const BraidWord& bw, EnvElt x) {
    for (auto it = bw.letters.rbegin(); it != bw.letters.rend(); ++it) {
      if (it->kind != BraidLetter::Generator)
        throw DomainError("braid_word: automorphism letters are not realized on the loop algebra");
      x = braid_T(it->index, x, it->exponent);
    }
    return x;
  }
  LieEltLoop braid_word(const BraidWord& bw, LieEltLoop x) const {
    for (auto it = bw.letters.rbegin(); it != bw.letters.rend(); ++it) {
      if (it->kind != BraidLetter::Generator)
        throw DomainError("braid_word: automorphism letters are not realized on the loop algebra");
      x = braid_T(it->index, x, it->exponent);
    }
    return x;
  }

  // Truncated operator pr . T_w (then re-normalized); x must lie in U(n_ell).
  EnvElt truncated_braid(int i, const EnvElt& x) {
    return env_.project_negative(braid_T(i, x));
  }
  EnvElt truncated_braid_word(const BraidWord& bw, const EnvElt& x) {
    return env_.project_negative(braid_word(bw, x));
  }

  // ---------------------------------------------------------------------
  // Translation operators in closed form. For lambda in the finite coweight
  // lattice (entries indexed by vertices 1..e of the affine quiver):
  //   root vectors:  x_alpha s^n t^m -> (-1)^{(lambda,alpha)} x_alpha
  //                  s^{n-(lambda,alpha)} t^m
  //   Cartan:        h_j s^k t^l     -> h_j s^k t^l - (lambda,alpha_j) c(k,l)
  //   central:       fixed.
  // The Cartan correction is forced by applying L to [e s^a t^l, f s^b]; it
  // vanishes inside U(n_ell) computations, where no s^0 t^0 Cartan appears.

  // pairing of a finite coweight with the finite weight of a basis element
  // lambda_fin: vector of rationals indexed by finite vertices 0..e-1
  LieEltLoop translate(const std::vector<Rat>& lambda_fin, const LieEltLoop& v) const {
    const LoopAlgebra& L = env_.loop();
    const RootSystemF& rs = L.finite();
    LieEltLoop out;
    for (const auto& [k, c] : v) {
      if (k.kind == LoopKey::Central) {
        loop_add(out, k, c);
        continue;
      }
      if (rs.is_cartan(k.fin)) {
        loop_add(out, k, c);
        int j = rs.cartan_vertex(k.fin);
        // Cartan correction -(lambda, alpha_j) c(s, t); the symbol c(s, 0)
        // with s != 0 does not exist (s^{s-1} ds is exact), so no correction
        // arises there. lambda_fin[j] stores the value (lambda, alpha_j).
        Rat p = lambda_fin[j];
        if (p != 0 && !(k.s != 0 && k.t == 0))
          loop_add(out, LoopKey::central(k.s, k.t), -p * c);
        continue;
      }
      DimVector alpha = rs.weight(k.fin);
      Rat p = 0;
      for (int j = 0; j < alpha.size(); ++j) p += lambda_fin[j] * Rat(alpha[j]);
      if (denominator(p) != 1)
        throw DomainError("translate: non-integral pairing");
      Int pi = numerator(p);
      Rat sign = (pi % 2 == 0) ? 1 : -1;
      loop_add(out, LoopKey::elem(k.fin, k.s - to_int(pi), k.t), sign * c);
    }
    return out;
  }

  EnvElt translate(const std::vector<Rat>& lambda_fin, const EnvElt& x) {
    EnvElt out;
    for (const auto& [w, c] : x) {
      EnvElt prod = {{Word{}, c}};
      for (int id : w)
        prod = env_concat(prod, env_.from_lie(translate(lambda_fin, env_.lie_of(id))));
      out = env_sum(out, prod);
    }
    return env_.normalize(out);
  }

 private:
  EnvAlgebra& env_;
};

}  // namespace qalg
