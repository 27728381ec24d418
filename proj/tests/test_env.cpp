#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "quiveralg/env.hpp"

using namespace qalg;

namespace {
Quiver kronecker() { return Quiver(2, {{1, 0}, {1, 0}}, "A1~"); }
Quiver affine_a2() { return Quiver(3, {{0, 1}, {1, 2}, {2, 0}}, "A2~"); }

EnvAlgebra make_env(const Quiver& q) {
  return EnvAlgebra(q, standard_theta(q, find_delta(q)));
}
}  // namespace

TEST_CASE("pbw normalize is a normal form") {
  EnvAlgebra env = make_env(kronecker());
  const RootSystemF& rs = env.loop().finite();

  // already ordered monomial is fixed
  EnvElt f = env.from_lie(env.loop().chevalley_x(1, false));
  EnvElt es1 = env.from_lie(env.loop().chevalley_x(0, false));
  EnvElt prod = env.mul(es1, f);  // slope(es1 weight) = -1 < slope(f) = 1
  REQUIRE(env.normalize(prod) == prod);
  for (const auto& [w, c] : prod) REQUIRE(w.size() == 2);

  // f * (e s^-1) rewrites to (e s^-1) f - h s^-1
  EnvElt fe = env.mul(f, es1);
  EnvElt hs1;
  env_add(hs1, Word{env.intern(LoopKey::elem(rs.h(0), -1, 0))}, -1);
  EnvElt expect = env_sum(prod, hs1);
  REQUIRE(fe == expect);

  // normalizing twice equals normalizing once (on random products)
  std::mt19937 rng(61);
  std::vector<LieEltLoop> gens;
  for (int i = 0; i < 2; ++i) {
    gens.push_back(env.loop().chevalley_x(i, false));
    gens.push_back(env.loop().chevalley_x(i, true));
    gens.push_back(env.loop().chevalley_h(i));
  }
  for (int trial = 0; trial < 20; ++trial) {
    EnvElt x = env.one();
    int len = 2 + int(rng() % 3);
    for (int k = 0; k < len; ++k)
      x = env_concat(x, env.from_lie(gens[rng() % gens.size()]));
    EnvElt n1 = env.normalize(x);
    REQUIRE(env.normalize(n1) == n1);
  }
}

TEST_CASE("xy - yx normalizes to [x,y]") {
  EnvAlgebra env = make_env(affine_a2());
  std::mt19937 rng(67);
  const RootSystemF& rs = env.loop().finite();
  for (int trial = 0; trial < 30; ++trial) {
    LoopKey a = LoopKey::elem(int(rng() % rs.basis_size()), int(rng() % 5) - 2,
                              int(rng() % 2));
    LoopKey b = LoopKey::elem(int(rng() % rs.basis_size()), int(rng() % 5) - 2,
                              int(rng() % 2));
    LieEltLoop la{{a, 1}}, lb{{b, 1}};
    EnvElt lhs = env_sum(env.mul(env.from_lie(la), env.from_lie(lb)),
                         env_scale(-1, env.mul(env.from_lie(lb), env.from_lie(la))));
    EnvElt rhs = env.normalize(env.from_lie(env.loop().bracket(la, lb)));
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("slope projection is an idempotent monomial filter") {
  EnvAlgebra env = make_env(kronecker());
  SlopeIdealSpec kappa0{env.theta(), SlopeInterval::up_to(0)};

  EnvElt f = env.from_lie(env.loop().chevalley_x(1, false));
  EnvElt es1 = env.from_lie(env.loop().chevalley_x(0, false));

  // f (e s^-1) normalizes to (e s^-1) f - h s^-1; the f factor has slope 1 > 0
  EnvElt x = env.mul(f, es1);
  EnvElt px = env.slope_project(kappa0, x);
  // only -h s^-1 survives
  REQUIRE(px.size() == 1);
  REQUIRE(px.begin()->second == -1);
  REQUIRE(env.slope_project(kappa0, px) == px);

  // elements with all slopes inside survive unchanged
  EnvElt y = env.mul(es1, es1);
  REQUIRE(env.slope_project(kappa0, y) == y);

  // configuration mismatch is rejected
  SlopeIdealSpec other{CoweightVector{1, -1}, SlopeInterval::up_to(0)};
  REQUIRE_THROWS_AS(env.slope_project(other, y), ConfigurationError);
}

TEST_CASE("projection to the negative half") {
  EnvAlgebra env = make_env(kronecker());
  EnvElt e = env.from_lie(env.loop().chevalley_x(1, true));
  EnvElt f = env.from_lie(env.loop().chevalley_x(1, false));
  EnvElt x = env.mul(e, f);  // e f is already normal (e sits in the left block)
  EnvElt p = env.project_negative(x);
  REQUIRE(p.empty());
  REQUIRE(env.project_negative(f) == f);
}

TEST_CASE("graded dimensions match the character series") {
  // Lemma-level agreement: PBW monomial count at (d, t) equals the z^d q^{-t}
  // coefficient of Exp(sum A_d(q^{-1})/(1-q^{-1}) z^d)
  for (const Quiver& q : {kronecker(), affine_a2()}) {
    EnvAlgebra env = make_env(q);
    int n = q.vertex_count();
    DimVector mw(n);
    for (int i = 0; i < n; ++i) mw[i] = 2;
    TruncationWindow w(mw, -3, 0);
    GradedSeries ch = coha_character(q, w, 0);
    detail::for_each_weight(mw, [&](const DimVector& d) {
      for (int t = 0; t <= 3; ++t)
        REQUIRE(env.pbw_dimension(d, t) == ch.coeff(d, -t));
    });
  }
}

TEST_CASE("lie dimensions") {
  EnvAlgebra env = make_env(kronecker());
  AffineData ad = find_delta(kronecker());
  // real root alpha_1: 1-dimensional at t = 0
  REQUIRE(env.lie_dimension(DimVector{0, 1}, 0) == 1);
  REQUIRE(env.lie_dimension(DimVector{0, 1}, 2) == 1);
  // imaginary delta: e = 1 loop Cartan at t = 0; plus the central c_{-1,t} for t >= 1
  REQUIRE(env.lie_dimension(ad.delta, 0) == 1);
  REQUIRE(env.lie_dimension(ad.delta, 1) == 2);
  // non-root
  REQUIRE(env.lie_dimension(DimVector{0, 2}, 0) == 0);
}
