#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "quiveralg/prep.hpp"
#include "quiveralg/weyl.hpp"

using namespace qalg;

namespace {
Quiver kronecker() { return Quiver(2, {{1, 0}, {1, 0}}, "A1~"); }

PiRep simple_rep(const Quiver& q, int i) {
  PiRep m;
  m.dim = DimVector(q.vertex_count());
  m.dim[i] = 1;
  for (int e = 0; e < q.arrow_count(); ++e) {
    const auto& ar = q.arrows()[e];
    m.x.push_back(QMatrix(dim_at(m, ar.tgt), dim_at(m, ar.src)));
    m.xstar.push_back(QMatrix(dim_at(m, ar.src), dim_at(m, ar.tgt)));
  }
  return m;
}
}  // namespace

TEST_CASE("matrix calculus") {
  QMatrix a(2, 3);
  a.at(0, 0) = 1;
  a.at(0, 1) = 2;
  a.at(1, 2) = 1;
  REQUIRE(a.rank() == 2);
  QMatrix k = a.kernel_basis();
  REQUIRE(k.cols == 1);
  REQUIRE((a * k).is_zero());

  QMatrix m = QMatrix::identity(2);
  m.at(0, 1) = 3;
  auto inv = m.inverse();
  REQUIRE(inv);
  REQUIRE((*inv * m) == QMatrix::identity(2));
  QMatrix sing(2, 2);
  sing.at(0, 0) = 1;
  REQUIRE_FALSE(sing.inverse());
}

TEST_CASE("vertex simple representations") {
  Quiver q = kronecker();
  for (int i = 0; i < 2; ++i) {
    PiRep s = simple_rep(q, i);
    validate_rep(q, s);
    REQUIRE(is_nilpotent(q, s));
    auto tf = torsion_membership(q, s, i);
    // the incoming map to a nonzero space is zero: not in T^{s_i}
    REQUIRE_FALSE(tf.in_T);
    REQUIRE_FALSE(tf.in_F);  // outgoing zero map from a nonzero space
    // at the other vertex everything is vacuous
    auto tf2 = torsion_membership(q, s, 1 - i);
    REQUIRE(tf2.in_T);
    REQUIRE(tf2.in_F);
  }
}

TEST_CASE("Kronecker nilpotent example") {
  Quiver q = kronecker();
  PiRep m;
  m.dim = DimVector{1, 1};
  QMatrix one(1, 1), zero(1, 1);
  one.at(0, 0) = 1;
  m.x = {one, zero};       // x = 1, y = 0 : V_1 -> V_0
  m.xstar = {zero, zero};  // x* = y* = 0
  validate_rep(q, m);
  REQUIRE(is_nilpotent(q, m));

  // chain: C^2 > C > 0
  auto tf0 = torsion_membership(q, m, 0);
  REQUIRE(tf0.in_T);  // (x, y) = (1, 0) surjective onto V_0

  // x = x* = 1 violates the preprojective relation
  PiRep bad = m;
  bad.xstar = {one, zero};
  REQUIRE_FALSE(preprojective_relation_holds(q, bad));
  REQUIRE_THROWS_AS(validate_rep(q, bad), DomainError);
}

TEST_CASE("reflection functor dimension and identity cases") {
  Quiver q = kronecker();
  // vacuous vertex: reflection at a vertex with V_i = 0 and no support around
  PiRep zero;
  zero.dim = DimVector{0, 0};
  for (int e = 0; e < 2; ++e) {
    zero.x.push_back(QMatrix(0, 0));
    zero.xstar.push_back(QMatrix(0, 0));
  }
  PiRep r = reflect(q, zero, 0, ReflectDir::S);
  REQUIRE(r.dim == zero.dim);

  // the nilpotent example above: dim transforms by s_0
  PiRep m;
  m.dim = DimVector{1, 1};
  QMatrix one(1, 1), z11(1, 1);
  one.at(0, 0) = 1;
  m.x = {one, z11};
  m.xstar = {z11, z11};
  PiRep s = reflect(q, m, 0, ReflectDir::S);
  // s_0((1,1)) = (1,1) since (alpha-check_0, (1,1)) = 0
  REQUIRE(s.dim == simple_reflection(q, 0)(m.dim));
  REQUIRE(s.dim == DimVector{1, 1});
}

TEST_CASE("random nilpotent modules: reflection invariants") {
  Quiver q = kronecker();
  std::mt19937 rng(12345);
  int done = 0, attempts = 0;
  while (done < 40 && attempts < 4000) {
    ++attempts;
    DimVector d{Int(1 + rng() % 3), Int(1 + rng() % 3)};
    PiRep m = random_nilpotent_rep(q, d, rng);
    REQUIRE(is_nilpotent(q, m));
    int i = 0;
    if (!torsion_membership(q, m, i).in_T) continue;
    ++done;
    PiRep s = reflect(q, m, i, ReflectDir::S);
    // dimension transforms by the simple reflection
    DimVector sd = simple_reflection(q, i)(m.dim);
    REQUIRE(s.dim == sd);
    // nilpotency is preserved
    REQUIRE(is_nilpotent(q, s));
    // S' S = id up to isomorphism
    PiRep back = reflect(q, s, i, ReflectDir::SPrime);
    REQUIRE(back.dim == m.dim);
    REQUIRE(is_isomorphic(q, back, m, 7) == IsoAnswer::Yes);
  }
  REQUIRE(done == 40);
}

TEST_CASE("nilpotency equals the composition-factor criterion (small dims)") {
  // a finite-dimensional rep is nilpotent iff all Jordan-Hoelder factors are
  // vertex simples; for the Kronecker quiver the only non-vertex-simple
  // composition factors at small dimension come from reps where some loop
  // (path returning to a vertex) acts invertibly. Brute-force: sample tiny
  // reps, compare is_nilpotent with the chain criterion computed differently:
  // nilpotency of the total path operator on sum V_i.
  Quiver q = kronecker();
  std::mt19937 rng(999);
  for (int trial = 0; trial < 200; ++trial) {
    DimVector d{Int(rng() % 3), Int(rng() % 3)};
    if (d.is_zero()) continue;
    // random rep (not necessarily nilpotent): sample x arbitrary, xstar in
    // the kernel of the linearized relation
    PiRep m;
    m.dim = d;
    m.x.assign(2, QMatrix(dim_at(m, 0), dim_at(m, 1)));
    m.xstar.assign(2, QMatrix(dim_at(m, 1), dim_at(m, 0)));
    for (int e = 0; e < 2; ++e)
      for (auto& v : m.x[e].a) v = Rat(int(rng() % 5) - 2);
    // xstar = 0 always satisfies the relation
    validate_rep(q, m);
    // with xstar = 0, all length-2 paths vanish: always nilpotent
    REQUIRE(is_nilpotent(q, m));
  }

  // genuinely non-nilpotent rep: dim (1,1) with x = 1 and y* = 1; the moment
  // blocks are x x* + y y* = 0 at vertex 0 and -(x* x) - (y* y) = 0 at vertex
  // 1, but the path y* x acts as the identity on V_1
  PiRep m;
  m.dim = DimVector{1, 1};
  QMatrix one(1, 1), zero(1, 1);
  one.at(0, 0) = 1;
  m.x = {one, zero};
  m.xstar = {zero, one};
  validate_rep(q, m);
  REQUIRE_FALSE(is_nilpotent(q, m));
}

TEST_CASE("isomorphism testing") {
  Quiver q = kronecker();
  PiRep a;
  a.dim = DimVector{1, 1};
  QMatrix one(1, 1), zero(1, 1), two(1, 1);
  one.at(0, 0) = 1;
  two.at(0, 0) = 2;
  a.x = {one, zero};
  a.xstar = {zero, zero};
  PiRep b = a;
  b.x = {two, zero};  // rescaled: isomorphic via diagonal base change
  REQUIRE(is_isomorphic(q, a, b, 3) == IsoAnswer::Yes);
  PiRep c = a;
  c.x = {zero, zero};  // semisimple, not isomorphic to a
  REQUIRE(is_isomorphic(q, a, c, 3) != IsoAnswer::Yes);
  PiRep d = a;
  d.dim = DimVector{2, 1};
  d.x = {QMatrix(2, 1), QMatrix(2, 1)};
  d.xstar = {QMatrix(1, 2), QMatrix(1, 2)};
  REQUIRE(is_isomorphic(q, a, d) == IsoAnswer::No);
}
