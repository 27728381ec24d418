#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "quiveralg/quiver.hpp"

using namespace qalg;

namespace {

Quiver kronecker() { return Quiver(2, {{1, 0}, {1, 0}}, "A1~"); }
Quiver affine_a2() { return Quiver(3, {{0, 1}, {1, 2}, {2, 0}}, "A2~"); }
Quiver affine_a3() { return Quiver(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, "A3~"); }
// star with center 1, leaves 0 (affine), 2, 3, 4
Quiver affine_d4() {
  return Quiver(5, {{0, 1}, {2, 1}, {3, 1}, {4, 1}}, "D4~");
}

// brute-force positive roots of height <= cap: d with (d,d) == 2
std::set<std::vector<Int>> real_roots_up_to(const Quiver& q, int cap) {
  std::set<std::vector<Int>> out;
  int n = q.vertex_count();
  std::vector<int> box(n, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n) {
      DimVector d(n);
      for (int k = 0; k < n; ++k) d[k] = box[k];
      if (!d.is_zero() && sym_form(q, d, d) == 2) out.insert(d.c);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      box[i] = v;
      self(self, i + 1, left - v);
    }
    box[i] = 0;
  };
  rec(rec, 0, cap);
  return out;
}

}  // namespace

TEST_CASE("euler form on the Kronecker quiver") {
  Quiver q = kronecker();
  DimVector a0 = DimVector::simple_root(2, 0);
  DimVector a1 = DimVector::simple_root(2, 1);
  REQUIRE(euler_form(q, a1, a0) == -2);
  REQUIRE(euler_form(q, a0, a1) == 0);
  REQUIRE(euler_form(q, a0, a0) == 1);
  REQUIRE(euler_form(q, a1, a1) == 1);
  // symmetrization is the Cartan matrix
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      REQUIRE(sym_form(q, DimVector::simple_root(2, i),
                       DimVector::simple_root(2, j)) == q.cartan(i, j));
  REQUIRE_THROWS_AS(euler_form(q, DimVector(3), a0), DomainError);
}

TEST_CASE("cartan matrix shape") {
  for (const Quiver& q : {kronecker(), affine_a2(), affine_d4()}) {
    for (int i = 0; i < q.vertex_count(); ++i) {
      REQUIRE(q.cartan(i, i) == 2);
      for (int j = 0; j < q.vertex_count(); ++j) {
        REQUIRE(q.cartan(i, j) == q.cartan(j, i));
        if (i != j) REQUIRE(q.cartan(i, j) <= 0);
      }
    }
  }
}

TEST_CASE("find_delta on affine types") {
  auto ad1 = find_delta(kronecker());
  REQUIRE(ad1.delta == DimVector{1, 1});
  REQUIRE(ad1.coxeter == 2);
  REQUIRE(ad1.highest_root == DimVector{0, 1});

  auto ad2 = find_delta(affine_a2());
  REQUIRE(ad2.delta == DimVector{1, 1, 1});
  REQUIRE(ad2.coxeter == 3);

  auto ad4 = find_delta(affine_d4());
  REQUIRE(ad4.delta == DimVector{1, 2, 1, 1, 1});
  REQUIRE(ad4.coxeter == 6);

  // delta pairs to zero with everything under the symmetrized form
  for (const Quiver& q : {kronecker(), affine_a2(), affine_a3(), affine_d4()}) {
    auto ad = find_delta(q);
    REQUIRE(ad.delta.is_positive());
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
      DimVector d(q.vertex_count());
      for (int i = 0; i < d.size(); ++i) d[i] = int(rng() % 19) - 9;
      REQUIRE(sym_form(q, ad.delta, d) == 0);
    }
    REQUIRE(Int(ad.coxeter) == ad.delta.height());
    // h = (rho, delta)
    REQUIRE(pairing(CoweightVector::rho(q.vertex_count()), ad.delta) ==
            Rat(ad.coxeter));
  }

  // finite type input has trivial radical
  Quiver a2(2, {{0, 1}});
  REQUIRE_THROWS_AS(find_delta(a2), DomainError);
}

TEST_CASE("kac polynomial closed form") {
  Quiver q = kronecker();
  auto ad = find_delta(q);
  DimVector a0 = DimVector::simple_root(2, 0);
  DimVector a1 = DimVector::simple_root(2, 1);

  REQUIRE(kac_polynomial(q, a0, ad) == KacPolynomial{{1}});
  REQUIRE(kac_polynomial(q, a1, ad) == KacPolynomial{{1}});
  REQUIRE(kac_polynomial(q, ad.delta, ad) == KacPolynomial{{1, 1}});  // 1 + t
  // alpha_0 + 2 alpha_1 = alpha_1 + delta is a real root: (d,d) = 2
  REQUIRE(sym_form(q, a0 + Int(2) * a1, a0 + Int(2) * a1) == 2);
  REQUIRE(kac_polynomial(q, a0 + Int(2) * a1, ad) == KacPolynomial{{1}});
  REQUIRE(kac_polynomial(q, DimVector{1, 3}, ad).is_zero());
  REQUIRE(kac_polynomial(q, DimVector{2, 2}, ad) == KacPolynomial{{1, 1}});

  // nonzero exactly on roots: brute-force oracle up to height 8
  for (const Quiver& qq : {kronecker(), affine_a2()}) {
    auto aad = find_delta(qq);
    int n = qq.vertex_count();
    auto reals = real_roots_up_to(qq, 8);
    std::vector<int> box(n, 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
      if (i == n) {
        DimVector d(n);
        for (int k = 0; k < n; ++k) d[k] = box[k];
        if (d.is_zero()) return;
        bool is_real = reals.count(d.c) > 0;
        bool is_imag = is_delta_multiple(d, aad.delta);
        REQUIRE(kac_polynomial(qq, d, aad).is_zero() == !(is_real || is_imag));
        return;
      }
      for (int v = 0; v <= left; ++v) {
        box[i] = v;
        self(self, i + 1, left - v);
      }
      box[i] = 0;
    };
    rec(rec, 0, 8);
  }
}

TEST_CASE("slope") {
  Quiver q = kronecker();
  auto ad = find_delta(q);
  CoweightVector zero(2);
  CoweightVector theta{-1, 1};

  DimVector a1 = DimVector::simple_root(2, 1);
  REQUIRE(slope(zero, ad.delta) == 0);
  REQUIRE(slope(theta, ad.delta) == 0);
  REQUIRE(slope(theta, a1) == 1);
  REQUIRE_THROWS_AS(slope(theta, DimVector(2)), DomainError);

  // invariance under scaling
  for (int k = 1; k <= 5; ++k) {
    DimVector d{3, 1};
    REQUIRE(slope(theta, Int(k) * d) == slope(theta, d));
  }

  // standard theta satisfies the normalization (theta, delta) = 0
  auto th = standard_theta(q, ad);
  REQUIRE(pairing(th, ad.delta) == 0);
  REQUIRE(th[1] > 0);
}
