#pragma once

// Quivers without edge loops and the lattice apparatus attached to them:
// dimension vectors, coweights, Euler forms, affine root data, and the closed
// form of Kac polynomials for affine ADE quivers.

#include <algorithm>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "quiveralg/rational.hpp"

namespace qalg {

struct Arrow {
  int src;
  int tgt;
  std::string label;
};

class Quiver {
 public:
  Quiver(int vertices, std::vector<std::pair<int, int>> arrows,
         std::string type_tag = "")
      : nv_(vertices), type_tag_(std::move(type_tag)) {
    arrows_.reserve(arrows.size());
    int k = 0;
    for (auto [s, t] : arrows) {
      if (s < 0 || s >= nv_ || t < 0 || t >= nv_)
        throw DomainError("quiver arrow endpoint out of range");
      if (s == t) throw DomainError("quiver has an edge loop");
      arrows_.push_back({s, t, "a" + std::to_string(k++)});
    }
  }

  int vertex_count() const { return nv_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::string& type_tag() const { return type_tag_; }

  // Number of edges between i and j in the underlying graph (i != j); this is
  // also the number of arrows i->j in the doubled quiver.
  int edges_between(int i, int j) const {
    int n = 0;
    for (const auto& a : arrows_)
      if ((a.src == i && a.tgt == j) || (a.src == j && a.tgt == i)) ++n;
    return n;
  }

  // Cartan entry a_{ij} of the associated symmetric generalized Cartan matrix.
  int cartan(int i, int j) const { return i == j ? 2 : -edges_between(i, j); }

 private:
  int nv_;
  std::vector<Arrow> arrows_;
  std::string type_tag_;
};

// ---------------------------------------------------------------------------
// Lattice vectors

struct DimVector {
  std::vector<Int> c;

  DimVector() = default;
  explicit DimVector(int n) : c(n, 0) {}
  DimVector(std::initializer_list<Int> v) : c(v) {}

  int size() const { return static_cast<int>(c.size()); }
  Int& operator[](int i) { return c[i]; }
  const Int& operator[](int i) const { return c[i]; }

  static DimVector simple_root(int n, int i) {
    DimVector d(n);
    d.c[i] = 1;
    return d;
  }

  bool is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const Int& v) { return v == 0; });
  }
  bool is_nonnegative() const {
    return std::all_of(c.begin(), c.end(), [](const Int& v) { return v >= 0; });
  }
  bool is_positive() const {
    return std::all_of(c.begin(), c.end(), [](const Int& v) { return v > 0; });
  }
  Int height() const { return std::accumulate(c.begin(), c.end(), Int(0)); }

  friend DimVector operator+(DimVector a, const DimVector& b) {
    for (int i = 0; i < a.size(); ++i) a.c[i] += b.c[i];
    return a;
  }
  friend DimVector operator-(DimVector a, const DimVector& b) {
    for (int i = 0; i < a.size(); ++i) a.c[i] -= b.c[i];
    return a;
  }
  friend DimVector operator*(const Int& k, DimVector a) {
    for (auto& v : a.c) v *= k;
    return a;
  }
  DimVector operator-() const {
    DimVector r = *this;
    for (auto& v : r.c) v = -v;
    return r;
  }
  bool operator==(const DimVector& o) const { return c == o.c; }
  bool operator!=(const DimVector& o) const { return c != o.c; }
  bool operator<(const DimVector& o) const { return c < o.c; }

  friend std::ostream& operator<<(std::ostream& os, const DimVector& d) {
    os << "(";
    for (int i = 0; i < d.size(); ++i) os << (i ? "," : "") << d.c[i];
    return os << ")";
  }
};

// Element of the dual lattice; pairs canonically with DimVector. Rational
// coefficients are allowed (flagged by use), e.g. for stability parameters.
struct CoweightVector {
  std::vector<Rat> c;

  CoweightVector() = default;
  explicit CoweightVector(int n) : c(n, 0) {}
  CoweightVector(std::initializer_list<Rat> v) : c(v) {}

  int size() const { return static_cast<int>(c.size()); }
  Rat& operator[](int i) { return c[i]; }
  const Rat& operator[](int i) const { return c[i]; }

  static CoweightVector fundamental(int n, int i) {
    CoweightVector w(n);
    w.c[i] = 1;
    return w;
  }
  static CoweightVector rho(int n) {
    CoweightVector w(n);
    for (auto& v : w.c) v = 1;
    return w;
  }

  bool is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const Rat& v) { return v == 0; });
  }
  bool is_integral() const {
    return std::all_of(c.begin(), c.end(),
                       [](const Rat& v) { return denominator(v) == 1; });
  }

  friend CoweightVector operator+(CoweightVector a, const CoweightVector& b) {
    for (int i = 0; i < a.size(); ++i) a.c[i] += b.c[i];
    return a;
  }
  friend CoweightVector operator-(CoweightVector a, const CoweightVector& b) {
    for (int i = 0; i < a.size(); ++i) a.c[i] -= b.c[i];
    return a;
  }
  CoweightVector operator-() const {
    CoweightVector r = *this;
    for (auto& v : r.c) v = -v;
    return r;
  }
  friend CoweightVector operator*(const Rat& k, CoweightVector a) {
    for (auto& v : a.c) v *= k;
    return a;
  }
  bool operator==(const CoweightVector& o) const { return c == o.c; }
};

// Canonical pairing (lambda, d) = sum_i lambda_i d_i.
inline Rat pairing(const CoweightVector& l, const DimVector& d) {
  if (l.size() != d.size()) throw DomainError("pairing: size mismatch");
  Rat s = 0;
  for (int i = 0; i < d.size(); ++i) s += l.c[i] * Rat(d.c[i]);
  return s;
}

// ---------------------------------------------------------------------------
// Forms

// Euler form <d,e> = sum_i d_i e_i - sum_{a: i->j} d_i e_j.
inline Int euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
  if (d.size() != q.vertex_count() || e.size() != q.vertex_count())
    throw DomainError("euler_form: dimension vector size mismatch");
  Int s = 0;
  for (int i = 0; i < d.size(); ++i) s += d[i] * e[i];
  for (const auto& a : q.arrows()) s -= d[a.src] * e[a.tgt];
  return s;
}

// Symmetrized Euler form (d,e) = <d,e> + <e,d>; on simple roots this is the
// Cartan matrix.
inline Int sym_form(const Quiver& q, const DimVector& d, const DimVector& e) {
  return euler_form(q, d, e) + euler_form(q, e, d);
}

// Simple coroot pairing (alpha-check_i, d) = sum_j a_{ij} d_j.
inline Int coroot_pairing(const Quiver& q, int i, const DimVector& d) {
  Int s = 0;
  for (int j = 0; j < d.size(); ++j) s += q.cartan(i, j) * d[j];
  return s;
}

// ---------------------------------------------------------------------------
// Affine data

struct AffineData {
  DimVector delta;          // primitive positive radical generator
  std::vector<Int> marks;   // r_i = delta_i, with r_0 = 1
  Int coxeter;              // h = sum r_i
  DimVector highest_root;   // phi = delta - alpha_0
};

namespace detail {

// Kernel of the symmetric Cartan matrix over Q, via fraction-free Gaussian
// elimination. Returns a basis of integer vectors.
inline std::vector<DimVector> cartan_kernel(const Quiver& q) {
  int n = q.vertex_count();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = q.cartan(i, j);
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int p = -1;
    for (int r = row; r < n; ++r)
      if (m[r][col] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[row]);
    Rat inv = m[row][col];
    for (int j = 0; j < n; ++j) m[row][j] /= inv;
    for (int r = 0; r < n; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int j = 0; j < n; ++j) m[r][j] -= f * m[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<DimVector> basis;
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(n, 0);
    v[free] = 1;
    for (int r = 0; r < static_cast<int>(pivot_col.size()); ++r)
      v[pivot_col[r]] = -m[r][free];
    Int lcm = 1;
    for (const auto& x : v) lcm = boost::multiprecision::lcm(lcm, Int(denominator(x)));
    DimVector iv(n);
    for (int i = 0; i < n; ++i) iv[i] = Int(numerator(v[i])) * (lcm / Int(denominator(v[i])));
    Int g = 0;
    for (int i = 0; i < n; ++i) g = boost::multiprecision::gcd(g, iv[i]);
    if (g > 1)
      for (int i = 0; i < n; ++i) iv[i] /= g;
    basis.push_back(iv);
  }
  return basis;
}

}  // namespace detail

// delta, marks, Coxeter number and highest root of an affine ADE quiver whose
// affine vertex is index 0. Errors out when the input is not of affine type.
inline AffineData find_delta(const Quiver& q) {
  auto kernel = detail::cartan_kernel(q);
  if (kernel.size() != 1)
    throw DomainError("find_delta: radical of the symmetrized Euler form is not one-dimensional");
  DimVector delta = kernel[0];
  bool allneg = std::all_of(delta.c.begin(), delta.c.end(),
                            [](const Int& v) { return v <= 0; });
  if (allneg) delta = -delta;
  if (!delta.is_positive())
    throw DomainError("find_delta: radical generator is not componentwise positive");
  if (delta[0] != 1)
    throw DomainError("find_delta: affine vertex must have mark 1 (vertex 0 convention)");
  // Positive semidefiniteness on a crude certificate: (d,d) >= 0 would need a
  // full check; for quivers whose radical is spanned by a positive vector with
  // connected support this characterizes affine type (Vinberg).
  AffineData ad;
  ad.delta = delta;
  ad.marks.assign(delta.c.begin(), delta.c.end());
  ad.coxeter = delta.height();
  ad.highest_root = delta - DimVector::simple_root(q.vertex_count(), 0);
  return ad;
}

// ---------------------------------------------------------------------------
// Kac polynomials (affine ADE closed form)

struct KacPolynomial {
  std::vector<Int> coeff;  // coeff[k] multiplies t^k

  bool is_zero() const { return coeff.empty(); }
  bool operator==(const KacPolynomial& o) const { return coeff == o.coeff; }

  friend std::ostream& operator<<(std::ostream& os, const KacPolynomial& p) {
    if (p.coeff.empty()) return os << "0";
    bool first = true;
    for (std::size_t k = 0; k < p.coeff.size(); ++k) {
      if (p.coeff[k] == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (k == 0 || p.coeff[k] != 1) os << p.coeff[k];
      if (k > 0) os << (p.coeff[k] != 1 ? "*t" : "t");
      if (k > 1) os << "^" << k;
    }
    return os;
  }
};

// Whether d is a positive integer multiple of delta.
inline bool is_delta_multiple(const DimVector& d, const DimVector& delta) {
  if (d.is_zero()) return false;
  Int k;
  bool have_k = false;
  for (int i = 0; i < d.size(); ++i) {
    if (delta[i] == 0) {
      if (d[i] != 0) return false;
      continue;
    }
    if (d[i] % delta[i] != 0) return false;
    Int q = d[i] / delta[i];
    if (!have_k) {
      k = q;
      have_k = true;
    } else if (k != q) {
      return false;
    }
  }
  return have_k && k > 0;
}

// A_d(t) for an affine ADE quiver: 1 on real roots, e + t on positive
// imaginary roots, 0 otherwise (e = rank of the finite part).
inline KacPolynomial kac_polynomial(const Quiver& q, const DimVector& d,
                                    const AffineData& ad) {
  if (!d.is_nonnegative() || d.is_zero()) return {};
  Int dd = sym_form(q, d, d);
  if (dd == 2) return {{1}};
  if (dd == 0 && is_delta_multiple(d, ad.delta)) {
    Int e = q.vertex_count() - 1;
    return {{e, 1}};
  }
  return {};
}

inline KacPolynomial kac_polynomial(const Quiver& q, const DimVector& d) {
  return kac_polynomial(q, d, find_delta(q));
}

// ---------------------------------------------------------------------------
// Slopes

inline Rat slope(const CoweightVector& theta, const DimVector& d) {
  if (d.is_zero()) throw DomainError("slope: undefined for d = 0");
  CoweightVector rho = CoweightVector::rho(d.size());
  return pairing(theta, d) / pairing(rho, d);
}

// Stability coweight with theta_i > 0 on the finite part and theta_0 chosen
// so that (theta, delta) = 0.
inline CoweightVector standard_theta(const Quiver& q, const AffineData& ad) {
  CoweightVector th(q.vertex_count());
  Rat s = 0;
  for (int i = 1; i < q.vertex_count(); ++i) {
    th[i] = 1;
    s += Rat(ad.marks[i]);
  }
  th[0] = -s;
  return th;
}

}  // namespace qalg
