#pragma once

// Affine and extended affine Weyl group elements acting faithfully on the
// root lattice, the descent algorithm for reduced words, translation
// elements, and words in the braid generators.

#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "quiveralg/quiver.hpp"

namespace qalg {

// Square integer matrix acting on Z^I (column convention: column j is the
// image of the j-th basis vector).
struct IntMatrix {
  int n = 0;
  std::vector<Int> a;  // row-major

  IntMatrix() = default;
  explicit IntMatrix(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_, 0) {}

  static IntMatrix identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const Int& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

  DimVector apply(const DimVector& d) const {
    DimVector r(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r[i] += at(i, j) * d[j];
    return r;
  }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    IntMatrix r(x.n);
    for (int i = 0; i < x.n; ++i)
      for (int k = 0; k < x.n; ++k) {
        const Int& v = x.at(i, k);
        if (v == 0) continue;
        for (int j = 0; j < x.n; ++j) r.at(i, j) += v * y.at(k, j);
      }
    return r;
  }

  bool operator==(const IntMatrix& o) const { return n == o.n && a == o.a; }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }
  bool is_identity() const { return *this == identity(n); }
};

// ---------------------------------------------------------------------------

// Weyl group element, canonicalized by its matrix action on the root lattice.
// Words are cached, never used for equality.
struct WeylElt {
  IntMatrix action;
  std::optional<std::vector<int>> word;  // cached reduced word, left-to-right

  bool operator==(const WeylElt& o) const { return action == o.action; }
  bool is_identity() const { return action.is_identity(); }
  DimVector operator()(const DimVector& d) const { return action.apply(d); }
};

inline WeylElt weyl_identity(int n) { return {IntMatrix::identity(n), {{}}}; }

// s_i: d -> d - (alpha-check_i, d) alpha_i.
inline WeylElt simple_reflection(const Quiver& q, int i) {
  int n = q.vertex_count();
  if (i < 0 || i >= n) throw DomainError("simple_reflection: vertex out of range");
  IntMatrix m = IntMatrix::identity(n);
  for (int j = 0; j < n; ++j) m.at(i, j) -= q.cartan(i, j);
  return {m, {{i}}};
}

inline WeylElt compose(const WeylElt& x, const WeylElt& y) {
  return {x.action * y.action, std::nullopt};
}

// ---------------------------------------------------------------------------
// Diagram automorphisms

// Permutation of the vertex set preserving the Cartan matrix.
struct DiagramAut {
  std::vector<int> perm;  // vertex i maps to perm[i]
  std::string name;

  bool is_identity() const {
    for (int i = 0; i < static_cast<int>(perm.size()); ++i)
      if (perm[i] != i) return false;
    return true;
  }
  IntMatrix matrix() const {
    IntMatrix m(static_cast<int>(perm.size()));
    for (int i = 0; i < static_cast<int>(perm.size()); ++i) m.at(perm[i], i) = 1;
    return m;
  }
  DiagramAut inverse() const {
    DiagramAut r;
    r.perm.resize(perm.size());
    for (int i = 0; i < static_cast<int>(perm.size()); ++i) r.perm[perm[i]] = i;
    r.name = name.empty() ? "" : name + "'";
    return r;
  }
};

inline bool validate_automorphism(const Quiver& q, const std::vector<int>& perm) {
  int n = q.vertex_count();
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (q.cartan(i, j) != q.cartan(perm[i], perm[j])) return false;
  return true;
}

inline DiagramAut identity_automorphism(int n) {
  DiagramAut a;
  a.perm.resize(n);
  for (int i = 0; i < n; ++i) a.perm[i] = i;
  a.name = "id";
  return a;
}

// The rotation generator of the A_n^(1) cycle (vertex i -> i+1 mod n+1);
// requires the affine cycle labelling 0..n.
inline DiagramAut rotation_automorphism(const Quiver& q) {
  int n = q.vertex_count();
  DiagramAut a;
  a.perm.resize(n);
  for (int i = 0; i < n; ++i) a.perm[i] = (i + 1) % n;
  a.name = "rot";
  if (!validate_automorphism(q, a.perm))
    throw DomainError("rotation_automorphism: not an automorphism of this quiver");
  return a;
}

// All diagram automorphisms found by backtracking (fine at these sizes).
inline std::vector<DiagramAut> all_automorphisms(const Quiver& q) {
  int n = q.vertex_count();
  std::vector<DiagramAut> out;
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      DiagramAut a{perm, "aut" + std::to_string(out.size())};
      out.push_back(a);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (q.cartan(i, j) != q.cartan(v, perm[j])) ok = false;
      if (!ok) continue;
      perm[i] = v;
      used[v] = true;
      self(self, i + 1);
      used[v] = false;
      perm[i] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Extended Weyl elements: pi . w with pi a diagram automorphism.

struct ExtWeylElt {
  DiagramAut aut;
  WeylElt weyl;

  IntMatrix action() const { return aut.matrix() * weyl.action; }
  DimVector operator()(const DimVector& d) const { return action().apply(d); }
  bool operator==(const ExtWeylElt& o) const {
    return aut.perm == o.aut.perm && weyl == o.weyl;
  }
};

// (pi,w)(pi',w') = (pi pi', (pi'^{-1} w pi') w').
inline ExtWeylElt compose(const ExtWeylElt& x, const ExtWeylElt& y) {
  ExtWeylElt r;
  int n = static_cast<int>(x.aut.perm.size());
  r.aut.perm.resize(n);
  for (int i = 0; i < n; ++i) r.aut.perm[i] = x.aut.perm[y.aut.perm[i]];
  r.aut.name = x.aut.name + "*" + y.aut.name;
  IntMatrix p = y.aut.matrix();
  IntMatrix pinv = y.aut.inverse().matrix();
  r.weyl = {pinv * x.weyl.action * p * y.weyl.action, std::nullopt};
  return r;
}

// ---------------------------------------------------------------------------
// Braid words

struct BraidLetter {
  enum Kind { Generator, Automorphism } kind = Generator;
  int index = 0;       // generator vertex, or automorphism id (context-defined)
  int exponent = 1;    // +1 or -1 (automorphisms: +1 only)
  std::string aut_name;

  bool operator==(const BraidLetter& o) const {
    return kind == o.kind && index == o.index && exponent == o.exponent &&
           aut_name == o.aut_name;
  }
};

// Word in the braid generators T_i^{+-1} and automorphism tokens. Free
// reduction T_i T_i^{-1} -> (empty) is applied eagerly on append.
struct BraidWord {
  std::vector<BraidLetter> letters;

  void push(const BraidLetter& l) {
    if (!letters.empty() && l.kind == BraidLetter::Generator &&
        letters.back().kind == BraidLetter::Generator &&
        letters.back().index == l.index &&
        letters.back().exponent == -l.exponent) {
      letters.pop_back();
      return;
    }
    letters.push_back(l);
  }
  void push_generator(int i, int exp = 1) { push({BraidLetter::Generator, i, exp, ""}); }
  void push_automorphism(const std::string& name) {
    push({BraidLetter::Automorphism, 0, 1, name});
  }
  void append(const BraidWord& w) {
    for (const auto& l : w.letters) push(l);
  }
  BraidWord inverse() const {
    BraidWord r;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      BraidLetter l = *it;
      if (l.kind == BraidLetter::Generator) l.exponent = -l.exponent;
      else throw DomainError("BraidWord::inverse: automorphism letters not invertible here");
      r.push(l);
    }
    return r;
  }
  int length() const { return static_cast<int>(letters.size()); }
  bool empty() const { return letters.empty(); }

  // Image in the (extended) Weyl group: letterwise product of s_i's and
  // automorphism matrices.
  IntMatrix weyl_image(const Quiver& q,
                       const std::vector<DiagramAut>& auts = {}) const {
    IntMatrix m = IntMatrix::identity(q.vertex_count());
    for (const auto& l : letters) {
      if (l.kind == BraidLetter::Generator) {
        m = m * simple_reflection(q, l.index).action;  // s_i^{-1} = s_i
      } else {
        bool found = false;
        for (const auto& a : auts)
          if (a.name == l.aut_name) {
            m = m * a.matrix();
            found = true;
            break;
          }
        if (!found) throw DomainError("weyl_image: unknown automorphism " + l.aut_name);
      }
    }
    return m;
  }

  // Serialization: signed integers +-(i+1) for T_i^{+-1}, names for tokens.
  std::string str() const {
    std::string s = "[";
    bool first = true;
    for (const auto& l : letters) {
      if (!first) s += " ";
      first = false;
      if (l.kind == BraidLetter::Generator)
        s += std::to_string(l.exponent * (l.index + 1));
      else
        s += l.aut_name;
    }
    return s + "]";
  }
};

// ---------------------------------------------------------------------------
// Reduced words via the descent algorithm

struct MalformedElementError : DomainError {
  using DomainError::DomainError;
};

namespace detail {

inline bool has_negative_coord(const DimVector& d) {
  return std::any_of(d.c.begin(), d.c.end(), [](const Int& v) { return v < 0; });
}

}  // namespace detail

// Reduced word of w as a product of simple reflections, smallest descent
// first within each step (deterministic). Returns letters i_1..i_l with
// w = s_{i_1} ... s_{i_l}. Throws MalformedElementError if w is not in the
// group generated by the simple reflections (length cap exceeded or stuck).
inline std::vector<int> reduced_word_weyl(const Quiver& q, const WeylElt& w,
                                          int length_cap = 4096) {
  WeylElt cur = w;
  std::vector<int> rev;
  int n = q.vertex_count();
  while (!cur.is_identity()) {
    if (static_cast<int>(rev.size()) > length_cap)
      throw MalformedElementError("reduced_word: length cap exceeded");
    int descent = -1;
    for (int i = 0; i < n; ++i) {
      // i is a right descent iff w(alpha_i) is a negative root.
      DimVector im = cur(DimVector::simple_root(n, i));
      if (detail::has_negative_coord(im)) {
        descent = i;
        break;
      }
    }
    if (descent < 0)
      throw MalformedElementError("reduced_word: no descent but not the identity");
    cur = compose(cur, simple_reflection(q, descent));  // w s_i, shorter
    rev.push_back(descent);
  }
  return {rev.rbegin(), rev.rend()};
}

inline BraidWord reduced_word(const Quiver& q, const WeylElt& w, int cap = 4096) {
  BraidWord bw;
  for (int i : reduced_word_weyl(q, w, cap)) bw.push_generator(i);
  return bw;
}

// Reduced word of an extended element (automorphism token first).
inline BraidWord reduced_word(const Quiver& q, const ExtWeylElt& w, int cap = 4096) {
  BraidWord bw;
  if (!w.aut.is_identity()) bw.push_automorphism(w.aut.name);
  for (int i : reduced_word_weyl(q, w.weyl, cap)) bw.push_generator(i);
  return bw;
}

inline Int weyl_length(const Quiver& q, const WeylElt& w) {
  return Int(reduced_word_weyl(q, w).size());
}

// ---------------------------------------------------------------------------
// Translation elements

struct FactorizationUnavailable : DomainError {
  IntMatrix pure_action;
  FactorizationUnavailable(const std::string& what, IntMatrix act)
      : DomainError(what), pure_action(std::move(act)) {}
};

// The matrix of t_lambda: d -> d - (lambda, d) delta. lambda must be integral.
inline IntMatrix translation_action(const Quiver& q, const AffineData& ad,
                                    const CoweightVector& lambda) {
  if (!lambda.is_integral())
    throw DomainError("translation_action: lambda must be an integral coweight");
  int n = q.vertex_count();
  IntMatrix m = IntMatrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.at(i, j) -= ad.delta[i] * Int(numerator(lambda[j]));
  return m;
}

// Factor t_lambda = (automorphism, affine Weyl element) over the supplied
// automorphism group; throws FactorizationUnavailable (carrying the pure
// action) when no supplied automorphism works.
inline ExtWeylElt translation_element(const Quiver& q, const AffineData& ad,
                                      const CoweightVector& lambda,
                                      const std::vector<DiagramAut>& auts = {},
                                      int cap = 4096) {
  IntMatrix act = translation_action(q, ad, lambda);
  std::vector<DiagramAut> candidates = {identity_automorphism(q.vertex_count())};
  candidates.insert(candidates.end(), auts.begin(), auts.end());
  for (const auto& pi : candidates) {
    IntMatrix rest = pi.inverse().matrix() * act;
    WeylElt cand{rest, std::nullopt};
    try {
      auto word = reduced_word_weyl(q, cand, cap);
      WeylElt wp = cand;
      wp.word = word;
      return {pi, wp};
    } catch (const MalformedElementError&) {
      continue;
    }
  }
  throw FactorizationUnavailable(
      "translation_element: no supplied diagram automorphism completes the factorization",
      act);
}

// L_lambda as a braid word: T_{lambda_1} T_{lambda_2}^{-1} for a splitting
// lambda = lambda_1 - lambda_2 into dominant coweights of the finite part
// (componentwise positive/negative parts in the fundamental-coweight
// coordinates). lambda is given in the omega-check basis of the affine quiver
// with (lambda, delta) = 0.
//
// When both factors carry the same diagram automorphism gamma (always the
// case for lambda in the coroot lattice), the automorphisms cancel by
// conjugation, gamma T_i gamma^{-1} = T_{gamma(i)}, and the result is a pure
// generator word; a leftover automorphism is emitted as a token.
inline BraidWord braid_L_lambda(const Quiver& q, const AffineData& ad,
                                const CoweightVector& lambda,
                                const std::vector<DiagramAut>& auts = {},
                                int cap = 4096) {
  int n = q.vertex_count();
  if (pairing(lambda, ad.delta) != 0)
    throw DomainError("braid_L_lambda: lambda must pair to zero with delta");
  CoweightVector lp(n), lm(n);
  for (int i = 1; i < n; ++i) {
    if (lambda[i] >= 0)
      lp[i] = lambda[i];
    else
      lm[i] = -lambda[i];
  }
  Rat s1 = 0, s2 = 0;
  for (int i = 1; i < n; ++i) {
    s1 += Rat(ad.marks[i]) * lp[i];
    s2 += Rat(ad.marks[i]) * lm[i];
  }
  lp[0] = -s1;
  lm[0] = -s2;

  if (lm.is_zero()) {
    if (lp.is_zero()) return {};
    return reduced_word(q, translation_element(q, ad, lp, auts, cap), cap);
  }
  auto t2 = translation_element(q, ad, lm, auts, cap);
  if (lp.is_zero()) {
    if (!t2.aut.is_identity())
      throw FactorizationUnavailable(
          "braid_L_lambda: cannot invert an automorphism-bearing word",
          translation_action(q, ad, lm));
    return reduced_word(q, t2.weyl, cap).inverse();
  }
  auto t1 = translation_element(q, ad, lp, auts, cap);
  // T_{l1} T_{l2}^{-1} = (g1 g2^{-1}) . (g2 u g2^{-1}) (g2 v g2^{-1})^{-1}
  // with T_{l1} = g1 u, T_{l2} = g2 v
  DiagramAut g2 = t2.aut;
  DiagramAut gnet;
  gnet.perm.resize(n);
  auto g2inv = g2.inverse();
  for (int i = 0; i < n; ++i) gnet.perm[i] = t1.aut.perm[g2inv.perm[i]];
  gnet.name = t1.aut.name + "*" + g2inv.name;
  BraidWord word;
  if (!gnet.is_identity()) word.push_automorphism(gnet.name);
  for (int i : reduced_word_weyl(q, t1.weyl, cap))
    word.push_generator(g2.perm[i]);
  BraidWord w2;
  for (int i : reduced_word_weyl(q, t2.weyl, cap)) w2.push_generator(g2.perm[i]);
  word.append(w2.inverse());
  return word;
}

}  // namespace qalg
