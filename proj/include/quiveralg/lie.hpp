#pragma once

// Simply-laced simple Lie algebras built from a finite ADE quiver: root
// enumeration, a Chevalley-type basis {e_alpha, h_i}, and structure constants
// through the bicharacter eps(alpha,beta) = (-1)^{<alpha,beta>} attached to
// the chosen orientation.
//
// Conventions: [e_alpha, e_beta] = eps(alpha,beta) e_{alpha+beta} when the
// sum is a root, [e_alpha, e_{-alpha}] = eps(alpha,-alpha) h_alpha = -h_alpha,
// [h, e_beta] = (h, beta) e_beta. Chevalley generators are X_i^+ = e_{alpha_i},
// X_i^- = -e_{-alpha_i}, so [X_i^+, X_i^-] = h_i and (X_i^+, X_i^-) = 1; the
// highest-root vectors are normalized the same way.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "quiveralg/quiver.hpp"

namespace qalg {

// The finite subquiver on vertices {1..e} of an affine quiver with affine
// vertex 0; vertex i of the result is vertex i+1 of the input.
inline Quiver finite_part(const Quiver& q) {
  std::vector<std::pair<int, int>> arrows;
  for (const auto& a : q.arrows())
    if (a.src != 0 && a.tgt != 0) arrows.push_back({a.src - 1, a.tgt - 1});
  return Quiver(q.vertex_count() - 1, arrows);
}

class RootSystemF {
 public:
  explicit RootSystemF(Quiver qf) : qf_(std::move(qf)) {
    require_finite_type();
    enumerate_roots();
  }

  const Quiver& quiver() const { return qf_; }
  int rank() const { return qf_.vertex_count(); }
  const std::vector<DimVector>& positive_roots() const { return pos_roots_; }
  int dimension() const { return 2 * static_cast<int>(pos_roots_.size()) + rank(); }

  // Basis indexing: [0, R): e_{+root}, [R, 2R): e_{-root}, [2R, 2R+rank): h_i.
  int basis_size() const { return dimension(); }
  int e_pos(int k) const { return k; }
  int e_neg(int k) const { return static_cast<int>(pos_roots_.size()) + k; }
  int h(int i) const { return 2 * static_cast<int>(pos_roots_.size()) + i; }

  bool is_cartan(int idx) const { return idx >= 2 * static_cast<int>(pos_roots_.size()); }
  int cartan_vertex(int idx) const { return idx - 2 * static_cast<int>(pos_roots_.size()); }

  // weight of a basis element in the finite root lattice (0 for Cartan)
  DimVector weight(int idx) const {
    int R = static_cast<int>(pos_roots_.size());
    if (idx < R) return pos_roots_[idx];
    if (idx < 2 * R) return -pos_roots_[idx - R];
    return DimVector(rank());
  }

  int root_index(const DimVector& alpha) const {  // signed root -> basis index
    auto it = root_ids_.find(alpha.c);
    if (it != root_ids_.end()) return e_pos(it->second);
    auto it2 = root_ids_.find((-alpha).c);
    if (it2 != root_ids_.end()) return e_neg(it2->second);
    return -1;
  }
  bool is_root(const DimVector& alpha) const { return root_index(alpha) >= 0; }

  // eps(alpha,beta) = (-1)^{<alpha,beta>}, bimultiplicative by bilinearity
  int eps(const DimVector& a, const DimVector& b) const {
    Int v = euler_form(qf_, a, b);
    return v % 2 == 0 ? 1 : -1;
  }

  // invariant form on basis elements
  Rat form(int x, int y) const {
    bool cx = is_cartan(x), cy = is_cartan(y);
    if (cx && cy) return Rat(qf_.cartan(cartan_vertex(x), cartan_vertex(y)));
    if (cx != cy) return 0;
    DimVector wx = weight(x), wy = weight(y);
    if ((wx + wy).is_zero()) return Rat(eps(wx, wy));  // = -1
    return 0;
  }

  // bracket of basis elements as a sparse vector over the basis
  std::map<int, Rat> bracket(int x, int y) const {
    std::map<int, Rat> out;
    bool cx = is_cartan(x), cy = is_cartan(y);
    if (cx && cy) return out;
    if (cx || cy) {
      int hidx = cx ? x : y;
      int eidx = cx ? y : x;
      DimVector beta = weight(eidx);
      Int c = coroot_pairing(qf_, cartan_vertex(hidx), beta);
      if (c != 0) out[eidx] = Rat(c) * (cx ? 1 : -1);
      return out;
    }
    DimVector a = weight(x), b = weight(y);
    DimVector s = a + b;
    if (s.is_zero()) {
      // [e_a, e_{-a}] = eps(a,-a) h_a with h_a = sum m_i h_i for a = sum m_i alpha_i
      int sign = eps(a, b);
      for (int i = 0; i < rank(); ++i)
        if (a[i] != 0) out[h(i)] = Rat(sign) * Rat(a[i]);
      return out;
    }
    int idx = root_index(s);
    if (idx >= 0) out[idx] = Rat(eps(a, b));
    return out;
  }

  std::string basis_name(int idx) const {
    int R = static_cast<int>(pos_roots_.size());
    auto rootstr = [&](const DimVector& r) {
      std::string s = "[";
      for (int i = 0; i < r.size(); ++i)
        s += (i ? "," : "") + r[i].str();
      return s + "]";
    };
    if (idx < R) return "e" + rootstr(pos_roots_[idx]);
    if (idx < 2 * R) return "e-" + rootstr(pos_roots_[idx - R]);
    return "h[" + std::to_string(cartan_vertex(idx)) + "]";
  }

  // index of the highest root / its vectors
  int highest_root_index() const {
    int best = 0;
    Int h = -1;
    for (int k = 0; k < static_cast<int>(pos_roots_.size()); ++k)
      if (pos_roots_[k].height() > h) {
        h = pos_roots_[k].height();
        best = k;
      }
    return best;
  }

 private:
  // finite type <=> the symmetric Cartan matrix is positive definite
  void require_finite_type() {
    int n = qf_.vertex_count();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = qf_.cartan(i, j);
    for (int k = 0; k < n; ++k) {
      if (!(m[k][k] > 0))
        throw DomainError("RootSystemF: quiver is not of finite ADE type");
      for (int i = k + 1; i < n; ++i) {
        Rat f = m[i][k] / m[k][k];
        for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
      }
    }
  }

  void enumerate_roots() {
    int n = qf_.vertex_count();
    // grow from the simple roots: alpha + alpha_i is a root iff (.,.) == 2
    std::vector<DimVector> frontier;
    for (int i = 0; i < n; ++i) {
      DimVector a = DimVector::simple_root(n, i);
      pos_roots_.push_back(a);
      frontier.push_back(a);
    }
    std::set<std::vector<Int>> seen;
    for (const auto& r : pos_roots_) seen.insert(r.c);
    int guard = 0;
    while (!frontier.empty()) {
      if (++guard > 1000) throw DomainError("RootSystemF: not of finite type");
      std::vector<DimVector> next;
      for (const auto& a : frontier)
        for (int i = 0; i < n; ++i) {
          DimVector b = a + DimVector::simple_root(n, i);
          if (seen.count(b.c)) continue;
          if (sym_form(qf_, b, b) == 2) {
            seen.insert(b.c);
            pos_roots_.push_back(b);
            next.push_back(b);
          }
        }
      frontier = std::move(next);
    }
    std::sort(pos_roots_.begin(), pos_roots_.end(),
              [](const DimVector& a, const DimVector& b) {
                if (a.height() != b.height()) return a.height() < b.height();
                return a.c < b.c;
              });
    for (int k = 0; k < static_cast<int>(pos_roots_.size()); ++k)
      root_ids_[pos_roots_[k].c] = k;
  }

  Quiver qf_;
  std::vector<DimVector> pos_roots_;
  std::map<std::vector<Int>, int> root_ids_;
};

// Finite Lie algebra element: rational combination of basis indices.
using LieEltF = std::map<int, Rat>;

inline LieEltF lie_bracket(const RootSystemF& rs, const LieEltF& a, const LieEltF& b) {
  LieEltF out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b)
      for (const auto& [z, cz] : rs.bracket(x, y)) {
        Rat& v = out[z];
        v += cx * cy * cz;
        if (v == 0) out.erase(z);
      }
  return out;
}

}  // namespace qalg
