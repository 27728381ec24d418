#pragma once

// Structured-text formats: quiver description files, preprojective module
// files, and the bit-exact shuffle element serialization.
//
// Quiver file:
//   # comment
//   vertices 2
//   arrow 1 0
//   arrow 1 0
//   type A1~
//
// Module file (matrices are dense, row per line, exact rationals):
//   dim 1 1
//   x 0
//   1
//   xstar 0
//   0
//   ...

#include <fstream>
#include <istream>
#include <sstream>

#include "quiveralg/prep.hpp"
#include "quiveralg/shuffle.hpp"

namespace qalg {

struct ParseError : DomainError {
  int line;
  std::string field;
  ParseError(int line_, std::string field_, const std::string& what)
      : DomainError("line " + std::to_string(line_) + ", field '" + field_ +
                    "': " + what),
        line(line_),
        field(std::move(field_)) {}
};

namespace ioutil {

inline bool next_tokens(std::istream& in, int& lineno, std::vector<std::string>& toks) {
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    toks.assign(std::istream_iterator<std::string>(ls),
                std::istream_iterator<std::string>());
    if (!toks.empty()) return true;
  }
  return false;
}

inline int parse_int(const std::string& tok, int lineno, const std::string& field) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (...) {
    throw ParseError(lineno, field, "expected an integer, got '" + tok + "'");
  }
}

inline Rat parse_rat(const std::string& tok, int lineno, const std::string& field) {
  try {
    return Rat(tok);
  } catch (...) {
    throw ParseError(lineno, field, "expected a rational, got '" + tok + "'");
  }
}

}  // namespace ioutil

inline Quiver read_quiver(std::istream& in) {
  int lineno = 0;
  std::vector<std::string> toks;
  int vertices = -1;
  std::vector<std::pair<int, int>> arrows;
  std::string type_tag;
  while (ioutil::next_tokens(in, lineno, toks)) {
    const std::string& key = toks[0];
    if (key == "vertices") {
      if (toks.size() != 2) throw ParseError(lineno, "vertices", "expected one count");
      vertices = ioutil::parse_int(toks[1], lineno, "vertices");
    } else if (key == "arrow") {
      if (toks.size() != 3) throw ParseError(lineno, "arrow", "expected source and target");
      arrows.push_back({ioutil::parse_int(toks[1], lineno, "arrow"),
                        ioutil::parse_int(toks[2], lineno, "arrow")});
    } else if (key == "type") {
      if (toks.size() != 2) throw ParseError(lineno, "type", "expected one tag");
      type_tag = toks[1];
    } else {
      throw ParseError(lineno, key, "unknown field");
    }
  }
  if (vertices < 0) throw ParseError(lineno, "vertices", "missing");
  try {
    return Quiver(vertices, arrows, type_tag);
  } catch (const DomainError& e) {
    throw ParseError(lineno, "arrow", e.what());
  }
}

inline Quiver read_quiver_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open quiver file: " + path);
  return read_quiver(in);
}

// ---------------------------------------------------------------------------
// Module files

inline PiRep read_module(std::istream& in, const Quiver& q) {
  int lineno = 0;
  std::vector<std::string> toks;
  PiRep m;
  if (!ioutil::next_tokens(in, lineno, toks) || toks[0] != "dim")
    throw ParseError(lineno, "dim", "module file must start with 'dim'");
  if (static_cast<int>(toks.size()) != q.vertex_count() + 1)
    throw ParseError(lineno, "dim", "expected one entry per vertex");
  m.dim = DimVector(q.vertex_count());
  for (int i = 0; i < q.vertex_count(); ++i)
    m.dim[i] = ioutil::parse_int(toks[i + 1], lineno, "dim");
  m.x.assign(q.arrow_count(), {});
  m.xstar.assign(q.arrow_count(), {});
  std::vector<bool> seen_x(q.arrow_count(), false), seen_s(q.arrow_count(), false);
  auto read_matrix = [&](int rows, int cols, const std::string& field) {
    QMatrix a(rows, cols);
    for (int r = 0; r < rows; ++r) {
      if (!ioutil::next_tokens(in, lineno, toks))
        throw ParseError(lineno, field, "unexpected end of matrix");
      if (static_cast<int>(toks.size()) != cols)
        throw ParseError(lineno, field, "expected " + std::to_string(cols) + " entries");
      for (int c = 0; c < cols; ++c) a.at(r, c) = ioutil::parse_rat(toks[c], lineno, field);
    }
    return a;
  };
  while (ioutil::next_tokens(in, lineno, toks)) {
    if (toks.size() != 2) throw ParseError(lineno, toks[0], "expected 'x K' or 'xstar K'");
    int k = ioutil::parse_int(toks[1], lineno, toks[0]);
    if (k < 0 || k >= q.arrow_count())
      throw ParseError(lineno, toks[0], "arrow index out of range");
    const auto& ar = q.arrows()[k];
    if (toks[0] == "x") {
      m.x[k] = read_matrix(to_int(m.dim[ar.tgt]), to_int(m.dim[ar.src]), "x");
      seen_x[k] = true;
    } else if (toks[0] == "xstar") {
      m.xstar[k] = read_matrix(to_int(m.dim[ar.src]), to_int(m.dim[ar.tgt]), "xstar");
      seen_s[k] = true;
    } else {
      throw ParseError(lineno, toks[0], "unknown field");
    }
  }
  for (int k = 0; k < q.arrow_count(); ++k)
    if (!seen_x[k] || !seen_s[k])
      throw ParseError(lineno, "x/xstar", "missing matrix for arrow " + std::to_string(k));
  validate_rep(q, m);
  return m;
}

inline std::string write_module(const Quiver& q, const PiRep& m) {
  std::ostringstream os;
  os << "dim";
  for (int i = 0; i < q.vertex_count(); ++i) os << " " << m.dim[i];
  os << "\n";
  auto dump = [&](const QMatrix& a) {
    for (int r = 0; r < a.rows; ++r) {
      for (int c = 0; c < a.cols; ++c) os << (c ? " " : "") << a.at(r, c);
      os << "\n";
    }
  };
  for (int k = 0; k < q.arrow_count(); ++k) {
    os << "x " << k << "\n";
    dump(m.x[k]);
    os << "xstar " << k << "\n";
    dump(m.xstar[k]);
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Shuffle element serialization: weight header, then one line per monomial
// `coeff e_0 e_1 ... e_{nvars-1}` in the element's variable layout. Sorted by
// the polynomial's term order, so output is canonical and round-trips.

inline std::string write_shuffle_elt(const ShuffleAlgebra& sh, const ShuffleElt& p) {
  std::ostringstream os;
  os << "weight";
  for (int c : p.wt) os << " " << c;
  os << "\n";
  for (const auto& [m, c] : p.poly.terms()) {
    os << c;
    for (int e : m) os << " " << e;
    os << "\n";
  }
  return os.str();
}

inline ShuffleElt read_shuffle_elt(const ShuffleAlgebra& sh, std::istream& in) {
  int lineno = 0;
  std::vector<std::string> toks;
  if (!ioutil::next_tokens(in, lineno, toks) || toks[0] != "weight")
    throw ParseError(lineno, "weight", "shuffle element must start with 'weight'");
  Weight wt;
  for (std::size_t i = 1; i < toks.size(); ++i)
    wt.push_back(ioutil::parse_int(toks[i], lineno, "weight"));
  if (static_cast<int>(wt.size()) != sh.quiver().vertex_count())
    throw ParseError(lineno, "weight", "expected one entry per vertex");
  int nv = sh.nvars(wt);
  Poly poly(nv);
  while (ioutil::next_tokens(in, lineno, toks)) {
    if (static_cast<int>(toks.size()) != nv + 1)
      throw ParseError(lineno, "monomial",
                       "expected coefficient plus " + std::to_string(nv) + " exponents");
    Rat c = ioutil::parse_rat(toks[0], lineno, "coefficient");
    Mono m(nv);
    for (int i = 0; i < nv; ++i) m[i] = ioutil::parse_int(toks[i + 1], lineno, "exponent");
    poly.add_term(m, c);
  }
  ShuffleElt out{wt, std::move(poly)};
  if (!sh.is_symmetric(out))
    throw ParseError(lineno, "monomial", "polynomial is not colorwise symmetric");
  return out;
}

}  // namespace qalg
