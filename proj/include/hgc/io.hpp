#pragma once

#include <array>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hgc/analysis.hpp"
#include "hgc/catalog.hpp"
#include "hgc/error.hpp"
#include "hgc/hypergraph.hpp"
#include "hgc/repcheck.hpp"
#include "hgc/star_algebra.hpp"
#include "hgc/transforms.hpp"

namespace hgc {

using Json = nlohmann::ordered_json;

struct HgDocument {
  std::string name = "H";
  std::optional<std::string> citation;
  Hypergraph graph;
  std::map<VertexId, Partition> partitions;

  friend bool operator==(const HgDocument& a, const HgDocument& b) {
    if (a.name != b.name || a.citation != b.citation || !(a.graph == b.graph)) return false;
    if (a.partitions.size() != b.partitions.size()) return false;
    for (const auto& [w, p] : a.partitions) {
      auto it = b.partitions.find(w);
      if (it == b.partitions.end() || it->second.blocks != p.blocks) return false;
    }
    return true;
  }
};

namespace detail {

inline std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

enum class Tok { Ident, String, LBrace, RBrace, Colon, Semi, Arrow, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t col;
};

inline std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::String: return "string \"" + t.text + "\"";
    case Tok::Ident: return "'" + t.text + "'";
    default: return "'" + t.text + "'";
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : s_(text) {}

  Token next() {
    skip();
    const auto [line, col] = std::pair{line_, col_};
    if (i_ >= s_.size()) return {Tok::End, "", line, col};
    const char c = s_[i_];
    auto single = [&](Tok k) {
      advance();
      return Token{k, std::string(1, c), line, col};
    };
    switch (c) {
      case '{': return single(Tok::LBrace);
      case '}': return single(Tok::RBrace);
      case ':': return single(Tok::Colon);
      case ';': return single(Tok::Semi);
      default: break;
    }
    if (c == '-' && i_ + 1 < s_.size() && s_[i_ + 1] == '>') {
      advance();
      advance();
      return {Tok::Arrow, "->", line, col};
    }
    if (c == '"') {
      advance();
      std::string out;
      while (i_ < s_.size() && s_[i_] != '"') {
        if (s_[i_] == '\n') throw SyntaxError(line_, col_, "closing '\"'", "end of line");
        if (s_[i_] == '\\' && i_ + 1 < s_.size()) advance();
        out += s_[i_];
        advance();
      }
      if (i_ >= s_.size()) throw SyntaxError(line_, col_, "closing '\"'", "end of input");
      advance();
      return {Tok::String, out, line, col};
    }
    if (is_id_char(c)) {
      std::string out;
      while (i_ < s_.size() && is_id_char(s_[i_])) {
        out += s_[i_];
        advance();
      }
      return {Tok::Ident, out, line, col};
    }
    throw SyntaxError(line, col, "a token", "'" + std::string(1, c) + "'");
  }

 private:
  void advance() {
    if (s_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }
  void skip() {
    while (i_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[i_]))) {
        advance();
      } else if (s_[i_] == '/' && i_ + 1 < s_.size() && s_[i_ + 1] == '/') {
        while (i_ < s_.size() && s_[i_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view s_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class HgParser {
 public:
  explicit HgParser(std::string_view text) : lex_(text) { tok_ = lex_.next(); }

  HgDocument parse() {
    HgDocument doc;
    keyword("hypergraph");
    doc.name = ident("a hypergraph name");
    expect(Tok::LBrace, "'{'");
    while (tok_.kind != Tok::RBrace) {
      if (tok_.kind != Tok::Ident)
        throw SyntaxError(tok_.line, tok_.col, "'vertices', 'edge', 'partition', 'citation' or '}'", describe(tok_));
      const std::string kw = tok_.text;
      if (kw == "vertices") {
        take();
        expect(Tok::Colon, "':'");
        while (tok_.kind == Tok::Ident) doc.graph.add_vertex(VertexId{take().text});
        expect(Tok::Semi, "';'");
      } else if (kw == "edge") {
        take();
        EdgeId e{ident("an edge id")};
        expect(Tok::Colon, "':'");
        auto s = vertex_set();
        expect(Tok::Arrow, "'->'");
        auto r = vertex_set();
        expect(Tok::Semi, "';'");
        doc.graph.add_edge(e, std::move(s), std::move(r));
      } else if (kw == "partition") {
        take();
        VertexId w{ident("a vertex id")};
        expect(Tok::Colon, "':'");
        Partition p;
        while (tok_.kind == Tok::LBrace) {
          take();
          EdgeSet block;
          while (tok_.kind == Tok::Ident) block.insert(EdgeId{take().text});
          expect(Tok::RBrace, "'}'");
          p.blocks.push_back(std::move(block));
        }
        if (p.blocks.empty()) throw SyntaxError(tok_.line, tok_.col, "'{'", describe(tok_));
        expect(Tok::Semi, "';'");
        if (!doc.partitions.emplace(w, std::move(p)).second)
          fail(ErrorKind::DuplicateId, "two partitions declared at '" + w.str() + "'");
      } else if (kw == "citation") {
        take();
        if (tok_.kind != Tok::String) throw SyntaxError(tok_.line, tok_.col, "a quoted string", describe(tok_));
        doc.citation = take().text;
        expect(Tok::Semi, "';'");
      } else {
        throw SyntaxError(tok_.line, tok_.col, "'vertices', 'edge', 'partition', 'citation' or '}'", describe(tok_));
      }
    }
    take();
    if (tok_.kind != Tok::End) throw SyntaxError(tok_.line, tok_.col, "end of input", describe(tok_));
    return doc;
  }

 private:
  Token take() {
    Token t = std::move(tok_);
    tok_ = lex_.next();
    return t;
  }
  void expect(Tok k, const std::string& what) {
    if (tok_.kind != k) throw SyntaxError(tok_.line, tok_.col, what, describe(tok_));
    take();
  }
  void keyword(const std::string& kw) {
    if (tok_.kind != Tok::Ident || tok_.text != kw)
      throw SyntaxError(tok_.line, tok_.col, "'" + kw + "'", describe(tok_));
    take();
  }
  std::string ident(const std::string& what) {
    if (tok_.kind != Tok::Ident) throw SyntaxError(tok_.line, tok_.col, what, describe(tok_));
    return take().text;
  }
  VertexSet vertex_set() {
    expect(Tok::LBrace, "'{'");
    VertexSet out;
    while (tok_.kind == Tok::Ident) out.insert(VertexId{take().text});
    expect(Tok::RBrace, "'}' or a vertex id");
    return out;
  }

  Lexer lex_;
  Token tok_;
};

inline std::vector<std::string> string_list(const Json& j, const std::string& what) {
  if (!j.is_array()) fail(ErrorKind::SyntaxError, what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) fail(ErrorKind::SyntaxError, what + " must be an array of strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

inline HgDocument document_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorKind::SyntaxError, "hypergraph JSON must be an object");
  HgDocument doc;
  if (j.contains("name")) doc.name = j.at("name").get<std::string>();
  if (j.contains("citation")) doc.citation = j.at("citation").get<std::string>();
  if (j.contains("vertices"))
    for (const auto& v : string_list(j.at("vertices"), "vertices")) doc.graph.add_vertex(VertexId{v});
  if (j.contains("edges")) {
    for (const auto& [e, body] : j.at("edges").items()) {
      VertexSet s, r;
      for (const auto& v : string_list(body.at("source"), "source of " + e)) s.insert(VertexId{v});
      for (const auto& v : string_list(body.at("range"), "range of " + e)) r.insert(VertexId{v});
      doc.graph.add_edge(EdgeId{e}, std::move(s), std::move(r));
    }
  }
  if (j.contains("partitions")) {
    for (const auto& [w, blocks] : j.at("partitions").items()) {
      Partition p;
      for (const auto& b : blocks) {
        EdgeSet block;
        for (const auto& e : string_list(b, "partition block")) block.insert(EdgeId{e});
        p.blocks.push_back(std::move(block));
      }
      doc.partitions.emplace(VertexId{w}, std::move(p));
    }
  }
  return doc;
}

}  // namespace detail

/// Text or JSON (detected by a leading '{'). The result is validated.
inline HgDocument parse_hg(std::string_view text) {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  HgDocument doc;
  if (first < text.size() && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      const auto [line, col] = detail::line_col(text, e.byte > 0 ? e.byte - 1 : 0);
      throw SyntaxError(line, col, "valid JSON", e.what());
    }
    try {
      doc = detail::document_from_json(j);
    } catch (const nlohmann::json::exception& e) {
      throw SyntaxError(1, 1, "a hypergraph JSON document", e.what());
    }
  } else {
    doc = detail::HgParser(text).parse();
  }
  check_id(doc.name);
  validate(doc.graph);
  for (const auto& [w, p] : doc.partitions) doc.graph.require_vertex(w);
  return doc;
}

inline std::string serialize_hg(const HgDocument& doc) {
  std::ostringstream os;
  os << "hypergraph " << doc.name << " {\n";
  if (doc.citation) {
    std::string esc;
    for (char c : *doc.citation) {
      if (c == '"' || c == '\\') esc += '\\';
      esc += c;
    }
    os << "  citation \"" << esc << "\";\n";
  }
  os << "  vertices:";
  for (const auto& v : doc.graph.vertices()) os << ' ' << v.str();
  os << ";\n";
  auto set = [](const VertexSet& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& v : s) {
      out += (first ? "" : " ") + v.str();
      first = false;
    }
    return out + "}";
  };
  for (const auto& [e, ends] : doc.graph.edges())
    os << "  edge " << e.str() << ": " << set(ends.source) << " -> " << set(ends.range) << ";\n";
  for (const auto& [w, p] : doc.partitions) {
    os << "  partition " << w.str() << ":";
    for (const auto& b : p.blocks) {
      os << " {";
      bool first = true;
      for (const auto& e : b) {
        os << (first ? "" : " ") << e.str();
        first = false;
      }
      os << "}";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

inline std::string serialize_hg(const Hypergraph& h, const std::string& name = "H") {
  HgDocument doc;
  doc.name = name;
  doc.graph = h;
  return serialize_hg(doc);
}

inline Json vertex_list(const VertexSet& s) {
  Json j = Json::array();
  for (const auto& v : s) j.push_back(v.str());
  return j;
}

inline Json edge_list(const EdgeSet& s) {
  Json j = Json::array();
  for (const auto& e : s) j.push_back(e.str());
  return j;
}

inline Json to_json(const HgDocument& doc) {
  Json j;
  j["name"] = doc.name;
  if (doc.citation) j["citation"] = *doc.citation;
  j["vertices"] = vertex_list(doc.graph.vertices());
  Json edges = Json::object();
  for (const auto& [e, ends] : doc.graph.edges())
    edges[e.str()] = {{"source", vertex_list(ends.source)}, {"range", vertex_list(ends.range)}};
  j["edges"] = std::move(edges);
  if (!doc.partitions.empty()) {
    Json parts = Json::object();
    for (const auto& [w, p] : doc.partitions) {
      Json blocks = Json::array();
      for (const auto& b : p.blocks) blocks.push_back(edge_list(b));
      parts[w.str()] = std::move(blocks);
    }
    j["partitions"] = std::move(parts);
  }
  return j;
}

inline Json to_json(const Relabeling& r) {
  Json v = Json::object(), e = Json::object();
  for (const auto& [n, o] : r.vertex_origin) v[n.str()] = o.str();
  for (const auto& [n, o] : r.edge_origin) e[n.str()] = o.str();
  return {{"vertex_origin", v}, {"edge_origin", e}};
}

// ---------------------------------------------------------------------------
// DOT

inline std::string emit_dot(const Hypergraph& h, const std::string& name = "H") {
  static constexpr std::array<const char*, 10> palette{"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                                       "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  auto q = [](const std::string& s) { return "\"" + s + "\""; };
  std::ostringstream os;
  os << "digraph " << q(name) << " {\n";
  for (const auto& v : h.vertices()) os << "  " << q(v.str()) << ";\n";
  std::size_t k = 0;
  for (const auto& [e, ends] : h.edges()) {
    const char* colour = palette[k++ % palette.size()];
    for (const auto& s : ends.source)
      for (const auto& r : ends.range)
        os << "  " << q(s.str()) << " -> " << q(r.str()) << " [label=" << q(e.str()) << ", color=\""
           << colour << "\", fontcolor=\"" << colour << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// expressions
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor (['*'] factor)*
//   factor  := '-' factor | number | 'i' | 'p(' id ')' | 's(' id ')'
//            | 's*(' id ')' | 'adj(' expr ')' | '(' expr ')'
//   number  := digits ['/' digits] ['i']

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view text, const StarAlgebra& alg) : s_(text), alg_(alg) {}

  StarExpression parse() {
    auto x = expr();
    skip();
    if (i_ < s_.size()) error("an operator or end of input");
    return x;
  }

 private:
  [[noreturn]] void error(const std::string& expected) const {
    std::string found = i_ < s_.size() ? "'" + std::string(1, s_[i_]) + "'" : "end of input";
    const auto [line, col] = line_col(s_, i_);
    throw SyntaxError(line, col, expected, found);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool starts_factor() {
    skip();
    if (i_ >= s_.size()) return false;
    const char c = s_[i_];
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c));
  }

  StarExpression expr() {
    StarExpression x = alg_.zero();
    bool negate = false;
    if (peek('+')) ++i_;
    else if (peek('-')) {
      ++i_;
      negate = true;
    }
    x = term();
    if (negate) x = -x;
    while (true) {
      if (peek('+')) {
        ++i_;
        x += term();
      } else if (peek('-')) {
        ++i_;
        x -= term();
      } else {
        return x;
      }
    }
  }

  StarExpression term() {
    StarExpression x = factor();
    while (true) {
      if (peek('*')) {
        ++i_;
        x = x * factor();
      } else if (starts_factor()) {
        x = x * factor();
      } else {
        return x;
      }
    }
  }

  std::string word() {
    std::string w;
    while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) w += s_[i_++];
    return w;
  }

  // Raw id up to the parenthesis that closes the one already consumed.
  std::string bracketed_id() {
    std::size_t depth = 1;
    const std::size_t start = i_;
    while (i_ < s_.size()) {
      if (s_[i_] == '(') ++depth;
      if (s_[i_] == ')' && --depth == 0) break;
      ++i_;
    }
    if (i_ >= s_.size()) error("')'");
    std::string id(s_.substr(start, i_ - start));
    ++i_;
    const auto b = id.find_first_not_of(" \t\n");
    const auto e = id.find_last_not_of(" \t\n");
    if (b == std::string::npos) {
      --i_;
      error("an identifier");
    }
    return id.substr(b, e - b + 1);
  }

  Rational integer() {
    std::string digits;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) digits += s_[i_++];
    if (digits.empty()) error("a digit");
    return Rational(boost::multiprecision::cpp_int(digits));
  }

  StarExpression factor() {
    skip();
    if (i_ >= s_.size()) error("an operand");
    const char c = s_[i_];
    if (c == '-') {
      ++i_;
      return -factor();
    }
    if (c == '(') {
      ++i_;
      auto x = expr();
      if (!peek(')')) error("')'");
      ++i_;
      return x;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational q = integer();
      if (i_ < s_.size() && s_[i_] == '/') {
        ++i_;
        Rational d = integer();
        if (d == 0) {
          --i_;
          error("a nonzero denominator");
        }
        q /= d;
      }
      if (i_ < s_.size() && s_[i_] == 'i' &&
          !(i_ + 1 < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_ + 1])))) {
        ++i_;
        return alg_.scalar(Scalar(0, q));
      }
      return alg_.scalar(Scalar(q));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t at = i_;
      const std::string w = word();
      if (w == "i") return alg_.scalar(Scalar::i());
      bool star = false;
      if (w == "s" && i_ < s_.size() && s_[i_] == '*') {
        ++i_;
        star = true;
      }
      skip();
      if (!(w == "p" || w == "s" || w == "adj") || i_ >= s_.size() || s_[i_] != '(') {
        i_ = at;
        error("p(...), s(...), s*(...), adj(...), i or a number");
      }
      ++i_;
      if (w == "adj") {
        auto x = expr();
        if (!peek(')')) error("')'");
        ++i_;
        return x.adjoint();
      }
      const std::string id = bracketed_id();
      if (w == "p") return alg_.p(VertexId{id});
      return star ? alg_.s_star(EdgeId{id}) : alg_.s(EdgeId{id});
    }
    error("an operand");
  }

  std::string_view s_;
  std::size_t i_ = 0;
  const StarAlgebra& alg_;
};

}  // namespace detail

inline StarExpression parse_expression(std::string_view text, const StarAlgebra& alg) {
  return detail::ExprParser(text, alg).parse();
}

// ---------------------------------------------------------------------------
// matrix families

inline Json matrix_to_json(const Matrix& m) {
  Json j = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) j.push_back({m(r, c).real(), m(r, c).imag()});
  return j;
}

inline Matrix matrix_from_json(const Json& j, std::size_t dim, const std::string& who) {
  const auto d = static_cast<Eigen::Index>(dim);
  Matrix m = Matrix::Zero(d, d);
  auto entry = [&](const Json& e) {
    if (e.is_number()) return std::complex<double>(e.get<double>(), 0);
    if (e.is_array() && e.size() == 2) return std::complex<double>(e[0].get<double>(), e[1].get<double>());
    fail(ErrorKind::SyntaxError, who + ": entries must be numbers or [re, im] pairs");
  };
  if (!j.is_array()) fail(ErrorKind::SyntaxError, who + ": matrix must be an array");
  const bool nested = j.size() == dim && dim > 0 && j[0].is_array() &&
                      (j[0].empty() || j[0][0].is_array() || (j[0].size() == dim && dim != 2));
  if (nested) {
    for (std::size_t r = 0; r < dim; ++r) {
      if (!j[r].is_array() || j[r].size() != dim)
        fail(ErrorKind::DimensionMismatch, who + ": row " + std::to_string(r) + " has the wrong length");
      for (std::size_t c = 0; c < dim; ++c)
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = entry(j[r][c]);
    }
    return m;
  }
  if (j.size() != dim * dim)
    fail(ErrorKind::DimensionMismatch, who + ": expected " + std::to_string(dim * dim) + " entries, found " +
                                           std::to_string(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k)
    m(static_cast<Eigen::Index>(k / dim), static_cast<Eigen::Index>(k % dim)) = entry(j[k]);
  return m;
}

inline MatrixFamily family_from_json(const Json& j) {
  try {
    MatrixFamily fam;
    fam.dim = j.at("dim").get<std::size_t>();
    if (j.contains("tol")) fam.tol = j.at("tol").get<double>();
    if (fam.tol < 0) fail(ErrorKind::PreconditionFailed, "tolerance must be nonnegative");
    if (j.contains("vertices"))
      for (const auto& [v, m] : j.at("vertices").items())
        fam.vertices.emplace(VertexId{v}, matrix_from_json(m, fam.dim, "vertex " + v));
    if (j.contains("edges"))
      for (const auto& [e, m] : j.at("edges").items())
        fam.edges.emplace(EdgeId{e}, matrix_from_json(m, fam.dim, "edge " + e));
    return fam;
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(1, 1, "a matrix family document", e.what());
  }
}

inline MatrixFamily parse_family(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = detail::line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw SyntaxError(line, col, "valid JSON", e.what());
  }
  return family_from_json(j);
}

inline Json to_json(const MatrixFamily& fam) {
  Json v = Json::object(), e = Json::object();
  for (const auto& [id, m] : fam.vertices) v[id.str()] = matrix_to_json(m);
  for (const auto& [id, m] : fam.edges) e[id.str()] = matrix_to_json(m);
  return {{"dim", fam.dim}, {"vertices", v}, {"edges", e}, {"tol", fam.tol}};
}

// ---------------------------------------------------------------------------
// reports

inline Json to_json(const VerificationReport& r) {
  auto opt = [](const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); };
  return {{"proj_idempotent", r.proj_idempotent},
          {"proj_selfadjoint", r.proj_selfadjoint},
          {"mutual_orthogonality", r.mutual_orthogonality},
          {"partial_isometry", r.partial_isometry},
          {"hr1", r.hr1},
          {"hr2a_min_eig", opt(r.hr2a_min_eig)},
          {"hr2b_min_eig", opt(r.hr2b_min_eig)},
          {"pass", r.pass}};
}

inline Json to_json(const GiutStatus& s) {
  return {{"verdict", std::string(to_string(s.verdict))},
          {"reasons",
           {{"quasi_perfect_only", s.reasons.quasi_perfect_only},
            {"no_sinks", s.reasons.no_sinks},
            {"generated_by_isometries", std::string(to_string(s.reasons.generated_by_isometries))}}},
          {"sinks", vertex_list(s.sinks)},
          {"ungenerated_vertices", vertex_list(s.ungenerated)}};
}

inline Json to_json(const NonAmenabilityCertificate& c) {
  return {{"witness_vertices", vertex_list(c.witness_vertices)},
          {"witness_edges", edge_list(c.witness_edges)},
          {"pattern", c.pattern()},
          {"citation", c.citation}};
}

inline Json to_json(const CatalogMatch& m) {
  return {{"name", m.name}, {"family", m.family}, {"shape", m.shape}, {"citation", m.citation}};
}

inline Json to_json(const QuotientCertificate& c) {
  Json v = Json::array();
  for (const auto& s : c.violations) v.push_back(s);
  return {{"valid", c.valid},
          {"zeroed_vertices", vertex_list(c.zeroed_vertices)},
          {"zeroed_edges", edge_list(c.zeroed_edges)},
          {"violations", v}};
}

inline Json to_json(const GenVertexLattice& l) {
  Json base = Json::array(), closure = Json::array();
  for (const auto& a : l.base) base.push_back(vertex_list(a));
  for (const auto& a : l.closure) closure.push_back(vertex_list(a));
  return {{"base", base}, {"closure", closure}};
}

inline Json to_json(const RelationSystem& rs) {
  Json iso = Json::object(), vert = Json::object();
  for (const auto& [e, forced] : rs.forced_iso_range) iso[e.str()] = forced;
  for (const auto& [v, f] : rs.forced_vertex) vert[v.str()] = f ? edge_list(*f) : Json(nullptr);
  return {{"forced_iso_range", iso}, {"forced_vertex", vert}};
}

}  // namespace hgc
