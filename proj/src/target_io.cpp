#include "baire/target_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace baire {

namespace {

struct Token {
  std::string text;
  int column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

Rational number(int line, std::string_view text, int column) {
  auto q = parse_rational(text);
  if (!q) throw ParseError(line, column, "malformed number '" + std::string(text) + "'");
  return *q;
}

Rational number(const Token& tok, int line) { return number(line, tok.text, tok.column); }

void expect_unit(const Rational& x, const Token& tok, int line) {
  if (sgn(x) < 0 || x > 1) throw ParseError(line, tok.column, "x out of range [0,1]: " + tok.text);
}

void expect_arity(const std::vector<Token>& toks, std::size_t n, int line) {
  if (toks.size() != n + 1) {
    const int col = toks.size() > n + 1 ? toks[n + 1].column : toks.back().column;
    throw ParseError(line, col,
                     toks[0].text + " expects " + std::to_string(n) + " arguments, got " +
                         std::to_string(toks.size() - 1));
  }
}

Piece parse_line(const std::vector<Token>& toks, int line) {
  const std::string& kind = toks[0].text;
  if (kind == "point") {
    expect_arity(toks, 2, line);
    const Rational x = number(toks[1], line);
    expect_unit(x, toks[1], line);
    return Point{x, number(toks[2], line)};
  }
  if (kind == "box") {
    expect_arity(toks, 4, line);
    Box b{number(toks[1], line), number(toks[2], line), number(toks[3], line), number(toks[4], line)};
    expect_unit(b.x0, toks[1], line);
    expect_unit(b.x1, toks[2], line);
    if (b.x0 > b.x1) throw ParseError(line, toks[2].column, "box requires x0 <= x1");
    if (b.y0 > b.y1) throw ParseError(line, toks[4].column, "box requires y0 <= y1");
    return b;
  }
  if (kind == "pline") {
    if (toks.size() < 3) throw ParseError(line, toks[0].column, "pline needs at least two vertices");
    PLine l;
    for (std::size_t i = 1; i < toks.size(); ++i) {
      const auto colon = toks[i].text.find(':');
      if (colon == std::string::npos)
        throw ParseError(line, toks[i].column, "pline vertex must be x:y, got '" + toks[i].text + "'");
      const std::string xs = toks[i].text.substr(0, colon);
      const std::string ys = toks[i].text.substr(colon + 1);
      const Rational x = number(line, xs, toks[i].column);
      const Rational y = number(line, ys, toks[i].column + static_cast<int>(colon) + 1);
      expect_unit(x, toks[i], line);
      if (!l.vertices.empty() && !(l.vertices.back().x < x))
        throw ParseError(line, toks[i].column, "pline x coordinates must strictly increase");
      l.vertices.push_back({x, y});
    }
    return l;
  }
  if (kind == "hyper") {
    expect_arity(toks, 4, line);
    Hyper h{number(toks[1], line), number(toks[2], line), number(toks[3], line), number(toks[4], line)};
    expect_unit(h.x0, toks[2], line);
    expect_unit(h.x1, toks[3], line);
    if (!(h.x0 < h.x1)) throw ParseError(line, toks[3].column, "hyper requires x0 < x1");
    if (h.x0 < h.pole && h.pole < h.x1)
      throw ParseError(line, toks[1].column, "hyper pole strictly inside (x0,x1)");
    if (h.coef == 0) throw ParseError(line, toks[4].column, "hyper coefficient must be nonzero");
    return h;
  }
  throw ParseError(line, toks[0].column, "unknown piece kind '" + kind + "'");
}

}  // namespace

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

TargetSet parse_target(std::istream& in) {
  std::vector<Piece> pieces;
  std::string text;
  int line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    const auto toks = tokenize(text);
    if (toks.empty()) continue;
    pieces.push_back(parse_line(toks, line));
  }
  return TargetSet(std::move(pieces));
}

TargetSet parse_target_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_target(in);
}

TargetSet parse_target_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, 0, "cannot open " + path);
  return parse_target(in);
}

std::string format_target(const TargetSet& t) {
  std::ostringstream os;
  for (const auto& piece : t.pieces()) {
    if (const auto* p = std::get_if<Point>(&piece)) {
      os << "point " << to_string(p->x) << " " << to_string(p->y) << "\n";
    } else if (const auto* b = std::get_if<Box>(&piece)) {
      os << "box " << to_string(b->x0) << " " << to_string(b->x1) << " " << to_string(b->y0) << " "
         << to_string(b->y1) << "\n";
    } else if (const auto* l = std::get_if<PLine>(&piece)) {
      os << "pline";
      for (const auto& v : l->vertices) os << " " << to_string(v.x) << ":" << to_string(v.y);
      os << "\n";
    } else if (const auto* h = std::get_if<Hyper>(&piece)) {
      os << "hyper " << to_string(h->pole) << " " << to_string(h->x0) << " " << to_string(h->x1) << " "
         << to_string(h->coef) << "\n";
    }
  }
  return os.str();
}

}  // namespace baire
