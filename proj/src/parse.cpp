#include "weildeco/parse.hpp"

#include <cctype>

namespace weildeco {

namespace {

struct Parser {
  const std::string& src;
  const Ring& ring;
  std::size_t pos = 0;        // 0-based cursor
  std::size_t lastTok = 0;    // 0-based start of the most recent token

  explicit Parser(const std::string& s, const Ring& r) : src(s), ring(r) {}

  [[noreturn]] void error(const std::string& what, std::size_t at) {
    fail("SyntaxError", what + " at position " + std::to_string(at + 1));
  }

  void skipWs() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }

  bool atEnd() {
    skipWs();
    return pos >= src.size();
  }

  char peek() {
    skipWs();
    return pos < src.size() ? src[pos] : '\0';
  }

  bool accept(char c) {
    skipWs();
    if (pos < src.size() && src[pos] == c) {
      lastTok = pos;
      ++pos;
      return true;
    }
    return false;
  }

  long parseInt() {
    skipWs();
    if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
      error("expected integer", pos < src.size() ? pos : lastTok);
    lastTok = pos;
    long v = 0;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
      v = v * 10 + (src[pos] - '0');
      if (v > 1000000) error("integer literal too large", lastTok);
      ++pos;
    }
    return v;
  }

  RatFunc parsePrimary() {
    skipWs();
    if (pos >= src.size()) error("unexpected end of input", lastTok);
    const char c = src[pos];
    if (c == '(') {
      lastTok = pos;
      ++pos;
      RatFunc e = parseExpr();
      if (!accept(')')) error("expected ')'", pos < src.size() ? pos : lastTok);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      skipWs();
      lastTok = pos;
      std::string digits;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
        digits += src[pos++];
      return RatFunc(Rational(digits));
    }
    if (c == 'x' || c == 'z') {
      lastTok = pos;
      ++pos;
      std::size_t idxStart = pos;
      std::string digits;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
        digits += src[pos++];
      if (digits.empty()) error("expected variable index", idxStart < src.size() ? idxStart : lastTok);
      const long idx = std::stol(digits);
      if (ring.isScalar()) error("variables not allowed in scalar context", lastTok);
      if (ring.coords == Coords::affine) {
        if (c != 'x') error("this ring uses variables x1..x" + std::to_string(ring.vars), lastTok);
        if (idx < 1 || idx > ring.vars)
          error("variable index out of range (x1..x" + std::to_string(ring.vars) + ")", lastTok);
        return RatFunc(Polynomial::variable(ring, static_cast<int>(idx) - 1));
      }
      if (c != 'z') error("this ring uses variables z0..z" + std::to_string(ring.vars - 1), lastTok);
      if (idx < 0 || idx >= ring.vars)
        error("variable index out of range (z0..z" + std::to_string(ring.vars - 1) + ")", lastTok);
      return RatFunc(Polynomial::variable(ring, static_cast<int>(idx)));
    }
    error("unexpected character", pos);
  }

  RatFunc parseFactor() {
    bool negate = false;
    while (true) {
      if (accept('-')) {
        negate = !negate;
      } else if (accept('+')) {
      } else {
        break;
      }
    }
    RatFunc base = parsePrimary();
    if (accept('^')) {
      bool negExp = accept('-');
      const long e = parseInt();
      base = base.pow(static_cast<int>(negExp ? -e : e));
    }
    return negate ? -base : base;
  }

  RatFunc parseTerm() {
    RatFunc v = parseFactor();
    while (true) {
      if (accept('*')) {
        v *= parseFactor();
      } else if (accept('/')) {
        RatFunc d = parseFactor();
        if (d.isZero()) fail("DivisionByZero", "division by zero in expression");
        v /= d;
      } else {
        return v;
      }
    }
  }

  RatFunc parseExpr() {
    RatFunc v = parseTerm();
    while (true) {
      if (accept('+')) {
        v += parseTerm();
      } else if (accept('-')) {
        v -= parseTerm();
      } else {
        return v;
      }
    }
  }
};

}  // namespace

RatFunc parseExpression(const std::string& src, const Ring& ring) {
  Parser p(src, ring);
  RatFunc v = p.parseExpr();
  if (!p.atEnd()) p.error("unexpected trailing input", p.pos);
  if (!ring.isScalar() && ring.coords == Coords::cox && !v.isZero() && !isGraded(v))
    fail("InhomogeneousProjectiveInput",
         "numerator and denominator must be homogeneous in z-coordinates: " + src);
  return v;
}

}  // namespace weildeco
