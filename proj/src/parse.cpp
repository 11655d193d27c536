#include "cagb/parse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cagb {

namespace {

struct Token {
  enum class Kind { Number, Ident, Plus, Minus, Star, Caret, Slash, Colon,
                    LBracket, RBracket, LParen, RParen, Comma, End };
  Kind kind;
  std::string text;
  std::size_t column; // 1-based
};

class Lexer {
public:
  Lexer(const std::string& src, std::size_t line) : src_(src), line_(line) {
    advance();
  }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(line_, tok_.column, what);
  }

  std::size_t line() const { return line_; }

private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    tok_.column = pos_ + 1;
    if (pos_ >= src_.size()) {
      tok_ = {Token::Kind::End, "", pos_ + 1};
      return;
    }
    char c = src_[pos_];
    auto single = [&](Token::Kind k) {
      tok_ = {k, std::string(1, c), pos_ + 1};
      ++pos_;
    };
    switch (c) {
    case '+': single(Token::Kind::Plus); return;
    case '-': single(Token::Kind::Minus); return;
    case '*': single(Token::Kind::Star); return;
    case '^': single(Token::Kind::Caret); return;
    case '/': single(Token::Kind::Slash); return;
    case ':': single(Token::Kind::Colon); return;
    case '[': single(Token::Kind::LBracket); return;
    case ']': single(Token::Kind::RBracket); return;
    case '(': single(Token::Kind::LParen); return;
    case ')': single(Token::Kind::RParen); return;
    case ',': single(Token::Kind::Comma); return;
    default: break;
    }
    std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_])))
        ++pos_;
      tok_ = {Token::Kind::Number, src_.substr(start, pos_ - start), start + 1};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_'))
        ++pos_;
      tok_ = {Token::Kind::Ident, src_.substr(start, pos_ - start), start + 1};
      return;
    }
    throw ParseError(line_, pos_ + 1,
                     std::string("unexpected character '") + c + "'");
  }

  const std::string& src_;
  std::size_t line_;
  std::size_t pos_ = 0;
  Token tok_{Token::Kind::End, "", 1};
};

std::string lowered(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

FieldElem parseCoefficient(Lexer& lex, const Ring& ring) {
  Token num = lex.take();
  BigInt n(num.text, 10);
  if (lex.peek().kind == Token::Kind::Slash) {
    if (!ring->field().isRationals())
      lex.fail("quotient literals are only valid over Q");
    lex.take();
    if (lex.peek().kind != Token::Kind::Number)
      lex.fail("expected denominator");
    Token den = lex.take();
    BigInt d(den.text, 10);
    if (d == 0)
      throw ParseError(lex.line(), den.column, "zero denominator");
    return ring->field().fromQuotient(n, d);
  }
  return ring->field().fromInteger(n);
}

// term := coeff? ('*'? var ('^' nat)?)*
Polynomial::Term parseTerm(Lexer& lex, const Ring& ring) {
  FieldElem coeff = ring->field().one();
  std::vector<std::uint32_t> exps(ring->arity(), 0);
  bool sawFactor = false;

  if (lex.peek().kind == Token::Kind::Number) {
    coeff = parseCoefficient(lex, ring);
    sawFactor = true;
  }
  for (;;) {
    if (lex.peek().kind == Token::Kind::Star) {
      lex.take();
      if (lex.peek().kind == Token::Kind::Number) {
        // products of literals, e.g. "3 * 5"
        coeff = coeff * parseCoefficient(lex, ring);
        continue;
      }
      if (lex.peek().kind != Token::Kind::Ident)
        lex.fail("expected variable after '*'");
    }
    if (lex.peek().kind != Token::Kind::Ident)
      break;
    Token var = lex.take();
    auto index = ring->indexOf(var.text);
    if (!index)
      throw UnknownVariable("unknown variable '" + var.text + "' at " +
                            std::to_string(lex.line()) + ":" +
                            std::to_string(var.column));
    std::uint32_t e = 1;
    if (lex.peek().kind == Token::Kind::Caret) {
      lex.take();
      if (lex.peek().kind != Token::Kind::Number)
        lex.fail("expected exponent");
      Token expTok = lex.take();
      unsigned long v = 0;
      try {
        v = std::stoul(expTok.text);
      } catch (const std::exception&) {
        throw ParseError(lex.line(), expTok.column, "exponent out of range");
      }
      if (v > 0xffffffffUL)
        throw ParseError(lex.line(), expTok.column, "exponent out of range");
      e = static_cast<std::uint32_t>(v);
    }
    std::uint64_t s = std::uint64_t(exps[*index]) + e;
    if (s > 0xffffffffUL)
      throw ParseError(lex.line(), var.column, "exponent overflow");
    exps[*index] = static_cast<std::uint32_t>(s);
    sawFactor = true;
  }
  if (!sawFactor)
    lex.fail("expected a term");
  return {Monomial(std::move(exps)), std::move(coeff)};
}

Polynomial parsePoly(Lexer& lex, const Ring& ring) {
  std::vector<Polynomial::Term> terms;
  bool negative = false;
  if (lex.peek().kind == Token::Kind::Plus)
    lex.take();
  else if (lex.peek().kind == Token::Kind::Minus) {
    lex.take();
    negative = true;
  }
  for (;;) {
    Polynomial::Term t = parseTerm(lex, ring);
    if (negative)
      t.coeff = -t.coeff;
    terms.push_back(std::move(t));
    if (lex.peek().kind == Token::Kind::Plus)
      negative = false;
    else if (lex.peek().kind == Token::Kind::Minus)
      negative = true;
    else
      break;
    lex.take();
  }
  if (lex.peek().kind != Token::Kind::End)
    lex.fail("trailing input after polynomial");
  return Polynomial::fromTerms(ring, std::move(terms));
}

MonomialOrder parseOrderFrom(Lexer& lex) {
  if (lex.peek().kind != Token::Kind::Ident)
    lex.fail("expected an order name");
  Token name = lex.take();
  std::string id = lowered(name.text);
  if (id == "lex")
    return MonomialOrder::lex();
  if (id == "grevlex")
    return MonomialOrder::grevlex();
  if (id == "graded" || id == "homog") {
    if (lex.peek().kind != Token::Kind::LParen)
      lex.fail("expected '(' after '" + id + "'");
    lex.take();
    MonomialOrder base = parseOrderFrom(lex);
    if (lex.peek().kind != Token::Kind::RParen)
      lex.fail("expected ')'");
    lex.take();
    return id == "graded" ? MonomialOrder::graded(std::move(base))
                          : MonomialOrder::homogInduced(std::move(base));
  }
  throw ParseError(lex.line(), name.column,
                   "unknown order '" + name.text + "'");
}

Field parseFieldFrom(Lexer& lex) {
  if (lex.peek().kind != Token::Kind::Ident)
    lex.fail("expected a field name ('q' or 'fp:<p>')");
  Token name = lex.take();
  std::string id = lowered(name.text);
  if (id == "q")
    return Field::rationals();
  if (id == "fp") {
    if (lex.peek().kind != Token::Kind::Colon)
      lex.fail("expected ':' after 'fp'");
    lex.take();
    if (lex.peek().kind != Token::Kind::Number)
      lex.fail("expected a prime modulus");
    Token mod = lex.take();
    std::uint64_t p = 0;
    try {
      p = std::stoull(mod.text);
    } catch (const std::exception&) {
      throw ParseError(lex.line(), mod.column, "modulus out of range");
    }
    return Field::prime(p);
  }
  throw ParseError(lex.line(), name.column,
                   "unknown field '" + name.text + "'");
}

Ring parseRingHeaderFrom(Lexer& lex) {
  if (lex.peek().kind != Token::Kind::Ident ||
      lowered(lex.peek().text) != "ring")
    lex.fail("expected 'ring'");
  lex.take();
  Field field = parseFieldFrom(lex);
  if (lex.peek().kind != Token::Kind::LBracket)
    lex.fail("expected '[' before variable names");
  lex.take();
  std::vector<std::string> names;
  for (;;) {
    if (lex.peek().kind != Token::Kind::Ident)
      lex.fail("expected a variable name");
    names.push_back(lex.take().text);
    if (lex.peek().kind == Token::Kind::Comma) {
      lex.take();
      continue;
    }
    break;
  }
  if (lex.peek().kind != Token::Kind::RBracket)
    lex.fail("expected ']'");
  lex.take();
  MonomialOrder order = parseOrderFrom(lex);
  if (lex.peek().kind != Token::Kind::End)
    lex.fail("trailing input after ring header");
  std::size_t arity = names.size();
  return makeRing(arity, std::move(order), field, std::move(names));
}

} // namespace

Polynomial parsePolynomial(const std::string& text, const Ring& ring,
                           std::size_t lineNo) {
  Lexer lex(text, lineNo);
  return parsePoly(lex, ring);
}

MonomialOrder parseOrder(const std::string& text) {
  Lexer lex(text, 1);
  MonomialOrder ord = parseOrderFrom(lex);
  if (lex.peek().kind != Token::Kind::End)
    lex.fail("trailing input after order");
  return ord;
}

Field parseField(const std::string& text) {
  Lexer lex(text, 1);
  Field f = parseFieldFrom(lex);
  if (lex.peek().kind != Token::Kind::End)
    lex.fail("trailing input after field");
  return f;
}

Ring parseRingHeader(const std::string& line, std::size_t lineNo) {
  Lexer lex(line, lineNo);
  return parseRingHeaderFrom(lex);
}

JobSpec parseJob(const std::string& text) {
  return parseJob(text, std::nullopt, std::nullopt);
}

JobSpec parseJob(const std::string& text,
                 const std::optional<MonomialOrder>& orderOverride,
                 const std::optional<Field>& fieldOverride) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineNo = 0;
  JobSpec spec;
  while (std::getline(in, line)) {
    ++lineNo;
    std::size_t firstNonSpace = line.find_first_not_of(" \t\r");
    if (firstNonSpace == std::string::npos || line[firstNonSpace] == '#')
      continue;
    if (!spec.ring) {
      Ring header = parseRingHeader(line, lineNo);
      if (orderOverride || fieldOverride)
        spec.ring = makeRing(header->arity(),
                             orderOverride.value_or(header->order()),
                             fieldOverride.value_or(header->field()),
                             header->names());
      else
        spec.ring = header;
      continue;
    }
    spec.generators.push_back(parsePolynomial(line, spec.ring, lineNo));
  }
  if (!spec.ring)
    throw ParseError(lineNo ? lineNo : 1, 1, "missing ring header");
  return spec;
}

} // namespace cagb
