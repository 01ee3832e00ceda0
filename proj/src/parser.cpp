#include "revcat/parser.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace revcat::lang {

namespace {

std::string joinExpected(const std::vector<std::string>& xs) {
  std::ostringstream out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out << (i + 1 == xs.size() ? " or " : ", ");
    out << xs[i];
  }
  return out.str();
}

}  // namespace

ParseError::ParseError(int line, int col, std::string message, std::vector<std::string> expected)
    : std::runtime_error("parse error at " + std::to_string(line) + ":" + std::to_string(col) +
                         ": " + message +
                         (expected.empty() ? "" : " (expected " + joinExpected(expected) + ")")),
      line(line),
      col(col),
      expected(std::move(expected)) {}

namespace {

enum class Tok {
  Ident,
  KwEnum,
  KwIso,
  KwMain,
  KwInl,
  KwInr,
  LBrace,
  RBrace,
  LParen,
  RParen,
  Comma,
  Pipe,
  Plus,
  Star,
  Colon,
  Equals,
  Irev,  // <->
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

const char* tokName(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::KwEnum: return "'enum'";
    case Tok::KwIso: return "'iso'";
    case Tok::KwMain: return "'main'";
    case Tok::KwInl: return "'inl'";
    case Tok::KwInr: return "'inr'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Pipe: return "'|'";
    case Tok::Plus: return "'+'";
    case Tok::Star: return "'*'";
    case Tok::Colon: return "':'";
    case Tok::Equals: return "'='";
    case Tok::Irev: return "'<->'";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '#') {  // line comment
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    int tl = line, tc = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      std::string word(text.substr(i, j - i));
      advance(j - i);
      Tok k = Tok::Ident;
      if (word == "enum") k = Tok::KwEnum;
      else if (word == "iso") k = Tok::KwIso;
      else if (word == "main") k = Tok::KwMain;
      else if (word == "inl") k = Tok::KwInl;
      else if (word == "inr") k = Tok::KwInr;
      out.push_back({k, word, tl, tc});
      continue;
    }
    if (c == '<' && i + 2 < text.size() && text[i + 1] == '-' && text[i + 2] == '>') {
      advance(3);
      out.push_back({Tok::Irev, "<->", tl, tc});
      continue;
    }
    Tok k;
    switch (c) {
      case '{': k = Tok::LBrace; break;
      case '}': k = Tok::RBrace; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case ',': k = Tok::Comma; break;
      case '|': k = Tok::Pipe; break;
      case '+': k = Tok::Plus; break;
      case '*': k = Tok::Star; break;
      case ':': k = Tok::Colon; break;
      case '=': k = Tok::Equals; break;
      default:
        throw ParseError(tl, tc, std::string("unexpected character '") + c + "'", {});
    }
    advance(1);
    out.push_back({k, std::string(1, c), tl, tc});
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, Program scope) : toks_(lex(text)), prog_(std::move(scope)) {}

  Program parseProgram() {
    while (at(Tok::KwEnum)) parseEnumDecl();
    while (at(Tok::KwIso)) parseIsoDef();
    if (at(Tok::KwMain)) {
      next();
      expect(Tok::Equals);
      prog_.main = parseTerm();
    }
    expect(Tok::End);
    return std::move(prog_);
  }

  TypePtr parseTypeOnly() {
    auto t = parseType();
    expect(Tok::End);
    return t;
  }

  ValuePtr parseValueOnly() {
    auto v = parseValue();
    expect(Tok::End);
    return v;
  }

  TermPtr parseTermOnly() {
    auto t = parseTerm();
    expect(Tok::End);
    return t;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  bool at(Tok k) const { return cur().kind == k; }
  void next() { ++pos_; }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::string got = cur().kind == Tok::End ? "end of input" : "'" + cur().text + "'";
    throw ParseError(cur().line, cur().col, "unexpected " + got, std::move(expected));
  }

  Token expect(Tok k) {
    if (!at(k)) fail({tokName(k)});
    Token t = cur();
    next();
    return t;
  }

  void parseEnumDecl() {
    expect(Tok::KwEnum);
    Token name = expect(Tok::Ident);
    expect(Tok::Equals);
    expect(Tok::LBrace);
    std::vector<std::string> constants;
    constants.push_back(expect(Tok::Ident).text);
    while (at(Tok::Comma)) {
      next();
      constants.push_back(expect(Tok::Ident).text);
    }
    expect(Tok::RBrace);
    if (const EnumDecl* existing = prog_.findEnum(name.text)) {
      // redeclaring the builtin unit enum identically is a harmless no-op
      if (existing->builtin && constants == existing->constants) return;
      throw ParseError(name.line, name.col, "duplicate enum '" + name.text + "'", {});
    }
    std::set<std::string> seen;
    for (const auto& c : constants) {
      if (!seen.insert(c).second)
        throw ParseError(name.line, name.col, "duplicate constant '" + c + "'", {});
      if (prog_.findConstant(c))
        throw ParseError(name.line, name.col,
                         "constant '" + c + "' already declared in another enum", {});
    }
    prog_.enums.push_back(EnumDecl{name.text, std::move(constants)});
  }

  void parseIsoDef() {
    expect(Tok::KwIso);
    Token name = expect(Tok::Ident);
    if (prog_.findDef(name.text))
      throw ParseError(name.line, name.col, "duplicate iso '" + name.text + "'", {});
    if (prog_.findConstant(name.text) || prog_.findEnum(name.text))
      throw ParseError(name.line, name.col,
                       "iso name '" + name.text + "' collides with an enum or constant", {});
    expect(Tok::Colon);
    TypePtr lhs = parseType();
    expect(Tok::Irev);
    TypePtr rhs = parseType();
    Iso iso = parseIsoLiteral();
    prog_.defs.push_back(IsoDef{name.text, IsoType{lhs, rhs}, std::move(iso)});
  }

  Iso parseIsoLiteral() {
    expect(Tok::LBrace);
    Iso iso;
    if (!at(Tok::Pipe)) fail({tokName(Tok::Pipe)});
    while (at(Tok::Pipe)) {
      next();
      ValuePtr lhs = parseValue();
      expect(Tok::Irev);
      ValuePtr rhs = parseValue();
      iso.clauses.push_back(Clause{lhs, rhs});
    }
    expect(Tok::RBrace);
    return iso;
  }

  // type := type1 ("+" type1)* ; type1 := atom ("*" atom)* ; left-associated
  TypePtr parseType() {
    TypePtr t = parseType1();
    while (at(Tok::Plus)) {
      next();
      t = sumType(t, parseType1());
    }
    return t;
  }

  TypePtr parseType1() {
    TypePtr t = parseTypeAtom();
    while (at(Tok::Star)) {
      next();
      t = prodType(t, parseTypeAtom());
    }
    return t;
  }

  TypePtr parseTypeAtom() {
    if (at(Tok::Ident)) {
      Token name = cur();
      next();
      if (!prog_.findEnum(name.text))
        throw ParseError(name.line, name.col, "unknown type '" + name.text + "'", {});
      return enumType(name.text);
    }
    if (at(Tok::LParen)) {
      next();
      TypePtr t = parseType();
      expect(Tok::RParen);
      return t;
    }
    fail({"identifier", tokName(Tok::LParen)});
  }

  // value := "inl" value | "inr" value | "(" value "," value ")" | ident
  ValuePtr parseValue() {
    if (at(Tok::KwInl)) {
      next();
      return injl(parseValue());
    }
    if (at(Tok::KwInr)) {
      next();
      return injr(parseValue());
    }
    if (at(Tok::LParen)) {
      next();
      ValuePtr a = parseValue();
      expect(Tok::Comma);
      ValuePtr b = parseValue();
      expect(Tok::RParen);
      return pairValue(a, b);
    }
    if (at(Tok::Ident)) {
      Token name = cur();
      next();
      return identValue(name);
    }
    fail({tokName(Tok::KwInl), tokName(Tok::KwInr), tokName(Tok::LParen), "identifier"});
  }

  // Constants take priority over variables.
  ValuePtr identValue(const Token& name) {
    if (auto c = prog_.findConstant(name.text))
      return constValue(c->first, name.text, c->second);
    return varValue(name.text);
  }

  // term := value | ident term | "{" clause+ "}" term | "(" term ")"
  TermPtr parseTerm() {
    if (at(Tok::LBrace)) {
      Iso iso = parseIsoLiteral();
      return appTerm(std::make_shared<Iso>(std::move(iso)), parseTerm());
    }
    if (at(Tok::Ident) && prog_.findDef(cur().text)) {
      Token name = cur();
      next();
      return appTerm(name.text, parseTerm());
    }
    if (at(Tok::LParen)) {
      next();
      TermPtr t = parseTerm();
      if (at(Tok::Comma)) {
        // a pair: both components must be values
        if (t->kind != Term::Kind::Val)
          throw ParseError(cur().line, cur().col, "pair components must be values", {});
        next();
        ValuePtr b = parseValue();
        expect(Tok::RParen);
        return valTerm(pairValue(t->value, b));
      }
      expect(Tok::RParen);
      return t;
    }
    return valTerm(parseValue());
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  Program prog_;
};

}  // namespace

Program parseProgram(std::string_view text) {
  return Parser(text, emptyProgram()).parseProgram();
}

TypePtr parseType(std::string_view text, const Program& scope) {
  return Parser(text, scope).parseTypeOnly();
}

ValuePtr parseValue(std::string_view text, const Program& scope) {
  return Parser(text, scope).parseValueOnly();
}

TermPtr parseTerm(std::string_view text, const Program& scope) {
  return Parser(text, scope).parseTermOnly();
}

}  // namespace revcat::lang
