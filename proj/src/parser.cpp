#include "slimcon/parser.hpp"

#include <cctype>

namespace slimcon {

namespace {

enum class Tok {
  Ident, All, Ex, LParen, RParen, Dot, Comma,
  Eq, Leq, Lt, Arrow, Bar, Amp, Tilde, End,
};

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) bump();
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= src_.size()) {
      tok_.kind = Tok::End;
      tok_.text.clear();
      return;
    }
    char c = src_[pos_];
    auto single = [&](Tok k) {
      tok_.kind = k;
      tok_.text = std::string(1, c);
      bump();
    };
    switch (c) {
      case '(': single(Tok::LParen); return;
      case ')': single(Tok::RParen); return;
      case '.': single(Tok::Dot); return;
      case ',': single(Tok::Comma); return;
      case '=': single(Tok::Eq); return;
      case '|': single(Tok::Bar); return;
      case '&': single(Tok::Amp); return;
      case '~': single(Tok::Tilde); return;
      case '+':
      case '*':
        single(Tok::Ident);
        return;
      case '<':
        bump();
        if (pos_ < src_.size() && src_[pos_] == '=') {
          bump();
          tok_.kind = Tok::Leq;
          tok_.text = "<=";
        } else {
          tok_.kind = Tok::Lt;
          tok_.text = "<";
        }
        return;
      case '-':
        bump();
        if (pos_ < src_.size() && src_[pos_] == '>') {
          bump();
          tok_.kind = Tok::Arrow;
          tok_.text = "->";
          return;
        }
        throw ParseError("stray '-'", tok_.line, tok_.col);
      default:
        break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        id += src_[pos_];
        bump();
      }
      if (id == "ALL")
        tok_.kind = Tok::All;
      else if (id == "EX")
        tok_.kind = Tok::Ex;
      else
        tok_.kind = Tok::Ident;
      tok_.text = std::move(id);
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
  }

  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

class Parser {
 public:
  Parser(const std::string& src, const Signature& sig) : lex_(src), sig_(sig) {}

  Formula run() {
    Formula f = formula();
    expect(Tok::End, "end of input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, lex_.peek().line, lex_.peek().col);
  }

  Token expect(Tok k, const std::string& what) {
    if (lex_.peek().kind != k) fail("expected " + what);
    return lex_.take();
  }

  Formula formula() {
    if (lex_.peek().kind == Tok::All || lex_.peek().kind == Tok::Ex) {
      bool uni = lex_.take().kind == Tok::All;
      Token var = expect(Tok::Ident, "variable name");
      if (sig_.findRelation(var.text) || sig_.findFunction(var.text))
        throw ParseError("bound variable shadows symbol " + var.text, var.line, var.col);
      expect(Tok::Dot, "'.'");
      Formula body = formula();
      return uni ? Formula::forall(var.text, std::move(body))
                 : Formula::exists(var.text, std::move(body));
    }
    Formula lhs = disj();
    if (lex_.peek().kind == Tok::Arrow) {
      lex_.take();
      return Formula::implies(std::move(lhs), formula());
    }
    return lhs;
  }

  Formula disj() {
    std::vector<Formula> parts{conj()};
    while (lex_.peek().kind == Tok::Bar) {
      lex_.take();
      parts.push_back(conj());
    }
    return Formula::lor(std::move(parts));
  }

  Formula conj() {
    std::vector<Formula> parts{neg()};
    while (lex_.peek().kind == Tok::Amp) {
      lex_.take();
      parts.push_back(neg());
    }
    return Formula::land(std::move(parts));
  }

  Formula neg() {
    if (lex_.peek().kind == Tok::Tilde) {
      lex_.take();
      return Formula::lnot(neg());
    }
    return atom();
  }

  Formula atom() {
    if (lex_.peek().kind == Tok::LParen) {
      lex_.take();
      Formula f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    Token head = lex_.peek();
    // Parse a call-or-identifier first; whether it was a relation application
    // or the left side of a comparison depends on the next token.
    Term t = rawTerm();
    switch (lex_.peek().kind) {
      case Tok::Eq:
        lex_.take();
        return Formula::eq(validatedTerm(t, head), validatedTerm(rawTerm(), head));
      case Tok::Leq: {
        lex_.take();
        requireOrderRelation(head);
        return Formula::rel("<=", {validatedTerm(t, head), validatedTerm(rawTerm(), head)});
      }
      case Tok::Lt: {
        lex_.take();
        requireOrderRelation(head);
        Term a = validatedTerm(t, head);
        Term b = validatedTerm(rawTerm(), head);
        return Formula::land({Formula::rel("<=", {a, b}), Formula::lnot(Formula::eq(a, b))});
      }
      default:
        break;
    }
    if (t.kind == Term::Kind::App) {
      const auto* rel = sig_.findRelation(t.name);
      if (rel) {
        if (rel->arity != static_cast<int>(t.args.size()))
          throw ParseError("relation " + t.name + " expects " + std::to_string(rel->arity) +
                               " arguments",
                           head.line, head.col);
        std::vector<Term> args;
        for (auto& a : t.args) args.push_back(validatedTerm(a, head));
        return Formula::rel(t.name, std::move(args));
      }
      throw ParseError("unknown relation symbol " + t.name, head.line, head.col);
    }
    fail("expected a comparison or relation application");
  }

  void requireOrderRelation(const Token& at) {
    const auto* rel = sig_.findRelation("<=");
    if (!rel || rel->arity != 2)
      throw ParseError("signature has no binary order relation <=", at.line, at.col);
  }

  // Syntactic term; symbol kinds are checked later.
  Term rawTerm() {
    Token id = expect(Tok::Ident, "identifier");
    if (lex_.peek().kind != Tok::LParen) return Term::var(id.text);
    lex_.take();
    std::vector<Term> args;
    if (lex_.peek().kind != Tok::RParen) {
      args.push_back(rawTerm());
      while (lex_.peek().kind == Tok::Comma) {
        lex_.take();
        args.push_back(rawTerm());
      }
    }
    expect(Tok::RParen, "')'");
    return Term::app(id.text, std::move(args));
  }

  // Resolve a raw term into a proper term: applications must name functions
  // of the right arity, bare identifiers become variables unless they name a
  // nullary function.
  Term validatedTerm(const Term& t, const Token& at) {
    if (t.kind == Term::Kind::Var) {
      if (sig_.findRelation(t.name))
        throw ParseError("relation symbol " + t.name + " used as a term", at.line, at.col);
      const auto* fn = sig_.findFunction(t.name);
      if (fn) {
        if (fn->arity != 0)
          throw ParseError("function " + t.name + " expects arguments", at.line, at.col);
        return Term::app(t.name, {});
      }
      return t;
    }
    const auto* fn = sig_.findFunction(t.name);
    if (!fn) throw ParseError("unknown function symbol " + t.name, at.line, at.col);
    if (fn->arity != static_cast<int>(t.args.size()))
      throw ParseError("function " + t.name + " expects " + std::to_string(fn->arity) +
                           " arguments",
                       at.line, at.col);
    std::vector<Term> args;
    for (const auto& a : t.args) args.push_back(validatedTerm(a, at));
    return Term::app(t.name, std::move(args));
  }

  Lexer lex_;
  const Signature& sig_;
};

}  // namespace

Formula parse(const std::string& src, const Signature& sig) {
  return Parser(src, sig).run();
}

}  // namespace slimcon
