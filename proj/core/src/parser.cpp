//  Copyright 2026 The almonoid Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "almonoid/parser.hpp"

#include <cctype>
#include <optional>

#include "almonoid/errors.hpp"

namespace almonoid {

namespace {

enum class Tok : uint8_t {
  KwClaim,
  KwForall,
  Ident,
  Zero,
  One,
  OpPlus,
  OpJoin,
  OpMeet,
  OpStar,
  LParen,
  RParen,
  Colon,
  Eq,
  Leq,
  Implies,
  Amp,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_ws_and_comments();
    Token t;
    t.line = line_;
    t.col = col_;
    if (eof()) {
      t.kind = Tok::End;
      return t;
    }
    const char c = peek();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                        peek() == '_' || peek() == '\''))
        word.push_back(advance());
      if (word == "claim")
        t.kind = Tok::KwClaim;
      else if (word == "forall")
        t.kind = Tok::KwForall;
      else if (word == "d")
        t.kind = Tok::OpStar;  // `d` is the star operator, never a variable
      else
        t.kind = Tok::Ident;
      t.text = std::move(word);
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek())))
        num.push_back(advance());
      if (num == "0")
        t.kind = Tok::Zero;
      else if (num == "1")
        t.kind = Tok::One;
      else
        throw SyntaxError("only the constants 0 and 1 are allowed", t.line,
                          t.col);
      t.text = std::move(num);
      return t;
    }
    advance();
    switch (c) {
      case '+': t.kind = Tok::OpPlus; return t;
      case '|': t.kind = Tok::OpJoin; return t;
      case '^': t.kind = Tok::OpMeet; return t;
      case '(': t.kind = Tok::LParen; return t;
      case ')': t.kind = Tok::RParen; return t;
      case ':': t.kind = Tok::Colon; return t;
      case '&': t.kind = Tok::Amp; return t;
      case '<':
        if (!eof() && peek() == '=') {
          advance();
          t.kind = Tok::Leq;
          return t;
        }
        throw SyntaxError("expected '<='", t.line, t.col);
      case '=':
        if (!eof() && peek() == '=') {
          advance();
          if (!eof() && peek() == '>') {
            advance();
            t.kind = Tok::Implies;
            return t;
          }
          throw SyntaxError("expected '==>'", t.line, t.col);
        }
        t.kind = Tok::Eq;
        return t;
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'",
                          t.line, t.col);
    }
  }

 private:
  bool eof() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }
  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void skip_ws_and_comments() {
    while (!eof()) {
      const char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '#') {
        while (!eof() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { shift(); }

  bool at_end() const { return cur_.kind == Tok::End; }

  Claim parse_one() {
    expect(Tok::KwClaim, "expected 'claim'");
    Claim c;
    c.id = expect(Tok::Ident, "expected claim identifier").text;
    expect(Tok::Colon, "expected ':'");
    expect(Tok::KwForall, "expected 'forall'");
    while (cur_.kind == Tok::Ident) {
      for (const auto& v : c.vars)
        if (v == cur_.text)
          throw SyntaxError("duplicate variable '" + cur_.text + "'",
                            cur_.line, cur_.col);
      c.vars.push_back(cur_.text);
      shift();
    }
    if (c.vars.empty())
      throw SyntaxError("forall needs at least one variable", cur_.line,
                        cur_.col);
    expect(Tok::Colon, "expected ':'");

    vars_ = &c.vars;
    std::vector<Relation> rels;
    rels.push_back(parse_relation());
    while (cur_.kind == Tok::Amp) {
      shift();
      rels.push_back(parse_relation());
    }
    if (cur_.kind == Tok::Implies) {
      shift();
      c.hypotheses = std::move(rels);
      c.conclusion = parse_relation();
    } else {
      if (rels.size() != 1)
        throw SyntaxError("'&'-joined relations need a '==>' conclusion",
                          cur_.line, cur_.col);
      c.conclusion = std::move(rels.front());
    }
    return c;
  }

 private:
  void shift() { cur_ = lexer_.next(); }

  Token expect(Tok kind, const char* msg) {
    if (cur_.kind != kind) throw SyntaxError(msg, cur_.line, cur_.col);
    Token t = cur_;
    shift();
    return t;
  }

  static std::optional<OpSym> as_op(Tok k) {
    switch (k) {
      case Tok::OpPlus: return OpSym::Plus;
      case Tok::OpJoin: return OpSym::Join;
      case Tok::OpMeet: return OpSym::Meet;
      case Tok::OpStar: return OpSym::Star;
      default: return std::nullopt;
    }
  }

  Relation parse_relation() {
    Relation r;
    r.lhs = parse_term();
    if (cur_.kind == Tok::Eq)
      r.op = RelOp::Eq;
    else if (cur_.kind == Tok::Leq)
      r.op = RelOp::Leq;
    else
      throw SyntaxError("expected '=' or '<='", cur_.line, cur_.col);
    shift();
    r.rhs = parse_term();
    return r;
  }

  // term := atom (OP atom)*, a single operator per unparenthesized chain,
  // associating left.
  Term parse_term() {
    Term acc = parse_atom();
    std::optional<OpSym> chain_op;
    while (auto op = as_op(cur_.kind)) {
      const int line = cur_.line, col = cur_.col;
      if (chain_op && *chain_op != *op)
        throw SyntaxError(
            "mixed operators need parentheses (single operator per chain)",
            line, col);
      chain_op = *op;
      shift();
      acc = Term::make(*op, std::move(acc), parse_atom());
    }
    return acc;
  }

  Term parse_atom() {
    switch (cur_.kind) {
      case Tok::Zero: shift(); return Term::zero();
      case Tok::One: shift(); return Term::one();
      case Tok::LParen: {
        shift();
        Term t = parse_term();
        expect(Tok::RParen, "expected ')'");
        return t;
      }
      case Tok::Ident: {
        const Token t = cur_;
        shift();
        for (size_t i = 0; i < vars_->size(); ++i)
          if ((*vars_)[i] == t.text)
            return Term::variable(static_cast<int>(i), t.text);
        throw UnboundVariableError(t.text, t.line, t.col);
      }
      default:
        throw SyntaxError("expected a term", cur_.line, cur_.col);
    }
  }

  Lexer lexer_;
  Token cur_;
  const std::vector<std::string>* vars_ = nullptr;
};

}  // namespace

Claim parse_claim(std::string_view text) {
  Parser p(text);
  Claim c = p.parse_one();
  if (!p.at_end()) throw SyntaxError("trailing input after claim", 0, 0);
  return c;
}

std::vector<Claim> parse_claims(std::string_view text) {
  Parser p(text);
  std::vector<Claim> out;
  while (!p.at_end()) out.push_back(p.parse_one());
  return out;
}

std::string print_term(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Var: return t.var_name;
    case Term::Kind::Zero: return "0";
    case Term::Kind::One: return "1";
    case Term::Kind::Op: {
      const char* op = "?";
      switch (t.op) {
        case OpSym::Plus: op = "+"; break;
        case OpSym::Join: op = "|"; break;
        case OpSym::Meet: op = "^"; break;
        case OpSym::Star: op = "d"; break;
      }
      return "(" + print_term(t.args[0]) + " " + op + " " +
             print_term(t.args[1]) + ")";
    }
  }
  return "?";
}

std::string print_relation(const Relation& r) {
  return print_term(r.lhs) + (r.op == RelOp::Eq ? " = " : " <= ") +
         print_term(r.rhs);
}

std::string print_claim(const Claim& c) {
  std::string out = "claim " + c.id + " : forall";
  for (const auto& v : c.vars) out += " " + v;
  out += " : ";
  for (size_t i = 0; i < c.hypotheses.size(); ++i) {
    if (i) out += " & ";
    out += print_relation(c.hypotheses[i]);
  }
  if (!c.hypotheses.empty()) out += " ==> ";
  out += print_relation(c.conclusion);
  return out;
}

}  // namespace almonoid
