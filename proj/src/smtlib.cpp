#include "apf/smtlib.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace apf {

namespace {

struct Token {
  enum class Kind { LParen, RParen, Symbol, Numeral, End };
  Kind kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : src_(text) {}

  Token next() {
    skip();
    Token t{Token::Kind::End, "", line_, col_};
    if (pos_ >= src_.size()) return t;
    char c = src_[pos_];
    if (c == '(') {
      advance();
      t.kind = Token::Kind::LParen;
      t.text = "(";
      return t;
    }
    if (c == ')') {
      advance();
      t.kind = Token::Kind::RParen;
      t.text = ")";
      return t;
    }
    std::string word;
    while (pos_ < src_.size() && !std::isspace(static_cast<unsigned char>(src_[pos_])) &&
           src_[pos_] != '(' && src_[pos_] != ')' && src_[pos_] != ';') {
      word.push_back(src_[pos_]);
      advance();
    }
    bool numeral = !word.empty();
    for (char w : word)
      if (!std::isdigit(static_cast<unsigned char>(w))) numeral = false;
    t.kind = numeral ? Token::Kind::Numeral : Token::Kind::Symbol;
    t.text = word;
    return t;
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == ';') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  const std::string& src_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

const std::set<std::string> kUnsupported = {"let",  "define-fun", "push",
                                            "pop",  "declare-fun",
                                            "define-sort", "declare-sort"};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) { bump(); }

  Script parse() {
    Script s;
    while (cur_.kind != Token::Kind::End) {
      expect(Token::Kind::LParen, "expected '('");
      Token head = cur_;
      std::string cmd = symbol("command name");
      if (cmd == "set-logic") {
        symbol("logic name");
        close();
      } else if (cmd == "check-sat" || cmd == "exit") {
        close();
      } else if (cmd == "declare-const") {
        Declaration d;
        d.name = symbol("constant name");
        d.sort = parseSort();
        if (decls_.count(d.name))
          fail(head, "duplicate declaration of '" + d.name + "'");
        if (d.name == "diff" || d.name == "select" || d.name == "store")
          fail(head, "'" + d.name + "' is reserved");
        decls_[d.name] = d.sort;
        s.declarations.push_back(d);
        close();
      } else if (cmd == "assert") {
        s.assertions.push_back(parseFormula());
        close();
      } else if (kUnsupported.count(cmd)) {
        fail(head, "unsupported command '" + cmd + "'");
      } else {
        fail(head, "unknown command '" + cmd + "'");
      }
    }
    return s;
  }

 private:
  void bump() { cur_ = lex_.next(); }

  [[noreturn]] void fail(const Token& at, const std::string& msg) {
    throw ParseError(msg, at.line, at.col);
  }

  void expect(Token::Kind k, const std::string& what) {
    if (cur_.kind != k) fail(cur_, what + ", got '" + cur_.text + "'");
    bump();
  }

  void close() { expect(Token::Kind::RParen, "expected ')'"); }

  std::string symbol(const std::string& what) {
    if (cur_.kind != Token::Kind::Symbol)
      fail(cur_, "expected " + what + ", got '" + cur_.text + "'");
    std::string s = cur_.text;
    bump();
    return s;
  }

  Sort parseSort() {
    if (cur_.kind == Token::Kind::Symbol && cur_.text == "Int") {
      bump();
      return Sort::Int;
    }
    if (cur_.kind == Token::Kind::LParen) {
      Token at = cur_;
      bump();
      if (symbol("sort constructor") != "Array")
        fail(at, "unsupported sort");
      if (symbol("index sort") != "Int" || symbol("element sort") != "Int")
        fail(at, "only (Array Int Int) is supported");
      close();
      return Sort::Array;
    }
    fail(cur_, "expected a sort, got '" + cur_.text + "'");
  }

  TermPtr apply(const Token& at, const FuncSymbol& s, std::vector<TermPtr> args) {
    try {
      return buildTerm(s, std::move(args));
    } catch (const SortError& e) {
      fail(at, e.what());
    }
  }

  TermPtr parseTerm() {
    Token at = cur_;
    if (cur_.kind == Token::Kind::Numeral) {
      Int v(cur_.text);
      bump();
      return mkIntLit(v);
    }
    if (cur_.kind == Token::Kind::Symbol) {
      std::string name = cur_.text;
      bump();
      return resolve(at, name);
    }
    expect(Token::Kind::LParen, "expected a term");
    Token head = cur_;
    std::string op = symbol("operator");
    std::vector<TermPtr> args;
    while (cur_.kind != Token::Kind::RParen && cur_.kind != Token::Kind::End)
      args.push_back(parseTerm());
    close();
    auto arity = [&](size_t n) {
      if (args.size() != n)
        fail(head, "'" + op + "' expects " + std::to_string(n) +
                       " arguments, got " + std::to_string(args.size()));
    };
    if (op == "-" && args.size() == 1) {
      if (args[0]->kind == Term::Kind::IntLit) return mkIntLit(-args[0]->value);
      return apply(head, sym::sub(), {mkIntLit(0), args[0]});
    }
    auto nary = [&](const FuncSymbol& s) {  // left-associated chain
      if (args.size() < 2)
        fail(head, "'" + op + "' expects at least 2 arguments");
      TermPtr acc = args[0];
      for (size_t i = 1; i < args.size(); ++i)
        acc = apply(head, s, {acc, args[i]});
      return acc;
    };
    if (op == "+") return nary(sym::add());
    if (op == "-") return nary(sym::sub());
    if (op == "*") return nary(sym::mul());
    if (op == "select") {
      arity(2);
      return apply(head, sym::select(), std::move(args));
    }
    if (op == "store") {
      arity(3);
      return apply(head, sym::store(), std::move(args));
    }
    if (op == "diff") {
      arity(2);
      return apply(head, sym::diff(), std::move(args));
    }
    fail(head, "unknown operator '" + op + "'");
  }

  TermPtr resolve(const Token& at, const std::string& name) {
    if (bound_.count(name)) return mkVar(name);
    auto it = decls_.find(name);
    if (it == decls_.end()) fail(at, "unknown symbol '" + name + "'");
    return it->second == Sort::Int ? mkConst(sym::intConst(name))
                                   : mkConst(sym::arrayConst(name));
  }

  TermPtr parseAtomTerm(const Token& head, const FuncSymbol& cmp,
                        std::vector<TermPtr> args) {
    if (args.size() != 2)
      fail(head, "'" + cmp.name + "' expects 2 arguments, got " +
                     std::to_string(args.size()));
    return apply(head, cmp, std::move(args));
  }

  std::vector<std::string> parseBinders() {
    expect(Token::Kind::LParen, "expected a binder list");
    std::vector<std::string> vars;
    while (cur_.kind == Token::Kind::LParen) {
      Token at = cur_;
      bump();
      std::string v = symbol("variable name");
      if (symbol("variable sort") != "Int")
        fail(at, "only Int-sorted bound variables are supported");
      close();
      if (bound_.count(v)) fail(at, "shadowed bound variable '" + v + "'");
      vars.push_back(v);
    }
    close();
    if (vars.empty()) fail(cur_, "empty binder list");
    return vars;
  }

  FormulaPtr parseFormula() {
    Token at = cur_;
    if (cur_.kind == Token::Kind::Symbol) {
      if (cur_.text == "true") {
        bump();
        return mkTrue();
      }
      if (cur_.text == "false") {
        bump();
        return mkFalse();
      }
      fail(at, "expected a formula, got '" + cur_.text + "'");
    }
    expect(Token::Kind::LParen, "expected a formula");
    Token head = cur_;
    std::string op = symbol("connective or predicate");
    if (op == "<" || op == "<=" || op == "=") {
      std::vector<TermPtr> args;
      while (cur_.kind != Token::Kind::RParen && cur_.kind != Token::Kind::End)
        args.push_back(parseTerm());
      close();
      const FuncSymbol& cmp =
          op == "<" ? sym::lt() : op == "<=" ? sym::le() : sym::eq();
      return mkAtom(parseAtomTerm(head, cmp, std::move(args)));
    }
    if (op == "not") {
      FormulaPtr k = parseFormula();
      close();
      return mkNot(k);
    }
    if (op == "and" || op == "or" || op == "=>") {
      std::vector<FormulaPtr> kids;
      while (cur_.kind != Token::Kind::RParen && cur_.kind != Token::Kind::End)
        kids.push_back(parseFormula());
      close();
      if (kids.size() < 2)
        fail(head, "'" + op + "' expects at least 2 arguments");
      if (op == "and") return mkAnd(std::move(kids));
      if (op == "or") return mkOr(std::move(kids));
      FormulaPtr acc = kids.back();  // => is right-associative
      for (size_t i = kids.size() - 1; i-- > 0;) acc = mkImplies(kids[i], acc);
      return acc;
    }
    if (op == "forall" || op == "exists") {
      auto vars = parseBinders();
      for (auto& v : vars) bound_.insert(v);
      FormulaPtr body = parseFormula();
      for (auto& v : vars) bound_.erase(v);
      close();
      if (op == "forall") return mkForall(std::move(vars), std::move(body));
      return mkNot(mkForall(std::move(vars), mkNot(std::move(body))));
    }
    if (kUnsupported.count(op)) fail(head, "unsupported construct '" + op + "'");
    fail(head, "unknown connective or predicate '" + op + "'");
  }

  Lexer lex_;
  Token cur_{Token::Kind::End, "", 1, 1};
  std::map<std::string, Sort> decls_;
  std::set<std::string> bound_;
};

}  // namespace

Script parseScript(const std::string& text) { return Parser(text).parse(); }

std::string printScript(const Script& s) {
  std::ostringstream os;
  for (auto& d : s.declarations)
    os << "(declare-const " << d.name << ' ' << sortName(d.sort) << ")\n";
  for (auto& f : s.assertions)
    os << "(assert " << printFormula(f) << ")\n";
  return os.str();
}

}  // namespace apf
