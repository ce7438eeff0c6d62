#include <cctype>

#include "fvkit/errors.hpp"
#include "fvkit/formula.hpp"

namespace fvkit {

namespace {

struct Token {
  enum Kind { Open, Close, Word, End } kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(') {
      out.push_back({Token::Open, "(", i++});
    } else if (c == ')') {
      out.push_back({Token::Close, ")", i++});
    } else {
      std::size_t start = i;
      while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) && s[i] != '(' &&
             s[i] != ')')
        ++i;
      out.push_back({Token::Word, s.substr(start, i - start), start});
    }
  }
  out.push_back({Token::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(const std::string& text, const Vocabulary* vocab, Vocabulary* inferred)
      : toks_(tokenize(text)), vocab_(vocab), inferred_(inferred) {}

  Formula parse_all() {
    Formula f = formula();
    if (peek().kind != Token::End) fail("unexpected trailing input");
    return f;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& next() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().pos); }

  void expect(Token::Kind k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    next();
  }

  std::string variable() {
    if (peek().kind != Token::Word || !is_variable_name(peek().text)) fail("expected variable");
    return next().text;
  }

  Formula formula() {
    const Token& t = peek();
    if (t.kind == Token::Word) {
      if (t.text == "true") {
        next();
        return Formula::top();
      }
      if (t.text == "false") {
        next();
        return Formula::bot();
      }
      fail("expected formula, found '" + t.text + "'");
    }
    if (t.kind != Token::Open) fail("expected formula");
    next();
    if (peek().kind != Token::Word) fail("expected operator or relation name");
    const std::string head = peek().text;
    if (head == "exists" || head == "forall") {
      next();
      expect(Token::Open, "'(' opening the variable list");
      std::vector<std::string> vars;
      while (peek().kind == Token::Word) vars.push_back(variable());
      if (vars.empty()) fail("quantifier needs at least one variable");
      expect(Token::Close, "')' closing the variable list");
      Formula body = formula();
      expect(Token::Close, "')'");
      const NodeKind k = head == "exists" ? NodeKind::Exists : NodeKind::Forall;
      for (auto it = vars.rbegin(); it != vars.rend(); ++it)
        body = Formula::quantifier(k, *it, body);
      return body;
    }
    if (head == "and" || head == "or") {
      next();
      std::vector<Formula> cs;
      while (peek().kind != Token::Close) {
        if (peek().kind == Token::End) fail("unterminated connective");
        cs.push_back(formula());
      }
      if (cs.empty()) fail("connective needs at least one operand");
      next();
      return Formula::connective(head == "and" ? NodeKind::And : NodeKind::Or, std::move(cs));
    }
    if (head == "not") {
      next();
      if (peek().kind != Token::Open) fail("negation applies only to atoms (NNF)");
      std::size_t save = i_;
      next();
      if (peek().kind != Token::Word || peek().text == "not" || peek().text == "and" ||
          peek().text == "or" || peek().text == "exists" || peek().text == "forall") {
        i_ = save;
        fail("negation applies only to atoms (NNF)");
      }
      Formula a = atom_body(false);
      expect(Token::Close, "')' closing negation");
      return a;
    }
    return atom_body(true);
  }

  // Parses "NAME var* )" after the opening parenthesis.
  Formula atom_body(bool positive) {
    const Token name = next();
    if (name.kind != Token::Word) fail("expected relation name");
    std::vector<std::string> args;
    while (peek().kind == Token::Word) args.push_back(variable());
    expect(Token::Close, "')' closing atom");
    if (name.text == "=") {
      if (args.size() != 2) throw ParseError("'=' takes exactly two variables", name.pos);
      return Formula::literal(positive, "=", std::move(args));
    }
    if (!is_relation_name(name.text))
      throw ParseError("invalid relation name '" + name.text + "'", name.pos);
    const int arity = static_cast<int>(args.size());
    if (inferred_) {
      if (arity < 1) throw ParseError("relation '" + name.text + "' used with no arguments", name.pos);
      auto [it, fresh] = inferred_->emplace(name.text, arity);
      if (!fresh && it->second != arity)
        throw ParseError("inconsistent arity for '" + name.text + "'", name.pos);
    } else {
      auto it = vocab_->find(name.text);
      if (it == vocab_->end()) throw ParseError("unknown relation '" + name.text + "'", name.pos);
      if (it->second != arity)
        throw ParseError("arity mismatch for '" + name.text + "': expected " +
                             std::to_string(it->second) + ", got " + std::to_string(arity),
                         name.pos);
    }
    return Formula::literal(positive, name.text, std::move(args));
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  const Vocabulary* vocab_;
  Vocabulary* inferred_;
};

}  // namespace

Formula parse_formula(const std::string& text, const Vocabulary& vocab) {
  Parser p(text, &vocab, nullptr);
  return alpha_normalize(p.parse_all());
}

Vocabulary infer_vocabulary(const std::string& text) {
  Vocabulary v;
  Parser p(text, nullptr, &v);
  p.parse_all();
  return v;
}

}  // namespace fvkit
