#include <cctype>
#include <map>
#include <optional>

#include "frep/presentation.hpp"

namespace frep {

namespace {

struct Token {
  enum Kind { Ident, Number, FnLit, Punct, End } kind;
  std::string text;
  std::size_t line, col;
};

// Tokenizer for the presentation format. '#' starts a line comment. A run of
// digits is a Number; whether it is reinterpreted as a one-line function
// literal is decided by the grammar context.
class Lexer {
 public:
  explicit Lexer(const std::string& text) : s_(text) {}

  Token next() {
    skip_ws();
    std::size_t line = line_, col = col_;
    if (pos_ >= s_.size()) return {Token::End, "", line, col};
    char c = s_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string t;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        t.push_back(get());
      return {Token::Ident, t, line, col};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string t;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) t.push_back(get());
      return {Token::Number, t, line, col};
    }
    // Multi-char punctuation first.
    for (const char* p : {"[[", "]]", "(+)", "->"}) {
      std::string pat(p);
      if (s_.compare(pos_, pat.size(), pat) == 0) {
        for (std::size_t i = 0; i < pat.size(); ++i) get();
        return {Token::Punct, pat, line, col};
      }
    }
    return {Token::Punct, std::string(1, get()), line, col};
  }

  Token peek() {
    std::size_t save_pos = pos_, save_line = line_, save_col = col_;
    Token t = next();
    pos_ = save_pos;
    line_ = save_line;
    col_ = save_col;
    return t;
  }

 private:
  char get() {
    char c = s_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void skip_ws() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') get();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        get();
      } else {
        break;
      }
    }
  }
  const std::string& s_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

[[noreturn]] void fail(const Token& t, const std::string& msg) {
  throw ParseError(t.line, t.col, msg + (t.kind == Token::End ? " (at end of input)" : " near '" + t.text + "'"));
}

class Parser {
 public:
  explicit Parser(const std::string& text) : lx_(text) {}

  Presentation run() {
    while (lx_.peek().kind != Token::End) statement();
    if (!present_) {
      Token t = lx_.peek();
      throw ParseError(t.line, t.col, "input contains no 'present' declaration");
    }
    return std::move(*present_);
  }

 private:
  Token expect_punct(const std::string& p) {
    Token t = lx_.next();
    if (t.kind != Token::Punct || t.text != p) fail(t, "expected '" + p + "'");
    return t;
  }
  Token expect_ident() {
    Token t = lx_.next();
    if (t.kind != Token::Ident) fail(t, "expected a name");
    return t;
  }

  void statement() {
    Token t = lx_.next();
    if (t.kind != Token::Ident) fail(t, "expected 'object', 'map' or 'present'");
    if (t.text == "object")
      object_decl();
    else if (t.text == "map")
      map_decl();
    else if (t.text == "present")
      present_decl();
    else
      fail(t, "unknown declaration");
  }

  ObjList object_expr() {
    Token t = lx_.peek();
    if (t.kind == Token::Number && t.text == "0") {
      lx_.next();
      return ObjList{};
    }
    std::vector<unsigned> sizes;
    while (true) {
      Token open = expect_punct("[");
      Token num = lx_.next();
      if (num.kind != Token::Number) fail(num, "expected a set size");
      sizes.push_back(static_cast<unsigned>(std::stoul(num.text)));
      expect_punct("]");
      Token sep = lx_.peek();
      if (sep.kind == Token::Punct && sep.text == "(+)") {
        lx_.next();
        continue;
      }
      break;
    }
    return ObjList(std::move(sizes));
  }

  void object_decl() {
    Token name = expect_ident();
    expect_punct("=");
    ObjList x = object_expr();
    if (!objects_.emplace(name.text, std::move(x)).second)
      fail(name, "object '" + name.text + "' already declared");
  }

  const ObjList& lookup_object(const Token& name) {
    auto it = objects_.find(name.text);
    if (it == objects_.end()) fail(name, "unknown object '" + name.text + "'");
    return it->second;
  }

  // One-line function literal, reusing the shared parsers for both forms.
  FinFn fn_literal(unsigned dom, unsigned cod) {
    Token t = lx_.next();
    std::string lit;
    if (t.kind == Token::Number) {
      lit = t.text;
    } else if (t.kind == Token::Punct && t.text == "(") {
      lit = "(";
      while (true) {
        Token u = lx_.next();
        if (u.kind == Token::End) fail(u, "unterminated function literal");
        lit += u.text;
        if (u.kind == Token::Punct && u.text == ")") break;
      }
    } else {
      fail(t, "expected a function literal");
    }
    try {
      return finfn_from_string(lit, dom, cod);
    } catch (const Error& e) {
      fail(t, e.what());
    }
  }

  // <lincomb> ::= '0' | [sign] term (('+'|'-') term)*
  // term ::= [rational '*'] fn-literal
  LinComb lincomb(unsigned dom, unsigned cod) {
    LinComb out(dom, cod);
    Token first = lx_.peek();
    if (first.kind == Token::Number && first.text == "0") {
      lx_.next();
      return out;
    }
    bool done = false;
    bool first_term = true;
    while (!done) {
      Rational sgn(1);
      Token t = lx_.peek();
      if (t.kind == Token::Punct && (t.text == "+" || t.text == "-")) {
        lx_.next();
        if (t.text == "-") sgn = -1;
      } else if (!first_term) {
        break;
      }
      Rational coeff(1);
      Token lead = lx_.peek();
      if (lead.kind == Token::Number) {
        // Disambiguate coefficient vs function literal by what follows.
        lx_.next();
        Token after = lx_.peek();
        if (after.kind == Token::Punct && (after.text == "*" || after.text == "/")) {
          std::string num = lead.text;
          if (after.text == "/") {
            lx_.next();
            Token den = lx_.next();
            if (den.kind != Token::Number) fail(den, "expected a denominator");
            num += "/" + den.text;
            expect_punct("*");
          } else {
            lx_.next();
          }
          try {
            coeff = rat_from_string(num);
          } catch (const Error& e) {
            fail(lead, e.what());
          }
          try {
            out.insert(fn_literal(dom, cod), sgn * coeff);
          } catch (const Error& e) {
            fail(lead, e.what());
          }
        } else {
          try {
            out.insert(finfn_from_string(lead.text, dom, cod), sgn);
          } catch (const Error& e) {
            fail(lead, e.what());
          }
        }
      } else if (lead.kind == Token::Punct && lead.text == "(") {
        try {
          out.insert(fn_literal(dom, cod), sgn);
        } catch (const Error& e) {
          fail(lead, e.what());
        }
      } else {
        if (first_term) fail(lead, "expected a linear combination");
        break;
      }
      first_term = false;
      Token nxt = lx_.peek();
      done = !(nxt.kind == Token::Punct && (nxt.text == "+" || nxt.text == "-"));
    }
    return out;
  }

  void map_decl() {
    Token name = expect_ident();
    expect_punct(":");
    Token src_name = expect_ident();
    expect_punct("->");
    Token dst_name = expect_ident();
    const ObjList& src = lookup_object(src_name);
    const ObjList& dst = lookup_object(dst_name);
    expect_punct("=");
    expect_punct("[[");
    QfMat m(src, dst);
    if (src.components() > 0 && dst.components() > 0) {
      for (std::size_t i = 0; i < src.components(); ++i) {
        if (i) expect_punct(";");
        for (std::size_t j = 0; j < dst.components(); ++j) {
          if (j) expect_punct(",");
          m.at(i, j) = lincomb(src.sizes[i], dst.sizes[j]);
        }
      }
    }
    expect_punct("]]");
    if (!maps_.emplace(name.text, std::move(m)).second)
      fail(name, "map '" + name.text + "' already declared");
  }

  // present V = f / f g   |   present V = Y / g   |   present V = f
  void present_decl() {
    Token name = expect_ident();
    if (present_) fail(name, "multiple 'present' declarations");
    expect_punct("=");
    Token num = expect_ident();
    std::vector<Token> den;
    Token t = lx_.peek();
    if (t.kind == Token::Punct && t.text == "/") {
      lx_.next();
      while (lx_.peek().kind == Token::Ident) den.push_back(lx_.next());
      if (den.empty()) fail(t, "expected relation maps after '/'");
    }
    QfMat f, g;
    auto map_it = maps_.find(num.text);
    if (map_it != maps_.end()) {
      f = map_it->second;
      if (den.empty()) {
        g = QfMat(f.dst, ObjList{});
      } else {
        if (den[0].text != num.text)
          fail(den[0], "relations must factor through the generators: write '" + num.text + " ...'");
        g = compose_names(den, 1, f.dst);
      }
    } else if (objects_.count(num.text)) {
      f = qf_identity(objects_.at(num.text));
      g = den.empty() ? QfMat(f.dst, ObjList{}) : compose_names(den, 0, f.dst);
    } else {
      fail(num, "unknown map or object '" + num.text + "'");
    }
    present_ = Presentation(name.text, std::move(f), std::move(g));
  }

  QfMat compose_names(const std::vector<Token>& names, std::size_t from, const ObjList& expected_src) {
    if (from >= names.size()) fail(names.back(), "expected at least one relation map");
    QfMat g = lookup_map(names[from]);
    for (std::size_t i = from + 1; i < names.size(); ++i) {
      const QfMat& next = lookup_map(names[i]);
      if (!(g.dst == next.src)) fail(names[i], "relation maps do not compose");
      g = qf_mul(g, next);
    }
    if (!(g.src == expected_src)) fail(names[from], "relation source does not match the generators");
    return g;
  }

  const QfMat& lookup_map(const Token& name) {
    auto it = maps_.find(name.text);
    if (it == maps_.end()) fail(name, "unknown map '" + name.text + "'");
    return it->second;
  }

  Lexer lx_;
  std::map<std::string, ObjList> objects_;
  std::map<std::string, QfMat> maps_;
  std::optional<Presentation> present_;
};

}  // namespace

Presentation parse_presentation(const std::string& text) { return Parser(text).run(); }

}  // namespace frep
