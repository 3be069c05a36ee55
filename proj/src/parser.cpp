#include <cctype>
#include <map>

#include "sct/ast.hpp"

namespace sct {

const External *Program::find_external(const std::string &n) const {
  for (const External &e : externals)
    if (e.name == n) return &e;
  return nullptr;
}

// ------------------------------------------------------------------ lexing

namespace {

struct Token {
  enum class K {
    LIdent, UIdent, Int,
    KwVal, KwRec, KwAnd, KwMatch, KwWith, KwExternal,
    LBrack, RBrack, LParen, RParen,
    Comma, Bar, Arrow, Equals, Under, Dot, Slash,
    Pragma,  // #pragma sct depth=<D> bound=<B>
    Eof
  };
  K k;
  std::string text;  // idents
  long value = 0;    // Int
  int depth = 0, bound = 0;  // Pragma
  Pos pos;
};

struct Lexer {
  const std::string &src;
  size_t i = 0;
  int line = 1, col = 1;
  std::vector<Token> out;

  explicit Lexer(const std::string &s) : src(s) {}

  char peek() const { return i < src.size() ? src[i] : '\0'; }
  char get() {
    char c = src[i++];
    if (c == '\n') {
      line++;
      col = 1;
    } else {
      col++;
    }
    return c;
  }

  [[noreturn]] void fail(const std::string &msg) {
    throw ParseError({line, col}, msg);
  }

  void push(Token::K k, Pos p, std::string text = {}) {
    Token t;
    t.k = k;
    t.text = std::move(text);
    t.pos = p;
    out.push_back(std::move(t));
  }

  // '#pragma sct depth=2 bound=1'; any other '#...' line is a comment
  void hash_line() {
    Pos p{line, col};
    std::string rest;
    while (peek() && peek() != '\n') rest += get();
    int d, b;
    if (sscanf(rest.c_str(), "#pragma sct depth=%d bound=%d", &d, &b) == 2) {
      if (d < 0 || b < 1) throw ParseError(p, "pragma needs depth>=0, bound>=1");
      Token t;
      t.k = Token::K::Pragma;
      t.depth = d;
      t.bound = b;
      t.pos = p;
      out.push_back(t);
    } else if (rest.rfind("#pragma", 0) == 0) {
      throw ParseError(p, "malformed pragma (expected "
                          "'#pragma sct depth=<D> bound=<B>')");
    }
  }

  void run() {
    while (i < src.size()) {
      char c = peek();
      Pos p{line, col};
      if (c == '\n' || c == ' ' || c == '\t' || c == '\r') {
        get();
      } else if (c == '#') {
        hash_line();
      } else if (isdigit((unsigned char)c)) {
        std::string n;
        while (isdigit((unsigned char)peek())) n += get();
        Token t;
        t.k = Token::K::Int;
        t.value = std::stol(n);
        t.pos = p;
        out.push_back(t);
      } else if (isalpha((unsigned char)c) || c == '_') {
        std::string id;
        while (isalnum((unsigned char)peek()) || peek() == '_' ||
               peek() == '\'')
          id += get();
        if (id == "_") push(Token::K::Under, p);
        else if (id == "val") push(Token::K::KwVal, p);
        else if (id == "rec") push(Token::K::KwRec, p);
        else if (id == "and") push(Token::K::KwAnd, p);
        else if (id == "match") push(Token::K::KwMatch, p);
        else if (id == "with") push(Token::K::KwWith, p);
        else if (id == "external") push(Token::K::KwExternal, p);
        else if (isupper((unsigned char)id[0])) push(Token::K::UIdent, p, id);
        else push(Token::K::LIdent, p, id);
      } else {
        switch (c) {
          case '[': get(); push(Token::K::LBrack, p); break;
          case ']': get(); push(Token::K::RBrack, p); break;
          case '(': get(); push(Token::K::LParen, p); break;
          case ')': get(); push(Token::K::RParen, p); break;
          case ',': get(); push(Token::K::Comma, p); break;
          case '|': get(); push(Token::K::Bar, p); break;
          case '=': get(); push(Token::K::Equals, p); break;
          case '.': get(); push(Token::K::Dot, p); break;
          case '/': get(); push(Token::K::Slash, p); break;
          case '-':
            get();
            if (peek() != '>') fail("expected '->'");
            get();
            push(Token::K::Arrow, p);
            break;
          default:
            fail(std::string("unexpected character '") + c + "'");
        }
      }
    }
    push(Token::K::Eof, {line, col});
  }
};

// ----------------------------------------------------------------- parsing

struct Parser {
  std::vector<Token> toks;
  size_t i = 0;

  const Token &peek() const { return toks[i]; }
  const Token &get() { return toks[i++]; }
  bool at(Token::K k) const { return peek().k == k; }
  bool eat(Token::K k) {
    if (!at(k)) return false;
    i++;
    return true;
  }
  const Token &expect(Token::K k, const char *what) {
    if (!at(k)) throw ParseError(peek().pos, std::string("expected ") + what);
    return get();
  }

  // atom, with postfix projections
  Expr atom() {
    Pos p = peek().pos;
    Expr e;
    if (at(Token::K::LIdent)) {
      e = Expr::var(get().text, p);
    } else if (at(Token::K::UIdent)) {
      std::string c = get().text;
      expect(Token::K::LBrack, "'[' after constructor name");
      if (eat(Token::K::RBrack)) {
        e = Expr::ctor(c, Expr::tuple({}, p), p);
      } else {
        std::vector<Expr> parts;
        parts.push_back(expr());
        while (eat(Token::K::Comma)) parts.push_back(expr());
        expect(Token::K::RBrack, "']'");
        e = Expr::ctor(c, parts.size() == 1 ? std::move(parts[0])
                                            : Expr::tuple(std::move(parts), p),
                       p);
      }
    } else if (at(Token::K::LParen)) {
      get();
      if (eat(Token::K::RParen)) {
        e = Expr::tuple({}, p);
      } else {
        std::vector<Expr> parts;
        parts.push_back(expr());
        while (eat(Token::K::Comma)) parts.push_back(expr());
        expect(Token::K::RParen, "')'");
        e = parts.size() == 1 ? std::move(parts[0])
                              : Expr::tuple(std::move(parts), p);
      }
    } else {
      throw ParseError(p, "expected an expression");
    }
    while (at(Token::K::Dot)) {
      get();
      const Token &n = expect(Token::K::Int, "projection index after '.'");
      if (n.value < 1) throw ParseError(n.pos, "projection index must be >= 1");
      e = Expr::proj((int)n.value, std::move(e), n.pos);
    }
    return e;
  }

  static bool starts_atom(Token::K k) {
    return k == Token::K::LIdent || k == Token::K::UIdent ||
           k == Token::K::LParen;
  }

  // juxtaposition application: 'f a (g b) C[x]'
  Expr app() {
    Pos p = peek().pos;
    Expr head = atom();
    if (!starts_atom(peek().k)) return head;
    if (head.k != Expr::K::Var)
      throw ParseError(p, "only a function name can be applied");
    std::vector<Expr> args;
    while (starts_atom(peek().k)) args.push_back(atom());
    return Expr::call(head.name, std::move(args), p);
  }

  // expr at positions where a bare match is allowed
  Expr expr() {
    if (at(Token::K::KwMatch)) return match_expr();
    return app();
  }

  Pattern pattern() {
    Pos p = peek().pos;
    if (eat(Token::K::Under)) return Pattern::wild(p);
    if (at(Token::K::LIdent)) return Pattern::var(get().text, p);
    if (at(Token::K::UIdent)) {
      std::string c = get().text;
      expect(Token::K::LBrack, "'[' after constructor name");
      if (eat(Token::K::RBrack))
        return Pattern::ctor(c, Pattern::tuple({}, p), p);
      std::vector<Pattern> parts;
      parts.push_back(pattern());
      while (eat(Token::K::Comma)) parts.push_back(pattern());
      expect(Token::K::RBrack, "']'");
      return Pattern::ctor(c,
                           parts.size() == 1
                               ? std::move(parts[0])
                               : Pattern::tuple(std::move(parts), p),
                           p);
    }
    if (at(Token::K::LParen)) {
      get();
      if (eat(Token::K::RParen)) return Pattern::tuple({}, p);
      std::vector<Pattern> parts;
      parts.push_back(pattern());
      while (eat(Token::K::Comma)) parts.push_back(pattern());
      expect(Token::K::RParen, "')'");
      return parts.size() == 1 ? std::move(parts[0])
                               : Pattern::tuple(std::move(parts), p);
    }
    throw ParseError(p, "expected a pattern");
  }

  Expr match_expr() {
    Pos p = peek().pos;
    expect(Token::K::KwMatch, "'match'");
    std::vector<Expr> scr;
    scr.push_back(app());
    while (eat(Token::K::Comma)) scr.push_back(app());
    Expr scrutinee = scr.size() == 1 ? std::move(scr[0])
                                     : Expr::tuple(std::move(scr), p);
    expect(Token::K::KwWith, "'with'");
    eat(Token::K::Bar);  // optional leading '|'
    Expr m;
    m.k = Expr::K::Match;
    m.pos = p;
    m.sub.push_back(std::move(scrutinee));
    do {
      Pos bp = peek().pos;
      std::vector<Pattern> ps;
      ps.push_back(pattern());
      while (eat(Token::K::Comma)) ps.push_back(pattern());
      m.pats.push_back(ps.size() == 1 ? std::move(ps[0])
                                      : Pattern::tuple(std::move(ps), bp));
      expect(Token::K::Arrow, "'->'");
      if (at(Token::K::KwMatch))
        throw ParseError(peek().pos,
                         "a match inside a branch must be parenthesized");
      m.sub.push_back(app());
    } while (eat(Token::K::Bar));
    return m;
  }

  Definition definition() {
    Pos p = peek().pos;
    Definition d;
    d.pos = p;
    d.name = expect(Token::K::LIdent, "function name").text;
    while (at(Token::K::LIdent)) d.params.push_back(get().text);
    for (size_t a = 0; a < d.params.size(); ++a)
      for (size_t b = a + 1; b < d.params.size(); ++b)
        if (d.params[a] == d.params[b])
          throw ParseError(p, "duplicate parameter '" + d.params[a] + "'");
    expect(Token::K::Equals, "'='");
    d.body = expr();
    return d;
  }

  Program program() {
    Program prog;
    std::optional<int> pd, pb;
    while (!at(Token::K::Eof)) {
      if (at(Token::K::Pragma)) {
        const Token &t = get();
        pd = t.depth;
        pb = t.bound;
      } else if (eat(Token::K::KwExternal)) {
        External e;
        e.name = expect(Token::K::LIdent, "external function name").text;
        expect(Token::K::Slash, "'/' and an arity");
        e.arity = (int)expect(Token::K::Int, "arity").value;
        prog.externals.push_back(std::move(e));
      } else if (eat(Token::K::KwVal)) {
        expect(Token::K::KwRec, "'rec'");
        Group g;
        g.pragma_depth = pd;
        g.pragma_bound = pb;
        pd.reset();
        pb.reset();
        g.defs.push_back(definition());
        while (eat(Token::K::KwAnd)) g.defs.push_back(definition());
        for (size_t a = 0; a < g.defs.size(); ++a)
          for (size_t b = a + 1; b < g.defs.size(); ++b)
            if (g.defs[a].name == g.defs[b].name)
              throw ParseError(g.defs[b].pos,
                               "'" + g.defs[b].name + "' defined twice");
        prog.groups.push_back(std::move(g));
      } else {
        throw ParseError(peek().pos, "expected 'val rec' or 'external'");
      }
    }
    return prog;
  }
};

// call targets and arities, once the whole program is known
void check_calls(const Expr &e, const std::map<std::string, int> &arities) {
  if (e.k == Expr::K::Call) {
    auto it = arities.find(e.name);
    if (it == arities.end())
      throw ParseError(e.pos, "call to unknown function '" + e.name + "'");
    if ((int)e.sub.size() != it->second)
      throw ParseError(e.pos, "'" + e.name + "' expects " +
                                  std::to_string(it->second) +
                                  " argument(s), got " +
                                  std::to_string(e.sub.size()));
  }
  for (const Expr &s : e.sub) check_calls(s, arities);
}

}  // namespace

Program parse(const std::string &source) {
  Lexer lx(source);
  lx.run();
  Parser ps{std::move(lx.out)};
  Program prog = ps.program();
  for (const Group &g : prog.groups) {
    // targets: this group's functions plus the externals
    std::map<std::string, int> arities;
    for (const External &e : prog.externals) arities[e.name] = e.arity;
    for (const Definition &d : g.defs) arities[d.name] = (int)d.params.size();
    for (const Definition &d : g.defs) check_calls(d.body, arities);
  }
  return prog;
}

}  // namespace sct
