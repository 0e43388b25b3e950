#include <cctype>
#include <set>
#include <sstream>

#include "moncat/dsl.hpp"

namespace moncat::dsl {

namespace {

enum class Tok { Word, Quoted, LBrace, RBrace, Semi, Colon, Arrow, DoubleArrow, Dot, Equals, Star, End };

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Word: return "name";
    case Tok::Quoted: return "quoted name";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Semi: return "';'";
    case Tok::Colon: return "':'";
    case Tok::Arrow: return "'->'";
    case Tok::DoubleArrow: return "'=>'";
    case Tok::Dot: return "'.'";
    case Tok::Equals: return "'='";
    case Tok::Star: return "'*'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  Span span;
};

bool word_char(unsigned char c) { return std::isalnum(c) || c == '_' || c == '\''; }

// Length of the UTF-8 sequence starting at s[i], or 0 if it is malformed.
std::size_t utf8_length(std::string_view s, std::size_t i) {
  const auto c = static_cast<unsigned char>(s[i]);
  std::size_t n = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xE ? 3 : (c >> 3) == 0x1E ? 4 : 0;
  if (n == 0 || i + n > s.size()) return 0;
  for (std::size_t k = 1; k < n; ++k) {
    if ((static_cast<unsigned char>(s[i + k]) >> 6) != 0x2) return 0;
  }
  return n;
}

class Lexer {
 public:
  Lexer(std::string_view text, std::vector<Diagnostic>& diags) : diags_(diags) {
    // LF normalization
    src_.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '\r') {
        src_.push_back('\n');
        if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
      } else {
        src_.push_back(text[i]);
      }
    }
  }

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      const Span at = here();
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, "", at});
        return out;
      }
      const char c = src_[pos_];
      auto single = [&](Tok t) {
        advance(1);
        out.push_back({t, std::string(1, c), at});
      };
      switch (c) {
        case '{': single(Tok::LBrace); continue;
        case '}': single(Tok::RBrace); continue;
        case ';': single(Tok::Semi); continue;
        case ':': single(Tok::Colon); continue;
        case '.': single(Tok::Dot); continue;
        case '*': single(Tok::Star); continue;
        case '-':
          if (peek(1) == '>') {
            advance(2);
            out.push_back({Tok::Arrow, "->", at});
          } else {
            error(at, "unexpected character '-'");
            advance(1);
          }
          continue;
        case '=':
          if (peek(1) == '>') {
            advance(2);
            out.push_back({Tok::DoubleArrow, "=>", at});
          } else {
            single(Tok::Equals);
          }
          continue;
        case '"': quoted(out, at); continue;
        default: break;
      }
      if (word_char(static_cast<unsigned char>(c))) {
        std::size_t end = pos_;
        while (end < src_.size() && word_char(static_cast<unsigned char>(src_[end]))) ++end;
        out.push_back({Tok::Word, src_.substr(pos_, end - pos_), at});
        advance(end - pos_);
        continue;
      }
      const std::size_t n = utf8_length(src_, pos_);
      if (n == 0) {
        error(at, "invalid UTF-8 byte");
        advance_bytes(1);
      } else {
        error(at, "unexpected character '" + src_.substr(pos_, n) + "'");
        advance_bytes(n);
      }
    }
  }

 private:
  std::string src_;
  std::size_t pos_ = 0;
  std::uint32_t line_ = 1, column_ = 1;
  std::vector<Diagnostic>& diags_;

  Span here() const { return {line_, column_}; }
  char peek(std::size_t k) const { return pos_ + k < src_.size() ? src_[pos_ + k] : '\0'; }

  void error(Span at, std::string msg) { diags_.push_back({Severity::Error, "E001", std::move(msg), at}); }

  // ASCII only
  void advance(std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) step_ascii();
  }

  void step_ascii() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  // One code point of n bytes
  void advance_bytes(std::size_t n) {
    pos_ += n;
    ++column_;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\f' || c == '\v') {
        step_ascii();
      } else if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') {
          const std::size_t n = utf8_length(src_, pos_);
          advance_bytes(n == 0 ? 1 : n);
        }
      } else {
        return;
      }
    }
  }

  void quoted(std::vector<Token>& out, Span at) {
    advance(1);
    std::string text;
    while (true) {
      if (pos_ >= src_.size() || src_[pos_] == '\n') {
        error(at, "unterminated quoted name");
        return;
      }
      const char c = src_[pos_];
      if (c == '"') {
        advance(1);
        break;
      }
      if (c == '\\') {
        const char e = peek(1);
        if (e == '"' || e == '\\') {
          text.push_back(e);
          advance(2);
          continue;
        }
        error(here(), "unknown escape in quoted name");
        advance(1);
        continue;
      }
      const std::size_t n = utf8_length(src_, pos_);
      if (n == 0) {
        error(here(), "invalid UTF-8 byte");
        advance_bytes(1);
        continue;
      }
      if (static_cast<unsigned char>(c) < 0x20) {
        error(here(), "control character in quoted name");
        advance(1);
        continue;
      }
      text.append(src_, pos_, n);
      advance_bytes(n);
    }
    if (text.empty()) {
      error(at, "empty quoted name");
      return;
    }
    out.push_back({Tok::Quoted, std::move(text), at});
  }
};

class Parser {
 public:
  Parser(std::vector<Token> toks, std::vector<Diagnostic>& diags) : toks_(std::move(toks)), diags_(diags) {}

  CatSpecAst run() {
    CatSpecAst ast;
    std::set<std::string> names;
    while (!at(Tok::End)) {
      const Token& t = cur();
      const std::size_t before = pos_;
      if (is_word("category")) {
        if (auto c = category()) {
          note_block(names, c->name);
          ast.categories.push_back(std::move(*c));
        }
      } else if (is_word("functor") || is_word("lax")) {
        if (auto f = functor()) {
          note_block(names, f->name);
          ast.functors.push_back(std::move(*f));
        }
      } else if (is_word("nattrans")) {
        if (auto n = nattrans()) {
          note_block(names, n->name);
          ast.nattrans.push_back(std::move(*n));
        }
      } else {
        expected(t, {"'category'", "'functor'", "'lax'", "'nattrans'"});
        ++pos_;
      }
      if (pos_ == before) ++pos_;
    }
    return ast;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<Diagnostic>& diags_;

  const Token& cur() const { return toks_[std::min(pos_, toks_.size() - 1)]; }
  const Token& ahead(std::size_t k) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  bool at(Tok k) const { return cur().kind == k; }
  bool is_word(std::string_view w) const { return cur().kind == Tok::Word && cur().text == w; }

  void diag(std::string code, std::string msg, Span s) {
    diags_.push_back({Severity::Error, std::move(code), std::move(msg), s});
  }

  void expected(const Token& t, std::initializer_list<std::string_view> what) {
    std::string msg = "expected ";
    std::size_t i = 0;
    for (auto w : what) {
      if (i++) msg += i == what.size() ? " or " : ", ";
      msg += w;
    }
    msg += ", found ";
    msg += t.kind == Tok::Word || t.kind == Tok::Quoted ? "'" + t.text + "'" : tok_name(t.kind);
    diag("E002", msg, t.span);
  }

  void note_block(std::set<std::string>& names, const Name& n) {
    if (!names.insert(n.text).second) diag("E003", "duplicate block name '" + n.text + "'", n.span);
  }

  // Skips to just past the next ';' at this nesting level, or to a '}' that
  // closes the current block (left in place).
  void recover() {
    int depth = 0;
    while (!at(Tok::End)) {
      if (at(Tok::LBrace)) ++depth;
      if (at(Tok::RBrace)) {
        if (depth == 0) return;
        --depth;
      }
      if (at(Tok::Semi) && depth == 0) {
        ++pos_;
        return;
      }
      ++pos_;
    }
  }

  // Skips a whole block body including its closing brace.
  void skip_block() {
    int depth = 0;
    while (!at(Tok::End)) {
      if (at(Tok::LBrace)) ++depth;
      if (at(Tok::RBrace)) {
        --depth;
        if (depth <= 0) {
          ++pos_;
          return;
        }
      }
      ++pos_;
    }
  }

  bool accept(Tok k) {
    if (!at(k)) return false;
    ++pos_;
    return true;
  }

  bool expect(Tok k) {
    if (accept(k)) return true;
    expected(cur(), {tok_name(k)});
    return false;
  }

  std::optional<Name> name() {
    if (at(Tok::Word) || at(Tok::Quoted)) {
      Name n{cur().text, cur().span};
      ++pos_;
      return n;
    }
    expected(cur(), {"name"});
    return std::nullopt;
  }

  bool is_name(std::size_t k = 0) const { return ahead(k).kind == Tok::Word || ahead(k).kind == Tok::Quoted; }

  std::optional<CategoryAst> category() {
    ++pos_;
    CategoryAst c;
    auto n = name();
    if (!n || !expect(Tok::LBrace)) {
      skip_block();
      return std::nullopt;
    }
    c.name = *n;
    bool ok = true;
    while (!at(Tok::RBrace) && !at(Tok::End)) {
      if (!statement(c)) {
        ok = false;
        recover();
      }
    }
    if (!expect(Tok::RBrace)) return std::nullopt;
    if (!ok) return std::nullopt;
    return check_names(c) ? std::optional<CategoryAst>(std::move(c)) : std::nullopt;
  }

  bool statement(CategoryAst& c) {
    const Token& t = cur();
    if (t.kind != Tok::Word) {
      expected(t, {"'objects'", "'morph'", "'id'", "'compose'", "'derive'", "'monoidal'"});
      return false;
    }
    if (t.text == "objects") {
      ++pos_;
      while (is_name()) c.objects.push_back(*name());
      return expect(Tok::Semi);
    }
    if (t.text == "morph") {
      ++pos_;
      auto nm = name();
      if (!nm || !expect(Tok::Colon)) return false;
      auto s = name();
      if (!s || !expect(Tok::Arrow)) return false;
      auto tg = name();
      if (!tg) return false;
      c.morphisms.push_back({*nm, *s, *tg});
      return expect(Tok::Semi);
    }
    if (t.text == "id") {
      ++pos_;
      auto o = name();
      if (!o || !expect(Tok::Equals)) return false;
      auto nm = name();
      if (!nm) return false;
      c.morphisms.push_back({*nm, *o, *o, true});
      return expect(Tok::Semi);
    }
    if (t.text == "compose") {
      ++pos_;
      auto f = name();
      if (!f || !expect(Tok::Dot)) return false;
      auto g = name();
      if (!g || !expect(Tok::Equals)) return false;
      auto h = name();
      if (!h) return false;
      c.equations.push_back({*f, *g, *h});
      return expect(Tok::Semi);
    }
    if (t.text == "derive") {
      c.derive = t.span;
      ++pos_;
      return expect(Tok::Semi);
    }
    if (t.text == "monoidal") {
      if (c.monoidal) diag("E003", "second monoidal block", t.span);
      MonoidalBlock b;
      b.span = t.span;
      ++pos_;
      if (!expect(Tok::LBrace)) return false;
      bool ok = true;
      while (!at(Tok::RBrace) && !at(Tok::End)) {
        if (!monoidal_statement(b)) {
          ok = false;
          recover();
        }
      }
      if (!expect(Tok::RBrace)) return false;
      if (!c.monoidal) c.monoidal = std::move(b);
      return ok;
    }
    expected(t, {"'objects'", "'morph'", "'id'", "'compose'", "'derive'", "'monoidal'"});
    return false;
  }

  std::optional<ComponentEq> component(std::size_t arity) {
    ComponentEq e;
    for (std::size_t i = 0; i < arity; ++i) {
      auto a = name();
      if (!a) return std::nullopt;
      e.args.push_back(*a);
    }
    if (!expect(Tok::Equals)) return std::nullopt;
    auto v = name();
    if (!v) return std::nullopt;
    e.value = *v;
    if (!expect(Tok::Semi)) return std::nullopt;
    return e;
  }

  bool monoidal_statement(MonoidalBlock& b) {
    const Token& t = cur();
    if (t.kind == Tok::Word && t.text == "unit") {
      ++pos_;
      auto u = name();
      if (!u) return false;
      if (b.unit) diag("E003", "unit declared twice", t.span);
      b.unit = *u;
      return expect(Tok::Semi);
    }
    if (t.kind == Tok::Word && t.text == "tensor") {
      ++pos_;
      TensorEq e;
      // `obj`/`mor` qualify only when followed by a name
      if (at(Tok::Word) && (cur().text == "obj" || cur().text == "mor") && is_name(1)) {
        e.kind = cur().text == "obj" ? TensorKind::Objects : TensorKind::Morphisms;
        ++pos_;
      }
      auto l = name();
      if (!l || !expect(Tok::Star)) return false;
      auto r = name();
      if (!r || !expect(Tok::Equals)) return false;
      auto v = name();
      if (!v) return false;
      e.left = *l;
      e.right = *r;
      e.result = *v;
      b.tensors.push_back(std::move(e));
      return expect(Tok::Semi);
    }
    auto comp = [&](std::vector<ComponentEq>& into, std::size_t arity) {
      ++pos_;
      auto e = component(arity);
      if (!e) return false;
      into.push_back(std::move(*e));
      return true;
    };
    if (t.kind == Tok::Word && t.text == "lunitor") return comp(b.lunitors, 1);
    if (t.kind == Tok::Word && t.text == "runitor") return comp(b.runitors, 1);
    if (t.kind == Tok::Word && t.text == "assoc") return comp(b.assocs, 3);
    expected(t, {"'unit'", "'tensor'", "'lunitor'", "'runitor'", "'assoc'"});
    return false;
  }

  // Duplicate names and unknown objects inside one category block.
  bool check_names(const CategoryAst& c) {
    const std::size_t before = diags_.size();
    std::set<std::string> objects, morphisms;
    for (const auto& o : c.objects) {
      if (!objects.insert(o.text).second) diag("E003", "duplicate object '" + o.text + "'", o.span);
    }
    auto known = [&](const Name& o) {
      if (!objects.count(o.text)) diag("E004", "unknown object '" + o.text + "'", o.span);
    };
    std::set<std::string> named_ids;
    for (const auto& m : c.morphisms) {
      if (!morphisms.insert(m.name.text).second) {
        diag("E003", "duplicate morphism '" + m.name.text + "'", m.name.span);
      }
      known(m.src);
      if (!m.identity) known(m.tgt);
      if (m.identity && !named_ids.insert(m.src.text).second) {
        diag("E003", "identity of '" + m.src.text + "' named twice", m.src.span);
      }
    }
    return diags_.size() == before;
  }

  std::optional<FunctorAst> functor() {
    FunctorAst f;
    f.lax = cur().text == "lax";
    ++pos_;
    auto n = name();
    if (!n || !expect(Tok::Colon)) {
      skip_block();
      return std::nullopt;
    }
    auto d = name();
    if (!d || !expect(Tok::Arrow)) {
      skip_block();
      return std::nullopt;
    }
    auto c = name();
    if (!c || !expect(Tok::LBrace)) {
      skip_block();
      return std::nullopt;
    }
    f.name = *n;
    f.dom = *d;
    f.cod = *c;
    bool ok = true;
    while (!at(Tok::RBrace) && !at(Tok::End)) {
      if (!functor_statement(f)) {
        ok = false;
        recover();
      }
    }
    if (!expect(Tok::RBrace) || !ok) return std::nullopt;
    return f;
  }

  bool functor_statement(FunctorAst& f) {
    const Token& t = cur();
    auto entry = [&](std::vector<MapEntry>& into) {
      ++pos_;
      auto a = name();
      if (!a || !expect(Tok::Arrow)) return false;
      auto b = name();
      if (!b) return false;
      into.push_back({*a, *b});
      return expect(Tok::Semi);
    };
    if (t.kind == Tok::Word && t.text == "obj") return entry(f.objects);
    if (t.kind == Tok::Word && t.text == "mor") return entry(f.morphisms);
    if (f.lax && t.kind == Tok::Word && t.text == "mu") {
      ++pos_;
      auto e = component(2);
      if (!e) return false;
      f.mu.push_back(std::move(*e));
      return true;
    }
    if (f.lax && t.kind == Tok::Word && t.text == "eps") {
      ++pos_;
      auto e = component(0);
      if (!e) return false;
      if (f.eps) diag("E003", "eps given twice", t.span);
      f.eps = std::move(*e);
      f.eps->args.clear();
      return true;
    }
    if (f.lax) {
      expected(t, {"'obj'", "'mor'", "'mu'", "'eps'"});
    } else {
      expected(t, {"'obj'", "'mor'"});
    }
    return false;
  }

  std::optional<NatTransAst> nattrans() {
    ++pos_;
    NatTransAst n;
    auto nm = name();
    if (!nm || !expect(Tok::Colon)) {
      skip_block();
      return std::nullopt;
    }
    auto s = name();
    if (!s || !expect(Tok::DoubleArrow)) {
      skip_block();
      return std::nullopt;
    }
    auto t = name();
    if (!t || !expect(Tok::LBrace)) {
      skip_block();
      return std::nullopt;
    }
    n.name = *nm;
    n.source = *s;
    n.target = *t;
    bool ok = true;
    while (!at(Tok::RBrace) && !at(Tok::End)) {
      if (cur().kind == Tok::Word && cur().text == "at") {
        ++pos_;
        if (auto e = component(1)) {
          n.components.push_back(std::move(*e));
          continue;
        }
      } else {
        expected(cur(), {"'at'"});
      }
      ok = false;
      recover();
    }
    if (!expect(Tok::RBrace) || !ok) return std::nullopt;
    return n;
  }
};

}  // namespace

std::string format(const Diagnostic& d, std::string_view file) {
  std::ostringstream os;
  if (!file.empty()) os << file << ':';
  os << d.span.line << ':' << d.span.column << ": " << (d.severity == Severity::Error ? "error" : "warning") << " ["
     << d.code << "] " << d.message;
  return os.str();
}

ParseResult parse(std::string_view text) {
  ParseResult r;
  Lexer lexer(text, r.diagnostics);
  std::vector<Token> toks = lexer.run();
  if (!r.diagnostics.empty()) return r;
  Parser p(std::move(toks), r.diagnostics);
  CatSpecAst ast = p.run();
  if (r.diagnostics.empty()) r.ast = std::move(ast);
  return r;
}

}  // namespace moncat::dsl
