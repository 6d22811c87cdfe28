#include "rsrl/regex.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "rsrl/error.hpp"

namespace rsrl {

struct Regex::Node {
  RegexKind kind = RegexKind::empty;
  std::uint32_t symbol = 0;
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
  std::size_t size = 1;
};

namespace {

using NodePtr = std::shared_ptr<const Regex::Node>;

NodePtr make_node(RegexKind kind, std::uint32_t symbol = 0, NodePtr a = nullptr,
                  NodePtr b = nullptr) {
  std::size_t size = 1 + (a ? a->size : 0) + (b ? b->size : 0);
  return std::make_shared<const Regex::Node>(
      Regex::Node{kind, symbol, std::move(a), std::move(b), size});
}

}  // namespace

Regex::Regex()
    : alphabet_(), node_(make_node(RegexKind::empty)) {}

Regex::Regex(Alphabet alphabet, std::shared_ptr<const Node> node)
    : alphabet_(std::move(alphabet)), node_(std::move(node)) {}

Regex Regex::empty(const Alphabet& alphabet) {
  return Regex(alphabet, make_node(RegexKind::empty));
}

Regex Regex::epsilon(const Alphabet& alphabet) {
  return Regex(alphabet, make_node(RegexKind::epsilon));
}

Regex Regex::symbol(const Alphabet& alphabet, std::uint32_t index) {
  if (index >= alphabet.size()) throw InvalidArgument("symbol index out of range");
  return Regex(alphabet, make_node(RegexKind::symbol, index));
}

Regex Regex::symbol(const Alphabet& alphabet, std::string_view name) {
  return symbol(alphabet, alphabet.index_of(name));
}

Regex Regex::alt(const Regex& left, const Regex& right) {
  require_same_alphabet(left.alphabet_, right.alphabet_, "regex union");
  return Regex(left.alphabet_, make_node(RegexKind::alt, 0, left.node_, right.node_));
}

Regex Regex::cat(const Regex& left, const Regex& right) {
  require_same_alphabet(left.alphabet_, right.alphabet_, "regex concatenation");
  return Regex(left.alphabet_, make_node(RegexKind::concat, 0, left.node_, right.node_));
}

Regex Regex::star(const Regex& inner) {
  return Regex(inner.alphabet_, make_node(RegexKind::star, 0, inner.node_));
}

Regex Regex::word(const Alphabet& alphabet, const Word& w) {
  std::vector<Regex> items;
  items.reserve(w.size());
  for (const auto& s : w) items.push_back(symbol(alphabet, s));
  return concat_all(alphabet, items);
}

RegexKind Regex::kind() const { return node_->kind; }

Regex Regex::left() const {
  if (node_->kind != RegexKind::alt && node_->kind != RegexKind::concat) {
    throw InvalidArgument("left() on a node without children");
  }
  return Regex(alphabet_, node_->a);
}

Regex Regex::right() const {
  if (node_->kind != RegexKind::alt && node_->kind != RegexKind::concat) {
    throw InvalidArgument("right() on a node without children");
  }
  return Regex(alphabet_, node_->b);
}

Regex Regex::inner() const {
  if (node_->kind != RegexKind::star) throw InvalidArgument("inner() on a non-star node");
  return Regex(alphabet_, node_->a);
}

std::uint32_t Regex::symbol_index() const {
  if (node_->kind != RegexKind::symbol) throw InvalidArgument("not a symbol node");
  return node_->symbol;
}

const Symbol& Regex::symbol_name() const { return alphabet_.name(symbol_index()); }

std::size_t Regex::size() const { return node_->size; }

namespace {

bool same_tree(const NodePtr& a, const NodePtr& b) {
  if (a == b) return true;
  if (a->kind != b->kind || a->size != b->size) return false;
  switch (a->kind) {
    case RegexKind::empty:
    case RegexKind::epsilon:
      return true;
    case RegexKind::symbol:
      return a->symbol == b->symbol;
    case RegexKind::star:
      return same_tree(a->a, b->a);
    case RegexKind::alt:
    case RegexKind::concat:
      return same_tree(a->a, b->a) && same_tree(a->b, b->b);
  }
  return false;
}

}  // namespace

bool operator==(const Regex& a, const Regex& b) {
  return a.alphabet_ == b.alphabet_ && same_tree(a.node_, b.node_);
}

Regex Regex::relabel(const Alphabet& target,
                     const std::function<Symbol(const Symbol&)>& rename) const {
  switch (kind()) {
    case RegexKind::empty:
      return empty(target);
    case RegexKind::epsilon:
      return epsilon(target);
    case RegexKind::symbol:
      return symbol(target, rename ? rename(symbol_name()) : symbol_name());
    case RegexKind::alt:
      return alt(left().relabel(target, rename), right().relabel(target, rename));
    case RegexKind::concat:
      return cat(left().relabel(target, rename), right().relabel(target, rename));
    case RegexKind::star:
      return star(inner().relabel(target, rename));
  }
  return empty(target);
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
  enum Type { ident, lparen, rparen, plus, star, end } type;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto ident_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    switch (c) {
      case '(':
        out.push_back({Token::lparen, "(", i++});
        continue;
      case ')':
        out.push_back({Token::rparen, ")", i++});
        continue;
      case '+':
        out.push_back({Token::plus, "+", i++});
        continue;
      case '*':
        out.push_back({Token::star, "*", i++});
        continue;
      default:
        break;
    }
    if (!ident_char(c)) {
      throw ParseError("unexpected character '" + std::string(1, c) + "' at offset " +
                           std::to_string(i),
                       i);
    }
    std::size_t start = i;
    while (i < text.size() && ident_char(text[i])) ++i;
    std::string word(text.substr(start, i - start));
    if (std::isdigit(static_cast<unsigned char>(word.front()))) {
      throw ParseError("identifier may not start with a digit at offset " +
                           std::to_string(start),
                       start);
    }
    out.push_back({Token::ident, std::move(word), start});
  }
  out.push_back({Token::end, "", text.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const Alphabet& alphabet)
      : tokens_(tokenize(text)), alphabet_(alphabet) {}

  Regex parse() {
    Regex r = expr();
    if (peek().type != Token::end) fail("unexpected '" + peek().text + "'");
    return r;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(peek().pos), peek().pos);
  }

  static bool starts_atom(const Token& t) {
    return t.type == Token::ident || t.type == Token::lparen;
  }

  Regex expr() {
    std::vector<Regex> terms{term()};
    while (peek().type == Token::plus) {
      ++pos_;
      terms.push_back(term());
    }
    return alt_all(alphabet_, terms);
  }

  Regex term() {
    if (!starts_atom(peek())) {
      fail(peek().type == Token::end ? "unexpected end of expression"
                                     : "unexpected '" + peek().text + "'");
    }
    std::vector<Regex> factors;
    while (starts_atom(peek())) factors.push_back(factor());
    return concat_all(alphabet_, factors);
  }

  Regex factor() {
    Regex r = atom();
    while (peek().type == Token::star) {
      ++pos_;
      r = Regex::star(r);
    }
    return r;
  }

  Regex atom() {
    const Token& t = peek();
    if (t.type == Token::lparen) {
      ++pos_;
      Regex r = expr();
      if (peek().type != Token::rparen) fail("expected ')'");
      ++pos_;
      return r;
    }
    ++pos_;
    if (t.text == "eps") return Regex::epsilon(alphabet_);
    if (t.text == "empty") return Regex::empty(alphabet_);
    return Regex::symbol(alphabet_, alphabet_.index_of(t.text));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Alphabet& alphabet_;
};

}  // namespace

Regex parse_regex(std::string_view text, const Alphabet& alphabet) {
  return Parser(text, alphabet).parse();
}

// ---------------------------------------------------------------------------
// Printing

namespace {

void print(const Regex& r, std::string& out) {
  auto wrapped = [&](const Regex& sub, bool parens) {
    if (parens) out += '(';
    print(sub, out);
    if (parens) out += ')';
  };
  switch (r.kind()) {
    case RegexKind::empty:
      out += "empty";
      return;
    case RegexKind::epsilon:
      out += "eps";
      return;
    case RegexKind::symbol:
      out += r.symbol_name();
      return;
    case RegexKind::alt:
      wrapped(r.left(), r.left().kind() == RegexKind::alt);
      out += " + ";
      print(r.right(), out);
      return;
    case RegexKind::concat: {
      auto lk = r.left().kind();
      wrapped(r.left(), lk == RegexKind::alt || lk == RegexKind::concat);
      out += ' ';
      wrapped(r.right(), r.right().kind() == RegexKind::alt);
      return;
    }
    case RegexKind::star: {
      auto ik = r.inner().kind();
      wrapped(r.inner(), ik == RegexKind::alt || ik == RegexKind::concat);
      out += '*';
      return;
    }
  }
}

}  // namespace

std::string to_string(const Regex& r) {
  std::string out;
  print(r, out);
  return out;
}

// ---------------------------------------------------------------------------
// Simplifying builders

Regex smart_alt(const Regex& left, const Regex& right) {
  if (left.kind() == RegexKind::empty) return right;
  if (right.kind() == RegexKind::empty) return left;
  if (left == right) return left;
  return Regex::alt(left, right);
}

Regex smart_cat(const Regex& left, const Regex& right) {
  if (left.kind() == RegexKind::empty || right.kind() == RegexKind::empty) {
    return Regex::empty(left.alphabet());
  }
  if (left.kind() == RegexKind::epsilon) return right;
  if (right.kind() == RegexKind::epsilon) return left;
  return Regex::cat(left, right);
}

Regex smart_star(const Regex& inner) {
  switch (inner.kind()) {
    case RegexKind::empty:
    case RegexKind::epsilon:
      return Regex::epsilon(inner.alphabet());
    case RegexKind::star:
      return inner;
    default:
      return Regex::star(inner);
  }
}

Regex concat_all(const Alphabet& alphabet, std::span<const Regex> items) {
  if (items.empty()) return Regex::epsilon(alphabet);
  Regex r = items.back();
  for (std::size_t i = items.size() - 1; i-- > 0;) r = Regex::cat(items[i], r);
  return r;
}

Regex alt_all(const Alphabet& alphabet, std::span<const Regex> items) {
  if (items.empty()) return Regex::empty(alphabet);
  Regex r = items.back();
  for (std::size_t i = items.size() - 1; i-- > 0;) r = Regex::alt(items[i], r);
  return r;
}

bool is_star_free(const Regex& r) {
  switch (r.kind()) {
    case RegexKind::star:
      return false;
    case RegexKind::alt:
    case RegexKind::concat:
      return is_star_free(r.left()) && is_star_free(r.right());
    default:
      return true;
  }
}

bool has_union(const Regex& r) {
  switch (r.kind()) {
    case RegexKind::alt:
      return true;
    case RegexKind::concat:
      return has_union(r.left()) || has_union(r.right());
    case RegexKind::star:
      return has_union(r.inner());
    default:
      return false;
  }
}

std::vector<std::uint32_t> symbols_in(const Regex& r) {
  std::set<std::uint32_t> seen;
  std::vector<Regex> stack{r};
  while (!stack.empty()) {
    Regex x = stack.back();
    stack.pop_back();
    switch (x.kind()) {
      case RegexKind::symbol:
        seen.insert(x.symbol_index());
        break;
      case RegexKind::alt:
      case RegexKind::concat:
        stack.push_back(x.left());
        stack.push_back(x.right());
        break;
      case RegexKind::star:
        stack.push_back(x.inner());
        break;
      default:
        break;
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace rsrl
