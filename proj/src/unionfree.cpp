#include "rsrl/unionfree.hpp"

#include <unordered_set>

#include "rsrl/error.hpp"

namespace rsrl {

namespace {

void flatten_into(const Regex& r, std::vector<Regex>& out) {
  switch (r.kind()) {
    case RegexKind::concat:
      flatten_into(r.left(), out);
      flatten_into(r.right(), out);
      return;
    case RegexKind::epsilon:
      return;
    default:
      out.push_back(r);
  }
}

class TermSet {
 public:
  TermSet(std::size_t budget) : budget_(budget) {}

  void add(Regex r) {
    if (!seen_.insert(to_string(r)).second) return;
    if (terms_.size() >= budget_) {
      throw BudgetExceeded("union-free decomposition exceeded " + std::to_string(budget_) +
                           " terms");
    }
    terms_.push_back(std::move(r));
  }
  std::vector<Regex>& terms() { return terms_; }

 private:
  std::size_t budget_;
  std::unordered_set<std::string> seen_;
  std::vector<Regex> terms_;
};

Regex join(const Regex& a, const Regex& b) {
  std::vector<Regex> items;
  flatten_into(a, items);
  flatten_into(b, items);
  return concat_all(a.alphabet(), items);
}

std::vector<Regex> decompose(const Regex& r, std::size_t budget) {
  TermSet out(budget);
  switch (r.kind()) {
    case RegexKind::empty:
      break;
    case RegexKind::epsilon:
    case RegexKind::symbol:
      out.add(r);
      break;
    case RegexKind::alt:
      for (auto& t : decompose(r.left(), budget)) out.add(t);
      for (auto& t : decompose(r.right(), budget)) out.add(t);
      break;
    case RegexKind::concat: {
      auto left = decompose(r.left(), budget);
      if (left.empty()) break;
      auto right = decompose(r.right(), budget);
      for (const auto& a : left) {
        for (const auto& b : right) out.add(join(a, b));
      }
      break;
    }
    case RegexKind::star: {
      std::vector<Regex> items;
      for (const auto& t : decompose(r.inner(), budget)) {
        Regex s = smart_star(t);
        if (s.kind() != RegexKind::epsilon) items.push_back(s);
      }
      if (items.empty()) {
        out.add(Regex::epsilon(r.alphabet()));
      } else if (items.size() == 1) {
        out.add(items.front());
      } else {
        out.add(Regex::star(concat_all(r.alphabet(), items)));
      }
      break;
    }
  }
  return std::move(out.terms());
}

void critical_level(const Regex& level, const std::vector<bool>& mask, Position& path,
                    std::set<Position>& out) {
  std::uint32_t star_index = 0;
  for (const auto& item : flatten_concat(level)) {
    if (item.kind() == RegexKind::symbol && !mask.at(item.symbol_index())) {
      out.insert(path);
    } else if (item.kind() == RegexKind::star) {
      path.push_back(++star_index);
      critical_level(item.inner(), mask, path, out);
      path.pop_back();
    }
  }
}

}  // namespace

std::vector<Regex> flatten_concat(const Regex& u) {
  std::vector<Regex> out;
  flatten_into(u, out);
  return out;
}

std::vector<Regex> union_free_decomp(const Regex& r, std::size_t term_budget) {
  return decompose(r, term_budget);
}

ChainForm to_chain_form(const Regex& u) {
  ChainForm c{u.alphabet(), {Word{}}, {}};
  for (const auto& item : flatten_concat(u)) {
    switch (item.kind()) {
      case RegexKind::symbol:
        c.words.back().push_back(item.symbol_name());
        break;
      case RegexKind::star:
        c.stars.push_back(item.inner());
        c.words.emplace_back();
        break;
      case RegexKind::empty:
        throw InvalidArgument("chain form of an empty-language expression");
      default:
        throw InvalidArgument("chain form requires a union-free expression");
    }
  }
  return c;
}

Regex to_regex(const ChainForm& c) {
  std::vector<Regex> items;
  for (std::size_t h = 0; h < c.words.size(); ++h) {
    for (const auto& s : c.words[h]) items.push_back(Regex::symbol(c.alphabet, s));
    if (h < c.stars.size()) items.push_back(Regex::star(c.stars[h]));
  }
  return concat_all(c.alphabet, items);
}

std::string to_string(const ChainForm& c) { return to_string(to_regex(c)); }

Regex ufs(const Regex& s, const Position& p) {
  if (p.empty()) return s;
  auto items = flatten_concat(s);
  std::uint32_t star_index = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].kind() != RegexKind::star || ++star_index != p.front()) continue;
    Regex beta = items[i].inner();
    std::vector<Regex> out(items.begin(), items.begin() + static_cast<std::ptrdiff_t>(i));
    out.push_back(items[i]);
    out.push_back(ufs(beta, Position(p.begin() + 1, p.end())));
    out.push_back(items[i]);
    out.insert(out.end(), items.begin() + static_cast<std::ptrdiff_t>(i) + 1, items.end());
    return concat_all(s.alphabet(), out);
  }
  throw InvalidArgument("position does not address a star");
}

std::set<Position> critical(const Regex& s, const std::vector<bool>& eps_mask) {
  std::set<Position> out;
  Position path;
  critical_level(s, eps_mask, path, out);
  return out;
}

std::set<Position> critical(const Regex& s, const Substitution& phi) {
  return critical(s, epsilon_mask(phi));
}

Regex e_part(const Regex& s, const std::vector<bool>& eps_mask) {
  switch (s.kind()) {
    case RegexKind::empty:
    case RegexKind::epsilon:
      return s;
    case RegexKind::symbol:
      return eps_mask.at(s.symbol_index()) ? s : Regex::empty(s.alphabet());
    case RegexKind::concat:
      return smart_cat(e_part(s.left(), eps_mask), e_part(s.right(), eps_mask));
    case RegexKind::star:
      return smart_star(e_part(s.inner(), eps_mask));
    case RegexKind::alt:
      return smart_alt(e_part(s.left(), eps_mask), e_part(s.right(), eps_mask));
  }
  return s;
}

Regex e_part(const Regex& s, const Substitution& phi) { return e_part(s, epsilon_mask(phi)); }

StarRewrite unfold_rewrite(const Regex& s, const Substitution& phi) {
  auto mask = epsilon_mask(phi);
  StarRewrite out{e_part(s, mask), {}};
  Regex e_star = smart_star(out.e);
  for (const auto& p : critical(s, mask)) {
    std::vector<Regex> items;
    if (e_star.kind() != RegexKind::epsilon) items.push_back(e_star);
    items.push_back(ufs(s, p));
    items.push_back(Regex::star(s));
    out.branches.emplace_back(p, concat_all(s.alphabet(), items));
  }
  return out;
}

}  // namespace rsrl
