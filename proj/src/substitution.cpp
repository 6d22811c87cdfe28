#include "rsrl/substitution.hpp"

#include "rsrl/error.hpp"

namespace rsrl {

Substitution::Substitution()
    : delta_(std::make_shared<const Alphabet>(std::vector<Symbol>{}, AlphabetRole::meta)),
      sigma_(std::make_shared<const Alphabet>()),
      images_(std::make_shared<const std::vector<Regex>>()) {}

Substitution::Substitution(Alphabet delta, Alphabet sigma,
                           const std::map<Symbol, Regex>& images) {
  std::vector<Regex> out;
  out.reserve(delta.size());
  for (const auto& d : delta.symbols()) {
    auto it = images.find(d);
    if (it == images.end()) throw InvalidArgument("no image given for '" + d + "'");
    require_same_alphabet(it->second.alphabet(), sigma, "image of '" + d + "'");
    out.push_back(it->second);
  }
  for (const auto& [name, _] : images) {
    if (!delta.contains(name)) throw UndeclaredSymbol(name);
  }
  delta_ = std::make_shared<const Alphabet>(std::move(delta));
  sigma_ = std::make_shared<const Alphabet>(std::move(sigma));
  images_ = std::make_shared<const std::vector<Regex>>(std::move(out));
}

const Regex& Substitution::image(std::string_view symbol) const {
  return image(delta_->index_of(symbol));
}

bool operator==(const Substitution& a, const Substitution& b) {
  if (a.same_as(b)) return true;
  return a.delta() == b.delta() && a.sigma() == b.sigma() && a.images() == b.images();
}

Regex apply_word(const Substitution& phi, const IndexWord& word) {
  if (word.empty()) throw InvalidArgument("substitution is only defined on nonempty words");
  std::vector<Regex> parts;
  parts.reserve(word.size());
  for (auto d : word) {
    if (d >= phi.delta().size()) throw InvalidArgument("meta symbol index out of range");
    parts.push_back(phi.image(d));
  }
  return concat_all(phi.sigma(), parts);
}

Regex apply_word(const Substitution& phi, const Word& word) {
  return apply_word(phi, phi.delta().encode(word));
}

Regex apply_lang(const Substitution& phi, const Regex& k) {
  require_same_alphabet(k.alphabet(), phi.delta(), "substitution argument");
  switch (k.kind()) {
    case RegexKind::empty:
      return Regex::empty(phi.sigma());
    case RegexKind::epsilon:
      return Regex::epsilon(phi.sigma());
    case RegexKind::symbol:
      return phi.image(k.symbol_index());
    case RegexKind::alt:
      return Regex::alt(apply_lang(phi, k.left()), apply_lang(phi, k.right()));
    case RegexKind::concat:
      return Regex::cat(apply_lang(phi, k.left()), apply_lang(phi, k.right()));
    case RegexKind::star:
      return Regex::star(apply_lang(phi, k.inner()));
  }
  return Regex::empty(phi.sigma());
}

std::vector<bool> epsilon_mask(const Substitution& phi) {
  std::vector<bool> out(phi.delta().size());
  for (std::uint32_t d = 0; d < out.size(); ++d) {
    out[d] = minlen(phi.image(d)) == Length(0);
  }
  return out;
}

std::set<Symbol> epsilon_symbols(const Substitution& phi) {
  std::set<Symbol> out;
  auto mask = epsilon_mask(phi);
  for (std::uint32_t d = 0; d < mask.size(); ++d) {
    if (mask[d]) out.insert(phi.delta().name(d));
  }
  return out;
}

}  // namespace rsrl
