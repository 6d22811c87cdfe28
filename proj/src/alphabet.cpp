#include "rsrl/alphabet.hpp"

#include <algorithm>
#include <unordered_map>

#include "rsrl/error.hpp"

namespace rsrl {

struct Alphabet::Impl {
  std::vector<Symbol> symbols;
  std::unordered_map<std::string, std::uint32_t> index;
  AlphabetRole role = AlphabetRole::base;
};

namespace {
const std::shared_ptr<const Alphabet::Impl>& empty_impl() {
  static const auto impl = std::make_shared<const Alphabet::Impl>();
  return impl;
}
}  // namespace

Alphabet::Alphabet() : impl_(empty_impl()) {}

Alphabet::Alphabet(std::vector<Symbol> symbols, AlphabetRole role) {
  auto impl = std::make_shared<Impl>();
  std::sort(symbols.begin(), symbols.end());
  if (std::adjacent_find(symbols.begin(), symbols.end()) != symbols.end()) {
    throw InvalidArgument("duplicate symbol in alphabet");
  }
  for (const auto& s : symbols) {
    if (!is_identifier(s)) {
      throw InvalidArgument("invalid symbol identifier '" + s + "'");
    }
    if (s == "eps" || s == "empty") {
      throw InvalidArgument("'" + s + "' is a reserved word");
    }
  }
  for (std::uint32_t i = 0; i < symbols.size(); ++i) impl->index.emplace(symbols[i], i);
  impl->symbols = std::move(symbols);
  impl->role = role;
  impl_ = std::move(impl);
}

std::size_t Alphabet::size() const { return impl_->symbols.size(); }
const std::vector<Symbol>& Alphabet::symbols() const { return impl_->symbols; }
AlphabetRole Alphabet::role() const { return impl_->role; }

std::optional<std::uint32_t> Alphabet::find(std::string_view symbol) const {
  auto it = impl_->index.find(std::string(symbol));
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

std::uint32_t Alphabet::index_of(std::string_view symbol) const {
  auto i = find(symbol);
  if (!i) throw UndeclaredSymbol(std::string(symbol));
  return *i;
}

const Symbol& Alphabet::name(std::uint32_t index) const {
  return impl_->symbols.at(index);
}

IndexWord Alphabet::encode(const Word& word) const {
  IndexWord out;
  out.reserve(word.size());
  for (const auto& s : word) out.push_back(index_of(s));
  return out;
}

Word Alphabet::decode(const IndexWord& word) const {
  Word out;
  out.reserve(word.size());
  for (auto i : word) out.push_back(name(i));
  return out;
}

bool operator==(const Alphabet& a, const Alphabet& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->role == b.impl_->role && a.impl_->symbols == b.impl_->symbols;
}

bool Alphabet::is_identifier(std::string_view text) {
  if (text.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
  };
  if (!alpha(text.front())) return false;
  return std::all_of(text.begin(), text.end(),
                     [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); });
}

void require_same_alphabet(const Alphabet& a, const Alphabet& b,
                           std::string_view what) {
  if (!(a == b)) throw AlphabetMismatch("alphabet mismatch in " + std::string(what));
}

std::string to_string(const Word& word) {
  if (word.empty()) return "eps";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += word[i];
  }
  return out;
}

}  // namespace rsrl
