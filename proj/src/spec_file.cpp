#include "rsrl/spec_file.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "rsrl/error.hpp"

namespace rsrl {

namespace {

std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                       ": " + msg,
                   column);
}

struct Located {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;  // 1-based column of text[0]
};

Regex parse_at(const Located& src, const Alphabet& alphabet) {
  try {
    return parse_regex(src.text, alphabet);
  } catch (const ParseError& e) {
    fail(src.line, src.column + e.position(), e.what());
  } catch (const UndeclaredSymbol& e) {
    fail(src.line, src.column, e.what());
  }
}

}  // namespace

SpecFile parse_spec(std::string_view text, const Limits& limits) {
  std::optional<Located> sigma_line, k_line, r_line;
  std::vector<std::pair<std::string, Located>> defs;
  bool in_delta = false;
  bool saw_delta = false;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string_view line = trim(raw);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    std::size_t indent = static_cast<std::size_t>(line.data() - raw.data());

    if (auto def = line.find(":="); def != std::string_view::npos) {
      if (!in_delta) fail(line_no, indent + 1, "definition outside the delta block");
      std::string name(trim(line.substr(0, def)));
      std::string_view body = line.substr(def + 2);
      std::string_view body_trim = trim(body);
      std::size_t col = indent + def + 3 + static_cast<std::size_t>(body_trim.data() - body.data());
      if (!Alphabet::is_identifier(name)) fail(line_no, indent + 1, "invalid symbol name '" + name + "'");
      defs.emplace_back(name, Located{std::string(body_trim), line_no, col});
      continue;
    }

    auto colon = line.find(':');
    if (colon == std::string_view::npos) fail(line_no, indent + 1, "expected 'key: value'");
    std::string key(trim(line.substr(0, colon)));
    std::string_view value = line.substr(colon + 1);
    std::string_view value_trim = trim(value);
    Located loc{std::string(value_trim), line_no,
                indent + colon + 2 + static_cast<std::size_t>(value_trim.data() - value.data())};
    in_delta = false;
    auto once = [&](std::optional<Located>& slot) {
      if (slot) fail(line_no, indent + 1, "duplicate '" + key + "' entry");
      slot = loc;
    };
    if (key == "sigma") {
      once(sigma_line);
    } else if (key == "delta") {
      if (saw_delta) fail(line_no, indent + 1, "duplicate 'delta' block");
      if (!loc.text.empty()) fail(line_no, loc.column, "delta definitions go on their own lines");
      saw_delta = in_delta = true;
    } else if (key == "K") {
      once(k_line);
    } else if (key == "R") {
      once(r_line);
    } else {
      fail(line_no, indent + 1, "unknown key '" + key + "'");
    }
    if (end == text.size()) break;
  }

  if (!sigma_line) fail(line_no, 1, "missing 'sigma' declaration");
  if (!k_line) fail(line_no, 1, "missing 'K' entry");

  std::vector<Symbol> sigma_names;
  {
    std::istringstream in(sigma_line->text);
    for (std::string s; in >> s;) sigma_names.push_back(s);
  }
  Alphabet sigma;
  try {
    sigma = Alphabet(sigma_names, AlphabetRole::base);
  } catch (const InvalidArgument& e) {
    fail(sigma_line->line, sigma_line->column, e.what());
  }

  std::vector<Symbol> delta_names;
  for (const auto& [name, loc] : defs) {
    if (sigma.contains(name)) {
      throw InvalidArgument("line " + std::to_string(loc.line) + ": meta symbol '" + name +
                            "' clashes with a base symbol (delta and sigma must be disjoint)");
    }
    delta_names.push_back(name);
  }
  Alphabet delta;
  try {
    delta = Alphabet(delta_names, AlphabetRole::meta);
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(std::string("delta block: ") + e.what());
  }
  std::map<Symbol, Regex> images;
  for (const auto& [name, loc] : defs) images.emplace(name, parse_at(loc, sigma));

  Regex k = parse_at(*k_line, delta);
  Substitution phi(delta, sigma, images);
  if (accepts(to_dfa(k, limits), IndexWord{})) {
    throw InvalidArgument("line " + std::to_string(k_line->line) +
                          ": K contains the empty word (K must be a subset of delta+)");
  }
  SpecFile out{Rsrl(k, phi, limits), std::nullopt};
  if (r_line) out.query = parse_at(*r_line, sigma);
  return out;
}

SpecFile read_spec(const std::string& path, const Limits& limits) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read spec file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str(), limits);
}

std::string write_spec(const Rsrl& r, const std::optional<Regex>& query) {
  std::ostringstream out;
  out << "sigma:";
  for (const auto& s : r.sigma().symbols()) out << ' ' << s;
  out << "\ndelta:\n";
  for (std::uint32_t d = 0; d < r.delta().size(); ++d) {
    out << "  " << r.delta().name(d) << " := " << to_string(r.phi().image(d)) << '\n';
  }
  out << "K: " << to_string(r.k()) << '\n';
  if (query) out << "R: " << to_string(*query) << '\n';
  return out.str();
}

}  // namespace rsrl
