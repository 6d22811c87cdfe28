#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "rsrl/rsrl.hpp"

namespace rsrl {

/// Contents of a `.rsrl` file:
///
///   # comment
///   sigma: a b c d
///   delta:
///     Dstar := (a + b + c + d)*
///     Da := a
///   K: Dstar Da Dstar
///   R: (a + b + c + d)* a (a + b + c + d)*     (optional)
struct SpecFile {
  Rsrl rsrl;
  std::optional<Regex> query;
};

/// Throws ParseError (message carries line and column) or InvalidArgument
/// naming the violated rule.
SpecFile parse_spec(std::string_view text, const Limits& limits = {});
SpecFile read_spec(const std::string& path, const Limits& limits = {});

std::string write_spec(const Rsrl& r, const std::optional<Regex>& query = std::nullopt);

}  // namespace rsrl
