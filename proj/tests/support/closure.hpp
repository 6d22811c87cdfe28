#pragma once

// Brute-force member-set semantics for the operator table, computed with the
// test-only language checker.

#include <functional>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "rsrl/rsrl.hpp"

namespace oracle {

using Members = std::vector<Lang>;

/// Member languages of a star-free RSRL, deduplicated by equivalence.
Members members(const rsrl::Rsrl& r);

void add_member(Members& set, const Lang& l);
bool contains(const Members& set, const Lang& l);

/// Same languages, regardless of order.
bool same_members(const Members& a, const Members& b);
Members members_of(const rsrl::LanguageSet& s);

struct OperatorCase {
  std::string name;
  bool binary;           // second RSRL argument
  bool uses_query;       // regex argument over sigma
  bool keeps_phi;        // same substitution must be preserved on same-phi inputs
  std::function<rsrl::Rsrl(const rsrl::Rsrl&, const rsrl::Rsrl&, const rsrl::Regex&)> apply;
  std::function<Members(const Members&, const Members&, const rsrl::Regex&)> expected;
};

/// One entry per operator of the algebra (finite cases).
const std::vector<OperatorCase>& operator_table();

}  // namespace oracle
