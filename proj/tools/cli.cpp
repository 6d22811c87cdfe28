#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <map>

#include "rsrl/distance.hpp"
#include "rsrl/error.hpp"
#include "rsrl/membership.hpp"
#include "rsrl/rewriting.hpp"
#include "rsrl/spec_file.hpp"
#include "rsrl/unionfree.hpp"

namespace rsrl::cli {

namespace {

using json = nlohmann::json;

struct Options {
  bool json = false;
  std::size_t state_budget = 100000;
  std::size_t unionfree_budget = 4096;
  std::size_t closure_budget = 200000;
  std::size_t depth_budget = 0;

  std::string spec, left, right, out_path, query, regex, kind;
  std::string algorithm = "general";
  std::size_t max_len = 8;

  MembershipConfig config() const {
    MembershipConfig c;
    c.state_budget = state_budget;
    c.unionfree_budget = unionfree_budget;
    c.closure_budget = closure_budget;
    c.depth_budget = depth_budget;
    c.oracle_max_len = max_len;
    return c;
  }
  Limits limits() const { return Limits{state_budget}; }
};

class Command {
 public:
  Command(std::string name, const Options& opt, std::ostream& out)
      : opt_(opt), out_(out) {
    doc_["command"] = std::move(name);
    doc_["answer"] = nullptr;
    doc_["stats"] = json::object();
  }

  json& doc() { return doc_; }
  json& stats() { return doc_["stats"]; }
  void line(const std::string& s) {
    if (!opt_.json) out_ << s << '\n';
  }
  int finish(int code) {
    if (opt_.json) out_ << doc_.dump() << '\n';
    return code;
  }
  int decide(bool answer) {
    doc_["answer"] = answer;
    return finish(answer ? 0 : 1);
  }

 private:
  const Options& opt_;
  std::ostream& out_;
  json doc_;
};

SpecFile load(const std::string& path, const Options& opt) {
  if (path.empty()) throw InvalidArgument("a spec file is required");
  return read_spec(path, opt.limits());
}

Regex query_of(const SpecFile& spec, const Options& opt) {
  if (!opt.query.empty()) return parse_regex(opt.query, spec.rsrl.sigma());
  if (spec.query) return *spec.query;
  throw InvalidArgument("no query: pass --query or add an 'R:' line to the spec");
}

Regex delta_regex(const SpecFile& spec, const Options& opt) {
  if (!opt.regex.empty()) return parse_regex(opt.regex, spec.rsrl.delta());
  return spec.rsrl.k();
}

void put_witness(Command& c, const std::optional<Word>& w) {
  if (!w) return;
  c.doc()["witness"] = to_string(*w);
  c.line("witness: " + to_string(*w));
}

int cmd_member(const Options& opt, std::ostream& out) {
  Command c("member", opt, out);
  auto spec = load(opt.spec, opt);
  Regex q = query_of(spec, opt);
  c.stats()["algorithm"] = opt.algorithm;
  if (opt.algorithm == "general") {
    auto res = membership(q, spec.rsrl, opt.config());
    c.stats()["union_free_terms"] = res.stats.union_free_terms;
    c.stats()["unfold_yields"] = res.stats.unfold_yields;
    c.stats()["basiccheck_calls"] = res.stats.basiccheck_calls;
    c.line(res.answer ? "member" : "not a member");
    put_witness(c, res.witness);
    return c.decide(res.answer);
  }
  if (opt.algorithm == "starfree") {
    auto res = membership_star_free(q, spec.rsrl, opt.limits());
    c.line(res.answer ? "member" : "not a member");
    put_witness(c, res.witness);
    return c.decide(res.answer);
  }
  if (opt.algorithm == "oracle") {
    auto res = oracle_membership(q, spec.rsrl, opt.max_len, opt.limits());
    c.stats()["max_len"] = opt.max_len;
    if (!res.answer) {
      c.line("inconclusive");
      return c.finish(2);
    }
    c.line(*res.answer ? "member" : "not a member");
    put_witness(c, res.witness);
    return c.decide(*res.answer);
  }
  throw InvalidArgument("unknown algorithm '" + opt.algorithm + "'");
}

int cmd_compare(const Options& opt, std::ostream& out, bool both_ways) {
  Command c(both_ways ? "equiv" : "include", opt, out);
  auto a = load(opt.left, opt);
  auto b = load(opt.right, opt);
  bool yes = both_ways ? equivalence_star_free(a.rsrl, b.rsrl, opt.limits())
                       : inclusion_star_free(a.rsrl, b.rsrl, opt.limits());
  c.line(yes ? "yes" : "no");
  return c.decide(yes);
}

int cmd_goals(const Options& opt, std::ostream& out) {
  Command c("goals", opt, out);
  auto spec = load(opt.spec, opt);
  auto g = goals(spec.rsrl, opt.limits());
  json list = json::array();
  for (const auto& m : g) {
    list.push_back(to_string(m.regex));
    c.line(to_string(m.regex));
  }
  c.doc()["goals"] = list;
  c.stats()["members"] = g.size();
  return c.finish(0);
}

int cmd_op(const Options& opt, std::ostream& out) {
  Command c("op", opt, out);
  auto lim = opt.limits();
  auto left = load(opt.left, opt).rsrl;
  auto right = [&] {
    if (opt.right.empty()) throw InvalidArgument("--kind " + opt.kind + " needs --right");
    return load(opt.right, opt).rsrl;
  };
  auto operand = [&] {
    if (opt.query.empty()) throw InvalidArgument("--kind " + opt.kind + " needs --query");
    return parse_regex(opt.query, left.sigma());
  };
  using Binary = std::function<Rsrl()>;
  std::map<std::string, Binary> table{
      {"product", [&] { return product(left, right()); }},
      {"union", [&] { return union_of(left, right()); }},
      {"star", [&] { return kleene_star(left); }},
      {"intersection", [&] { return intersection(left, right(), lim); }},
      {"difference", [&] { return difference(left, right(), lim); }},
      {"symdiff", [&] { return symmetric_difference(left, right(), lim); }},
      {"pointwise-star", [&] { return pointwise_star(left, lim); }},
      {"pointwise-complement", [&] { return pointwise_complement(left, lim); }},
      {"pointwise-union", [&] { return pointwise_union(left, operand(), lim); }},
      {"pointwise-intersection", [&] { return pointwise_intersection(left, operand(), lim); }},
      {"pointwise-difference", [&] { return pointwise_difference(left, operand(), lim); }},
      {"cartesian-union", [&] { return cartesian_union(left, right(), lim); }},
      {"cartesian-intersection", [&] { return cartesian_intersection(left, right(), lim); }},
      {"cartesian-difference", [&] { return cartesian_difference(left, right(), lim); }},
  };
  auto it = table.find(opt.kind);
  if (it == table.end()) throw InvalidArgument("unknown operator kind '" + opt.kind + "'");
  Rsrl result = it->second();
  std::string text = write_spec(result);
  if (opt.out_path.empty()) {
    if (!opt.json) out << text;
  } else {
    std::ofstream f(opt.out_path, std::ios::binary);
    if (!f || !(f << text)) throw InvalidArgument("cannot write '" + opt.out_path + "'");
    c.line("wrote " + opt.out_path);
  }
  c.doc()["spec"] = text;
  c.stats()["kind"] = opt.kind;
  c.stats()["delta_size"] = result.delta().size();
  return c.finish(0);
}

int cmd_rewrite(const Options& opt, std::ostream& out) {
  Command c("rewrite", opt, out);
  auto spec = load(opt.spec, opt);
  Dfa m = maximal_rewriting(query_of(spec, opt), spec.rsrl.phi(), opt.limits());
  std::string text = to_string(to_regex(m));
  c.line(text);
  c.doc()["rewriting"] = text;
  c.stats()["states"] = m.num_states;
  c.stats()["empty"] = is_empty(m);
  return c.finish(0);
}

int cmd_decompose(const Options& opt, std::ostream& out) {
  Command c("decompose", opt, out);
  auto spec = load(opt.spec, opt);
  auto terms = union_free_decomp(delta_regex(spec, opt), opt.unionfree_budget);
  json list = json::array();
  for (const auto& t : terms) {
    list.push_back(to_string(t));
    c.line(to_string(t));
  }
  c.doc()["terms"] = list;
  c.stats()["terms"] = terms.size();
  return c.finish(0);
}

int cmd_limited(const Options& opt, std::ostream& out) {
  Command c("limited", opt, out);
  auto spec = load(opt.spec, opt);
  Regex m = delta_regex(spec, opt);
  if (has_union(m)) throw InvalidArgument("limited expects a union-free expression");
  auto a = build_distance_automaton(m, spec.rsrl.phi(), opt.limits());
  auto res = check_limited(a, opt.closure_budget);
  c.doc()["limited"] = res.limited;
  c.doc()["states"] = res.states;
  c.doc()["closure_size"] = res.closure_size;
  c.stats()["states"] = res.states;
  c.stats()["closure_size"] = res.closure_size;
  c.line(res.limited ? "limited" : "unlimited");
  return c.decide(res.limited);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  if (const char* env = std::getenv("RSRL_STATE_BUDGET")) {
    try {
      opt.state_budget = std::stoul(env);
    } catch (const std::exception&) {
      err << "error: RSRL_STATE_BUDGET must be a positive integer\n";
      return 2;
    }
  }

  CLI::App app{"Rational sets of regular languages"};
  app.require_subcommand(1);
  app.add_flag("--json", opt.json, "Emit one JSON object");
  app.add_option("--state-budget", opt.state_budget, "Automaton state budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--unionfree-budget", opt.unionfree_budget, "Union-free term budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--closure-budget", opt.closure_budget, "Limitedness closure budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--depth-budget", opt.depth_budget, "Unfold depth budget (0 = automatic)");

  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", opt.json, "Emit one JSON object"); };

  auto* member = app.add_subcommand("member", "Is the query a member language?");
  member->add_option("--spec", opt.spec, "Spec file")->required();
  member->add_option("--query", opt.query, "Query regex over sigma (default: the R line)");
  member->add_option("--algorithm", opt.algorithm, "general | starfree | oracle")
      ->check(CLI::IsMember({"general", "starfree", "oracle"}));
  member->add_option("--max-len", opt.max_len, "Word length bound for the oracle");
  json_flag(member);

  auto* include = app.add_subcommand("include", "Is every member of LEFT a member of RIGHT?");
  auto* equiv = app.add_subcommand("equiv", "Do LEFT and RIGHT have the same members?");
  for (auto* sub : {include, equiv}) {
    sub->add_option("--left", opt.left, "Spec file")->required();
    sub->add_option("--right", opt.right, "Spec file")->required();
    json_flag(sub);
  }

  auto* goals_cmd = app.add_subcommand("goals", "List the member languages");
  goals_cmd->add_option("--spec", opt.spec, "Spec file")->required();
  json_flag(goals_cmd);

  auto* op = app.add_subcommand("op", "Apply an operator and write the resulting spec");
  op->add_option("--kind", opt.kind, "Operator name")->required();
  op->add_option("--left", opt.left, "Spec file")->required();
  op->add_option("--right", opt.right, "Spec file (binary operators)");
  op->add_option("--query", opt.query, "Regex over sigma (point-wise operators)");
  op->add_option("--out", opt.out_path, "Output spec file (default: stdout)");
  json_flag(op);

  auto* rewrite = app.add_subcommand("rewrite", "Maximal rewriting of the query");
  rewrite->add_option("--spec", opt.spec, "Spec file")->required();
  rewrite->add_option("--query", opt.query, "Query regex over sigma (default: the R line)");
  json_flag(rewrite);

  auto* decompose = app.add_subcommand("decompose", "Union-free decomposition of K");
  auto* limited = app.add_subcommand("limited", "Limitedness of a union-free expression's distance automaton");
  for (auto* sub : {decompose, limited}) {
    sub->add_option("--spec", opt.spec, "Spec file")->required();
    sub->add_option("--regex", opt.regex, "Expression over delta (default: K)");
    json_flag(sub);
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*member) return cmd_member(opt, out);
    if (*include) return cmd_compare(opt, out, false);
    if (*equiv) return cmd_compare(opt, out, true);
    if (*goals_cmd) return cmd_goals(opt, out);
    if (*op) return cmd_op(opt, out);
    if (*rewrite) return cmd_rewrite(opt, out);
    if (*decompose) return cmd_decompose(opt, out);
    if (*limited) return cmd_limited(opt, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace rsrl::cli
