#include "rsrl/distance.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include "rsrl/error.hpp"

namespace rsrl {

std::size_t DistanceAutomaton::num_edges() const {
  std::size_t n = 0;
  for (const auto& e : edges) n += e.size();
  return n;
}

namespace {

struct Fragment {
  std::uint32_t initial;
  std::vector<std::uint32_t> finals;
};

std::vector<bool> dfa_useful(const Dfa& d) {
  const std::size_t k = d.alphabet.size();
  std::vector<bool> reach(d.num_states), coreach(d.num_states);
  std::vector<std::uint32_t> stack{d.initial};
  reach[d.initial] = true;
  std::vector<std::vector<std::uint32_t>> rev(d.num_states);
  while (!stack.empty()) {
    auto q = stack.back();
    stack.pop_back();
    for (std::uint32_t a = 0; a < k; ++a) {
      auto t = d.next(q, a);
      rev[t].push_back(q);
      if (!reach[t]) {
        reach[t] = true;
        stack.push_back(t);
      }
    }
  }
  for (std::uint32_t q = 0; q < d.num_states; ++q) {
    if (reach[q] && d.is_final(q)) {
      coreach[q] = true;
      stack.push_back(q);
    }
  }
  while (!stack.empty()) {
    auto q = stack.back();
    stack.pop_back();
    for (auto p : rev[q]) {
      if (!coreach[p]) {
        coreach[p] = true;
        stack.push_back(p);
      }
    }
  }
  std::vector<bool> out(d.num_states);
  for (std::uint32_t q = 0; q < d.num_states; ++q) out[q] = reach[q] && coreach[q];
  return out;
}

class Builder {
 public:
  Builder(const Substitution& phi, const Limits& limits) : phi_(phi), limits_(limits) {
    a_.alphabet = phi.sigma();
    images_.resize(phi.delta().size());
  }

  Fragment build(const Regex& m) {
    switch (m.kind()) {
      case RegexKind::empty:
        return {add(), {}};
      case RegexKind::epsilon: {
        auto s = add();
        return {s, {s}};
      }
      case RegexKind::symbol:
        return image(m.symbol_index());
      case RegexKind::concat: {
        auto x = build(m.left());
        auto y = build(m.right());
        for (auto f : x.finals) a_.add_edge(f, kEpsilonLabel, y.initial, 0);
        return {x.initial, std::move(y.finals)};
      }
      case RegexKind::alt: {
        auto s = add();
        auto x = build(m.left());
        auto y = build(m.right());
        a_.add_edge(s, kEpsilonLabel, x.initial, 0);
        a_.add_edge(s, kEpsilonLabel, y.initial, 0);
        x.finals.insert(x.finals.end(), y.finals.begin(), y.finals.end());
        return {s, std::move(x.finals)};
      }
      case RegexKind::star: {
        auto s = add();
        auto x = build(m.inner());
        a_.add_edge(s, kEpsilonLabel, x.initial, 0);
        for (auto f : x.finals) a_.add_edge(f, kEpsilonLabel, s, 1);
        x.finals.push_back(s);
        return {s, std::move(x.finals)};
      }
    }
    return {add(), {}};
  }

  DistanceAutomaton finish(const Fragment& top) {
    a_.initial = top.initial;
    for (auto f : top.finals) a_.finals[f] = true;
    return std::move(a_);
  }

 private:
  std::uint32_t add() {
    if (a_.num_states() + 1 > limits_.state_budget) {
      throw BudgetExceeded("state budget of " + std::to_string(limits_.state_budget) +
                           " exceeded in distance automaton");
    }
    return a_.add_state();
  }

  Fragment image(std::uint32_t d) {
    if (!images_[d]) images_[d] = to_dfa(phi_.image(d), limits_);
    const Dfa& dfa = *images_[d];
    auto useful = dfa_useful(dfa);
    if (!useful[dfa.initial]) return {add(), {}};
    std::vector<std::uint32_t> id(dfa.num_states);
    Fragment out{};
    for (std::uint32_t q = 0; q < dfa.num_states; ++q) {
      if (!useful[q]) continue;
      id[q] = add();
      if (dfa.is_final(q)) out.finals.push_back(id[q]);
    }
    for (std::uint32_t q = 0; q < dfa.num_states; ++q) {
      if (!useful[q]) continue;
      for (std::uint32_t a = 0; a < dfa.alphabet.size(); ++a) {
        auto t = dfa.next(q, a);
        if (useful[t]) a_.add_edge(id[q], a, id[t], 0);
      }
    }
    out.initial = id[dfa.initial];
    return out;
  }

  const Substitution& phi_;
  const Limits& limits_;
  DistanceAutomaton a_;
  std::vector<std::optional<Dfa>> images_;
};

constexpr std::uint64_t kNoDist = std::numeric_limits<std::uint64_t>::max();

// Least epsilon-path weight from `from` to every state.
std::vector<std::uint64_t> epsilon_distances(const DistanceAutomaton& a, std::uint32_t from) {
  std::vector<std::uint64_t> dist(a.num_states(), kNoDist);
  using Item = std::pair<std::uint64_t, std::uint32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[from] = 0;
  pq.emplace(0, from);
  while (!pq.empty()) {
    auto [d, q] = pq.top();
    pq.pop();
    if (d != dist[q]) continue;
    for (const auto& e : a.edges[q]) {
      if (e.label != kEpsilonLabel) continue;
      if (d + e.weight < dist[e.target]) {
        dist[e.target] = d + e.weight;
        pq.emplace(dist[e.target], e.target);
      }
    }
  }
  return dist;
}

// Matrices over {0, 1, omega, inf}, row-major.
constexpr std::uint8_t kOmega = 2;
constexpr std::uint8_t kInf = 3;
using Matrix = std::string;

Matrix multiply(const Matrix& x, const Matrix& y, std::size_t n) {
  Matrix out(n * n, static_cast<char>(kInf));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      auto xik = static_cast<std::uint8_t>(x[i * n + k]);
      if (xik == kInf) continue;
      for (std::size_t j = 0; j < n; ++j) {
        auto v = std::max(xik, static_cast<std::uint8_t>(y[k * n + j]));
        auto& o = out[i * n + j];
        if (v < static_cast<std::uint8_t>(o)) o = static_cast<char>(v);
      }
    }
  }
  return out;
}

Matrix stabilize(const Matrix& e, std::size_t n) {
  Matrix out(n * n, static_cast<char>(kInf));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::uint8_t best = kInf;
      for (std::size_t k = 0; k < n; ++k) {
        if (e[k * n + k] != 0) continue;
        auto v = std::max(static_cast<std::uint8_t>(e[i * n + k]),
                          static_cast<std::uint8_t>(e[k * n + j]));
        best = std::min(best, v);
      }
      if (best >= kOmega) best = e[i * n + j] == static_cast<char>(kInf) ? kInf : kOmega;
      out[i * n + j] = static_cast<char>(best);
    }
  }
  return out;
}

}  // namespace

DistanceAutomaton build_distance_automaton(const Regex& m, const Substitution& phi,
                                           const Limits& limits) {
  require_same_alphabet(m.alphabet(), phi.delta(), "distance automaton source");
  Builder b(phi, limits);
  auto top = b.build(m);
  return b.finish(top);
}

DistanceAutomaton build_distance_automaton(const ChainForm& m, const Substitution& phi,
                                           const Limits& limits) {
  return build_distance_automaton(to_regex(m), phi, limits);
}

Length min_distance(const DistanceAutomaton& a, const IndexWord& w) {
  const std::size_t n = a.num_states();
  const std::size_t len = w.size();
  std::vector<std::uint64_t> dist(n * (len + 1), kNoDist);
  using Item = std::pair<std::uint64_t, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[a.initial] = 0;
  pq.emplace(0, a.initial);
  while (!pq.empty()) {
    auto [d, node] = pq.top();
    pq.pop();
    if (d != dist[node]) continue;
    std::size_t pos = node / n;
    auto q = static_cast<std::uint32_t>(node % n);
    for (const auto& e : a.edges[q]) {
      std::size_t next;
      if (e.label == kEpsilonLabel) {
        next = pos * n + e.target;
      } else if (pos < len && e.label == w[pos]) {
        next = (pos + 1) * n + e.target;
      } else {
        continue;
      }
      if (d + e.weight < dist[next]) {
        dist[next] = d + e.weight;
        pq.emplace(dist[next], next);
      }
    }
  }
  std::uint64_t best = kNoDist;
  for (std::size_t q = 0; q < n; ++q) {
    if (a.finals[q]) best = std::min(best, dist[len * n + q]);
  }
  return best == kNoDist ? Length::infinite() : Length(best);
}

Length min_distance(const DistanceAutomaton& a, const Word& w) {
  return min_distance(a, a.alphabet.encode(w));
}

EpsilonFree eliminate_epsilon(const DistanceAutomaton& a) {
  const auto n = static_cast<std::uint32_t>(a.num_states());
  std::vector<std::vector<std::uint64_t>> close(n);
  for (std::uint32_t q = 0; q < n; ++q) close[q] = epsilon_distances(a, q);

  EpsilonFree out;
  out.automaton.alphabet = a.alphabet;
  for (std::uint32_t q = 0; q < n; ++q) out.automaton.add_state(a.finals[q]);
  out.automaton.initial = a.initial;

  for (std::uint32_t p = 0; p < n; ++p) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> best;
    for (std::uint32_t r1 = 0; r1 < n; ++r1) {
      if (close[p][r1] == kNoDist) continue;
      for (const auto& e : a.edges[r1]) {
        if (e.label == kEpsilonLabel) continue;
        for (std::uint32_t t = 0; t < n; ++t) {
          if (close[e.target][t] == kNoDist) continue;
          std::uint64_t w = close[p][r1] + e.weight + close[e.target][t];
          auto [it, fresh] = best.try_emplace({e.label, t}, w);
          if (!fresh) it->second = std::min(it->second, w);
        }
      }
    }
    for (const auto& [key, w] : best) {
      auto capped = static_cast<std::uint32_t>(
          std::min<std::uint64_t>(w, std::numeric_limits<std::uint32_t>::max()));
      out.automaton.add_edge(p, key.first, key.second, capped);
    }
  }

  std::uint64_t eps = kNoDist;
  for (std::uint32_t q = 0; q < n; ++q) {
    if (a.finals[q]) eps = std::min(eps, close[a.initial][q]);
  }
  out.empty_word_distance = eps == kNoDist ? Length::infinite() : Length(eps);
  return out;
}

LimitednessResult check_limited(const DistanceAutomaton& input, std::size_t closure_budget) {
  DistanceAutomaton a = eliminate_epsilon(input).automaton;
  const auto n0 = static_cast<std::uint32_t>(a.num_states());
  LimitednessResult res;

  // Trim to states on some accepting path.
  std::vector<bool> reach(n0), coreach(n0);
  std::vector<std::vector<std::uint32_t>> rev(n0);
  std::vector<std::uint32_t> stack{a.initial};
  reach[a.initial] = true;
  while (!stack.empty()) {
    auto q = stack.back();
    stack.pop_back();
    for (const auto& e : a.edges[q]) {
      if (!reach[e.target]) {
        reach[e.target] = true;
        stack.push_back(e.target);
      }
    }
  }
  for (std::uint32_t q = 0; q < n0; ++q) {
    for (const auto& e : a.edges[q]) rev[e.target].push_back(q);
    if (a.finals[q]) {
      coreach[q] = true;
      stack.push_back(q);
    }
  }
  while (!stack.empty()) {
    auto q = stack.back();
    stack.pop_back();
    for (auto p : rev[q]) {
      if (!coreach[p]) {
        coreach[p] = true;
        stack.push_back(p);
      }
    }
  }
  std::vector<std::uint32_t> id(n0, kEpsilonLabel);
  std::size_t n = 0;
  for (std::uint32_t q = 0; q < n0; ++q) {
    if (reach[q] && coreach[q]) id[q] = static_cast<std::uint32_t>(n++);
  }
  res.states = n;
  if (n == 0) return res;

  bool weighted = false;
  const std::size_t k = a.alphabet.size();
  std::vector<Matrix> letters(k, Matrix(n * n, static_cast<char>(kInf)));
  for (std::uint32_t q = 0; q < n0; ++q) {
    if (id[q] == kEpsilonLabel) continue;
    for (const auto& e : a.edges[q]) {
      if (id[e.target] == kEpsilonLabel) continue;
      std::uint8_t v = e.weight == 0 ? 0 : 1;
      weighted = weighted || v == 1;
      auto& cell = letters[e.label][id[q] * n + id[e.target]];
      if (v < static_cast<std::uint8_t>(cell)) cell = static_cast<char>(v);
    }
  }
  if (!weighted) return res;

  const std::size_t init = id[a.initial];
  std::vector<std::size_t> finals;
  for (std::uint32_t q = 0; q < n0; ++q) {
    if (id[q] != kEpsilonLabel && a.finals[q]) finals.push_back(id[q]);
  }

  std::vector<Matrix> elements;
  std::unordered_set<Matrix> seen;
  std::vector<Matrix> gens;
  std::unordered_set<Matrix> gen_seen;
  std::vector<std::size_t> done;
  bool unlimited = false;

  auto add_gen = [&](const Matrix& m) {
    if (gen_seen.insert(m).second) gens.push_back(m);
  };
  std::function<void(const Matrix&)> add = [&](const Matrix& m) {
    if (!seen.insert(m).second) return;
    if (elements.size() >= closure_budget) {
      throw BudgetExceeded("limitedness closure exceeded " + std::to_string(closure_budget) +
                           " matrices");
    }
    elements.push_back(m);
    done.push_back(0);
    std::uint8_t row = kInf;
    for (auto f : finals) row = std::min(row, static_cast<std::uint8_t>(m[init * n + f]));
    if (row == kOmega) unlimited = true;
    if (multiply(m, m, n) == m) {
      Matrix s = stabilize(m, n);
      add_gen(s);
      add(s);
    }
  };

  for (const auto& m : letters) add_gen(m);
  for (const auto& m : letters) add(m);
  bool progress = true;
  while (progress && !unlimited) {
    progress = false;
    for (std::size_t i = 0; i < elements.size() && !unlimited; ++i) {
      while (done[i] < gens.size() && !unlimited) {
        Matrix x = elements[i];
        Matrix g = gens[done[i]++];
        add(multiply(x, g, n));
        progress = true;
      }
    }
  }
  res.closure_size = elements.size();
  res.limited = !unlimited;
  return res;
}

bool is_limited(const DistanceAutomaton& a, std::size_t closure_budget) {
  return check_limited(a, closure_budget).limited;
}

}  // namespace rsrl
