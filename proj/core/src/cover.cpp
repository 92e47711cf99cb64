#include "dfatest/cover.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "dfatest/error.hpp"

namespace dfatest {

std::size_t default_max_len(const Dfa& dfa) { return dfa.num_states() * dfa.num_states() - 1; }

namespace {

std::string bits_key(const Bits& b) {
  std::vector<Bits::block_type> blocks(b.num_blocks());
  boost::to_block_range(b, blocks.begin());
  return {reinterpret_cast<const char*>(blocks.data()), blocks.size() * sizeof(Bits::block_type)};
}

// One byte per state while that suffices, four otherwise.
class ConfigCodec {
 public:
  explicit ConfigCodec(std::size_t num_states) : wide_(num_states > 256) {}

  void put(std::string& out, StateId q) const {
    if (!wide_) {
      out.push_back(static_cast<char>(q));
      return;
    }
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((q >> (8 * i)) & 0xff));
  }
  StateId get(const std::string& in, std::size_t slot) const {
    if (!wide_) return static_cast<unsigned char>(in[slot]);
    StateId q = 0;
    for (int i = 0; i < 4; ++i) q |= static_cast<StateId>(static_cast<unsigned char>(in[4 * slot + i])) << (8 * i);
    return q;
  }

 private:
  bool wide_;
};

}  // namespace

std::vector<Word> candidate_pool(const Dfa& dfa, const PoolOptions& options) {
  const auto faults = enumerate_faults(dfa);
  if (faults.empty()) return {};
  const ConfigCodec codec(dfa.num_states());

  struct Node {
    std::int64_t parent;
    LetterId via;
    std::size_t depth;
  };
  std::vector<Node> nodes;
  std::vector<const std::string*> configs;  // keys owned by `seen`
  std::unordered_set<std::string> seen;
  std::unordered_map<std::string, std::size_t> first_of_vector;
  std::vector<Bits> vectors;
  std::vector<std::size_t> vector_node;

  std::string start;
  for (std::size_t i = 0; i <= faults.size(); ++i) codec.put(start, dfa.initial());
  configs.push_back(&*seen.insert(std::move(start)).first);
  nodes.push_back({-1, 0, 0});

  // Configuration: spec state in slot 0, then one state per mutant. Two words
  // reaching the same configuration kill the same faults from then on.
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const std::string& cur = *configs[head];
    const StateId spec = codec.get(cur, 0);
    Bits vec(faults.size());
    for (std::size_t j = 0; j < faults.size(); ++j)
      if (dfa.is_final(codec.get(cur, j + 1)) != dfa.is_final(spec)) vec.set(j);
    if (vec.any()) {
      auto key = bits_key(vec);
      if (first_of_vector.emplace(std::move(key), vectors.size()).second) {
        vectors.push_back(std::move(vec));
        vector_node.push_back(head);
        if (vectors.size() > options.cap)
          throw Error(ErrorKind::PoolOverflow,
                      "more than " + std::to_string(options.cap) + " distinct kill vectors within length " +
                          std::to_string(options.max_len));
      }
    }
    if (nodes[head].depth >= options.max_len) continue;
    for (LetterId a = 0; a < dfa.num_letters(); ++a) {
      std::string next;
      next.reserve(cur.size());
      codec.put(next, dfa.next(spec, a));
      for (std::size_t j = 0; j < faults.size(); ++j) codec.put(next, mutant_next(dfa, faults[j], codec.get(cur, j + 1), a));
      auto [it, inserted] = seen.insert(std::move(next));
      if (!inserted) continue;
      configs.push_back(&*it);
      nodes.push_back({static_cast<std::int64_t>(head), a, nodes[head].depth + 1});
    }
  }

  std::vector<std::size_t> keep;
  if (options.prune_dominated) {
    std::vector<std::size_t> order(vectors.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return vectors[a].count() > vectors[b].count(); });
    for (std::size_t i : order) {
      const bool dominated = std::any_of(keep.begin(), keep.end(),
                                         [&](std::size_t k) { return vectors[i].is_proper_subset_of(vectors[k]); });
      if (!dominated) keep.push_back(i);
    }
  } else {
    for (std::size_t i = 0; i < vectors.size(); ++i) keep.push_back(i);
  }

  std::vector<Word> words;
  for (std::size_t i : keep) {
    Word w;
    for (auto s = static_cast<std::int64_t>(vector_node[i]); nodes[s].parent >= 0; s = nodes[s].parent)
      w.push_back(dfa.letter(nodes[s].via));
    std::reverse(w.begin(), w.end());
    words.push_back(std::move(w));
  }
  for (const auto& s : options.seeds)
    if (kill_vector(dfa, s, faults).any()) words.push_back(s);
  std::sort(words.begin(), words.end(), [&](const Word& a, const Word& b) { return shortlex_less(dfa, a, b); });
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

std::vector<Word> candidate_pool(const Dfa& dfa, std::size_t max_len, std::span<const Word> seeds) {
  PoolOptions options;
  options.max_len = max_len;
  options.seeds.assign(seeds.begin(), seeds.end());
  return candidate_pool(dfa, options);
}

CoverInstance make_cover_instance(const Dfa& dfa, std::vector<Word> words, std::size_t max_len,
                                  std::size_t node_budget) {
  return {dfa, kill_matrix(dfa, std::move(words), enumerate_faults(dfa)), max_len, node_budget};
}

namespace {

void require_feasible(const CoverInstance& instance) {
  const auto& m = instance.matrix;
  Bits covered(m.faults.size());
  for (const auto& r : m.rows) covered |= r;
  if (covered.all()) return;
  const auto missing = (~covered).find_first();
  throw Error(ErrorKind::Infeasible,
              "no candidate word kills " + format_fault(instance.dfa, m.faults[missing]));
}

std::vector<Word> pick(const CoverInstance& instance, const std::vector<std::size_t>& rows) {
  std::vector<Word> out;
  for (std::size_t r : rows) out.push_back(instance.matrix.words[r]);
  return out;
}

std::vector<std::size_t> lex_greedy(const CoverInstance& instance) {
  const auto& words = instance.matrix.words;
  return greedy_set_cover(instance.matrix.rows, instance.matrix.faults.size(), [&](std::size_t i, std::size_t j) {
    return word_less(instance.dfa, words[i], words[j]);
  });
}

}  // namespace

CoverResult solve_exact(const CoverInstance& instance) {
  require_feasible(instance);
  CoverResult result;
  result.lower_bound = incompatibility_lower_bound(instance);
  const auto greedy = lex_greedy(instance);
  const auto sol = exact_set_cover(instance.matrix.rows, instance.matrix.faults.size(), instance.node_budget,
                                   result.lower_bound, &greedy);
  result.words = pick(instance, sol.chosen);
  result.optimal = sol.optimal;
  result.nodes = sol.nodes;
  return result;
}

CoverResult greedy_cover(const CoverInstance& instance) {
  require_feasible(instance);
  const auto chosen = lex_greedy(instance);
  CoverResult result;
  result.words = pick(instance, chosen);
  result.lower_bound = incompatibility_lower_bound(instance);
  result.optimal = result.words.size() == result.lower_bound;
  return result;
}

bool faults_compatible(const Dfa& dfa, const TransitionFault& f, const TransitionFault& g) {
  const std::size_t n = dfa.num_states();
  std::vector<bool> seen(n * n * n, false);
  auto id = [n](StateId s, StateId x, StateId y) { return (s * n + x) * n + y; };
  struct Triple {
    StateId s, x, y;
  };
  std::deque<Triple> queue{{dfa.initial(), dfa.initial(), dfa.initial()}};
  seen[id(dfa.initial(), dfa.initial(), dfa.initial())] = true;
  while (!queue.empty()) {
    const auto [s, x, y] = queue.front();
    queue.pop_front();
    const bool fs = dfa.is_final(s);
    if (dfa.is_final(x) != fs && dfa.is_final(y) != fs) return true;
    for (LetterId a = 0; a < dfa.num_letters(); ++a) {
      const Triple t{dfa.next(s, a), mutant_next(dfa, f, x, a), mutant_next(dfa, g, y, a)};
      if (seen[id(t.s, t.x, t.y)]) continue;
      seen[id(t.s, t.x, t.y)] = true;
      queue.push_back(t);
    }
  }
  return false;
}

namespace {

constexpr std::size_t kCliqueBudget = 1'000'000;

// Maximum clique by branch and bound with a greedy colouring bound.
class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<Bits> adj) : adj_(std::move(adj)) {}

  std::size_t run() {
    const std::size_t n = adj_.size();
    Bits all(n);
    all.set();
    // Greedy start: highest degree first.
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return adj_[a].count() > adj_[b].count(); });
    Bits cand = all;
    std::size_t greedy = 0;
    for (std::size_t v : order)
      if (cand[v]) {
        ++greedy;
        cand &= adj_[v];
      }
    best_ = greedy;
    expand(0, all);
    return best_;
  }

 private:
  void expand(std::size_t size, Bits cand) {
    if (++nodes_ > kCliqueBudget) return;
    if (cand.none()) {
      best_ = std::max(best_, size);
      return;
    }
    // Colour classes give an upper bound on the clique inside `cand`.
    std::vector<std::size_t> verts;
    std::vector<std::size_t> colour;
    Bits uncoloured = cand;
    std::size_t c = 0;
    while (uncoloured.any()) {
      ++c;
      Bits avail = uncoloured;
      for (std::size_t v = avail.find_first(); v != Bits::npos; v = avail.find_next(v)) {
        avail -= adj_[v];
        uncoloured.reset(v);
        verts.push_back(v);
        colour.push_back(c);
      }
    }
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (size + colour[i] <= best_) return;
      const std::size_t v = verts[i];
      expand(size + 1, cand & adj_[v]);
      cand.reset(v);
      if (nodes_ > kCliqueBudget) return;
    }
  }

  std::vector<Bits> adj_;
  std::size_t best_ = 0;
  std::size_t nodes_ = 0;
};

}  // namespace

std::size_t incompatibility_lower_bound(const Dfa& dfa, std::span<const TransitionFault> faults) {
  std::vector<TransitionFault> live;
  for (const auto& f : faults)
    if (shortest_detecting_word(dfa, f)) live.push_back(f);
  std::vector<Bits> adj(live.size(), Bits(live.size()));
  for (std::size_t i = 0; i < live.size(); ++i)
    for (std::size_t j = i + 1; j < live.size(); ++j)
      if (!faults_compatible(dfa, live[i], live[j])) {
        adj[i].set(j);
        adj[j].set(i);
      }
  return CliqueSearch(std::move(adj)).run();
}

std::size_t incompatibility_lower_bound(const CoverInstance& instance) {
  return incompatibility_lower_bound(instance.dfa, instance.matrix.faults);
}

std::string format_cover_report(const CoverResult& result) {
  std::ostringstream out;
  out << "optimum: " << result.words.size() << " (pool-optimal)\n";
  out << "lower_bound: " << result.lower_bound << " (unrestricted)\n";
  out << "optimal_closed: " << (result.optimal ? "true" : "false") << '\n';
  for (const auto& w : result.words) out << render_word(w) << '\n';
  return out.str();
}

}  // namespace dfatest
