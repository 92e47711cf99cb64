#include "dfatest/generate.hpp"

#include "tracker.hpp"

namespace dfatest {

namespace {

using detail::Tracker;

enum class Residuals { one_by_one, option_cover };

// Kills the faults of the uncovered edges of `p`, last edge first. `view` is
// the automaton the path is accepting in (the spec or its complement); faults
// and kills are the same in both. Edges whose faults cannot all be killed go
// back into `uncovered`.
void process_path(Tracker& tracker, const Dfa& view, const Path& p, EdgeSet& uncovered, Phase phase,
                  Residuals residuals) {
  const auto edges = p.edges(view);
  for (std::size_t i = edges.size(); i-- > 0;) {
    const Edge e = edges[i];
    const std::size_t idx = view.edge_index(e);
    if (!uncovered[idx]) continue;
    uncovered.reset(idx);
    const Word u = p.word.substr(0, i);
    const Word ua = p.word.substr(0, i + 1);
    bool requeue = false;
    std::vector<StateId> residual;
    for (const auto& f : faults_on_edge(view, e)) {
      if (tracker.killed(f)) continue;
      if (kills(view, f, p.word)) {
        tracker.add(p.word, phase, u);
        continue;
      }
      if (residuals == Residuals::option_cover) {
        residual.push_back(f.wrong_target);
        continue;
      }
      const StateId mutant = mutant_delta_star(view, f, view.initial(), ua);
      if (auto w = shortest_continuation(view, f, p.states[i + 1], mutant, Disagreement::spec_accepts))
        tracker.hold(view, ua + *w, phase, u, true);
      else if (auto w2 = shortest_continuation(view, f, p.states[i + 1], mutant, Disagreement::spec_rejects))
        tracker.hold(view, ua + *w2, phase, u, false);
      else
        requeue = true;
    }
    if (!residual.empty()) {
      for (auto& w : option_cover(view, u, e.letter, residual, true)) {
        const bool acc = accepts(view, w);
        tracker.hold(view, std::move(w), Phase::option_cover, u, acc);
      }
      for (StateId q : residual)
        if (!tracker.killed({e.state, e.letter, q})) requeue = true;
    }
    if (requeue) uncovered.set(idx);
  }
  tracker.flush();
}

void run_phase(Tracker& tracker, const Dfa& view, EdgeSet& uncovered, Phase phase, Residuals residuals,
               const SyncTable* sync) {
  while (uncovered.any()) {
    const auto before = uncovered.count();
    auto p = find_covering_path(view, uncovered, true, sync);
    if (!p) break;
    process_path(tracker, view, *p, uncovered, phase, residuals);
    if (uncovered.count() >= before) break;
  }
}

// Words w·x·l_i for every edge (q, x) into the sink, one per partition block.
// `view` has the sink as a negative sinkhole.
void sink_preprocess(Tracker& tracker, const Dfa& view, StateId sink, const std::optional<SyncPartition>& given,
                     EdgeSet& sink_edges) {
  std::vector<StateId> domain;
  for (StateId q = 0; q < view.num_states(); ++q)
    if (q != sink) domain.push_back(q);
  if (domain.empty()) return;
  const SyncPartition part = given ? *given : accepting_sync_partition(view, domain);
  for (StateId q = 0; q < view.num_states(); ++q) {
    if (q == sink) continue;
    for (LetterId x = 0; x < view.num_letters(); ++x) {
      if (view.next(q, x) != sink) continue;
      sink_edges.set(view.edge_index({q, x}));
      const auto w = shortest_word_to(view, q);
      if (!w) continue;
      const Word wx = *w + view.letter(x);
      for (const auto& l : part.words) tracker.add(wx + l, Phase::sink_preprocess, *w);
    }
  }
  // Blocks synchronize through the spec transitions; a mutant whose faulty
  // edge lies on that route may survive.
  for (std::size_t e = sink_edges.find_first(); e != EdgeSet::npos; e = sink_edges.find_next(e))
    for (const auto& f : faults_on_edge(view, view.edge_at(e)))
      if (!tracker.killed(f))
        if (auto w = shortest_detecting_word(view, f)) tracker.add(*w, Phase::sink_preprocess);
}

// The loop (sink, x) as the last edge of the shortest path into the sink,
// handled in `view` where the sink is accepting.
void sink_loops(Tracker& tracker, const Dfa& view, StateId sink, Phase phase) {
  const auto w = shortest_word_to(view, sink);
  if (!w) return;
  for (LetterId x = 0; x < view.num_letters(); ++x) {
    const Path p = make_path(view, view.initial(), *w + view.letter(x));
    EdgeSet only(view.num_edges());
    only.set(view.edge_index({sink, x}));
    process_path(tracker, view, p, only, phase, Residuals::one_by_one);
  }
}

}  // namespace

TestSuite generate_alg2(const Dfa& dfa, const Alg2Options& options) {
  detail::require_minimal(dfa);
  Tracker tracker(dfa);
  std::optional<SyncTable> table;
  if (options.avoid_masking) table = pair_sync_table(dfa);
  const SyncTable* sync = table ? &*table : nullptr;
  EdgeSet uncovered = all_edges(dfa);
  run_phase(tracker, dfa, uncovered, Phase::accept_path, Residuals::one_by_one, sync);
  run_phase(tracker, complement(dfa), uncovered, Phase::reject_path, Residuals::one_by_one, sync);
  tracker.complete();
  return tracker.take();
}

TestSuite generate_alg3(const Dfa& dfa, const Alg3Options& options) {
  detail::require_minimal(dfa);
  Tracker tracker(dfa);
  const SyncTable table = pair_sync_table(dfa);
  const Dfa comp = complement(dfa);
  const SinkReport sinks = find_sinkholes(dfa);

  EdgeSet sink_edges(dfa.num_edges());
  if (auto x = sinks.negative()) sink_preprocess(tracker, dfa, *x, options.partition, sink_edges);
  if (auto p = sinks.positive()) sink_preprocess(tracker, comp, *p, std::nullopt, sink_edges);

  EdgeSet uncovered = all_edges(dfa) - sink_edges;
  for (const auto& s : sinks.sinks)
    for (LetterId x = 0; x < dfa.num_letters(); ++x) uncovered.reset(dfa.edge_index({s.state, x}));

  run_phase(tracker, dfa, uncovered, Phase::accept_path, Residuals::option_cover, &table);
  if (auto p = sinks.positive()) sink_loops(tracker, dfa, *p, Phase::accept_path);
  if (auto x = sinks.negative()) sink_loops(tracker, comp, *x, Phase::reject_path);
  run_phase(tracker, comp, uncovered, Phase::reject_path, Residuals::option_cover, &table);
  tracker.complete();
  return tracker.take();
}

}  // namespace dfatest
