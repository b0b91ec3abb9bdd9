#ifndef STALLINGS_TESTS_NAIVE_FOLDER_HPP_
#define STALLINGS_TESTS_NAIVE_FOLDER_HPP_

// Reference Stallings folding for tests: scans all pairs of half-edges for a
// clash, merges by relabelling the whole edge list, repeats. Quadratic per
// merge and deliberately unrelated to the union-find folder in the library.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <tuple>
#include <vector>

#include "stallings/automaton.hpp"
#include "stallings/words.hpp"

namespace stallings::testing {

struct NaiveEdge {
  State from;
  int letter;  // positive
  State to;
  auto operator<=>(const NaiveEdge&) const = default;
};

class NaiveFolder {
 public:
  explicit NaiveFolder(Alphabet alphabet) : alphabet_(alphabet) {}

  void add_loop(const Word& w) {
    Word r = reduce(w);
    if (r.empty()) {
      return;
    }
    State from = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      State to = i + 1 == r.size() ? 0 : next_state_++;
      Letter x = r[i];
      if (x.positive()) {
        edges_.insert({from, x.index(), to});
      } else {
        edges_.insert({to, -x.index(), from});
      }
      from = to;
    }
  }

  // Folds choosing among all clashes uniformly at random when seeded,
  // otherwise always the first clash found.
  InverseAutomaton reduce_with(std::optional<std::uint64_t> seed = std::nullopt) {
    std::optional<std::mt19937_64> rng;
    if (seed) {
      rng.emplace(*seed);
    }
    while (true) {
      auto clashes = find_clashes();
      if (clashes.empty()) {
        break;
      }
      std::size_t pick = 0;
      if (rng) {
        pick = std::uniform_int_distribution<std::size_t>(0, clashes.size() - 1)(*rng);
      }
      merge(clashes[pick].first, clashes[pick].second);
    }
    prune();
    return finish();
  }

 private:
  // Half-edges as (state, signed letter, other end).
  std::vector<std::tuple<State, int, State>> halves() const {
    std::vector<std::tuple<State, int, State>> out;
    for (const NaiveEdge& e : edges_) {
      out.emplace_back(e.from, e.letter, e.to);
      out.emplace_back(e.to, -e.letter, e.from);
    }
    return out;
  }

  std::vector<std::pair<State, State>> find_clashes() const {
    auto h = halves();
    std::vector<std::pair<State, State>> out;
    for (std::size_t i = 0; i < h.size(); ++i) {
      for (std::size_t j = i + 1; j < h.size(); ++j) {
        if (std::get<0>(h[i]) == std::get<0>(h[j]) && std::get<1>(h[i]) == std::get<1>(h[j]) &&
            std::get<2>(h[i]) != std::get<2>(h[j])) {
          out.emplace_back(std::get<2>(h[i]), std::get<2>(h[j]));
        }
      }
    }
    return out;
  }

  void merge(State keep, State drop) {
    if (drop == 0) {
      std::swap(keep, drop);
    }
    std::set<NaiveEdge> next;
    for (NaiveEdge e : edges_) {
      if (e.from == drop) e.from = keep;
      if (e.to == drop) e.to = keep;
      next.insert(e);
    }
    edges_ = std::move(next);
  }

  void prune() {
    while (true) {
      std::vector<std::size_t> degree(next_state_, 0);
      for (const NaiveEdge& e : edges_) {
        ++degree[e.from];
        ++degree[e.to];
      }
      auto it = std::find_if(edges_.begin(), edges_.end(), [&](const NaiveEdge& e) {
        return (e.from != 0 && degree[e.from] == 1) || (e.to != 0 && degree[e.to] == 1);
      });
      if (it == edges_.end()) {
        return;
      }
      edges_.erase(it);
    }
  }

  InverseAutomaton finish() const {
    std::vector<State> renumber(next_state_, kNoState);
    State count = 1;
    renumber[0] = 0;
    for (const NaiveEdge& e : edges_) {
      for (State s : {e.from, e.to}) {
        if (renumber[s] == kNoState) {
          renumber[s] = count++;
        }
      }
    }
    std::vector<Edge> out;
    for (const NaiveEdge& e : edges_) {
      out.push_back({renumber[e.from], Letter(e.letter), renumber[e.to]});
    }
    return InverseAutomaton(alphabet_, count, 0, out);
  }

  Alphabet alphabet_;
  State next_state_ = 1;
  std::set<NaiveEdge> edges_;
};

inline InverseAutomaton naive_stallings_graph(std::span<const Word> gens, Alphabet alphabet,
                                              std::optional<std::uint64_t> seed = std::nullopt) {
  NaiveFolder f(alphabet);
  for (const Word& g : gens) {
    f.add_loop(g);
  }
  return f.reduce_with(seed);
}

}  // namespace stallings::testing

#endif  // STALLINGS_TESTS_NAIVE_FOLDER_HPP_
