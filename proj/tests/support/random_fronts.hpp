#pragma once

// Seeded random front words for property testing.

#include <random>
#include <vector>

#include "legfront/front.hpp"
#include "legfront/moves.hpp"

namespace legfront::testing {

// A uniformly-ish random structurally valid front word: events are drawn
// from the legal menu at each prefix, with death events forced once the
// remaining budget is only enough to close every open strand.
inline FrontWord random_front(std::mt19937& rng, size_t max_events = 16,
                              int max_width = 8) {
  FrontWord w;
  int n = 0;
  while (true) {
    const size_t len = w.events.size();
    const bool must_close = len + static_cast<size_t>(n) / 2 >= max_events;
    std::vector<Event> menu;
    if (!must_close && n + 2 <= max_width)
      for (int i = 1; i <= n + 1; ++i)
        menu.push_back({EventKind::LeftCusp, i});
    if (!must_close)
      for (int i = 1; i <= n - 1; ++i)
        menu.push_back({EventKind::Crossing, i});
    for (int i = 1; i <= n - 1; ++i)
      menu.push_back({EventKind::RightCusp, i});

    std::uniform_int_distribution<size_t> pick(0, menu.size() - 1);
    const Event e = menu[pick(rng)];
    w.events.push_back(e);
    n += e.kind == EventKind::LeftCusp ? 2
         : e.kind == EventKind::RightCusp ? -2
                                          : 0;
    if (n == 0) return w;
  }
}

// Random single-component front (rejection sampling).
inline FrontWord random_knot_front(std::mt19937& rng, size_t max_events = 16,
                                   int max_width = 8) {
  for (int tries = 0; tries < 200; ++tries) {
    FrontWord w = random_front(rng, max_events, max_width);
    if (compute_geometry(w).num_components == 1) return w;
  }
  return parse_front("L1 R1");
}

// Applies `steps` random legal adjacent reorderings: a random word in the
// same commutation class.
inline FrontWord random_shuffle(std::mt19937& rng, FrontWord w, int steps) {
  if (w.events.size() < 2) return w;
  std::uniform_int_distribution<size_t> at(0, w.events.size() - 2);
  for (int s = 0; s < steps; ++s) {
    const size_t k = at(rng);
    auto alts = swap_adjacent(w.events[k], w.events[k + 1]);
    if (alts.empty()) continue;
    std::uniform_int_distribution<size_t> pick(0, alts.size() - 1);
    const auto& [b2, a2] = alts[pick(rng)];
    w.events[k] = b2;
    w.events[k + 1] = a2;
  }
  return w;
}

}  // namespace legfront::testing
