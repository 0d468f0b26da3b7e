#include "legfront/front.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace legfront {

// === text form ===============================================================

FrontWord parse_front(const std::string& text) {
  FrontWord w;
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    EventKind kind;
    switch (c) {
      case 'L': kind = EventKind::LeftCusp; break;
      case 'R': kind = EventKind::RightCusp; break;
      case 'X': kind = EventKind::Crossing; break;
      default:
        throw FrontError(std::string("unexpected character '") + c + "'", i);
    }
    size_t start = i++;
    if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw FrontError("event letter must be followed by a position", start);
    if (text[i] == '0')
      throw FrontError("positions are 1-based; leading zero not allowed", i);
    long val = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      val = val * 10 + (text[i] - '0');
      if (val > 1 << 20)
        throw FrontError("position out of range", start);
      ++i;
    }
    w.events.push_back(Event{kind, static_cast<int>(val)});
  }
  return w;
}

std::string event_token(const Event& e) {
  char letter = e.kind == EventKind::LeftCusp    ? 'L'
                : e.kind == EventKind::RightCusp ? 'R'
                                                 : 'X';
  return letter + std::to_string(e.pos);
}

std::string serialize_front(const FrontWord& w) {
  std::string out;
  for (size_t i = 0; i < w.events.size(); ++i) {
    if (i) out += ' ';
    out += event_token(w.events[i]);
  }
  return out;
}

// === validation ==============================================================

namespace {

// Walks the strand count, reporting the first illegality at each event.
void scan_positions(const FrontWord& w, ValidationReport* report) {
  int n = 0;
  for (size_t i = 0; i < w.events.size(); ++i) {
    const Event& e = w.events[i];
    switch (e.kind) {
      case EventKind::LeftCusp:
        if (e.pos < 1 || e.pos > n + 1) {
          if (report)
            report->violations.push_back(
                {i, "left cusp position " + std::to_string(e.pos) +
                        " outside 1.." + std::to_string(n + 1)});
        }
        n += 2;
        break;
      case EventKind::RightCusp:
      case EventKind::Crossing:
        if (e.pos < 1 || e.pos > n - 1) {
          if (report)
            report->violations.push_back(
                {i, std::string(e.kind == EventKind::RightCusp ? "right cusp"
                                                               : "crossing") +
                        " position " + std::to_string(e.pos) + " outside 1.." +
                        std::to_string(n - 1)});
          // Recovery: keep the count sane so later events report usefully.
          if (n < 2) n = 2;
        }
        if (e.kind == EventKind::RightCusp) n -= 2;
        break;
    }
    if (n < 0) n = 0;
  }
  if (n != 0 && report)
    report->violations.push_back(
        {kWholeWord, "front is not closed: " + std::to_string(n) +
                         " strands remain at the right end"});
}

bool positions_ok(const FrontWord& w) {
  int n = 0;
  for (const Event& e : w.events) {
    switch (e.kind) {
      case EventKind::LeftCusp:
        if (e.pos < 1 || e.pos > n + 1) return false;
        n += 2;
        break;
      case EventKind::RightCusp:
        if (e.pos < 1 || e.pos > n - 1) return false;
        n -= 2;
        break;
      case EventKind::Crossing:
        if (e.pos < 1 || e.pos > n - 1) return false;
        break;
    }
  }
  return n == 0;
}

}  // namespace

bool structurally_valid(const FrontWord& w) {
  return !w.events.empty() && positions_ok(w);
}

ValidationReport validate_front(const FrontWord& w) {
  ValidationReport report;
  if (w.events.empty()) {
    report.violations.push_back({kWholeWord, "empty front"});
    return report;
  }
  scan_positions(w, &report);
  if (!report.ok()) return report;
  FrontGeometry g = compute_geometry(w);
  if (g.num_components != 1)
    report.violations.push_back(
        {kWholeWord, "front has " + std::to_string(g.num_components) +
                         " components; a knot front must have exactly one"});
  return report;
}

// === geometry ================================================================

FrontGeometry compute_geometry(const FrontWord& w) {
  if (!structurally_valid(w))
    throw FrontError("front word is not structurally valid", kWholeWord);

  FrontGeometry g;
  g.at_event.resize(w.events.size());
  std::vector<int> cur;  // active segment ids, top first
  g.slices.push_back(cur);

  auto new_segment = [&]() {
    int id = g.num_segments++;
    g.left_link.push_back({});
    g.right_link.push_back({});
    return id;
  };

  for (size_t i = 0; i < w.events.size(); ++i) {
    const Event& e = w.events[i];
    int p = e.pos - 1;  // index into cur
    EventSegments& es = g.at_event[i];
    switch (e.kind) {
      case EventKind::LeftCusp: {
        int a = new_segment();
        int b = new_segment();
        es.a = a;
        es.b = b;
        g.left_link[a] = {b, Side::Left};
        g.left_link[b] = {a, Side::Left};
        cur.insert(cur.begin() + p, {a, b});
        break;
      }
      case EventKind::RightCusp: {
        int a = cur[p], b = cur[p + 1];
        es.a = a;
        es.b = b;
        g.right_link[a] = {b, Side::Right};
        g.right_link[b] = {a, Side::Right};
        cur.erase(cur.begin() + p, cur.begin() + p + 2);
        break;
      }
      case EventKind::Crossing: {
        int a = cur[p], b = cur[p + 1];
        int c = new_segment();
        int d = new_segment();
        es = {a, b, c, d};
        // Upper-in continues as lower-out and vice versa.
        g.right_link[a] = {d, Side::Left};
        g.left_link[d] = {a, Side::Right};
        g.right_link[b] = {c, Side::Left};
        g.left_link[c] = {b, Side::Right};
        cur[p] = c;
        cur[p + 1] = d;
        break;
      }
    }
    g.slices.push_back(cur);
  }

  // Components: cycles of the end-link graph.
  g.component_of.assign(g.num_segments, -1);
  for (int s = 0; s < g.num_segments; ++s) {
    if (g.component_of[s] != -1) continue;
    int comp = g.num_components++;
    int seg = s;
    Side entered = Side::Left;
    do {
      g.component_of[seg] = comp;
      Side exit = entered == Side::Left ? Side::Right : Side::Left;
      const EndRef& link =
          exit == Side::Left ? g.left_link[seg] : g.right_link[seg];
      seg = link.seg;
      entered = link.side;
    } while (seg != s || entered != Side::Left);
  }
  return g;
}

int max_width(const FrontWord& w) {
  int n = 0, best = 0;
  for (const Event& e : w.events) {
    if (e.kind == EventKind::LeftCusp) n += 2;
    if (e.kind == EventKind::RightCusp) n -= 2;
    best = std::max(best, n);
  }
  return best;
}

// === orientation =============================================================

namespace {

// Directions determined by walking each component cycle once: entering a
// segment through its left end means traversing it rightward.
std::vector<Direction> walk_directions(const FrontGeometry& g) {
  std::vector<Direction> dir(g.num_segments, Direction::Rightward);
  std::vector<char> seen(g.num_segments, 0);
  for (int s = 0; s < g.num_segments; ++s) {
    if (seen[s]) continue;
    int seg = s;
    Side entered = Side::Left;
    do {
      seen[seg] = 1;
      dir[seg] =
          entered == Side::Left ? Direction::Rightward : Direction::Leftward;
      Side exit = entered == Side::Left ? Side::Right : Side::Left;
      const EndRef& link =
          exit == Side::Left ? g.left_link[seg] : g.right_link[seg];
      seg = link.seg;
      entered = link.side;
    } while (seg != s || entered != Side::Left);
  }
  return dir;
}

}  // namespace

OrientedFront orient_front(const FrontWord& w) {
  FrontGeometry g = compute_geometry(w);
  return OrientedFront{w, walk_directions(g)};
}

OrientedFront reverse_orientation(OrientedFront f) {
  for (Direction& d : f.seg_dir) d = flip(d);
  return f;
}

// === classical invariants ====================================================

ClassicalInvariants invariants_of(const OrientedFront& f,
                                  const FrontGeometry& g) {
  ClassicalInvariants inv;
  inv.components = g.num_components;
  for (size_t i = 0; i < f.word.events.size(); ++i) {
    const Event& e = f.word.events[i];
    const EventSegments& es = g.at_event[i];
    switch (e.kind) {
      case EventKind::LeftCusp:
        // Down cusp when the traversal runs upper -> lower, i.e. the upper
        // child points back into the cusp.
        if (f.seg_dir[es.a] == Direction::Leftward)
          ++inv.down_cusps;
        else
          ++inv.up_cusps;
        break;
      case EventKind::RightCusp:
        if (f.seg_dir[es.a] == Direction::Rightward)
          ++inv.down_cusps;
        else
          ++inv.up_cusps;
        break;
      case EventKind::Crossing:
        ++inv.crossings;
        inv.writhe += f.seg_dir[es.a] == f.seg_dir[es.b] ? 1 : -1;
        break;
    }
  }
  inv.tb = inv.writhe - inv.cusps() / 2;
  inv.rot = (inv.down_cusps - inv.up_cusps) / 2;
  return inv;
}

ClassicalInvariants invariants_of(const OrientedFront& f) {
  return invariants_of(f, compute_geometry(f.word));
}

ClassicalInvariants classical_invariants(const FrontWord& w) {
  FrontGeometry g = compute_geometry(w);
  OrientedFront f{w, walk_directions(g)};
  return invariants_of(f, g);
}

// === diagram symmetries ======================================================

FrontWord mirror_x(const FrontWord& w) {
  FrontWord out;
  out.events.reserve(w.events.size());
  for (auto it = w.events.rbegin(); it != w.events.rend(); ++it) {
    Event e = *it;
    if (e.kind == EventKind::LeftCusp)
      e.kind = EventKind::RightCusp;
    else if (e.kind == EventKind::RightCusp)
      e.kind = EventKind::LeftCusp;
    out.events.push_back(e);
  }
  return out;
}

// === connected sum ===========================================================

namespace {

// f must end with its final right cusp at position 1 on two strands and g
// start with a left cusp; both hold for every closed front. The splice drops
// that cusp pair and concatenates.
FrontWord splice(const FrontWord& f, const FrontWord& g) {
  FrontWord out;
  out.events.assign(f.events.begin(), f.events.end() - 1);
  out.events.insert(out.events.end(), g.events.begin() + 1, g.events.end());
  return out;
}

}  // namespace

namespace {

// Deterministic candidate order: plain, swapped, then reflected variants.
std::vector<FrontWord> splice_candidates(const FrontWord& f,
                                         const FrontWord& g) {
  FrontWord fm = mirror_x(f);
  FrontWord gm = mirror_x(g);
  const FrontWord* pairs[][2] = {{&f, &g},   {&g, &f},   {&fm, &g},
                                 {&gm, &f},  {&f, &gm},  {&g, &fm},
                                 {&fm, &gm}, {&gm, &fm}};
  std::vector<FrontWord> out;
  for (auto& pr : pairs) out.push_back(splice(*pr[0], *pr[1]));
  return out;
}

}  // namespace

FrontWord connect_sum(const FrontWord& f, const FrontWord& g) {
  if (!structurally_valid(f) || !structurally_valid(g))
    throw FrontError("connect_sum requires structurally valid fronts",
                     kWholeWord);
  ClassicalInvariants fi = classical_invariants(f);
  ClassicalInvariants gi = classical_invariants(g);
  long long want_tb = fi.tb + gi.tb + 1;  // splice removes one cusp pair
  long long want_rot = fi.rot + gi.rot;

  for (const FrontWord& cand : splice_candidates(f, g)) {
    ClassicalInvariants ci = classical_invariants(cand);
    if (ci.tb == want_tb && ci.rot == want_rot && ci.components == 1)
      return cand;
  }
  throw FrontError("connect_sum: no splice variant matches the orientation",
                   kWholeWord);
}

OrientedFront connect_sum(const OrientedFront& f, const OrientedFront& g) {
  if (!structurally_valid(f.word) || !structurally_valid(g.word))
    throw FrontError("connect_sum requires structurally valid fronts",
                     kWholeWord);
  ClassicalInvariants fi = invariants_of(f);
  ClassicalInvariants gi = invariants_of(g);
  long long want_tb = fi.tb + gi.tb + 1;
  long long want_rot = fi.rot + gi.rot;

  for (const FrontWord& cand : splice_candidates(f.word, g.word)) {
    OrientedFront of = orient_front(cand);
    ClassicalInvariants ci = invariants_of(of);
    if (ci.tb != want_tb || ci.components != 1) continue;
    if (ci.rot == want_rot) return of;
    if (-ci.rot == want_rot) return reverse_orientation(of);
  }
  throw FrontError("connect_sum: no splice variant matches the orientation",
                   kWholeWord);
}

}  // namespace legfront
