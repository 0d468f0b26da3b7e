// Internal machinery shared by the move and isotopy modules: a tagged plane
// combinatorial map built from a front word, a canonical key that identifies
// fronts up to commutation of distant events, and a rescheduler that emits
// the lexicographically least word presenting a given map.
//
// None of this is part of the public interface; include it from src/ only.
#pragma once

#include <legfront/front.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <climits>
#include <cstdint>
#include <cstring>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace legfront::detail {

// === event / word order ======================================================

inline bool event_lt(const Event& a, const Event& b) {
  if (a.kind != b.kind)
    return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  return a.pos < b.pos;
}

inline bool word_lt(const std::vector<Event>& a, const std::vector<Event>& b) {
  const size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return event_lt(a[i], b[i]);
  return a.size() < b.size();
}

// === plane map ===============================================================
// Vertices are events, edges are segments. Dart ids: 2*seg is the west
// (birth) end of a segment, 2*seg+1 the east (death) end. Compass tags give
// the direction a dart points away from its vertex: 0 = NE, 1 = NW, 2 = SW,
// 3 = SE. Faces come from the sweep; the unbounded face is marked.

struct PlaneMap {
  int V = 0, E = 0, F = 0;
  std::vector<EventKind> vkind;    // by event
  std::vector<EventSegments> inc;  // by event
  std::vector<uint8_t> dtag;       // by dart
  std::vector<int> dvert;          // by dart
  std::vector<int> sig, sigi;      // by dart: CCW next / previous at vertex
  std::vector<int> north, south;   // by segment: face id above / below
  int outer = -1;
  std::vector<char> upward;        // by event (left cusps): upper child is
                                   // rightward under the canonical orientation
  std::vector<int> comp;           // by event: component id
  std::vector<int> death_partner;  // by segment: other input of its death
  // Wire chains: maximal runs of segments occupying one frontier row for
  // their whole life (a crossing's outputs continue the rows of its inputs).
  // Two chains that share an event have a fixed relative vertical order
  // whenever both are alive.
  std::vector<int> chain;  // by segment
  int num_chains = 0;
  std::vector<int8_t> req;     // num_chains^2: +1 = row(i) above row(j)
  std::vector<int> producer;   // by segment: event that creates it
  std::vector<int> death_ev;   // by segment: event that consumes it
  std::vector<uint64_t> dep;   // by event: events every schedule fires first
  long long rot = 0;           // rotation number of the source word
  int max_left_cusps = 0;      // bound on concurrent frontier width / 2
};

inline int dart_mate(int d) { return d ^ 1; }

namespace planemap_impl {
struct UnionFind {
  std::vector<int> p;
  int make() {
    p.push_back(static_cast<int>(p.size()));
    return static_cast<int>(p.size()) - 1;
  }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) p[b] = a;
  }
};
}  // namespace planemap_impl

// Builds the tagged plane map of a structurally valid front word. Throws
// FrontError (via compute_geometry) when the word is not structurally valid
// or is too large for the fixed-width scheduler state.
inline PlaneMap build_plane_map(const FrontWord& w) {
  FrontGeometry g = compute_geometry(w);
  PlaneMap m;
  m.V = static_cast<int>(w.events.size());
  m.E = g.num_segments;
  if (m.V > 64 || m.E > 254)
    throw FrontError("front too large to canonicalize (over 64 events)",
                     kWholeWord);
  m.vkind.resize(m.V);
  m.inc = g.at_event;
  const int D = 2 * m.E;
  m.dtag.assign(D, 0);
  m.dvert.assign(D, -1);
  m.sig.assign(D, -1);
  m.sigi.assign(D, -1);

  // Sweep left to right maintaining the ordered list of regions between
  // adjacent strands; cusps and crossings pin down each dart's CCW rotation
  // and each segment's bounding regions, merged afterwards into faces.
  planemap_impl::UnionFind uf;
  std::vector<int> nreg(m.E, -1), sreg(m.E, -1);
  const int outer0 = uf.make();
  std::vector<int> gaps{outer0};
  for (int t = 0; t < m.V; ++t) {
    const Event& e = w.events[t];
    const EventSegments& es = g.at_event[t];
    const int gp = e.pos - 1;  // region just above the event's upper strand
    m.vkind[t] = e.kind;
    switch (e.kind) {
      case EventKind::LeftCusp: {
        const int F = gaps[gp];
        const int M = uf.make();
        nreg[es.a] = F;
        sreg[es.a] = M;
        nreg[es.b] = M;
        sreg[es.b] = F;
        gaps.insert(gaps.begin() + gp + 1, {M, F});
        const int du = 2 * es.a, dd = 2 * es.b;
        m.dvert[du] = m.dvert[dd] = t;
        m.dtag[du] = 0;
        m.dtag[dd] = 3;
        m.sig[du] = dd;
        m.sig[dd] = du;
        m.sigi[du] = dd;
        m.sigi[dd] = du;
        ++m.max_left_cusps;
        break;
      }
      case EventKind::RightCusp: {
        if (uf.find(gaps[gp + 1]) != uf.find(sreg[es.a]) ||
            uf.find(gaps[gp + 1]) != uf.find(nreg[es.b]))
          throw std::logic_error("plane map sweep: cusp wedge face mismatch");
        uf.unite(gaps[gp], gaps[gp + 2]);
        gaps.erase(gaps.begin() + gp + 1, gaps.begin() + gp + 3);
        const int da = 2 * es.a + 1, db = 2 * es.b + 1;
        m.dvert[da] = m.dvert[db] = t;
        m.dtag[da] = 1;
        m.dtag[db] = 2;
        m.sig[da] = db;
        m.sig[db] = da;
        m.sigi[da] = db;
        m.sigi[db] = da;
        break;
      }
      case EventKind::Crossing: {
        if (uf.find(gaps[gp + 1]) != uf.find(sreg[es.a]) ||
            uf.find(gaps[gp + 1]) != uf.find(nreg[es.b]))
          throw std::logic_error("plane map sweep: crossing wedge mismatch");
        const int M = uf.make();
        nreg[es.c] = gaps[gp];
        sreg[es.c] = M;
        nreg[es.d] = M;
        sreg[es.d] = gaps[gp + 2];
        gaps[gp + 1] = M;
        const int dc = 2 * es.c, da = 2 * es.a + 1, db = 2 * es.b + 1,
                  dd = 2 * es.d;
        m.dvert[dc] = m.dvert[da] = m.dvert[db] = m.dvert[dd] = t;
        m.dtag[dc] = 0;
        m.dtag[da] = 1;
        m.dtag[db] = 2;
        m.dtag[dd] = 3;
        m.sig[dc] = da;
        m.sig[da] = db;
        m.sig[db] = dd;
        m.sig[dd] = dc;
        m.sigi[da] = dc;
        m.sigi[db] = da;
        m.sigi[dd] = db;
        m.sigi[dc] = dd;
        break;
      }
    }
  }
  if (gaps.size() != 1 || uf.find(gaps[0]) != uf.find(outer0))
    throw std::logic_error("plane map sweep did not close the outer region");

  std::unordered_map<int, int> fid;
  auto resolve = [&](int r) {
    const int x = uf.find(r);
    auto it = fid.find(x);
    if (it == fid.end()) it = fid.emplace(x, static_cast<int>(fid.size())).first;
    return it->second;
  };
  m.outer = resolve(outer0);
  m.north.resize(m.E);
  m.south.resize(m.E);
  for (int s = 0; s < m.E; ++s) {
    m.north[s] = resolve(nreg[s]);
    m.south[s] = resolve(sreg[s]);
  }
  m.F = static_cast<int>(fid.size());
  if (m.V - m.E + m.F != 1 + g.num_components)
    throw std::logic_error("plane map violates the Euler relation");

  OrientedFront of = orient_front(w);
  m.upward.assign(m.V, 0);
  m.comp.assign(m.V, 0);
  m.death_partner.assign(m.E, -1);
  for (int t = 0; t < m.V; ++t) {
    m.comp[t] = g.component_of[g.at_event[t].a];
    if (m.vkind[t] == EventKind::LeftCusp)
      m.upward[t] = of.seg_dir[g.at_event[t].a] == Direction::Rightward;
    else {
      m.death_partner[g.at_event[t].a] = g.at_event[t].b;
      m.death_partner[g.at_event[t].b] = g.at_event[t].a;
    }
  }
  m.rot = invariants_of(of, g).rot;

  m.chain.assign(m.E, -1);
  for (int t = 0; t < m.V; ++t) {
    const EventSegments& es = m.inc[t];
    switch (m.vkind[t]) {
      case EventKind::LeftCusp:
        m.chain[es.a] = m.num_chains++;
        m.chain[es.b] = m.num_chains++;
        break;
      case EventKind::Crossing:
        m.chain[es.c] = m.chain[es.a];
        m.chain[es.d] = m.chain[es.b];
        break;
      case EventKind::RightCusp:
        break;
    }
  }
  m.req.assign(static_cast<size_t>(m.num_chains) * m.num_chains, 0);
  for (int t = 0; t < m.V; ++t) {
    if (m.vkind[t] == EventKind::LeftCusp) continue;
    const int i = m.chain[m.inc[t].a], j = m.chain[m.inc[t].b];
    int8_t& ab = m.req[static_cast<size_t>(i) * m.num_chains + j];
    int8_t& ba = m.req[static_cast<size_t>(j) * m.num_chains + i];
    if (ab < 0 || ba > 0)
      throw std::logic_error("plane map: conflicting wire-chain order");
    ab = 1;
    ba = -1;
  }

  m.producer.assign(m.E, -1);
  m.death_ev.assign(m.E, -1);
  m.dep.assign(m.V, 0);
  for (int t = 0; t < m.V; ++t) {
    const EventSegments& es = m.inc[t];
    if (m.vkind[t] != EventKind::RightCusp) {
      const bool cusp = m.vkind[t] == EventKind::LeftCusp;
      m.producer[cusp ? es.a : es.c] = t;
      m.producer[cusp ? es.b : es.d] = t;
    }
    if (m.vkind[t] != EventKind::LeftCusp) {
      m.death_ev[es.a] = t;
      m.death_ev[es.b] = t;
      for (int s : {es.a, es.b}) {
        const int p = m.producer[s];
        m.dep[t] |= m.dep[p] | (1ull << p);
      }
    }
  }
  return m;
}

// === canonical key ===========================================================

// Lexicographically least breadth-first encoding of the map over all start
// darts: a complete invariant of the tagged plane map, constant across all
// words presenting it. When best_label is given it receives the dart
// relabelling of the winning traversal.
inline std::vector<int> plane_map_key(const PlaneMap& m,
                                      std::vector<int>* best_label = nullptr) {
  const int D = 2 * m.E;
  std::vector<int> best;
  std::vector<int> label(D);
  std::vector<int> order;
  order.reserve(D);
  for (int s0 = 0; s0 < D; ++s0) {
    std::fill(label.begin(), label.end(), -1);
    order.clear();
    std::vector<int> enc;
    enc.reserve(7 * D + 1);
    enc.push_back(D);
    int next = 0;
    label[s0] = next++;
    order.push_back(s0);
    for (size_t qi = 0; qi < order.size(); ++qi) {
      const int x = order[qi];
      const int s = x >> 1;
      enc.push_back(static_cast<int>(m.vkind[m.dvert[x]]));
      enc.push_back(m.dtag[x]);
      const int lf = (x & 1) ? m.south[s] : m.north[s];
      const int rf = (x & 1) ? m.north[s] : m.south[s];
      enc.push_back(lf == m.outer ? 1 : 0);
      enc.push_back(rf == m.outer ? 1 : 0);
      for (int nb : {dart_mate(x), m.sig[x], m.sigi[x]}) {
        if (label[nb] < 0) {
          label[nb] = next++;
          order.push_back(nb);
        }
        enc.push_back(label[nb]);
      }
    }
    if (best.empty() || enc < best) {
      best = std::move(enc);
      if (best_label) *best_label = label;
    }
  }
  return best;
}

// Vertices incident to each face through a wedge corner: for every face id,
// the events whose cusp wedge or crossing wedge opens into that face (with
// multiplicity, in event order). Bounded faces of a front diagram are disks,
// so a face's corner count equals its edge count.
inline std::vector<std::vector<int>> face_corner_vertices(const PlaneMap& m) {
  std::vector<std::vector<int>> by_face(m.F);
  for (int t = 0; t < m.V; ++t) {
    const EventSegments& es = m.inc[t];
    switch (m.vkind[t]) {
      case EventKind::LeftCusp:
        by_face[m.south[es.a]].push_back(t);  // east wedge, between children
        by_face[m.north[es.a]].push_back(t);  // west wedge
        break;
      case EventKind::RightCusp:
        by_face[m.south[es.a]].push_back(t);  // west wedge, between the dying
        by_face[m.north[es.a]].push_back(t);  // east wedge
        break;
      case EventKind::Crossing:
        by_face[m.north[es.a]].push_back(t);  // north wedge
        by_face[m.south[es.b]].push_back(t);  // south wedge
        by_face[m.south[es.a]].push_back(t);  // west wedge, between inputs
        by_face[m.south[es.c]].push_back(t);  // east wedge, between outputs
        break;
    }
  }
  return by_face;
}

// Key entries are small (darts, tags, labels < 2E <= 508), so two bytes each
// give a compact string usable directly in hash containers.
inline std::string pack_key(const std::vector<int>& key) {
  std::string out;
  out.reserve(2 * key.size());
  for (int v : key) {
    out.push_back(static_cast<char>(v & 0xFF));
    out.push_back(static_cast<char>((v >> 8) & 0xFF));
  }
  return out;
}

// Identity of a front up to commutation of distant events, as a hashable
// string. Two structurally valid fronts get equal keys exactly when their
// words present the same tagged plane map.
inline std::string class_key(const FrontWord& w) {
  return pack_key(plane_map_key(build_plane_map(w)));
}

// === lexicographically least rescheduling ====================================

// Scheduler state packed for memoization: fired-event mask plus the frontier
// row sequence (segment ids top to bottom, 0xFF padded).
struct SchedKey {
  uint64_t fired = 0;
  std::array<uint8_t, 40> rows{};
  bool operator==(const SchedKey&) const = default;
};

struct SchedKeyHash {
  size_t operator()(const SchedKey& k) const {
    uint64_t h = k.fired * 0x9e3779b97f4a7c15ull;
    uint64_t part;
    for (int i = 0; i < 5; ++i) {
      std::memcpy(&part, k.rows.data() + 8 * i, 8);
      part ^= h;
      part *= 0xff51afd7ed558ccdull;
      part ^= part >> 33;
      h = part;
    }
    return static_cast<size_t>(h);
  }
};

struct SchedBudgetExceeded {};

// Emits the least word presenting a plane map, taken over every valid
// left-to-right schedule of its events — equivalently, over the whole
// commutation class of any word presenting it. For maps whose rotation
// number is nonzero, schedules are restricted to those whose first left
// cusp on each component is upward under the canonical orientation; this
// pins the orientation seed so that mirror-image presentations with
// opposite rotation number cannot collapse to one word.
//
// Exact minimization explores schedule prefixes with memoized completions.
// If the state budget runs out, a guided pass takes the first completion in
// canonical candidate order instead, reusing everything the exact pass
// proved dead. Both passes are functions of the map alone, so every word of
// a commutation class canonicalizes identically either way.
struct Scheduler {
  const PlaneMap& m;
  std::vector<int> vrank;  // canonical vertex order derived from the map key
  // state -> packed best next firing (vertex*64 + at); kDead = unsolvable
  std::unordered_map<SchedKey, uint16_t, SchedKeyHash> memo;
  long nodes = 0;
  long budget = kExactBudget;
  // -1: any seed; 0/1: the first cusp of each component must open upward /
  // downward, pinning the emitted word to one orientation class of the map.
  int8_t seed_req = -1;
  static constexpr long kExactBudget = 1L << 16;
  static constexpr long kTotalBudget = 1L << 21;
  static constexpr uint16_t kDead = 0xFFFF;

  explicit Scheduler(const PlaneMap& mm) : m(mm) {
    if (2 * m.max_left_cusps > 40)
      throw FrontError("front too large to canonicalize (over 20 left cusps)",
                       kWholeWord);
    std::vector<int> lbl;
    plane_map_key(m, &lbl);
    vrank.assign(m.V, INT_MAX);
    for (int d = 0; d < 2 * m.E; ++d)
      vrank[m.dvert[d]] = std::min(vrank[m.dvert[d]], lbl[d]);
    memo.reserve(1 << 14);
  }

  SchedKey pack(uint64_t fired, const std::vector<int>& fr) const {
    SchedKey k;
    k.fired = fired;
    k.rows.fill(0xFF);
    for (size_t i = 0; i < fr.size(); ++i)
      k.rows[i] = static_cast<uint8_t>(fr[i]);
    return k;
  }

  int gap_face(const std::vector<int>& fr, int k) const {
    if (fr.empty()) return m.outer;
    if (k == 0) return m.north[fr[0]];
    return m.south[fr[static_cast<size_t>(k) - 1]];
  }

  struct Cand {
    Event ev;
    int vertex;
    int at;  // gap index for a left cusp, row index otherwise
  };

  // Every immediately fireable placement, sorted by emitted letter.
  std::vector<Cand> all_cands(uint64_t fired, const std::vector<int>& fr,
                              uint64_t comp_started) const {
    std::vector<Cand> out;
    const int W = static_cast<int>(fr.size());
    for (int t = 0; t < m.V; ++t) {
      if (fired >> t & 1) continue;
      const EventSegments& es = m.inc[t];
      switch (m.vkind[t]) {
        case EventKind::LeftCusp: {
          if (seed_req >= 0 && !(comp_started >> m.comp[t] & 1) &&
              m.upward[t] != (seed_req == 0))
            break;
          const int wf = m.north[es.a];
          for (int k = 0; k <= W; ++k)
            if (gap_face(fr, k) == wf)
              out.push_back({{EventKind::LeftCusp, k + 1}, t, k});
          break;
        }
        default: {
          for (int r = 0; r + 1 < W; ++r)
            if (fr[r] == es.a && fr[r + 1] == es.b) {
              out.push_back({{m.vkind[t], r + 1}, t, r});
              break;
            }
          break;
        }
      }
    }
    std::sort(out.begin(), out.end(), [this](const Cand& a, const Cand& b) {
      if (!(a.ev == b.ev)) return event_lt(a.ev, b.ev);
      if (a.vertex != b.vertex) return vrank[a.vertex] < vrank[b.vertex];
      return a.at < b.at;
    });
    return out;
  }

  void fire(uint64_t& fired, std::vector<int>& fr, uint64_t& comp_started,
            const Cand& c) const {
    const EventSegments& es = m.inc[c.vertex];
    fired |= 1ull << c.vertex;
    comp_started |= 1ull << m.comp[c.vertex];
    switch (m.vkind[c.vertex]) {
      case EventKind::LeftCusp:
        fr.insert(fr.begin() + c.at, {es.a, es.b});
        break;
      case EventKind::RightCusp:
        fr.erase(fr.begin() + c.at, fr.begin() + c.at + 2);
        break;
      case EventKind::Crossing:
        fr[c.at] = es.c;
        fr[static_cast<size_t>(c.at) + 1] = es.d;
        break;
    }
  }

  // Unfixable arrangements. Once a pending event's two input segments are
  // both live they are pinned: neither may cross or die elsewhere, and the
  // wires strictly between them can leave only by dying in pairs against
  // partners inside the same interval. Hence a state is dead when
  //   * two co-live chains sit against the order some shared event demands,
  //   * a pending event's inputs are vertically inverted,
  //   * an odd number of wires sits strictly between them,
  //   * a trapped wire's death depends on the pinning event itself, or its
  //     death partner is live strictly outside the interval.
  bool infeasible(uint64_t fired, const std::vector<int>& fr) const {
    const int W = static_cast<int>(fr.size());
    for (int r1 = 0; r1 < W; ++r1)
      for (int r2 = r1 + 1; r2 < W; ++r2)
        if (m.req[static_cast<size_t>(m.chain[fr[r1]]) * m.num_chains +
                  m.chain[fr[r2]]] < 0)
          return true;
    std::array<int, 256> row;
    row.fill(-1);
    for (int r = 0; r < W; ++r) row[fr[r]] = r;
    for (int t = 0; t < m.V; ++t) {
      if (fired >> t & 1) continue;
      if (m.vkind[t] == EventKind::LeftCusp) continue;
      const EventSegments& es = m.inc[t];
      const int ra = row[es.a], rb = row[es.b];
      if (ra < 0 || rb < 0) continue;
      if (ra > rb) return true;
      if ((rb - ra - 1) & 1) return true;
      for (int r = ra + 1; r < rb; ++r) {
        const int s = fr[r];
        if (m.dep[m.death_ev[s]] >> t & 1) return true;
        const int pr = row[m.death_partner[s]];
        if (pr >= 0 && (pr < ra || pr > rb)) return true;
      }
    }
    return false;
  }

  // Exact lexicographic minimization. Solved states memoize their best next
  // firing; full words come from replaying those choices.
  bool solve(uint64_t fired, const std::vector<int>& fr, uint64_t comp_started,
             int remaining) {
    if (remaining == 0) return true;
    const SchedKey key = pack(fired, fr);
    if (auto it = memo.find(key); it != memo.end()) return it->second != kDead;
    if (++nodes > budget) throw SchedBudgetExceeded{};
    auto cands = all_cands(fired, fr, comp_started);
    std::vector<Event> bestw, candw;
    uint16_t bestv = kDead;
    for (const Cand& c : cands) {
      // Candidates are letter-sorted: once one completes, later letters lose.
      if (bestv != kDead && event_lt(bestw[0], c.ev)) break;
      uint64_t f2 = fired, cs2 = comp_started;
      std::vector<int> fr2 = fr;
      fire(f2, fr2, cs2, c);
      if (infeasible(f2, fr2)) continue;
      if (!solve(f2, fr2, cs2, remaining - 1)) continue;
      candw.clear();
      candw.push_back(c.ev);
      replay(f2, fr2, cs2, candw);
      if (bestv == kDead || word_lt(candw, bestw)) {
        bestw.swap(candw);
        bestv = static_cast<uint16_t>(c.vertex * 64 + c.at);
      }
    }
    memo.emplace(key, bestv);
    return bestv != kDead;
  }

  // Appends the memoized completion of a solved state.
  void replay(uint64_t fired, std::vector<int> fr, uint64_t comp_started,
              std::vector<Event>& out) const {
    while (std::popcount(fired) < m.V) {
      const auto it = memo.find(pack(fired, fr));
      if (it == memo.end() || it->second == kDead)
        throw std::logic_error("scheduler replay hit an unsolved state");
      const int vertex = it->second >> 6, at = it->second & 63;
      const Cand c{{m.vkind[vertex], at + 1}, vertex, at};
      out.push_back(c.ev);
      fire(fired, fr, comp_started, c);
    }
  }

  // Fallback when exact minimization exceeds its budget: first completion in
  // canonical candidate order. Still map-determined, hence class-constant.
  bool guided(uint64_t fired, const std::vector<int>& fr, uint64_t comp_started,
              int remaining, std::vector<Event>& out) {
    if (remaining == 0) return true;
    const SchedKey key = pack(fired, fr);
    if (auto it = memo.find(key); it != memo.end()) {
      if (it->second == kDead) return false;
      replay(fired, fr, comp_started, out);  // exact tail already known
      return true;
    }
    if (++nodes > budget) throw SchedBudgetExceeded{};
    auto cands = all_cands(fired, fr, comp_started);
    for (const Cand& c : cands) {
      uint64_t f2 = fired, cs2 = comp_started;
      std::vector<int> fr2 = fr;
      fire(f2, fr2, cs2, c);
      if (infeasible(f2, fr2)) continue;
      out.push_back(c.ev);
      if (guided(f2, fr2, cs2, remaining - 1, out)) return true;
      out.pop_back();
    }
    memo.emplace(key, kDead);
    return false;
  }

  FrontWord run(bool* used_fallback = nullptr) {
    // Rotation-zero maps admit both orientations in one class, so the lexmin
    // ranges over every schedule; otherwise the seed fixes the orientation
    // class the input word was in.
    seed_req = m.rot != 0 ? 0 : -1;
    if (used_fallback) *used_fallback = false;
    std::vector<Event> word;
    try {
      budget = kExactBudget;
      if (!solve(0, {}, 0, m.V))
        throw std::logic_error("scheduler found no valid order");
      replay(0, {}, 0, word);
      return FrontWord{word};
    } catch (const SchedBudgetExceeded&) {
    }
    if (used_fallback) *used_fallback = true;
    budget = kTotalBudget;
    try {
      if (!guided(0, {}, 0, m.V, word))
        throw std::logic_error("scheduler found no valid order");
    } catch (const SchedBudgetExceeded&) {
      throw std::logic_error("scheduler budget exceeded");
    }
    return FrontWord{word};
  }

  // === contiguous-block witness ==============================================
  // A schedule in which the events of `block` fire consecutively, used to
  // apply a rewrite template spanning exactly those events. `order` records
  // which event fired at each word index. Witness words are always pinned to
  // one orientation class: family 0 keeps the map's internal orientation (the
  // source word's own), family 1 emits the mirror-oriented presentation —
  // meaningful only for rotation-zero maps, where both lie in one class.

  struct BlockWitness {
    FrontWord word;
    int block_at = -1;
    std::vector<int> order;
  };

  std::optional<BlockWitness> run_with_block(uint64_t block, int family,
                                             long node_budget = 1L << 15) {
    seed_req = family == 0 ? 0 : 1;
    BlockWitness bw;
    bw.word.events.reserve(m.V);
    bw.order.reserve(m.V);
    wstates_ = 0;
    wbudget_ = node_budget;
    wdead_.clear();
    if (!block_dfs(0, {}, 0, block, bw)) return std::nullopt;
    return bw;
  }

 private:
  long wstates_ = 0, wbudget_ = 0;
  std::unordered_set<SchedKey, SchedKeyHash> wdead_;

  // Fires the remaining block events one after another, then resumes the
  // free search; any interleaving with non-block events fails the branch.
  bool block_run(uint64_t fired, const std::vector<int>& fr,
                 uint64_t comp_started, uint64_t block, uint64_t pending,
                 BlockWitness& bw) {
    if (!pending) return block_dfs(fired, fr, comp_started, block, bw);
    for (const Cand& c : all_cands(fired, fr, comp_started)) {
      if (!(pending >> c.vertex & 1)) continue;
      uint64_t f2 = fired, cs2 = comp_started;
      std::vector<int> fr2 = fr;
      fire(f2, fr2, cs2, c);
      if (infeasible(f2, fr2)) continue;
      bw.word.events.push_back(c.ev);
      bw.order.push_back(c.vertex);
      if (block_run(f2, fr2, cs2, block, pending & ~(1ull << c.vertex), bw))
        return true;
      bw.word.events.pop_back();
      bw.order.pop_back();
    }
    return false;
  }

  bool block_dfs(uint64_t fired, const std::vector<int>& fr,
                 uint64_t comp_started, uint64_t block, BlockWitness& bw) {
    if (std::popcount(fired) == m.V) return true;
    const SchedKey key = pack(fired, fr);
    if (wdead_.count(key)) return false;
    if (++wstates_ > wbudget_) return false;
    const bool block_pending = (fired & block) == 0;
    for (const Cand& c : all_cands(fired, fr, comp_started)) {
      const bool in_block = block >> c.vertex & 1;
      if (in_block && !block_pending) continue;
      if (in_block) {
        const int at = static_cast<int>(bw.word.events.size());
        uint64_t f2 = fired, cs2 = comp_started;
        std::vector<int> fr2 = fr;
        fire(f2, fr2, cs2, c);
        if (infeasible(f2, fr2)) continue;
        bw.word.events.push_back(c.ev);
        bw.order.push_back(c.vertex);
        bw.block_at = at;
        if (block_run(f2, fr2, cs2, block, block & ~(1ull << c.vertex), bw))
          return true;
        bw.word.events.pop_back();
        bw.order.pop_back();
        bw.block_at = -1;
      } else {
        uint64_t f2 = fired, cs2 = comp_started;
        std::vector<int> fr2 = fr;
        fire(f2, fr2, cs2, c);
        if (infeasible(f2, fr2)) continue;
        bw.word.events.push_back(c.ev);
        bw.order.push_back(c.vertex);
        if (block_dfs(f2, fr2, cs2, block, bw)) return true;
        bw.word.events.pop_back();
        bw.order.pop_back();
      }
    }
    wdead_.insert(key);
    return false;
  }
};

struct RescheduleStats {
  long nodes = 0;
  bool fallback = false;
};

// Least word of the commutation class of w (restricted to the orientation
// seed of w when rot != 0). Verifies that the result preserves the classical
// invariants; any violation is an internal error.
inline FrontWord reschedule_lexmin(const FrontWord& w,
                                   RescheduleStats* stats = nullptr) {
  const PlaneMap m = build_plane_map(w);
  Scheduler s(m);
  bool fb = false;
  FrontWord out = s.run(&fb);
  if (stats) {
    stats->nodes = s.nodes;
    stats->fallback = fb;
  }
  const ClassicalInvariants iw = classical_invariants(w);
  const ClassicalInvariants io = classical_invariants(out);
  if (io.tb != iw.tb || io.rot != iw.rot || io.writhe != iw.writhe ||
      io.components != iw.components)
    throw std::logic_error("rescheduling changed an invariant of: " +
                           serialize_front(w));
  return out;
}

}  // namespace legfront::detail
