// Rewrite enumeration shared by the public neighbor listing and the isotopy
// search. Results are raw words: not validated, not canonicalized, not
// deduplicated — callers decide how much of that they need.
//
// Not part of the public interface; include it from src/ only.
#pragma once

#include <legfront/front.hpp>
#include <legfront/moves.hpp>

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <vector>

#include "planemap.hpp"

namespace legfront::detail {

// Calls sink(kind, result, ref) once per applicable tb-preserving rewrite of
// w. ref points at the commutation variant of w the rewrite was applied to,
// or is null when that variant is w itself. No rewrite touches the variant's
// first event, so the result's rotation number always matches the variant's;
// tb and the component count match w's unconditionally.
//
// The insertion templates (kink insertion, cusp-branch pushes) act on w
// directly. The window rewrites (kink deletion, branch retraction, triangle
// slide) each live inside a triangular internal face of the plane map: the
// three corner events are pairwise joined by boundary edges, hence totally
// ordered, hence schedulable back to back. For each such face the word is
// rescheduled so the corner events sit consecutively, and the window pattern
// is matched there. A reschedule that exceeds its node budget drops that
// face's rewrite.
template <typename Sink>
void enumerate_lr_moves(const FrontWord& w, const FrontGeometry& geom,
                        Sink&& sink) {
  using EK = EventKind;
  const auto ev = [](EK k, int p) { return Event{k, p}; };
  const size_t m = w.events.size();

  // --- kink insertion on any strand at any slice ----------------------------
  for (size_t t = 1; t < m; ++t) {
    const int n = static_cast<int>(geom.slices[t].size());
    for (int p = 1; p <= n; ++p) {
      FrontWord r0 = w;
      r0.events.insert(r0.events.begin() + t,
                       {ev(EK::LeftCusp, p + 1), ev(EK::Crossing, p),
                        ev(EK::RightCusp, p + 1)});
      sink(MoveKind{MoveTag::LR1, 0, t, p}, r0, nullptr);

      FrontWord r1 = w;
      r1.events.insert(r1.events.begin() + t,
                       {ev(EK::LeftCusp, p), ev(EK::Crossing, p + 1),
                        ev(EK::RightCusp, p)});
      sink(MoveKind{MoveTag::LR1, 1, t, p}, r1, nullptr);
    }
  }

  // --- push a cusp branch through a neighboring strand -----------------------
  for (size_t k = 0; k < m; ++k) {
    const Event& e = w.events[k];
    const int n = static_cast<int>(geom.slices[k].size());
    const int j = e.pos;
    auto replace3 = [&](Event x, Event y, Event z) {
      FrontWord r = w;
      r.events[k] = x;
      r.events.insert(r.events.begin() + k + 1, {y, z});
      return r;
    };
    if (e.kind == EK::LeftCusp) {
      if (j <= n)
        sink(MoveKind{MoveTag::LR2, 0, k, j},
             replace3(ev(EK::LeftCusp, j + 1), ev(EK::Crossing, j),
                      ev(EK::Crossing, j + 1)),
             nullptr);
      if (j >= 2)
        sink(MoveKind{MoveTag::LR2, 1, k, j},
             replace3(ev(EK::LeftCusp, j - 1), ev(EK::Crossing, j),
                      ev(EK::Crossing, j - 1)),
             nullptr);
    } else if (e.kind == EK::RightCusp) {
      if (j + 2 <= n)
        sink(MoveKind{MoveTag::LR2, 2, k, j},
             replace3(ev(EK::Crossing, j + 1), ev(EK::Crossing, j),
                      ev(EK::RightCusp, j + 1)),
             nullptr);
      if (j >= 2)
        sink(MoveKind{MoveTag::LR2, 3, k, j},
             replace3(ev(EK::Crossing, j - 1), ev(EK::Crossing, j),
                      ev(EK::RightCusp, j - 1)),
             nullptr);
    }
  }

  // --- window rewrites at a triangular face ----------------------------------
  auto dispatch = [&](const FrontWord& v, size_t t) {
    const Event &w0 = v.events[t], &w1 = v.events[t + 1], &w2 = v.events[t + 2];
    const int a = w0.pos, b = w1.pos;
    if (std::abs(a - b) != 1) return;

    if (w0.kind == EK::LeftCusp && w1.kind == EK::Crossing) {
      if (w2.kind == EK::RightCusp && w2.pos == a) {
        // kink [L_{b±1}, X_b, R_{b±1}] vanishes
        FrontWord r = v;
        r.events.erase(r.events.begin() + t, r.events.begin() + t + 3);
        sink(MoveKind{MoveTag::LR1, a == b + 1 ? 2 : 3, t, std::min(a, b)}, r,
             &v);
      } else if (w2.kind == EK::Crossing && w2.pos == a) {
        // branch retraction [L_a, X_b, X_a] -> L_b
        FrontWord r = v;
        r.events[t] = ev(EK::LeftCusp, b);
        r.events.erase(r.events.begin() + t + 1, r.events.begin() + t + 3);
        sink(MoveKind{MoveTag::LR2, b < a ? 4 : 5, t, b}, r, &v);
      }
    } else if (w0.kind == EK::Crossing && w1.kind == EK::Crossing) {
      if (w2.kind == EK::RightCusp && w2.pos == a) {
        // branch retraction [X_a, X_b, R_a] -> R_b
        FrontWord r = v;
        r.events[t] = ev(EK::RightCusp, b);
        r.events.erase(r.events.begin() + t + 1, r.events.begin() + t + 3);
        sink(MoveKind{MoveTag::LR2, b < a ? 6 : 7, t, b}, r, &v);
      } else if (w2.kind == EK::Crossing && w2.pos == a) {
        // triangle slide [X_a, X_b, X_a] -> [X_b, X_a, X_b]
        FrontWord r = v;
        r.events[t] = ev(EK::Crossing, b);
        r.events[t + 1] = ev(EK::Crossing, a);
        r.events[t + 2] = ev(EK::Crossing, b);
        sink(MoveKind{MoveTag::LR3, b > a ? 0 : 1, t, std::min(a, b)}, r, &v);
      }
    }
  };

  PlaneMap pm = build_plane_map(w);
  const std::vector<std::vector<int>> corners = face_corner_vertices(pm);
  std::vector<int> degree(corners.size(), 0);
  for (int s = 0; s < pm.E; ++s) {
    ++degree[pm.north[s]];
    ++degree[pm.south[s]];
  }
  std::optional<Scheduler> sched;
  for (int fc = 0; fc < pm.F; ++fc) {
    if (fc == pm.outer || degree[fc] != 3) continue;
    const std::vector<int>& cs = corners[fc];
    if (cs.size() != 3) continue;
    if (cs[0] == cs[1] || cs[0] == cs[2] || cs[1] == cs[2]) continue;
    uint64_t block = 0;
    for (int c : cs) block |= uint64_t{1} << c;
    if (!sched) sched.emplace(pm);
    // Witnesses in the word's own orientation class keep the rewrite's result
    // there too. A rotation-zero class contains both presentations, so a face
    // only reachable mirror-side still yields an in-class move.
    auto bw = sched->run_with_block(block, 0);
    if (!bw && pm.rot == 0) bw = sched->run_with_block(block, 1);
    if (bw) dispatch(bw->word, static_cast<size_t>(bw->block_at));
  }
}

}  // namespace legfront::detail
