// Local rewriting of front words: planar commutations (canonical form),
// the three Legendrian Reidemeister moves, stabilization and
// destabilization. All rewrites preserve the knot's Legendrian class
// except stabilize/destabilize, which change (tb, rot) by the documented
// deltas.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "legfront/front.hpp"

namespace legfront {

// === move descriptors =======================================================

enum class MoveTag : uint8_t {
  LR1,
  LR2,
  LR3,
  Commute,
  StabilizePlus,
  StabilizeMinus,
  DestabilizePlus,
  DestabilizeMinus,
};

const char* move_tag_name(MoveTag t);
std::optional<MoveTag> move_tag_from_name(const std::string& name);

// variant selects the template (and its direction):
//   LR1: 0,1 insert a kink (two chiralities); 2,3 remove one.
//   LR2: 0..3 push a cusp branch through a strand; 4..7 the inverses.
//   LR3: 0,1 the two directions of the triangle move.
// site is the event index where the rewrite window begins (for insertions,
// the index the new events are inserted at); pos is the strand position
// parameter of the template.
struct MoveKind {
  MoveTag tag = MoveTag::Commute;
  int variant = 0;
  size_t site = 0;
  int pos = 0;

  friend bool operator==(const MoveKind&, const MoveKind&) = default;
};

struct MoveStep {
  MoveKind kind;
  FrontWord result;
};

struct MoveTrace {
  FrontWord start;
  std::vector<MoveStep> steps;

  const FrontWord& final_word() const {
    return steps.empty() ? start : steps.back().result;
  }
};

// === planar commutation ======================================================

// Reorderings of the adjacent event pair (a then b) that leave the diagram
// unchanged. Each entry (b', a') is a valid replacement with b happening
// first; empty means the events interact and cannot commute. Position
// parameters are reindexed across cusps (±2); one configuration — a left
// cusp born exactly where a right cusp just died — commutes two ways.
std::vector<std::pair<Event, Event>> swap_adjacent(const Event& a,
                                                   const Event& b);

/// Least word of the input's commutation class (event order: kind L < R < X,
// then position), computed by rescheduling the front's plane map rather than
// by local swaps, which can stall in local minima. On classes too large to
// minimize exactly a deterministic class-constant fallback member is
// returned instead, so equal inputs-up-to-commutation still canonicalize
// identically. Requires a valid single-component front; idempotent;
// preserves tb, rot, writhe and component count.
FrontWord canonical_form(const FrontWord& w);

// === Legendrian Reidemeister moves ==========================================

// Every LR1/LR2/LR3 template variant applied at every applicable site,
// results in canonical form, deduplicated. The relation is symmetric:
// each template has an inverse variant.
std::vector<std::pair<MoveKind, FrontWord>> neighbors(const FrontWord& w);

// Toggle the (tb, rot, components) equality assertion inside neighbors().
// On by default; large searches may disable it after a validated warm-up.
void set_move_validation(bool enabled);
bool move_validation();

// === stabilization ===========================================================

// Inserts a two-cusp zigzag on the given segment. sign = +1 adds a pair of
// down cusps (rot +1), sign = -1 a pair of up cusps (rot -1); tb drops by 1
// either way. The result keeps the input's orientation.
OrientedFront stabilize(const OrientedFront& f, int sign, int segment);

// Convenience: canonical-orientation front in, canonical site (first
// segment), word out.
FrontWord stabilize_word(const FrontWord& w, int sign);

// Every removable zigzag of f up to commutation, with its sign. Empty
// means f is nondestabilizable at the word level (hidden zigzags may still
// be exposed by LR moves).
std::vector<std::pair<int, OrientedFront>> destabilizations(
    const OrientedFront& f);

// === traces ==================================================================

// A trace certifies an isotopy (or a stabilization path): each step must be
// reproducible by this module from its predecessor. verify_trace replays
// every step; on failure *why states the first offending step.
bool verify_trace(const MoveTrace& t, std::string* why = nullptr);

std::string trace_to_json(const MoveTrace& t, int indent = -1);
MoveTrace trace_from_json(const std::string& text);

}  // namespace legfront
