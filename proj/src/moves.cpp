#include "legfront/moves.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "moves_internal.hpp"
#include "planemap.hpp"

namespace legfront {

namespace {

using EK = EventKind;

Event ev(EK k, int p) { return Event{k, p}; }

std::atomic<bool> g_validate{true};

}  // namespace

void set_move_validation(bool enabled) { g_validate.store(enabled); }
bool move_validation() { return g_validate.load(); }

const char* move_tag_name(MoveTag t) {
  switch (t) {
    case MoveTag::LR1: return "LR1";
    case MoveTag::LR2: return "LR2";
    case MoveTag::LR3: return "LR3";
    case MoveTag::Commute: return "Commute";
    case MoveTag::StabilizePlus: return "StabilizePlus";
    case MoveTag::StabilizeMinus: return "StabilizeMinus";
    case MoveTag::DestabilizePlus: return "DestabilizePlus";
    case MoveTag::DestabilizeMinus: return "DestabilizeMinus";
  }
  return "?";
}

std::optional<MoveTag> move_tag_from_name(const std::string& name) {
  for (MoveTag t :
       {MoveTag::LR1, MoveTag::LR2, MoveTag::LR3, MoveTag::Commute,
        MoveTag::StabilizePlus, MoveTag::StabilizeMinus,
        MoveTag::DestabilizePlus, MoveTag::DestabilizeMinus})
    if (name == move_tag_name(t)) return t;
  return std::nullopt;
}

// === planar commutation ======================================================

// The pair (a then b) is reordered to (b' then a'). Positions are gap/row
// indices into the strand stack at the moment the event fires, so moving an
// event across a cusp shifts its position by 2 when it acts below that
// cusp. Events whose strand ranges touch cannot commute.
std::vector<std::pair<Event, Event>> swap_adjacent(const Event& a,
                                                   const Event& b) {
  const int i = a.pos, j = b.pos;
  std::vector<std::pair<Event, Event>> out;
  auto yield = [&](Event x, Event y) { out.emplace_back(x, y); };

  switch (a.kind) {
    case EK::LeftCusp:
      switch (b.kind) {
        case EK::LeftCusp:  // nested birth when b splits a's pair
          if (j == i + 1) break;
          if (j <= i)
            yield(ev(EK::LeftCusp, j), ev(EK::LeftCusp, i + 2));
          else
            yield(ev(EK::LeftCusp, j - 2), ev(EK::LeftCusp, i));
          break;
        case EK::Crossing:  // crossing touching a child strand
          if (i - 1 <= j && j <= i + 1) break;
          if (j <= i - 2)
            yield(ev(EK::Crossing, j), ev(EK::LeftCusp, i));
          else
            yield(ev(EK::Crossing, j - 2), ev(EK::LeftCusp, i));
          break;
        case EK::RightCusp:  // death touching a child strand
          if (i - 1 <= j && j <= i + 1) break;
          if (j <= i - 2)
            yield(ev(EK::RightCusp, j), ev(EK::LeftCusp, i - 2));
          else
            yield(ev(EK::RightCusp, j - 2), ev(EK::LeftCusp, i));
          break;
      }
      break;

    case EK::Crossing:
      switch (b.kind) {
        case EK::LeftCusp:  // birth inside the crossed pair
          if (j == i + 1) break;
          if (j <= i)
            yield(ev(EK::LeftCusp, j), ev(EK::Crossing, i + 2));
          else
            yield(ev(EK::LeftCusp, j), ev(EK::Crossing, i));
          break;
        case EK::Crossing:  // braid generators sharing a strand
          if (std::abs(i - j) <= 1) break;
          yield(ev(EK::Crossing, j), ev(EK::Crossing, i));
          break;
        case EK::RightCusp:  // death touching a crossed strand
          if (std::abs(i - j) <= 1) break;
          if (j <= i - 2)
            yield(ev(EK::RightCusp, j), ev(EK::Crossing, i - 2));
          else
            yield(ev(EK::RightCusp, j), ev(EK::Crossing, i));
          break;
      }
      break;

    case EK::RightCusp:
      switch (b.kind) {
        case EK::LeftCusp:
          // A birth in the exact spot a pair just died slides past the
          // death on either side of it: two distinct reorderings. Dropping
          // either would make the dependence of a pair depend on the
          // events between them, and order-invariance of dependent pairs
          // is what the window gathering below relies on.
          if (j == i) {
            yield(ev(EK::LeftCusp, i), ev(EK::RightCusp, i + 2));
            yield(ev(EK::LeftCusp, i + 2), ev(EK::RightCusp, i));
          } else if (j <= i - 1) {
            yield(ev(EK::LeftCusp, j), ev(EK::RightCusp, i + 2));
          } else {
            yield(ev(EK::LeftCusp, j + 2), ev(EK::RightCusp, i));
          }
          break;
        case EK::Crossing:  // crossing of a pair split by the death
          if (j == i - 1) break;
          if (j <= i - 2)
            yield(ev(EK::Crossing, j), ev(EK::RightCusp, i));
          else
            yield(ev(EK::Crossing, j + 2), ev(EK::RightCusp, i));
          break;
        case EK::RightCusp:  // b's pair is only adjacent because a died
          if (j == i - 1) break;
          if (j <= i - 2)
            yield(ev(EK::RightCusp, j), ev(EK::RightCusp, i - 2));
          else
            yield(ev(EK::RightCusp, j + 2), ev(EK::RightCusp, i));
          break;
      }
      break;
  }
  return out;
}

// === canonical form ==========================================================

// Pairwise improving swaps alone can stall in a local minimum, so the least
// word of a commutation class is found globally: the word's plane map is
// rebuilt and rescheduled event by event, taking at each step the least
// emittable letter whose choice still completes to a valid word.
FrontWord canonical_form(const FrontWord& w) {
  const ValidationReport rep = validate_front(w);
  if (!rep.ok())
    throw FrontError("canonical_form requires a valid single-component front: " +
                         rep.violations.front().message,
                     rep.violations.front().event_index);
  return detail::reschedule_lexmin(w);
}

// === Legendrian Reidemeister moves ===========================================

std::vector<std::pair<MoveKind, FrontWord>> neighbors(const FrontWord& w) {
  if (const ValidationReport rep = validate_front(w); !rep.ok())
    throw FrontError("neighbors requires a valid single-component front: " +
                         rep.violations.front().message,
                     rep.violations.front().event_index);
  const ClassicalInvariants base = classical_invariants(w);

  std::vector<std::pair<MoveKind, FrontWord>> out;
  std::unordered_set<std::string> seen;
  seen.insert(serialize_front(canonical_form(w)));

  // ref is the pre-rewrite word the result was produced from (null when that
  // is w itself, a commutation variant for the window rewrites). The rewrite
  // never touches the variant's first event, so rot must match the variant
  // exactly; tb and components match the input unconditionally.
  detail::enumerate_lr_moves(
      w, compute_geometry(w),
      [&](MoveKind kind, const FrontWord& result, const FrontWord* ref) {
        if (!structurally_valid(result))
          throw std::logic_error("move template produced an invalid word: " +
                                 serialize_front(result));
        if (move_validation()) {
          ClassicalInvariants ri = classical_invariants(result);
          const long long want_rot =
              ref ? classical_invariants(*ref).rot : base.rot;
          if (ri.components != base.components || ri.tb != base.tb ||
              ri.rot != want_rot)
            throw std::logic_error(
                std::string("move template broke an invariant: ") +
                move_tag_name(kind.tag) + " v" + std::to_string(kind.variant) +
                " gave '" + serialize_front(result) + "' from '" +
                serialize_front(ref ? *ref : w) + "'");
        }
        FrontWord c = canonical_form(result);
        std::string key = serialize_front(c);
        if (seen.insert(key).second) out.emplace_back(kind, std::move(c));
      });

  return out;
}

// === stabilization ===========================================================

namespace {

// Transport f's orientation to a word that differs from f.word only by
// rewrites away from event 0: the first event's upper child is segment 0
// in both words, so the seed direction carries over.
OrientedFront oriented_like(const OrientedFront& f, const FrontWord& word) {
  OrientedFront o = orient_front(word);
  if (!f.seg_dir.empty() && f.seg_dir[0] == Direction::Leftward)
    o = reverse_orientation(std::move(o));
  return o;
}

}  // namespace

OrientedFront stabilize(const OrientedFront& f, int sign, int segment) {
  if (sign != 1 && sign != -1)
    throw FrontError("stabilization sign must be +1 or -1", kWholeWord);
  const FrontGeometry g = compute_geometry(f.word);
  if (segment < 0 || segment >= g.num_segments ||
      f.seg_dir.size() != static_cast<size_t>(g.num_segments))
    throw FrontError("stabilization site is not a segment of the front",
                     kWholeWord);
  // The sign convention ties the zigzag to the rotation number of the whole
  // front, which is only orientation-stable for a single component.
  if (g.num_components != 1)
    throw FrontError("stabilization requires a single-component front",
                     kWholeWord);

  // First slice where the segment is present.
  size_t t = 0;
  int p = 0;
  for (size_t s = 1; s < g.slices.size(); ++s) {
    for (size_t q = 0; q < g.slices[s].size(); ++q)
      if (g.slices[s][q] == segment) {
        t = s;
        p = static_cast<int>(q) + 1;
        break;
      }
    if (t) break;
  }

  // Zigzag chirality: hooking the strand from above ([L_p, R_{p+1}]) makes
  // two up cusps on a rightward strand and two down cusps on a leftward
  // one; hooking from below swaps that.
  const bool rightward = f.seg_dir[segment] == Direction::Rightward;
  const bool from_above = (sign == -1) == rightward;

  FrontWord word = f.word;
  if (from_above)
    word.events.insert(word.events.begin() + t,
                       {ev(EK::LeftCusp, p), ev(EK::RightCusp, p + 1)});
  else
    word.events.insert(word.events.begin() + t,
                       {ev(EK::LeftCusp, p + 1), ev(EK::RightCusp, p)});

  OrientedFront result = oriented_like(f, word);
  ClassicalInvariants before = invariants_of(f, g);
  ClassicalInvariants after = invariants_of(result);
  if (after.tb != before.tb - 1 || after.rot != before.rot + sign)
    throw std::logic_error("stabilization produced wrong deltas");
  return result;
}

FrontWord stabilize_word(const FrontWord& w, int sign) {
  return stabilize(orient_front(w), sign, 0).word;
}

std::vector<std::pair<int, OrientedFront>> destabilizations(
    const OrientedFront& f) {
  std::vector<std::pair<int, OrientedFront>> out;
  if (!structurally_valid(f.word)) return out;
  const ClassicalInvariants base = invariants_of(f);
  if (base.components != 1)
    throw FrontError("destabilization requires a single-component front",
                     kWholeWord);
  const FrontGeometry g = compute_geometry(f.word);
  std::unordered_set<std::string> seen;

  // Orients a reschedule of f.word (or its destabilization) like f. The
  // word's leading event is the source event first_src, whose upper child is
  // the word's segment 0 — the seed of orient_front — so f's direction on
  // that child decides whether the seeded orientation must flip.
  auto oriented_like_at = [&](const FrontWord& v, int first_src) {
    OrientedFront o = orient_front(v);
    if (f.seg_dir[g.at_event[first_src].a] == Direction::Leftward)
      o = reverse_orientation(std::move(o));
    return o;
  };

  auto consider = [&](const FrontWord& v, size_t i, int first_src) {
    const Event &e0 = v.events[i], &e1 = v.events[i + 1];
    const bool hook_above = e1.pos == e0.pos + 1;   // [L_p, R_{p+1}]
    const bool hook_below = e0.pos == e1.pos + 1;   // [L_{p+1}, R_p]
    if (!hook_above && !hook_below)
      throw std::logic_error("zigzag block lost its hook shape");

    const OrientedFront ov = oriented_like_at(v, first_src);
    const FrontGeometry vg = compute_geometry(v);
    const bool l_down = ov.seg_dir[vg.at_event[i].a] == Direction::Leftward;
    const bool r_down =
        ov.seg_dir[vg.at_event[i + 1].a] == Direction::Rightward;
    if (l_down != r_down)
      throw std::logic_error("zigzag cusps disagree in class");
    const int sign = l_down ? 1 : -1;

    FrontWord r = v;
    r.events.erase(r.events.begin() + i, r.events.begin() + i + 2);
    OrientedFront res = oriented_like_at(r, first_src);
    ClassicalInvariants ri = invariants_of(res);
    if (ri.tb != base.tb + 1 || ri.rot != base.rot - sign)
      throw std::logic_error("destabilization produced wrong deltas");

    std::string key =
        std::to_string(sign) + "|" + serialize_front(canonical_form(r));
    if (seen.insert(key).second) out.emplace_back(sign, std::move(res));
  };

  // A removable zigzag is a segment born at a left cusp and dying at a right
  // cusp with twisted roles: born as the lower child and dying as the upper
  // input, or born upper and dying lower. Rescheduling so that birth and
  // death are adjacent puts the pair into the hook shape [L_p, R_{p±1}];
  // the hooked strand is born strictly earlier, so the block never leads the
  // witness and the leading event survives the erase.
  detail::PlaneMap pm = detail::build_plane_map(f.word);
  std::optional<detail::Scheduler> sched;
  for (int s = 0; s < pm.E; ++s) {
    const int p = pm.producer[s], d = pm.death_ev[s];
    if (f.word.events[p].kind != EK::LeftCusp ||
        f.word.events[d].kind != EK::RightCusp)
      continue;
    const bool born_lower = g.at_event[p].b == s;
    const bool dies_upper = g.at_event[d].a == s;
    if (born_lower != dies_upper) continue;  // straight roles: not a zigzag
    if (!sched) sched.emplace(pm);
    const uint64_t block = (uint64_t{1} << p) | (uint64_t{1} << d);
    if (auto bw = sched->run_with_block(block)) {
      if (bw->block_at < 1)
        throw std::logic_error("zigzag block scheduled without its strand");
      consider(bw->word, static_cast<size_t>(bw->block_at), bw->order[0]);
    }
  }
  return out;
}

// === traces ==================================================================

bool verify_trace(const MoveTrace& t, std::string* why) {
  auto fail = [&](size_t step, const std::string& msg) {
    if (why)
      *why = "step " + std::to_string(step) + ": " + msg;
    return false;
  };
  if (!structurally_valid(t.start)) return fail(0, "invalid start word");

  FrontWord cur = canonical_form(t.start);
  for (size_t s = 0; s < t.steps.size(); ++s) {
    const MoveStep& step = t.steps[s];
    if (!structurally_valid(step.result))
      return fail(s, "invalid result word");
    const FrontWord want = canonical_form(step.result);
    const std::string want_key = serialize_front(want);
    bool ok = false;

    switch (step.kind.tag) {
      case MoveTag::LR1:
      case MoveTag::LR2:
      case MoveTag::LR3:
        for (const auto& [kind, word] : neighbors(cur))
          if (kind.tag == step.kind.tag && serialize_front(word) == want_key) {
            ok = true;
            break;
          }
        break;
      case MoveTag::Commute:
        ok = want_key == serialize_front(cur);
        break;
      case MoveTag::StabilizePlus:
      case MoveTag::StabilizeMinus: {
        const int sign = step.kind.tag == MoveTag::StabilizePlus ? 1 : -1;
        const OrientedFront of = orient_front(cur);
        const int nseg = compute_geometry(cur).num_segments;
        for (int seg = 0; seg < nseg && !ok; ++seg) {
          OrientedFront st = stabilize(of, sign, seg);
          ok = serialize_front(canonical_form(st.word)) == want_key;
        }
        break;
      }
      case MoveTag::DestabilizePlus:
      case MoveTag::DestabilizeMinus: {
        const int sign = step.kind.tag == MoveTag::DestabilizePlus ? 1 : -1;
        for (const auto& [sg, res] : destabilizations(orient_front(cur)))
          if (sg == sign &&
              serialize_front(canonical_form(res.word)) == want_key) {
            ok = true;
            break;
          }
        break;
      }
    }
    if (!ok)
      return fail(s, std::string("result not reachable by ") +
                         move_tag_name(step.kind.tag));
    cur = want;
  }
  return true;
}

std::string trace_to_json(const MoveTrace& t, int indent) {
  nlohmann::json steps = nlohmann::json::array();
  for (const MoveStep& s : t.steps)
    steps.push_back({{"move", move_tag_name(s.kind.tag)},
                     {"variant", s.kind.variant},
                     {"site", s.kind.site},
                     {"pos", s.kind.pos},
                     {"word", serialize_front(s.result)}});
  nlohmann::json j{{"start", serialize_front(t.start)}, {"steps", steps}};
  return j.dump(indent);
}

MoveTrace trace_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  MoveTrace t;
  t.start = parse_front(j.at("start").get<std::string>());
  for (const auto& s : j.at("steps")) {
    MoveStep step;
    auto tag = move_tag_from_name(s.at("move").get<std::string>());
    if (!tag) throw FrontError("unknown move tag in trace", kWholeWord);
    step.kind.tag = *tag;
    step.kind.variant = s.value("variant", 0);
    step.kind.site = s.value("site", size_t{0});
    step.kind.pos = s.value("pos", 0);
    step.result = parse_front(s.at("word").get<std::string>());
    t.steps.push_back(std::move(step));
  }
  return t;
}

}  // namespace legfront
