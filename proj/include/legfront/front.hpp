// Front words: a combinatorial encoding of Legendrian knot front diagrams.
//
// A front diagram is read left to right as a sequence of elementary events
// acting on a stack of horizontal strands numbered from the top (position 1).
// Three event kinds exist:
//
//   L<i>  left cusp: two new strands are born at positions i, i+1
//   R<i>  right cusp: the strands at positions i, i+1 die together
//   X<i>  crossing: the strands at positions i, i+1 cross
//
// A word is a closed front when it starts and ends with zero strands and
// every event position is legal for the strand count at that point.

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace legfront {

// === events and words ======================================================

enum class EventKind : uint8_t { LeftCusp, RightCusp, Crossing };

struct Event {
  EventKind kind;
  int pos;  // 1-based position of the upper strand involved

  friend bool operator==(const Event&, const Event&) = default;
};

struct FrontWord {
  std::vector<Event> events;

  friend bool operator==(const FrontWord&, const FrontWord&) = default;
  size_t size() const { return events.size(); }
};

// Error with a location: byte offset for parse errors, event index otherwise.
class FrontError : public std::runtime_error {
 public:
  FrontError(const std::string& msg, size_t where)
      : std::runtime_error(msg), where_(where) {}
  size_t where() const { return where_; }

 private:
  size_t where_;
};

// Text form: whitespace separated tokens such as "L1 X2 R1"; '#' starts a
// comment running to end of line. parse_front throws FrontError with the
// byte offset of the offending character.
FrontWord parse_front(const std::string& text);
std::string serialize_front(const FrontWord& w);
std::string event_token(const Event& e);

// === validation =============================================================

struct Violation {
  // Index of the offending event, or kWholeWord for global conditions.
  size_t event_index;
  std::string message;
};

inline constexpr size_t kWholeWord = static_cast<size_t>(-1);

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks position legality at every event, closure (zero strands at both
// ends) and, when structurally sound, that the front is a knot (exactly one
// component).
ValidationReport validate_front(const FrontWord& w);

// Position legality and closure only; true iff geometry can be computed.
bool structurally_valid(const FrontWord& w);

// === geometry ===============================================================

// Strands are cut into segments at cusps and at crossings (only the two
// strands that actually cross are cut). Segments are numbered in birth
// order. Each segment end is linked to the end it continues into, giving a
// set of closed cycles: the components of the front.

enum class Side : uint8_t { Left, Right };

struct EndRef {
  int seg = -1;
  Side side = Side::Left;
};

// Which segments an event touches.
//   LeftCusp:  a,b = upper/lower child (born) segments
//   RightCusp: a,b = upper/lower dying segments
//   Crossing:  a,b = incoming upper/lower; c,d = outgoing upper/lower.
//              The incoming upper strand continues as the outgoing lower
//              (a -> d) and passes in front; the incoming lower strand
//              continues as the outgoing upper (b -> c) and passes behind.
struct EventSegments {
  int a = -1, b = -1, c = -1, d = -1;
};

struct FrontGeometry {
  int num_segments = 0;
  int num_components = 0;
  std::vector<int> component_of;          // by segment id
  std::vector<EventSegments> at_event;    // by event index
  std::vector<EndRef> left_link;          // by segment id: continuation of the left end
  std::vector<EndRef> right_link;         // ... and of the right end
  std::vector<std::vector<int>> slices;   // active segments (top first) after k events
};

// Throws FrontError when the word is not structurally valid.
FrontGeometry compute_geometry(const FrontWord& w);

// Largest strand count attained between events.
int max_width(const FrontWord& w);

// === orientation ============================================================

enum class Direction : uint8_t { Rightward, Leftward };

inline Direction flip(Direction d) {
  return d == Direction::Rightward ? Direction::Leftward : Direction::Rightward;
}

struct OrientedFront {
  FrontWord word;
  std::vector<Direction> seg_dir;  // by segment id
};

// Canonical orientation: in each component the lowest numbered segment is
// directed rightward and the rest follow by continuity (crossings preserve
// the horizontal direction, cusps reverse it).
OrientedFront orient_front(const FrontWord& w);
OrientedFront reverse_orientation(OrientedFront f);

// === classical invariants ===================================================

struct ClassicalInvariants {
  long long tb = 0;       // writhe - cusps/2
  long long rot = 0;      // (down_cusps - up_cusps)/2
  long long writhe = 0;   // sum of crossing signs
  int up_cusps = 0;
  int down_cusps = 0;
  int crossings = 0;
  int components = 0;

  int cusps() const { return up_cusps + down_cusps; }
  friend bool operator==(const ClassicalInvariants&,
                         const ClassicalInvariants&) = default;
};

// A crossing is positive when its two strands point in the same horizontal
// direction; a cusp is a down cusp when the traversal passes from its upper
// incident segment to its lower one.
ClassicalInvariants invariants_of(const OrientedFront& f,
                                  const FrontGeometry& g);
ClassicalInvariants invariants_of(const OrientedFront& f);

// Invariants under the canonical orientation.
ClassicalInvariants classical_invariants(const FrontWord& w);

// === diagram symmetries =====================================================

// Left-right reflection of the plane: reverses the event order and swaps
// left cusps with right cusps, keeping positions. The reflected front
// presents the same knot and has identical classical invariants.
FrontWord mirror_x(const FrontWord& w);

// === connected sum ==========================================================

// Splices two closed fronts into one: the last right cusp of the first word
// and the first left cusp of the second are removed and the dangling strand
// pairs are joined. Reflected and swapped variants are tried until both
// tb and rot add up; throws FrontError if no variant achieves that.
// The result satisfies tb = tb(f) + tb(g) + 1 and rot = rot(f) + rot(g).
FrontWord connect_sum(const FrontWord& f, const FrontWord& g);

// Same, for explicitly oriented operands: the additivity targets use the
// given orientations and the result carries a matching orientation.
OrientedFront connect_sum(const OrientedFront& f, const OrientedFront& g);

}  // namespace legfront
