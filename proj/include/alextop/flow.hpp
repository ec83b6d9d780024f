#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alextop/space.hpp"
#include "alextop/timeset.hpp"

namespace alextop {

/// Piecewise-constant assignment of self-maps over the time line. With
/// breakpoints b_1 < ... < b_k the 2k+1 pieces are, in order,
/// (-inf,b_1), {b_1}, (b_1,b_2), ..., {b_k}, (b_k,inf); pieces[i] indexes the
/// candidate's map table.
struct StepSchedule {
  std::vector<Rat> breakpoints;
  std::vector<int> pieces;

  int piece_count() const { return static_cast<int>(pieces.size()); }
  Interval piece_interval(int i) const;
  int piece_containing(const Rat& t) const;
};

/// A candidate flow phi: R x X -> X in finitely-describable form. Maps need
/// not be bijections; the verifier detects the failure.
struct FlowCandidate {
  FiniteSpace space;
  std::vector<std::string> map_names;
  std::vector<PointMap> maps;
  StepSchedule schedule;

  const PointMap& piece_map(int piece) const { return maps[schedule.pieces[piece]]; }
};

struct FlowWitness {
  std::string axiom;
  std::optional<Rat> s;
  std::optional<Rat> t;
  std::optional<int> x;          // element index
  std::optional<Mask> open_set;  // base open V over the space's elements
  std::string detail;
};

struct AxiomResult {
  bool pass = true;
  std::optional<FlowWitness> witness;
};

struct FlowVerdict {
  AxiomResult identity_at_zero;
  AxiomResult group_law;
  AxiomResult continuity;

  bool pass() const {
    return identity_at_zero.pass && group_law.pass && continuity.pass;
  }
  const FlowWitness* first_witness() const;
};

/// Throws std::invalid_argument when the schedule shape or map table is
/// inconsistent with the space.
void check_candidate_wellformed(const FlowCandidate& c);

int eval(const FlowCandidate& c, const Rat& t, int x);

/// {t : phi(t,x) in v}, a finite union of schedule pieces.
TimeSet times_mapping_into(const FlowCandidate& c, int x, Mask v);

AxiomResult check_identity_at_zero(const FlowCandidate& c);

/// Symbolic, exact and complete for step schedules: for every ordered piece
/// pair the sumset of their intervals must land only on pieces carrying the
/// composed map. Failures come with a concrete rational witness pair (s,t).
AxiomResult check_group_law(const FlowCandidate& c);

/// Product-topology continuity against the minimal-open base: for every base
/// open V and element x, W_x(V) must lie inside the interior of the
/// intersection of W_y(V) over y in U_x.
AxiomResult check_continuity(const FlowCandidate& c);

/// All three axioms plus, once identity and group law hold, bijectivity of
/// every piece map and the inverse pairing between pieces at t and -t
/// (violations surface as group-law failures).
FlowVerdict is_flow(const FlowCandidate& c);

/// True iff every piece map acts as the identity on every element.
bool is_trivial(const FlowCandidate& c);

struct StabilityRadius {
  enum class Kind { None, Finite, Unbounded };
  Kind kind = Kind::None;
  Rat value;  // meaningful for Finite
};

/// Supremum of radii r with phi((-r,r) x U_x) inside U_x; None when no
/// positive radius exists.
StabilityRadius local_stability_radius(const FlowCandidate& c, int x);

/// The candidate with breakpoint 0 and pieces (I_{x,y}, id, I_{x,y}), where
/// I_{x,y} exchanges x and y and fixes everything else.
FlowCandidate swap_candidate(const FiniteSpace& space, int x, int y);

/// Key identifying the induced phi up to redundant breakpoints; candidates
/// with equal keys evaluate identically everywhere.
std::string semantic_key(const FlowCandidate& c);

struct FlowSearchOptions {
  std::vector<Rat> pool;
  int max_breakpoints = 0;
  bool homeo_only = false;
  long long budget = 10'000'000;
};

/// Exhaustive search over step schedules with breakpoints drawn from the
/// pool; returns the candidates passing is_flow, one per semantic class, in
/// deterministic pool order. Throws BudgetError when the candidate count
/// would exceed the budget.
std::vector<FlowCandidate> search_flows(const FiniteSpace& space, const FlowSearchOptions& opt);

}  // namespace alextop
