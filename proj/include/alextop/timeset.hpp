#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alextop/rational.hpp"

namespace alextop {

/// Interval endpoint: an exact rational or one of the two infinities.
struct Bound {
  enum class Kind { NegInf, Finite, PosInf };
  Kind kind = Kind::Finite;
  Rat value;

  static Bound neg_inf() { return {Kind::NegInf, Rat{}}; }
  static Bound pos_inf() { return {Kind::PosInf, Rat{}}; }
  static Bound finite(Rat r) { return {Kind::Finite, r}; }
  bool is_finite() const { return kind == Kind::Finite; }

  friend bool operator==(const Bound& a, const Bound& b) = default;
};

int compare(const Bound& a, const Bound& b);

/// Nonempty interval with exact rational endpoints; infinite ends are open.
/// A single rational point is the degenerate case lo == hi, both closed.
struct Interval {
  Bound lo = Bound::neg_inf();
  Bound hi = Bound::pos_inf();
  bool lo_closed = false;
  bool hi_closed = false;

  static Interval all() { return {}; }
  static Interval point(Rat r) { return {Bound::finite(r), Bound::finite(r), true, true}; }
  static Interval make(Bound lo, Bound hi, bool lc, bool hc);

  bool is_point() const;
  bool contains(const Rat& t) const;
  Interval reflected() const;  // {-t : t in this}
  std::string str() const;

  friend bool operator==(const Interval& a, const Interval& b) = default;
};

std::optional<Interval> intersect(const Interval& a, const Interval& b);

/// Minkowski sum {s + t : s in a, t in b}.
Interval sum(const Interval& a, const Interval& b);

/// Some rational inside the interval.
Rat pick_point(const Interval& a);

/// Finite union of disjoint, non-mergeable intervals in sorted order.
/// The canonical carrier for time sets like {t : phi(t,x) in V}.
class TimeSet {
 public:
  TimeSet() = default;
  static TimeSet empty() { return {}; }
  static TimeSet all() { return TimeSet({Interval::all()}); }
  explicit TimeSet(std::vector<Interval> parts);

  const std::vector<Interval>& components() const { return comps_; }
  bool is_empty() const { return comps_.empty(); }
  bool is_all() const;
  bool contains(const Rat& t) const;

  TimeSet unite(const TimeSet& other) const;
  TimeSet intersect(const TimeSet& other) const;
  TimeSet complement() const;
  TimeSet difference(const TimeSet& other) const;
  TimeSet interior() const;
  bool subset_of(const TimeSet& other) const;
  /// Component containing t, if any.
  std::optional<Interval> component_at(const Rat& t) const;

  std::string str() const;

  friend bool operator==(const TimeSet& a, const TimeSet& b) = default;

 private:
  void normalize();
  std::vector<Interval> comps_;
};

}  // namespace alextop
