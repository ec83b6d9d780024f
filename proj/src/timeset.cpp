#include "alextop/timeset.hpp"

#include <algorithm>
#include <stdexcept>

namespace alextop {

int compare(const Bound& a, const Bound& b) {
  auto rank = [](Bound::Kind k) {
    return k == Bound::Kind::NegInf ? 0 : k == Bound::Kind::Finite ? 1 : 2;
  };
  if (rank(a.kind) != rank(b.kind)) return rank(a.kind) < rank(b.kind) ? -1 : 1;
  if (a.kind != Bound::Kind::Finite) return 0;
  if (a.value < b.value) return -1;
  if (b.value < a.value) return 1;
  return 0;
}

namespace {

Bound negate(const Bound& b) {
  switch (b.kind) {
    case Bound::Kind::NegInf: return Bound::pos_inf();
    case Bound::Kind::PosInf: return Bound::neg_inf();
    case Bound::Kind::Finite: return Bound::finite(-b.value);
  }
  throw std::logic_error("unreachable");
}

std::optional<Interval> try_interval(Bound lo, Bound hi, bool lc, bool hc) {
  if (!lo.is_finite()) lc = false;
  if (!hi.is_finite()) hc = false;
  const int c = compare(lo, hi);
  if (c > 0) return std::nullopt;
  if (c == 0 && !(lo.is_finite() && lc && hc)) return std::nullopt;
  Interval out;
  out.lo = lo;
  out.hi = hi;
  out.lo_closed = lc;
  out.hi_closed = hc;
  return out;
}

}  // namespace

Interval Interval::make(Bound lo, Bound hi, bool lc, bool hc) {
  auto iv = try_interval(lo, hi, lc, hc);
  if (!iv) throw std::invalid_argument("empty interval");
  return *iv;
}

bool Interval::is_point() const {
  return lo.is_finite() && hi.is_finite() && lo.value == hi.value;
}

bool Interval::contains(const Rat& t) const {
  const Bound b = Bound::finite(t);
  const int cl = compare(lo, b);
  if (cl > 0 || (cl == 0 && !lo_closed)) return false;
  const int ch = compare(b, hi);
  if (ch > 0 || (ch == 0 && !hi_closed)) return false;
  return true;
}

Interval Interval::reflected() const {
  Interval out;
  out.lo = negate(hi);
  out.hi = negate(lo);
  out.lo_closed = hi_closed;
  out.hi_closed = lo_closed;
  return out;
}

std::string Interval::str() const {
  if (is_point()) return "{" + lo.value.str() + "}";
  std::string out = lo_closed ? "[" : "(";
  out += lo.is_finite() ? lo.value.str() : "-inf";
  out += ",";
  out += hi.is_finite() ? hi.value.str() : "inf";
  out += hi_closed ? "]" : ")";
  return out;
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  Bound lo = a.lo;
  bool lc = a.lo_closed;
  const int cl = compare(b.lo, a.lo);
  if (cl > 0) { lo = b.lo; lc = b.lo_closed; }
  else if (cl == 0) lc = a.lo_closed && b.lo_closed;

  Bound hi = a.hi;
  bool hc = a.hi_closed;
  const int ch = compare(b.hi, a.hi);
  if (ch < 0) { hi = b.hi; hc = b.hi_closed; }
  else if (ch == 0) hc = a.hi_closed && b.hi_closed;

  return try_interval(lo, hi, lc, hc);
}

Interval sum(const Interval& a, const Interval& b) {
  Interval out;
  if (a.lo.is_finite() && b.lo.is_finite()) {
    out.lo = Bound::finite(a.lo.value + b.lo.value);
    out.lo_closed = a.lo_closed && b.lo_closed;
  } else {
    out.lo = Bound::neg_inf();
    out.lo_closed = false;
  }
  if (a.hi.is_finite() && b.hi.is_finite()) {
    out.hi = Bound::finite(a.hi.value + b.hi.value);
    out.hi_closed = a.hi_closed && b.hi_closed;
  } else {
    out.hi = Bound::pos_inf();
    out.hi_closed = false;
  }
  return out;
}

Rat pick_point(const Interval& a) {
  if (a.lo.is_finite() && a.lo_closed) return a.lo.value;
  if (a.hi.is_finite() && a.hi_closed) return a.hi.value;
  if (a.lo.is_finite() && a.hi.is_finite())
    return (a.lo.value + a.hi.value) / Rat(2);
  if (a.lo.is_finite()) return a.lo.value + Rat(1);
  if (a.hi.is_finite()) return a.hi.value - Rat(1);
  return Rat(0);
}

TimeSet::TimeSet(std::vector<Interval> parts) : comps_(std::move(parts)) { normalize(); }

void TimeSet::normalize() {
  std::sort(comps_.begin(), comps_.end(), [](const Interval& a, const Interval& b) {
    const int c = compare(a.lo, b.lo);
    if (c != 0) return c < 0;
    return a.lo_closed && !b.lo_closed;
  });
  std::vector<Interval> merged;
  for (const Interval& next : comps_) {
    if (merged.empty()) { merged.push_back(next); continue; }
    Interval& acc = merged.back();
    const int c = compare(next.lo, acc.hi);
    const bool joinable = c < 0 || (c == 0 && (acc.hi_closed || next.lo_closed));
    if (!joinable) { merged.push_back(next); continue; }
    const int ch = compare(next.hi, acc.hi);
    if (ch > 0) { acc.hi = next.hi; acc.hi_closed = next.hi_closed; }
    else if (ch == 0) acc.hi_closed = acc.hi_closed || next.hi_closed;
  }
  comps_ = std::move(merged);
}

bool TimeSet::is_all() const {
  return comps_.size() == 1 && !comps_[0].lo.is_finite() && !comps_[0].hi.is_finite();
}

bool TimeSet::contains(const Rat& t) const {
  for (const Interval& c : comps_)
    if (c.contains(t)) return true;
  return false;
}

std::optional<Interval> TimeSet::component_at(const Rat& t) const {
  for (const Interval& c : comps_)
    if (c.contains(t)) return c;
  return std::nullopt;
}

TimeSet TimeSet::unite(const TimeSet& other) const {
  std::vector<Interval> parts = comps_;
  parts.insert(parts.end(), other.comps_.begin(), other.comps_.end());
  return TimeSet(std::move(parts));
}

TimeSet TimeSet::intersect(const TimeSet& other) const {
  std::vector<Interval> parts;
  for (const Interval& a : comps_)
    for (const Interval& b : other.comps_)
      if (auto iv = alextop::intersect(a, b)) parts.push_back(*iv);
  return TimeSet(std::move(parts));
}

TimeSet TimeSet::complement() const {
  std::vector<Interval> parts;
  Bound cursor = Bound::neg_inf();
  bool cursor_closed = false;
  for (const Interval& c : comps_) {
    if (auto gap = try_interval(cursor, c.lo, cursor_closed, !c.lo_closed))
      parts.push_back(*gap);
    cursor = c.hi;
    cursor_closed = !c.hi_closed;
  }
  if (auto gap = try_interval(cursor, Bound::pos_inf(), cursor_closed, false))
    parts.push_back(*gap);
  return TimeSet(std::move(parts));
}

TimeSet TimeSet::difference(const TimeSet& other) const {
  return intersect(other.complement());
}

TimeSet TimeSet::interior() const {
  // Canonical components are separated, so the interior distributes over them.
  std::vector<Interval> parts;
  for (const Interval& c : comps_)
    if (auto iv = try_interval(c.lo, c.hi, false, false)) parts.push_back(*iv);
  return TimeSet(std::move(parts));
}

bool TimeSet::subset_of(const TimeSet& other) const {
  return difference(other).is_empty();
}

std::string TimeSet::str() const {
  if (comps_.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (i) out += " u ";
    out += comps_[i].str();
  }
  return out;
}

}  // namespace alextop
