#include "alextop/flow.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <set>
#include <stdexcept>

namespace alextop {

Interval StepSchedule::piece_interval(int i) const {
  const int k = static_cast<int>(breakpoints.size());
  assert(i >= 0 && i < 2 * k + 1);
  if (i % 2 == 1) return Interval::point(breakpoints[(i - 1) / 2]);
  const int seg = i / 2;
  Interval out;
  out.lo = seg == 0 ? Bound::neg_inf() : Bound::finite(breakpoints[seg - 1]);
  out.hi = seg == k ? Bound::pos_inf() : Bound::finite(breakpoints[seg]);
  out.lo_closed = false;
  out.hi_closed = false;
  return out;
}

int StepSchedule::piece_containing(const Rat& t) const {
  const int k = static_cast<int>(breakpoints.size());
  for (int i = 0; i < k; ++i) {
    if (t < breakpoints[i]) return 2 * i;
    if (t == breakpoints[i]) return 2 * i + 1;
  }
  return 2 * k;
}

const FlowWitness* FlowVerdict::first_witness() const {
  if (!identity_at_zero.pass) return &*identity_at_zero.witness;
  if (!group_law.pass) return &*group_law.witness;
  if (!continuity.pass) return &*continuity.witness;
  return nullptr;
}

void check_candidate_wellformed(const FlowCandidate& c) {
  const int n = c.space.size();
  if (c.maps.size() != c.map_names.size())
    throw std::invalid_argument("map table and name table sizes differ");
  for (const PointMap& m : c.maps)
    if (m.domain_size != n || m.codomain_size != n ||
        static_cast<int>(m.image.size()) != n)
      throw std::invalid_argument("map is not a total self-map of the space");
  const int k = static_cast<int>(c.schedule.breakpoints.size());
  if (c.schedule.piece_count() != 2 * k + 1)
    throw std::invalid_argument("schedule must have 2k+1 pieces");
  for (int i = 0; i + 1 < k; ++i)
    if (!(c.schedule.breakpoints[i] < c.schedule.breakpoints[i + 1]))
      throw std::invalid_argument("breakpoints must be strictly increasing");
  for (int p : c.schedule.pieces)
    if (p < 0 || p >= static_cast<int>(c.maps.size()))
      throw std::invalid_argument("piece references an unknown map");
}

int eval(const FlowCandidate& c, const Rat& t, int x) {
  return c.piece_map(c.schedule.piece_containing(t))(x);
}

TimeSet times_mapping_into(const FlowCandidate& c, int x, Mask v) {
  std::vector<Interval> parts;
  for (int i = 0; i < c.schedule.piece_count(); ++i)
    if (bit(v, c.piece_map(i)(x))) parts.push_back(c.schedule.piece_interval(i));
  return TimeSet(std::move(parts));
}

AxiomResult check_identity_at_zero(const FlowCandidate& c) {
  const PointMap& m = c.piece_map(c.schedule.piece_containing(Rat(0)));
  for (int x = 0; x < c.space.size(); ++x)
    if (m(x) != x) {
      FlowWitness w;
      w.axiom = "identity_at_zero";
      w.t = Rat(0);
      w.x = x;
      w.detail = "phi(0," + c.space.labels[x] + ") = " + c.space.labels[m(x)];
      return {false, w};
    }
  return {};
}

namespace {

struct GroupLawViolation {
  int i, j, k;  // pieces: s in P_i, t in P_j, s+t on P_k
};

/// The symbolic core: sumsets of piece pairs must land only on pieces
/// carrying the composed map. Witness-free, so search can call it hot.
std::optional<GroupLawViolation> find_group_law_violation(const FlowCandidate& c) {
  const int pieces = c.schedule.piece_count();
  for (int i = 0; i < pieces; ++i) {
    const Interval pi = c.schedule.piece_interval(i);
    for (int j = 0; j < pieces; ++j) {
      const Interval sumset = sum(pi, c.schedule.piece_interval(j));
      const PointMap composed = compose(c.piece_map(i), c.piece_map(j));
      for (int k = 0; k < pieces; ++k) {
        if (!intersect(c.schedule.piece_interval(k), sumset)) continue;
        if (c.piece_map(k).image != composed.image) return GroupLawViolation{i, j, k};
      }
    }
  }
  return std::nullopt;
}

/// Nicest witness pair for a law already known to fail: scan small integers
/// first, then growing denominators, preferring small symmetric positive
/// times so the report reads like a hand-written counterexample.
std::pair<Rat, Rat> nice_group_law_witness(const FlowCandidate& c,
                                           const GroupLawViolation& v) {
  auto violates = [&](const Rat& s, const Rat& t) {
    for (int x = 0; x < c.space.size(); ++x)
      if (eval(c, s + t, x) != eval(c, s, eval(c, t, x))) return true;
    return false;
  };
  std::optional<std::pair<Rat, Rat>> best;
  auto key = [](const std::pair<Rat, Rat>& p) {
    const Rat ma = p.first.abs(), mb = p.second.abs();
    return std::tuple(ma < mb ? mb : ma, (p.first - p.second).abs(),
                      p.first < Rat(0) ? 1 : 0, p.first);
  };
  for (std::int64_t d : {1, 2, 4, 3, 6, 8, 16}) {
    for (std::int64_t m = -8 * d; m <= 8 * d; ++m)
      for (std::int64_t n = -8 * d; n <= 8 * d; ++n) {
        const std::pair<Rat, Rat> cand{Rat(m, d), Rat(n, d)};
        if (!violates(cand.first, cand.second)) continue;
        if (!best || key(cand) < key(*best)) best = cand;
      }
    if (best) return *best;
  }
  // Constructive fallback from the symbolic triple: pick u on the violating
  // overlap, then s in P_i with u - s in P_j.
  const Interval pi = c.schedule.piece_interval(v.i);
  const Interval pj = c.schedule.piece_interval(v.j);
  const auto overlap = intersect(c.schedule.piece_interval(v.k), sum(pi, pj));
  assert(overlap);
  const Rat u = pick_point(*overlap);
  const auto range = intersect(pi, sum(Interval::point(u), pj.reflected()));
  assert(range);
  const Rat s = pick_point(*range);
  return {s, u - s};
}

}  // namespace

AxiomResult check_group_law(const FlowCandidate& c) {
  const auto violation = find_group_law_violation(c);
  if (!violation) return {};
  const auto [s, t] = nice_group_law_witness(c, *violation);
  const int at = c.schedule.piece_containing(s + t);
  const PointMap composed = compose(c.piece_map(c.schedule.piece_containing(s)),
                                    c.piece_map(c.schedule.piece_containing(t)));
  int bad_x = 0;
  while (c.piece_map(at)(bad_x) == composed(bad_x)) ++bad_x;
  FlowWitness w;
  w.axiom = "group_law";
  w.s = s;
  w.t = t;
  w.x = bad_x;
  w.detail = "phi(" + (s + t).str() + "," + c.space.labels[bad_x] + ") = " +
             c.space.labels[c.piece_map(at)(bad_x)] + " but phi(" + s.str() +
             ",phi(" + t.str() + ",.)) sends it to " + c.space.labels[composed(bad_x)];
  return {false, w};
}

AxiomResult check_continuity(const FlowCandidate& c) {
  const int n = c.space.size();
  const Preorder order = specialization_preorder(c.space);
  std::set<Mask> base_opens;  // the minimal-open base
  for (int v = 0; v < n; ++v) base_opens.insert(order.below[v]);

  for (Mask v : base_opens) {
    std::vector<TimeSet> w(n);
    for (int y = 0; y < n; ++y) w[y] = times_mapping_into(c, y, v);
    for (int x = 0; x < n; ++x) {
      TimeSet meet = TimeSet::all();
      for (int y = 0; y < n; ++y)
        if (bit(order.below[x], y)) meet = meet.intersect(w[y]);
      const TimeSet gap = w[x].difference(meet.interior());
      if (!gap.is_empty()) {
        FlowWitness wit;
        wit.axiom = "continuity";
        wit.t = pick_point(gap.components().front());
        wit.x = x;
        wit.open_set = v;
        wit.detail = "phi is not open into V at (" + wit.t->str() + "," +
                     c.space.labels[x] + "); W_x = " + w[x].str() +
                     ", required interior = " + meet.interior().str();
        return {false, wit};
      }
    }
  }
  return {};
}

namespace {

/// Bijectivity of piece maps and the phi_{-t} = phi_t^{-1} pairing, derived
/// once identity and group law hold; reported in group-law terms.
AxiomResult check_inverse_law(const FlowCandidate& c) {
  const int pieces = c.schedule.piece_count();
  for (int i = 0; i < pieces; ++i) {
    const Interval pi = c.schedule.piece_interval(i);
    const PointMap& mi = c.piece_map(i);
    if (!mi.is_bijection()) {
      FlowWitness w;
      w.axiom = "group_law";
      w.t = pick_point(pi);
      w.detail = "piece map at t = " + w.t->str() + " is not a bijection";
      return {false, w};
    }
    const PointMap inv = mi.inverse();
    for (int j = 0; j < pieces; ++j) {
      auto overlap = intersect(c.schedule.piece_interval(j), pi.reflected());
      if (!overlap) continue;
      if (c.piece_map(j).image == inv.image) continue;
      FlowWitness w;
      w.axiom = "group_law";
      w.t = pick_point(*overlap);
      w.s = -*w.t;
      w.detail = "piece map at " + w.t->str() + " is not the inverse of the piece map at " +
                 w.s->str();
      return {false, w};
    }
  }
  return {};
}

}  // namespace

FlowVerdict is_flow(const FlowCandidate& c) {
  check_candidate_wellformed(c);
  FlowVerdict v;
  v.identity_at_zero = check_identity_at_zero(c);
  v.group_law = check_group_law(c);
  if (v.identity_at_zero.pass && v.group_law.pass) v.group_law = check_inverse_law(c);
  v.continuity = check_continuity(c);
  return v;
}

bool is_trivial(const FlowCandidate& c) {
  for (int i = 0; i < c.schedule.piece_count(); ++i)
    if (!c.piece_map(i).is_identity()) return false;
  return true;
}

StabilityRadius local_stability_radius(const FlowCandidate& c, int x) {
  const Mask ux = minimal_open_neighborhood(c.space, x);
  TimeSet stay = TimeSet::all();
  for (int y = 0; y < c.space.size(); ++y)
    if (bit(ux, y)) stay = stay.intersect(times_mapping_into(c, y, ux));
  if (stay.is_all()) return {StabilityRadius::Kind::Unbounded, Rat{}};
  auto comp = stay.component_at(Rat(0));
  if (!comp) return {StabilityRadius::Kind::None, Rat{}};
  std::optional<Rat> r;
  if (comp->lo.is_finite()) r = -comp->lo.value;
  if (comp->hi.is_finite() && (!r || comp->hi.value < *r)) r = comp->hi.value;
  if (!r) return {StabilityRadius::Kind::Unbounded, Rat{}};
  if (r->is_zero() || *r < Rat(0)) return {StabilityRadius::Kind::None, Rat{}};
  return {StabilityRadius::Kind::Finite, *r};
}

FlowCandidate swap_candidate(const FiniteSpace& space, int x, int y) {
  if (x == y) throw std::invalid_argument("swap_candidate needs two distinct points");
  FlowCandidate c;
  c.space = space;
  c.map_names = {"id", "swap"};
  PointMap swap = PointMap::identity(space.size());
  swap.image[x] = y;
  swap.image[y] = x;
  c.maps = {PointMap::identity(space.size()), std::move(swap)};
  c.schedule.breakpoints = {Rat(0)};
  c.schedule.pieces = {1, 0, 1};
  return c;
}

std::string semantic_key(const FlowCandidate& c) {
  std::vector<Rat> bps = c.schedule.breakpoints;
  std::vector<std::vector<int>> imgs;
  for (int i = 0; i < c.schedule.piece_count(); ++i) imgs.push_back(c.piece_map(i).image);
  // Drop breakpoints whose three surrounding pieces act identically.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t b = 0; b < bps.size(); ++b) {
      const std::size_t i = 2 * b;
      if (imgs[i] == imgs[i + 1] && imgs[i + 1] == imgs[i + 2]) {
        bps.erase(bps.begin() + static_cast<long>(b));
        imgs.erase(imgs.begin() + static_cast<long>(i) + 1,
                   imgs.begin() + static_cast<long>(i) + 3);
        changed = true;
        break;
      }
    }
  }
  std::string key;
  for (const Rat& b : bps) key += b.str() + ";";
  key += "|";
  for (const auto& img : imgs) {
    for (int v : img) key += std::to_string(v) + ",";
    key += ";";
  }
  return key;
}

std::vector<FlowCandidate> search_flows(const FiniteSpace& space, const FlowSearchOptions& opt) {
  std::vector<PointMap> maps;
  std::vector<std::string> names;
  if (opt.homeo_only) {
    maps = enumerate_homeomorphisms(space);
  } else {
    const int n = space.size();
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= n;
    for (long long code = 0; code < total; ++code) {
      PointMap f;
      f.domain_size = f.codomain_size = n;
      long long rest = code;
      for (int i = 0; i < n; ++i) { f.image.push_back(static_cast<int>(rest % n)); rest /= n; }
      maps.push_back(std::move(f));
    }
  }
  for (std::size_t i = 0; i < maps.size(); ++i) names.push_back("m" + std::to_string(i));

  std::vector<Rat> pool = opt.pool;
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  const int p = static_cast<int>(pool.size());
  const int m = std::min(opt.max_breakpoints, p);

  // Pre-count candidates against the budget.
  double total_candidates = 0;
  std::vector<std::vector<int>> subsets;
  for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << p); ++pick) {
    if (popcount(pick) > m) continue;
    std::vector<int> s;
    for (int i = 0; i < p; ++i)
      if (bit(pick, i)) s.push_back(i);
    total_candidates += std::pow(static_cast<double>(maps.size()),
                                 static_cast<double>(2 * s.size() + 1));
    subsets.push_back(std::move(s));
  }
  if (total_candidates > static_cast<double>(opt.budget))
    throw BudgetError("search_flows: candidate count exceeds budget");
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  std::vector<FlowCandidate> found;
  std::set<std::string> seen;
  for (const auto& subset : subsets) {
    FlowCandidate c;
    c.space = space;
    c.map_names = names;
    c.maps = maps;
    for (int i : subset) c.schedule.breakpoints.push_back(pool[i]);
    const int pieces = 2 * static_cast<int>(subset.size()) + 1;
    c.schedule.pieces.assign(pieces, 0);
    // Odometer over map assignments.
    auto passes_fast = [](const FlowCandidate& cand) {
      if (!cand.piece_map(cand.schedule.piece_containing(Rat(0))).is_identity())
        return false;
      if (find_group_law_violation(cand)) return false;
      if (!check_continuity(cand).pass) return false;
      return check_inverse_law(cand).pass;
    };
    for (;;) {
      if (passes_fast(c)) {
        const std::string key = semantic_key(c);
        if (seen.insert(key).second) found.push_back(c);
      }
      int pos = 0;
      while (pos < pieces) {
        if (++c.schedule.pieces[pos] < static_cast<int>(maps.size())) break;
        c.schedule.pieces[pos] = 0;
        ++pos;
      }
      if (pos == pieces) break;
    }
  }
  return found;
}

}  // namespace alextop
