#include "alextop/hyperspace.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace alextop {

std::string variant_name(HyperspaceVariant v) {
  switch (v) {
    case HyperspaceVariant::Lower: return "lower";
    case HyperspaceVariant::StrongLower: return "strong_lower";
    case HyperspaceVariant::Upper: return "upper";
    case HyperspaceVariant::FiniteLower: return "finite_lower";
    case HyperspaceVariant::FiniteUpper: return "finite_upper";
  }
  throw std::logic_error("unreachable");
}

HyperspaceVariant parse_variant(const std::string& name) {
  if (name == "lower") return HyperspaceVariant::Lower;
  if (name == "sl" || name == "strong_lower") return HyperspaceVariant::StrongLower;
  if (name == "upper") return HyperspaceVariant::Upper;
  if (name == "fl" || name == "finite_lower") return HyperspaceVariant::FiniteLower;
  if (name == "fu" || name == "finite_upper") return HyperspaceVariant::FiniteUpper;
  throw std::invalid_argument("unknown hyperspace variant: " + name);
}

int Hyperspace::point_index(Mask subset_of_base) const {
  if (subset_of_base == 0 || subset_of_base > base.full()) return -1;
  return static_cast<int>(subset_of_base) - 1;
}

Mask subbasic_meets(const FiniteSpace& base, Mask u) {
  const Mask fullm = base.full();
  Mask out = 0;
  for (Mask f = 1; f <= fullm; ++f)
    if (f & u) out |= Mask{1} << (f - 1);
  return out;
}

namespace {

std::string subset_label(const FiniteSpace& base, Mask s) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < base.size(); ++i)
    if (bit(s, i)) {
      if (!first) out += ",";
      out += base.labels[i];
      first = false;
    }
  return out + "}";
}

/// Topology generated by a subbase: close under pairwise intersection, then
/// under pairwise union. On a finite carrier this yields all unions of finite
/// intersections, which coincides with unions of arbitrary intersections.
std::set<Mask> generate_topology(const std::vector<Mask>& subbase, Mask carrier_full) {
  std::set<Mask> family(subbase.begin(), subbase.end());
  family.insert(0);
  family.insert(carrier_full);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Mask> cur(family.begin(), family.end());
    for (Mask a : cur)
      for (Mask b : cur)
        if (family.insert(a & b).second) grew = true;
  }
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Mask> cur(family.begin(), family.end());
    for (Mask a : cur)
      for (Mask b : cur)
        if (family.insert(a | b).second) grew = true;
  }
  return family;
}

}  // namespace

Hyperspace build_hyperspace(const FiniteSpace& base, HyperspaceVariant variant) {
  if (!is_discrete(base))
    throw NotDiscreteError("hyperspace base must be discrete");
  if (base.size() > 4)
    throw BudgetError("hyperspace base capped at 4 points");

  Hyperspace h;
  h.base = base;
  h.variant = variant;
  const Mask base_full = base.full();
  const int carrier_size = static_cast<int>(base_full);  // 2^n - 1 hyperpoints
  const Mask carrier_full = (Mask{1} << carrier_size) - 1;

  std::vector<std::string> labels;
  for (Mask f = 1; f <= base_full; ++f) {
    h.carrier.push_back(f);
    labels.push_back(subset_label(base, f));
  }

  const bool lower_like = variant == HyperspaceVariant::Lower ||
                          variant == HyperspaceVariant::StrongLower ||
                          variant == HyperspaceVariant::FiniteLower;

  std::set<Mask> family;
  if (lower_like) {
    std::vector<Mask> subbase;
    for (Mask u : base.opens) subbase.push_back(subbasic_meets(base, u));
    family = generate_topology(subbase, carrier_full);
  } else {
    // Opposite order of the strong-lower specialization preorder.
    Hyperspace sl = build_hyperspace(base, HyperspaceVariant::StrongLower);
    const Preorder opp = specialization_preorder(sl.space).opposite();
    FiniteSpace by_order = topology_from_preorder(opp, labels);
    // Direct route: per base open U, the set of nonempty subsets of U.
    std::vector<Mask> subbase;
    for (Mask u : base.opens) {
      Mask inside = 0;
      for (Mask f = 1; f <= base_full; ++f)
        if ((f & ~u) == 0) inside |= Mask{1} << (f - 1);
      subbase.push_back(inside);
    }
    std::set<Mask> direct = generate_topology(subbase, carrier_full);
    if (std::vector<Mask>(direct.begin(), direct.end()) != by_order.opens)
      throw std::logic_error("upper hyperspace: order route and subbase route disagree");
    family.insert(by_order.opens.begin(), by_order.opens.end());
  }

  h.space = validate_space(std::move(labels),
                           std::vector<Mask>(family.begin(), family.end()));
  return h;
}

Mask minimal_hyper_neighborhood(const Hyperspace& h, Mask c) {
  const int idx = h.point_index(c);
  if (idx < 0) throw std::invalid_argument("hyperpoint must be a nonempty subset of the base");
  return minimal_open_neighborhood(h.space, idx);
}

Preorder hyper_order(const Hyperspace& h) { return specialization_preorder(h.space); }

Mask intersection_of_all_opens(const Hyperspace& h) {
  if (h.variant == HyperspaceVariant::Upper || h.variant == HyperspaceVariant::FiniteUpper)
    throw std::invalid_argument("intersection_of_all_opens applies to the lower variants");
  Mask acc = h.space.full();
  for (Mask o : h.space.opens)
    if (o != 0) acc &= o;
  return acc;
}

std::string topology_order_name(TopologyOrder o) {
  switch (o) {
    case TopologyOrder::Equal: return "equal";
    case TopologyOrder::StrictlyFiner: return "strictly_finer";
    case TopologyOrder::StrictlyCoarser: return "strictly_coarser";
    case TopologyOrder::Incomparable: return "incomparable";
  }
  throw std::logic_error("unreachable");
}

TopologyOrder compare_topologies(const FiniteSpace& a, const FiniteSpace& b) {
  if (a.labels != b.labels)
    throw CarrierMismatchError("compare_topologies: carriers differ");
  const bool a_in_b = std::includes(b.opens.begin(), b.opens.end(),
                                    a.opens.begin(), a.opens.end());
  const bool b_in_a = std::includes(a.opens.begin(), a.opens.end(),
                                    b.opens.begin(), b.opens.end());
  if (a_in_b && b_in_a) return TopologyOrder::Equal;
  if (b_in_a) return TopologyOrder::StrictlyFiner;
  if (a_in_b) return TopologyOrder::StrictlyCoarser;
  return TopologyOrder::Incomparable;
}

Embedding embed_into_upper(const FiniteSpace& x_space) {
  const int n = x_space.size();
  std::vector<Mask> minimal(n);
  for (int x = 0; x < n; ++x) minimal[x] = minimal_open_neighborhood(x_space, x);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (minimal[x] == minimal[y])
        throw NotT0Error("embedding requires T0: " + x_space.labels[x] + " and " +
                         x_space.labels[y] + " share their minimal neighborhood");

  FiniteSpace discrete;
  discrete.labels = x_space.labels;
  for (Mask s = 0; s <= x_space.full(); ++s) discrete.opens.push_back(s);

  Embedding e;
  e.hyper = build_hyperspace(discrete, HyperspaceVariant::Upper);
  e.map.domain_size = n;
  e.map.codomain_size = static_cast<int>(e.hyper.carrier.size());
  for (int x = 0; x < n; ++x) e.map.image.push_back(e.hyper.point_index(minimal[x]));
  return e;
}

}  // namespace alextop
