#pragma once

#include <string>
#include <vector>

#include "alextop/space.hpp"

namespace alextop {

/// On a finite base all five carriers coincide with the nonempty subsets; the
/// tag records which construction produced the topology.
enum class HyperspaceVariant { Lower, StrongLower, Upper, FiniteLower, FiniteUpper };

std::string variant_name(HyperspaceVariant v);
HyperspaceVariant parse_variant(const std::string& name);

/// A finite space whose points are the nonempty subsets of a discrete base.
/// carrier[i] is the base-subset mask of hyperpoint i; hyperpoints are ordered
/// by ascending mask, so hyperpoint i has mask i + 1.
struct Hyperspace {
  FiniteSpace base;
  HyperspaceVariant variant = HyperspaceVariant::Lower;
  FiniteSpace space;
  std::vector<Mask> carrier;

  int point_index(Mask subset_of_base) const;  // -1 if not a carrier point
};

struct NotDiscreteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotT0Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CarrierMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Set of hyperpoints meeting U: the subbasic open L_U. Returned as a mask
/// over hyperpoint indices of the would-be hyperspace on `base`.
Mask subbasic_meets(const FiniteSpace& base, Mask u);

/// Builds the hyperspace topology. Lower/StrongLower generate from the L_U
/// subbase (intersections of arbitrary subfamilies, then all unions; on a
/// finite base the two variants collapse). Upper is the opposite-order
/// topology of StrongLower, cross-checked against the direct subbase
/// {nonempty subsets of U, per open U}. The Finite* variants restrict to the
/// finite-cardinality carrier, which here is the whole carrier.
Hyperspace build_hyperspace(const FiniteSpace& base, HyperspaceVariant variant);

/// Minimal open neighborhood of hyperpoint C inside the hyperspace, as a mask
/// over hyperpoint indices. C is given as a base-subset mask.
Mask minimal_hyper_neighborhood(const Hyperspace& h, Mask c);

Preorder hyper_order(const Hyperspace& h);

/// Intersection over all nonempty opens; defined for the lower variants,
/// where it is the singleton {full base set}.
Mask intersection_of_all_opens(const Hyperspace& h);

enum class TopologyOrder { Equal, StrictlyFiner, StrictlyCoarser, Incomparable };

std::string topology_order_name(TopologyOrder o);

/// Set comparison of open families; requires identical carriers (labels).
TopologyOrder compare_topologies(const FiniteSpace& a, const FiniteSpace& b);

struct Embedding {
  Hyperspace hyper;  // Upper hyperspace over the discrete base on the same elements
  PointMap map;      // x -> index of U_x in hyper.space
};

/// x -> U_x into the upper hyperspace of the discrete space on the same
/// elements; injective and a homeomorphism onto its image. Throws NotT0Error
/// when two points share a minimal neighborhood.
Embedding embed_into_upper(const FiniteSpace& x_space);

}  // namespace alextop
