#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace alextop {

/// A subset of the ground set, one bit per element index.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return __builtin_popcount(m); }
inline bool bit(Mask m, int i) { return (m >> i) & 1u; }

/// A finite topological space: ordered element labels plus the full family of
/// open sets as bitmasks over the element index range. Finiteness makes the
/// Alexandroff intersection axiom equivalent to closure under pairwise
/// union/intersection, which is what validation enforces.
struct FiniteSpace {
  std::vector<std::string> labels;
  std::vector<Mask> opens;  // sorted ascending, no duplicates

  int size() const { return static_cast<int>(labels.size()); }
  Mask full() const { return (Mask{1} << size()) - 1; }
  bool is_open(Mask s) const;

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.labels == b.labels && a.opens == b.opens;
  }
};

/// Reflexive transitive relation on n points. below[x] is the set of y with
/// y <= x; for the specialization preorder of a space this is exactly the
/// minimal open neighborhood of x.
struct Preorder {
  int n = 0;
  std::vector<Mask> below;

  bool leq(int y, int x) const { return bit(below[x], y); }
  bool antisymmetric() const;
  Preorder opposite() const;

  friend bool operator==(const Preorder& a, const Preorder& b) {
    return a.n == b.n && a.below == b.below;
  }
};

/// Total map between element index ranges.
struct PointMap {
  int domain_size = 0;
  int codomain_size = 0;
  std::vector<int> image;

  int operator()(int x) const { return image[x]; }
  static PointMap identity(int n);
  bool is_identity() const;
  bool is_bijection() const;
  PointMap inverse() const;  // requires bijection

  friend bool operator==(const PointMap& a, const PointMap& b) {
    return a.domain_size == b.domain_size && a.codomain_size == b.codomain_size &&
           a.image == b.image;
  }
};

/// g after f.
PointMap compose(const PointMap& g, const PointMap& f);

enum class SpaceDefect {
  MissingEmptyOrFull,
  NotClosedUnderUnion,
  NotClosedUnderIntersection,
  DuplicateLabel,
};

struct SpaceError : std::runtime_error {
  SpaceDefect defect;
  Mask witness_a = 0;
  Mask witness_b = 0;
  SpaceError(SpaceDefect d, std::string what, Mask a = 0, Mask b = 0)
      : std::runtime_error(std::move(what)), defect(d), witness_a(a), witness_b(b) {}
};

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Checks the topology axioms and returns the canonical FiniteSpace.
/// Throws SpaceError naming the first violated axiom with a witness pair.
FiniteSpace validate_space(std::vector<std::string> labels, std::vector<Mask> opens);

/// y <= x iff y lies in every open set containing x.
Preorder specialization_preorder(const FiniteSpace& space);

/// Opens are exactly the down-closed subsets of the preorder.
FiniteSpace topology_from_preorder(const Preorder& p, std::vector<std::string> labels = {});

/// Intersection of all opens containing x; open itself and equal to {y : y <= x}.
Mask minimal_open_neighborhood(const FiniteSpace& space, int x);

/// Each separation check is computed both definitionally and through the
/// specialization order; the two derivations are asserted to agree.
bool is_T0(const FiniteSpace& space);
bool is_T1(const FiniteSpace& space);
bool is_discrete(const FiniteSpace& space);

bool is_order_preserving(const FiniteSpace& src, const FiniteSpace& dst, const PointMap& f);

/// Preimage-openness of every open of dst; asserted to coincide with
/// order preservation of f.
bool is_continuous(const FiniteSpace& src, const FiniteSpace& dst, const PointMap& f);

/// All self-homeomorphisms, computed as automorphisms of the specialization
/// preorder, in lexicographic image order.
std::vector<PointMap> enumerate_homeomorphisms(const FiniteSpace& space);

/// Every topology on an n-element set, each exactly once, by direct scan of
/// all families of subsets closed under union and intersection. Capped at
/// n <= 4 (355 topologies); throws BudgetError beyond that.
std::vector<FiniteSpace> enumerate_topologies(int n);

}  // namespace alextop
