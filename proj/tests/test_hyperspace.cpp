#include <doctest.h>

#include "alextop/hyperspace.hpp"
#include "helpers.hpp"

using namespace alextop;
using namespace alextop::testing;

namespace {

Mask hyper_set(const Hyperspace& h, std::initializer_list<Mask> base_subsets) {
  Mask out = 0;
  for (Mask s : base_subsets) out |= Mask{1} << h.point_index(s);
  return out;
}

}  // namespace

TEST_CASE("subbasic_meets filters hyperpoints meeting U") {
  const FiniteSpace base = discrete(2);
  // Carrier order: {1}, {2}, {1,2} (hyperpoint i has base mask i+1).
  CHECK(subbasic_meets(base, 0b01) == 0b101);
  CHECK(subbasic_meets(base, 0b00) == 0b000);
  CHECK(subbasic_meets(base, 0b11) == 0b111);
}

TEST_CASE("lower hyperspace on a 2-point base") {
  const Hyperspace h = build_hyperspace(discrete(2), HyperspaceVariant::Lower);
  CHECK(h.space.labels == std::vector<std::string>{"{1}", "{2}", "{1,2}"});
  // Opens: {}, {{1,2}}, {{1},{1,2}}, {{2},{1,2}}, everything.
  CHECK(h.space.opens == std::vector<Mask>{0b000, 0b100, 0b101, 0b110, 0b111});
}

TEST_CASE("upper hyperspace on a 2-point base") {
  const Hyperspace h = build_hyperspace(discrete(2), HyperspaceVariant::Upper);
  CHECK(h.space.opens == std::vector<Mask>{0b000, 0b001, 0b010, 0b011, 0b111});
}

TEST_CASE("strong lower equals lower on finite bases") {
  for (int n = 1; n <= 3; ++n) {
    const Hyperspace l = build_hyperspace(discrete(n), HyperspaceVariant::Lower);
    const Hyperspace sl = build_hyperspace(discrete(n), HyperspaceVariant::StrongLower);
    CHECK(compare_topologies(sl.space, l.space) == TopologyOrder::Equal);
  }
}

TEST_CASE("build_hyperspace rejects non-discrete bases and oversized bases") {
  CHECK_THROWS_AS(build_hyperspace(sierpinski(), HyperspaceVariant::Lower), NotDiscreteError);
}

TEST_CASE("minimal hyper neighborhoods") {
  const Hyperspace sl2 = build_hyperspace(discrete(2), HyperspaceVariant::StrongLower);
  CHECK(minimal_hyper_neighborhood(sl2, 0b01) == hyper_set(sl2, {0b01, 0b11}));
  const Hyperspace up2 = build_hyperspace(discrete(2), HyperspaceVariant::Upper);
  CHECK(minimal_hyper_neighborhood(up2, 0b11) == hyper_set(up2, {0b01, 0b10, 0b11}));
  const Hyperspace sl3 = build_hyperspace(discrete(3), HyperspaceVariant::StrongLower);
  CHECK(minimal_hyper_neighborhood(sl3, 0b011) == hyper_set(sl3, {0b011, 0b111}));
  CHECK_THROWS_AS(minimal_hyper_neighborhood(sl2, 0), std::invalid_argument);
}

TEST_CASE("hyper order is reverse inclusion for strong lower, inclusion for upper") {
  const Hyperspace sl = build_hyperspace(discrete(2), HyperspaceVariant::StrongLower);
  const Preorder p = hyper_order(sl);
  CHECK(p.leq(sl.point_index(0b11), sl.point_index(0b01)));  // {1,2} <= {1}
  CHECK(p.leq(sl.point_index(0b11), sl.point_index(0b10)));
  CHECK(!p.leq(sl.point_index(0b01), sl.point_index(0b11)));
  CHECK(p.antisymmetric());

  const Hyperspace up = build_hyperspace(discrete(2), HyperspaceVariant::Upper);
  const Preorder q = hyper_order(up);
  CHECK(q.leq(up.point_index(0b01), up.point_index(0b11)));  // {1} <= {1,2}
  CHECK(q.leq(up.point_index(0b10), up.point_index(0b11)));
  CHECK(q == p.opposite());
}

TEST_CASE("intersection of all nonempty lower opens is the full base set") {
  for (int n = 1; n <= 3; ++n) {
    const Hyperspace h = build_hyperspace(discrete(n), HyperspaceVariant::Lower);
    CHECK(intersection_of_all_opens(h) == Mask{1} << h.point_index(h.base.full()));
  }
  const Hyperspace up = build_hyperspace(discrete(2), HyperspaceVariant::Upper);
  CHECK_THROWS_AS(intersection_of_all_opens(up), std::invalid_argument);
}

TEST_CASE("compare_topologies cases") {
  const Hyperspace l = build_hyperspace(discrete(2), HyperspaceVariant::Lower);
  const Hyperspace u = build_hyperspace(discrete(2), HyperspaceVariant::Upper);
  CHECK(compare_topologies(l.space, u.space) == TopologyOrder::Incomparable);
  CHECK(compare_topologies(l.space, l.space) == TopologyOrder::Equal);

  FiniteSpace coarse = validate_space(l.space.labels, {0b000, 0b111});
  CHECK(compare_topologies(coarse, l.space) == TopologyOrder::StrictlyCoarser);
  CHECK(compare_topologies(l.space, coarse) == TopologyOrder::StrictlyFiner);
  CHECK_THROWS_AS(compare_topologies(l.space, sierpinski()), CarrierMismatchError);
}

TEST_CASE("embedding of the Sierpinski space") {
  const Embedding e = embed_into_upper(sierpinski());
  CHECK(e.hyper.variant == HyperspaceVariant::Upper);
  CHECK(e.map.image[0] == e.hyper.point_index(0b01));  // a -> {a}
  CHECK(e.map.image[1] == e.hyper.point_index(0b11));  // b -> {a,b}
  CHECK_THROWS_AS(embed_into_upper(indiscrete_pair()), NotT0Error);
}

TEST_CASE("embedding is injective and a subspace homeomorphism for all small T0 spaces") {
  for (int n = 1; n <= 3; ++n)
    for (const FiniteSpace& s : enumerate_topologies(n)) {
      if (!is_T0(s)) continue;
      const Embedding e = embed_into_upper(s);
      // Injective.
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) CHECK(e.map.image[x] != e.map.image[y]);
      // Order embedding: x <= y iff U_x subset U_y.
      const Preorder p = specialization_preorder(s);
      const Preorder q = hyper_order(e.hyper);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          CHECK(p.leq(x, y) == q.leq(e.map.image[x], e.map.image[y]));
      // Subspace topology on the image transported back equals the original.
      std::vector<Mask> induced;
      for (Mask o : e.hyper.space.opens) {
        Mask back = 0;
        for (int x = 0; x < n; ++x)
          if (bit(o, e.map.image[x])) back |= Mask{1} << x;
        induced.push_back(back);
      }
      std::sort(induced.begin(), induced.end());
      induced.erase(std::unique(induced.begin(), induced.end()), induced.end());
      CHECK(induced == s.opens);
    }
}

TEST_CASE("variant names round-trip") {
  for (HyperspaceVariant v : {HyperspaceVariant::Lower, HyperspaceVariant::StrongLower,
                              HyperspaceVariant::Upper, HyperspaceVariant::FiniteLower,
                              HyperspaceVariant::FiniteUpper})
    CHECK(parse_variant(variant_name(v)) == v);
  CHECK(parse_variant("sl") == HyperspaceVariant::StrongLower);
  CHECK_THROWS_AS(parse_variant("vietoris"), std::invalid_argument);
}
