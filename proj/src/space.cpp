#include "alextop/space.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

namespace alextop {

bool FiniteSpace::is_open(Mask s) const {
  return std::binary_search(opens.begin(), opens.end(), s);
}

bool Preorder::antisymmetric() const {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && leq(y, x) && leq(x, y)) return false;
  return true;
}

Preorder Preorder::opposite() const {
  Preorder q;
  q.n = n;
  q.below.assign(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (leq(x, y)) q.below[x] |= Mask{1} << y;
  return q;
}

PointMap PointMap::identity(int n) {
  PointMap f;
  f.domain_size = f.codomain_size = n;
  f.image.resize(n);
  std::iota(f.image.begin(), f.image.end(), 0);
  return f;
}

bool PointMap::is_identity() const {
  if (domain_size != codomain_size) return false;
  for (int x = 0; x < domain_size; ++x)
    if (image[x] != x) return false;
  return true;
}

bool PointMap::is_bijection() const {
  if (domain_size != codomain_size) return false;
  Mask hit = 0;
  for (int x = 0; x < domain_size; ++x) hit |= Mask{1} << image[x];
  return popcount(hit) == domain_size;
}

PointMap PointMap::inverse() const {
  assert(is_bijection());
  PointMap g;
  g.domain_size = codomain_size;
  g.codomain_size = domain_size;
  g.image.resize(domain_size);
  for (int x = 0; x < domain_size; ++x) g.image[image[x]] = x;
  return g;
}

PointMap compose(const PointMap& g, const PointMap& f) {
  assert(f.codomain_size == g.domain_size);
  PointMap h;
  h.domain_size = f.domain_size;
  h.codomain_size = g.codomain_size;
  h.image.resize(f.domain_size);
  for (int x = 0; x < f.domain_size; ++x) h.image[x] = g.image[f.image[x]];
  return h;
}

FiniteSpace validate_space(std::vector<std::string> labels, std::vector<Mask> opens) {
  if (labels.empty())
    throw SpaceError(SpaceDefect::MissingEmptyOrFull, "ground set must be nonempty");
  {
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end())
      throw SpaceError(SpaceDefect::DuplicateLabel, "duplicate element label: " + *dup);
  }
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());

  const Mask fullm = (Mask{1} << labels.size()) - 1;
  for (Mask o : opens)
    if (o & ~fullm)
      throw std::invalid_argument("open set references an undeclared element");
  auto contains = [&](Mask s) {
    return std::binary_search(opens.begin(), opens.end(), s);
  };
  for (Mask a : opens)
    for (Mask b : opens) {
      if (!contains(a | b))
        throw SpaceError(SpaceDefect::NotClosedUnderUnion,
                         "opens not closed under union", a, b);
      if (!contains(a & b))
        throw SpaceError(SpaceDefect::NotClosedUnderIntersection,
                         "opens not closed under intersection", a, b);
    }
  if (!contains(0) || !contains(fullm))
    throw SpaceError(SpaceDefect::MissingEmptyOrFull,
                     "opens must contain the empty and the full subset");

  FiniteSpace s;
  s.labels = std::move(labels);
  s.opens = std::move(opens);
  return s;
}

Mask minimal_open_neighborhood(const FiniteSpace& space, int x) {
  Mask acc = space.full();
  for (Mask o : space.opens)
    if (bit(o, x)) acc &= o;
  return acc;
}

Preorder specialization_preorder(const FiniteSpace& space) {
  Preorder p;
  p.n = space.size();
  p.below.resize(p.n);
  for (int x = 0; x < p.n; ++x) p.below[x] = minimal_open_neighborhood(space, x);
  return p;
}

FiniteSpace topology_from_preorder(const Preorder& p, std::vector<std::string> labels) {
  if (labels.empty())
    for (int i = 0; i < p.n; ++i) labels.push_back(std::to_string(i));
  if (p.n > 20) throw BudgetError("topology_from_preorder: more than 20 points");

  FiniteSpace s;
  s.labels = std::move(labels);
  const Mask fullm = (Mask{1} << p.n) - 1;
  // S is open iff it is down-closed: x in S implies below[x] subset of S.
  for (Mask cand = 0; cand <= fullm; ++cand) {
    bool down = true;
    for (int x = 0; x < p.n && down; ++x)
      if (bit(cand, x) && (p.below[x] & ~cand)) down = false;
    if (down) s.opens.push_back(cand);
  }
  return s;
}

namespace {

bool definitional_T0(const FiniteSpace& space) {
  for (int x = 0; x < space.size(); ++x)
    for (int y = x + 1; y < space.size(); ++y) {
      bool separated = false;
      for (Mask o : space.opens)
        if (bit(o, x) != bit(o, y)) { separated = true; break; }
      if (!separated) return false;
    }
  return true;
}

bool definitional_T1(const FiniteSpace& space) {
  // For every ordered pair x != y, some open contains x and misses y.
  for (int x = 0; x < space.size(); ++x)
    for (int y = 0; y < space.size(); ++y) {
      if (x == y) continue;
      bool found = false;
      for (Mask o : space.opens)
        if (bit(o, x) && !bit(o, y)) { found = true; break; }
      if (!found) return false;
    }
  return true;
}

}  // namespace

bool is_discrete(const FiniteSpace& space) {
  return space.opens.size() == (std::size_t{1} << space.size());
}

bool is_T0(const FiniteSpace& space) {
  const bool by_def = definitional_T0(space);
  const bool by_order = specialization_preorder(space).antisymmetric();
  if (by_def != by_order)
    throw std::logic_error("T0 derivations disagree");
  return by_def;
}

bool is_T1(const FiniteSpace& space) {
  const bool by_def = definitional_T1(space);
  const bool by_discrete = is_discrete(space);
  if (by_def != by_discrete)
    throw std::logic_error("T1 derivations disagree");
  return by_def;
}

bool is_order_preserving(const FiniteSpace& src, const FiniteSpace& dst, const PointMap& f) {
  const Preorder ps = specialization_preorder(src);
  const Preorder pd = specialization_preorder(dst);
  for (int x = 0; x < src.size(); ++x)
    for (int y = 0; y < src.size(); ++y)
      if (ps.leq(y, x) && !pd.leq(f(y), f(x))) return false;
  return true;
}

bool is_continuous(const FiniteSpace& src, const FiniteSpace& dst, const PointMap& f) {
  bool by_preimage = true;
  for (Mask o : dst.opens) {
    Mask pre = 0;
    for (int x = 0; x < src.size(); ++x)
      if (bit(o, f(x))) pre |= Mask{1} << x;
    if (!src.is_open(pre)) { by_preimage = false; break; }
  }
  const bool by_order = is_order_preserving(src, dst, f);
  if (by_preimage != by_order)
    throw std::logic_error("continuity derivations disagree");
  return by_preimage;
}

std::vector<PointMap> enumerate_homeomorphisms(const FiniteSpace& space) {
  const int n = space.size();
  const Preorder p = specialization_preorder(space);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<PointMap> out;
  do {
    bool iso = true;
    for (int x = 0; x < n && iso; ++x)
      for (int y = 0; y < n && iso; ++y)
        if (p.leq(y, x) != p.leq(perm[y], perm[x])) iso = false;
    if (iso) {
      PointMap f;
      f.domain_size = f.codomain_size = n;
      f.image = perm;
      out.push_back(std::move(f));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<FiniteSpace> enumerate_topologies(int n) {
  if (n < 1 || n > 4) throw BudgetError("enumerate_topologies: n must be in 1..4");
  const Mask fullm = (Mask{1} << n) - 1;
  std::vector<Mask> middle;  // subsets strictly between empty and full
  for (Mask s = 1; s < fullm; ++s) middle.push_back(s);

  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));

  std::vector<FiniteSpace> out;
  const std::uint32_t families = std::uint32_t{1} << middle.size();
  for (std::uint32_t pick = 0; pick < families; ++pick) {
    std::uint32_t member = 0;  // bit s set iff subset-mask s belongs to the family
    member |= 1u << 0;
    member |= 1u << fullm;
    for (std::size_t i = 0; i < middle.size(); ++i)
      if ((pick >> i) & 1) member |= 1u << middle[i];

    bool closed = true;
    for (Mask a = 0; a <= fullm && closed; ++a) {
      if (!((member >> a) & 1)) continue;
      for (Mask b = a; b <= fullm && closed; ++b) {
        if (!((member >> b) & 1)) continue;
        if (!((member >> (a | b)) & 1) || !((member >> (a & b)) & 1)) closed = false;
      }
    }
    if (!closed) continue;

    FiniteSpace s;
    s.labels = labels;
    for (Mask a = 0; a <= fullm; ++a)
      if ((member >> a) & 1) s.opens.push_back(a);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace alextop
