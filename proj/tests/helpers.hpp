#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "alextop/space.hpp"

namespace alextop::testing {

inline FiniteSpace sierpinski() {
  return validate_space({"a", "b"}, {0b00, 0b01, 0b11});
}

inline FiniteSpace indiscrete_pair() {
  return validate_space({"x", "y"}, {0b00, 0b11});
}

inline FiniteSpace discrete(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  std::vector<Mask> opens;
  for (Mask s = 0; s < (Mask{1} << n); ++s) opens.push_back(s);
  return validate_space(labels, opens);
}

inline FiniteSpace chain(int n) {
  std::vector<std::string> labels;
  std::vector<Mask> opens{0};
  Mask acc = 0;
  for (int i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    acc |= Mask{1} << i;
    opens.push_back(acc);
  }
  return validate_space(labels, opens);
}

/// Independent oracle: all partial orders on n labeled points, by direct scan
/// of the off-diagonal relation bits.
inline long count_partial_orders(int n) {
  const int offdiag = n * (n - 1);
  long count = 0;
  for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << offdiag); ++pick) {
    bool rel[4][4] = {};
    int k = 0;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (x == y) rel[x][y] = true;
        else rel[x][y] = (pick >> k++) & 1;
      }
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) {
        if (x != y && rel[x][y] && rel[y][x]) ok = false;
        for (int z = 0; z < n && ok; ++z)
          if (rel[x][y] && rel[y][z] && !rel[x][z]) ok = false;
      }
    if (ok) ++count;
  }
  return count;
}

/// Brute-force homeomorphism oracle: all bijections, raw preimage tests both
/// ways (no order theory involved).
inline std::vector<PointMap> brute_force_homeomorphisms(const FiniteSpace& space) {
  const int n = space.size();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  auto preimage_open = [&](const std::vector<int>& f) {
    for (Mask o : space.opens) {
      Mask pre = 0;
      for (int x = 0; x < n; ++x)
        if (bit(o, f[x])) pre |= Mask{1} << x;
      if (!space.is_open(pre)) return false;
    }
    return true;
  };
  std::vector<PointMap> out;
  do {
    std::vector<int> inv(n);
    for (int x = 0; x < n; ++x) inv[perm[x]] = x;
    if (preimage_open(perm) && preimage_open(inv)) {
      PointMap f;
      f.domain_size = f.codomain_size = n;
      f.image = perm;
      out.push_back(std::move(f));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace alextop::testing
