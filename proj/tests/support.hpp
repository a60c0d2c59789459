#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "hcb/serialize.hpp"

namespace hcb::test {

inline CartanPtr type(const char* label) { return build_root_system(label); }

inline Weight wt(const char* csv) { return parse_weight(csv); }

/// Product of simple reflections with 1-based indices.
inline WeylElement elem(const CartanDatum& d, std::initializer_list<int> word) {
  std::vector<int> w;
  for (int i : word) w.push_back(i - 1);
  return d.from_word(w);
}

inline std::vector<WeylElement> sorted(std::vector<WeylElement> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace hcb::test
