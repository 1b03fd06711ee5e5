#pragma once

#include <string>
#include <vector>

#include "knotkit/diagram.hpp"
#include "oracles.hpp"

namespace corpus {

struct Entry {
  std::string name;
  std::string pd;
};

// Knot tables use the same PD convention (incoming under-edge first,
// counterclockwise).
inline const std::vector<Entry>& knots() {
  static const std::vector<Entry> k{
      {"3_1", "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"},
      {"4_1", "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"},
      {"5_1", "X(1,6,2,7) X(3,8,4,9) X(5,10,6,1) X(7,2,8,3) X(9,4,10,5)"},
      {"5_2", "X(1,4,2,5) X(3,8,4,9) X(5,10,6,1) X(9,6,10,7) X(7,2,8,3)"},
      {"6_1", "X(1,4,2,5) X(7,10,8,11) X(3,9,4,8) X(9,3,10,2) X(5,12,6,1) X(11,6,12,7)"},
  };
  return k;
}

inline const std::vector<Entry>& links() {
  static const std::vector<Entry> l{
      {"hopf", "X(1,3,2,4) X(3,1,4,2)"},
      {"L4a1", "X(6,1,7,2) X(8,3,5,4) X(2,5,3,6) X(4,7,1,8)"},
      {"whitehead", "X(6,1,7,2) X(10,7,5,8) X(4,5,1,6) X(2,10,3,9) X(8,4,9,3)"},
  };
  return l;
}

inline knotkit::Diagram diagram(const std::string& name) {
  for (const auto* list : {&knots(), &links()})
    for (const auto& e : *list)
      if (e.name == name) return knotkit::parse_pd(e.pd);
  throw std::runtime_error("no corpus entry " + name);
}

/// Closure of the 2-braid sigma^m.
inline knotkit::Diagram torus(int m) {
  const auto t = oracle::two_braid(m);
  return knotkit::Diagram::from_unoriented_tuples(t);
}

/// Unknot with k kinks of the given sign.
inline knotkit::Diagram kinked_unknot(int k, int sign = 1) {
  oracle::Tuples t;
  for (int i = 0; i < k; ++i) {
    const int a = 2 * i, loop = 2 * i + 1, b = 2 * ((i + 1) % k);
    if (sign > 0) t.push_back({a, b, loop, loop});
    else t.push_back({a, loop, loop, b});
  }
  return knotkit::Diagram::from_unoriented_tuples(t);
}

}  // namespace corpus
