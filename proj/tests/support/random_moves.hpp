#pragma once

#include <optional>
#include <random>

#include "knotkit/moves.hpp"
#include "knotkit/structure.hpp"
#include "corpus.hpp"

namespace corpus {

using namespace knotkit;

inline std::vector<Diagram> move_starts() {
  std::vector<Diagram> out;
  for (const auto* list : {&corpus::knots(), &corpus::links()})
    for (const auto& e : *list) out.push_back(parse_pd(e.pd));
  out.push_back(corpus::torus(4));
  out.push_back(corpus::kinked_unknot(2));
  return out;
}

// One random move that applies; records it in `m`.
inline std::optional<Diagram> random_move(const Diagram& d, std::mt19937& rng, Move& m, int cap) {
  const int n = d.crossing_count();
  const FaceSet fs = faces(d);
  auto pick = [&](int k) { return std::uniform_int_distribution<int>(0, k - 1)(rng); };
  const bool grow = n < cap;
  switch (pick(5)) {
    case 0:
      if (!grow || n == 0) return std::nullopt;
      m = {MoveKind::R1Add, pick(d.edge_count()), pick(2) ? 1 : -1};
      return r1_add(d, m.site, m.a);
    case 1:
      if (n == 0) return std::nullopt;
      m = {MoveKind::R1Remove, pick(n)};
      return r1_remove(d, m.site);
    case 2: {
      if (n + 2 > cap || n == 0) return std::nullopt;
      const int f = pick(fs.size());
      const auto& darts = fs.faces[f];
      const int a = d.edge_at(darts[pick(static_cast<int>(darts.size()))]);
      const int b = d.edge_at(darts[pick(static_cast<int>(darts.size()))]);
      m = {MoveKind::R2Add, f, a, b, pick(2)};
      return r2_add(d, f, a, b, m.c != 0);
    }
    case 3:
      if (n == 0) return std::nullopt;
      m = {MoveKind::R2Remove, pick(fs.size())};
      return r2_remove(d, m.site);
    default:
      if (n == 0) return std::nullopt;
      m = {MoveKind::R3, pick(fs.size()), pick(3)};
      return r3(d, m.site, m.a);
  }
}

}  // namespace corpus
