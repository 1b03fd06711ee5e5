#pragma once

#include <string>
#include <vector>

#include "knotkit/diagram.hpp"
#include "knotkit/laurent.hpp"

namespace knotkit {

struct StateSumOptions {
  int max_crossings = 24;  // the state sum visits 2^n resolutions
  int threads = 0;         // 0 = hardware concurrency
};

/// Kauffman bracket by the full state sum. Crossing X(a,b,c,d) resolves as
/// A * [a-b, c-d] + A^-1 * [a-d, b-c]; each state contributes
/// A^(#A - #B) * (-A^2 - A^-2)^(loops - 1). Throws BudgetExceeded.
LaurentPoly kauffman_bracket(const Diagram& d, const StateSumOptions& opts = {});

/// (-A^3)^(-w) * bracket, rewritten in t = A^-4. The result is a polynomial
/// in t^(1/2): exponent k stands for t^(k/2). Print with to_string("t", 2).
LaurentPoly jones(const Diagram& d, const StateSumOptions& opts = {});
LaurentPoly jones_from_bracket(const LaurentPoly& bracket, int writhe);

/// (-A^3)^k.
LaurentPoly r1_factor(int k);

/// Dedupe pre-filter for diagrams of unoriented links up to mirror image:
/// component count, the sorted |linking numbers| and the lexicographically
/// least Jones polynomial over all component orientations and mirror images.
struct Fingerprint {
  int components = 0;
  std::vector<int> abs_linking;
  LaurentPoly jones;

  bool operator==(const Fingerprint&) const = default;
  std::string to_string() const;
};

Fingerprint invariant_fingerprint(const Diagram& d, const StateSumOptions& opts = {});

}  // namespace knotkit
