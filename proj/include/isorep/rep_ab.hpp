#pragma once

// Cellular representations of a toric groupoid into compact abelian groups.
//
// A cellular representation into S^1 is a family of characters
// alpha_v in Z^n / ann(I_v), one per vertex, whose images agree in
// Z^n / ann(I(c)) for all vertices of every cell c.  The set of such families
// is a finitely generated abelian group; rep_circle computes it as
// (lifted solution lattice) / (sum of vertex annihilators) and returns a
// normalized presentation.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isorep/complex.hpp"
#include "isorep/groupoid.hpp"
#include "isorep/intlat.hpp"

namespace isorep {

/// One weight vector per vertex id.
using WeightFamily = std::map<std::string, IntVector>;

struct RepGroup {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1, each dividing the next
  /// Free generators first, then one generator per invariant factor.
  std::vector<WeightFamily> generators;
  std::vector<Int> orders;   // per generator; 0 for free generators

  friend bool operator==(const RepGroup&, const RepGroup&) = default;
};

/// Rep^{S^1}_cell of a valid groupoid.  All cells are used, so the result
/// does not change when cells of dimension >= 2 are dropped.
RepGroup rep_circle(const CellularGroupoid& g);

struct AbelianTarget {
  std::size_t torus_rank = 1;
  std::vector<Int> finite_factors;  // cyclic factors Z/q, each q >= 1
};

/// Representations into (S^1)^torus_rank x Z/q_1 x ... x Z/q_s.  Generator
/// vectors are the concatenation of one length-n block per factor, in the
/// order circles first, then the finite factors.
RepGroup rep_abelian(const CellularGroupoid& g, const AbelianTarget& target);

/// Edges (in id order) whose weight difference is not in ann(I(e)).
/// Requires a zero-toric groupoid and a family on exactly its vertices.
std::vector<std::string> gkm_check(const CellularGroupoid& g, const WeightFamily& family);

using EulerNumbers = std::map<std::string, Int>;

/// k_e with a_head - a_tail = k_e * chi_e, for a one-toric groupoid and a
/// family passing gkm_check (DomainError listing the failing edges otherwise).
EulerNumbers euler_numbers(const CellularGroupoid& g, const WeightFamily& family);

struct BundleGroup {
  RepGroup rep;
  CohomologyGroup h2;
};

/// Rep^{S^1}(I) paired with H^2(A; Z).  H^2 comes from the override when
/// given, otherwise from simplicial or cellular cochains of the complex.
BundleGroup bundle_group(const CellularGroupoid& g,
                         const std::optional<CohomologyGroup>& h2_override = std::nullopt);

struct AffineEdge {
  std::string edge;
  std::string tail;
  std::string head;
  IntVector character;
  Int euler;
  IntVector direction;  // coordinate difference head - tail
  Int lattice_length;   // direction = lattice_length * character
};

struct AffineCell {
  std::string cell;
  bool affine;
};

struct AffineReport {
  std::vector<AffineEdge> edges;
  std::vector<AffineCell> cells;  // cells of dimension >= 2
  bool affine_consistent = true;
};

/// Checks that the coordinates embed every edge parallel to its character,
/// that the family satisfies the GKM conditions, and whether the family
/// restricted to the vertices of each higher cell is the restriction of an
/// affine map.
AffineReport affine_report(const CellularGroupoid& g, const WeightFamily& coordinates,
                           const WeightFamily& family);

}  // namespace isorep
