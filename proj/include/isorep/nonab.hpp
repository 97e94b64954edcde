#pragma once

// Finite-level nonabelian corrections: double-coset fibres over a graph,
// sign-lift search for rank-one structure groups, and canonical forms for
// signed-permutation Weyl groups.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isorep/complex.hpp"
#include "isorep/groupoid.hpp"
#include "isorep/rep_ab.hpp"

namespace isorep {

/// A finite group given by its multiplication table on elements 0..N-1,
/// with 0 the identity.
class FinGroup {
 public:
  /// Validates identity, inverses and associativity; throws InputError.
  static FinGroup from_table(std::vector<std::vector<int>> table);

  static FinGroup trivial();
  static FinGroup cyclic(int n);
  /// Symmetric group on n points; element 0 is the identity permutation and
  /// the rest follow lexicographic order of permutations.
  static FinGroup symmetric(int n);
  static FinGroup dihedral(int n);  // order 2n
  static FinGroup quaternion();
  static FinGroup direct_product(const FinGroup& a, const FinGroup& b);

  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  /// A small generating set, chosen greedily in element order.
  const std::vector<int>& generators() const { return generators_; }
  /// Subgroup generated by the given elements, as a sorted element list.
  std::vector<int> closure(const std::vector<int>& elements) const;

  friend bool operator==(const FinGroup& a, const FinGroup& b) { return a.table_ == b.table_; }

 private:
  explicit FinGroup(std::vector<std::vector<int>> table);
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<int> generators_;
};

class GroupHom {
 public:
  /// Validates that image defines a homomorphism; throws InputError.
  static GroupHom make(const FinGroup& source, const FinGroup& target, std::vector<int> image);
  static GroupHom identity(const FinGroup& g);
  static GroupHom trivial(const FinGroup& source, const FinGroup& target);

  int operator()(int x) const { return image_[x]; }
  const std::vector<int>& image() const { return image_; }
  int source_order() const { return static_cast<int>(image_.size()); }
  int target_order() const { return target_order_; }

 private:
  GroupHom(std::vector<int> image, int target_order)
      : image_(std::move(image)), target_order_(target_order) {}
  std::vector<int> image_;
  int target_order_;
};

/// All homomorphisms source -> target (exhaustive over generator images).
std::vector<GroupHom> all_homomorphisms(const FinGroup& source, const FinGroup& target);

/// Component groups over a graph: P_e per edge, P_v per vertex and a
/// homomorphism P_v -> P_e for every half-edge (v, e).
struct DoubleCosetInstance {
  std::vector<OrientedEdge> edges;
  std::map<std::string, FinGroup> vertex_groups;
  std::map<std::string, FinGroup> edge_groups;
  std::map<std::pair<std::string, std::string>, GroupHom> homs;  // (vertex, edge)
};

/// Throws InputError when a group or hom is missing or a hom has the wrong
/// source/target order.
void validate_instance(const DoubleCosetInstance& inst);

inline constexpr std::uint64_t kDefaultStateCap = 1'000'000;

struct DoubleCosetResult {
  std::uint64_t count = 0;
  std::uint64_t state_count = 0;  // |X|
  /// One representative per double coset, the smallest state of its orbit;
  /// entries follow the half-edges (tail, e), (head, e) in edge order.
  std::vector<std::vector<int>> representatives;
  std::vector<std::uint64_t> orbit_sizes;
};

/// Orbits of Y0 x Y1 on X = prod over half-edges of P_e, acting by
/// (y0, y1).x = y0 x y1^{-1}.  Throws InputError when |X| exceeds `cap`.
DoubleCosetResult double_cosets(const DoubleCosetInstance& inst, std::uint64_t cap = kDefaultStateCap);

/// Double cosets j0(P0) \ P01 / j1(P1); representatives are single elements.
DoubleCosetResult segment_double_cosets(const FinGroup& p0, const FinGroup& p01, const FinGroup& p1,
                                        const GroupHom& j0, const GroupHom& j1);

/// The instance over a complex's 1-skeleton (higher cells ignored).
DoubleCosetInstance make_instance(const CwComplex& graph, std::map<std::string, FinGroup> vertex_groups,
                                  std::map<std::string, FinGroup> edge_groups,
                                  std::map<std::pair<std::string, std::string>, GroupHom> homs);

/// True iff every edge group is connected, in which case every fibre Z(alpha)
/// is a single point for connected structure groups.
bool toral_edge_shortcut(const CellularGroupoid& g);

struct KappaLiftOptions {
  /// Fix the sign of the smallest vertex of each connected component to +1.
  bool fix_component_signs = true;
  std::size_t max_vertices = 24;
};

struct KappaLiftResult {
  std::optional<WeightFamily> witness;
  std::map<std::string, int> signs;  // of the witness
  std::uint64_t assignments_checked = 0;
  std::uint64_t search_space = 0;
};

/// Searches sign choices sigma_v for which (sigma_v a_v) passes gkm_check,
/// in lexicographic order over vertex ids with + before -.
KappaLiftResult kappa_lift_rank1(const CellularGroupoid& g, const WeightFamily& classes,
                                 const KappaLiftOptions& options = {});

enum class WeylSeries { B, D };

/// Canonical representative of the orbit of v under signed permutations
/// (B: any sign changes; D: an even number of them).  B lands in
/// 0 <= r_1 <= ... <= r_k; D in 0 <= r_1 <= ... <= r_{k-1} <= |r_k|.
IntVector weyl_canonical(WeylSeries series, const IntVector& v);

}  // namespace isorep
