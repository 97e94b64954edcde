#pragma once

// Closed subgroups of the torus T^n, represented by their annihilator
// lattices in the character lattice Z^n.  The correspondence reverses
// inclusions: H is contained in K iff ann(K) is contained in ann(H).

#include <cstddef>
#include <vector>

#include "isorep/intlat.hpp"

namespace isorep {

class TorusSubgroup {
 public:
  TorusSubgroup(std::size_t ambient_rank, LatticeBasis annihilator);

  static TorusSubgroup full(std::size_t n);
  static TorusSubgroup trivial(std::size_t n);

  std::size_t ambient_rank() const { return ambient_rank_; }
  const LatticeBasis& annihilator() const { return ann_; }
  std::size_t dimension() const { return ambient_rank_ - ann_.rank(); }
  bool is_full() const { return ann_.rank() == 0; }

  friend bool operator==(const TorusSubgroup&, const TorusSubgroup&) = default;

 private:
  std::size_t ambient_rank_;
  LatticeBasis ann_;
};

/// Intersection of the kernels of the given characters (rows of `chars`).
TorusSubgroup subgroup_from_characters(std::size_t n, const IntMatrix& chars);

/// True iff k is a subgroup of h.
bool contains(const TorusSubgroup& h, const TorusSubgroup& k);
TorusSubgroup intersect(const TorusSubgroup& h, const TorusSubgroup& k);
/// Smallest closed subgroup containing both.
TorusSubgroup generated_join(const TorusSubgroup& h, const TorusSubgroup& k);

struct SubgroupStructure {
  std::size_t dim;
  std::vector<Int> pi0;  // invariant factors of the component group
  QuotientStructure character_group;
};

SubgroupStructure structure(const TorusSubgroup& h);

/// A primitive character is one whose entries have gcd 1.
bool is_primitive(const IntVector& chi);
/// Sign normalization: first nonzero entry positive.
IntVector normalize_sign(IntVector chi);

}  // namespace isorep
