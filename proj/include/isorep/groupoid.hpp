#pragma once

// Cellular (T^n, A)-groupoids: an assignment of a closed torus subgroup to
// every cell of a regular complex, shrinking as cells grow.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isorep/complex.hpp"
#include "isorep/torus.hpp"

namespace isorep {

class CellularGroupoid {
 public:
  /// Stores the data as given; validate_groupoid reports inconsistencies.
  CellularGroupoid(CwComplex complex, std::size_t ambient_rank,
                   std::map<std::string, TorusSubgroup> groups);

  const CwComplex& complex() const { return complex_; }
  std::size_t ambient_rank() const { return ambient_rank_; }
  const std::map<std::string, TorusSubgroup>& groups() const { return groups_; }
  /// Throws InputError if the cell has no assigned group.
  const TorusSubgroup& group(const std::string& cell) const;

  friend bool operator==(const CellularGroupoid&, const CellularGroupoid&) = default;

 private:
  CwComplex complex_;
  std::size_t ambient_rank_;
  std::map<std::string, TorusSubgroup> groups_;
};

struct GroupoidViolation {
  std::string face;  // empty when the violation concerns a single cell
  std::string cell;
  std::string reason;
  friend bool operator==(const GroupoidViolation&, const GroupoidViolation&) = default;
};

/// Regularity of the complex, completeness and rank of the assignment, and
/// monotonicity on every (face, cell) pair.
std::vector<GroupoidViolation> validate_groupoid(const CellularGroupoid& g);
/// Throws DomainError carrying the first violation.
void require_valid(const CellularGroupoid& g);

bool is_zero_toric(const CellularGroupoid& g);
/// For a one-toric groupoid, the primitive character chi_e with
/// ker chi_e = I(e) for every edge, first nonzero entry positive.  nullopt
/// when the groupoid is not one-toric.
std::optional<std::map<std::string, IntVector>> one_toric_characters(const CellularGroupoid& g);
bool is_one_toric(const CellularGroupoid& g);

CellularGroupoid restrict_to_skeleton(const CellularGroupoid& g, int k);

// Builders.  Each result is validated; invalid parameters raise DomainError
// (or std::invalid_argument for shape mismatches).

/// Full simplex on vertices 0..m with I(e) the intersection of ker chi_j
/// over the vertices j of e; `characters` has m+1 rows.
CellularGroupoid simplex_sphere(const IntMatrix& characters);
/// Each group replaced by the subgroup generated by it and gamma0.
CellularGroupoid quotient(const CellularGroupoid& g, const TorusSubgroup& gamma0);
/// Segment with full-torus endpoints and edge group ker chi.
CellularGroupoid cp1(const IntVector& chi);
/// Segment with the given groups.
CellularGroupoid segment(const TorusSubgroup& h0, const TorusSubgroup& h1,
                         const TorusSubgroup& h01);
/// The Hirzebruch moment polygon: vertices v1..v4, edges e12 e23 e34 e14 and
/// the 2-cell f, with vertex coordinates hirzebruch_coordinates().
CellularGroupoid hirzebruch();
std::map<std::string, IntVector> hirzebruch_coordinates();
/// The triangle over T^2 with edge groups 1xS^1, S^1x1 and the diagonal.
CellularGroupoid cp2_kappanotonto();

}  // namespace isorep
