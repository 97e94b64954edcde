#pragma once

// Regular CW-complexes described combinatorially by their face posets.
// Cell ids are strings and are ordered lexicographically wherever an order
// is needed (edge orientation, simplicial orientation, output order).

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "isorep/intlat.hpp"

namespace isorep {

struct Cell {
  std::string id;
  int dim = 0;
  std::set<std::string> faces;        // all proper faces, transitively closed
  std::vector<std::string> vertices;  // vertex ids; simplicial complexes only
};

class CwComplex {
 public:
  CwComplex() = default;
  explicit CwComplex(bool simplicial) : simplicial_(simplicial) {}

  /// Throws InputError on a duplicate id or a negative dimension.
  void add_cell(Cell cell);

  bool simplicial() const { return simplicial_; }
  const std::map<std::string, Cell>& cells() const { return cells_; }
  bool has_cell(const std::string& id) const { return cells_.count(id) != 0; }
  const Cell& cell(const std::string& id) const;
  std::size_t size() const { return cells_.size(); }

  /// -1 for the empty complex.
  int dimension() const;
  std::vector<std::string> cells_of_dim(int k) const;
  std::vector<std::string> vertices() const { return cells_of_dim(0); }
  /// The dim-0 faces of a cell (the cell itself if it is a vertex), sorted.
  std::vector<std::string> vertex_faces(const std::string& id) const;

  friend bool operator==(const CwComplex& a, const CwComplex& b);

 private:
  bool simplicial_ = false;
  std::map<std::string, Cell> cells_;
};

struct Violation {
  std::string cell;
  std::string reason;
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Checks the combinatorial consequences of regularity this library relies
/// on.  Never throws; an empty result means the complex is acceptable.
std::vector<Violation> validate_regular(const CwComplex& c);

/// Replaces every face set by its transitive closure.  Unknown face ids are
/// kept as they are (validate_regular reports them).
CwComplex close_faces(const CwComplex& c);

struct OrientedEdge {
  std::string edge;
  std::string tail;  // smaller vertex id
  std::string head;
  friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
};

/// Edges in id order, each oriented from its smaller to its larger vertex.
/// Throws DomainError for a loop or an edge without two vertex faces.
std::vector<OrientedEdge> oriented_edges(const CwComplex& c);

CwComplex skeleton(const CwComplex& c, int k);

struct CohomologyGroup {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;
  friend bool operator==(const CohomologyGroup&, const CohomologyGroup&) = default;
};

/// H^2(A; Z) from simplicial coboundaries, simplices oriented by vertex order.
/// Throws InputError for complexes not flagged simplicial.
CohomologyGroup h2_simplicial(const CwComplex& c);

/// H^2(A; Z) for a regular CW-complex.  Incidence numbers are +-1 on
/// codimension-one faces and are fixed by orienting each cell so that its
/// boundary is a cycle; throws DomainError when the face poset does not
/// admit such an orientation (the complex is not regular).
CohomologyGroup h2_cellular(const CwComplex& c);

/// Cell id used by the simplicial builders: the vertex labels concatenated
/// when all are single digits, joined with '.' otherwise.
std::string simplex_id(const std::vector<int>& vertices);

/// The simplicial complex generated by the given facets (all faces added).
CwComplex simplicial_complex(const std::vector<std::vector<int>>& facets);
/// The full simplex on vertices 0..m.
CwComplex simplex(int m);
/// The boundary of the simplex on vertices 0..m.
CwComplex simplex_boundary(int m);
/// Disjoint union; ids of `b` are prefixed with `prefix`.
CwComplex disjoint_union(const CwComplex& a, const CwComplex& b, const std::string& prefix);

}  // namespace isorep
