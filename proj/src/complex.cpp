#include "isorep/complex.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "isorep/error.hpp"

namespace isorep {

// ---------------------------------------------------------------- CwComplex

void CwComplex::add_cell(Cell cell) {
  if (cell.dim < 0) throw InputError("cell '" + cell.id + "' has negative dimension");
  if (cells_.count(cell.id)) throw InputError("duplicate cell id '" + cell.id + "'");
  std::string id = cell.id;
  cells_.emplace(std::move(id), std::move(cell));
}

const Cell& CwComplex::cell(const std::string& id) const {
  auto it = cells_.find(id);
  if (it == cells_.end()) throw InputError("unknown cell id '" + id + "'");
  return it->second;
}

int CwComplex::dimension() const {
  int d = -1;
  for (const auto& [id, c] : cells_) d = std::max(d, c.dim);
  return d;
}

std::vector<std::string> CwComplex::cells_of_dim(int k) const {
  std::vector<std::string> out;
  for (const auto& [id, c] : cells_)
    if (c.dim == k) out.push_back(id);
  return out;
}

std::vector<std::string> CwComplex::vertex_faces(const std::string& id) const {
  const Cell& c = cell(id);
  if (c.dim == 0) return {id};
  std::vector<std::string> out;
  for (const auto& f : c.faces) {
    auto it = cells_.find(f);
    if (it != cells_.end() && it->second.dim == 0) out.push_back(f);
  }
  return out;
}

bool operator==(const CwComplex& a, const CwComplex& b) {
  if (a.simplicial_ != b.simplicial_ || a.cells_.size() != b.cells_.size()) return false;
  for (const auto& [id, c] : a.cells_) {
    auto it = b.cells_.find(id);
    if (it == b.cells_.end()) return false;
    const Cell& d = it->second;
    if (c.dim != d.dim || c.faces != d.faces || c.vertices != d.vertices) return false;
  }
  return true;
}

// ---------------------------------------------------------------- validation

std::vector<Violation> validate_regular(const CwComplex& c) {
  std::vector<Violation> out;
  const auto& cells = c.cells();
  for (const auto& [id, cell] : cells) {
    bool faces_known = true;
    for (const auto& f : cell.faces) {
      auto it = cells.find(f);
      if (it == cells.end()) {
        out.push_back({id, "unknown face '" + f + "'"});
        faces_known = false;
        continue;
      }
      if (it->second.dim >= cell.dim)
        out.push_back({id, "face '" + f + "' does not have smaller dimension"});
    }
    if (!faces_known) continue;

    for (const auto& f : cell.faces) {
      for (const auto& g : cells.at(f).faces) {
        if (!cell.faces.count(g)) {
          out.push_back({id, "not transitively closed: missing face '" + g + "' of '" + f + "'"});
        }
      }
    }

    if (cell.dim == 0 && !cell.faces.empty()) out.push_back({id, "vertex with faces"});
    if (cell.dim >= 1) {
      const auto verts = c.vertex_faces(id);
      if (verts.empty())
        out.push_back({id, "no vertex face"});
      else if (cell.dim == 1 && verts.size() == 1)
        out.push_back({id, "loop not regular"});
      else if (cell.dim == 1 && verts.size() > 2)
        out.push_back({id, "edge with more than two vertex faces"});
    }
  }

  if (!c.simplicial()) return out;

  // Simplicial: vertex sets determine the face relation.
  std::map<std::vector<std::string>, std::string> by_vertices;
  for (const auto& [id, cell] : cells) {
    std::vector<std::string> vs = cell.vertices;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) {
      out.push_back({id, "repeated vertex in simplex"});
      continue;
    }
    if (vs.size() != static_cast<std::size_t>(cell.dim) + 1) {
      out.push_back({id, "simplex of dimension " + std::to_string(cell.dim) + " must list " +
                             std::to_string(cell.dim + 1) + " vertices"});
      continue;
    }
    if (cell.dim == 0 && vs.front() != id) out.push_back({id, "vertex must list itself"});
    auto [it, inserted] = by_vertices.emplace(vs, id);
    if (!inserted) out.push_back({id, "same vertex set as '" + it->second + "'"});
  }
  for (const auto& [id, cell] : cells) {
    std::vector<std::string> vs = cell.vertices;
    std::sort(vs.begin(), vs.end());
    if (vs.size() != static_cast<std::size_t>(cell.dim) + 1 || vs.size() > 20) continue;
    std::set<std::string> expected;
    const std::size_t n = vs.size();
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
      std::vector<std::string> sub;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) sub.push_back(vs[i]);
      auto it = by_vertices.find(sub);
      if (it == by_vertices.end()) {
        out.push_back({id, "missing face on vertices {" + [&] {
                             std::string s;
                             for (const auto& v : sub) s += (s.empty() ? "" : ",") + v;
                             return s;
                           }() + "}"});
      } else {
        expected.insert(it->second);
      }
    }
    if (expected.size() == (std::size_t{1} << n) - 2 && expected != cell.faces)
      out.push_back({id, "faces differ from the proper faces of its vertex set"});
  }
  return out;
}

CwComplex close_faces(const CwComplex& c) {
  std::map<std::string, std::set<std::string>> closed;
  std::function<const std::set<std::string>&(const std::string&)> closure =
      [&](const std::string& id) -> const std::set<std::string>& {
    auto it = closed.find(id);
    if (it != closed.end()) return it->second;
    std::set<std::string> acc;
    closed[id];  // placeholder guards against malformed cycles
    for (const auto& f : c.cell(id).faces) {
      acc.insert(f);
      if (c.has_cell(f) && c.cell(f).dim < c.cell(id).dim) {
        const auto& sub = closure(f);
        acc.insert(sub.begin(), sub.end());
      }
    }
    return closed[id] = std::move(acc);
  };
  CwComplex out(c.simplicial());
  for (const auto& [id, cell] : c.cells()) {
    Cell copy = cell;
    copy.faces = closure(id);
    out.add_cell(std::move(copy));
  }
  return out;
}

std::vector<OrientedEdge> oriented_edges(const CwComplex& c) {
  std::vector<OrientedEdge> out;
  for (const auto& id : c.cells_of_dim(1)) {
    const auto verts = c.vertex_faces(id);
    if (verts.size() == 1) throw DomainError("edge '" + id + "': loop not regular", {id});
    if (verts.size() != 2)
      throw DomainError("edge '" + id + "' must have exactly two vertex faces", {id});
    out.push_back({id, verts[0], verts[1]});
  }
  return out;
}

CwComplex skeleton(const CwComplex& c, int k) {
  CwComplex out(c.simplicial());
  for (const auto& [id, cell] : c.cells())
    if (cell.dim <= k) out.add_cell(cell);
  return out;
}

// ---------------------------------------------------------------- cohomology

namespace {

using Incidence = std::map<std::string, std::map<std::string, int>>;

// Matrix of the coboundary C^{k-1} -> C^k: rows k-cells, columns (k-1)-cells.
IntMatrix coboundary(const CwComplex& c, const Incidence& inc, int k) {
  const auto rows = c.cells_of_dim(k);
  const auto cols = c.cells_of_dim(k - 1);
  std::map<std::string, std::size_t> col_index;
  for (std::size_t j = 0; j < cols.size(); ++j) col_index[cols[j]] = j;
  IntMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto it = inc.find(rows[i]);
    if (it == inc.end()) continue;
    for (const auto& [face, sign] : it->second) m(i, col_index.at(face)) = sign;
  }
  return m;
}

std::size_t matrix_rank(const std::vector<Int>& diag) {
  return static_cast<std::size_t>(
      std::count_if(diag.begin(), diag.end(), [](const Int& d) { return d != 0; }));
}

CohomologyGroup h2_from_incidence(const CwComplex& c, const Incidence& inc) {
  const SmithForm d1 = snf(coboundary(c, inc, 2));
  const SmithForm d2 = snf(coboundary(c, inc, 3));
  const std::size_t c2 = c.cells_of_dim(2).size();
  CohomologyGroup h;
  h.free_rank = c2 - matrix_rank(d2.diag) - matrix_rank(d1.diag);
  for (const auto& d : d1.diag)
    if (d > 1) h.torsion.push_back(d);
  return h;
}

}  // namespace

CohomologyGroup h2_simplicial(const CwComplex& c) {
  if (!c.simplicial()) throw InputError("complex is not simplicial; supply H2 manually");
  if (const auto v = validate_regular(c); !v.empty())
    throw DomainError("invalid simplicial complex: " + v.front().cell + ": " + v.front().reason,
                      {v.front().cell});
  std::map<std::vector<std::string>, std::string> by_vertices;
  for (const auto& [id, cell] : c.cells()) {
    auto vs = cell.vertices;
    std::sort(vs.begin(), vs.end());
    by_vertices[vs] = id;
  }
  Incidence inc;
  for (int k = 2; k <= 3; ++k) {
    for (const auto& id : c.cells_of_dim(k)) {
      auto vs = c.cell(id).vertices;
      std::sort(vs.begin(), vs.end());
      for (std::size_t i = 0; i < vs.size(); ++i) {
        auto face = vs;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        inc[id][by_vertices.at(face)] = (i % 2 == 0) ? 1 : -1;
      }
    }
  }
  return h2_from_incidence(c, inc);
}

CohomologyGroup h2_cellular(const CwComplex& c) {
  if (const auto v = validate_regular(c); !v.empty())
    throw DomainError("not a regular complex: " + v.front().cell + ": " + v.front().reason,
                      {v.front().cell});
  Incidence inc;
  for (const auto& e : oriented_edges(c)) {
    inc[e.edge][e.tail] = -1;
    inc[e.edge][e.head] = 1;
  }
  for (int k = 2; k <= 3; ++k) {
    for (const auto& id : c.cells_of_dim(k)) {
      std::vector<std::string> facets;
      for (const auto& f : c.cell(id).faces)
        if (c.cell(f).dim == k - 1) facets.push_back(f);
      if (facets.empty()) throw DomainError("cell '" + id + "' has no facets", {id});

      // Each ridge of a regular cell lies in exactly two facets; propagate
      // signs across ridges so the signed facets form a cycle.
      std::map<std::string, std::vector<std::string>> facets_of_ridge;
      for (const auto& f : facets)
        for (const auto& [ridge, s] : inc[f]) facets_of_ridge[ridge].push_back(f);
      std::map<std::string, int> sign;
      sign[facets.front()] = 1;
      std::deque<std::string> queue{facets.front()};
      while (!queue.empty()) {
        const std::string f = queue.front();
        queue.pop_front();
        for (const auto& [ridge, s] : inc[f]) {
          const auto& around = facets_of_ridge[ridge];
          if (around.size() != 2)
            throw DomainError("cell '" + id + "': face '" + ridge + "' lies in " +
                                  std::to_string(around.size()) + " facets; not regular",
                              {id});
          const std::string& other = around[0] == f ? around[1] : around[0];
          const int want = -sign[f] * s * inc[other][ridge];
          auto [it, fresh] = sign.emplace(other, want);
          if (fresh)
            queue.push_back(other);
          else if (it->second != want)
            throw DomainError("cell '" + id + "' admits no consistent orientation", {id});
        }
      }
      if (sign.size() != facets.size())
        throw DomainError("cell '" + id + "' has a disconnected boundary", {id});
      for (const auto& [f, s] : sign) inc[id][f] = s;
    }
  }
  return h2_from_incidence(c, inc);
}

// ---------------------------------------------------------------- builders

std::string simplex_id(const std::vector<int>& vertices) {
  const bool short_labels =
      std::all_of(vertices.begin(), vertices.end(), [](int v) { return v >= 0 && v < 10; });
  std::string id;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i && !short_labels) id += '.';
    id += std::to_string(vertices[i]);
  }
  return id;
}

CwComplex simplicial_complex(const std::vector<std::vector<int>>& facets) {
  std::set<std::vector<int>> simplices;
  for (auto f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    const std::size_t n = f.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::vector<int> s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) s.push_back(f[i]);
      simplices.insert(s);
    }
  }
  CwComplex c(true);
  for (const auto& s : simplices) {
    Cell cell;
    cell.id = simplex_id(s);
    cell.dim = static_cast<int>(s.size()) - 1;
    for (int v : s) cell.vertices.push_back(simplex_id({v}));
    const std::size_t n = s.size();
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
      std::vector<int> sub;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) sub.push_back(s[i]);
      cell.faces.insert(simplex_id(sub));
    }
    c.add_cell(std::move(cell));
  }
  return c;
}

CwComplex simplex(int m) {
  std::vector<int> all;
  for (int i = 0; i <= m; ++i) all.push_back(i);
  return simplicial_complex({all});
}

CwComplex simplex_boundary(int m) {
  std::vector<std::vector<int>> facets;
  for (int skip = 0; skip <= m; ++skip) {
    std::vector<int> f;
    for (int i = 0; i <= m; ++i)
      if (i != skip) f.push_back(i);
    facets.push_back(f);
  }
  return simplicial_complex(facets);
}

CwComplex disjoint_union(const CwComplex& a, const CwComplex& b, const std::string& prefix) {
  CwComplex out(a.simplicial() && b.simplicial());
  for (const auto& [id, cell] : a.cells()) out.add_cell(cell);
  for (const auto& [id, cell] : b.cells()) {
    Cell copy;
    copy.id = prefix + id;
    copy.dim = cell.dim;
    for (const auto& f : cell.faces) copy.faces.insert(prefix + f);
    for (const auto& v : cell.vertices) copy.vertices.push_back(prefix + v);
    out.add_cell(std::move(copy));
  }
  return out;
}

}  // namespace isorep
