#include "isorep/rep_ab.hpp"

#include <algorithm>
#include <stdexcept>

#include "isorep/error.hpp"
#include "isorep/torus.hpp"

namespace isorep {

namespace {

// Flat coordinates of Z^(|V| * blocks * n), vertex-major: the slice of
// vertex i is [i*blocks*n, (i+1)*blocks*n).
struct Layout {
  std::vector<std::string> vertices;
  std::map<std::string, std::size_t> index;
  std::size_t n = 0;
  std::size_t blocks = 1;

  std::size_t dim() const { return vertices.size() * blocks * n; }
  std::size_t offset(std::size_t vertex, std::size_t block) const {
    return (vertex * blocks + block) * n;
  }
};

struct Constraint {
  IntVector functional;
  Int modulus;  // 0: exact
};

// q == 0: the circle block.  q > 0: the block of homomorphisms to Z/q.
void add_block_constraints(const CellularGroupoid& g, const Layout& layout, std::size_t block,
                           const Int& q, std::map<std::string, QuotientStructure>& quotients,
                           std::vector<Constraint>& out) {
  auto quotient_of = [&](const std::string& cell) -> const QuotientStructure& {
    auto it = quotients.find(cell);
    if (it == quotients.end())
      it = quotients.emplace(cell, QuotientStructure(g.group(cell).annihilator())).first;
    return it->second;
  };
  const std::size_t n = layout.n;

  for (const auto& [id, cell] : g.complex().cells()) {
    if (cell.dim == 0) continue;
    const auto verts = g.complex().vertex_faces(id);
    const auto constraints = quotient_of(id).membership_constraints();
    for (std::size_t i = 1; i < verts.size(); ++i) {
      const std::size_t base = layout.offset(layout.index.at(verts[0]), block);
      const std::size_t other = layout.offset(layout.index.at(verts[i]), block);
      for (const auto& c : constraints) {
        IntVector f(layout.dim(), Int(0));
        for (std::size_t j = 0; j < n; ++j) {
          f[other + j] += c.functional[j];
          f[base + j] -= c.functional[j];
        }
        out.push_back({std::move(f), c.modulus});
      }
    }
  }

  if (q == 0) return;
  // Characters of I_v killed by q: q * x_v lies in ann(I_v).
  for (std::size_t v = 0; v < layout.vertices.size(); ++v) {
    const std::size_t base = layout.offset(v, block);
    for (const auto& c : quotient_of(layout.vertices[v]).membership_constraints()) {
      IntVector f(layout.dim(), Int(0));
      for (std::size_t j = 0; j < n; ++j) f[base + j] = q * c.functional[j];
      out.push_back({std::move(f), c.modulus});
    }
  }
}

LatticeBasis solution_lattice(std::size_t dim, const std::vector<Constraint>& constraints) {
  std::size_t slack = 0;
  for (const auto& c : constraints)
    if (c.modulus != 0) ++slack;
  // f.x + m z = 0 for modular rows; project the kernel onto x.
  IntMatrix system(constraints.size(), dim + slack);
  std::size_t s = 0;
  for (std::size_t r = 0; r < constraints.size(); ++r) {
    for (std::size_t j = 0; j < dim; ++j) system(r, j) = constraints[r].functional[j];
    if (constraints[r].modulus != 0) system(r, dim + s++) = constraints[r].modulus;
  }
  const LatticeBasis kernel = integer_kernel(system);
  IntMatrix gens(0, dim);
  for (std::size_t i = 0; i < kernel.rank(); ++i) {
    IntVector v = kernel.basis().row(i);
    v.resize(dim);
    gens.append_row(v);
  }
  return hnf(gens);
}

RepGroup present(const CellularGroupoid& g, const Layout& layout, const std::vector<Int>& block_q) {
  std::map<std::string, QuotientStructure> quotients;
  std::vector<Constraint> constraints;
  for (std::size_t b = 0; b < layout.blocks; ++b)
    add_block_constraints(g, layout, b, block_q[b], quotients, constraints);
  const LatticeBasis lifted = solution_lattice(layout.dim(), constraints);

  // Relations: the vertex annihilators in every block.
  IntMatrix rel_rows(0, layout.dim());
  for (std::size_t v = 0; v < layout.vertices.size(); ++v) {
    const LatticeBasis& ann = g.group(layout.vertices[v]).annihilator();
    for (std::size_t b = 0; b < layout.blocks; ++b)
      for (std::size_t r = 0; r < ann.rank(); ++r) {
        IntVector row(layout.dim(), Int(0));
        for (std::size_t j = 0; j < layout.n; ++j) row[layout.offset(v, b) + j] = ann.basis()(r, j);
        rel_rows.append_row(row);
      }
  }
  const LatticeBasis relations = hnf(rel_rows);

  IntMatrix coords(0, lifted.rank());
  for (std::size_t r = 0; r < relations.rank(); ++r) {
    auto c = lattice_coordinates(relations.basis().row(r), lifted);
    if (!c) throw DomainError("vertex annihilators escape the solution lattice; groupoid not monotone");
    coords.append_row(*c);
  }
  const SmithForm s = snf(coords);
  const std::size_t rel = relations.rank();

  auto lift = [&](std::size_t i) {
    const IntVector flat = s.right_inverse.row(i) * lifted.basis();
    WeightFamily fam;
    for (std::size_t v = 0; v < layout.vertices.size(); ++v) {
      const LatticeBasis& ann = g.group(layout.vertices[v]).annihilator();
      IntVector vec;
      for (std::size_t b = 0; b < layout.blocks; ++b) {
        const auto first = flat.begin() + static_cast<std::ptrdiff_t>(layout.offset(v, b));
        IntVector block = reduce_modulo(IntVector(first, first + static_cast<std::ptrdiff_t>(layout.n)), ann);
        vec.insert(vec.end(), block.begin(), block.end());
      }
      fam.emplace(layout.vertices[v], std::move(vec));
    }
    return fam;
  };

  RepGroup out;
  for (std::size_t i = rel; i < lifted.rank(); ++i) {
    out.generators.push_back(lift(i));
    out.orders.emplace_back(0);
    ++out.free_rank;
  }
  for (std::size_t i = 0; i < rel; ++i) {
    if (s.diag[i] == 1) continue;
    out.generators.push_back(lift(i));
    out.orders.push_back(s.diag[i]);
    out.torsion.push_back(s.diag[i]);
  }
  return out;
}

Layout layout_for(const CellularGroupoid& g, std::size_t blocks) {
  Layout layout;
  layout.vertices = g.complex().vertices();
  for (std::size_t i = 0; i < layout.vertices.size(); ++i) layout.index[layout.vertices[i]] = i;
  layout.n = g.ambient_rank();
  layout.blocks = blocks;
  return layout;
}

void require_family_shape(const CellularGroupoid& g, const WeightFamily& family, const char* what) {
  const auto verts = g.complex().vertices();
  for (const auto& v : verts) {
    auto it = family.find(v);
    if (it == family.end()) throw InputError(std::string(what) + ": no vector for vertex '" + v + "'");
    if (it->second.size() != g.ambient_rank())
      throw InputError(std::string(what) + ": vector for vertex '" + v + "' has length " +
                       std::to_string(it->second.size()) + ", expected " +
                       std::to_string(g.ambient_rank()));
  }
  for (const auto& [v, vec] : family)
    if (!g.complex().has_cell(v) || g.complex().cell(v).dim != 0)
      throw InputError(std::string(what) + ": '" + v + "' is not a vertex");
}

// Index of the first nonzero entry; chi is never zero here.
std::size_t leading_index(const IntVector& chi) {
  for (std::size_t i = 0; i < chi.size(); ++i)
    if (chi[i] != 0) return i;
  throw std::logic_error("zero character");
}

}  // namespace

RepGroup rep_circle(const CellularGroupoid& g) { return rep_abelian(g, {1, {}}); }

RepGroup rep_abelian(const CellularGroupoid& g, const AbelianTarget& target) {
  require_valid(g);
  std::vector<Int> block_q(target.torus_rank, Int(0));
  for (const auto& q : target.finite_factors) {
    if (q < 1) throw InputError("finite factor orders must be >= 1");
    block_q.push_back(q);
  }
  if (block_q.empty()) return {};
  return present(g, layout_for(g, block_q.size()), block_q);
}

std::vector<std::string> gkm_check(const CellularGroupoid& g, const WeightFamily& family) {
  require_valid(g);
  if (!is_zero_toric(g)) throw DomainError("gkm_check requires a zero-toric groupoid");
  require_family_shape(g, family, "gkm_check");
  std::vector<std::string> failing;
  for (const auto& e : oriented_edges(g.complex())) {
    if (!lattice_member(family.at(e.head) - family.at(e.tail), g.group(e.edge).annihilator()))
      failing.push_back(e.edge);
  }
  return failing;
}

EulerNumbers euler_numbers(const CellularGroupoid& g, const WeightFamily& family) {
  require_valid(g);
  const auto chars = one_toric_characters(g);
  if (!chars) throw DomainError("euler numbers require a one-toric groupoid");
  const auto failing = gkm_check(g, family);
  if (!failing.empty()) throw DomainError("GKM condition fails", failing);
  EulerNumbers out;
  for (const auto& e : oriented_edges(g.complex())) {
    const IntVector& chi = chars->at(e.edge);
    const IntVector d = family.at(e.head) - family.at(e.tail);
    const std::size_t j = leading_index(chi);
    out.emplace(e.edge, d[j] / chi[j]);
  }
  return out;
}

BundleGroup bundle_group(const CellularGroupoid& g, const std::optional<CohomologyGroup>& h2_override) {
  BundleGroup out;
  out.rep = rep_circle(g);
  if (h2_override)
    out.h2 = *h2_override;
  else if (g.complex().simplicial())
    out.h2 = h2_simplicial(g.complex());
  else
    out.h2 = h2_cellular(g.complex());
  return out;
}

AffineReport affine_report(const CellularGroupoid& g, const WeightFamily& coordinates,
                           const WeightFamily& family) {
  require_valid(g);
  const auto chars = one_toric_characters(g);
  if (!chars) throw DomainError("affine report requires a one-toric groupoid");
  require_family_shape(g, coordinates, "vertex coordinates");
  require_family_shape(g, family, "weight family");

  AffineReport report;
  for (const auto& e : oriented_edges(g.complex())) {
    const IntVector& chi = chars->at(e.edge);
    const IntVector dir = coordinates.at(e.head) - coordinates.at(e.tail);
    const std::size_t j = leading_index(chi);
    if (is_zero(dir) || dir[j] % chi[j] != 0 || dir != Int(dir[j] / chi[j]) * chi)
      throw DomainError("not a moment-polytope embedding: edge '" + e.edge +
                            "' is not parallel to its character",
                        {e.edge});
    report.edges.push_back({e.edge, e.tail, e.head, chi, 0, dir, dir[j] / chi[j]});
  }
  const EulerNumbers k = euler_numbers(g, family);
  for (auto& edge : report.edges) edge.euler = k.at(edge.edge);

  // Affine on a cell: every affine relation sum l_v (p_v, 1) = 0 among the
  // cell's vertex coordinates must also hold for the weights.
  const std::size_t n = g.ambient_rank();
  for (const auto& [id, cell] : g.complex().cells()) {
    if (cell.dim < 2) continue;
    const auto verts = g.complex().vertex_faces(id);
    IntMatrix points(n + 1, verts.size());
    for (std::size_t c = 0; c < verts.size(); ++c) {
      for (std::size_t r = 0; r < n; ++r) points(r, c) = coordinates.at(verts[c])[r];
      points(n, c) = 1;
    }
    const LatticeBasis relations = integer_kernel(points);
    bool affine = true;
    for (std::size_t r = 0; r < relations.rank() && affine; ++r) {
      IntVector sum(n, Int(0));
      for (std::size_t c = 0; c < verts.size(); ++c)
        sum = sum + relations.basis()(r, c) * family.at(verts[c]);
      affine = is_zero(sum);
    }
    report.cells.push_back({id, affine});
    report.affine_consistent = report.affine_consistent && affine;
  }
  return report;
}

}  // namespace isorep
