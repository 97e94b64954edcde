#include "isorep/nonab.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "isorep/error.hpp"
#include "isorep/torus.hpp"

namespace isorep {

// ---------------------------------------------------------------- FinGroup

FinGroup::FinGroup(std::vector<std::vector<int>> table) : table_(std::move(table)) {
  const int n = order();
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == 0 && table_[b][a] == 0) {
        inverse_[a] = b;
        break;
      }
  std::vector<int> covered{0};
  for (int x = 1; x < n; ++x) {
    if (std::binary_search(covered.begin(), covered.end(), x)) continue;
    generators_.push_back(x);
    covered = closure(generators_);
  }
}

FinGroup FinGroup::from_table(std::vector<std::vector<int>> table) {
  const std::size_t n = table.size();
  if (n == 0) throw InputError("group table is empty");
  for (const auto& row : table) {
    if (row.size() != n) throw InputError("group table is not square");
    for (int x : row)
      if (x < 0 || static_cast<std::size_t>(x) >= n) throw InputError("group table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    if (table[0][a] != static_cast<int>(a) || table[a][0] != static_cast<int>(a))
      throw InputError("element 0 is not the identity");
  for (std::size_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (std::size_t b = 0; b < n && !has_inverse; ++b) has_inverse = table[a][b] == 0 && table[b][a] == 0;
    if (!has_inverse) throw InputError("element " + std::to_string(a) + " has no inverse");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw InputError("group table is not associative at (" + std::to_string(a) + "," +
                           std::to_string(b) + "," + std::to_string(c) + ")");
  return FinGroup(std::move(table));
}

FinGroup FinGroup::trivial() { return FinGroup(std::vector<std::vector<int>>{{0}}); }

FinGroup FinGroup::cyclic(int n) {
  if (n < 1) throw InputError("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FinGroup(std::move(t));
}

FinGroup FinGroup::symmetric(int n) {
  if (n < 1 || n > 6) throw InputError("symmetric group degree must be in [1, 6]");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> t(perms.size(), std::vector<int>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::vector<int> c(n);
      for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];  // a after b
      t[a][b] = index.at(c);
    }
  return FinGroup(std::move(t));
}

FinGroup FinGroup::dihedral(int n) {
  if (n < 1) throw InputError("dihedral group parameter must be positive");
  // r^k s^f is element k + n f.
  const int order = 2 * n;
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      const int a = x % n, f = x / n, b = y % n, g = y / n;
      const int k = ((f ? a - b : a + b) % n + n) % n;
      t[x][y] = k + n * ((f + g) % 2);
    }
  return FinGroup(std::move(t));
}

FinGroup FinGroup::quaternion() {
  // Element u + 4 s is (-1)^s times unit u in {1, i, j, k}.
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int u = x % 4, v = y % 4;
      const int s = (x / 4 + y / 4 + sign[u][v]) % 2;
      t[x][y] = unit[u][v] + 4 * s;
    }
  return FinGroup(std::move(t));
}

FinGroup FinGroup::direct_product(const FinGroup& a, const FinGroup& b) {
  const int na = a.order(), nb = b.order();
  std::vector<std::vector<int>> t(na * nb, std::vector<int>(na * nb));
  for (int x = 0; x < na * nb; ++x)
    for (int y = 0; y < na * nb; ++y)
      t[x][y] = a.mul(x % na, y % na) + na * b.mul(x / na, y / na);
  return FinGroup(std::move(t));
}

std::vector<int> FinGroup::closure(const std::vector<int>& elements) const {
  std::vector<char> seen(order(), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int g : elements) {
      const int y = mul(x, g);
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  std::vector<int> out;
  for (int x = 0; x < order(); ++x)
    if (seen[x]) out.push_back(x);
  return out;
}

// ---------------------------------------------------------------- GroupHom

GroupHom GroupHom::make(const FinGroup& source, const FinGroup& target, std::vector<int> image) {
  if (static_cast<int>(image.size()) != source.order())
    throw InputError("homomorphism image has " + std::to_string(image.size()) + " entries, source order is " +
                     std::to_string(source.order()));
  for (int y : image)
    if (y < 0 || y >= target.order()) throw InputError("homomorphism image out of range");
  for (int a = 0; a < source.order(); ++a)
    for (int b = 0; b < source.order(); ++b)
      if (image[source.mul(a, b)] != target.mul(image[a], image[b]))
        throw InputError("map is not a homomorphism at (" + std::to_string(a) + "," + std::to_string(b) + ")");
  return GroupHom(std::move(image), target.order());
}

GroupHom GroupHom::identity(const FinGroup& g) {
  std::vector<int> image(g.order());
  std::iota(image.begin(), image.end(), 0);
  return GroupHom(std::move(image), g.order());
}

GroupHom GroupHom::trivial(const FinGroup& source, const FinGroup& target) {
  return GroupHom(std::vector<int>(source.order(), 0), target.order());
}

std::vector<GroupHom> all_homomorphisms(const FinGroup& source, const FinGroup& target) {
  const auto& gens = source.generators();
  std::vector<GroupHom> out;
  std::vector<int> choice(gens.size(), 0);
  for (;;) {
    // Extend generator images along the Cayley graph, rejecting conflicts.
    std::vector<int> image(source.order(), -1);
    image[0] = 0;
    std::deque<int> queue{0};
    bool ok = true;
    while (!queue.empty() && ok) {
      const int x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < gens.size() && ok; ++i) {
        const int y = source.mul(x, gens[i]);
        const int fy = target.mul(image[x], choice[i]);
        if (image[y] < 0) {
          image[y] = fy;
          queue.push_back(y);
        } else if (image[y] != fy) {
          ok = false;
        }
      }
    }
    if (ok) {
      try {
        out.push_back(GroupHom::make(source, target, image));
      } catch (const InputError&) {
      }
    }
    std::size_t i = 0;
    for (; i < choice.size(); ++i) {
      if (++choice[i] < target.order()) break;
      choice[i] = 0;
    }
    if (i == choice.size()) break;
  }
  return out;
}

// ---------------------------------------------------------------- double cosets

void validate_instance(const DoubleCosetInstance& inst) {
  for (const auto& e : inst.edges) {
    auto eg = inst.edge_groups.find(e.edge);
    if (eg == inst.edge_groups.end()) throw InputError("no group for edge '" + e.edge + "'");
    for (const auto& v : {e.tail, e.head}) {
      auto vg = inst.vertex_groups.find(v);
      if (vg == inst.vertex_groups.end()) throw InputError("no group for vertex '" + v + "'");
      auto h = inst.homs.find({v, e.edge});
      if (h == inst.homs.end())
        throw InputError("no homomorphism for half-edge ('" + v + "', '" + e.edge + "')");
      if (h->second.source_order() != vg->second.order() || h->second.target_order() != eg->second.order())
        throw InputError("homomorphism for half-edge ('" + v + "', '" + e.edge + "') has the wrong shape");
    }
  }
}

DoubleCosetInstance make_instance(const CwComplex& graph, std::map<std::string, FinGroup> vertex_groups,
                                  std::map<std::string, FinGroup> edge_groups,
                                  std::map<std::pair<std::string, std::string>, GroupHom> homs) {
  DoubleCosetInstance inst{oriented_edges(skeleton(graph, 1)), std::move(vertex_groups),
                           std::move(edge_groups), std::move(homs)};
  validate_instance(inst);
  return inst;
}

namespace {

struct Move {
  std::vector<std::size_t> slots;  // half-edges touched
  std::vector<std::vector<int>> table;  // per slot: digit -> new digit
};

}  // namespace

DoubleCosetResult double_cosets(const DoubleCosetInstance& inst, std::uint64_t cap) {
  validate_instance(inst);
  const std::size_t slots = 2 * inst.edges.size();
  std::vector<const FinGroup*> slot_group(slots);
  std::vector<std::uint64_t> stride(slots, 1);
  std::uint64_t states = 1;
  for (std::size_t e = 0; e < inst.edges.size(); ++e) {
    const FinGroup& p = inst.edge_groups.at(inst.edges[e].edge);
    slot_group[2 * e] = slot_group[2 * e + 1] = &p;
  }
  for (std::size_t s = slots; s-- > 0;) {
    stride[s] = states;
    const auto radix = static_cast<std::uint64_t>(slot_group[s]->order());
    if (states > cap / radix)
      throw InputError("double coset state space exceeds the cap of " + std::to_string(cap) +
                       " states (set ISOREP_STATE_CAP to raise it)");
    states *= radix;
  }

  // Left moves: a generator of P_v acts on every half-edge at v through j.
  std::vector<Move> moves;
  for (const auto& [v, pv] : inst.vertex_groups) {
    for (int g : pv.generators()) {
      Move m;
      for (std::size_t e = 0; e < inst.edges.size(); ++e) {
        const auto& edge = inst.edges[e];
        for (std::size_t side = 0; side < 2; ++side) {
          if ((side == 0 ? edge.tail : edge.head) != v) continue;
          const FinGroup& pe = *slot_group[2 * e];
          const int jg = inst.homs.at({v, edge.edge})(g);
          std::vector<int> t(pe.order());
          for (int z = 0; z < pe.order(); ++z) t[z] = pe.mul(jg, z);
          m.slots.push_back(2 * e + side);
          m.table.push_back(std::move(t));
        }
      }
      if (!m.slots.empty()) moves.push_back(std::move(m));
    }
  }
  // Right moves: a generator y of P_e acts by z -> z y^{-1} on both half-edges.
  for (std::size_t e = 0; e < inst.edges.size(); ++e) {
    const FinGroup& pe = *slot_group[2 * e];
    for (int y : pe.generators()) {
      std::vector<int> t(pe.order());
      for (int z = 0; z < pe.order(); ++z) t[z] = pe.mul(z, pe.inv(y));
      moves.push_back({{2 * e, 2 * e + 1}, {t, t}});
    }
  }

  DoubleCosetResult result;
  result.state_count = states;
  std::vector<std::uint32_t> orbit(states, 0);  // 0 = unvisited
  std::vector<int> digits(slots);
  std::vector<std::uint64_t> queue;
  for (std::uint64_t start = 0; start < states; ++start) {
    if (orbit[start]) continue;
    const auto id = static_cast<std::uint32_t>(++result.count);
    orbit[start] = id;
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::uint64_t s = queue[head];
      for (std::size_t i = 0; i < slots; ++i) digits[i] = static_cast<int>((s / stride[i]) % slot_group[i]->order());
      for (const auto& m : moves) {
        std::uint64_t t = s;
        for (std::size_t k = 0; k < m.slots.size(); ++k) {
          const std::size_t slot = m.slots[k];
          const int d = digits[slot];
          t = t - static_cast<std::uint64_t>(d) * stride[slot] +
              static_cast<std::uint64_t>(m.table[k][d]) * stride[slot];
        }
        if (!orbit[t]) {
          orbit[t] = id;
          queue.push_back(t);
        }
      }
    }
    std::vector<int> rep(slots);
    for (std::size_t i = 0; i < slots; ++i) rep[i] = static_cast<int>((start / stride[i]) % slot_group[i]->order());
    result.representatives.push_back(std::move(rep));
    result.orbit_sizes.push_back(queue.size());
  }
  return result;
}

DoubleCosetResult segment_double_cosets(const FinGroup& p0, const FinGroup& p01, const FinGroup& p1,
                                        const GroupHom& j0, const GroupHom& j1) {
  if (j0.source_order() != p0.order() || j0.target_order() != p01.order() ||
      j1.source_order() != p1.order() || j1.target_order() != p01.order())
    throw InputError("segment homomorphisms have the wrong shape");
  std::vector<int> left, right;
  for (int g : p0.generators()) left.push_back(j0(g));
  for (int g : p1.generators()) right.push_back(p01.inv(j1(g)));

  DoubleCosetResult result;
  result.state_count = static_cast<std::uint64_t>(p01.order());
  std::vector<char> seen(p01.order(), 0);
  for (int start = 0; start < p01.order(); ++start) {
    if (seen[start]) continue;
    seen[start] = 1;
    std::vector<int> queue{start};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int z = queue[head];
      auto visit = [&](int w) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      };
      for (int h : left) visit(p01.mul(h, z));
      for (int h : right) visit(p01.mul(z, h));
    }
    ++result.count;
    result.representatives.push_back({start});
    result.orbit_sizes.push_back(queue.size());
  }
  return result;
}

bool toral_edge_shortcut(const CellularGroupoid& g) {
  require_valid(g);
  for (const auto& e : g.complex().cells_of_dim(1))
    if (!structure(g.group(e)).pi0.empty()) return false;
  return true;
}

// ---------------------------------------------------------------- kappa lifts

KappaLiftResult kappa_lift_rank1(const CellularGroupoid& g, const WeightFamily& classes,
                                 const KappaLiftOptions& options) {
  require_valid(g);
  if (!is_zero_toric(g)) throw DomainError("kappa lift search requires a zero-toric groupoid");
  const auto vertices = g.complex().vertices();
  for (const auto& v : vertices) {
    auto it = classes.find(v);
    if (it == classes.end()) throw InputError("no class for vertex '" + v + "'");
    if (it->second.size() != g.ambient_rank()) throw InputError("class for vertex '" + v + "' has the wrong length");
  }
  if (classes.size() != vertices.size()) throw InputError("classes name a vertex the complex does not have");
  if (vertices.size() > options.max_vertices)
    throw InputError("kappa lift search over " + std::to_string(vertices.size()) +
                     " vertices exceeds the cap of " + std::to_string(options.max_vertices));

  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = i;
  const auto edges = oriented_edges(g.complex());

  std::vector<std::size_t> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges) {
    const std::size_t a = find(index[e.tail]), b = find(index[e.head]);
    parent[std::max(a, b)] = std::min(a, b);  // roots stay the smallest vertex
  }
  std::vector<std::size_t> free_vertices;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (!options.fix_component_signs || find(i) != i) free_vertices.push_back(i);

  struct EdgeTest {
    std::size_t tail, head;
    const LatticeBasis* ann;
  };
  std::vector<EdgeTest> tests;
  for (const auto& e : edges) tests.push_back({index[e.tail], index[e.head], &g.group(e.edge).annihilator()});

  std::vector<IntVector> base(vertices.size()), negated(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    base[i] = classes.at(vertices[i]);
    negated[i] = Int(-1) * base[i];
  }

  KappaLiftResult result;
  const std::size_t k = free_vertices.size();
  result.search_space = std::uint64_t{1} << k;
  std::vector<int> sign(vertices.size(), 1);
  for (std::uint64_t mask = 0; mask < result.search_space; ++mask) {
    for (std::size_t b = 0; b < k; ++b) sign[free_vertices[b]] = ((mask >> (k - 1 - b)) & 1) ? -1 : 1;
    ++result.assignments_checked;
    const bool ok = std::all_of(tests.begin(), tests.end(), [&](const EdgeTest& t) {
      const IntVector& a = sign[t.tail] > 0 ? base[t.tail] : negated[t.tail];
      const IntVector& b = sign[t.head] > 0 ? base[t.head] : negated[t.head];
      return lattice_member(b - a, *t.ann);
    });
    if (!ok) continue;
    WeightFamily witness;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      witness.emplace(vertices[i], sign[i] > 0 ? base[i] : negated[i]);
      result.signs.emplace(vertices[i], sign[i]);
    }
    result.witness = std::move(witness);
    break;
  }
  return result;
}

// ---------------------------------------------------------------- Weyl canonical forms

IntVector weyl_canonical(WeylSeries series, const IntVector& v) {
  IntVector out;
  out.reserve(v.size());
  std::size_t negatives = 0;
  bool has_zero = false;
  for (const auto& x : v) {
    if (x < 0) ++negatives;
    if (x == 0) has_zero = true;
    out.push_back(abs(x));
  }
  std::sort(out.begin(), out.end());
  if (series == WeylSeries::D && negatives % 2 == 1 && !has_zero) out.back() = -out.back();
  return out;
}

}  // namespace isorep
