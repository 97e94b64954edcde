#include "isorep/io.hpp"

#include <sstream>

#include "isorep/error.hpp"

namespace isorep::io {

namespace {

const json& field(const json& j, const char* key, const char* context) {
  if (!j.is_object()) throw InputError(std::string(context) + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string(context) + ": missing field '" + key + "'");
  return *it;
}

std::size_t count_from_json(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw InputError(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

std::string string_from_json(const json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

}  // namespace

// ---------------------------------------------------------------- integers

json to_json(const Int& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

json to_json(const IntVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const IntMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

Int int_from_json(const json& j) {
  if (j.is_number_unsigned()) return Int(std::to_string(j.get<unsigned long long>()));
  if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    Int x;
    if (s.empty() || x.set_str(s, 10) != 0) throw InputError("'" + s + "' is not an integer");
    return x;
  }
  throw InputError("expected an integer, got " + j.dump());
}

IntVector vector_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected an integer array, got " + j.dump());
  IntVector v;
  for (const auto& x : j) v.push_back(int_from_json(x));
  return v;
}

IntMatrix matrix_from_json(const json& j, std::size_t cols) {
  if (!j.is_array()) throw InputError("expected an array of rows, got " + j.dump());
  IntMatrix m(0, cols);
  for (const auto& row : j) {
    IntVector v = vector_from_json(row);
    if (v.size() != cols)
      throw InputError("row " + row.dump() + " has " + std::to_string(v.size()) + " entries, expected " +
                       std::to_string(cols));
    m.append_row(v);
  }
  return m;
}

// ---------------------------------------------------------------- complexes

json to_json(const CwComplex& c) {
  json cells = json::array();
  for (const auto& [id, cell] : c.cells()) {
    json jc = {{"id", id}, {"dim", cell.dim}, {"faces", json(std::vector<std::string>(cell.faces.begin(), cell.faces.end()))}};
    if (c.simplicial()) jc["vertices"] = cell.vertices;
    cells.push_back(std::move(jc));
  }
  return {{"cells", std::move(cells)}, {"simplicial", c.simplicial()}};
}

CwComplex complex_from_json(const json& j) {
  const json& cells = field(j, "cells", "complex");
  if (!cells.is_array()) throw InputError("complex: 'cells' must be an array");
  bool simplicial = false;
  if (auto it = j.find("simplicial"); it != j.end()) {
    if (!it->is_boolean()) throw InputError("complex: 'simplicial' must be a boolean");
    simplicial = it->get<bool>();
  }
  CwComplex c(simplicial);
  for (const auto& jc : cells) {
    Cell cell;
    cell.id = string_from_json(field(jc, "id", "cell"), "cell id");
    const json& dim = field(jc, "dim", "cell");
    if (!dim.is_number_integer()) throw InputError("cell '" + cell.id + "': dim must be an integer");
    cell.dim = dim.get<int>();
    if (auto it = jc.find("faces"); it != jc.end()) {
      if (!it->is_array()) throw InputError("cell '" + cell.id + "': faces must be an array");
      for (const auto& f : *it) cell.faces.insert(string_from_json(f, "face id"));
    }
    if (auto it = jc.find("vertices"); it != jc.end()) {
      if (!it->is_array()) throw InputError("cell '" + cell.id + "': vertices must be an array");
      for (const auto& v : *it) cell.vertices.push_back(string_from_json(v, "vertex id"));
    }
    c.add_cell(std::move(cell));
  }
  return close_faces(c);
}

// ---------------------------------------------------------------- tori and groupoids

json to_json(const TorusSubgroup& h) {
  return {{"ambient_rank", h.ambient_rank()}, {"characters", to_json(h.annihilator().basis())}};
}

TorusSubgroup torus_from_json(const json& j, std::size_t default_rank) {
  if (!j.is_object()) throw InputError("torus subgroup: expected a JSON object");
  std::size_t n = default_rank;
  if (auto it = j.find("ambient_rank"); it != j.end()) n = count_from_json(*it, "ambient_rank");
  IntMatrix chars(0, n);
  if (auto it = j.find("characters"); it != j.end()) chars = matrix_from_json(*it, n);
  return subgroup_from_characters(n, chars);
}

json to_json(const CellularGroupoid& g) {
  json groups = json::object();
  for (const auto& [id, h] : g.groups()) {
    json jh = {{"characters", to_json(h.annihilator().basis())}};
    if (h.ambient_rank() != g.ambient_rank()) jh["ambient_rank"] = h.ambient_rank();
    groups[id] = std::move(jh);
  }
  return {{"complex", to_json(g.complex())}, {"ambient_rank", g.ambient_rank()}, {"groups", std::move(groups)}};
}

CellularGroupoid groupoid_from_json(const json& j) {
  CwComplex c = complex_from_json(field(j, "complex", "groupoid"));
  const std::size_t n = count_from_json(field(j, "ambient_rank", "groupoid"), "ambient_rank");
  const json& jg = field(j, "groups", "groupoid");
  if (!jg.is_object()) throw InputError("groupoid: 'groups' must map cell ids to subgroups");
  std::map<std::string, TorusSubgroup> groups;
  for (const auto& [id, h] : jg.items()) {
    try {
      groups.emplace(id, torus_from_json(h, n));
    } catch (const InputError& e) {
      throw InputError("group of cell '" + id + "': " + e.what());
    }
  }
  return {std::move(c), n, std::move(groups)};
}

json to_json(const WeightFamily& f) {
  json j = json::object();
  for (const auto& [v, a] : f) j[v] = to_json(a);
  return j;
}

WeightFamily family_from_json(const json& j) {
  if (!j.is_object()) throw InputError("weight family: expected an object mapping vertex ids to vectors");
  WeightFamily f;
  for (const auto& [v, a] : j.items()) f.emplace(v, vector_from_json(a));
  return f;
}

// ---------------------------------------------------------------- results

json to_json(const RepGroup& r) {
  json gens = json::array();
  for (const auto& g : r.generators) gens.push_back(to_json(g));
  return {{"free_rank", r.free_rank}, {"torsion", to_json(r.torsion)}, {"generators", std::move(gens)},
          {"orders", to_json(r.orders)}};
}

json to_json(const CohomologyGroup& h) {
  return {{"free_rank", h.free_rank}, {"torsion", to_json(h.torsion)}};
}

json to_json(const BundleGroup& b) {
  std::vector<Int> orders(b.rep.free_rank + b.h2.free_rank, Int(0));
  orders.insert(orders.end(), b.rep.torsion.begin(), b.rep.torsion.end());
  orders.insert(orders.end(), b.h2.torsion.begin(), b.h2.torsion.end());
  const AbelianInvariants total = normalize_cyclic_orders(orders);
  return {{"rep", to_json(b.rep)},
          {"h2", to_json(b.h2)},
          {"total", {{"free_rank", total.free_rank}, {"torsion", to_json(total.torsion)}}}};
}

json to_json(const EulerNumbers& k) {
  json m = json::object();
  for (const auto& [e, x] : k) m[e] = to_json(x);
  return {{"euler_numbers", std::move(m)},
          {"convention", "edges oriented from the smaller to the larger vertex id; chi_e has its first nonzero entry positive"}};
}

json to_json(const AffineReport& r) {
  json edges = json::array();
  for (const auto& e : r.edges)
    edges.push_back({{"edge", e.edge},
                     {"tail", e.tail},
                     {"head", e.head},
                     {"character", to_json(e.character)},
                     {"euler", to_json(e.euler)},
                     {"direction", to_json(e.direction)},
                     {"lattice_length", to_json(e.lattice_length)}});
  json cells = json::array();
  for (const auto& c : r.cells) cells.push_back({{"cell", c.cell}, {"affine", c.affine}});
  return {{"gkm", "ok"}, {"affine_consistent", r.affine_consistent}, {"edges", std::move(edges)}, {"cells", std::move(cells)}};
}

json to_json(const KappaLiftResult& r) {
  json j = {{"assignments_checked", r.assignments_checked}, {"search_space", r.search_space}};
  if (r.witness) {
    j["lift"] = to_json(*r.witness);
    j["signs"] = r.signs;
    j["message"] = "lift found after " + std::to_string(r.assignments_checked) + " assignments";
  } else {
    j["lift"] = nullptr;
    j["message"] = "no lift; " + std::to_string(r.assignments_checked) + " assignments checked";
  }
  return j;
}

json to_json(const DoubleCosetInstance& inst, const DoubleCosetResult& r) {
  json half_edges = json::array();
  for (const auto& e : inst.edges) {
    half_edges.push_back({e.tail, e.edge});
    half_edges.push_back({e.head, e.edge});
  }
  return {{"count", r.count},
          {"states", r.state_count},
          {"half_edges", std::move(half_edges)},
          {"representatives", r.representatives},
          {"orbit_sizes", r.orbit_sizes}};
}

json to_json(const std::vector<GroupoidViolation>& violations) {
  json a = json::array();
  for (const auto& v : violations) {
    json jv = {{"cell", v.cell}, {"reason", v.reason}};
    if (!v.face.empty()) jv["face"] = v.face;
    a.push_back(std::move(jv));
  }
  return a;
}

// ---------------------------------------------------------------- finite groups

FinGroup fingroup_from_json(const json& j) {
  if (!j.is_object()) throw InputError("finite group: expected a JSON object");
  if (auto it = j.find("catalog"); it != j.end()) {
    const std::string name = string_from_json(*it, "catalog");
    auto param = [&] {
      auto n = j.find("n");
      if (n == j.end() || !n->is_number_integer()) throw InputError("catalog group '" + name + "' needs an integer 'n'");
      return n->get<int>();
    };
    if (name == "trivial") return FinGroup::trivial();
    if (name == "cyclic") return FinGroup::cyclic(param());
    if (name == "symmetric") return FinGroup::symmetric(param());
    if (name == "dihedral") return FinGroup::dihedral(param());
    if (name == "quaternion") return FinGroup::quaternion();
    throw InputError("unknown catalog group '" + name + "'");
  }
  const json& table = field(j, "table", "finite group");
  if (!table.is_array()) throw InputError("finite group: 'table' must be an array of rows");
  std::vector<std::vector<int>> t;
  try {
    t = table.get<std::vector<std::vector<int>>>();
  } catch (const json::exception&) {
    throw InputError("finite group: table entries must be integers");
  }
  if (auto it = j.find("order"); it != j.end() && count_from_json(*it, "order") != t.size())
    throw InputError("finite group: order does not match the table size");
  return FinGroup::from_table(std::move(t));
}

json to_json(const FinGroup& g) { return {{"order", g.order()}, {"table", g.table()}}; }

DoubleCosetInstance instance_from_json(const json& j) {
  const CwComplex c = complex_from_json(field(j, "complex", "double coset instance"));
  if (const auto v = validate_regular(c); !v.empty())
    throw InputError("double coset instance: complex invalid at '" + v.front().cell + "': " + v.front().reason);
  std::map<std::string, FinGroup> vertex_groups, edge_groups;
  for (const auto& [id, g] : field(j, "vertex_groups", "double coset instance").items())
    vertex_groups.emplace(id, fingroup_from_json(g));
  for (const auto& [id, g] : field(j, "edge_groups", "double coset instance").items())
    edge_groups.emplace(id, fingroup_from_json(g));

  std::map<std::pair<std::string, std::string>, GroupHom> homs;
  if (auto it = j.find("homs"); it != j.end()) {
    if (!it->is_array()) throw InputError("double coset instance: 'homs' must be an array");
    for (const auto& h : *it) {
      const std::string v = string_from_json(field(h, "vertex", "hom"), "hom vertex");
      const std::string e = string_from_json(field(h, "edge", "hom"), "hom edge");
      auto vg = vertex_groups.find(v);
      auto eg = edge_groups.find(e);
      if (vg == vertex_groups.end() || eg == edge_groups.end())
        throw InputError("hom ('" + v + "', '" + e + "') refers to a missing group");
      GroupHom hom = [&] {
        if (auto m = h.find("map"); m != h.end()) {
          const std::string kind = string_from_json(*m, "hom map");
          if (kind == "trivial") return GroupHom::trivial(vg->second, eg->second);
          if (kind == "identity") {
            if (!(vg->second == eg->second)) throw InputError("identity hom between different groups");
            return GroupHom::identity(vg->second);
          }
          throw InputError("unknown hom map '" + kind + "'");
        }
        std::vector<int> image;
        try {
          image = field(h, "image", "hom").get<std::vector<int>>();
        } catch (const json::exception&) {
          throw InputError("hom image must be an integer array");
        }
        return GroupHom::make(vg->second, eg->second, std::move(image));
      }();
      if (!homs.emplace(std::make_pair(v, e), std::move(hom)).second)
        throw InputError("duplicate hom for ('" + v + "', '" + e + "')");
    }
  }
  // A trivial source group has exactly one hom, which may be left implicit.
  for (const auto& e : oriented_edges(skeleton(c, 1))) {
    for (const auto& v : {e.tail, e.head}) {
      auto vg = vertex_groups.find(v);
      auto eg = edge_groups.find(e.edge);
      if (vg != vertex_groups.end() && eg != edge_groups.end() && vg->second.order() == 1)
        homs.emplace(std::make_pair(v, e.edge), GroupHom::trivial(vg->second, eg->second));
    }
  }
  return make_instance(c, std::move(vertex_groups), std::move(edge_groups), std::move(homs));
}

// ---------------------------------------------------------------- misc

CohomologyGroup parse_h2_override(const std::string& spec) {
  CohomologyGroup h;
  bool in_torsion = false;
  bool saw_free = false;
  std::stringstream ss(spec);
  std::string token;
  auto parse_int = [&](const std::string& s) {
    Int x;
    if (s.empty() || x.set_str(s, 10) != 0 || x < 0) throw InputError("--h2: '" + s + "' is not a nonnegative integer");
    return x;
  };
  while (std::getline(ss, token, ',')) {
    if (token.rfind("free=", 0) == 0) {
      h.free_rank = parse_int(token.substr(5)).get_ui();
      saw_free = true;
      in_torsion = false;
    } else if (token.rfind("torsion=", 0) == 0) {
      in_torsion = true;
      if (token.size() > 8) h.torsion.push_back(parse_int(token.substr(8)));
    } else if (in_torsion) {
      h.torsion.push_back(parse_int(token));
    } else {
      throw InputError("--h2: expected 'free=r,torsion=d1,d2,...', got '" + spec + "'");
    }
  }
  if (!saw_free) throw InputError("--h2: missing 'free=r'");
  std::vector<Int> orders(h.free_rank, Int(0));
  orders.insert(orders.end(), h.torsion.begin(), h.torsion.end());
  const AbelianInvariants norm = normalize_cyclic_orders(orders);
  h.torsion = norm.torsion;
  return h;
}

CellularGroupoid build_example(const std::string& name, const json& params) {
  const json p = params.is_null() ? json::object() : params;
  if (!p.is_object()) throw InputError("example parameters must be a JSON object");
  auto chars_param = [&](const char* key, const IntMatrix& fallback) {
    auto it = p.find(key);
    if (it == p.end()) return fallback;
    if (!it->is_array() || it->empty() || !(*it)[0].is_array())
      throw InputError(std::string("parameter '") + key + "' must be a nonempty array of rows");
    return matrix_from_json(*it, (*it)[0].size());
  };
  if (name == "simplex_sphere") return simplex_sphere(chars_param("characters", IntMatrix::identity(3)));
  if (name == "quotient") {
    const IntMatrix chars = chars_param("characters", IntMatrix::identity(3));
    const std::size_t n = chars.cols();
    IntMatrix diagonal(0, n);  // annihilator of the diagonal circle
    for (std::size_t i = 0; i + 1 < n; ++i) {
      IntVector row(n, Int(0));
      row[i] = 1;
      row[i + 1] = -1;
      diagonal.append_row(row);
    }
    IntMatrix gamma0 = diagonal;
    if (auto it = p.find("gamma0"); it != p.end()) gamma0 = matrix_from_json(*it, n);
    return quotient(simplex_sphere(chars), subgroup_from_characters(n, gamma0));
  }
  if (name == "cp1") {
    IntVector chi = make_vector({1});
    if (auto it = p.find("chi"); it != p.end()) chi = vector_from_json(*it);
    return cp1(chi);
  }
  if (name == "hirzebruch") return hirzebruch();
  if (name == "cp2_kappanotonto") return cp2_kappanotonto();
  if (name == "segment") {
    const std::size_t n = count_from_json(field(p, "ambient_rank", "segment"), "ambient_rank");
    auto sub = [&](const char* key) {
      auto it = p.find(key);
      return subgroup_from_characters(n, it == p.end() ? IntMatrix(0, n) : matrix_from_json(*it, n));
    };
    return segment(sub("h0"), sub("h1"), sub("h01"));
  }
  throw InputError("unknown example '" + name +
                   "' (expected simplex_sphere, quotient, cp1, hirzebruch, segment or cp2_kappanotonto)");
}

}  // namespace isorep::io
