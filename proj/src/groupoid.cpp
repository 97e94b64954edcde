#include "isorep/groupoid.hpp"

#include <stdexcept>

#include "isorep/error.hpp"

namespace isorep {

CellularGroupoid::CellularGroupoid(CwComplex complex, std::size_t ambient_rank,
                                   std::map<std::string, TorusSubgroup> groups)
    : complex_(std::move(complex)), ambient_rank_(ambient_rank), groups_(std::move(groups)) {}

const TorusSubgroup& CellularGroupoid::group(const std::string& cell) const {
  auto it = groups_.find(cell);
  if (it == groups_.end()) throw InputError("no group assigned to cell '" + cell + "'");
  return it->second;
}

std::vector<GroupoidViolation> validate_groupoid(const CellularGroupoid& g) {
  std::vector<GroupoidViolation> out;
  for (const auto& v : validate_regular(g.complex())) out.push_back({"", v.cell, v.reason});

  const auto& groups = g.groups();
  for (const auto& [id, h] : groups) {
    if (!g.complex().has_cell(id)) out.push_back({"", id, "group assigned to unknown cell"});
    if (h.ambient_rank() != g.ambient_rank())
      out.push_back({"", id,
                     "torus rank " + std::to_string(h.ambient_rank()) + ", expected " +
                         std::to_string(g.ambient_rank())});
  }
  auto usable = [&](const std::string& id) {
    auto it = groups.find(id);
    return it != groups.end() && it->second.ambient_rank() == g.ambient_rank();
  };
  for (const auto& [id, cell] : g.complex().cells()) {
    if (!groups.count(id)) {
      out.push_back({"", id, "no group assigned"});
      continue;
    }
    if (!usable(id)) continue;
    for (const auto& f : cell.faces) {
      if (!usable(f)) continue;
      if (!contains(groups.at(f), groups.at(id)))
        out.push_back({f, id, "group of '" + id + "' is not contained in group of face '" + f + "'"});
    }
  }
  return out;
}

void require_valid(const CellularGroupoid& g) {
  const auto v = validate_groupoid(g);
  if (v.empty()) return;
  const auto& first = v.front();
  std::vector<std::string> ids;
  if (!first.face.empty()) ids.push_back(first.face);
  ids.push_back(first.cell);
  throw DomainError("invalid groupoid: " + first.reason, ids);
}

bool is_zero_toric(const CellularGroupoid& g) {
  for (const auto& v : g.complex().vertices())
    if (!g.group(v).is_full()) return false;
  return true;
}

std::optional<std::map<std::string, IntVector>> one_toric_characters(const CellularGroupoid& g) {
  if (!is_zero_toric(g)) return std::nullopt;
  std::map<std::string, IntVector> chars;
  for (const auto& e : g.complex().cells_of_dim(1)) {
    const LatticeBasis& ann = g.group(e).annihilator();
    if (ann.rank() != 1) return std::nullopt;
    IntVector chi = ann.basis().row(0);
    if (!is_primitive(chi)) return std::nullopt;
    chars.emplace(e, normalize_sign(std::move(chi)));
  }
  return chars;
}

bool is_one_toric(const CellularGroupoid& g) { return one_toric_characters(g).has_value(); }

CellularGroupoid restrict_to_skeleton(const CellularGroupoid& g, int k) {
  CwComplex sk = skeleton(g.complex(), k);
  std::map<std::string, TorusSubgroup> groups;
  for (const auto& [id, h] : g.groups())
    if (sk.has_cell(id)) groups.emplace(id, h);
  return {std::move(sk), g.ambient_rank(), std::move(groups)};
}

// ---------------------------------------------------------------- builders

namespace {

CellularGroupoid checked(CellularGroupoid g) {
  require_valid(g);
  return g;
}

TorusSubgroup kernel_of(std::size_t n, std::initializer_list<std::initializer_list<long>> chars) {
  return subgroup_from_characters(n, IntMatrix::from_rows(chars));
}

}  // namespace

CellularGroupoid simplex_sphere(const IntMatrix& characters) {
  if (characters.rows() == 0) throw std::invalid_argument("simplex_sphere needs at least one character");
  const std::size_t n = characters.cols();
  const int m = static_cast<int>(characters.rows()) - 1;
  CwComplex complex = simplex(m);
  std::map<std::string, TorusSubgroup> groups;
  for (const auto& [id, cell] : complex.cells()) {
    IntMatrix chars(0, n);
    for (const auto& v : cell.vertices) chars.append_row(characters.row(std::stoul(v)));
    groups.emplace(id, subgroup_from_characters(n, chars));
  }
  return checked({std::move(complex), n, std::move(groups)});
}

CellularGroupoid quotient(const CellularGroupoid& g, const TorusSubgroup& gamma0) {
  if (gamma0.ambient_rank() != g.ambient_rank())
    throw std::invalid_argument("quotient: subgroup lives in a torus of the wrong rank");
  std::map<std::string, TorusSubgroup> groups;
  for (const auto& [id, h] : g.groups()) groups.emplace(id, generated_join(h, gamma0));
  return checked({g.complex(), g.ambient_rank(), std::move(groups)});
}

CellularGroupoid cp1(const IntVector& chi) {
  if (is_zero(chi)) throw DomainError("cp1 needs a nontrivial character");
  const std::size_t n = chi.size();
  return segment(TorusSubgroup::full(n), TorusSubgroup::full(n),
                 subgroup_from_characters(n, IntMatrix::from_rows(n, {chi})));
}

CellularGroupoid segment(const TorusSubgroup& h0, const TorusSubgroup& h1,
                         const TorusSubgroup& h01) {
  CwComplex complex = simplex(1);
  std::map<std::string, TorusSubgroup> groups{{"0", h0}, {"1", h1}, {"01", h01}};
  return checked({std::move(complex), h0.ambient_rank(), std::move(groups)});
}

CellularGroupoid hirzebruch() {
  CwComplex c(false);
  for (const char* v : {"v1", "v2", "v3", "v4"}) c.add_cell({v, 0, {}, {}});
  c.add_cell({"e12", 1, {"v1", "v2"}, {}});
  c.add_cell({"e23", 1, {"v2", "v3"}, {}});
  c.add_cell({"e34", 1, {"v3", "v4"}, {}});
  c.add_cell({"e14", 1, {"v1", "v4"}, {}});
  c.add_cell({"f", 2, {"v1", "v2", "v3", "v4", "e12", "e23", "e34", "e14"}, {}});

  std::map<std::string, TorusSubgroup> groups;
  for (const char* v : {"v1", "v2", "v3", "v4"}) groups.emplace(v, TorusSubgroup::full(2));
  groups.emplace("e12", kernel_of(2, {{1, 0}}));   // {1} x S^1
  groups.emplace("e34", kernel_of(2, {{1, 0}}));
  groups.emplace("e14", kernel_of(2, {{0, 1}}));   // S^1 x {1}
  groups.emplace("e23", kernel_of(2, {{1, -1}}));  // diagonal
  groups.emplace("f", TorusSubgroup::trivial(2));
  return checked({std::move(c), 2, std::move(groups)});
}

std::map<std::string, IntVector> hirzebruch_coordinates() {
  return {{"v1", make_vector({0, 0})},
          {"v2", make_vector({2, 0})},
          {"v3", make_vector({1, 1})},
          {"v4", make_vector({0, 1})}};
}

CellularGroupoid cp2_kappanotonto() {
  CwComplex c = simplex(2);
  std::map<std::string, TorusSubgroup> groups;
  for (const char* v : {"0", "1", "2"}) groups.emplace(v, TorusSubgroup::full(2));
  groups.emplace("01", kernel_of(2, {{1, 0}}));   // 1 x S^1
  groups.emplace("02", kernel_of(2, {{0, 1}}));   // S^1 x 1
  groups.emplace("12", kernel_of(2, {{1, -1}}));  // diagonal
  groups.emplace("012", TorusSubgroup::trivial(2));
  return checked({std::move(c), 2, std::move(groups)});
}

}  // namespace isorep
