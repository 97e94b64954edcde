#include "isorep/torus.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace isorep {

namespace {

void require_same_rank(const TorusSubgroup& h, const TorusSubgroup& k, const char* what) {
  if (h.ambient_rank() != k.ambient_rank()) {
    throw std::invalid_argument(std::string(what) + ": torus rank mismatch (" +
                                std::to_string(h.ambient_rank()) + " vs " +
                                std::to_string(k.ambient_rank()) + ")");
  }
}

}  // namespace

TorusSubgroup::TorusSubgroup(std::size_t ambient_rank, LatticeBasis annihilator)
    : ambient_rank_(ambient_rank), ann_(std::move(annihilator)) {
  if (ann_.ambient_dim() != ambient_rank_)
    throw std::invalid_argument("annihilator lattice lives in the wrong ambient dimension");
}

TorusSubgroup TorusSubgroup::full(std::size_t n) { return {n, LatticeBasis(n)}; }

TorusSubgroup TorusSubgroup::trivial(std::size_t n) { return {n, LatticeBasis::full(n)}; }

TorusSubgroup subgroup_from_characters(std::size_t n, const IntMatrix& chars) {
  if (chars.cols() != n && !(chars.rows() == 0 && chars.cols() == 0)) {
    throw std::invalid_argument("characters have " + std::to_string(chars.cols()) +
                                " entries, torus rank is " + std::to_string(n));
  }
  if (chars.rows() == 0) return TorusSubgroup::full(n);
  return {n, hnf(chars)};
}

bool contains(const TorusSubgroup& h, const TorusSubgroup& k) {
  require_same_rank(h, k, "contains");
  return lattice_contains(k.annihilator(), h.annihilator());
}

TorusSubgroup intersect(const TorusSubgroup& h, const TorusSubgroup& k) {
  require_same_rank(h, k, "intersect");
  return {h.ambient_rank(), lattice_sum(h.annihilator(), k.annihilator())};
}

TorusSubgroup generated_join(const TorusSubgroup& h, const TorusSubgroup& k) {
  require_same_rank(h, k, "generated_join");
  return {h.ambient_rank(), lattice_intersect(h.annihilator(), k.annihilator())};
}

SubgroupStructure structure(const TorusSubgroup& h) {
  QuotientStructure q(h.annihilator());
  return {h.dimension(), q.invariant_factors(), std::move(q)};
}

bool is_primitive(const IntVector& chi) {
  Int g = 0;
  for (const auto& x : chi) g = gcd(g, x);
  return g == 1;
}

IntVector normalize_sign(IntVector chi) {
  for (const auto& x : chi) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : chi) y = -y;
    break;
  }
  return chi;
}

}  // namespace isorep
