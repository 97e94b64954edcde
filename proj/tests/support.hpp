#pragma once

// Conversions between library values and the oracle's machine integers.

#include <random>

#include "isorep/intlat.hpp"
#include "oracles.hpp"

namespace support {

inline oracle::Vec to_ll(const isorep::IntVector& v) {
  oracle::Vec out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

inline oracle::Mat to_ll(const isorep::IntMatrix& m) {
  oracle::Mat out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_ll(m.row(r)));
  return out;
}

inline isorep::IntVector from_ll(const oracle::Vec& v) {
  isorep::IntVector out;
  for (long long x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

inline isorep::IntMatrix from_ll(std::size_t cols, const oracle::Mat& m) {
  std::vector<isorep::IntVector> rows;
  for (const auto& r : m) rows.push_back(from_ll(r));
  return isorep::IntMatrix::from_rows(cols, rows);
}

inline oracle::Mat random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  oracle::Mat m(rows, oracle::Vec(cols));
  for (auto& r : m)
    for (auto& x : r) x = d(rng);
  return m;
}

// Calls f on every integer vector in [-b, b]^n.
template <class F>
void for_each_box_point(std::size_t n, long long b, F&& f) {
  oracle::Vec v(n, -b);
  while (true) {
    f(v);
    std::size_t i = 0;
    while (i < n && v[i] == b) v[i++] = -b;
    if (i == n) return;
    ++v[i];
  }
}

}  // namespace support
