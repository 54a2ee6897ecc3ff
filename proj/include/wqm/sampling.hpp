#ifndef WQM_SAMPLING_HPP
#define WQM_SAMPLING_HPP

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "wqm/errors.hpp"

namespace wqm {

// Deterministic engine for seeded sweeps; the seed is recorded in every
// report that uses it.
using Rng = std::mt19937_64;

template <class V>
std::vector<V> sample_from(const std::vector<V>& pool, int count, Rng& rng) {
  if (pool.empty()) throw InputError("cannot sample from an empty pool");
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<V> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(pool[pick(rng)]);
  return out;
}

template <class V>
std::vector<std::vector<V>> sample_tuples(const std::vector<V>& pool, int arity,
                                          int count, Rng& rng) {
  if (pool.empty()) throw InputError("cannot sample from an empty pool");
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<std::vector<V>> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    std::vector<V> t;
    t.reserve(static_cast<std::size_t>(arity));
    for (int j = 0; j < arity; ++j) t.push_back(pool[pick(rng)]);
    out.push_back(std::move(t));
  }
  return out;
}

template <class V>
std::vector<std::array<V, 3>> sample_triples(const std::vector<V>& pool, int count,
                                             Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<std::array<V, 3>> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    out.push_back({pool[pick(rng)], pool[pick(rng)], pool[pick(rng)]});
  }
  return out;
}

template <class V>
std::vector<std::array<V, 3>> all_triples(const std::vector<V>& pool) {
  std::vector<std::array<V, 3>> out;
  out.reserve(pool.size() * pool.size() * pool.size());
  for (const auto& x : pool) {
    for (const auto& y : pool) {
      for (const auto& z : pool) out.push_back({x, y, z});
    }
  }
  return out;
}

}  // namespace wqm

#endif  // WQM_SAMPLING_HPP
