#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <thread>
#include <vector>

namespace rauzy {

using Index = Eigen::Index;

template <typename Scalar>
using DenseVec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using DenseMat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// Exact integer lattice coordinates; the canonical identity of every point.
using LatticeVec = DenseVec<std::int64_t>;
using LatticeMat = DenseMat<std::int64_t>;

using RealVec = DenseVec<double>;
using RealMat = DenseMat<double>;
using PlaneVec = Eigen::Vector2d;

// Lexicographic order (size first) so integer vectors can key ordered maps.
struct LatticeLess {
  bool operator()(const LatticeVec& a, const LatticeVec& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Index i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

inline LatticeVec unit_lattice(Index dim, Index axis) {
  LatticeVec e = LatticeVec::Zero(dim);
  e[axis] = 1;
  return e;
}

inline int hardware_workers() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

// Runs emit(i, out) for i in [0, n) split over `workers` threads.  Per-chunk
// outputs are concatenated in chunk order, so the resulting sequence is the
// same as a sequential run for any worker count.
template <typename T, typename Emit>
std::vector<T> ordered_parallel_emit(std::size_t n, int workers, const Emit& emit) {
  std::vector<T> out;
  if (n == 0) return out;
  if (workers < 2 || n < 64) {
    for (std::size_t i = 0; i < n; ++i) emit(i, out);
    return out;
  }
  const std::size_t chunks = static_cast<std::size_t>(workers);
  std::vector<std::vector<T>> parts(chunks);
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t lo = n * c / chunks;
    const std::size_t hi = n * (c + 1) / chunks;
    pool.emplace_back([&, c, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) emit(i, parts[c]);
    });
  }
  for (auto& t : pool) t.join();
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  out.reserve(total);
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace rauzy
