#ifndef AECC_CONSTRUCTIONS_CONSTRUCTIONS_HPP
#define AECC_CONSTRUCTIONS_CONSTRUCTIONS_HPP

#include <cstddef>
#include <cstdint>
#include <string>

#include <json.hpp>

#include "aecc/heights/code.hpp"

namespace aecc {

/// Coordinates split into n - k consecutive blocks of n / (n - k) entries.
/// Requires (n - k) | k.
struct BlockLayout {
  std::size_t block_count;
  std::size_t block_size;

  static BlockLayout for_code(std::size_t n, std::size_t k);

  std::size_t length() const { return block_count * block_size; }
  std::size_t block_of(std::size_t coordinate) const { return coordinate / block_size; }
  std::size_t offset_of(std::size_t coordinate) const { return coordinate % block_size; }
  std::size_t coordinate(std::size_t block, std::size_t offset) const {
    return block * block_size + offset;
  }
};

// Two parity rows: ones on the first half, ones on the second half. The code
// is every vector whose two halves each sum to zero; its h1 is n/2 - 1.
// Requires n even and n >= 4.
template <Scalar T>
CodeSpec<T> problem_b_code(std::size_t n);

// One 0/1 indicator parity row per block of BlockLayout(n, k); h1 = k/(n-k).
// Requires k > n - k >= 2 and (n - k) | k.
template <Scalar T>
CodeSpec<T> block_code(std::size_t n, std::size_t k);

// (k/(n-k), -1 x k/(n-k), 0, ..., 0): the codeword of block_code(n, k)
// attaining its height. Only needs (n - k) | k and k >= n - k, so it also
// covers problem_b_code(n) as the case n - k = 2.
template <Scalar T>
Vector<T> extremal_vector(std::size_t n, std::size_t k);

/// (n - k) x n parity-check matrix with i.i.d. standard normal entries from a
/// mt19937_64 seeded with `seed`, redrawn until full row rank (at most 100
/// attempts). Gaussian matrices have rotation-invariant kernels.
CodeSpec<double> random_code(std::size_t n, std::size_t k, std::uint64_t seed);

// {"construction": "problem_b" | "block" | "random", "n": .., "k": .., "seed": ..}
struct ConstructionSpec {
  std::string construction;
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;

  nlohmann::json to_json() const;
  static ConstructionSpec from_json(const nlohmann::json& j);

  template <Scalar T>
  CodeSpec<T> build() const;
};

}  // namespace aecc

#endif  // AECC_CONSTRUCTIONS_CONSTRUCTIONS_HPP
