#pragma once

// Shared fixtures for the unit and acceptance suites: standard quivers,
// deterministic pseudo-random instances, and the Dynkin/Kronecker suite the
// capacity-vs-oracle comparisons run on.

#include <cstdint>
#include <string>
#include <vector>

#include "quiver/datum.hpp"

namespace fixtures {

using namespace quiver;

// Tiny deterministic PRNG so expected values can be frozen.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  /// Uniform in [lo, hi] inclusive.
  long long range(long long lo, long long hi);
};

/// Two vertices "1", "2" and arrows a1..al from 1 to 2.
QuiverPtr kronecker(int l);

/// Chain 1 -> 2 -> ... -> n with arrows a1..a(n-1); orientation_mask bit k
/// flips arrow a(k+1).
QuiverPtr a_chain(int n, unsigned orientation_mask = 0);

/// Star with center "0" and leaves "1","2","3"; orientation_mask bit k flips
/// arrow a(k+1) (default: all arrows point into the center).
QuiverPtr d4_star(unsigned orientation_mask = 0);

/// The five-vertex quiver with arrows a:2->1, b:3->2, c:3->1, d:5->3, e:4->3.
QuiverPtr wild_example_quiver();

RationalMatrix unit_matrix(std::size_t n, std::size_t row, std::size_t col);

Representation representation_from_integers(
    QuiverPtr q, const std::vector<long long>& dims,
    const std::vector<std::vector<std::vector<long long>>>& per_arrow);

/// Random representation with entries in [lo, hi] (occasional denominators
/// of 2 or 3 when with_denominators).
Representation random_representation(QuiverPtr q,
                                     const std::vector<long long>& dims,
                                     Rng& rng, long long lo = -3,
                                     long long hi = 3,
                                     bool with_denominators = false);

/// Random weight with sigma . beta = 0 built from moves sigma += c*(beta(y)
/// e_x - beta(x) e_y); may be zero.
Weight random_orthogonal_weight(const DimensionVector& beta, Rng& rng,
                                int moves = 3, long long max_coeff = 1);

/// Random per-vertex base change with entries in {-2..2}, retried until
/// every block is invertible.
std::vector<RationalMatrix> random_base_change(const Quiver& q,
                                               const DimensionVector& beta,
                                               Rng& rng);

struct NamedDatum {
  std::string name;
  QuiverDatum datum;
};

/// Deterministic Dynkin/Kronecker suite (>= 30 data) used by the
/// capacity-vs-exact-oracle agreement checks.
std::vector<NamedDatum> dynkin_kronecker_suite();

/// Random instance over K_2 / A_3 / D_4 orientations with all beta(x) <= 2
/// and family matrix size N <= 6 (retries until the bound holds).
QuiverDatum random_small_instance(Rng& rng);

}  // namespace fixtures
