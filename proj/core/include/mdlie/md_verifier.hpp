#pragma once

#include "mdlie/kirillov.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>

namespace mdlie {

// Orbit dimensions seen while evaluating B_F over a deterministic battery
// (all {0,1}-coordinate functionals) plus seeded random samples.
struct RankSpectrum {
    std::set<std::size_t> observed;  // always even values
    std::size_t max_rank = 0;        // max of observed
    std::size_t sample_count = 0;    // total functionals evaluated
};

enum class MDStatus { Certified, Refuted, Inconclusive };

// Outcome of the MD decision. max_rank here is the generic (symbolic) rank
// of B_F, which defines "maximal orbit dimension" independently of sampling
// luck; spectrum.max_rank is merely the largest rank actually observed.
struct MDVerdict {
    MDStatus status = MDStatus::Inconclusive;
    std::optional<Functional> witness;  // present iff Refuted: 0 < rank < max_rank there
    RankSpectrum spectrum;
    std::size_t max_rank = 0;
    std::string certificate_trace;
};

const char* md_status_name(MDStatus s);  // "certified" | "refuted" | "inconclusive"

// Ranks of B_F over the {0,1} battery plus `samples` random functionals
// with coordinates p/q, p in [-9,9], q in [1,9], drawn from a seeded
// mt19937_64. Deterministic for fixed (algebra, samples, seed).
RankSpectrum rank_spectrum(const LieAlgebra& g, std::size_t samples, std::uint64_t seed);

// Decides whether every coadjoint orbit has dimension 0 or max_rank.
// Refuted: some battery/sample functional has intermediate rank (witness
// returned). Certified: max_rank <= 2 (skew ranks are even, so nothing fits
// strictly between 0 and 2), or max_rank = 4 and the degeneracy locus —
// where all 4x4 principal Pfaffians vanish — decomposes into rational
// linear subspaces on which the whole form vanishes. Inconclusive: some
// Pfaffian resists factoring into rational linear forms, or max_rank >= 6.
MDVerdict md_check(const LieAlgebra& g, std::size_t samples = 500, std::uint64_t seed = 0);

// Second derived ideal is commutative (a necessary condition for MD).
bool necessary_condition(const LieAlgebra& g);

// For an algebra already certified MD: every sampled functional that does
// not vanish identically on the derived ideal must have an orbit of maximal
// dimension. Returns the first violating functional, or nullopt on pass.
std::optional<Functional> generic_orbit_check(const LieAlgebra& g, std::size_t samples,
                                              std::uint64_t seed);

}  // namespace mdlie
