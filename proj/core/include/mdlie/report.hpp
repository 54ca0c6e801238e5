#pragma once

#include "mdlie/classify.hpp"
#include "mdlie/kirillov.hpp"
#include "mdlie/md_verifier.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace mdlie {

// Stable, diff-friendly renderings of every CLI result, in text and JSON.
// JSON output preserves key insertion order and uses two-space indentation,
// so identical inputs give byte-identical documents.

// "0,0,1,1,1" — comma-separated rational coordinates.
std::string format_functional(const Functional& f);

// Parses the same syntax; enforces the expected length.
std::optional<Functional> parse_functional(std::string_view text, std::size_t dim);

// "{0, 2}"
std::string format_rank_set(const std::set<std::size_t>& ranks);

std::string validate_text(const std::variant<LieAlgebra, JacobiViolation>& result);
std::string validate_json(const std::variant<LieAlgebra, JacobiViolation>& result);

std::string invariants_text(const LieAlgebra& g);
std::string invariants_json(const LieAlgebra& g);

std::string orbit_dim_text(const LieAlgebra& g, const Functional& f);
std::string orbit_dim_json(const LieAlgebra& g, const Functional& f);

std::string verdict_text(const MDVerdict& v, std::uint64_t seed);
std::string verdict_json(const MDVerdict& v, std::uint64_t seed);

std::string spectrum_text(const RankSpectrum& rs, std::uint64_t seed);
std::string spectrum_json(const RankSpectrum& rs, std::uint64_t seed);

std::string classify_text(const ClassifyResult& r);
std::string classify_json(const ClassifyResult& r);

std::string distinct_text(const std::vector<DistinctnessPair>& pairs);
std::string distinct_json(const std::vector<DistinctnessPair>& pairs);

}  // namespace mdlie
