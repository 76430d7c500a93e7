#pragma once

// Executable law suites over the finite fragment of Rel. Every law is an exact
// boolean matrix equality (or a cell-by-cell equivalence) on carriers of size
// 0..size; relations are enumerated exhaustively up to size 2 and sampled with
// a fixed seed at size 3.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fcm/cmon.hpp"
#include "fcm/rel.hpp"

namespace fcm::laws {

  struct LawResult {
    std::string id;
    bool pass = true;
    // First failing cell, as (source element, target element).
    std::optional<std::pair<std::string, std::string>> counterexample;
  };

  struct Report {
    std::vector<LawResult> laws; // sorted by id
    bool all_pass() const;
  };

  inline constexpr std::size_t max_size = 3;
  inline constexpr std::size_t max_degree = 3;
  inline constexpr std::size_t samples = 200;

  const std::vector<std::string>& suite_names();
  bool needs_degree(std::string_view suite);

  // Throws CostGuardExceeded beyond max_size / max_degree, DomainError for an
  // unknown suite or a missing or zero degree.
  Report law_suite(std::string_view suite, std::size_t size, std::optional<std::size_t> degree);

  // Checks on a user-supplied table: validity, the free-monoid universal
  // property for every generator map from {a,b} up to degree k, its relational
  // counterpart, and the convolution monoid on its subsets.
  Report monoid_instance(const cmon::FinCMon& m, std::size_t k);

  Report merge(Report a, const Report& b);

  // One `LAW <id> PASS|FAIL [counterexample: <src> , <dst>]` line per law.
  std::string format(const Report& r);

  // {a, b, c} truncated to n elements; `names` picks another alphabet.
  rel::FinSet carrier(std::size_t n, std::string_view names = "abc");

  // Every relation a -+-> b, in bitmask order (cell (i,j) is bit i*|b|+j).
  std::vector<rel::FinRel> all_relations(const rel::FinSet& a, const rel::FinSet& b);
  rel::FinRel relation_from_bits(const rel::FinSet& a, const rel::FinSet& b, std::uint64_t bits);

}
