#pragma once
#include <json.hpp>
#include <string>

#include "diffschub/formal_sum.hpp"
#include "diffschub/oracle.hpp"
#include "diffschub/partition.hpp"
#include "diffschub/permutation.hpp"

namespace diffschub {

// Wire formats.  FormalSum:
//   {"basis":"partition"|"permutation","terms":[{"key":"4,3,1","coeff":"3"}]}
// MonomialMap:
//   {"vars":[lo,hi],"terms":[{"exp":[0,2,1],"coeff":"2"}]}
// Coefficients travel as strings so arbitrary precision survives the trip.
// Terms are emitted in canonical key order, making output byte-reproducible.

nlohmann::json sum_to_json(const FormalSum<Partition>& s);
nlohmann::json sum_to_json(const FormalSum<PermutationZ>& s);
FormalSum<Partition> partition_sum_from_json(const nlohmann::json& j);
FormalSum<PermutationZ> permutation_sum_from_json(const nlohmann::json& j);

nlohmann::json monomials_to_json(const oracle::MonomialMap& p);
oracle::MonomialMap monomials_from_json(const nlohmann::json& j);

// Human-readable "coeff * key" lines in canonical order (trailing newline).
std::string sum_to_text(const FormalSum<Partition>& s);
std::string sum_to_text(const FormalSum<PermutationZ>& s);

// Element parser for command-line input: terms "coeff*key" or bare "key",
// joined by + or -.  A sign right after ',', '@' or '*' belongs to a number
// inside the key (permutation windows may be negative), not to the term list.
FormalSum<Partition> parse_partition_sum(const std::string& s);
FormalSum<PermutationZ> parse_permutation_sum(const std::string& s);

}  // namespace diffschub
