#pragma once

#include <optional>
#include <string>
#include <vector>

#include "esakia/algebra.hpp"
#include "esakia/duality.hpp"
#include "esakia/poset.hpp"

namespace esakia {

// Poset JSON: {"points": ["name", ...], "covers": [[i, j], ...]} where point
// i is covered by point j; the order is the reflexive-transitive closure.
FinitePoset poset_from_json(const std::string& text);
std::string poset_to_json(const FinitePoset& p);

// Algebra JSON: either {"dual": <poset>} or explicit tables
// {"leq": [[0/1,...],...], "meet": [[k,...],...], "join": ..., "imp": ...,
//  "bottom": i, "top": j, "labels": [...]}. Emission always prefers the
// canonical dual-poset form; explicit tables are emitted only on request.
HeytingAlgebra algebra_from_json(const std::string& text);
std::string algebra_to_json(const HeytingAlgebra& a, bool explicit_tables = false);

// Partitions: {"classes": [[i, ...], ...]}; maps: {"map": [j0, j1, ...]}.
Partition partition_from_json(const std::string& text, int n);
std::string partition_to_json(const Partition& r);
std::vector<int> point_map_from_json(const std::string& text);
std::string point_map_to_json(const std::vector<int>& f);

// DOT: one node per point, one edge per cover, drawn bottom to top. A
// partition colors the non-singleton classes; a morphism renders both spaces
// as clusters with dashed inter-cluster edges.
std::string poset_to_dot(const FinitePoset& p, const Partition* partition = nullptr);
std::string morphism_to_dot(const FinitePoset& source, const FinitePoset& target,
                            const std::vector<int>& f);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace esakia
