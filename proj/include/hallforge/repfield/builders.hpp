#pragma once

#include "hallforge/repfield/quiver.hpp"

#include <nlohmann/json.hpp>

namespace hallforge::repfield {

/// One vertex, no arrows: finite-dimensional F_p vector spaces. Single entry "k".
IndecomposableTable single_vertex(int p);

/// Linearly oriented A_n: vertices "n-1", ..., "0" (a source order), arrows a_{k+1,k}.
/// Interval modules are labelled S_j and E_{k...j} (digits from the top of the interval down).
IndecomposableTable type_a(int n, int p);

/// Commutative square 1 -> 2 -> 4, 1 -> 3 -> 4 with a34 a13 = a24 a12.
/// The eleven thin modules on convex connected supports.
IndecomposableTable comm_square(int p);

/// Reads {"quiver": {...}, "p": p, "indecomposables": [...]}.
IndecomposableTable table_from_json(const nlohmann::json& j);
nlohmann::json table_to_json(const IndecomposableTable& t);

} // namespace hallforge::repfield
