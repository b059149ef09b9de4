#pragma once

#include <optional>
#include <string>

#include "test_support.hpp"
#include "totalchroma/fans_chains.hpp"

namespace totalchroma::testing {

/// Definition check written from scratch: entry 0 is an uncolored size-2 edge
/// at the center, later edges are distinct colored size-2 edges at the center,
/// and each is justified by its earliest earlier leaf missing its color. With
/// `maximal_under` set, also checks that no admissible edge could be appended.
std::optional<std::string> check_multifan(const PartialEdgeColoring& phi, const Multifan& fan,
                                          const EdgeFilter* maximal_under);

// One random instance each; nullopt means the property held.

/// Kempe chain from a vertex missing alpha or gamma: a path in graph hosts;
/// switching it keeps the coloring proper and the colored set fixed, and
/// switching twice restores every color.
std::optional<std::string> switch_chain_case(Rng& rng);

/// shift along a random linear sequence recolors exactly the sequence edges
/// as documented, keeps properness, the colored-edge count and the color
/// multiset, and leaves e_{l_h} as the only uncolored fan edge touched.
std::optional<std::string> shift_case(Rng& rng);

/// build_multifan (with and without a filter) and restrict_to_clean_sequences
/// return multifans that pass check_multifan; the restriction keeps exactly
/// the entries reachable through non-forbidden edges.
std::optional<std::string> multifan_case(Rng& rng);

}  // namespace totalchroma::testing
