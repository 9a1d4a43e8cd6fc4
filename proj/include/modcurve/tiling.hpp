#pragma once

// Tiling of the upper half plane by translates of the fundamental domain F
// under short words in S, T, rendered as SVG.

#include "modcurve/sl2z.hpp"

#include <string>
#include <vector>

namespace modcurve::tiling {

// Distinct elements of PSL2(Z) reachable by words of length <= depth in
// {S, T, T^-1}, deduplicated after sign normalization (first nonzero of
// (c, d) made positive).
std::vector<sl2z::UnimodularMatrix> coset_representatives(int depth);

// SVG 1.1 document with one <path class="tile"> per coset of
// coset_representatives(depth).
std::string svg_domain(int depth, int width = 900, int height = 480);

} // namespace modcurve::tiling
