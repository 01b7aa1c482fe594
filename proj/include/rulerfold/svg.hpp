#pragma once

#include <string>

#include "rulerfold/instance.hpp"

namespace rulerfold {

struct SvgOptions {
    /// Space distinct prefix-sum values evenly instead of plotting them to
    /// scale; keeps close values legible.
    bool schematic = false;
};

/// Draws prefix sums against index: hinge dots labelled s_i, signed step
/// labels on each segment, circles on the extreme hinges and a bracket on
/// the right labelled with the exact range. Output is byte-for-byte
/// deterministic. Throws InputError on length mismatch.
std::string render_folding_svg(const RulerInstance& instance, const SignVector& signs, const SvgOptions& options = {});

}  // namespace rulerfold
