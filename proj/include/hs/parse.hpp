#pragma once

#include <string>
#include <vector>

#include "hs/scalar.hpp"

namespace hs {

/// Parses "re+imi" complex literals ("0.5", "-0.3i", "0.5-0.2i", "i") and the
/// unimodular shorthand "exp(2pi*i/3)" / "exp(i*pi/4)". Throws
/// std::invalid_argument on malformed input.
Complex parse_complex(const std::string& text);

/// Grid specs: "lo:hi:step x phases" ("0.1:0.8:0.1x8") over moduli in (0,1),
/// or an explicit "list:c1;c2;...". An empty spec yields the default grid
/// 0.1:0.8:0.1x8.
std::vector<Complex> parse_grid(const std::string& spec);

std::string format_complex(Complex z);

}  // namespace hs
