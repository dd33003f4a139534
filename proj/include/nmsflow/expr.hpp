#pragma once

#include <string>
#include <string_view>

#include "nmsflow/manifold.hpp"
#include "nmsflow/seifert_data.hpp"

namespace nmsflow {

/// Parses
///   expr    := summand ("#" summand)*
///   summand := "S3" | "S2xS1" | "RP3" | "L(" int "," int ")"
///            | "SFS(S2;" pair {"," pair} ")"
///   pair    := "(" int "," int ")"
/// ignoring whitespace, and canonicalizes the result. Throws ParseError with
/// the offending offset, or the parameter error of the offending summand.
Manifold parse_manifold(std::string_view text);

/// Inverse of parse_manifold on canonical manifolds.
std::string render(const Manifold& m);

/// "(a,b),(c,d)" without the SFS wrapper.
std::string render_fibers(const SeifertData& s);

}  // namespace nmsflow
