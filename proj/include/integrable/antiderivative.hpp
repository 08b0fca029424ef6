#pragma once

#include "integrable/superring.hpp"

#include <optional>

namespace integrable {

/// S with d S == p and vanishing constant term, found by an exact linear
/// solve over all monomials of the matching grading (same v/theta/e^u
/// content, total jet order one less, u-degree not exceeding that of p).
/// Returns nullopt when p is not a total derivative.
std::optional<SuperPoly> antiderivative(const SuperPoly& p);

/// True iff p - (constant term of p) lies in the image of d.
bool is_total_derivative_mod_constants(const SuperPoly& p);

}  // namespace integrable
