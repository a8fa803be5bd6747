#pragma once

// Derived and central series, centers, and the binary/ternary transfer checks.

#include <optional>

#include "homlie/ternary.hpp"

namespace homlie {

enum class SeriesKind { derived, central };

struct SeriesResult {
	SeriesKind kind = SeriesKind::derived;
	std::vector<Subspace> terms;           // terms[0] is the input
	bool stabilized = false;               // a term repeated before reaching zero
	std::optional<std::size_t> class_index; // first r with terms[r] = 0
	bool input_is_ideal = true;
};

/// D^{r+1} = [D^r, D^r, D^r]; stops at zero, at stabilization, or after r_max steps.
SeriesResult derived_series(const TernaryHomLieSuper &t, const Subspace &ideal, std::size_t r_max);
/// C^{r+1} = [C^r, I, I].
SeriesResult central_series(const TernaryHomLieSuper &t, const Subspace &ideal, std::size_t r_max);
/// Binary analogues: D^{r+1} = [D^r, D^r], C^{r+1} = [C^r, I].
SeriesResult binary_derived_series(const HomLieSuper &g, const Subspace &ideal, std::size_t r_max);
SeriesResult binary_central_series(const HomLieSuper &g, const Subspace &ideal, std::size_t r_max);

/// {z : [x₁,x₂,z] = 0 for all x₁,x₂}.
Subspace ternary_center(const TernaryHomLieSuper &t);
/// {z : [x,z] = 0 for all x}.
Subspace binary_center(const HomLieSuper &g);

Report verify_center_transfer(const HomLieSuper &g, const TraceFunctional &tau, const TernaryHomLieSuper &t);
/// Solves [u,x,y] = [x,y] over all basis pairs as one linear system in u.
std::optional<Vector> find_unit_u(const HomLieSuper &g, const TraceFunctional &tau, const TernaryHomLieSuper &t);
/// C^p(g_τ) ⊆ C^p(g) termwise, D¹(g_τ) ⊆ D¹(g); equality when a unit u exists.
Report compare_central_series(const HomLieSuper &g, const TraceFunctional &tau, const TernaryHomLieSuper &t,
                              std::size_t r_max);
/// D² of an induced algebra is zero.
Report verify_solvability_theorem(const TernaryHomLieSuper &t);
/// Every term of both series of I is a ternary Hom-ideal; not applicable unless α₁ = α₂ is surjective.
/// Ideality is computed either way and recorded in metrics.
Report ideality_of_series(const TernaryHomLieSuper &t, const Subspace &ideal, std::size_t r_max);
/// If the binary central series of g vanishes at step p, the ternary one vanishes by step p.
Report verify_nilpotency_transfer(const HomLieSuper &g, const TernaryHomLieSuper &t, std::size_t r_max);

} // namespace homlie
