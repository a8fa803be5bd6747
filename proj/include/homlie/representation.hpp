#pragma once

#include "homlie/algebra.hpp"

namespace homlie {

/// ρ: g → gl(V) with twist β on V.
class Representation {
public:
	Representation() = default;
	/// Checks shapes, that ρ(e_i) has the parity of e_i and that β is even.
	Representation(HomLieSuper algebra, GradedSpace module, std::vector<Matrix> matrices, Matrix beta);

	const HomLieSuper &algebra() const noexcept { return algebra_; }
	const GradedSpace &module() const noexcept { return module_; }
	const std::vector<Matrix> &matrices() const noexcept { return rho_; }
	const Matrix &rho(std::size_t i) const { return rho_.at(i); }
	const Matrix &beta() const noexcept { return beta_; }
	/// ρ(x) for a general element.
	Matrix rho(const Vector &x) const;

private:
	HomLieSuper algebra_;
	GradedSpace module_;
	std::vector<Matrix> rho_;
	Matrix beta_;
};

/// ρ(x) = ad_x on V = g, with β = α.
Representation adjoint_representation(const HomLieSuper &a);

/// ρ(α x)∘β = β∘ρ(x) and ρ([x,y])∘β = ρ(αx)ρ(y) - (-1)^{|x||y|} ρ(αy)ρ(x).
Report verify_representation(const Representation &r);

/// τ(x) = str ρ(x), stored on the basis of g.
struct TraceFunctional {
	Vector values;

	Scalar operator()(const Vector &x) const { return dot(values, x); }
	Scalar operator()(std::size_t i) const { return values.at(i); }
	std::size_t dim() const noexcept { return values.size(); }
};

TraceFunctional trace_functional(const Representation &r);
Subspace trace_kernel(const TraceFunctional &t);
/// τ∘α = τ.
bool check_trace_alpha_invariance(const TraceFunctional &t, const Matrix &alpha);
/// The pairwise trace condition τ(αx)β(y) = τ(βx)α(y), β a companion map on g.
/// The two scalar conditions printed beside it are identical on both sides and
/// are reported as skipped.
Report check_induction_conditions(const TraceFunctional &t, const Matrix &alpha, const Matrix &beta_on_g);

/// Same representation seen through an even change of basis p of g.
Representation conjugate(const Representation &r, const Matrix &p);

} // namespace homlie
