#pragma once

// 3-ary Hom-Lie superalgebras and the bracket induced by a trace functional.

#include "homlie/representation.hpp"

namespace homlie {

/// Dense table of [e_i, e_j, e_k].
class SuperBracket3 {
public:
	SuperBracket3() = default;
	explicit SuperBracket3(GradedSpace space);

	/// Values on canonical triples; the rest follows by super-skew symmetry.
	static SuperBracket3 from_canonical(GradedSpace space, const std::map<Tuple, Vector> &values);
	static SuperBracket3 raw(GradedSpace space, std::vector<Vector> table);

	const GradedSpace &space() const noexcept { return space_; }
	std::size_t dim() const noexcept { return space_.dim(); }
	const Vector &operator()(std::size_t i, std::size_t j, std::size_t k) const
	{
		return table_.at((i * dim() + j) * dim() + k);
	}
	const std::vector<Vector> &table() const noexcept { return table_; }

	Vector eval(const Vector &x, const Vector &y, const Vector &z) const;
	std::map<Tuple, Vector> canonical_values() const;

	SuperBracket3 with_raw_entry(std::size_t i, std::size_t j, std::size_t k, Vector v) const;
	/// Sets the canonical triple and all its permutations consistently.
	SuperBracket3 with_canonical_value(const Tuple &t, const Vector &v) const;
	SuperBracket3 composed_with(const Matrix &m) const;

	friend bool operator==(const SuperBracket3 &, const SuperBracket3 &) = default;

private:
	GradedSpace space_;
	std::vector<Vector> table_;
};

/// (g, [·,·,·], α₁, α₂).
class TernaryHomLieSuper {
public:
	TernaryHomLieSuper() = default;
	/// Validating: throws PreconditionError on the first skew or Hom-Nambu witness.
	TernaryHomLieSuper(SuperBracket3 bracket, Matrix alpha1, Matrix alpha2);
	static TernaryHomLieSuper raw(SuperBracket3 bracket, Matrix alpha1, Matrix alpha2);

	const GradedSpace &space() const noexcept { return bracket_.space(); }
	std::size_t dim() const noexcept { return bracket_.dim(); }
	const SuperBracket3 &bracket() const noexcept { return bracket_; }
	const Matrix &alpha1() const noexcept { return alpha1_; }
	const Matrix &alpha2() const noexcept { return alpha2_; }
	const Parities &parities() const noexcept { return space().parities(); }

private:
	SuperBracket3 bracket_;
	Matrix alpha1_, alpha2_;
};

/// τ(x₁)[x₂,x₃] - (-1)^{|x₁||x₂|} τ(x₂)[x₁,x₃] + (-1)^{|x₃|(|x₁|+|x₂|)} τ(x₃)[x₁,x₂] on basis elements.
Vector induced_value(const HomLieSuper &g, const TraceFunctional &tau, std::size_t i, std::size_t j, std::size_t k);
SuperBracket3 induced_bracket(const HomLieSuper &g, const TraceFunctional &tau);
TernaryHomLieSuper induce_ternary(const HomLieSuper &g, const TraceFunctional &tau, const Matrix &alpha1,
                                  const Matrix &alpha2);
/// Twists default to α of g.
TernaryHomLieSuper induce_ternary(const HomLieSuper &g, const TraceFunctional &tau);

Vector ternary_bracket_eval(const TernaryHomLieSuper &t, std::size_t i, std::size_t j, std::size_t k);

Report verify_ternary_skew(const TernaryHomLieSuper &t);
/// [α₁x, α₂y, [z,u,v]] = [[x,y,z], α₁u, α₂v] + (-1)^{|z|(|x|+|y|)} [α₁z, [x,y,u], α₂v]
///                      + (-1)^{(|z|+|u|)(|x|+|y|)} [α₁z, α₂u, [x,y,v]]  over all basis 5-tuples.
/// When α₁ ≠ α₂ an info finding "placement" flags a verdict that changes with the twists swapped.
Report verify_hom_nambu(const TernaryHomLieSuper &t);
/// Residual of the identity above on one basis 5-tuple, by direct evaluation.
Vector hom_nambu_residual(const TernaryHomLieSuper &t, const Tuple &xyzuv);
Report verify_ternary_multiplicative(const TernaryHomLieSuper &t);

Subspace triple_bracket_span(const TernaryHomLieSuper &t, const Subspace &a, const Subspace &b, const Subspace &c);
bool ternary_is_subalgebra(const TernaryHomLieSuper &t, const Subspace &s);
bool ternary_is_ideal(const TernaryHomLieSuper &t, const Subspace &s);

/// Compares ternary ideality of J with "[g,g] ⊆ J or J ⊆ ker τ".
Report ideal_criterion(const HomLieSuper &g, const TraceFunctional &tau, const Subspace &j,
                       const TernaryHomLieSuper &t);

/// A binary algebra with its trace functional and ternary twists.
struct InducedSource {
	HomLieSuper algebra;
	TraceFunctional tau;
	Matrix alpha1, alpha2;
};

/// Checks τ₂∘f = τ₁, f∘α_i = β_i∘f and then f[x,y,z]₁ = [fx,fy,fz]₂ on canonical triples.
Report verify_induced_homomorphism(const Matrix &f, const InducedSource &source, const InducedSource &target);

/// Compares m∘[·,·,·]_τ with the bracket induced from the Yau twist by m.
Report check_twist_commutes(const HomLieSuper &lie, const Matrix &morphism, const TraceFunctional &tau);

/// [x,y,z]' = p^{-1}[px,py,pz], α_i' = p^{-1}α_i p.
TernaryHomLieSuper conjugate(const TernaryHomLieSuper &t, const Matrix &p);

} // namespace homlie
