#pragma once

// Binary Hom-Lie superalgebras given by structure constants.

#include <map>

#include "homlie/graded.hpp"
#include "homlie/report.hpp"

namespace homlie {

/// Dense table of [e_i, e_j].
class SuperBracket2 {
public:
	SuperBracket2() = default;
	/// The zero bracket.
	explicit SuperBracket2(GradedSpace space);

	/// Values on canonical pairs only; the rest is filled by super-skew symmetry.
	/// Non-canonical keys and parity-law violations are input errors.
	static SuperBracket2 from_canonical(GradedSpace space, const std::map<Tuple, Vector> &values);
	/// Full n*n table, row-major in (i,j), unchecked.
	static SuperBracket2 raw(GradedSpace space, std::vector<Vector> table);

	const GradedSpace &space() const noexcept { return space_; }
	std::size_t dim() const noexcept { return space_.dim(); }
	const Vector &operator()(std::size_t i, std::size_t j) const { return table_.at(i * dim() + j); }
	const std::vector<Vector> &table() const noexcept { return table_; }

	Vector eval(const Vector &x, const Vector &y) const;
	/// Nonzero values on canonical pairs.
	std::map<Tuple, Vector> canonical_values() const;

	SuperBracket2 with_raw_entry(std::size_t i, std::size_t j, Vector v) const;
	/// Sets [e_i,e_j] and the skew partner consistently.
	SuperBracket2 with_canonical_value(std::size_t i, std::size_t j, const Vector &v) const;
	/// m∘[·,·].
	SuperBracket2 composed_with(const Matrix &m) const;

	friend bool operator==(const SuperBracket2 &, const SuperBracket2 &) = default;

private:
	GradedSpace space_;
	std::vector<Vector> table_;
};

/// (g, [·,·], α).
class HomLieSuper {
public:
	HomLieSuper() = default;
	/// Validating: throws PreconditionError with the first witness when
	/// super-skew symmetry or Hom-Jacobi fails.
	HomLieSuper(SuperBracket2 bracket, Matrix alpha);
	static HomLieSuper raw(SuperBracket2 bracket, Matrix alpha);

	const GradedSpace &space() const noexcept { return bracket_.space(); }
	std::size_t dim() const noexcept { return bracket_.dim(); }
	const SuperBracket2 &bracket() const noexcept { return bracket_; }
	const Matrix &alpha() const noexcept { return alpha_; }
	Parity parity(std::size_t i) const { return space().parity(i); }
	const Parities &parities() const noexcept { return space().parities(); }

private:
	SuperBracket2 bracket_;
	Matrix alpha_;
};

Vector bracket_eval(const HomLieSuper &a, std::size_t i, std::size_t j);

/// Checks the parity law and [x,y] = -(-1)^{|x||y|}[y,x] on all basis pairs.
Report verify_skew(const HomLieSuper &a);
/// Cyclic Hom-Jacobi sum on all nondecreasing index triples.
Report verify_hom_jacobi(const HomLieSuper &a);
/// Hom-Jacobi residual on an arbitrary basis triple.
Vector hom_jacobiator(const HomLieSuper &a, std::size_t i, std::size_t j, std::size_t k);
/// α[x,y] = [αx, αy] on all basis pairs.
Report verify_multiplicative(const HomLieSuper &a);
/// f[x,y]_a = [fx,fy]_b on all pairs and f∘α_a = α_b∘f.
Report verify_morphism(const Matrix &f, const HomLieSuper &a, const HomLieSuper &b);

/// (g, m∘[·,·], m) for an algebra with α = id; m must be a bracket morphism.
HomLieSuper yau_twist(const HomLieSuper &lie, const Matrix &morphism);

bool is_subalgebra(const HomLieSuper &a, const Subspace &s);
bool is_ideal(const HomLieSuper &a, const Subspace &s);
/// span of all [x,y], x in s1, y in s2.
Subspace bracket_span(const HomLieSuper &a, const Subspace &s1, const Subspace &s2);

/// Structure transported along an even invertible p: [x,y]' = p^{-1}[px,py], α' = p^{-1}αp.
HomLieSuper conjugate(const HomLieSuper &a, const Matrix &p);

/// Throws InputError unless m is an even square map on the space.
void require_even_endomorphism(const Matrix &m, const GradedSpace &s, const std::string &what);

} // namespace homlie
