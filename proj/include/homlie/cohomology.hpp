#pragma once

// Cochain complexes: binary scalar/adjoint, and ternary scalar/adjoint at degrees 1-3.

#include "homlie/ternary.hpp"

namespace homlie {

enum class Complex { binary_scalar, binary_adjoint, ternary_scalar, ternary_adjoint };

const char *to_string(Complex c);
Complex parse_complex(const std::string &s);
bool is_adjoint(Complex c);
bool is_ternary(Complex c);

/// One coordinate of a cochain: argument tuple and, for adjoint complexes, the output basis index.
/// Binary arguments are canonical index tuples. Ternary arguments are (pair, ..., pair, z) with
/// pairs indexing SkewBasis(2).
struct CochainCoordinate {
	Tuple args;
	std::size_t out = 0;
	friend auto operator<=>(const CochainCoordinate &, const CochainCoordinate &) = default;
};

/// Coordinates of homogeneous cochains of a given degree and parity.
class CochainSpace {
public:
	CochainSpace(Complex complex, std::size_t degree, const GradedSpace &space, Parity parity = 0);

	Complex complex() const noexcept { return complex_; }
	std::size_t degree() const noexcept { return degree_; }
	Parity parity() const noexcept { return parity_; }
	std::size_t size() const noexcept { return coords_.size(); }
	const std::vector<CochainCoordinate> &coordinates() const noexcept { return coords_; }
	const SkewBasis &pairs() const noexcept { return pairs_; }
	std::optional<std::size_t> index_of(const CochainCoordinate &c) const;
	/// Parity of the argument tuple (pairs count with their total parity).
	Parity argument_parity(const Tuple &args) const;

	/// Value of a binary cochain on an arbitrary basis tuple, with skew signs. Scalar
	/// complexes return a length-1 vector.
	Vector binary_value(const Vector &f, const Tuple &args) const;

private:
	Complex complex_;
	std::size_t degree_;
	Parity parity_;
	Parities parities_;
	SkewBasis pairs_;
	std::vector<CochainCoordinate> coords_;
	std::map<CochainCoordinate, std::size_t> index_;
};

struct Cochain {
	Complex complex = Complex::binary_scalar;
	std::size_t degree = 1;
	Parity parity = 0;
	Vector coefficients;
};

// --- binary complex ------------------------------------------------------

/// Matrix of d_s: C^p → C^{p+1} on even scalar cochains (p in 1..3).
Matrix ds_matrix(const HomLieSuper &g, std::size_t p, Parity parity = 0);
/// Kernel of φ ↦ (-1)^{|x|(|y|+|z|)}φ(αy,[z,x]) + (-1)^{|z|(|x|+|y|)}φ(αz,[x,y]) + φ(αx,[y,z])
/// on even algebra-valued 2-cochains.
Matrix binary_adjoint_condition_matrix(const HomLieSuper &g);
Subspace binary_adjoint_cocycle_space(const HomLieSuper &g);
/// The adjoint 2-cochain φ(x,y) = [x,y].
Vector bracket_cochain(const HomLieSuper &g);

// --- ternary complex -----------------------------------------------------

/// X·z = [x₁,x₂,z] for X = pairs[pair].
Vector fundamental_action(const TernaryHomLieSuper &t, std::size_t pair, const Vector &z);
/// x ∧ y expanded in the canonical pair basis.
Vector wedge(const Vector &x, const Vector &y, const SkewBasis &pairs);
/// [X,Y]_α = X·y₁ ∧ αy₂ + (-1)^{|X||y₁|} αy₁ ∧ X·y₂, α = α₁.
Vector fundamental_bracket(const TernaryHomLieSuper &t, std::size_t x_pair, std::size_t y_pair);

/// δ¹ and δ² applied to a cochain of the matching ternary complex.
Vector delta1_ternary(const TernaryHomLieSuper &t, Complex complex, const Vector &f, Parity parity = 0);
Vector delta2_ternary(const TernaryHomLieSuper &t, Complex complex, const Vector &f, Parity parity = 0);
Matrix delta1_matrix(const TernaryHomLieSuper &t, Complex complex, Parity parity = 0);
Matrix delta2_matrix(const TernaryHomLieSuper &t, Complex complex, Parity parity = 0);

/// φ_τ(X,z) = τ(x₁)φ(x₂,z) - (-1)^{|x₁||x₂|}τ(x₂)φ(x₁,z) + (-1)^{|z|(|x₁|+|x₂|)}τ(z)φ(x₁,x₂).
/// The binary complex (scalar or adjoint) selects the ternary one. Throws PreconditionError
/// when φ is not a binary 2-cocycle.
Vector induce_cocycle(const HomLieSuper &g, const TraceFunctional &tau, Complex binary_complex, const Vector &phi);
/// Same formula without the cocycle check.
Vector induce_cochain(const HomLieSuper &g, const TraceFunctional &tau, Complex binary_complex, const Vector &phi);

/// 1-cocycles of g vanish on [g,g,g]_τ.
Report verify_1cocycle_transfer(const HomLieSuper &g, const TraceFunctional &tau, const TernaryHomLieSuper &t);
/// For φ₂ - φ₁ = d¹ω, checks ψ₂ - ψ₁ = δ¹_τ ω for the induced cochains ψ_i.
Report verify_class_transfer(const HomLieSuper &g, const TraceFunctional &tau, const TernaryHomLieSuper &t,
                             const Vector &phi1, const Vector &phi2);

struct CohomologyDims {
	std::size_t z = 0, b = 0, h = 0;
};
/// Even cochains only. Binary scalar degrees 1-2, ternary degrees 1-2.
CohomologyDims cohomology_dims(const HomLieSuper &g, std::size_t degree);
CohomologyDims cohomology_dims(const TernaryHomLieSuper &t, Complex complex, std::size_t degree);

} // namespace homlie
