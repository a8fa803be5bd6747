#pragma once

// One-dimensional central extensions g ⊕ Kc.

#include "homlie/cohomology.hpp"

namespace homlie {

struct CentralExtensionData {
	HomLieSuper base;
	/// Even binary-scalar 2-cochain on the base.
	Vector omega;
	/// Functional on g ⊕ Kc (length dim+1); empty means zero.
	Vector lambda;
};

/// Throws InputError on malformed ω or λ (odd values, wrong length, basis already containing "c").
void validate_extension_data(const CentralExtensionData &d);

/// [x,y]_c = [x,y] + ω(x,y)c, [x,c] = 0, ᾱ(x) = α(x) + λ(x)c.
HomLieSuper build_central_extension(const CentralExtensionData &d);

/// Runs Hom-Jacobi on the extension and d²ω = 0 independently; fails when they disagree
/// or when either check fails. Also records multiplicativity of ᾱ.
Report verify_extension(const CentralExtensionData &d);

struct ExtensionIsomorphism {
	Matrix map;       // f(x) = x + a(x)c, f(c) = c
	Vector a;         // the 1-cochain, as a functional on g
	Vector lambda2;   // twist functional making f intertwine ᾱ₁ and ᾱ₂
};

/// Solves ω₂ - ω₁ = a∘[·,·]. Absent when ω₂ - ω₁ is not a coboundary.
/// Throws PreconditionError when either ω is not a 2-cocycle.
std::optional<ExtensionIsomorphism> extension_isomorphism(const HomLieSuper &base, const Vector &omega1,
                                                         const Vector &omega2, const Vector &lambda1 = {});

struct InducedExtension {
	TernaryHomLieSuper algebra;
	/// ω_τ on canonical base triples, in the order of SkewBasis(3).
	std::vector<Scalar> omega_tau;
	Report checks;
};

/// Induces the ternary algebra of g ⊕ Kc with τ(c) = 0 and checks
/// [x,y,z]_c = [x,y,z] + ω_τ(x,y,z)c and [x,y,c]_c = 0.
InducedExtension induce_extension(const HomLieSuper &g, const TraceFunctional &tau, const CentralExtensionData &d);

/// ω_τ(x₁,x₂,x₃) = τ(x₁)ω(x₂,x₃) - (-1)^{|x₁||x₂|}τ(x₂)ω(x₁,x₃) + (-1)^{|x₃|(|x₁|+|x₂|)}τ(x₃)ω(x₁,x₂).
Scalar omega_tau(const HomLieSuper &g, const TraceFunctional &tau, const Vector &omega, const Tuple &x);

} // namespace homlie
