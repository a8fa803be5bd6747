#include "homlie/extensions.hpp"

#include "homlie/structure.hpp"

namespace homlie {

namespace {

int sign_pow(Parity a, Parity b) { return (a & b) ? -1 : 1; }

Scalar omega_value(const CochainSpace &c2, const Vector &omega, std::size_t i, std::size_t j)
{
	return c2.binary_value(omega, {i, j})[0];
}

GradedSpace extended_space(const GradedSpace &s)
{
	auto names = s.names();
	auto par = s.parities();
	names.push_back("c");
	par.push_back(0);
	return GradedSpace(std::move(names), std::move(par));
}

} // namespace

void validate_extension_data(const CentralExtensionData &d)
{
	const auto &s = d.base.space();
	if (s.index_of("c"))
		throw InputError("base algebra already has a basis element named 'c'");
	const CochainSpace c2(Complex::binary_scalar, 2, s, 0);
	if (d.omega.size() != c2.size())
		throw InputError("omega has " + std::to_string(d.omega.size()) + " coordinates, expected " +
		                 std::to_string(c2.size()));
	if (!d.lambda.empty()) {
		if (d.lambda.size() != s.dim() + 1)
			throw InputError("lambda must have one value per basis element of g and one for c");
		for (std::size_t i = 0; i < s.dim(); ++i)
			if (s.parity(i) && sgn(d.lambda[i]) != 0)
				throw InputError("lambda must vanish on odd element '" + s.name(i) + "'");
	}
}

HomLieSuper build_central_extension(const CentralExtensionData &d)
{
	validate_extension_data(d);
	const auto &g = d.base;
	const std::size_t n = g.dim(), m = n + 1;
	const CochainSpace c2(Complex::binary_scalar, 2, g.space(), 0);
	std::vector<Vector> table(m * m, Vector(m));
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			Vector v = g.bracket()(i, j);
			v.push_back(omega_value(c2, d.omega, i, j));
			table[i * m + j] = std::move(v);
		}
	Matrix alpha(m, m);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			alpha(i, j) = g.alpha()(i, j);
	for (std::size_t j = 0; j < m && !d.lambda.empty(); ++j)
		alpha(n, j) = d.lambda[j];
	return HomLieSuper::raw(SuperBracket2::raw(extended_space(g.space()), std::move(table)), std::move(alpha));
}

Report verify_extension(const CentralExtensionData &d)
{
	Report r("verify_extension");
	const auto ext = build_central_extension(d);
	const auto jac = verify_hom_jacobi(ext);
	const Vector d2 = ds_matrix(d.base, 2).apply(d.omega);
	const bool jac_ok = jac.passed();
	const bool cocycle = is_zero(d2);
	r.merge(jac);
	if (!cocycle)
		r.fail("cocycle", {}, d2, "d2 omega is nonzero");
	if (jac_ok != cocycle)
		r.fail("equivalence", {}, std::nullopt, "Hom-Jacobi verdict differs from the cocycle verdict");
	r.metric("hom_jacobi", std::int64_t{jac_ok});
	r.metric("cocycle", std::int64_t{cocycle});
	const bool mult = verify_multiplicative(ext).passed();
	r.metric("alpha_multiplicative", std::int64_t{mult});
	if (!d.lambda.empty() && !is_zero(d.lambda)) {
		auto zero_lambda = d;
		zero_lambda.lambda.clear();
		if (verify_multiplicative(build_central_extension(zero_lambda)).passed() != mult)
			r.info("lambda", "lambda changes the multiplicativity of the extended twist");
	}
	return r;
}

std::optional<ExtensionIsomorphism> extension_isomorphism(const HomLieSuper &base, const Vector &omega1,
                                                         const Vector &omega2, const Vector &lambda1)
{
	const Matrix d1 = ds_matrix(base, 1);
	const Matrix d2 = ds_matrix(base, 2);
	if (!is_zero(d2.apply(omega1)))
		throw PreconditionError("omega1 is not a 2-cocycle");
	if (!is_zero(d2.apply(omega2)))
		throw PreconditionError("omega2 is not a 2-cocycle");
	const auto eta = solve(d1, omega2 - omega1);
	if (!eta)
		return std::nullopt;
	const std::size_t n = base.dim();
	// d¹η = -η∘[·,·], so a = -η gives ω₂ - ω₁ = a∘[·,·].
	const CochainSpace c1(Complex::binary_scalar, 1, base.space(), 0);
	Vector a(n);
	for (std::size_t i = 0; i < c1.size(); ++i)
		a[c1.coordinates()[i].args[0]] = -(*eta)[i];
	ExtensionIsomorphism iso;
	iso.a = a;
	iso.map = Matrix::identity(n + 1);
	for (std::size_t j = 0; j < n; ++j)
		iso.map(n, j) = a[j];
	Vector l1 = lambda1.empty() ? Vector(n + 1) : lambda1;
	if (l1.size() != n + 1)
		throw InputError("lambda must have one value per basis element of g and one for c");
	iso.lambda2 = l1;
	for (std::size_t j = 0; j < n; ++j)
		iso.lambda2[j] += dot(a, base.alpha().column(j)) - l1[n] * a[j];
	return iso;
}

Scalar omega_tau(const HomLieSuper &g, const TraceFunctional &tau, const Vector &omega, const Tuple &x)
{
	const CochainSpace c2(Complex::binary_scalar, 2, g.space(), 0);
	const auto &p = g.parities();
	Scalar v = tau(x[0]) * omega_value(c2, omega, x[1], x[2]);
	v -= sign_pow(p[x[0]], p[x[1]]) * tau(x[1]) * omega_value(c2, omega, x[0], x[2]);
	v += sign_pow(p[x[2]], p[x[0]] ^ p[x[1]]) * tau(x[2]) * omega_value(c2, omega, x[0], x[1]);
	return v;
}

InducedExtension induce_extension(const HomLieSuper &g, const TraceFunctional &tau, const CentralExtensionData &d)
{
	const auto ext = build_central_extension(d);
	InducedExtension out;
	out.checks.set_command("induce_extension");
	if (!verify_extension(d).passed())
		out.checks.warn("precondition", "the binary extension is not a Hom-Lie superalgebra");
	if (!check_trace_alpha_invariance(tau, g.alpha()))
		out.checks.warn("precondition", "tau is not alpha-invariant");
	TraceFunctional tau_bar{tau.values};
	tau_bar.values.push_back(0);
	out.algebra = TernaryHomLieSuper::raw(induced_bracket(ext, tau_bar), ext.alpha(), ext.alpha());
	const auto base = induced_bracket(g, tau);
	const std::size_t n = g.dim();
	for (const auto &t : SkewBasis(3, ext.parities()).tuples()) {
		const Vector &got = out.algebra.bracket()(t[0], t[1], t[2]);
		Vector want(n + 1);
		if (t[2] < n) {
			want = base(t[0], t[1], t[2]);
			const Scalar w = omega_tau(g, tau, d.omega, t);
			want.push_back(w);
			out.omega_tau.push_back(w);
		}
		const Vector res = got - want;
		if (!is_zero(res))
			out.checks.fail(t[2] < n ? "decomposition" : "c-central", t, res);
	}
	const bool center = ternary_center(out.algebra).contains(unit_vector(n + 1, n));
	out.checks.metric("c_in_ternary_center", std::int64_t{center});
	return out;
}

} // namespace homlie
