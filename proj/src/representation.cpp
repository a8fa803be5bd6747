#include "homlie/representation.hpp"

namespace homlie {

Representation::Representation(HomLieSuper algebra, GradedSpace module, std::vector<Matrix> matrices, Matrix beta)
    : algebra_(std::move(algebra)), module_(std::move(module)), rho_(std::move(matrices)), beta_(std::move(beta))
{
	const std::size_t m = module_.dim();
	if (rho_.size() != algebra_.dim())
		throw InputError("representation needs one matrix per basis element");
	for (std::size_t i = 0; i < rho_.size(); ++i) {
		if (rho_[i].rows() != m || rho_[i].cols() != m)
			throw InputError("representation matrix of '" + algebra_.space().name(i) + "' has the wrong shape");
		if (!respects_parity(rho_[i], module_.parities(), module_.parities(), algebra_.parity(i)))
			throw InputError("representation matrix of '" + algebra_.space().name(i) +
			                 "' does not have the parity of its basis element");
	}
	require_even_endomorphism(beta_, module_, "beta");
}

Matrix Representation::rho(const Vector &x) const
{
	Matrix out(module_.dim(), module_.dim());
	for (std::size_t i = 0; i < x.size(); ++i)
		if (sgn(x[i]) != 0)
			out = out + x[i] * rho_[i];
	return out;
}

Representation adjoint_representation(const HomLieSuper &a)
{
	std::vector<Matrix> ad;
	for (std::size_t i = 0; i < a.dim(); ++i) {
		Matrix m(a.dim(), a.dim());
		for (std::size_t j = 0; j < a.dim(); ++j)
			for (std::size_t k = 0; k < a.dim(); ++k)
				m(k, j) = a.bracket()(i, j)[k];
		ad.push_back(std::move(m));
	}
	return Representation(a, a.space(), std::move(ad), a.alpha());
}

Report verify_representation(const Representation &r)
{
	Report rep("verify_representation");
	const auto &a = r.algebra();
	const auto &beta = r.beta();
	std::vector<Matrix> rho_alpha;
	for (std::size_t i = 0; i < a.dim(); ++i)
		rho_alpha.push_back(r.rho(a.alpha().column(i)));
	for (std::size_t i = 0; i < a.dim(); ++i) {
		const Matrix d = rho_alpha[i] * beta - beta * r.rho(i);
		if (!d.is_zero())
			rep.fail("twist-compatibility", {i}, d.entries());
	}
	for (std::size_t i = 0; i < a.dim(); ++i)
		for (std::size_t j = i; j < a.dim(); ++j) {
			Matrix rhs = rho_alpha[i] * r.rho(j);
			const Matrix other = rho_alpha[j] * r.rho(i);
			rhs = (a.parity(i) & a.parity(j)) ? rhs + other : rhs - other;
			const Matrix d = r.rho(a.bracket()(i, j)) * beta - rhs;
			if (!d.is_zero())
				rep.fail("bracket-compatibility", {i, j}, d.entries());
		}
	return rep;
}

TraceFunctional trace_functional(const Representation &r)
{
	TraceFunctional t{Vector(r.algebra().dim())};
	for (std::size_t i = 0; i < r.algebra().dim(); ++i)
		t.values[i] = supertrace(r.rho(i), r.module().parities());
	return t;
}

Subspace trace_kernel(const TraceFunctional &t) { return kernel(Matrix::from_rows(t.dim(), {t.values})); }

bool check_trace_alpha_invariance(const TraceFunctional &t, const Matrix &alpha)
{
	for (std::size_t i = 0; i < t.dim(); ++i)
		if (t(alpha.column(i)) != t(i))
			return false;
	return true;
}

Report check_induction_conditions(const TraceFunctional &t, const Matrix &alpha, const Matrix &beta_on_g)
{
	Report r("check_induction_conditions");
	r.info("condition-1", "skipped: both sides of the printed identity coincide");
	r.info("condition-2", "skipped: both sides of the printed identity coincide");
	for (std::size_t i = 0; i < t.dim(); ++i)
		for (std::size_t j = 0; j < t.dim(); ++j) {
			Vector res = t(alpha.column(i)) * beta_on_g.column(j) - t(beta_on_g.column(i)) * alpha.column(j);
			if (!is_zero(res))
				r.fail("condition-3", {i, j}, res);
		}
	return r;
}

Representation conjugate(const Representation &r, const Matrix &p)
{
	std::vector<Matrix> rho;
	for (std::size_t i = 0; i < p.cols(); ++i)
		rho.push_back(r.rho(p.column(i)));
	return Representation(conjugate(r.algebra(), p), r.module(), std::move(rho), r.beta());
}

} // namespace homlie
