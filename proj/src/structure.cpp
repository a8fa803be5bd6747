#include "homlie/structure.hpp"

namespace homlie {

namespace {

template <class Step>
SeriesResult run_series(SeriesKind kind, const Subspace &start, std::size_t r_max, Step step)
{
	SeriesResult s;
	s.kind = kind;
	s.terms.push_back(start);
	if (start.is_zero())
		s.class_index = 0;
	while (!s.class_index && !s.stabilized && s.terms.size() <= r_max) {
		Subspace next = step(s.terms.back());
		if (next.is_zero())
			s.class_index = s.terms.size();
		else if (next == s.terms.back())
			s.stabilized = true;
		s.terms.push_back(std::move(next));
	}
	return s;
}

/// Term r of a series, extended past its end by the last computed term.
const Subspace &term(const SeriesResult &s, std::size_t r) { return s.terms[std::min(r, s.terms.size() - 1)]; }

std::int64_t dim64(const Subspace &s) { return static_cast<std::int64_t>(s.dim()); }

} // namespace

SeriesResult derived_series(const TernaryHomLieSuper &t, const Subspace &ideal, std::size_t r_max)
{
	auto s = run_series(SeriesKind::derived, ideal, r_max,
	                    [&](const Subspace &d) { return triple_bracket_span(t, d, d, d); });
	s.input_is_ideal = ternary_is_ideal(t, ideal);
	return s;
}

SeriesResult central_series(const TernaryHomLieSuper &t, const Subspace &ideal, std::size_t r_max)
{
	auto s = run_series(SeriesKind::central, ideal, r_max,
	                    [&](const Subspace &c) { return triple_bracket_span(t, c, ideal, ideal); });
	s.input_is_ideal = ternary_is_ideal(t, ideal);
	return s;
}

SeriesResult binary_derived_series(const HomLieSuper &g, const Subspace &ideal, std::size_t r_max)
{
	auto s = run_series(SeriesKind::derived, ideal, r_max, [&](const Subspace &d) { return bracket_span(g, d, d); });
	s.input_is_ideal = is_ideal(g, ideal);
	return s;
}

SeriesResult binary_central_series(const HomLieSuper &g, const Subspace &ideal, std::size_t r_max)
{
	auto s = run_series(SeriesKind::central, ideal, r_max,
	                    [&](const Subspace &c) { return bracket_span(g, c, ideal); });
	s.input_is_ideal = is_ideal(g, ideal);
	return s;
}

Subspace ternary_center(const TernaryHomLieSuper &t)
{
	const std::size_t n = t.dim();
	// Row block (i,j): the matrix of z ↦ [e_i, e_j, z].
	Matrix m(n * n * n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t z = 0; z < n; ++z) {
				const Vector &v = t.bracket()(i, j, z);
				for (std::size_t k = 0; k < n; ++k)
					m((i * n + j) * n + k, z) = v[k];
			}
	return kernel(m);
}

Subspace binary_center(const HomLieSuper &g)
{
	const std::size_t n = g.dim();
	Matrix m(n * n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t z = 0; z < n; ++z) {
			const Vector &v = g.bracket()(i, z);
			for (std::size_t k = 0; k < n; ++k)
				m(i * n + k, z) = v[k];
		}
	return kernel(m);
}

Report verify_center_transfer(const HomLieSuper &g, const TraceFunctional &tau, const TernaryHomLieSuper &t)
{
	Report r("verify_center_transfer");
	const auto zg = binary_center(g);
	const auto zt = ternary_center(t);
	const auto ker = trace_kernel(tau);
	r.metric("binary_center_dim", dim64(zg));
	r.metric("ternary_center_dim", dim64(zt));
	for (const auto &c : subspace_intersection(zg, ker).basis_vectors())
		if (!zt.contains(c))
			r.fail("forward", {}, c, "central, traceless element outside the ternary center");
	if (zg.is_full()) {
		r.info("converse", "g is abelian; converse not applicable");
		return r;
	}
	for (const auto &c : subspace_intersection(zg, zt).basis_vectors())
		if (tau(c) != 0)
			r.fail("converse", {}, c, "element of both centers with nonzero trace");
	return r;
}

std::optional<Vector> find_unit_u(const HomLieSuper &g, const TraceFunctional &, const TernaryHomLieSuper &t)
{
	const std::size_t n = t.dim();
	if (g.dim() != n)
		throw InputError("binary and ternary algebras differ in dimension");
	Matrix m(n * n * n, n);
	Vector rhs(n * n * n);
	for (std::size_t x = 0; x < n; ++x)
		for (std::size_t y = 0; y < n; ++y)
			for (std::size_t k = 0; k < n; ++k) {
				const std::size_t row = (x * n + y) * n + k;
				for (std::size_t u = 0; u < n; ++u)
					m(row, u) = t.bracket()(u, x, y)[k];
				rhs[row] = g.bracket()(x, y)[k];
			}
	return solve(m, rhs);
}

Report compare_central_series(const HomLieSuper &g, const TraceFunctional &tau, const TernaryHomLieSuper &t,
                              std::size_t r_max)
{
	Report r("compare_central_series");
	const auto full = Subspace::full(g.dim());
	const auto ct = central_series(t, full, r_max);
	const auto cb = binary_central_series(g, full, r_max);
	const auto unit = find_unit_u(g, tau, t);
	r.metric("unit_u_exists", std::int64_t{unit.has_value()});
	if (unit)
		r.metric("unit_u", *unit);
	std::vector<std::int64_t> dt, db;
	for (std::size_t p = 0; p <= r_max; ++p) {
		const auto &a = term(ct, p);
		const auto &b = term(cb, p);
		if (!b.contains(a))
			r.fail("inclusion", {}, std::nullopt, "term " + std::to_string(p) + ": ternary central term not inside the binary one");
		if (unit && !(a == b))
			r.fail("equality", {}, std::nullopt, "term " + std::to_string(p) + ": a unit u exists but the central terms differ");
	}
	for (const auto &s : ct.terms)
		dt.push_back(dim64(s));
	for (const auto &s : cb.terms)
		db.push_back(dim64(s));
	r.metric("ternary_central_dims", dt);
	r.metric("binary_central_dims", db);
	const auto d1t = triple_bracket_span(t, full, full, full);
	const auto d1b = bracket_span(g, full, full);
	if (!d1b.contains(d1t))
		r.fail("derived-inclusion", {}, std::nullopt, "[g,g,g] not inside [g,g]");
	return r;
}

Report verify_solvability_theorem(const TernaryHomLieSuper &t)
{
	Report r("solvability");
	const auto full = Subspace::full(t.dim());
	const auto d1 = triple_bracket_span(t, full, full, full);
	const auto d2 = triple_bracket_span(t, d1, d1, d1);
	r.metric("D1_dim", dim64(d1));
	r.metric("D2_dim", dim64(d2));
	if (!d2.is_zero())
		for (const auto &v : d2.basis_vectors())
			r.fail("D2-zero", {}, v);
	return r;
}

Report ideality_of_series(const TernaryHomLieSuper &t, const Subspace &ideal, std::size_t r_max)
{
	Report r("ideality_of_series");
	const bool surjective = t.alpha1() == t.alpha2() && rank(t.alpha1()) == t.dim();
	const auto d = derived_series(t, ideal, r_max);
	const auto c = central_series(t, ideal, r_max);
	std::int64_t dn = 0, cn = 0;
	std::vector<std::size_t> bad_d, bad_c;
	for (std::size_t i = 0; i < d.terms.size(); ++i)
		if (ternary_is_ideal(t, d.terms[i]))
			++dn;
		else
			bad_d.push_back(i);
	for (std::size_t i = 0; i < c.terms.size(); ++i)
		if (ternary_is_ideal(t, c.terms[i]))
			++cn;
		else
			bad_c.push_back(i);
	r.metric("derived_terms", static_cast<std::int64_t>(d.terms.size()));
	r.metric("derived_ideal_terms", dn);
	r.metric("central_terms", static_cast<std::int64_t>(c.terms.size()));
	r.metric("central_ideal_terms", cn);
	if (!surjective) {
		r.mark_not_applicable("hypothesis", "alpha1 = alpha2 surjective does not hold; ideality recorded only");
		return r;
	}
	for (auto i : bad_d)
		r.fail("derived-ideal", {}, std::nullopt, "term " + std::to_string(i));
	for (auto i : bad_c)
		r.fail("central-ideal", {}, std::nullopt, "term " + std::to_string(i));
	return r;
}

Report verify_nilpotency_transfer(const HomLieSuper &g, const TernaryHomLieSuper &t, std::size_t r_max)
{
	Report r("nilpotency_transfer");
	const auto full = Subspace::full(g.dim());
	const auto cb = binary_central_series(g, full, r_max);
	const auto ct = central_series(t, full, r_max);
	if (ct.class_index)
		r.metric("ternary_class", static_cast<std::int64_t>(*ct.class_index));
	if (!cb.class_index) {
		r.info("hypothesis", "binary central series does not reach zero");
		return r;
	}
	r.metric("binary_class", static_cast<std::int64_t>(*cb.class_index));
	if (!term(ct, *cb.class_index).is_zero())
		r.fail("class-bound", {}, std::nullopt,
	       "ternary central series nonzero at term " + std::to_string(*cb.class_index));
	return r;
}

} // namespace homlie
