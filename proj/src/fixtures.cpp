#include "homlie/fixtures.hpp"

namespace homlie::fixtures {

namespace {

GradedSpace gl11_space() { return GradedSpace({"h1", "h2", "q", "p"}, {0, 0, 1, 1}); }

Vector vec(std::initializer_list<long> xs)
{
	Vector v;
	for (auto x : xs)
		v.emplace_back(x);
	return v;
}

Matrix unit(std::size_t n, std::size_t r, std::size_t c, long value = 1)
{
	Matrix m(n, n);
	m(r, c) = value;
	return m;
}

SuperBracket2 gl11_bracket()
{
	return SuperBracket2::from_canonical(gl11_space(), {
	                                                       {{0, 2}, vec({0, 0, 1, 0})},
	                                                       {{1, 2}, vec({0, 0, -1, 0})},
	                                                       {{0, 3}, vec({0, 0, 0, -1})},
	                                                       {{1, 3}, vec({0, 0, 0, 1})},
	                                                       {{2, 3}, vec({1, 1, 0, 0})},
	                                                   });
}

std::vector<Matrix> gl11_defining()
{
	// V = (v0 even | v1 odd).
	return {unit(2, 0, 0), unit(2, 1, 1), unit(2, 0, 1), unit(2, 1, 0)};
}

} // namespace

Representation a0()
{
	GradedSpace s({"e1", "e2"}, {0, 1});
	HomLieSuper g(SuperBracket2(s), Matrix::identity(2));
	return Representation(g, GradedSpace::anonymous({0, 1}), {Matrix(2, 2), Matrix(2, 2)}, Matrix::identity(2));
}

Representation aff1()
{
	GradedSpace s({"e1", "e2"}, {0, 0});
	HomLieSuper g(SuperBracket2::from_canonical(s, {{{0, 1}, vec({0, 1})}}), Matrix::identity(2));
	return adjoint_representation(g);
}

Representation gl11()
{
	HomLieSuper g(gl11_bracket(), Matrix::identity(4));
	return Representation(g, GradedSpace::anonymous({0, 1}), gl11_defining(), Matrix::identity(2));
}

Matrix alpha_t(const Scalar &t)
{
	if (sgn(t) == 0)
		throw InputError("twist parameter must be nonzero");
	Matrix m = Matrix::identity(4);
	m(2, 2) = t;
	m(3, 3) = 1 / t;
	return m;
}

Representation gl11t(const Scalar &t)
{
	return adjoint_representation(yau_twist(gl11().algebra(), alpha_t(t)));
}

HomLieSuper negative_skew()
{
	const auto b = gl11_bracket().with_raw_entry(2, 3, vec({1, 0, 0, 0})).with_raw_entry(3, 2, vec({-1, 0, 0, 0}));
	return HomLieSuper::raw(b, Matrix::identity(4));
}

Matrix swap_h1_h2()
{
	Matrix m(4, 4);
	m(0, 1) = m(1, 0) = m(2, 2) = m(3, 3) = 1;
	return m;
}

HomLieSuper negative_multiplicative() { return HomLieSuper::raw(gl11_bracket(), swap_h1_h2()); }

Representation negative_beta()
{
	Matrix beta = Matrix::identity(2);
	beta(1, 1) = 2;
	return Representation(gl11().algebra(), GradedSpace::anonymous({0, 1}), gl11_defining(), beta);
}

TernaryHomLieSuper negative_ternary_skew()
{
	const auto r = gl11();
	const auto t = induce_ternary(r.algebra(), trace_functional(r));
	const auto b = t.bracket().with_raw_entry(0, 2, 3, vec({2, 1, 0, 0}));
	return TernaryHomLieSuper::raw(b, t.alpha1(), t.alpha2());
}

TernaryHomLieSuper negative_hom_nambu()
{
	const auto r = gl11();
	const auto t = induce_ternary(r.algebra(), trace_functional(r));
	const auto b = t.bracket().with_canonical_value({0, 2, 3}, vec({2, 2, 0, 0}));
	return TernaryHomLieSuper::raw(b, t.alpha1(), t.alpha2());
}

Matrix random_even_unimodular(const Parities &parities, std::mt19937_64 &rng, std::size_t steps)
{
	const std::size_t n = parities.size();
	Matrix m = Matrix::identity(n);
	std::uniform_int_distribution<std::size_t> pick(0, n ? n - 1 : 0);
	std::uniform_int_distribution<int> coeff(-2, 2);
	for (std::size_t s = 0; s < steps && n > 0; ++s) {
		const std::size_t i = pick(rng), j = pick(rng);
		if (i == j) {
			for (std::size_t c = 0; c < n; ++c)
				m(i, c) = -m(i, c);
			continue;
		}
		if (parities[i] != parities[j])
			continue;
		const int k = coeff(rng);
		if (k == 0)
			continue;
		for (std::size_t c = 0; c < n; ++c)
			m(i, c) += k * m(j, c);
	}
	return m;
}

Scalar random_rational(std::mt19937_64 &rng, long r, long d)
{
	const long den = std::uniform_int_distribution<long>(1, d)(rng);
	const long num = std::uniform_int_distribution<long>(-r * den, r * den)(rng);
	Scalar q(num, den);
	q.canonicalize();
	return q;
}

} // namespace homlie::fixtures
