#include <doctest.h>

#include "homlie/extensions.hpp"
#include "oracles.hpp"

using namespace homlie;

namespace {

const std::size_t h1 = 0, h2 = 1, q = 2, p = 3;

// ω on an arbitrary basis pair: skew signs, zero on repeated even elements.
Scalar naive_omega(const HomLieSuper &g, const Vector &omega, std::size_t i, std::size_t j)
{
	const auto &pa = g.parities();
	const CochainSpace s(Complex::binary_scalar, 2, g.space());
	auto at = [&](std::size_t a, std::size_t b) {
		auto k = s.index_of({{a, b}, 0});
		return k ? omega[*k] : Scalar(0);
	};
	if (i < j || (i == j && pa[i]))
		return at(i, j);
	if (i == j)
		return 0;
	return -oracle::sgn(pa[i] && pa[j]) * at(j, i);
}

Vector omega_for(const HomLieSuper &g, std::initializer_list<std::pair<Tuple, long>> entries)
{
	const CochainSpace s(Complex::binary_scalar, 2, g.space());
	Vector w = zero_vector(s.size());
	for (const auto &[t, v] : entries)
		w[*s.index_of({t, 0})] = v;
	return w;
}

// Hom-Jacobi on every basis triple, evaluated with the naive bracket.
bool naive_jacobi(const HomLieSuper &g)
{
	const auto &pa = g.parities();
	const std::size_t n = g.dim();
	auto al = [&](std::size_t i) { return g.alpha().apply(unit_vector(n, i)); };
	for (std::size_t x = 0; x < n; ++x)
		for (std::size_t y = 0; y < n; ++y)
			for (std::size_t z = 0; z < n; ++z) {
				Vector s = oracle::scaled(oracle::sgn(pa[x] && pa[z]), oracle::bracket(g, al(x), oracle::bracket(g, y, z)));
				add_scaled(s, oracle::sgn(pa[y] && pa[x]), oracle::bracket(g, al(y), oracle::bracket(g, z, x)));
				add_scaled(s, oracle::sgn(pa[z] && pa[y]), oracle::bracket(g, al(z), oracle::bracket(g, x, y)));
				if (!is_zero(s))
					return false;
			}
	return true;
}

std::vector<Scalar> tau_vec(const Representation &r)
{
	std::vector<Scalar> t;
	for (std::size_t i = 0; i < r.algebra().dim(); ++i)
		t.push_back(oracle::tau_of(r, i));
	return t;
}

} // namespace

TEST_CASE("extension bracket and twist")
{
	const auto g = fixtures::gl11().algebra();
	const Vector omega = omega_for(g, {{{q, p}, 1}, {{q, q}, 3}});
	const auto ext = build_central_extension({g, omega, Vector{0, 0, 0, 0, 2}});
	REQUIRE(ext.dim() == 5);
	CHECK(ext.space().name(4) == "c");
	CHECK(ext.parities()[4] == 0);
	for (std::size_t i = 0; i < 4; ++i) {
		for (std::size_t j = 0; j < 4; ++j) {
			Vector want = oracle::bracket(g, i, j);
			want.push_back(naive_omega(g, omega, i, j));
			CHECK(ext.bracket()(i, j) == want);
		}
		CHECK(is_zero(ext.bracket()(i, 4)));
		CHECK(is_zero(ext.bracket()(4, i)));
	}
	CHECK(ext.alpha()(4, 4) == 2);
	CHECK(ext.alpha()(4, 0) == 0);
}

TEST_CASE("zero omega gives the trivial extension")
{
	const auto g = fixtures::gl11().algebra();
	const CentralExtensionData d{g, zero_vector(4), {}};
	const auto r = verify_extension(d);
	CHECK(r.passed());
	CHECK(std::get<std::int64_t>(r.metrics().at("cocycle")) == 1);
	const auto ext = build_central_extension(d);
	for (std::size_t i = 0; i < 4; ++i)
		for (std::size_t j = 0; j < 4; ++j)
			CHECK(ext.bracket()(i, j)[4] == 0);
}

TEST_CASE("cocycle condition matches Hom-Jacobi on the extension")
{
	const auto g = fixtures::gl11().algebra();
	const auto good = verify_extension({g, omega_for(g, {{{q, p}, 1}}), {}});
	CHECK(good.passed());
	const CentralExtensionData bad_data{g, omega_for(g, {{{h1, h2}, 1}}), {}};
	const auto bad = verify_extension(bad_data);
	CHECK_FALSE(bad.passed());
	CHECK(bad.failures("cocycle") == 1);
	CHECK(bad.failures("equivalence") == 0);
	CHECK(std::get<std::int64_t>(bad.metrics().at("hom_jacobi")) == 0);
	CHECK_FALSE(naive_jacobi(build_central_extension(bad_data)));

	std::mt19937_64 rng(53);
	for (const auto &r : {fixtures::gl11(), fixtures::gl11t(2), fixtures::aff1(), fixtures::a0()}) {
		const auto &b = r.algebra();
		const std::size_t m = CochainSpace(Complex::binary_scalar, 2, b.space()).size();
		for (int i = 0; i < 8; ++i) {
			const Vector w = oracle::random_vector(rng, m);
			const CentralExtensionData d{b, w, {}};
			const bool cocycle = is_zero(ds_matrix(b, 2).apply(w));
			const auto rep = verify_extension(d);
			CHECK(naive_jacobi(build_central_extension(d)) == cocycle);
			CHECK(std::get<std::int64_t>(rep.metrics().at("cocycle")) == std::int64_t{cocycle});
			CHECK(rep.failures("equivalence") == 0);
		}
	}
}

TEST_CASE("cohomologous cocycles give isomorphic extensions")
{
	const auto g = fixtures::gl11().algebra();
	const Vector w1 = zero_vector(4);
	const Vector w2 = omega_for(g, {{{q, p}, 1}});
	const auto iso = extension_isomorphism(g, w1, w2);
	REQUIRE(iso);
	// ω₂ - ω₁ = a∘[·,·].
	for (std::size_t i = 0; i < 4; ++i)
		for (std::size_t j = 0; j < 4; ++j)
			CHECK(naive_omega(g, w2, i, j) - naive_omega(g, w1, i, j) == dot(iso->a, oracle::bracket(g, i, j)));
	const auto e1 = build_central_extension({g, w1, {}});
	const auto e2 = build_central_extension({g, w2, iso->lambda2});
	CHECK(verify_morphism(iso->map, e1, e2).passed());

	const auto same = extension_isomorphism(g, w2, w2);
	REQUIRE(same);
	CHECK(same->map == Matrix::identity(5));

	// Twisted base with a nonzero λ₁.
	const auto gt = fixtures::gl11t(2).algebra();
	const Vector l1{1, 2, 0, 0, 3};
	const auto twisted = extension_isomorphism(gt, zero_vector(4), omega_for(gt, {{{q, p}, 4}}), l1);
	REQUIRE(twisted);
	CHECK(verify_morphism(twisted->map, build_central_extension({gt, zero_vector(4), l1}),
	                      build_central_extension({gt, omega_for(gt, {{{q, p}, 4}}), twisted->lambda2}))
	          .passed());
}

TEST_CASE("non-cohomologous cocycles")
{
	const auto a0 = fixtures::a0().algebra();
	CHECK(cohomology_dims(a0, 2).h == 1);
	CHECK_FALSE(extension_isomorphism(a0, Vector{1}, Vector{0}));
	const auto g = fixtures::gl11().algebra();
	CHECK_THROWS_AS(extension_isomorphism(g, zero_vector(4), omega_for(g, {{{h1, h2}, 1}})), PreconditionError);
	CHECK_THROWS_AS(extension_isomorphism(g, omega_for(g, {{{h1, h2}, 1}}), zero_vector(4)), PreconditionError);
}

TEST_CASE("induced extension decomposes")
{
	std::mt19937_64 rng(59);
	for (const auto &r : {fixtures::gl11(), fixtures::gl11t(2), fixtures::aff1()}) {
		const auto &g = r.algebra();
		const auto tau = trace_functional(r);
		const auto z2 = kernel(ds_matrix(g, 2));
		Vector w = zero_vector(z2.ambient_dim());
		for (const auto &b : z2.basis_vectors())
			add_scaled(w, fixtures::random_rational(rng), b);
		const auto ie = induce_extension(g, tau, {g, w, {}});
		CHECK(ie.checks.passed());
		CHECK(std::get<std::int64_t>(ie.checks.metrics().at("c_in_ternary_center")) == 1);
		const auto nt = tau_vec(r);
		const SkewBasis triples(3, g.parities());
		REQUIRE(ie.omega_tau.size() == triples.size());
		for (std::size_t k = 0; k < triples.size(); ++k) {
			const auto &t = triples[k];
			const Scalar want = nt[t[0]] * naive_omega(g, w, t[1], t[2]) -
			                    oracle::sgn(g.parities()[t[0]] && g.parities()[t[1]]) * nt[t[1]] * naive_omega(g, w, t[0], t[2]) +
			                    oracle::sgn(g.parities()[t[2]] && (g.parities()[t[0]] ^ g.parities()[t[1]])) * nt[t[2]] *
			                        naive_omega(g, w, t[0], t[1]);
			CHECK(ie.omega_tau[k] == want);
			CHECK(omega_tau(g, tau, w, t) == want);
		}
	}
	// GL11 with ω(q,p) = 1: ω_τ(h1,q,p) = τ(h1)ω(q,p) = 1.
	const auto gl = fixtures::gl11();
	const auto &g = gl.algebra();
	const auto ie = induce_extension(g, trace_functional(gl), {g, omega_for(g, {{{q, p}, 1}}), {}});
	CHECK(ie.algebra.bracket()(h1, q, p)[4] == 1);
	CHECK(ie.algebra.bracket()(h2, q, p)[4] == -1);
}

TEST_CASE("extension data validation")
{
	const auto g = fixtures::gl11().algebra();
	CHECK_THROWS_AS(validate_extension_data({g, zero_vector(3), {}}), InputError);
	CHECK_THROWS_AS(validate_extension_data({g, zero_vector(4), Vector{1, 1, 1}}), InputError);
	CHECK_THROWS_AS(validate_extension_data({g, zero_vector(4), Vector{0, 0, 1, 0, 0}}), InputError);
	CHECK_NOTHROW(validate_extension_data({g, zero_vector(4), Vector{1, -1, 0, 0, 5}}));
	GradedSpace s({"a", "c"}, {0, 0});
	const HomLieSuper named_c(SuperBracket2(s), Matrix::identity(2));
	CHECK_THROWS_AS(validate_extension_data({named_c, zero_vector(1), {}}), InputError);
}
