#pragma once

// Naive reference evaluations used as oracles. Everything here works from the
// defining formulas on basis elements and avoids the library's precomputed tables.

#include <functional>
#include <random>

#include "homlie/fixtures.hpp"

namespace oracle {

using namespace homlie;

inline int sgn(bool negative) { return negative ? -1 : 1; }

inline Vector scaled(const Scalar &c, const Vector &v) { return c * v; }

/// [e_i, e_j] read off the canonical values, using [y,x] = -(-1)^{|x||y|}[x,y].
inline Vector bracket(const HomLieSuper &g, std::size_t i, std::size_t j)
{
	const auto &pa = g.parities();
	const auto vals = g.bracket().canonical_values();
	auto lookup = [&](const Tuple &t) {
		auto it = vals.find(t);
		return it == vals.end() ? zero_vector(g.dim()) : it->second;
	};
	if (i < j || (i == j && pa[i] == 1))
		return lookup({i, j});
	if (i == j)
		return zero_vector(g.dim());
	return scaled(-sgn(pa[i] && pa[j]), lookup({j, i}));
}

/// Bilinear extension of `bracket`.
inline Vector bracket(const HomLieSuper &g, const Vector &x, const Vector &y)
{
	Vector out = zero_vector(g.dim());
	for (std::size_t i = 0; i < g.dim(); ++i)
		for (std::size_t j = 0; j < g.dim(); ++j)
			if (x[i] != 0 && y[j] != 0)
				add_scaled(out, x[i] * y[j], bracket(g, i, j));
	return out;
}

inline Scalar tau_of(const Representation &r, std::size_t i)
{
	// Supertrace by summing the diagonal with signs, computed here again.
	const auto &m = r.rho(i);
	Scalar s = 0;
	for (std::size_t k = 0; k < m.rows(); ++k)
		s += r.module().parity(k) ? -m(k, k) : m(k, k);
	return s;
}

/// τ(x)[y,z] - (-1)^{|x||y|} τ(y)[x,z] + (-1)^{|z|(|x|+|y|)} τ(z)[x,y] on basis elements.
inline Vector induced(const HomLieSuper &g, const std::vector<Scalar> &tau, std::size_t i, std::size_t j,
                      std::size_t k)
{
	const auto &pa = g.parities();
	Vector out = scaled(tau[i], bracket(g, j, k));
	add_scaled(out, -sgn(pa[i] && pa[j]) * tau[j], bracket(g, i, k));
	add_scaled(out, sgn(pa[k] && (pa[i] ^ pa[j])) * tau[k], bracket(g, i, j));
	return out;
}

/// Trilinear extension of a ternary table given on basis elements.
inline Vector trilinear(const TernaryHomLieSuper &t, const Vector &x, const Vector &y, const Vector &z)
{
	const std::size_t n = t.dim();
	Vector out = zero_vector(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k) {
				Scalar c = x[i] * y[j] * z[k];
				if (c != 0)
					add_scaled(out, c, t.bracket()(i, j, k));
			}
	return out;
}

/// Hom-Nambu residual on one basis 5-tuple, evaluated by trilinear expansion.
inline Vector nambu(const TernaryHomLieSuper &t, std::size_t x, std::size_t y, std::size_t z, std::size_t u,
                    std::size_t v)
{
	const auto &pa = t.parities();
	const std::size_t n = t.dim();
	auto e = [&](std::size_t i) { return unit_vector(n, i); };
	auto a1 = [&](std::size_t i) { return t.alpha1().apply(e(i)); };
	auto a2 = [&](std::size_t i) { return t.alpha2().apply(e(i)); };
	const int xy = pa[x] ^ pa[y];
	Vector lhs = trilinear(t, a1(x), a2(y), trilinear(t, e(z), e(u), e(v)));
	Vector rhs = trilinear(t, trilinear(t, e(x), e(y), e(z)), a1(u), a2(v));
	add_scaled(rhs, sgn(pa[z] && xy), trilinear(t, a1(z), trilinear(t, e(x), e(y), e(u)), a2(v)));
	add_scaled(rhs, sgn((pa[z] ^ pa[u]) && xy), trilinear(t, a1(z), a2(u), trilinear(t, e(x), e(y), e(v))));
	return lhs - rhs;
}

/// First failing 5-tuple in lexicographic order, if any.
inline std::optional<Tuple> first_nambu_failure(const TernaryHomLieSuper &t)
{
	const std::size_t n = t.dim();
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b)
			for (std::size_t c = 0; c < n; ++c)
				for (std::size_t d = 0; d < n; ++d)
					for (std::size_t e = 0; e < n; ++e)
						if (!is_zero(nambu(t, a, b, c, d, e)))
							return Tuple{a, b, c, d, e};
	return std::nullopt;
}

inline Matrix random_matrix(std::mt19937_64 &rng, std::size_t r, std::size_t c, long range = 3)
{
	Matrix m(r, c);
	std::uniform_int_distribution<long> d(-range, range);
	for (std::size_t i = 0; i < r; ++i)
		for (std::size_t j = 0; j < c; ++j)
			m(i, j) = d(rng);
	return m;
}

inline Vector random_vector(std::mt19937_64 &rng, std::size_t n)
{
	Vector v(n);
	for (auto &x : v)
		x = fixtures::random_rational(rng);
	return v;
}

} // namespace oracle
