#include <algorithm>
#include <numeric>

#include <doctest.h>

#include "oracles.hpp"

using namespace homlie;

namespace {

const Parities gl11_parities{0, 0, 1, 1};

// Sign of a permutation by counting inversions.
int permutation_sign(const std::vector<std::size_t> &p)
{
	int s = 1;
	for (std::size_t i = 0; i < p.size(); ++i)
		for (std::size_t j = i + 1; j < p.size(); ++j)
			if (p[i] > p[j])
				s = -s;
	return s;
}

} // namespace

TEST_CASE("graded space validation")
{
	CHECK_THROWS_AS(GradedSpace({"a", "b"}, {0}), InputError);
	CHECK_THROWS_AS(GradedSpace({"a"}, {2}), InputError);
	CHECK_THROWS_AS(GradedSpace({"a", "a"}, {0, 1}), InputError);
	CHECK_THROWS_AS(GradedSpace({"a,b"}, {0}), InputError);
	const GradedSpace s({"h", "q"}, {0, 1});
	CHECK(s.parity_of(Vector{0, 3}) == Parity{1});
	CHECK_FALSE(s.parity_of(Vector{1, 1}));
}

TEST_CASE("koszul_sign examples")
{
	CHECK(koszul_sign({0, 1, 2}, {1, 0, 1}) == 1);
	CHECK(koszul_sign({1, 0}, {0, 0}) == 1);
	CHECK(koszul_sign({1, 0}, {1, 1}) == -1);
	CHECK(koszul_sign({1, 0}, {0, 1}) == 1);
	CHECK_THROWS_AS(koszul_sign({0, 0}, {0, 0}), InputError);
}

TEST_CASE("supertrace examples")
{
	CHECK(supertrace(Matrix::identity(2), {0, 1}) == 0);
	const auto gl = fixtures::gl11();
	CHECK(supertrace(gl.rho(0), gl.module().parities()) == 1);
	CHECK(supertrace(gl.rho(1), gl.module().parities()) == -1);
	const Matrix qp = gl.rho(2) * gl.rho(3) + gl.rho(3) * gl.rho(2);
	CHECK(qp == Matrix::identity(2));
	CHECK(supertrace(qp, gl.module().parities()) == 0);
}

TEST_CASE("canonicalize examples")
{
	const auto a = canonicalize({1, 0}, {0, 0});
	CHECK(a.tuple == Tuple{0, 1});
	CHECK(a.sign == -1);
	CHECK_FALSE(a.zero);
	CHECK(canonicalize({0, 0}, {0}).zero);
	CHECK_FALSE(canonicalize({2, 2}, gl11_parities).zero);
	CHECK(canonicalize({3, 2}, gl11_parities).sign == 1);
}

TEST_CASE("canonicalize agrees with permutation sign times Koszul sign")
{
	// For distinct indices, sorting x_{σ} back to order multiplies by sgn(σ)(-1)^{koszul}.
	const std::size_t n = 4;
	std::vector<std::size_t> idx(n);
	std::iota(idx.begin(), idx.end(), 0);
	for (std::size_t k = 2; k <= 4; ++k) {
		std::vector<std::size_t> perm(k);
		std::iota(perm.begin(), perm.end(), 0);
		do {
			Tuple t(perm.begin(), perm.end());
			Parities sub(k);
			for (std::size_t i = 0; i < k; ++i)
				sub[i] = gl11_parities[i];
			const auto c = canonicalize(t, gl11_parities);
			CHECK_FALSE(c.zero);
			CHECK(c.sign == permutation_sign(perm) * koszul_sign(perm, sub));
		} while (std::next_permutation(perm.begin(), perm.end()));
	}
}

TEST_CASE("skew bases by brute force")
{
	const SkewBasis b2(2, gl11_parities);
	CHECK(b2.tuples() == std::vector<Tuple>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}});
	for (std::size_t degree = 1; degree <= 4; ++degree) {
		std::size_t count = 0;
		const std::size_t n = gl11_parities.size();
		std::size_t total = 1;
		for (std::size_t i = 0; i < degree; ++i)
			total *= n;
		for (std::size_t code = 0; code < total; ++code) {
			Tuple t(degree);
			std::size_t c = code;
			for (std::size_t i = degree; i-- > 0;) {
				t[i] = c % n;
				c /= n;
			}
			bool ok = std::is_sorted(t.begin(), t.end());
			for (std::size_t i = 0; ok && i + 1 < degree; ++i)
				ok = !(t[i] == t[i + 1] && gl11_parities[t[i]] == 0);
			if (ok) {
				++count;
				CHECK(is_canonical(t, gl11_parities));
			}
		}
		CHECK(SkewBasis(degree, gl11_parities).size() == count);
	}
	CHECK(SkewBasis(3, gl11_parities).size() == 12);
}
