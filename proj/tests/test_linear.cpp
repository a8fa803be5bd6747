#include <doctest.h>

#include "oracles.hpp"

using namespace homlie;

TEST_CASE("parse_scalar")
{
	CHECK(parse_scalar("3") == 3);
	CHECK(parse_scalar("-6/4") == Scalar(-3, 2));
	CHECK(to_string(parse_scalar("4/6")) == "2/3");
	CHECK_THROWS_AS(parse_scalar("1/0"), InputError);
	CHECK_THROWS_AS(parse_scalar("abc"), InputError);
	CHECK_THROWS_AS(parse_scalar(""), InputError);
	CHECK_THROWS_AS(parse_scalar("1/"), InputError);
}

TEST_CASE("rref examples")
{
	CHECK(rref(Matrix::identity(2)) == Matrix::identity(2));
	CHECK(rref(Matrix(2, 2)) == Matrix(2, 2));
	CHECK(rank(Matrix(2, 2)) == 0);
	const Matrix m = Matrix::from_rows(2, {{2, 4}, {1, 2}});
	CHECK(rref_nonzero(m) == Matrix::from_rows(2, {{1, 2}}));
}

TEST_CASE("kernel and image examples")
{
	CHECK(kernel(Matrix::identity(3)).is_zero());
	CHECK(kernel(Matrix(2, 3)).is_full());
	const auto k = kernel(Matrix::from_rows(2, {{1, 1}}));
	CHECK(k.dim() == 1);
	CHECK(k.contains(Vector{1, -1}));
	CHECK(image(Matrix::identity(3)).is_full());
}

TEST_CASE("solve example")
{
	const Matrix a = Matrix::from_rows(2, {{1, 1}});
	auto x = solve(a, Vector{2});
	REQUIRE(x);
	CHECK(a.apply(*x) == Vector{2});
	CHECK_FALSE(solve(Matrix::from_rows(2, {{1, 1}, {1, 1}}), Vector{1, 2}));
}

TEST_CASE("random kernels, inverses and intersections")
{
	std::mt19937_64 rng(7);
	for (int trial = 0; trial < 40; ++trial) {
		const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
		const Matrix m = oracle::random_matrix(rng, r, c, 2);
		const auto k = kernel(m);
		CHECK(k.dim() + rank(m) == c);
		for (const auto &v : k.basis_vectors())
			CHECK(is_zero(m.apply(v)));
		CHECK(image(m).dim() == rank(m.transpose()));

		const Matrix sq = oracle::random_matrix(rng, 3, 3);
		if (auto inv = inverse(sq)) {
			CHECK(*inv * sq == Matrix::identity(3));
			CHECK(rank(sq) == 3);
		} else {
			CHECK(rank(sq) < 3);
		}

		const auto a = image(oracle::random_matrix(rng, 4, 2));
		const auto b = image(oracle::random_matrix(rng, 4, 2));
		const auto meet = subspace_intersection(a, b);
		CHECK(meet.dim() + subspace_sum(a, b).dim() == a.dim() + b.dim());
		for (const auto &v : meet.basis_vectors()) {
			CHECK(a.contains(v));
			CHECK(b.contains(v));
		}
	}
}
