#pragma once

// Exact rational linear algebra over Q.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "homlie/errors.hpp"

namespace homlie {

/// Exact rational. GMP keeps numerator/denominator canonical (gcd 1, den > 0).
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// Parses "n" or "n/d" with d != 0; result is reduced.
Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar &s);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector &v);
Vector operator+(const Vector &a, const Vector &b);
Vector operator-(const Vector &a, const Vector &b);
Vector operator*(const Scalar &c, const Vector &v);
Vector &add_scaled(Vector &acc, const Scalar &c, const Vector &v);
Scalar dot(const Vector &a, const Vector &b);

/// Dense row-major matrix.
class Matrix {
public:
	Matrix() = default;
	Matrix(std::size_t rows, std::size_t cols);
	Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

	static Matrix identity(std::size_t n);
	static Matrix from_rows(std::size_t cols, const std::vector<Vector> &rows);
	static Matrix from_columns(std::size_t rows, const std::vector<Vector> &cols);

	std::size_t rows() const noexcept { return rows_; }
	std::size_t cols() const noexcept { return cols_; }

	Scalar &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
	const Scalar &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

	Vector row(std::size_t r) const;
	Vector column(std::size_t c) const;
	const std::vector<Scalar> &entries() const noexcept { return data_; }

	Matrix transpose() const;
	bool is_zero() const;

	Vector apply(const Vector &v) const;
	friend Matrix operator*(const Matrix &a, const Matrix &b);
	friend Matrix operator+(const Matrix &a, const Matrix &b);
	friend Matrix operator-(const Matrix &a, const Matrix &b);
	friend Matrix operator*(const Scalar &c, const Matrix &m);
	friend bool operator==(const Matrix &a, const Matrix &b);

private:
	std::size_t rows_ = 0;
	std::size_t cols_ = 0;
	std::vector<Scalar> data_;
};

/// Reduced row echelon form; zero rows are kept at the bottom.
Matrix rref(const Matrix &m);
/// rref with zero rows dropped.
Matrix rref_nonzero(const Matrix &m);
std::size_t rank(const Matrix &m);
/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix &m);

/// A linear subspace of Q^n, stored by its reduced echelon basis.
class Subspace {
public:
	explicit Subspace(std::size_t ambient_dim = 0);

	static Subspace zero(std::size_t n) { return Subspace(n); }
	static Subspace full(std::size_t n);
	static Subspace span(std::size_t n, const std::vector<Vector> &vectors);

	std::size_t ambient_dim() const noexcept { return ambient_; }
	std::size_t dim() const noexcept { return basis_.rows(); }
	bool is_zero() const noexcept { return dim() == 0; }
	bool is_full() const noexcept { return dim() == ambient_; }

	const Matrix &basis() const noexcept { return basis_; }
	std::vector<Vector> basis_vectors() const;

	bool contains(const Vector &v) const;
	bool contains(const Subspace &other) const;

	friend bool operator==(const Subspace &a, const Subspace &b) { return a.basis_ == b.basis_ && a.ambient_ == b.ambient_; }

private:
	std::size_t ambient_;
	Matrix basis_;
};

/// Right null space {x : m x = 0}.
Subspace kernel(const Matrix &m);
/// Column space.
Subspace image(const Matrix &m);
Subspace subspace_sum(const Subspace &a, const Subspace &b);
Subspace subspace_intersection(const Subspace &a, const Subspace &b);
bool subspace_contains(const Subspace &s, const Vector &v);
/// One solution of m x = b with zeros in the free coordinates, or nullopt.
std::optional<Vector> solve(const Matrix &m, const Vector &b);

} // namespace homlie
