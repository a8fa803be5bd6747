#include "homlie/linear.hpp"

#include <algorithm>
#include <cctype>

namespace homlie {

namespace {

bool is_integer_literal(std::string_view s)
{
	if (s.empty())
		return false;
	std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
	if (i == s.size())
		return false;
	return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
	                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

void check_same_size(const Vector &a, const Vector &b)
{
	if (a.size() != b.size())
		throw InputError("vector dimension mismatch");
}

} // namespace

Scalar parse_scalar(std::string_view text)
{
	const auto slash = text.find('/');
	const auto num = text.substr(0, slash);
	const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
	if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
		throw InputError("malformed rational '" + std::string(text) + "'");
	mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num));
	mpz_class d{std::string(den)};
	if (d == 0)
		throw InputError("zero denominator in rational '" + std::string(text) + "'");
	Scalar q(n, d);
	q.canonicalize();
	return q;
}

std::string to_string(const Scalar &s) { return s.get_str(); }

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i)
{
	Vector v(n);
	v.at(i) = 1;
	return v;
}

bool is_zero(const Vector &v)
{
	return std::all_of(v.begin(), v.end(), [](const Scalar &s) { return sgn(s) == 0; });
}

Vector operator+(const Vector &a, const Vector &b)
{
	check_same_size(a, b);
	Vector r(a.size());
	for (std::size_t i = 0; i < a.size(); ++i)
		r[i] = a[i] + b[i];
	return r;
}

Vector operator-(const Vector &a, const Vector &b)
{
	check_same_size(a, b);
	Vector r(a.size());
	for (std::size_t i = 0; i < a.size(); ++i)
		r[i] = a[i] - b[i];
	return r;
}

Vector operator*(const Scalar &c, const Vector &v)
{
	Vector r(v.size());
	if (sgn(c) == 0)
		return r;
	for (std::size_t i = 0; i < v.size(); ++i)
		r[i] = c * v[i];
	return r;
}

Vector &add_scaled(Vector &acc, const Scalar &c, const Vector &v)
{
	check_same_size(acc, v);
	if (sgn(c) == 0)
		return acc;
	for (std::size_t i = 0; i < v.size(); ++i)
		if (sgn(v[i]) != 0)
			acc[i] += c * v[i];
	return acc;
}

Scalar dot(const Vector &a, const Vector &b)
{
	check_same_size(a, b);
	Scalar s;
	for (std::size_t i = 0; i < a.size(); ++i)
		if (sgn(a[i]) != 0 && sgn(b[i]) != 0)
			s += a[i] * b[i];
	return s;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries))
{
	if (data_.size() != rows_ * cols_)
		throw InputError("matrix entry count does not match its shape");
}

Matrix Matrix::identity(std::size_t n)
{
	Matrix m(n, n);
	for (std::size_t i = 0; i < n; ++i)
		m(i, i) = 1;
	return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector> &rows)
{
	Matrix m(rows.size(), cols);
	for (std::size_t r = 0; r < rows.size(); ++r) {
		if (rows[r].size() != cols)
			throw InputError("row length mismatch");
		for (std::size_t c = 0; c < cols; ++c)
			m(r, c) = rows[r][c];
	}
	return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector> &cols)
{
	Matrix m(rows, cols.size());
	for (std::size_t c = 0; c < cols.size(); ++c) {
		if (cols[c].size() != rows)
			throw InputError("column length mismatch");
		for (std::size_t r = 0; r < rows; ++r)
			m(r, c) = cols[c][r];
	}
	return m;
}

Vector Matrix::row(std::size_t r) const
{
	return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
	              data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const
{
	Vector v(rows_);
	for (std::size_t r = 0; r < rows_; ++r)
		v[r] = (*this)(r, c);
	return v;
}

Matrix Matrix::transpose() const
{
	Matrix t(cols_, rows_);
	for (std::size_t r = 0; r < rows_; ++r)
		for (std::size_t c = 0; c < cols_; ++c)
			t(c, r) = (*this)(r, c);
	return t;
}

bool Matrix::is_zero() const { return homlie::is_zero(data_); }

Vector Matrix::apply(const Vector &v) const
{
	if (v.size() != cols_)
		throw InputError("matrix-vector dimension mismatch");
	Vector out(rows_);
	for (std::size_t c = 0; c < cols_; ++c) {
		if (sgn(v[c]) == 0)
			continue;
		for (std::size_t r = 0; r < rows_; ++r) {
			const Scalar &e = (*this)(r, c);
			if (sgn(e) != 0)
				out[r] += e * v[c];
		}
	}
	return out;
}

Matrix operator*(const Matrix &a, const Matrix &b)
{
	if (a.cols_ != b.rows_)
		throw InputError("matrix product dimension mismatch");
	Matrix p(a.rows_, b.cols_);
	for (std::size_t i = 0; i < a.rows_; ++i)
		for (std::size_t k = 0; k < a.cols_; ++k) {
			const Scalar &aik = a(i, k);
			if (sgn(aik) == 0)
				continue;
			for (std::size_t j = 0; j < b.cols_; ++j)
				if (sgn(b(k, j)) != 0)
					p(i, j) += aik * b(k, j);
		}
	return p;
}

Matrix operator+(const Matrix &a, const Matrix &b)
{
	if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
		throw InputError("matrix sum dimension mismatch");
	Matrix s(a.rows_, a.cols_);
	for (std::size_t i = 0; i < a.data_.size(); ++i)
		s.data_[i] = a.data_[i] + b.data_[i];
	return s;
}

Matrix operator-(const Matrix &a, const Matrix &b)
{
	if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
		throw InputError("matrix difference dimension mismatch");
	Matrix s(a.rows_, a.cols_);
	for (std::size_t i = 0; i < a.data_.size(); ++i)
		s.data_[i] = a.data_[i] - b.data_[i];
	return s;
}

Matrix operator*(const Scalar &c, const Matrix &m)
{
	Matrix s(m.rows_, m.cols_);
	for (std::size_t i = 0; i < m.data_.size(); ++i)
		s.data_[i] = c * m.data_[i];
	return s;
}

bool operator==(const Matrix &a, const Matrix &b)
{
	return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

/// In-place Gauss-Jordan; returns pivot columns.
std::vector<std::size_t> reduce(Matrix &m)
{
	std::vector<std::size_t> pivots;
	std::size_t lead = 0;
	const std::size_t rows = m.rows(), cols = m.cols();
	for (std::size_t c = 0; c < cols && lead < rows; ++c) {
		std::size_t p = lead;
		while (p < rows && sgn(m(p, c)) == 0)
			++p;
		if (p == rows)
			continue;
		if (p != lead)
			for (std::size_t j = 0; j < cols; ++j)
				std::swap(m(p, j), m(lead, j));
		const Scalar inv = 1 / m(lead, c);
		for (std::size_t j = c; j < cols; ++j)
			m(lead, j) *= inv;
		for (std::size_t r = 0; r < rows; ++r) {
			if (r == lead || sgn(m(r, c)) == 0)
				continue;
			const Scalar f = m(r, c);
			for (std::size_t j = c; j < cols; ++j)
				if (sgn(m(lead, j)) != 0)
					m(r, j) -= f * m(lead, j);
		}
		pivots.push_back(c);
		++lead;
	}
	return pivots;
}

} // namespace

Matrix rref(const Matrix &m)
{
	Matrix r = m;
	reduce(r);
	return r;
}

Matrix rref_nonzero(const Matrix &m)
{
	Matrix r = m;
	const auto pivots = reduce(r);
	std::vector<Scalar> kept(r.entries().begin(),
	                         r.entries().begin() + static_cast<std::ptrdiff_t>(pivots.size() * r.cols()));
	return Matrix(pivots.size(), r.cols(), std::move(kept));
}

std::size_t rank(const Matrix &m)
{
	Matrix r = m;
	return reduce(r).size();
}

std::optional<Matrix> inverse(const Matrix &m)
{
	if (m.rows() != m.cols())
		throw InputError("inverse of a non-square matrix");
	const std::size_t n = m.rows();
	Matrix aug(n, 2 * n);
	for (std::size_t i = 0; i < n; ++i) {
		for (std::size_t j = 0; j < n; ++j)
			aug(i, j) = m(i, j);
		aug(i, n + i) = 1;
	}
	const auto pivots = reduce(aug);
	if (pivots.size() < n || pivots[n - 1] != n - 1)
		return std::nullopt;
	Matrix inv(n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			inv(i, j) = aug(i, n + j);
	return inv;
}

// ---------------------------------------------------------------------------
// Subspaces

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::full(std::size_t n)
{
	Subspace s(n);
	s.basis_ = Matrix::identity(n);
	return s;
}

Subspace Subspace::span(std::size_t n, const std::vector<Vector> &vectors)
{
	Subspace s(n);
	if (!vectors.empty())
		s.basis_ = rref_nonzero(Matrix::from_rows(n, vectors));
	return s;
}

std::vector<Vector> Subspace::basis_vectors() const
{
	std::vector<Vector> out;
	out.reserve(dim());
	for (std::size_t r = 0; r < dim(); ++r)
		out.push_back(basis_.row(r));
	return out;
}

bool Subspace::contains(const Vector &v) const
{
	if (v.size() != ambient_)
		throw InputError("membership test dimension mismatch");
	// Eliminate v against the echelon basis; pivots are 1 and pivot columns are clean.
	Vector r = v;
	for (std::size_t i = 0; i < dim(); ++i) {
		std::size_t p = 0;
		while (sgn(basis_(i, p)) == 0)
			++p;
		if (sgn(r[p]) == 0)
			continue;
		const Scalar f = r[p];
		for (std::size_t j = p; j < ambient_; ++j)
			if (sgn(basis_(i, j)) != 0)
				r[j] -= f * basis_(i, j);
	}
	return homlie::is_zero(r);
}

bool Subspace::contains(const Subspace &other) const
{
	if (other.ambient_ != ambient_)
		throw InputError("subspace inclusion dimension mismatch");
	for (std::size_t i = 0; i < other.dim(); ++i)
		if (!contains(other.basis_.row(i)))
			return false;
	return true;
}

Subspace kernel(const Matrix &m)
{
	Matrix r = m;
	const auto pivots = reduce(r);
	const std::size_t n = m.cols();
	std::vector<bool> is_pivot(n, false);
	for (auto p : pivots)
		is_pivot[p] = true;
	std::vector<Vector> basis;
	for (std::size_t free = 0; free < n; ++free) {
		if (is_pivot[free])
			continue;
		Vector v(n);
		v[free] = 1;
		for (std::size_t i = 0; i < pivots.size(); ++i)
			v[pivots[i]] = -r(i, free);
		basis.push_back(std::move(v));
	}
	return Subspace::span(n, basis);
}

Subspace image(const Matrix &m)
{
	std::vector<Vector> cols;
	for (std::size_t c = 0; c < m.cols(); ++c)
		cols.push_back(m.column(c));
	return Subspace::span(m.rows(), cols);
}

Subspace subspace_sum(const Subspace &a, const Subspace &b)
{
	if (a.ambient_dim() != b.ambient_dim())
		throw InputError("subspace sum dimension mismatch");
	auto vs = a.basis_vectors();
	for (auto &v : b.basis_vectors())
		vs.push_back(std::move(v));
	return Subspace::span(a.ambient_dim(), vs);
}

Subspace subspace_intersection(const Subspace &a, const Subspace &b)
{
	if (a.ambient_dim() != b.ambient_dim())
		throw InputError("subspace intersection dimension mismatch");
	const std::size_t n = a.ambient_dim();
	if (a.is_zero() || b.is_zero())
		return Subspace(n);
	// Solve sum_i s_i a_i - sum_j t_j b_j = 0; the a-part of each solution lies in both.
	Matrix system(n, a.dim() + b.dim());
	for (std::size_t i = 0; i < a.dim(); ++i)
		for (std::size_t r = 0; r < n; ++r)
			system(r, i) = a.basis()(i, r);
	for (std::size_t j = 0; j < b.dim(); ++j)
		for (std::size_t r = 0; r < n; ++r)
			system(r, a.dim() + j) = -b.basis()(j, r);
	std::vector<Vector> common;
	for (const auto &sol : kernel(system).basis_vectors()) {
		Vector v(n);
		for (std::size_t i = 0; i < a.dim(); ++i)
			add_scaled(v, sol[i], a.basis().row(i));
		common.push_back(std::move(v));
	}
	return Subspace::span(n, common);
}

bool subspace_contains(const Subspace &s, const Vector &v) { return s.contains(v); }

std::optional<Vector> solve(const Matrix &m, const Vector &b)
{
	if (b.size() != m.rows())
		throw InputError("solve: right-hand side dimension mismatch");
	const std::size_t n = m.cols();
	Matrix aug(m.rows(), n + 1);
	for (std::size_t r = 0; r < m.rows(); ++r) {
		for (std::size_t c = 0; c < n; ++c)
			aug(r, c) = m(r, c);
		aug(r, n) = b[r];
	}
	const auto pivots = reduce(aug);
	if (!pivots.empty() && pivots.back() == n)
		return std::nullopt;
	Vector x(n);
	for (std::size_t i = 0; i < pivots.size(); ++i)
		x[pivots[i]] = aug(i, n);
	return x;
}

} // namespace homlie
