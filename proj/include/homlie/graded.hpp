#pragma once

// Z2-graded spaces, Koszul signs, supertrace and canonical super-skew tuples.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homlie/linear.hpp"

namespace homlie {

using Parity = std::uint8_t;
using Parities = std::vector<Parity>;
using Tuple = std::vector<std::size_t>;

class GradedSpace {
public:
	GradedSpace() = default;
	GradedSpace(std::vector<std::string> names, Parities parities);
	/// Basis named "v0", "v1", ...
	static GradedSpace anonymous(const Parities &parities);

	std::size_t dim() const noexcept { return parities_.size(); }
	Parity parity(std::size_t i) const { return parities_.at(i); }
	const Parities &parities() const noexcept { return parities_; }
	const std::string &name(std::size_t i) const { return names_.at(i); }
	const std::vector<std::string> &names() const noexcept { return names_; }
	std::optional<std::size_t> index_of(const std::string &name) const;

	/// Parity of a nonzero homogeneous vector; nullopt for zero or mixed vectors.
	std::optional<Parity> parity_of(const Vector &v) const;
	Parity parity_of(const Tuple &t) const;

	friend bool operator==(const GradedSpace &, const GradedSpace &) = default;

private:
	std::vector<std::string> names_;
	Parities parities_;
};

/// Matrix of a homogeneous linear map between graded spaces. The block structure
/// is checked against the declared parity at construction.
class GradedMap {
public:
	GradedMap() = default;
	GradedMap(GradedSpace domain, GradedSpace codomain, Matrix matrix, Parity parity = 0);
	static GradedMap identity(const GradedSpace &s);

	const GradedSpace &domain() const noexcept { return domain_; }
	const GradedSpace &codomain() const noexcept { return codomain_; }
	const Matrix &matrix() const noexcept { return matrix_; }
	Parity parity() const noexcept { return parity_; }

	Vector operator()(const Vector &v) const { return matrix_.apply(v); }
	Vector image_of(std::size_t basis_index) const { return matrix_.column(basis_index); }

private:
	GradedSpace domain_, codomain_;
	Matrix matrix_;
	Parity parity_ = 0;
};

/// True iff entry (r,c) vanishes whenever out[r] != in[c] + parity.
bool respects_parity(const Matrix &m, const Parities &in, const Parities &out, Parity parity);

/// Product of (-1)^{|a||b|} over the inversions of `permutation`, where the
/// permuted tuple is (x_{perm[0]}, x_{perm[1]}, ...).
int koszul_sign(const std::vector<std::size_t> &permutation, const Parities &parities);

/// Tr(even block) - Tr(odd block). Off-diagonal blocks never contribute, so this
/// is also the supertrace of the even part of a mixed map.
Scalar supertrace(const Matrix &m, const Parities &parities);
Scalar supertrace(const GradedMap &m);

struct Canonical {
	Tuple tuple;
	int sign = 1;
	bool zero = false;
};

/// Sorts `indices`; each transposition of distinct a,b contributes -(-1)^{|a||b|}.
Canonical canonicalize(const Tuple &indices, const Parities &parities);
bool is_canonical(const Tuple &t, const Parities &parities);

/// Canonical coordinates of super-skew p-forms.
class SkewBasis {
public:
	SkewBasis() = default;
	SkewBasis(std::size_t degree, const Parities &parities);

	std::size_t degree() const noexcept { return degree_; }
	std::size_t size() const noexcept { return tuples_.size(); }
	const std::vector<Tuple> &tuples() const &noexcept { return tuples_; }
	std::vector<Tuple> tuples() &&noexcept { return std::move(tuples_); }
	const Tuple &operator[](std::size_t i) const { return tuples_[i]; }
	std::optional<std::size_t> index_of(const Tuple &canonical) const;

private:
	std::size_t degree_ = 0;
	std::vector<Tuple> tuples_;
	std::map<Tuple, std::size_t> index_;
};

} // namespace homlie
