#include "homlie/graded.hpp"

#include <set>

namespace homlie {

GradedSpace::GradedSpace(std::vector<std::string> names, Parities parities)
    : names_(std::move(names)), parities_(std::move(parities))
{
	if (names_.size() != parities_.size())
		throw InputError("basis names and parities differ in length");
	std::set<std::string> seen;
	for (std::size_t i = 0; i < names_.size(); ++i) {
		if (parities_[i] > 1)
			throw InputError("parity of '" + names_[i] + "' is not 0 or 1");
		if (names_[i].empty() || names_[i].find(',') != std::string::npos)
			throw InputError("basis name '" + names_[i] + "' is empty or contains a comma");
		if (!seen.insert(names_[i]).second)
			throw InputError("duplicate basis name '" + names_[i] + "'");
	}
}

GradedSpace GradedSpace::anonymous(const Parities &parities)
{
	std::vector<std::string> names;
	for (std::size_t i = 0; i < parities.size(); ++i)
		names.push_back("v" + std::to_string(i));
	return GradedSpace(std::move(names), parities);
}

std::optional<std::size_t> GradedSpace::index_of(const std::string &name) const
{
	for (std::size_t i = 0; i < names_.size(); ++i)
		if (names_[i] == name)
			return i;
	return std::nullopt;
}

std::optional<Parity> GradedSpace::parity_of(const Vector &v) const
{
	if (v.size() != dim())
		throw InputError("vector dimension does not match graded space");
	std::optional<Parity> p;
	for (std::size_t i = 0; i < v.size(); ++i) {
		if (sgn(v[i]) == 0)
			continue;
		if (p && *p != parities_[i])
			return std::nullopt;
		p = parities_[i];
	}
	return p;
}

Parity GradedSpace::parity_of(const Tuple &t) const
{
	Parity p = 0;
	for (auto i : t)
		p ^= parity(i);
	return p;
}

bool respects_parity(const Matrix &m, const Parities &in, const Parities &out, Parity parity)
{
	for (std::size_t r = 0; r < m.rows(); ++r)
		for (std::size_t c = 0; c < m.cols(); ++c)
			if (sgn(m(r, c)) != 0 && out[r] != (in[c] ^ parity))
				return false;
	return true;
}

GradedMap::GradedMap(GradedSpace domain, GradedSpace codomain, Matrix matrix, Parity parity)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)), parity_(parity)
{
	if (matrix_.rows() != codomain_.dim() || matrix_.cols() != domain_.dim())
		throw InputError("map matrix shape does not match its spaces");
	if (parity_ > 1)
		throw InputError("map parity is not 0 or 1");
	if (!respects_parity(matrix_, domain_.parities(), codomain_.parities(), parity_))
		throw InputError(parity_ == 0 ? "map is not even" : "map is not odd");
}

GradedMap GradedMap::identity(const GradedSpace &s) { return GradedMap(s, s, Matrix::identity(s.dim())); }

int koszul_sign(const std::vector<std::size_t> &perm, const Parities &parities)
{
	const std::size_t k = perm.size();
	if (parities.size() != k)
		throw InputError("permutation and parity list differ in length");
	std::vector<bool> hit(k, false);
	for (auto p : perm) {
		if (p >= k || hit[p])
			throw InputError("malformed permutation");
		hit[p] = true;
	}
	int sign = 1;
	for (std::size_t a = 0; a < k; ++a)
		for (std::size_t b = a + 1; b < k; ++b)
			if (perm[a] > perm[b] && parities[perm[a]] && parities[perm[b]])
				sign = -sign;
	return sign;
}

Scalar supertrace(const Matrix &m, const Parities &parities)
{
	if (m.rows() != m.cols())
		throw InputError("supertrace of a non-square matrix");
	if (parities.size() != m.rows())
		throw InputError("supertrace: parity list does not match matrix size");
	Scalar s;
	for (std::size_t i = 0; i < m.rows(); ++i)
		s += parities[i] ? -m(i, i) : m(i, i);
	return s;
}

Scalar supertrace(const GradedMap &m)
{
	if (!(m.domain() == m.codomain()))
		throw InputError("supertrace needs an endomorphism");
	return supertrace(m.matrix(), m.domain().parities());
}

Canonical canonicalize(const Tuple &indices, const Parities &parities)
{
	Canonical c{indices, 1, false};
	auto &t = c.tuple;
	for (auto i : t)
		if (i >= parities.size())
			throw InputError("basis index out of range");
	// Insertion sort by adjacent transpositions.
	for (std::size_t a = 1; a < t.size(); ++a)
		for (std::size_t b = a; b > 0 && t[b - 1] > t[b]; --b) {
			if (!(parities[t[b - 1]] && parities[t[b]]))
				c.sign = -c.sign;
			std::swap(t[b - 1], t[b]);
		}
	for (std::size_t a = 1; a < t.size(); ++a)
		if (t[a] == t[a - 1] && !parities[t[a]])
			c.zero = true;
	return c;
}

bool is_canonical(const Tuple &t, const Parities &parities)
{
	for (std::size_t a = 0; a < t.size(); ++a) {
		if (t[a] >= parities.size())
			return false;
		if (a > 0 && (t[a] < t[a - 1] || (t[a] == t[a - 1] && !parities[t[a]])))
			return false;
	}
	return true;
}

namespace {

void enumerate(std::size_t degree, const Parities &parities, Tuple &prefix, std::vector<Tuple> &out)
{
	if (prefix.size() == degree) {
		out.push_back(prefix);
		return;
	}
	std::size_t start = 0;
	if (!prefix.empty())
		start = parities[prefix.back()] ? prefix.back() : prefix.back() + 1;
	for (std::size_t i = start; i < parities.size(); ++i) {
		prefix.push_back(i);
		enumerate(degree, parities, prefix, out);
		prefix.pop_back();
	}
}

} // namespace

SkewBasis::SkewBasis(std::size_t degree, const Parities &parities) : degree_(degree)
{
	if (degree == 0)
		throw InputError("skew basis degree must be positive");
	Tuple prefix;
	enumerate(degree, parities, prefix, tuples_);
	for (std::size_t i = 0; i < tuples_.size(); ++i)
		index_.emplace(tuples_[i], i);
}

std::optional<std::size_t> SkewBasis::index_of(const Tuple &canonical) const
{
	auto it = index_.find(canonical);
	if (it == index_.end())
		return std::nullopt;
	return it->second;
}

} // namespace homlie
