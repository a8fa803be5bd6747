#include "homlie/algebra.hpp"

namespace homlie {

namespace {

int sign_pow(Parity a, Parity b) { return (a & b) ? -1 : 1; }

Vector signed_vec(int s, const Vector &v) { return s > 0 ? v : Scalar(-1) * v; }

void check_parity_law(const GradedSpace &s, const Tuple &key, const Vector &v)
{
	if (v.size() != s.dim())
		throw InputError("bracket value has the wrong dimension");
	const Parity want = s.parity_of(key);
	for (std::size_t k = 0; k < v.size(); ++k)
		if (sgn(v[k]) != 0 && s.parity(k) != want)
			throw InputError("bracket value violates the parity law at " + s.name(key[0]) + "," +
			                 s.name(key[1]));
}

} // namespace

void require_even_endomorphism(const Matrix &m, const GradedSpace &s, const std::string &what)
{
	if (m.rows() != s.dim() || m.cols() != s.dim())
		throw InputError(what + " has the wrong shape");
	if (!respects_parity(m, s.parities(), s.parities(), 0))
		throw InputError(what + " is not even");
}

// ---------------------------------------------------------------------------

SuperBracket2::SuperBracket2(GradedSpace space)
    : space_(std::move(space)), table_(space_.dim() * space_.dim(), Vector(space_.dim()))
{
}

SuperBracket2 SuperBracket2::from_canonical(GradedSpace space, const std::map<Tuple, Vector> &values)
{
	SuperBracket2 b(std::move(space));
	for (const auto &[key, v] : values) {
		if (key.size() != 2 || !is_canonical(key, b.space_.parities()))
			throw InputError("non-canonical bracket key");
		check_parity_law(b.space_, key, v);
		b = b.with_canonical_value(key[0], key[1], v);
	}
	return b;
}

SuperBracket2 SuperBracket2::raw(GradedSpace space, std::vector<Vector> table)
{
	SuperBracket2 b(std::move(space));
	if (table.size() != b.table_.size())
		throw InputError("bracket table has the wrong size");
	for (const auto &v : table)
		if (v.size() != b.dim())
			throw InputError("bracket value has the wrong dimension");
	b.table_ = std::move(table);
	return b;
}

Vector SuperBracket2::eval(const Vector &x, const Vector &y) const
{
	const std::size_t n = dim();
	Vector out(n);
	for (std::size_t i = 0; i < n; ++i) {
		if (sgn(x[i]) == 0)
			continue;
		for (std::size_t j = 0; j < n; ++j)
			if (sgn(y[j]) != 0)
				add_scaled(out, x[i] * y[j], (*this)(i, j));
	}
	return out;
}

std::map<Tuple, Vector> SuperBracket2::canonical_values() const
{
	std::map<Tuple, Vector> out;
	for (const auto &t : SkewBasis(2, space_.parities()).tuples())
		if (!is_zero((*this)(t[0], t[1])))
			out.emplace(t, (*this)(t[0], t[1]));
	return out;
}

SuperBracket2 SuperBracket2::with_raw_entry(std::size_t i, std::size_t j, Vector v) const
{
	if (i >= dim() || j >= dim() || v.size() != dim())
		throw InputError("bracket entry out of range");
	SuperBracket2 b = *this;
	b.table_[i * dim() + j] = std::move(v);
	return b;
}

SuperBracket2 SuperBracket2::with_canonical_value(std::size_t i, std::size_t j, const Vector &v) const
{
	const auto &p = space_.parities();
	if (i >= dim() || j >= dim() || v.size() != dim())
		throw InputError("bracket entry out of range");
	if (i == j && !p[i]) {
		if (!is_zero(v))
			throw InputError("bracket of an even element with itself must vanish");
		return *this;
	}
	SuperBracket2 b = *this;
	b.table_[i * dim() + j] = v;
	b.table_[j * dim() + i] = signed_vec(-sign_pow(p[i], p[j]), v);
	return b;
}

SuperBracket2 SuperBracket2::composed_with(const Matrix &m) const
{
	SuperBracket2 b = *this;
	for (auto &v : b.table_)
		v = m.apply(v);
	return b;
}

// ---------------------------------------------------------------------------

HomLieSuper::HomLieSuper(SuperBracket2 bracket, Matrix alpha) : HomLieSuper(raw(std::move(bracket), std::move(alpha)))
{
	const auto skew = verify_skew(*this);
	if (const auto *f = skew.first_failure())
		throw PreconditionError("bracket is not super-skew", *f->witness);
	const auto jac = verify_hom_jacobi(*this);
	if (const auto *f = jac.first_failure())
		throw PreconditionError("Hom-Jacobi identity fails", *f->witness);
}

HomLieSuper HomLieSuper::raw(SuperBracket2 bracket, Matrix alpha)
{
	require_even_endomorphism(alpha, bracket.space(), "alpha");
	HomLieSuper a;
	a.bracket_ = std::move(bracket);
	a.alpha_ = std::move(alpha);
	return a;
}

Vector bracket_eval(const HomLieSuper &a, std::size_t i, std::size_t j)
{
	if (i >= a.dim() || j >= a.dim())
		throw InputError("basis index out of range");
	return a.bracket()(i, j);
}

Report verify_skew(const HomLieSuper &a)
{
	Report r("verify_skew");
	const auto &s = a.space();
	for (std::size_t i = 0; i < a.dim(); ++i)
		for (std::size_t j = 0; j < a.dim(); ++j) {
			const Vector &v = a.bracket()(i, j);
			const Parity want = s.parity(i) ^ s.parity(j);
			for (std::size_t k = 0; k < v.size(); ++k)
				if (sgn(v[k]) != 0 && s.parity(k) != want) {
					r.fail("parity-law", {i, j}, v);
					break;
				}
			if (j < i)
				continue;
			Vector res = v;
			add_scaled(res, sign_pow(s.parity(i), s.parity(j)), a.bracket()(j, i));
			if (!is_zero(res))
				r.fail("skew", {i, j}, res);
		}
	return r;
}

Vector hom_jacobiator(const HomLieSuper &a, std::size_t x, std::size_t y, std::size_t z)
{
	const auto &p = a.parities();
	const auto &b = a.bracket();
	auto term = [&](std::size_t u, std::size_t v, std::size_t w) { return b.eval(a.alpha().column(u), b(v, w)); };
	Vector res = term(x, y, z);
	if (p[x] & p[z])
		res = Scalar(-1) * res;
	add_scaled(res, sign_pow(p[y], p[x]), term(y, z, x));
	add_scaled(res, sign_pow(p[z], p[y]), term(z, x, y));
	return res;
}

Report verify_hom_jacobi(const HomLieSuper &a)
{
	Report r("verify_hom_jacobi");
	const std::size_t n = a.dim();
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i; j < n; ++j)
			for (std::size_t k = j; k < n; ++k) {
				auto res = hom_jacobiator(a, i, j, k);
				if (!is_zero(res))
					r.fail("hom-jacobi", {i, j, k}, res);
			}
	return r;
}

Report verify_multiplicative(const HomLieSuper &a)
{
	Report r("verify_multiplicative");
	const auto &al = a.alpha();
	for (std::size_t i = 0; i < a.dim(); ++i)
		for (std::size_t j = i; j < a.dim(); ++j) {
			Vector res = al.apply(a.bracket()(i, j)) - a.bracket().eval(al.column(i), al.column(j));
			if (!is_zero(res))
				r.fail("multiplicative", {i, j}, res);
		}
	return r;
}

Report verify_morphism(const Matrix &f, const HomLieSuper &a, const HomLieSuper &b)
{
	if (f.rows() != b.dim() || f.cols() != a.dim())
		throw InputError("morphism shape does not match the algebras");
	if (!respects_parity(f, a.parities(), b.parities(), 0))
		throw InputError("morphism is not even");
	Report r("verify_morphism");
	for (std::size_t i = 0; i < a.dim(); ++i)
		for (std::size_t j = 0; j < a.dim(); ++j) {
			Vector res = f.apply(a.bracket()(i, j)) - b.bracket().eval(f.column(i), f.column(j));
			if (!is_zero(res))
				r.fail("bracket", {i, j}, res);
		}
	const Matrix twist = f * a.alpha() - b.alpha() * f;
	for (std::size_t i = 0; i < a.dim(); ++i)
		if (!is_zero(twist.column(i)))
			r.fail("twist", {i}, twist.column(i));
	return r;
}

HomLieSuper yau_twist(const HomLieSuper &lie, const Matrix &morphism)
{
	require_even_endomorphism(morphism, lie.space(), "twisting map");
	if (!(lie.alpha() == Matrix::identity(lie.dim())))
		throw PreconditionError("Yau twist expects an algebra with alpha = id");
	const auto m = verify_morphism(morphism, lie, HomLieSuper::raw(lie.bracket(), morphism));
	if (const auto *f = m.first_failure("bracket"))
		throw PreconditionError("twisting map is not a bracket morphism", *f->witness);
	return HomLieSuper(lie.bracket().composed_with(morphism), morphism);
}

Subspace bracket_span(const HomLieSuper &a, const Subspace &s1, const Subspace &s2)
{
	std::vector<Vector> out;
	for (const auto &x : s1.basis_vectors())
		for (const auto &y : s2.basis_vectors())
			out.push_back(a.bracket().eval(x, y));
	return Subspace::span(a.dim(), out);
}

bool is_subalgebra(const HomLieSuper &a, const Subspace &s)
{
	if (s.ambient_dim() != a.dim())
		throw InputError("subspace ambient dimension mismatch");
	for (const auto &v : s.basis_vectors())
		if (!s.contains(a.alpha().apply(v)))
			return false;
	return s.contains(bracket_span(a, s, s));
}

bool is_ideal(const HomLieSuper &a, const Subspace &s)
{
	return is_subalgebra(a, s) && s.contains(bracket_span(a, s, Subspace::full(a.dim())));
}

HomLieSuper conjugate(const HomLieSuper &a, const Matrix &p)
{
	require_even_endomorphism(p, a.space(), "change of basis");
	const auto inv = inverse(p);
	if (!inv)
		throw InputError("change of basis is singular");
	const std::size_t n = a.dim();
	std::vector<Vector> table(n * n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			table[i * n + j] = inv->apply(a.bracket().eval(p.column(i), p.column(j)));
	return HomLieSuper::raw(SuperBracket2::raw(a.space(), std::move(table)), *inv * a.alpha() * p);
}

} // namespace homlie
