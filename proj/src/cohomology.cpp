#include "homlie/cohomology.hpp"

namespace homlie {

namespace {

int sign_pow(Parity a, Parity b) { return (a & b) ? -1 : 1; }

std::size_t value_dim(Complex c, std::size_t n) { return is_adjoint(c) ? n : 1; }

/// Calls visit(basis_tuple, coefficient) for every nonzero term of v₀ ⊗ v₁ ⊗ ...
template <class Visit>
void expand(const std::vector<const Vector *> &args, Visit visit)
{
	Tuple idx(args.size());
	auto rec = [&](auto &self, std::size_t pos, const Scalar &coeff) -> void {
		if (pos == args.size()) {
			visit(idx, coeff);
			return;
		}
		const Vector &v = *args[pos];
		for (std::size_t i = 0; i < v.size(); ++i)
			if (sgn(v[i]) != 0) {
				idx[pos] = i;
				self(self, pos + 1, coeff * v[i]);
			}
	};
	rec(rec, 0, Scalar(1));
}

} // namespace

const char *to_string(Complex c)
{
	switch (c) {
	case Complex::binary_scalar: return "binary-scalar";
	case Complex::binary_adjoint: return "binary-adjoint";
	case Complex::ternary_scalar: return "ternary-scalar";
	case Complex::ternary_adjoint: return "ternary-adjoint";
	}
	return "?";
}

Complex parse_complex(const std::string &s)
{
	for (auto c : {Complex::binary_scalar, Complex::binary_adjoint, Complex::ternary_scalar, Complex::ternary_adjoint})
		if (s == to_string(c))
			return c;
	throw InputError("unknown complex '" + s + "'");
}

bool is_adjoint(Complex c) { return c == Complex::binary_adjoint || c == Complex::ternary_adjoint; }
bool is_ternary(Complex c) { return c == Complex::ternary_scalar || c == Complex::ternary_adjoint; }

// ---------------------------------------------------------------------------

CochainSpace::CochainSpace(Complex complex, std::size_t degree, const GradedSpace &space, Parity parity)
    : complex_(complex), degree_(degree), parity_(parity), parities_(space.parities()), pairs_(2, space.parities())
{
	const std::size_t n = space.dim();
	if (degree == 0 || (is_ternary(complex) && degree > 3) || degree > 4)
		throw InputError("unsupported cochain degree " + std::to_string(degree));
	std::vector<Tuple> args;
	if (!is_ternary(complex)) {
		args = SkewBasis(degree, parities_).tuples();
	} else {
		// (m-1) pair indices followed by z.
		args.push_back({});
		for (std::size_t s = 0; s + 1 < degree; ++s) {
			std::vector<Tuple> next;
			for (const auto &a : args)
				for (std::size_t pi = 0; pi < pairs_.size(); ++pi) {
					auto b = a;
					b.push_back(pi);
					next.push_back(std::move(b));
				}
			args = std::move(next);
		}
		std::vector<Tuple> with_z;
		for (const auto &a : args)
			for (std::size_t z = 0; z < n; ++z) {
				auto b = a;
				b.push_back(z);
				with_z.push_back(std::move(b));
			}
		args = std::move(with_z);
	}
	for (const auto &a : args) {
		const Parity ap = argument_parity(a);
		if (is_adjoint(complex)) {
			for (std::size_t k = 0; k < n; ++k)
				if (parities_[k] == (ap ^ parity_))
					coords_.push_back({a, k});
		} else if (ap == parity_) {
			coords_.push_back({a, 0});
		}
	}
	for (std::size_t i = 0; i < coords_.size(); ++i)
		index_.emplace(coords_[i], i);
}

Parity CochainSpace::argument_parity(const Tuple &args) const
{
	Parity p = 0;
	if (!is_ternary(complex_)) {
		for (auto i : args)
			p ^= parities_.at(i);
		return p;
	}
	for (std::size_t s = 0; s + 1 < args.size(); ++s) {
		const auto &pr = pairs_[args[s]];
		p ^= parities_[pr[0]] ^ parities_[pr[1]];
	}
	return p ^ parities_.at(args.back());
}

std::optional<std::size_t> CochainSpace::index_of(const CochainCoordinate &c) const
{
	auto it = index_.find(c);
	if (it == index_.end())
		return std::nullopt;
	return it->second;
}

Vector CochainSpace::binary_value(const Vector &f, const Tuple &args) const
{
	const std::size_t n = parities_.size();
	Vector out(value_dim(complex_, n));
	const auto c = canonicalize(args, parities_);
	if (c.zero)
		return out;
	for (std::size_t k = 0; k < out.size(); ++k)
		if (auto i = index_of({c.tuple, k}))
			out[k] = c.sign * f.at(*i);
	return out;
}

// ---------------------------------------------------------------------------
// Binary complexes

Matrix ds_matrix(const HomLieSuper &g, std::size_t p, Parity parity)
{
	if (p < 1 || p > 3)
		throw InputError("d_s is supported for degrees 1-3");
	const CochainSpace src(Complex::binary_scalar, p, g.space(), parity);
	const CochainSpace dst(Complex::binary_scalar, p + 1, g.space(), parity);
	const auto &par = g.parities();
	Matrix m(dst.size(), src.size());
	std::vector<Vector> alpha_cols;
	for (std::size_t i = 0; i < g.dim(); ++i)
		alpha_cols.push_back(g.alpha().column(i));
	for (std::size_t row = 0; row < dst.size(); ++row) {
		const Tuple &x = dst.coordinates()[row].args;
		for (std::size_t i = 0; i < x.size(); ++i)
			for (std::size_t j = i + 1; j < x.size(); ++j) {
				Parity before_i = 0, before_j = 0;
				for (std::size_t a = 0; a < i; ++a)
					before_i ^= par[x[a]];
				for (std::size_t a = 0; a < j; ++a)
					before_j ^= par[x[a]];
				int s = ((i + j) % 2) ? -1 : 1;
				s *= sign_pow(before_i, par[x[i]]) * sign_pow(before_j, par[x[j]]) * sign_pow(par[x[i]], par[x[j]]);
				const Vector &b = g.bracket()(x[i], x[j]);
				if (is_zero(b))
					continue;
				std::vector<const Vector *> args{&b};
				for (std::size_t a = 0; a < x.size(); ++a)
					if (a != i && a != j)
						args.push_back(&alpha_cols[x[a]]);
				expand(args, [&](const Tuple &t, const Scalar &coeff) {
					const auto c = canonicalize(t, par);
					if (c.zero)
						return;
					if (auto col = src.index_of({c.tuple, 0}))
						m(row, *col) += s * c.sign * coeff;
				});
			}
	}
	return m;
}

Matrix binary_adjoint_condition_matrix(const HomLieSuper &g)
{
	const CochainSpace src(Complex::binary_adjoint, 2, g.space(), 0);
	const std::size_t n = g.dim();
	const auto &par = g.parities();
	Matrix m(n * n * n * n, src.size());
	std::vector<Vector> alpha_cols;
	for (std::size_t i = 0; i < n; ++i)
		alpha_cols.push_back(g.alpha().column(i));
	// φ(αa, [b,c]) with the given sign, accumulated into rows (x,y,z,·).
	auto add_term = [&](std::size_t row0, int s, std::size_t a, std::size_t b, std::size_t c) {
		const Vector &br = g.bracket()(b, c);
		expand({&alpha_cols[a], &br}, [&](const Tuple &t, const Scalar &coeff) {
			const auto cn = canonicalize(t, par);
			if (cn.zero)
				return;
			for (std::size_t k = 0; k < n; ++k)
				if (auto col = src.index_of({cn.tuple, k}))
					m(row0 + k, *col) += s * cn.sign * coeff;
		});
	};
	for (std::size_t x = 0; x < n; ++x)
		for (std::size_t y = 0; y < n; ++y)
			for (std::size_t z = 0; z < n; ++z) {
				const std::size_t row0 = ((x * n + y) * n + z) * n;
				add_term(row0, sign_pow(par[x], par[y] ^ par[z]), y, z, x);
				add_term(row0, sign_pow(par[z], par[x] ^ par[y]), z, x, y);
				add_term(row0, 1, x, y, z);
			}
	return m;
}

Subspace binary_adjoint_cocycle_space(const HomLieSuper &g) { return kernel(binary_adjoint_condition_matrix(g)); }

Vector bracket_cochain(const HomLieSuper &g)
{
	const CochainSpace s(Complex::binary_adjoint, 2, g.space(), 0);
	Vector f(s.size());
	for (std::size_t i = 0; i < s.size(); ++i) {
		const auto &c = s.coordinates()[i];
		f[i] = g.bracket()(c.args[0], c.args[1])[c.out];
	}
	return f;
}

// ---------------------------------------------------------------------------
// Ternary complexes

Vector wedge(const Vector &x, const Vector &y, const SkewBasis &pairs)
{
	Vector out(pairs.size());
	if (x.empty())
		return out;
	// Parities are recovered from the pair basis: an index pairs with itself only if odd.
	const std::size_t n = x.size();
	Parities par(n, 0);
	for (const auto &t : pairs.tuples())
		if (t[0] == t[1])
			par[t[0]] = 1;
	for (std::size_t a = 0; a < n; ++a) {
		if (sgn(x[a]) == 0)
			continue;
		for (std::size_t b = 0; b < n; ++b) {
			if (sgn(y[b]) == 0)
				continue;
			const auto c = canonicalize({a, b}, par);
			if (c.zero)
				continue;
			out[*pairs.index_of(c.tuple)] += c.sign * x[a] * y[b];
		}
	}
	return out;
}

Vector fundamental_action(const TernaryHomLieSuper &t, std::size_t pair, const Vector &z)
{
	const SkewBasis pairs(2, t.parities());
	const auto &p = pairs[pair];
	return t.bracket().eval(unit_vector(t.dim(), p[0]), unit_vector(t.dim(), p[1]), z);
}

namespace {

/// Precomputed fundamental-object data of a ternary algebra.
struct Context {
	const TernaryHomLieSuper &t;
	std::size_t n;
	SkewBasis pairs;
	std::size_t np;
	Parities par;
	Parities pair_par;
	std::vector<Vector> e, a;  // basis and α-images
	std::vector<Matrix> act;   // w ↦ X·w
	std::vector<Matrix> aact;  // w ↦ α(X)·w
	std::vector<Vector> apair; // αx₁ ∧ αx₂

	explicit Context(const TernaryHomLieSuper &tt)
	    : t(tt), n(tt.dim()), pairs(2, tt.parities()), np(pairs.size()), par(tt.parities())
	{
		for (std::size_t i = 0; i < n; ++i) {
			e.push_back(unit_vector(n, i));
			a.push_back(t.alpha1().column(i));
		}
		for (std::size_t P = 0; P < np; ++P) {
			const auto &x = pairs[P];
			pair_par.push_back(par[x[0]] ^ par[x[1]]);
			std::vector<Vector> c1, c2;
			for (std::size_t w = 0; w < n; ++w) {
				c1.push_back(t.bracket()(x[0], x[1], w));
				c2.push_back(t.bracket().eval(a[x[0]], a[x[1]], e[w]));
			}
			act.push_back(Matrix::from_columns(n, c1));
			aact.push_back(Matrix::from_columns(n, c2));
			apair.push_back(wedge(a[x[0]], a[x[1]], pairs));
		}
	}

	Vector bracket(std::size_t P, std::size_t Q) const
	{
		const auto &y = pairs[Q];
		Vector out = wedge(act[P].column(y[0]), a[y[1]], pairs);
		add_scaled(out, sign_pow(pair_par[P], par[y[0]]), wedge(a[y[0]], act[P].column(y[1]), pairs));
		return out;
	}
};

/// Dense table of a ternary cochain: index (pairs..., z) → value vector.
struct Table {
	std::size_t dout;
	std::vector<Vector> v;
};

Table to_table(const CochainSpace &s, const Context &cx, const Vector &f)
{
	if (f.size() != s.size())
		throw InputError("cochain has " + std::to_string(f.size()) + " coordinates, expected " +
		                 std::to_string(s.size()));
	std::size_t cells = cx.n;
	for (std::size_t i = 1; i < s.degree(); ++i)
		cells *= cx.np;
	Table tb{value_dim(s.complex(), cx.n), {}};
	tb.v.assign(cells, Vector(tb.dout));
	for (std::size_t i = 0; i < s.size(); ++i) {
		const auto &c = s.coordinates()[i];
		std::size_t flat = 0;
		for (std::size_t k = 0; k + 1 < c.args.size(); ++k)
			flat = flat * cx.np + c.args[k];
		flat = flat * cx.n + c.args.back();
		tb.v[flat][c.out] = f[i];
	}
	return tb;
}

Vector from_table(const CochainSpace &s, const Context &cx, const Table &tb)
{
	Vector f(s.size());
	for (std::size_t i = 0; i < s.size(); ++i) {
		const auto &c = s.coordinates()[i];
		std::size_t flat = 0;
		for (std::size_t k = 0; k + 1 < c.args.size(); ++k)
			flat = flat * cx.np + c.args[k];
		flat = flat * cx.n + c.args.back();
		f[i] = tb.v[flat][c.out];
	}
	return f;
}

/// f(v) for a degree-1 table.
Vector eval1(const Table &f, const Vector &v)
{
	Vector out(f.dout);
	for (std::size_t j = 0; j < v.size(); ++j)
		if (sgn(v[j]) != 0)
			add_scaled(out, v[j], f.v[j]);
	return out;
}

/// f(W, v) for a degree-2 table, W over the pair basis.
Vector eval2(const Table &f, const Vector &w, const Vector &v)
{
	const std::size_t n = v.size();
	Vector out(f.dout);
	for (std::size_t r = 0; r < w.size(); ++r) {
		if (sgn(w[r]) == 0)
			continue;
		for (std::size_t j = 0; j < n; ++j)
			if (sgn(v[j]) != 0)
				add_scaled(out, w[r] * v[j], f.v[r * n + j]);
	}
	return out;
}

Table apply_delta1(const Context &cx, Complex complex, Parity fp, const Table &f)
{
	const std::size_t n = cx.n;
	Table out{f.dout, std::vector<Vector>(cx.np * n, Vector(f.dout))};
	const auto &b = cx.t.bracket();
	for (std::size_t P = 0; P < cx.np; ++P) {
		const auto &x = cx.pairs[P];
		for (std::size_t z = 0; z < n; ++z) {
			Vector val = Scalar(-1) * eval1(f, cx.act[P].column(z));
			if (is_adjoint(complex)) {
				add_scaled(val, sign_pow(cx.pair_par[P], fp), cx.act[P].apply(f.v[z]));
				add_scaled(val, 1, b.eval(f.v[x[0]], cx.e[x[1]], cx.e[z]));
				add_scaled(val, sign_pow(fp, cx.par[x[0]]), b.eval(cx.e[x[0]], f.v[x[1]], cx.e[z]));
			}
			out.v[P * n + z] = std::move(val);
		}
	}
	return out;
}

Table apply_delta2(const Context &cx, Complex complex, Parity fp, const Table &f)
{
	const std::size_t n = cx.n, np = cx.np;
	Table out{f.dout, std::vector<Vector>(np * np * n, Vector(f.dout))};
	const auto &b = cx.t.bracket();
	std::vector<Vector> fb(np * np);
	for (std::size_t P = 0; P < np; ++P)
		for (std::size_t Q = 0; Q < np; ++Q)
			fb[P * np + Q] = cx.bracket(P, Q);
	for (std::size_t P = 0; P < np; ++P) {
		const Parity px = cx.pair_par[P];
		for (std::size_t Q = 0; Q < np; ++Q) {
			const Parity py = cx.pair_par[Q];
			const auto &y = cx.pairs[Q];
			for (std::size_t z = 0; z < n; ++z) {
				Vector val = Scalar(-1) * eval2(f, fb[P * np + Q], cx.a[z]);
				add_scaled(val, -sign_pow(px, py), eval2(f, cx.apair[Q], cx.act[P].column(z)));
				add_scaled(val, 1, eval2(f, cx.apair[P], cx.act[Q].column(z)));
				if (is_adjoint(complex)) {
					add_scaled(val, -1, b.eval(f.v[P * n + y[0]], cx.a[y[1]], cx.a[z]));
					add_scaled(val, -sign_pow(fp ^ px, cx.par[y[0]]), b.eval(cx.a[y[0]], f.v[P * n + y[1]], cx.a[z]));
					add_scaled(val, -sign_pow(py, px ^ fp), cx.aact[Q].apply(f.v[P * n + z]));
					add_scaled(val, sign_pow(px, fp), cx.aact[P].apply(f.v[Q * n + z]));
				}
				out.v[(P * np + Q) * n + z] = std::move(val);
			}
		}
	}
	return out;
}

void require_ternary(Complex c)
{
	if (!is_ternary(c))
		throw InputError("expected a ternary complex");
}

} // namespace

Vector fundamental_bracket(const TernaryHomLieSuper &t, std::size_t x_pair, std::size_t y_pair)
{
	const Context cx(t);
	if (x_pair >= cx.np || y_pair >= cx.np)
		throw InputError("pair index out of range");
	return cx.bracket(x_pair, y_pair);
}

Vector delta1_ternary(const TernaryHomLieSuper &t, Complex complex, const Vector &f, Parity parity)
{
	require_ternary(complex);
	const Context cx(t);
	const CochainSpace src(complex, 1, t.space(), parity), dst(complex, 2, t.space(), parity);
	return from_table(dst, cx, apply_delta1(cx, complex, parity, to_table(src, cx, f)));
}

Vector delta2_ternary(const TernaryHomLieSuper &t, Complex complex, const Vector &f, Parity parity)
{
	require_ternary(complex);
	const Context cx(t);
	const CochainSpace src(complex, 2, t.space(), parity), dst(complex, 3, t.space(), parity);
	return from_table(dst, cx, apply_delta2(cx, complex, parity, to_table(src, cx, f)));
}

namespace {

template <class Apply>
Matrix assemble(const Context &cx, const CochainSpace &src, const CochainSpace &dst, Apply apply)
{
	Matrix m(dst.size(), src.size());
	for (std::size_t c = 0; c < src.size(); ++c) {
		const Vector col = from_table(dst, cx, apply(to_table(src, cx, unit_vector(src.size(), c))));
		for (std::size_t r = 0; r < dst.size(); ++r)
			if (sgn(col[r]) != 0)
				m(r, c) = col[r];
	}
	return m;
}

} // namespace

Matrix delta1_matrix(const TernaryHomLieSuper &t, Complex complex, Parity parity)
{
	require_ternary(complex);
	const Context cx(t);
	const CochainSpace src(complex, 1, t.space(), parity), dst(complex, 2, t.space(), parity);
	return assemble(cx, src, dst, [&](const Table &f) { return apply_delta1(cx, complex, parity, f); });
}

Matrix delta2_matrix(const TernaryHomLieSuper &t, Complex complex, Parity parity)
{
	require_ternary(complex);
	const Context cx(t);
	const CochainSpace src(complex, 2, t.space(), parity), dst(complex, 3, t.space(), parity);
	return assemble(cx, src, dst, [&](const Table &f) { return apply_delta2(cx, complex, parity, f); });
}

// ---------------------------------------------------------------------------
// Transfer from the binary algebra

Vector induce_cochain(const HomLieSuper &g, const TraceFunctional &tau, Complex binary_complex, const Vector &phi)
{
	if (is_ternary(binary_complex))
		throw InputError("induce_cochain expects a binary complex");
	const Complex target = is_adjoint(binary_complex) ? Complex::ternary_adjoint : Complex::ternary_scalar;
	const CochainSpace src(binary_complex, 2, g.space(), 0);
	const CochainSpace dst(target, 2, g.space(), 0);
	if (phi.size() != src.size())
		throw InputError("2-cochain has " + std::to_string(phi.size()) + " coordinates, expected " +
		                 std::to_string(src.size()));
	const auto &par = g.parities();
	Vector out(dst.size());
	for (std::size_t i = 0; i < dst.size(); ++i) {
		const auto &c = dst.coordinates()[i];
		const auto &x = dst.pairs()[c.args[0]];
		const std::size_t z = c.args[1];
		Scalar v = tau(x[0]) * src.binary_value(phi, {x[1], z})[c.out];
		v -= sign_pow(par[x[0]], par[x[1]]) * tau(x[1]) * src.binary_value(phi, {x[0], z})[c.out];
		v += sign_pow(par[z], par[x[0]] ^ par[x[1]]) * tau(z) * src.binary_value(phi, {x[0], x[1]})[c.out];
		out[i] = v;
	}
	return out;
}

Vector induce_cocycle(const HomLieSuper &g, const TraceFunctional &tau, Complex binary_complex, const Vector &phi)
{
	const Matrix cond =
	    is_adjoint(binary_complex) ? binary_adjoint_condition_matrix(g) : ds_matrix(g, 2);
	const Vector res = cond.apply(phi);
	for (std::size_t i = 0; i < res.size(); ++i)
		if (sgn(res[i]) != 0)
			throw PreconditionError("phi is not a binary 2-cocycle");
	return induce_cochain(g, tau, binary_complex, phi);
}

Report verify_1cocycle_transfer(const HomLieSuper &g, const TraceFunctional &, const TernaryHomLieSuper &t)
{
	Report r("verify_1cocycle_transfer");
	const CochainSpace c1(Complex::binary_scalar, 1, g.space(), 0);
	const auto z1 = kernel(ds_matrix(g, 1));
	r.metric("Z1_dim", static_cast<std::int64_t>(z1.dim()));
	const auto triples = SkewBasis(3, g.parities()).tuples();
	for (const auto &w : z1.basis_vectors()) {
		Vector functional(g.dim());
		for (std::size_t i = 0; i < c1.size(); ++i)
			functional[c1.coordinates()[i].args[0]] = w[i];
		for (const auto &c : triples) {
			const Scalar v = dot(functional, t.bracket()(c[0], c[1], c[2]));
			if (sgn(v) != 0)
				r.fail("1-cocycle", c, Vector{v});
		}
	}
	return r;
}

Report verify_class_transfer(const HomLieSuper &g, const TraceFunctional &tau, const TernaryHomLieSuper &t,
                             const Vector &phi1, const Vector &phi2)
{
	Report r("verify_class_transfer");
	const auto omega = solve(ds_matrix(g, 1), phi2 - phi1);
	if (!omega)
		throw PreconditionError("phi2 - phi1 is not a coboundary");
	const Vector psi1 = induce_cocycle(g, tau, Complex::binary_scalar, phi1);
	const Vector psi2 = induce_cocycle(g, tau, Complex::binary_scalar, phi2);
	const Vector rhs = delta1_ternary(t, Complex::ternary_scalar, *omega);
	const Vector diff = psi2 - psi1 - rhs;
	const CochainSpace c2(Complex::ternary_scalar, 2, g.space(), 0);
	for (std::size_t i = 0; i < diff.size(); ++i)
		if (sgn(diff[i]) != 0) {
			const auto &c = c2.coordinates()[i];
			const auto &x = c2.pairs()[c.args[0]];
			r.fail("class-transfer", {x[0], x[1], c.args[1]}, Vector{diff[i]});
		}
	r.metric("omega", *omega);
	return r;
}

CohomologyDims cohomology_dims(const HomLieSuper &g, std::size_t degree)
{
	if (degree < 1 || degree > 2)
		throw InputError("binary scalar cohomology is supported in degrees 1 and 2");
	const Matrix out = ds_matrix(g, degree);
	CohomologyDims d;
	d.z = out.cols() - rank(out);
	if (degree > 1) {
		const Matrix in = ds_matrix(g, degree - 1);
		d.b = rank(in);
		if (!(out * in).is_zero())
			throw PreconditionError("coboundaries are not cocycles");
	}
	d.h = d.z - d.b;
	return d;
}

CohomologyDims cohomology_dims(const TernaryHomLieSuper &t, Complex complex, std::size_t degree)
{
	require_ternary(complex);
	if (degree < 1 || degree > 2)
		throw InputError("ternary cohomology is supported in degrees 1 and 2");
	const Matrix out = degree == 1 ? delta1_matrix(t, complex) : delta2_matrix(t, complex);
	CohomologyDims d;
	d.z = out.cols() - rank(out);
	if (degree == 2) {
		const Matrix in = delta1_matrix(t, complex);
		d.b = rank(in);
		if (!(out * in).is_zero())
			throw PreconditionError("coboundaries are not cocycles");
	}
	d.h = d.z - d.b;
	return d;
}

} // namespace homlie
