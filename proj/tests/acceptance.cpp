// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <filesystem>
#include <functional>
#include <set>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "homlie/cli.hpp"
#include "homlie/document.hpp"
#include "homlie/extensions.hpp"
#include "homlie/structure.hpp"
#include "oracles.hpp"

using namespace homlie;
namespace fs = std::filesystem;

namespace {

const std::size_t h1 = 0, h2 = 1, q = 2, p = 3;

/// Collects failed sub-checks; a criterion passes when none were recorded.
struct Tally {
	std::vector<std::string> failed;
	std::vector<std::string> notes;
	void expect(bool ok, const std::string &what)
	{
		if (!ok)
			failed.push_back(what);
	}
};

TernaryHomLieSuper induced(const Representation &r) { return induce_ternary(r.algebra(), trace_functional(r)); }

const std::vector<std::pair<std::string, Representation>> &corpus()
{
	static const std::vector<std::pair<std::string, Representation>> c{
	    {"A0", fixtures::a0()}, {"AFF1", fixtures::aff1()}, {"GL11", fixtures::gl11()}, {"GL11T(2)", fixtures::gl11t(2)}};
	return c;
}

const std::vector<Representation> &conjugates()
{
	static const std::vector<Representation> c = [] {
		std::mt19937_64 rng(101);
		std::vector<Representation> out;
		const auto gl = fixtures::gl11();
		for (int i = 0; i < 100; ++i)
			out.push_back(conjugate(gl, fixtures::random_even_unimodular(gl.algebra().parities(), rng)));
		return out;
	}();
	return c;
}

Vector random_in(const Subspace &s, std::mt19937_64 &rng)
{
	Vector v = zero_vector(s.ambient_dim());
	for (const auto &b : s.basis_vectors())
		add_scaled(v, fixtures::random_rational(rng), b);
	return v;
}

bool witness_is(const Report &r, const std::string &check, const Tuple &w)
{
	const auto *f = r.first_failure(check);
	return f && f->witness && *f->witness == w;
}

// ---- 1 -------------------------------------------------------------------

void axioms(Tally &t)
{
	for (const auto &[name, r] : corpus()) {
		const auto &g = r.algebra();
		t.expect(verify_skew(g).passed(), name + " skew");
		t.expect(verify_hom_jacobi(g).passed(), name + " Hom-Jacobi");
		t.expect(verify_multiplicative(g).passed(), name + " multiplicative");
		t.expect(verify_representation(r).passed(), name + " representation");
	}
	t.expect(witness_is(verify_skew(fixtures::negative_skew()), "skew", {q, p}), "negative skew witness (q,p)");
	t.expect(witness_is(verify_multiplicative(fixtures::negative_multiplicative()), "multiplicative", {h1, q}),
	         "negative multiplicative witness (h1,q)");
	t.expect(witness_is(verify_representation(fixtures::negative_beta()), "twist-compatibility", {q}),
	         "negative beta witness (q)");
	t.expect(witness_is(verify_ternary_skew(fixtures::negative_ternary_skew()), "", {h1, q, p}),
	         "negative ternary skew witness (h1,q,p)");
	const auto hn = fixtures::negative_hom_nambu();
	t.expect(witness_is(verify_hom_nambu(hn), "hom-nambu", {h1, q, q, p, p}) &&
	             oracle::first_nambu_failure(hn) == Tuple{h1, q, q, p, p},
	         "negative Hom-Nambu witness (h1,q,q,p,p)");
}

// ---- 2 -------------------------------------------------------------------

Matrix random_homogeneous(std::mt19937_64 &rng, const Parities &pa, Parity parity)
{
	const std::size_t n = pa.size();
	Matrix m = oracle::random_matrix(rng, n, n, 4);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			if ((pa[i] ^ pa[j]) != parity)
				m(i, j) = 0;
	return m;
}

Scalar naive_str(const Matrix &m, const Parities &pa)
{
	Scalar s = 0;
	for (std::size_t i = 0; i < pa.size(); ++i)
		s += pa[i] ? -m(i, i) : m(i, i);
	return s;
}

void supertrace_identity(Tally &t)
{
	std::mt19937_64 rng(202);
	std::uniform_int_distribution<int> dim(1, 4), bit(0, 1);
	std::size_t nonzero_products = 0;
	for (int k = 0; k < 1000; ++k) {
		Parities pa(dim(rng));
		for (auto &x : pa)
			x = static_cast<Parity>(bit(rng));
		const Parity ps = bit(rng), pt = bit(rng);
		const Matrix s = random_homogeneous(rng, pa, ps), u = random_homogeneous(rng, pa, pt);
		const Matrix comm = s * u - Scalar((ps & pt) ? -1 : 1) * (u * s);
		if (naive_str(s * u, pa) != 0)
			++nonzero_products;
		if (supertrace(comm, pa) != 0 || naive_str(comm, pa) != 0) {
			t.expect(false, "pair " + std::to_string(k));
			return;
		}
	}
	t.notes.push_back("1000 pairs, " + std::to_string(nonzero_products) + " with nonzero str(st)");
}

// ---- 3 -------------------------------------------------------------------

void induction(Tally &t)
{
	auto check = [&](const Representation &r, const std::string &name) {
		const auto ti = induced(r);
		t.expect(verify_ternary_skew(ti).passed(), name + " ternary skew");
		t.expect(verify_hom_nambu(ti).passed(), name + " Hom-Nambu");
		t.expect(verify_ternary_multiplicative(ti).passed(), name + " ternary multiplicative");
	};
	check(fixtures::gl11(), "GL11");
	t.expect(!oracle::first_nambu_failure(induced(fixtures::gl11())), "GL11 Hom-Nambu oracle");
	for (std::size_t i = 0; i < conjugates().size(); ++i)
		check(conjugates()[i], "conjugate " + std::to_string(i));
	t.notes.push_back("GL11 + 100 conjugates");
}

// ---- 4 -------------------------------------------------------------------

void solvability(Tally &t)
{
	const auto gl = induced(fixtures::gl11());
	const auto d = derived_series(gl, Subspace::full(4), 3);
	t.expect(d.terms.size() >= 3 && d.terms[1] == Subspace::span(4, {Vector{1, 1, 0, 0}}) && d.terms[2].is_zero(),
	         "GL11 D1 = span{h1+h2}, D2 = 0");
	auto d2_zero = [](const TernaryHomLieSuper &ti) {
		// The series stops at the first zero term, which may already be D1.
		const auto s = derived_series(ti, Subspace::full(ti.dim()), 3);
		const bool zero = s.terms.size() >= 2 && (s.terms[1].is_zero() || (s.terms.size() >= 3 && s.terms[2].is_zero()));
		return zero && verify_solvability_theorem(ti).passed();
	};
	for (const auto &[name, r] : corpus())
		t.expect(d2_zero(induced(r)), name + " D2 = 0");
	for (std::size_t i = 0; i < conjugates().size(); ++i)
		t.expect(d2_zero(induced(conjugates()[i])), "conjugate " + std::to_string(i) + " D2 = 0");
}

// ---- 5 -------------------------------------------------------------------

void centers(Tally &t)
{
	t.expect(ternary_center(induced(fixtures::gl11())) == Subspace::span(4, {Vector{1, 1, 0, 0}}),
	         "GL11 center = span{h1+h2}");
	for (const auto &[name, r] : corpus()) {
		const auto &g = r.algebra();
		const auto tau = trace_functional(r);
		const auto ti = induced(r);
		t.expect(verify_center_transfer(g, tau, ti).passed(), name + " center transfer");
		t.expect(compare_central_series(g, tau, ti, g.dim() + 1).passed(), name + " central series inclusion");
		// Independent termwise inclusion from the series themselves.
		const auto tc = central_series(ti, Subspace::full(g.dim()), g.dim() + 1);
		const auto bc = binary_central_series(g, Subspace::full(g.dim()), g.dim() + 1);
		for (std::size_t k = 0; k < tc.terms.size(); ++k) {
			const auto &outer = k < bc.terms.size() ? bc.terms[k] : bc.terms.back();
			t.expect(outer.contains(tc.terms[k]), name + " C^" + std::to_string(k) + " inclusion");
		}
	}
}

// ---- 6 -------------------------------------------------------------------

void extension_equivalence(Tally &t)
{
	std::mt19937_64 rng(606);
	const auto g = fixtures::gl11().algebra();
	const auto d1 = ds_matrix(g, 1), d2 = ds_matrix(g, 2);
	const auto z2 = kernel(d2);
	std::size_t cocycles = 0;
	for (int k = 0; k < 50; ++k) {
		// Every other sample is drawn from the cocycle space so both verdicts occur.
		const Vector w = k % 2 ? random_in(z2, rng) : oracle::random_vector(rng, d2.cols());
		const bool cocycle = is_zero(d2.apply(w));
		cocycles += cocycle;
		const auto ext = build_central_extension({g, w, {}});
		t.expect(verify_hom_jacobi(ext).passed() == cocycle, "omega " + std::to_string(k) + " verdicts");
		t.expect(verify_extension({g, w, {}}).failures("equivalence") == 0, "omega " + std::to_string(k) + " report");
	}
	for (int k = 0; k < 10; ++k) {
		const Vector w1 = random_in(z2, rng);
		const Vector w2 = w1 + d1.apply(oracle::random_vector(rng, d1.cols()));
		const Vector l1{fixtures::random_rational(rng), fixtures::random_rational(rng), 0, 0, fixtures::random_rational(rng)};
		const auto iso = extension_isomorphism(g, w1, w2, l1);
		t.expect(iso.has_value(), "cohomologous pair " + std::to_string(k) + " isomorphism exists");
		if (iso)
			t.expect(verify_morphism(iso->map, build_central_extension({g, w1, l1}),
			                         build_central_extension({g, w2, iso->lambda2}))
			             .passed(),
			         "cohomologous pair " + std::to_string(k) + " morphism");
	}
	t.notes.push_back("50 cochains (" + std::to_string(cocycles) + " cocycles), 10 cohomologous pairs");
}

// ---- 7 -------------------------------------------------------------------

Scalar naive_omega(const HomLieSuper &g, const Vector &omega, std::size_t i, std::size_t j)
{
	return CochainSpace(Complex::binary_scalar, 2, g.space()).binary_value(omega, {i, j})[0];
}

void induced_extension(Tally &t)
{
	std::mt19937_64 rng(707);
	const auto gl = fixtures::gl11();
	const auto &g = gl.algebra();
	const auto &pa = g.parities();
	const auto tau = trace_functional(gl);
	std::vector<Scalar> nt;
	for (std::size_t i = 0; i < 4; ++i)
		nt.push_back(oracle::tau_of(gl, i));
	const auto z2 = kernel(ds_matrix(g, 2));
	for (int k = 0; k < 20; ++k) {
		const Vector w = random_in(z2, rng);
		const auto ie = induce_extension(g, tau, {g, w, {}});
		t.expect(ie.checks.passed(), "cocycle " + std::to_string(k) + " library checks");
		const auto ext = build_central_extension({g, w, {}});
		std::vector<Scalar> ntc = nt;
		ntc.push_back(0);
		for (const auto &tr : SkewBasis(3, ext.parities()).tuples()) {
			const Vector got = ie.algebra.bracket()(tr[0], tr[1], tr[2]);
			// Naive evaluation of the induced bracket on g ⊕ Kc agrees with the stored table.
			t.expect(got == oracle::induced(ext, ntc, tr[0], tr[1], tr[2]), "cocycle " + std::to_string(k) + " table");
			Vector want = zero_vector(5);
			if (tr[2] < 4) {
				want = oracle::induced(g, nt, tr[0], tr[1], tr[2]);
				want.push_back(nt[tr[0]] * naive_omega(g, w, tr[1], tr[2]) -
				               oracle::sgn(pa[tr[0]] && pa[tr[1]]) * nt[tr[1]] * naive_omega(g, w, tr[0], tr[2]) +
				               oracle::sgn(pa[tr[2]] && (pa[tr[0]] ^ pa[tr[1]])) * nt[tr[2]] *
				                   naive_omega(g, w, tr[0], tr[1]));
			}
			t.expect(got == want, "cocycle " + std::to_string(k) + " decomposition");
		}
	}
}

// ---- 8 -------------------------------------------------------------------

void cohomology(Tally &t)
{
	for (const auto &[name, r] : corpus()) {
		const auto &g = r.algebra();
		t.expect((ds_matrix(g, 2) * ds_matrix(g, 1)).is_zero(), name + " d2 d1 = 0");
		const auto ti = induced(r);
		for (Complex c : {Complex::ternary_scalar, Complex::ternary_adjoint})
			t.expect((delta2_matrix(ti, c) * delta1_matrix(ti, c)).is_zero(), name + " delta2 delta1 = 0 (" + to_string(c) + ")");
	}
	const auto gl = fixtures::gl11();
	const auto &g = gl.algebra();
	const auto tau = trace_functional(gl);
	const auto ti = induced(gl);
	t.expect(kernel(ds_matrix(g, 1)).dim() == 1, "dim Z1(GL11) = 1");

	std::mt19937_64 rng(808);
	const auto za = binary_adjoint_cocycle_space(g);
	std::size_t adjoint_fail = 0;
	for (int k = 0; k < 20; ++k) {
		const Vector phi = random_in(za, rng);
		if (!is_zero(delta2_ternary(ti, Complex::ternary_adjoint, induce_cocycle(g, tau, Complex::binary_adjoint, phi))))
			++adjoint_fail;
	}
	t.expect(adjoint_fail == 0, "adjoint induced cocycles: " + std::to_string(adjoint_fail) + "/20 have nonzero delta2");
	// Diagnostic only: cocycles with τ∘φ = 0 form the subspace on which induction works.
	{
		const CochainSpace b(Complex::binary_adjoint, 2, g.space());
		std::vector<Vector> basis = za.basis_vectors(), rows;
		for (const auto &v : basis) {
			Vector w;
			for (std::size_t i = 0; i < 4; ++i)
				for (std::size_t j = 0; j < 4; ++j)
					w.push_back(dot(tau.values, b.binary_value(v, {i, j})));
			rows.push_back(w);
		}
		const auto coeffs = kernel(Matrix::from_columns(rows.front().size(), rows));
		std::size_t restricted_fail = 0;
		for (int k = 0; k < 20; ++k) {
			const Vector c = random_in(coeffs, rng);
			Vector phi = zero_vector(b.size());
			for (std::size_t i = 0; i < basis.size(); ++i)
				add_scaled(phi, c[i], basis[i]);
			if (!is_zero(delta2_ternary(ti, Complex::ternary_adjoint, induce_cocycle(g, tau, Complex::binary_adjoint, phi))))
				++restricted_fail;
		}
		t.notes.push_back("with tau∘phi = 0 (dim " + std::to_string(coeffs.dim()) + "): " + std::to_string(restricted_fail) +
		                  "/20 nonzero");
	}
	// Scalar corollary, same sampling.
	const auto zs = kernel(ds_matrix(g, 2));
	for (int k = 0; k < 20; ++k)
		t.expect(is_zero(delta2_ternary(ti, Complex::ternary_scalar,
		                                induce_cocycle(g, tau, Complex::binary_scalar, random_in(zs, rng)))),
		         "scalar induced cocycle " + std::to_string(k));

	std::vector<Scalar> nt;
	for (std::size_t i = 0; i < 4; ++i)
		nt.push_back(oracle::tau_of(gl, i));
	const CochainSpace target(Complex::ternary_scalar, 2, g.space());
	const SkewBasis pairs(2, g.parities());
	const CochainSpace src(Complex::binary_scalar, 2, g.space());
	// ψ(X,z) from the induction formula with naive τ.
	auto naive_induce = [&](const Vector &phi) {
		const auto &pa = g.parities();
		Vector out = zero_vector(target.size());
		for (std::size_t i = 0; i < target.size(); ++i) {
			const auto &c = target.coordinates()[i];
			const std::size_t x1 = pairs[c.args[0]][0], x2 = pairs[c.args[0]][1], z = c.args[1];
			auto f = [&](std::size_t a, std::size_t b) { return src.binary_value(phi, {a, b})[0]; };
			out[i] = nt[x1] * f(x2, z) - oracle::sgn(pa[x1] && pa[x2]) * nt[x2] * f(x1, z) +
			         oracle::sgn(pa[z] && (pa[x1] ^ pa[x2])) * nt[z] * f(x1, x2);
		}
		return out;
	};
	const auto d1 = ds_matrix(g, 1);
	for (int k = 0; k < 20; ++k) {
		const Vector w = oracle::random_vector(rng, d1.cols());
		t.expect(delta1_ternary(ti, Complex::ternary_scalar, w) == naive_induce(d1.apply(w)),
		         "lemma instance " + std::to_string(k));
	}
	for (int k = 0; k < 20; ++k) {
		const Vector phi1 = random_in(zs, rng);
		const Vector w = oracle::random_vector(rng, d1.cols());
		const Vector phi2 = phi1 + d1.apply(w);
		t.expect(naive_induce(phi2) - naive_induce(phi1) == delta1_ternary(ti, Complex::ternary_scalar, w) &&
		             verify_class_transfer(g, tau, ti, phi1, phi2).passed(),
		         "class transfer instance " + std::to_string(k));
	}
	t.notes.push_back("adjoint cocycle space dim " + std::to_string(za.dim()));
}

// ---- 9 -------------------------------------------------------------------

void cli_contract(Tally &t)
{
	const std::string root = HOMLIE_SOURCE_DIR;
	const auto saved = fs::current_path();
	fs::current_path(root);
	const auto cases = nlohmann::json::parse(read_text_file("tests/golden/cases.json"));
	std::set<int> codes;
	for (const auto &c : cases) {
		const std::string name = c.at("name");
		std::ostringstream out, err;
		const int code = run_command(c.at("args").get<std::vector<std::string>>(), out, err);
		codes.insert(code);
		t.expect(code == c.at("exit").get<int>(), name + " exit code");
		t.expect(out.str() == read_text_file("tests/golden/" + name + ".json"), name + " golden");
	}
	t.expect(codes == std::set<int>{0, 1, 2}, "all three exit codes exercised");
	std::size_t files = 0;
	for (const auto &e : fs::directory_iterator("fixtures")) {
		const auto stem = e.path().stem().string();
		if (stem.rfind("malformed", 0) == 0)
			continue;
		const std::string text = read_text_file(e.path().string());
		const auto j = nlohmann::json::parse(text);
		std::string again;
		if (j.contains("basis"))
			again = serialize(parse_algebra(text));
		else if (j.contains("complex"))
			again = serialize(parse_cochain(text, parse_algebra_file("fixtures/gl11.json").space),
			                  parse_algebra_file("fixtures/gl11.json").space);
		else
			again = serialize_functional(parse_functional(text, parse_algebra_file("fixtures/gl11.json").space),
			                             parse_algebra_file("fixtures/gl11.json").space);
		t.expect(again == text, stem + " round trip");
		++files;
	}
	fs::current_path(saved);
	t.notes.push_back(std::to_string(cases.size()) + " golden cases, " + std::to_string(files) + " files round-tripped");
}

} // namespace

int main()
{
	const std::vector<std::pair<std::string, std::function<void(Tally &)>>> criteria{
	    {"axiom suite", axioms},
	    {"supertrace identity", supertrace_identity},
	    {"induction theorem", induction},
	    {"solvability", solvability},
	    {"center and transfer", centers},
	    {"extension equivalence", extension_equivalence},
	    {"induced extension", induced_extension},
	    {"cohomology suite", cohomology},
	    {"CLI contract", cli_contract},
	};
	int failed = 0;
	for (std::size_t i = 0; i < criteria.size(); ++i) {
		Tally t;
		try {
			criteria[i].second(t);
		} catch (const std::exception &e) {
			t.failed.push_back(std::string("exception: ") + e.what());
		}
		const bool ok = t.failed.empty();
		failed += !ok;
		std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
		for (const auto &n : t.notes)
			std::cout << " [" << n << "]";
		std::cout << "\n";
		for (std::size_t k = 0; k < t.failed.size() && k < 5; ++k)
			std::cout << "    " << t.failed[k] << "\n";
		if (t.failed.size() > 5)
			std::cout << "    ... " << t.failed.size() - 5 << " more\n";
	}
	return failed ? 1 : 0;
}
