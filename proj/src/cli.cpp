#include "homlie/cli.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "homlie/document.hpp"
#include "homlie/extensions.hpp"
#include "homlie/fixtures.hpp"
#include "homlie/structure.hpp"

namespace homlie {

namespace {

using ojson = nlohmann::ordered_json;

ojson vector_json(const Vector &v)
{
	ojson a = ojson::array();
	for (const auto &x : v)
		a.push_back(to_string(x));
	return a;
}

struct MetricJson {
	ojson operator()(std::int64_t v) const { return v; }
	ojson operator()(const std::string &v) const { return v; }
	ojson operator()(const std::vector<std::int64_t> &v) const { return v; }
	ojson operator()(const Vector &v) const { return vector_json(v); }
	ojson operator()(const std::vector<Vector> &v) const
	{
		ojson a = ojson::array();
		for (const auto &x : v)
			a.push_back(vector_json(x));
		return a;
	}
};

struct Loaded {
	AlgebraDocument doc;
	HomLieSuper g;
	std::optional<Representation> rep;
};

Loaded load(const std::string &path)
{
	Loaded l{parse_algebra_file(path), {}, {}};
	l.g = load_binary(l.doc);
	l.rep = load_representation(l.doc);
	return l;
}

const Representation &need_rep(const Loaded &l)
{
	if (!l.rep)
		throw InputError("document '" + l.doc.name + "' has no representation");
	return *l.rep;
}

TraceFunctional tau_of(const Loaded &l) { return trace_functional(need_rep(l)); }

/// The ternary bracket of the document, or the one induced by its representation.
TernaryHomLieSuper ternary_of(const Loaded &l, Report &r)
{
	if (auto t = load_ternary(l.doc)) {
		r.metric("source", std::string("document"));
		return *t;
	}
	if (!l.rep)
		throw InputError("document '" + l.doc.name + "' has neither a ternary bracket nor a representation");
	r.metric("source", std::string("induced"));
	return induce_ternary(l.g, tau_of(l), l.doc.alpha, l.doc.alpha2.value_or(l.doc.alpha));
}

Subspace ideal_from(const GradedSpace &s, const std::string &ids)
{
	if (ids.empty())
		return Subspace::full(s.dim());
	std::vector<Vector> gens;
	std::stringstream ss(ids);
	std::string id;
	while (std::getline(ss, id, ',')) {
		auto i = s.index_of(id);
		if (!i)
			throw InputError("--ideal: unknown basis id '" + id + "'");
		gens.push_back(unit_vector(s.dim(), *i));
	}
	return Subspace::span(s.dim(), gens);
}

std::int64_t i64(std::size_t n) { return static_cast<std::int64_t>(n); }

Vector random_in(const Subspace &s, std::mt19937_64 &rng)
{
	Vector v = zero_vector(s.ambient_dim());
	for (const auto &b : s.basis_vectors())
		add_scaled(v, fixtures::random_rational(rng), b);
	return v;
}

std::vector<Vector> basis_of(const Subspace &s) { return s.basis_vectors(); }

Report check_binary(const Loaded &l)
{
	Report r;
	r.merge(verify_skew(l.g));
	r.merge(verify_hom_jacobi(l.g));
	r.merge(verify_multiplicative(l.g));
	r.metric("dim", i64(l.g.dim()));
	return r;
}

Report check_rep(const Loaded &l)
{
	const auto &rep = need_rep(l);
	Report r = verify_representation(rep);
	const auto tau = trace_functional(rep);
	r.metric("tau", tau.values);
	r.metric("tau_alpha_invariant", std::int64_t{check_trace_alpha_invariance(tau, l.g.alpha())});
	return r;
}

Report check_ternary(const Loaded &l)
{
	Report r;
	const auto t = ternary_of(l, r);
	r.merge(verify_ternary_skew(t));
	r.merge(verify_hom_nambu(t));
	r.merge(verify_ternary_multiplicative(t));
	return r;
}

Report induce_cmd(const Loaded &l, const std::string &out_path)
{
	Report r;
	const auto tau = tau_of(l);
	const auto t = induce_ternary(l.g, tau, l.doc.alpha, l.doc.alpha2.value_or(l.doc.alpha));
	r.metric("tau", tau.values);
	r.merge(verify_ternary_skew(t));
	r.merge(verify_hom_nambu(t));
	r.merge(verify_ternary_multiplicative(t));
	AlgebraDocument doc = l.doc;
	doc.name += "-induced";
	set_ternary(doc, t);
	write_text_file(out_path, serialize(doc));
	r.metric("written", out_path);
	return r;
}

Report series_cmd(const Loaded &l, const std::string &kind, const std::string &ids, std::size_t r_max)
{
	Report r;
	const auto t = ternary_of(l, r);
	const auto ideal = ideal_from(l.doc.space, ids);
	SeriesResult s;
	if (kind == "derived")
		s = derived_series(t, ideal, r_max);
	else if (kind == "central")
		s = central_series(t, ideal, r_max);
	else
		throw InputError("series kind must be 'derived' or 'central'");
	std::vector<std::int64_t> dims;
	for (const auto &term : s.terms)
		dims.push_back(i64(term.dim()));
	r.metric("dims", dims);
	r.metric("stabilized", std::int64_t{s.stabilized});
	if (s.class_index)
		r.metric("class_index", i64(*s.class_index));
	r.metric("input_is_ideal", std::int64_t{s.input_is_ideal});
	if (s.input_is_ideal)
		r.merge(ideality_of_series(t, ideal, r_max));
	else
		r.warn("input-ideal", "the generating subspace is not a ternary ideal; ideality of the terms not checked");
	return r;
}

Report center_cmd(const Loaded &l)
{
	Report r;
	const auto t = ternary_of(l, r);
	const auto zt = ternary_center(t);
	r.metric("ternary_center", basis_of(zt));
	if (l.rep) {
		r.metric("binary_center", basis_of(binary_center(l.g)));
		r.merge(verify_center_transfer(l.g, tau_of(l), t));
	}
	return r;
}

Report solvability_cmd(const Loaded &l)
{
	Report r;
	const auto t = ternary_of(l, r);
	r.merge(verify_solvability_theorem(t));
	return r;
}

Report extend_cmd(const Loaded &l, const std::string &omega_path, const std::string &lambda_path,
                  const std::string &out_path, std::vector<std::string> &names)
{
	const auto omega = parse_cochain_file(omega_path, l.doc.space);
	if (omega.complex != Complex::binary_scalar || omega.degree != 2)
		throw InputError("--omega must be a binary-scalar 2-cochain");
	auto ext_names = l.doc.space.names();
	ext_names.push_back("c");
	auto ext_parities = l.doc.space.parities();
	ext_parities.push_back(0);
	const GradedSpace ext_space(ext_names, ext_parities);
	CentralExtensionData d{l.g, omega.values, {}};
	if (!lambda_path.empty())
		d.lambda = parse_functional_file(lambda_path, ext_space);
	validate_extension_data(d);
	names = ext_names;

	Report r = verify_extension(d);
	const auto ext = build_central_extension(d);
	std::optional<Representation> ext_rep;
	if (l.rep) {
		const auto tau = tau_of(l);
		r.merge(induce_extension(l.g, tau, d).checks);
		auto mats = l.rep->matrices();
		const auto m = l.rep->module().dim();
		mats.push_back(Matrix(m, m));
		ext_rep = Representation(ext, l.rep->module(), mats, l.rep->beta());
	}
	if (!out_path.empty()) {
		auto doc = ext_rep ? make_document(l.doc.name + "-ext", *ext_rep) : make_document(l.doc.name + "-ext", ext);
		write_text_file(out_path, serialize(doc));
		r.metric("written", out_path);
	}
	return r;
}

Report cohomology_cmd(const Loaded &l, const std::string &complex_name, std::size_t degree)
{
	Report r;
	const Complex c = parse_complex(complex_name);
	CohomologyDims dims;
	if (c == Complex::binary_scalar) {
		dims = cohomology_dims(l.g, degree);
	} else if (is_ternary(c)) {
		const auto t = ternary_of(l, r);
		dims = cohomology_dims(t, c, degree);
	} else {
		throw InputError("cohomology supports binary-scalar, ternary-scalar and ternary-adjoint");
	}
	r.metric("Z", i64(dims.z));
	r.metric("B", i64(dims.b));
	r.metric("H", i64(dims.h));
	return r;
}

Report induce_cocycle_cmd(const Loaded &l, const std::string &phi_path)
{
	Report r;
	const auto phi = parse_cochain_file(phi_path, l.doc.space);
	if (is_ternary(phi.complex) || phi.degree != 2)
		throw InputError("--phi must be a binary 2-cochain");
	const auto tau = tau_of(l);
	const auto t = ternary_of(l, r);
	const Complex tc = is_adjoint(phi.complex) ? Complex::ternary_adjoint : Complex::ternary_scalar;
	Vector psi;
	try {
		psi = induce_cocycle(l.g, tau, phi.complex, phi.values);
	} catch (const PreconditionError &e) {
		r.fail("phi-cocycle", {}, std::nullopt, e.what());
		return r;
	}
	r.metric("psi", psi);
	const Vector d = delta2_ternary(t, tc, psi);
	const CochainSpace target(tc, 3, l.doc.space);
	const auto &pairs = target.pairs();
	for (std::size_t i = 0; i < d.size(); ++i) {
		if (d[i] == 0)
			continue;
		const auto &co = target.coordinates()[i];
		Tuple w = pairs[co.args[0]];
		w.insert(w.end(), pairs[co.args[1]].begin(), pairs[co.args[1]].end());
		w.push_back(co.args[2]);
		r.fail("delta2", w, Vector{d[i]},
		       is_adjoint(tc) ? "output " + l.doc.space.name(co.out) : std::string{});
	}
	return r;
}

Report transfer_cmd(const Loaded &l, std::size_t r_max, std::uint64_t seed)
{
	Report r;
	const auto tau = tau_of(l);
	const auto t = ternary_of(l, r);
	r.merge(verify_center_transfer(l.g, tau, t).prefixed("center", true));
	r.merge(compare_central_series(l.g, tau, t, r_max).prefixed("central-series", true));
	r.merge(verify_nilpotency_transfer(l.g, t, r_max).prefixed("nilpotency", true));
	const auto full = Subspace::full(l.g.dim());
	const std::pair<const char *, Subspace> ideals[] = {
	    {"ideal-derived", bracket_span(l.g, full, full)},
	    {"ideal-trace-kernel", trace_kernel(tau)},
	    {"ideal-center", binary_center(l.g)},
	};
	for (const auto &[name, j] : ideals) {
		if (is_ideal(l.g, j))
			r.merge(ideal_criterion(l.g, tau, j, t).prefixed(name, true));
		else
			r.info(name, "not a Hom-ideal of the binary algebra; skipped");
	}
	r.merge(verify_1cocycle_transfer(l.g, tau, t).prefixed("one-cocycle", true));

	std::mt19937_64 rng(seed);
	const auto z2 = kernel(ds_matrix(l.g, 2));
	const auto d1 = ds_matrix(l.g, 1);
	for (int k = 0; k < 3; ++k) {
		const Vector phi1 = random_in(z2, rng);
		Vector omega = zero_vector(d1.cols());
		for (auto &x : omega)
			x = fixtures::random_rational(rng);
		const Vector phi2 = phi1 + d1.apply(omega);
		r.merge(verify_class_transfer(l.g, tau, t, phi1, phi2).prefixed("class-" + std::to_string(k), true));
	}
	r.metric("seed", static_cast<std::int64_t>(seed));
	return r;
}

} // namespace

std::string report_to_json(const Report &r, const std::vector<std::string> &names, bool pretty)
{
	ojson o;
	o["command"] = r.command();
	o["verdict"] = to_string(r.verdict());
	ojson findings = ojson::array();
	for (const auto &f : r.findings()) {
		ojson j;
		j["check"] = f.check;
		j["status"] = to_string(f.status);
		if (f.witness && !f.witness->empty()) {
			ojson w = ojson::array();
			for (auto i : *f.witness)
				w.push_back(i < names.size() ? names[i] : std::to_string(i));
			j["witness"] = std::move(w);
		}
		if (f.residual)
			j["residual"] = vector_json(*f.residual);
		if (!f.note.empty())
			j["note"] = f.note;
		findings.push_back(std::move(j));
	}
	o["findings"] = std::move(findings);
	ojson metrics = ojson::object();
	for (const auto &[k, v] : r.metrics())
		metrics[k] = std::visit(MetricJson{}, v);
	o["metrics"] = std::move(metrics);
	ojson counts = ojson::object();
	for (const auto &[k, n] : r.violation_counts())
		counts[k] = n;
	o["violation_counts"] = std::move(counts);
	return pretty ? o.dump(2) : o.dump();
}

int run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Exact workbench for Hom-Lie superalgebras", "homlie"};
	app.require_subcommand(1);
	std::uint64_t seed = 1;
	std::size_t r_max = 0;
	bool pretty = false;
	app.add_option("--seed", seed, "seed for randomized property checks");
	app.add_option("--rmax", r_max, "maximal series length (default dim+1)");
	app.add_flag("--pretty", pretty, "indented output");

	std::string file, out_path, ideal, kind, omega_path, lambda_path, phi_path, complex_name;
	std::size_t degree = 0;

	auto *check = app.add_subcommand("check", "verify axioms");
	check->require_subcommand(1);
	auto *check_binary_cmd = check->add_subcommand("binary", "super-skew symmetry, Hom-Jacobi, multiplicativity");
	auto *check_rep_cmd = check->add_subcommand("rep", "representation axioms and the trace functional");
	auto *check_ternary_cmd = check->add_subcommand("ternary", "ternary skew symmetry, Hom-Nambu, multiplicativity");
	for (auto *c : {check_binary_cmd, check_rep_cmd, check_ternary_cmd})
		c->add_option("file", file)->required();

	auto *induce = app.add_subcommand("induce", "write the induced ternary document");
	induce->add_option("file", file)->required();
	induce->add_option("-o,--output", out_path)->required();

	auto *series = app.add_subcommand("series", "derived or central series of the ternary algebra");
	series->add_option("kind", kind)->required()->check(CLI::IsMember({"derived", "central"}));
	series->add_option("file", file)->required();
	series->add_option("--ideal", ideal, "comma-separated basis ids spanning the starting subspace");

	auto *center = app.add_subcommand("center", "ternary and binary centers");
	center->add_option("file", file)->required();

	auto *solv = app.add_subcommand("solvability", "D^2 of the induced algebra vanishes");
	solv->add_option("file", file)->required();

	auto *extend = app.add_subcommand("extend", "one-dimensional central extension by a scalar 2-cochain");
	extend->add_option("file", file)->required();
	extend->add_option("--omega", omega_path)->required();
	extend->add_option("--lambda", lambda_path);
	extend->add_option("-o,--output", out_path);

	auto *coh = app.add_subcommand("cohomology", "cocycle, coboundary and cohomology dimensions");
	coh->add_option("file", file)->required();
	coh->add_option("--complex", complex_name)
	    ->required()
	    ->check(CLI::IsMember({"binary-scalar", "ternary-scalar", "ternary-adjoint"}));
	coh->add_option("--degree", degree)->required();

	auto *icoc = app.add_subcommand("induce-cocycle", "induce a binary 2-cocycle and test the ternary cocycle condition");
	icoc->add_option("file", file)->required();
	icoc->add_option("--phi", phi_path)->required();

	auto *transfer = app.add_subcommand("transfer-checks", "every binary-to-ternary transfer statement");
	transfer->add_option("file", file)->required();

	// Global options may follow the subcommand.
	for (auto *sub : {check, check_binary_cmd, check_rep_cmd, check_ternary_cmd, induce, series, center, solv, extend, coh,
	                  icoc, transfer})
		sub->fallthrough();

	try {
		std::vector<std::string> rev(args.rbegin(), args.rend());
		app.parse(rev);
	} catch (const CLI::CallForHelp &) {
		out << app.help();
		return 0;
	} catch (const CLI::CallForAllHelp &) {
		out << app.help("", CLI::AppFormatMode::All);
		return 0;
	} catch (const CLI::ParseError &e) {
		err << "error: " << e.what() << "\n";
		return 2;
	}

	std::vector<std::string> names;
	std::string command;
	try {
		const Loaded l = load(file);
		names = l.doc.space.names();
		const std::size_t rm = r_max ? r_max : l.g.dim() + 1;
		Report r;
		if (check_binary_cmd->parsed()) {
			command = "check binary";
			r = check_binary(l);
		} else if (check_rep_cmd->parsed()) {
			command = "check rep";
			r = check_rep(l);
		} else if (check_ternary_cmd->parsed()) {
			command = "check ternary";
			r = check_ternary(l);
		} else if (induce->parsed()) {
			command = "induce";
			r = induce_cmd(l, out_path);
		} else if (series->parsed()) {
			command = "series " + kind;
			r = series_cmd(l, kind, ideal, rm);
		} else if (center->parsed()) {
			command = "center";
			r = center_cmd(l);
		} else if (solv->parsed()) {
			command = "solvability";
			r = solvability_cmd(l);
		} else if (extend->parsed()) {
			command = "extend";
			r = extend_cmd(l, omega_path, lambda_path, out_path, names);
		} else if (coh->parsed()) {
			command = "cohomology";
			r = cohomology_cmd(l, complex_name, degree);
		} else if (icoc->parsed()) {
			command = "induce-cocycle";
			r = induce_cocycle_cmd(l, phi_path);
		} else {
			command = "transfer-checks";
			r = transfer_cmd(l, rm, seed);
		}
		r.set_command(command);
		out << report_to_json(r, names, pretty) << "\n";
		return r.passed() ? 0 : 1;
	} catch (const InputError &e) {
		err << "input error: " << e.what() << "\n";
		return 2;
	} catch (const PreconditionError &e) {
		Report r(command);
		r.fail("precondition", e.witness(), std::nullopt, e.what());
		out << report_to_json(r, names, pretty) << "\n";
		return 1;
	}
}

} // namespace homlie
