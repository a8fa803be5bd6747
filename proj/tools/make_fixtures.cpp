// Regenerates fixtures/ and tests/golden/ from the built-in corpus.
//
//   make-fixtures <source-dir>
//
// Golden reports are produced by running each case through run_command with the
// working directory set to <source-dir>.

#include <filesystem>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "homlie/cli.hpp"
#include "homlie/document.hpp"
#include "homlie/fixtures.hpp"

using namespace homlie;
namespace fs = std::filesystem;

namespace {

struct Case {
	std::string name;
	std::vector<std::string> args;
};

AlgebraDocument induced_document(const std::string &name, const Representation &r)
{
	auto d = make_document(name, r);
	set_ternary(d, induce_ternary(r.algebra(), trace_functional(r)));
	return d;
}

void write(const fs::path &p, const std::string &text)
{
	write_text_file(p.string(), text);
	std::cout << "wrote " << p.string() << "\n";
}

std::string cochain(Complex c, const GradedSpace &s, const std::map<Tuple, Vector> &values)
{
	CochainDocument d{c, 2, {}};
	const CochainSpace cs(c, 2, s);
	d.values = zero_vector(cs.size());
	for (const auto &[args, v] : values)
		for (std::size_t k = 0; k < v.size(); ++k)
			if (v[k] != 0)
				d.values[*cs.index_of({args, is_adjoint(c) ? k : 0})] = v[k];
	return serialize(d, s);
}

} // namespace

int main(int argc, char **argv)
{
	if (argc != 2) {
		std::cerr << "usage: make-fixtures <source-dir>\n";
		return 2;
	}
	const fs::path root = fs::absolute(argv[1]).lexically_normal();
	const fs::path fx = root / "fixtures";
	const fs::path golden = root / "tests" / "golden";
	fs::create_directories(fx);
	fs::create_directories(golden);

	const auto gl11 = fixtures::gl11();
	const auto &space = gl11.algebra().space();
	write(fx / "a0.json", serialize(make_document("A0", fixtures::a0())));
	write(fx / "aff1.json", serialize(make_document("AFF1", fixtures::aff1())));
	write(fx / "gl11.json", serialize(make_document("GL11", gl11)));
	write(fx / "gl11t2.json", serialize(make_document("GL11T2", fixtures::gl11t(2))));
	write(fx / "gl11_induced.json", serialize(induced_document("GL11-induced", gl11)));

	write(fx / "negative_multiplicative.json",
	      serialize(make_document("GL11-swap-twist", fixtures::negative_multiplicative())));
	write(fx / "negative_beta.json", serialize(make_document("GL11-bad-beta", fixtures::negative_beta())));
	{
		auto d = make_document("GL11-induced-perturbed", gl11);
		set_ternary(d, fixtures::negative_hom_nambu());
		write(fx / "negative_hom_nambu.json", serialize(d));
	}

	// Malformed inputs, written by hand so that they can violate the schema.
	write(fx / "malformed_key.json", R"({
  "name": "bad-key",
  "basis": [{"id": "h1", "parity": 0}, {"id": "q", "parity": 1}],
  "bracket": {"q,h1": {"q": "-1"}},
  "alpha": {"h1": {"h1": "1"}, "q": {"q": "1"}}
}
)");
	write(fx / "malformed_rational.json", R"({
  "name": "bad-rational",
  "basis": [{"id": "h1", "parity": 0}, {"id": "q", "parity": 1}],
  "bracket": {"h1,q": {"q": "1/0"}},
  "alpha": {"h1": {"h1": "1"}, "q": {"q": "1"}}
}
)");
	write(fx / "malformed_parity.json", R"({
  "name": "bad-parity",
  "basis": [{"id": "h1", "parity": 0}, {"id": "q", "parity": 1}],
  "bracket": {"h1,q": {"h1": "1"}},
  "alpha": {"h1": {"h1": "1"}, "q": {"q": "1"}}
}
)");

	const std::size_t h1 = 0, h2 = 1, q = 2, p = 3;
	write(fx / "gl11_omega.json", cochain(Complex::binary_scalar, space, {{{q, p}, {1}}}));
	write(fx / "gl11_omega_noncocycle.json", cochain(Complex::binary_scalar, space, {{{h1, h2}, {1}}}));
	write(fx / "gl11_lambda.json", serialize_functional(Vector{1, -1, 0, 0, 0}, GradedSpace({"h1", "h2", "q", "p", "c"}, {0, 0, 1, 1, 0})));
	write(fx / "gl11_phi_bracket.json", cochain(Complex::binary_adjoint, space, [&] {
		      std::map<Tuple, Vector> m;
		      for (const auto &[t, v] : gl11.algebra().bracket().canonical_values())
			      m[t] = v;
		      return m;
	      }()));
	write(fx / "gl11_phi_qp_h1.json", cochain(Complex::binary_adjoint, space, {{{q, p}, {1, 0, 0, 0}}}));
	write(fx / "gl11_phi_scalar.json", cochain(Complex::binary_scalar, space, {{{q, p}, {2}}}));

	std::vector<Case> cases;
	for (const std::string f : {"a0", "aff1", "gl11", "gl11t2"}) {
		const std::string path = "fixtures/" + f + ".json";
		cases.push_back({f + "_check_binary", {"check", "binary", path}});
		cases.push_back({f + "_check_rep", {"check", "rep", path}});
		cases.push_back({f + "_check_ternary", {"check", "ternary", path}});
		cases.push_back({f + "_series_derived", {"series", "derived", path}});
		cases.push_back({f + "_series_central", {"series", "central", path}});
		cases.push_back({f + "_center", {"center", path}});
		cases.push_back({f + "_solvability", {"solvability", path}});
		cases.push_back({f + "_transfer", {"transfer-checks", path}});
		for (const std::string c : {"binary-scalar", "ternary-scalar", "ternary-adjoint"})
			for (const std::string d : {"1", "2"})
				cases.push_back({f + "_cohomology_" + c + "_" + d, {"cohomology", path, "--complex", c, "--degree", d}});
	}
	cases.push_back({"gl11_induced_check_ternary", {"check", "ternary", "fixtures/gl11_induced.json"}});
	cases.push_back({"gl11_series_derived_ideal", {"series", "derived", "fixtures/gl11.json", "--ideal", "h1,q"}});
	cases.push_back({"gl11_extend", {"extend", "fixtures/gl11.json", "--omega", "fixtures/gl11_omega.json"}});
	cases.push_back({"gl11_extend_lambda",
	                 {"extend", "fixtures/gl11.json", "--omega", "fixtures/gl11_omega.json", "--lambda",
	                  "fixtures/gl11_lambda.json"}});
	cases.push_back({"gl11_extend_noncocycle", {"extend", "fixtures/gl11.json", "--omega", "fixtures/gl11_omega_noncocycle.json"}});
	cases.push_back({"gl11_induce_cocycle_bracket", {"induce-cocycle", "fixtures/gl11.json", "--phi", "fixtures/gl11_phi_bracket.json"}});
	cases.push_back({"gl11_induce_cocycle_qp_h1", {"induce-cocycle", "fixtures/gl11.json", "--phi", "fixtures/gl11_phi_qp_h1.json"}});
	cases.push_back({"gl11_induce_cocycle_scalar", {"induce-cocycle", "fixtures/gl11.json", "--phi", "fixtures/gl11_phi_scalar.json"}});
	cases.push_back({"negative_multiplicative_check_binary", {"check", "binary", "fixtures/negative_multiplicative.json"}});
	cases.push_back({"negative_beta_check_rep", {"check", "rep", "fixtures/negative_beta.json"}});
	cases.push_back({"negative_hom_nambu_check_ternary", {"check", "ternary", "fixtures/negative_hom_nambu.json"}});
	cases.push_back({"malformed_key", {"check", "binary", "fixtures/malformed_key.json"}});
	cases.push_back({"malformed_rational", {"check", "binary", "fixtures/malformed_rational.json"}});
	cases.push_back({"malformed_parity", {"check", "binary", "fixtures/malformed_parity.json"}});

	fs::current_path(root);
	nlohmann::ordered_json manifest = nlohmann::ordered_json::array();
	for (const auto &c : cases) {
		std::ostringstream out, err;
		const int code = run_command(c.args, out, err);
		write(golden / (c.name + ".json"), out.str());
		manifest.push_back({{"name", c.name}, {"args", c.args}, {"exit", code}});
	}
	write(golden / "cases.json", manifest.dump(2) + "\n");
	return 0;
}
