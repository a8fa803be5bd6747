#include "homlie/document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace homlie {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

Scalar scalar_of(const json &j, const std::string &where)
{
	if (j.is_string()) {
		try {
			return parse_scalar(j.get<std::string>());
		} catch (const InputError &e) {
			throw InputError(where + ": " + e.what());
		}
	}
	if (j.is_number_integer())
		return parse_scalar(std::to_string(j.get<long long>()));
	throw InputError(where + ": expected a rational string");
}

void expect(bool ok, const std::string &msg)
{
	if (!ok)
		throw InputError(msg);
}

std::size_t id_index(const GradedSpace &s, const std::string &id, const std::string &where)
{
	auto i = s.index_of(id);
	if (!i)
		throw InputError(where + ": unknown basis id '" + id + "'");
	return *i;
}

Tuple parse_key(const GradedSpace &s, const std::string &key, std::size_t arity, const std::string &what)
{
	Tuple t;
	std::stringstream ss(key);
	std::string part;
	while (std::getline(ss, part, ','))
		t.push_back(id_index(s, part, what + " key '" + key + "'"));
	if (t.size() != arity || key.empty() || key.back() == ',')
		throw InputError(what + " key '" + key + "' should name " + std::to_string(arity) + " basis ids");
	if (!is_canonical(t, s.parities()))
		throw InputError("non-canonical " + what + " key '" + key + "'");
	return t;
}

std::string key_of(const GradedSpace &s, const Tuple &t)
{
	std::string k;
	for (std::size_t i = 0; i < t.size(); ++i)
		k += (i ? "," : "") + s.name(t[i]);
	return k;
}

Vector parse_coeffs(const GradedSpace &s, const json &j, const std::string &where)
{
	expect(j.is_object(), where + ": expected an object of coefficients");
	Vector v = zero_vector(s.dim());
	for (const auto &[id, c] : j.items())
		v[id_index(s, id, where)] = scalar_of(c, where + "." + id);
	return v;
}

ojson coeffs_json(const GradedSpace &s, const Vector &v)
{
	ojson o = ojson::object();
	for (std::size_t i = 0; i < v.size(); ++i)
		if (v[i] != 0)
			o[s.name(i)] = to_string(v[i]);
	return o;
}

std::map<Tuple, Vector> parse_bracket(const GradedSpace &s, const json &j, std::size_t arity, const std::string &what)
{
	expect(j.is_object(), what + ": expected an object");
	std::map<Tuple, Vector> out;
	for (const auto &[key, val] : j.items()) {
		Tuple t = parse_key(s, key, arity, what);
		Vector v = parse_coeffs(s, val, what + " '" + key + "'");
		if (!is_zero(v)) {
			auto p = s.parity_of(v);
			if (!p || *p != s.parity_of(t))
				throw InputError("parity-law violation at " + what + " key '" + key + "'");
		}
		out[t] = std::move(v);
	}
	return out;
}

ojson bracket_json(const GradedSpace &s, const std::map<Tuple, Vector> &b)
{
	ojson o = ojson::object();
	for (const auto &[t, v] : b)
		if (!is_zero(v))
			o[key_of(s, t)] = coeffs_json(s, v);
	return o;
}

Matrix parse_grid(const json &j, std::size_t n, const std::string &where)
{
	expect(j.is_array() && j.size() == n, where + ": expected " + std::to_string(n) + " rows");
	Matrix m(n, n);
	for (std::size_t r = 0; r < n; ++r) {
		expect(j[r].is_array() && j[r].size() == n,
		       where + ": row " + std::to_string(r) + " should have " + std::to_string(n) + " entries");
		for (std::size_t c = 0; c < n; ++c)
			m(r, c) = scalar_of(j[r][c], where);
	}
	return m;
}

ojson grid_json(const Matrix &m)
{
	ojson rows = ojson::array();
	for (std::size_t r = 0; r < m.rows(); ++r) {
		ojson row = ojson::array();
		for (std::size_t c = 0; c < m.cols(); ++c)
			row.push_back(to_string(m(r, c)));
		rows.push_back(std::move(row));
	}
	return rows;
}

Matrix parse_map(const GradedSpace &s, const json &j, const std::string &where)
{
	expect(j.is_object(), where + ": expected an object of images");
	Matrix m(s.dim(), s.dim());
	for (const auto &[id, img] : j.items()) {
		std::size_t c = id_index(s, id, where);
		Vector v = parse_coeffs(s, img, where + "." + id);
		for (std::size_t r = 0; r < s.dim(); ++r)
			m(r, c) = v[r];
	}
	return m;
}

ojson map_json(const GradedSpace &s, const Matrix &m)
{
	ojson o = ojson::object();
	for (std::size_t c = 0; c < s.dim(); ++c)
		o[s.name(c)] = coeffs_json(s, m.column(c));
	return o;
}

json parse_json(std::string_view text)
{
	try {
		return json::parse(text);
	} catch (const json::exception &e) {
		throw InputError(std::string("malformed JSON: ") + e.what());
	}
}

void check_keys(const json &j, std::initializer_list<const char *> allowed, const std::string &where)
{
	expect(j.is_object(), where + ": expected an object");
	for (const auto &[k, v] : j.items()) {
		bool ok = false;
		for (const char *a : allowed)
			ok = ok || k == a;
		if (!ok)
			throw InputError(where + ": unexpected key '" + k + "'");
	}
}

AlgebraDocument parse_document(const json &j)
{
	check_keys(j, {"name", "basis", "bracket", "alpha", "representation", "ternary", "alpha2"}, "document");
	AlgebraDocument d;
	expect(j.contains("name") && j["name"].is_string(), "document: missing name");
	d.name = j["name"].get<std::string>();

	expect(j.contains("basis") && j["basis"].is_array(), "document: missing basis");
	std::vector<std::string> names;
	Parities parities;
	for (const auto &b : j["basis"]) {
		check_keys(b, {"id", "parity"}, "basis entry");
		expect(b.contains("id") && b["id"].is_string(), "basis entry: missing id");
		expect(b.contains("parity") && b["parity"].is_number_integer(), "basis entry: missing parity");
		const auto p = b["parity"].get<long long>();
		expect(p == 0 || p == 1, "basis entry '" + b["id"].get<std::string>() + "': parity must be 0 or 1");
		names.push_back(b["id"].get<std::string>());
		parities.push_back(static_cast<Parity>(p));
	}
	d.space = GradedSpace(std::move(names), std::move(parities));
	const std::size_t n = d.space.dim();

	expect(j.contains("bracket"), "document: missing bracket");
	d.bracket = parse_bracket(d.space, j["bracket"], 2, "bracket");
	d.alpha = j.contains("alpha") ? parse_map(d.space, j["alpha"], "alpha") : Matrix::identity(n);

	if (j.contains("representation")) {
		const auto &r = j["representation"];
		check_keys(r, {"space", "matrices", "beta"}, "representation");
		expect(r.contains("space") && r["space"].is_array(), "representation: missing space");
		RepresentationDocument rd;
		for (const auto &p : r["space"]) {
			expect(p.is_number_integer() && (p.get<long long>() == 0 || p.get<long long>() == 1),
			       "representation: space parities must be 0 or 1");
			rd.space.push_back(static_cast<Parity>(p.get<long long>()));
		}
		const std::size_t m = rd.space.size();
		expect(r.contains("matrices"), "representation: missing matrices");
		expect(r["matrices"].is_object(), "representation.matrices: expected an object");
		rd.matrices.assign(n, Matrix(m, m));
		std::vector<bool> seen(n, false);
		for (const auto &[id, grid] : r["matrices"].items()) {
			std::size_t i = id_index(d.space, id, "representation.matrices");
			rd.matrices[i] = parse_grid(grid, m, "representation.matrices." + id);
			seen[i] = true;
		}
		for (std::size_t i = 0; i < n; ++i)
			expect(seen[i], "representation.matrices: missing '" + d.space.name(i) + "'");
		rd.beta = r.contains("beta") ? parse_grid(r["beta"], m, "representation.beta") : Matrix::identity(m);
		d.representation = std::move(rd);
	}
	if (j.contains("ternary"))
		d.ternary = parse_bracket(d.space, j["ternary"], 3, "ternary");
	if (j.contains("alpha2"))
		d.alpha2 = parse_grid(j["alpha2"], n, "alpha2");
	return d;
}

} // namespace

AlgebraDocument parse_algebra(std::string_view text)
{
	const json j = parse_json(text);
	try {
		return parse_document(j);
	} catch (const json::exception &e) {
		throw InputError(std::string("schema violation: ") + e.what());
	}
}

AlgebraDocument parse_algebra_file(const std::string &path) { return parse_algebra(read_text_file(path)); }

std::string serialize(const AlgebraDocument &d)
{
	ojson o;
	o["name"] = d.name;
	ojson basis = ojson::array();
	for (std::size_t i = 0; i < d.space.dim(); ++i)
		basis.push_back(ojson{{"id", d.space.name(i)}, {"parity", int(d.space.parity(i))}});
	o["basis"] = std::move(basis);
	o["bracket"] = bracket_json(d.space, d.bracket);
	o["alpha"] = map_json(d.space, d.alpha);
	if (d.representation) {
		ojson r;
		ojson sp = ojson::array();
		for (auto p : d.representation->space)
			sp.push_back(int(p));
		r["space"] = std::move(sp);
		ojson mats = ojson::object();
		for (std::size_t i = 0; i < d.space.dim(); ++i)
			mats[d.space.name(i)] = grid_json(d.representation->matrices[i]);
		r["matrices"] = std::move(mats);
		r["beta"] = grid_json(d.representation->beta);
		o["representation"] = std::move(r);
	}
	if (d.ternary)
		o["ternary"] = bracket_json(d.space, *d.ternary);
	if (d.alpha2)
		o["alpha2"] = grid_json(*d.alpha2);
	return o.dump(2) + "\n";
}

AlgebraDocument make_document(std::string name, const HomLieSuper &g)
{
	AlgebraDocument d;
	d.name = std::move(name);
	d.space = g.space();
	d.bracket = g.bracket().canonical_values();
	d.alpha = g.alpha();
	return d;
}

AlgebraDocument make_document(std::string name, const Representation &r)
{
	AlgebraDocument d = make_document(std::move(name), r.algebra());
	d.representation = RepresentationDocument{r.module().parities(), r.matrices(), r.beta()};
	return d;
}

void set_ternary(AlgebraDocument &d, const TernaryHomLieSuper &t)
{
	if (!(t.space() == d.space))
		throw InputError("ternary bracket lives on a different basis");
	d.ternary = t.bracket().canonical_values();
	d.alpha = t.alpha1();
	if (t.alpha2() == t.alpha1())
		d.alpha2.reset();
	else
		d.alpha2 = t.alpha2();
}

HomLieSuper load_binary(const AlgebraDocument &d)
{
	require_even_endomorphism(d.alpha, d.space, "alpha");
	return HomLieSuper::raw(SuperBracket2::from_canonical(d.space, d.bracket), d.alpha);
}

std::optional<Representation> load_representation(const AlgebraDocument &d)
{
	if (!d.representation)
		return std::nullopt;
	const auto &r = *d.representation;
	return Representation(load_binary(d), GradedSpace::anonymous(r.space), r.matrices, r.beta);
}

std::optional<TernaryHomLieSuper> load_ternary(const AlgebraDocument &d)
{
	if (!d.ternary)
		return std::nullopt;
	require_even_endomorphism(d.alpha, d.space, "alpha");
	const Matrix a2 = d.alpha2.value_or(d.alpha);
	require_even_endomorphism(a2, d.space, "alpha2");
	return TernaryHomLieSuper::raw(SuperBracket3::from_canonical(d.space, *d.ternary), d.alpha, a2);
}

CochainDocument parse_cochain(std::string_view text, const GradedSpace &space)
{
	const json j = parse_json(text);
	try {
		check_keys(j, {"complex", "degree", "values"}, "cochain");
		expect(j.contains("complex") && j["complex"].is_string(), "cochain: missing complex");
		expect(j.contains("degree") && j["degree"].is_number_integer(), "cochain: missing degree");
		expect(j.contains("values"), "cochain: missing values");
		CochainDocument c;
		c.complex = parse_complex(j["complex"].get<std::string>());
		expect(!is_ternary(c.complex), "cochain: only binary cochain files are supported");
		const auto deg = j["degree"].get<long long>();
		expect(deg >= 1 && deg <= 3, "cochain: degree must be 1, 2 or 3");
		c.degree = static_cast<std::size_t>(deg);
		const CochainSpace cs(c.complex, c.degree, space);
		c.values = zero_vector(cs.size());
		expect(j["values"].is_object(), "cochain.values: expected an object");
		for (const auto &[key, val] : j["values"].items()) {
			const Tuple t = parse_key(space, key, c.degree, "cochain");
			if (is_adjoint(c.complex)) {
				const Vector v = parse_coeffs(space, val, "cochain '" + key + "'");
				for (std::size_t k = 0; k < v.size(); ++k) {
					if (v[k] == 0)
						continue;
					auto idx = cs.index_of({t, k});
					if (!idx)
						throw InputError("parity-law violation at cochain key '" + key + "'");
					c.values[*idx] = v[k];
				}
			} else {
				const Scalar v = scalar_of(val, "cochain '" + key + "'");
				if (v == 0)
					continue;
				auto idx = cs.index_of({t, 0});
				if (!idx)
					throw InputError("parity-law violation at cochain key '" + key + "'");
				c.values[*idx] = v;
			}
		}
		return c;
	} catch (const json::exception &e) {
		throw InputError(std::string("schema violation: ") + e.what());
	}
}

CochainDocument parse_cochain_file(const std::string &path, const GradedSpace &space)
{
	return parse_cochain(read_text_file(path), space);
}

std::string serialize(const CochainDocument &c, const GradedSpace &space)
{
	const CochainSpace cs(c.complex, c.degree, space);
	if (c.values.size() != cs.size())
		throw InputError("cochain has the wrong number of coordinates");
	ojson values = ojson::object();
	for (std::size_t i = 0; i < cs.size(); ++i) {
		if (c.values[i] == 0)
			continue;
		const auto &co = cs.coordinates()[i];
		const std::string key = key_of(space, co.args);
		if (is_adjoint(c.complex))
			values[key][space.name(co.out)] = to_string(c.values[i]);
		else
			values[key] = to_string(c.values[i]);
	}
	ojson o;
	o["complex"] = to_string(c.complex);
	o["degree"] = c.degree;
	o["values"] = std::move(values);
	return o.dump(2) + "\n";
}

Vector parse_functional(std::string_view text, const GradedSpace &space)
{
	const json j = parse_json(text);
	try {
		check_keys(j, {"values"}, "functional");
		expect(j.contains("values"), "functional: missing values");
		return parse_coeffs(space, j["values"], "functional");
	} catch (const json::exception &e) {
		throw InputError(std::string("schema violation: ") + e.what());
	}
}

Vector parse_functional_file(const std::string &path, const GradedSpace &space)
{
	return parse_functional(read_text_file(path), space);
}

std::string serialize_functional(const Vector &f, const GradedSpace &space)
{
	ojson o;
	o["values"] = coeffs_json(space, f);
	return o.dump(2) + "\n";
}

std::string read_text_file(const std::string &path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw InputError("cannot read '" + path + "'");
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

void write_text_file(const std::string &path, const std::string &text)
{
	std::ofstream out(path, std::ios::binary);
	if (!out || !(out << text))
		throw InputError("cannot write '" + path + "'");
}

} // namespace homlie
