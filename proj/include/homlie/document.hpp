#pragma once

// JSON algebra documents, cochain files and functional files.

#include <optional>
#include <string>
#include <string_view>

#include "homlie/cohomology.hpp"

namespace homlie {

struct RepresentationDocument {
	Parities space;
	std::vector<Matrix> matrices;
	Matrix beta;
};

/// In-memory form of an algebra file. Bracket maps are keyed by canonical tuples.
struct AlgebraDocument {
	std::string name;
	GradedSpace space;
	std::map<Tuple, Vector> bracket;
	Matrix alpha;
	std::optional<RepresentationDocument> representation;
	std::optional<std::map<Tuple, Vector>> ternary;
	std::optional<Matrix> alpha2;
};

/// All schema violations, including non-canonical keys and parity-law violations,
/// are InputError naming the offending key.
AlgebraDocument parse_algebra(std::string_view text);
AlgebraDocument parse_algebra_file(const std::string &path);
/// Two-space indented JSON with a trailing newline; keys in a fixed order.
std::string serialize(const AlgebraDocument &doc);

AlgebraDocument make_document(std::string name, const HomLieSuper &g);
AlgebraDocument make_document(std::string name, const Representation &r);
/// Stores the ternary bracket; alpha2 is written only when it differs from alpha.
void set_ternary(AlgebraDocument &doc, const TernaryHomLieSuper &t);

/// Unvalidated structures: the check commands decide what holds.
HomLieSuper load_binary(const AlgebraDocument &doc);
std::optional<Representation> load_representation(const AlgebraDocument &doc);
std::optional<TernaryHomLieSuper> load_ternary(const AlgebraDocument &doc);

/// Even binary cochain: {"complex": ..., "degree": d, "values": {"i,j": value}}. Scalar values are
/// rationals, adjoint values are {id: rational} maps.
struct CochainDocument {
	Complex complex = Complex::binary_scalar;
	std::size_t degree = 2;
	Vector values;
};

CochainDocument parse_cochain(std::string_view text, const GradedSpace &space);
CochainDocument parse_cochain_file(const std::string &path, const GradedSpace &space);
std::string serialize(const CochainDocument &doc, const GradedSpace &space);

/// {"values": {id: rational}}; missing ids are zero.
Vector parse_functional(std::string_view text, const GradedSpace &space);
Vector parse_functional_file(const std::string &path, const GradedSpace &space);
std::string serialize_functional(const Vector &f, const GradedSpace &space);

std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &text);

} // namespace homlie
