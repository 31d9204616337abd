#ifndef COAF_IO_HPP
#define COAF_IO_HPP

#include "coaf/coconvex.hpp"
#include "coaf/family.hpp"
#include "coaf/forms.hpp"
#include "coaf/polynomial.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

namespace coaf {

/// Key order is preserved so that serialized reports are byte-stable.
using Json = nlohmann::ordered_json;

/// Rationals are written as "p/q" (or "p" for integers); reading also accepts
/// JSON integers.
Json to_json(const Rational& value);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const Polyhedron& p);
Json to_json(const Cone& c);
Json to_json(const CoconvexBody& body);
Json to_json(const Polynomial& p);
Json to_json(const Form& f);
Json to_json(const Signature& s);
Json to_json(const ConvexFamily& fam);
Json to_json(const CoconvexFamily& fam);

/// All readers throw InputError on malformed data and propagate GeometryError
/// from validation.
Rational rational_from_json(const Json& j);
Vector vector_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);
Polyhedron polyhedron_from_json(const Json& j);
Cone cone_from_json(const Json& j);
CoconvexBody coconvex_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& j);
Form form_from_json(const Json& j);
Signature signature_from_json(const Json& j);
ConvexFamily convex_family_from_json(const Json& j);
CoconvexFamily coconvex_family_from_json(const Json& j);

Json read_json_file(const std::filesystem::path& path);
/// Two-space indented JSON followed by a newline.
std::string dump(const Json& j);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace coaf

#endif  // COAF_IO_HPP
