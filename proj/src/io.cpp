#include "coaf/io.hpp"

#include <fstream>
#include <sstream>

namespace coaf {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError(std::string("expected an object with field \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  return j;
}

int integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<Vector> vectors_from_json(const Json& j, const char* what) {
  std::vector<Vector> out;
  for (const auto& e : array(j, what)) out.push_back(vector_from_json(e));
  return out;
}

Json vectors_to_json(const std::vector<Vector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

void check_lengths(const std::vector<Vector>& vs, Eigen::Index dim, const char* what) {
  for (const auto& v : vs) {
    if (v.size() != dim) throw InputError(std::string(what) + " has a vector of the wrong length");
  }
}

}  // namespace

Json to_json(const Rational& value) { return to_string(value); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_string(v[i]));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(to_json(Vector(m.row(i).transpose())));
  return out;
}

Json to_json(const Polyhedron& p) {
  return Json{{"dim", p.dim()}, {"vertices", vectors_to_json(p.vertices())}, {"rays", vectors_to_json(p.rays())}};
}

Json to_json(const Cone& c) { return Json{{"rays", vectors_to_json(c.rays())}, {"xi", to_json(c.xi())}}; }

Json to_json(const CoconvexBody& body) {
  return Json{{"cone", to_json(body.cone())}, {"complement", to_json(body.complement())}};
}

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  // descending lexicographic exponent order, matching monomial_exponents
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    terms.push_back(Json{{"exp", it->first}, {"coeff", to_string(it->second)}});
  }
  return Json{{"nvars", p.nvars()}, {"degree", p.degree()}, {"terms", terms}};
}

Json to_json(const Form& f) { return Json{{"n", f.size()}, {"rows", to_json(f.matrix())}}; }

Json to_json(const Signature& s) { return Json{{"pos", s.pos}, {"neg", s.neg}, {"zero", s.zero}}; }

Json to_json(const ConvexFamily& fam) {
  Json gens = Json::array();
  for (const auto& g : fam.generators) gens.push_back(to_json(g));
  return Json{{"dim", fam.dim()}, {"generators", gens}, {"marked", vectors_to_json(fam.marked)}};
}

Json to_json(const CoconvexFamily& fam) {
  Json gens = Json::array();
  for (const auto& g : fam.generators) gens.push_back(to_json(g));
  return Json{{"cone", to_json(fam.cone)}, {"generators", gens}, {"marked", vectors_to_json(fam.marked)}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw InputError("rational must be a \"p/q\" string or an integer, got " + j.dump());
}

Vector vector_from_json(const Json& j) {
  array(j, "vector");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = rational_from_json(j[i]);
  return v;
}

Matrix matrix_from_json(const Json& j) {
  array(j, "matrix");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (rows == 0) return Matrix(0, 0);
  const auto cols = static_cast<Eigen::Index>(array(j[0], "matrix row").size());
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Vector r = vector_from_json(j[static_cast<std::size_t>(i)]);
    if (r.size() != cols) throw InputError("matrix rows have different lengths");
    m.row(i) = r.transpose();
  }
  return m;
}

Polyhedron polyhedron_from_json(const Json& j) {
  const int dim = integer(field(j, "dim"), "dim");
  if (dim < 1) throw InputError("dim must be positive");
  const auto vertices = vectors_from_json(field(j, "vertices"), "vertices");
  const auto rays = j.contains("rays") ? vectors_from_json(j["rays"], "rays") : std::vector<Vector>{};
  check_lengths(vertices, dim, "vertices");
  check_lengths(rays, dim, "rays");
  if (vertices.empty()) {
    if (!rays.empty()) throw InputError("rays without vertices");
    return Polyhedron::empty(dim);
  }
  return convex_hull(vertices, rays);
}

Cone cone_from_json(const Json& j) {
  const auto rays = vectors_from_json(field(j, "rays"), "rays");
  std::optional<Vector> xi;
  if (j.contains("xi") && !j["xi"].is_null()) xi = vector_from_json(j["xi"]);
  return make_cone(rays, xi);
}

CoconvexBody coconvex_from_json(const Json& j) {
  return make_coconvex(cone_from_json(field(j, "cone")), polyhedron_from_json(field(j, "complement")));
}

Polynomial polynomial_from_json(const Json& j) {
  Polynomial p(integer(field(j, "nvars"), "nvars"), integer(field(j, "degree"), "degree"));
  for (const auto& t : array(field(j, "terms"), "terms")) {
    std::vector<int> e;
    for (const auto& a : array(field(t, "exp"), "exp")) e.push_back(integer(a, "exponent"));
    p.add_term(e, rational_from_json(field(t, "coeff")));
  }
  return p;
}

Form form_from_json(const Json& j) {
  Matrix m = matrix_from_json(field(j, "rows"));
  if (j.contains("n") && integer(j["n"], "n") != m.rows()) throw InputError("form size does not match its rows");
  return Form(std::move(m));
}

Signature signature_from_json(const Json& j) {
  return {integer(field(j, "pos"), "pos"), integer(field(j, "neg"), "neg"), integer(field(j, "zero"), "zero")};
}

ConvexFamily convex_family_from_json(const Json& j) {
  std::vector<Polyhedron> gens;
  for (const auto& g : array(field(j, "generators"), "generators")) gens.push_back(polyhedron_from_json(g));
  auto marked = j.contains("marked") ? vectors_from_json(j["marked"], "marked") : std::vector<Vector>{};
  return make_convex_family(std::move(gens), std::move(marked));
}

CoconvexFamily coconvex_family_from_json(const Json& j) {
  const Cone cone = cone_from_json(field(j, "cone"));
  std::vector<CoconvexBody> gens;
  for (const auto& g : array(field(j, "generators"), "generators")) {
    if (g.contains("cone")) {
      gens.push_back(coconvex_from_json(g));
    } else {
      gens.push_back(make_coconvex(cone, polyhedron_from_json(field(g, "complement"))));
    }
  }
  auto marked = j.contains("marked") ? vectors_from_json(j["marked"], "marked") : std::vector<Vector>{};
  return make_coconvex_family(cone, std::move(gens), std::move(marked));
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace coaf
