#include "twcech/io.hpp"

#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

namespace twcech {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw SchemaError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer())
    throw SchemaError(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be a list");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(as_int(x, what));
  return out;
}

std::vector<std::vector<int>> int_lists(const Json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be a list");
  std::vector<std::vector<int>> out;
  for (const auto& x : j) out.push_back(int_list(x, what));
  return out;
}

Simplex simplex_from_json(const Nerve& nerve, const Json& j) {
  Simplex s = int_list(j, "simplex");
  if (!std::is_sorted(s.begin(), s.end()) ||
      std::adjacent_find(s.begin(), s.end()) != s.end())
    throw SchemaError("simplex " + to_string(s) + " is not strictly increasing");
  if (!nerve.contains(s)) throw NotInNerve("simplex " + to_string(s) + " is not in the nerve");
  return s;
}

}  // namespace

Json integer_to_json(const Integer& v) {
  if (v >= Integer(std::numeric_limits<long long>::min()) &&
      v <= Integer(std::numeric_limits<long long>::max()))
    return Json(v.convert_to<long long>());
  return Json(v.str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw SchemaError("expected an integer, got " + j.dump());
}

Json rational_to_json(const Rational& q) { return Json(to_string(q)); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw SchemaError("expected a rational, got " + j.dump());
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    throw SchemaError(e.what());
  }
}

Json circle_to_json(const Circle& c) { return Json(to_string(c)); }

Json nerve_to_json(const Nerve& nerve) {
  Json facets = Json::array();
  for (const auto& f : nerve.facets()) facets.push_back(f);
  return Json{{"facets", facets}};
}

Nerve nerve_from_json(const Json& j) {
  return Nerve::from_facets(int_lists(field(j, "facets"), "facet"));
}

Json twist_to_json(const TwistCocycle& twist) {
  Json support = Json::array();
  for (const auto& [s, v] : twist.F.entries()) {
    Json value = Json::array();
    for (const auto& x : v.values()) value.push_back(integer_to_json(x));
    support.push_back(Json{{"simplex", s}, {"value", value}});
  }
  return Json{{"n", twist.n}, {"support", support}};
}

TwistCocycle twist_from_json(const Nerve& nerve, const Json& j) {
  const int n = as_int(field(j, "n"), "n");
  if (n < 0) throw SchemaError("n must be nonnegative");
  Cochain<IntegerVector> F(2, IntegerVector::zero(n));
  const Json& support = field(j, "support");
  if (!support.is_array()) throw SchemaError("support must be a list");
  for (const auto& entry : support) {
    const Simplex s = simplex_from_json(nerve, field(entry, "simplex"));
    if (s.size() != 3) throw SchemaError("twist support " + to_string(s) + " is not a triangle");
    const Json& value = field(entry, "value");
    if (!value.is_array() || static_cast<int>(value.size()) != n)
      throw SchemaError("twist value on " + to_string(s) + " must have length " +
                        std::to_string(n));
    IntegerVector v(n);
    for (int i = 0; i < n; ++i) v[i] = integer_from_json(value[i]);
    F.add(s, v);
  }
  return validate_twist(nerve, n, F);
}

Json setup_to_json(const StandardSetup& setup) {
  Json s = Json::array();
  for (const auto& [ab, v] : setup.s) {
    if (ab.first > ab.second) continue;
    Json value = Json::array();
    for (const auto& q : v.values()) value.push_back(rational_to_json(q));
    s.push_back(Json{{"pair", {ab.first, ab.second}}, {"value", value}});
  }
  Json base = Json::object();
  for (const auto& [c, v] : setup.base) base["component" + std::to_string(c)] = v;
  return Json{{"n", setup.n}, {"s", s}, {"base", base}};
}

StandardSetup setup_from_json(const Nerve& nerve, const Json& j) {
  const int n = as_int(field(j, "n"), "n");
  std::map<std::pair<int, int>, RationalVector> s;
  const Json& list = field(j, "s");
  if (!list.is_array()) throw SchemaError("s must be a list");
  for (const auto& entry : list) {
    const auto pair = int_list(field(entry, "pair"), "pair");
    if (pair.size() != 2) throw SchemaError("pair must have two entries");
    const Json& value = field(entry, "value");
    if (!value.is_array() || static_cast<int>(value.size()) != n)
      throw SchemaError("s value must have length " + std::to_string(n));
    RationalVector v(n);
    for (int i = 0; i < n; ++i) v[i] = rational_from_json(value[i]);
    if (s.count({pair[0], pair[1]}))
      throw SchemaError("s given twice on (" + std::to_string(pair[0]) + "," +
                        std::to_string(pair[1]) + ")");
    s[{pair[0], pair[1]}] = v;
  }
  std::map<int, int> base;
  if (j.contains("base")) {
    const Json& b = j.at("base");
    if (!b.is_object()) throw SchemaError("base must be an object");
    for (const auto& [key, v] : b.items()) {
      if (key.rfind("component", 0) != 0)
        throw SchemaError("base key '" + key + "' must be componentN");
      try {
        base[std::stoi(key.substr(9))] = as_int(v, "base vertex");
      } catch (const std::logic_error&) {
        throw SchemaError("base key '" + key + "' must be componentN");
      }
    }
  }
  return make_setup(nerve, n, s, base);
}

Json matrix_to_json(const IntegerMatrix& m) {
  Json entries = Json::array();
  for (const auto& [ij, v] : m.entries())
    entries.push_back(Json::array({ij.first, ij.second, integer_to_json(v)}));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

IntegerMatrix matrix_from_json(const Json& j) {
  const int rows = as_int(field(j, "rows"), "rows");
  const int cols = as_int(field(j, "cols"), "cols");
  if (rows < 0 || cols < 0) throw SchemaError("negative matrix size");
  IntegerMatrix m(rows, cols);
  for (const auto& e : field(j, "entries")) {
    if (!e.is_array() || e.size() != 3) throw SchemaError("entry must be [i,j,v]");
    const int i = as_int(e[0], "row"), k = as_int(e[1], "column");
    if (i < 0 || i >= rows || k < 0 || k >= cols)
      throw SchemaError("matrix entry out of range");
    m.add(i, k, integer_from_json(e[2]));
  }
  return m;
}

Json group_to_json(const CohomologyGroup& g) {
  Json torsion = Json::array();
  for (const auto& t : g.torsion) torsion.push_back(integer_to_json(t));
  return Json{{"rank", g.rank},
              {"torsion", torsion},
              {"coefficients", to_string(g.coefficients)}};
}

Json quotient_to_json(const QuotientGroup& g) {
  Json torsion = Json::array();
  for (const auto& t : g.torsion) torsion.push_back(integer_to_json(t));
  return Json{{"rank", g.rank}, {"torsion", torsion}};
}

GroupoidSpec groupoid_from_json(const Json& j) {
  auto moduli = int_list(field(j, "group"), "group");
  std::vector<std::string> points;
  const Json& set = field(j, "set");
  if (!set.is_array()) throw SchemaError("set must be a list");
  for (const auto& p : set) {
    if (!p.is_string()) throw SchemaError("set entries must be strings");
    points.push_back(p.get<std::string>());
  }
  std::vector<std::vector<int>> action;
  if (j.contains("action")) {
    action = int_lists(j.at("action"), "action");
  } else {
    std::vector<int> id(points.size());
    for (std::size_t x = 0; x < id.size(); ++x) id[x] = static_cast<int>(x);
    action.assign(moduli.size(), id);
  }
  GroupoidSpec spec{transformation_groupoid(moduli, points, action), {}};
  const auto& G = spec.groupoid.groupoid;
  if (j.contains("covers")) {
    for (const auto& c : j.at("covers")) {
      GroupoidCover cover{int_lists(field(c, "objects"), "object set"),
                          int_lists(field(c, "arrows"), "arrow set")};
      for (const auto& s : cover.objects)
        for (int x : s)
          if (x < 0 || x >= static_cast<int>(G.object_count()))
            throw SchemaError("object " + std::to_string(x) + " out of range");
      for (const auto& s : cover.arrows)
        for (int a : s)
          if (a < 0 || a >= static_cast<int>(G.arrow_count()))
            throw SchemaError("arrow " + std::to_string(a) + " out of range");
      spec.covers.push_back(std::move(cover));
    }
  }
  if (spec.covers.empty()) spec.covers.push_back(GroupoidCover::trivial(G));
  return spec;
}

Json groupoid_to_json(const TransformationGroupoid& g,
                      const std::vector<GroupoidCover>& covers) {
  Json out{{"group", g.moduli}, {"set", g.points}, {"action", g.generator_action}};
  Json cs = Json::array();
  for (const auto& c : covers) cs.push_back(Json{{"objects", c.objects}, {"arrows", c.arrows}});
  out["covers"] = cs;
  return out;
}

Json instance_to_json(const Instance& instance) {
  Json j{{"schema", kInstanceSchema},
         {"name", instance.name},
         {"nerve", nerve_to_json(instance.nerve)},
         {"twist", twist_to_json(instance.twist)}};
  if (instance.setup) j["setup"] = setup_to_json(*instance.setup);
  return j;
}

InstanceFile instance_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("instance must be a JSON object");
  if (j.contains("schema") && j.at("schema") != kInstanceSchema)
    throw SchemaError("unsupported instance schema " + j.at("schema").dump());
  InstanceFile file;
  file.instance.name = j.value("name", std::string("instance"));
  file.instance.nerve = nerve_from_json(field(j, "nerve"));
  file.instance.twist = twist_from_json(file.instance.nerve, field(j, "twist"));
  if (j.contains("setup"))
    file.instance.setup = setup_from_json(file.instance.nerve, j.at("setup"));
  if (j.contains("groupoid")) file.groupoid = groupoid_from_json(j.at("groupoid"));
  return file;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i)
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return os.str();
}

}  // namespace twcech
