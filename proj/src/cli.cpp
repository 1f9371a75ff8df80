#include "twcech/cli.hpp"

#include <functional>
#include <sstream>

#include "twcech/exactness.hpp"

namespace twcech {

namespace {

constexpr std::size_t kShownFailures = 5;

Json provenance(const std::string& input, std::optional<std::uint64_t> seed) {
  Json p{{"input_sha256", sha256_hex(input)}, {"tool", "twcech"},
         {"version", TWCECH_VERSION}};
  p["seed"] = seed ? Json(*seed) : Json(nullptr);
  return p;
}

std::string error_type(const std::exception& e) {
  if (dynamic_cast<const NotClosed*>(&e)) return "NotClosed";
  if (dynamic_cast<const SchemaError*>(&e)) return "SchemaError";
  if (dynamic_cast<const NotInNerve*>(&e)) return "NotInNerve";
  if (dynamic_cast<const LengthMismatch*>(&e)) return "LengthMismatch";
  if (dynamic_cast<const UnknownExample*>(&e)) return "UnknownExample";
  if (dynamic_cast<const NonInteger*>(&e)) return "NonInteger";
  if (dynamic_cast<const TooLarge*>(&e)) return "TooLarge";
  if (dynamic_cast<const EmptyInput*>(&e)) return "EmptyInput";
  if (dynamic_cast<const nlohmann::json::exception*>(&e)) return "SchemaError";
  return "Error";
}

CliResult failure(const std::exception& e, int code, Format format) {
  CliResult r;
  r.exit_code = code;
  r.err = "error: " + std::string(e.what()) + "\n";
  if (format == Format::Json) {
    Json body{{"type", error_type(e)}, {"message", e.what()}};
    if (const auto* nc = dynamic_cast<const NotClosed*>(&e)) {
      body["simplex"] = nc->simplex();
      body["component"] = nc->component();
      body["value"] = nc->value();
    }
    r.out = Json{{"schema", kReportSchema}, {"error", body}}.dump(2) + "\n";
  }
  return r;
}

/// Runs `body`, mapping library errors to exit codes.
CliResult guarded(Format format, const std::function<CliResult()>& body) {
  try {
    return body();
  } catch (const NotClosed& e) {
    return failure(e, 3, format);
  } catch (const Error& e) {
    return failure(e, 2, format);
  } catch (const nlohmann::json::exception& e) {
    return failure(e, 2, format);
  }
}

class Inapplicable : public Error {
 public:
  using Error::Error;
};

// ---- checks

struct CheckResult {
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  std::string name;
  bool passed = true;
  std::string detail;
  Json failures = Json::array();

  void fail(Json witness) {
    passed = false;
    failures.push_back(std::move(witness));
  }
};

Json failure_json(const IdentityFailure& f) {
  return Json{{"identity", f.identity}, {"context", f.context}, {"value", f.value}};
}

int top_degree(const Nerve& nerve) { return nerve.dimension() + 2; }

CheckResult check_d2(const Instance& in) {
  CheckResult r{"d2"};
  const int top = top_degree(in.nerve);
  const auto cx = assemble_complex(in.nerve, in.twist, ScalarKind::Z, top + 1);
  for (int k = 0; k < top; ++k) {
    const auto product = cx.chain.differential(k + 1) * cx.chain.differential(k);
    if (!product.is_zero()) {
      const auto& [ij, v] = *product.entries().begin();
      r.fail(Json{{"degree", k}, {"row", ij.first}, {"col", ij.second},
                  {"value", integer_to_json(v)}});
    }
  }
  r.detail = "D_F^2 = 0 checked in degrees 0.." + std::to_string(top - 1);
  return r;
}

CheckResult check_steenrod(const Instance& in) {
  CheckResult r{"steenrod"};
  const int n = in.twist.n;
  const auto C = steenrod_cochain(in.nerve, in.twist);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto Fi = in.twist.component(i), Fj = in.twist.component(j);
      const auto lhs = cup_product(in.nerve, Fi, Fj) - cup_product(in.nerve, Fj, Fi);
      Cochain<Integer> cij(3, Integer(0));
      for (const auto& [s, v] : C.entries()) cij.set(s, v(i, j));
      const auto diff = lhs - cech_differential(in.nerve, cij);
      for (const auto& [s, v] : diff.entries())
        r.fail(Json{{"pair", {i, j}}, {"simplex", s}, {"value", integer_to_json(v)}});
    }
  r.detail = "F_i u F_j - F_j u F_i = dC(F)_ij for all i < j";
  return r;
}

CheckResult check_les(const Instance& in) {
  CheckResult r{"les"};
  const int top = top_degree(in.nerve);
  const auto cx = assemble_complex(in.nerve, in.twist, ScalarKind::Z, top + 1);
  std::vector<LESReport> reports;
  for (int split : {1, 2}) reports.push_back(verify_exactness(column_filtration(cx, split)));
  for (int N : {2, 3, 4}) reports.push_back(verify_mod_n_les(cx.chain, Integer(N)));
  std::size_t nodes = 0;
  for (const auto& rep : reports)
    for (const auto& node : rep.nodes) {
      ++nodes;
      if (!node.exact)
        r.fail(Json{{"sequence", rep.name}, {"group", node.group},
                    {"degree", node.degree},
                    {"kernel", quotient_to_json(node.kernel)},
                    {"image", quotient_to_json(node.image)}});
    }
  std::size_t circle = 0;
  for (const auto& c : verify_circle_sequence(cx.chain, {Integer(2), Integer(3), Integer(4)})) {
    ++circle;
    if (!c.ok)
      r.fail(Json{{"sequence", "Z -> Q -> Q/Z"}, {"check", c.what},
                  {"degree", c.degree}, {"detail", c.detail}});
  }
  r.detail = std::to_string(nodes) + " exactness nodes, " + std::to_string(circle) +
             " Q/Z cross-checks";
  return r;
}

CheckResult check_tu(const InstanceFile& file) {
  if (!file.groupoid) throw Inapplicable("check 'tu' needs a groupoid in the instance");
  CheckResult r{"tu"};
  const auto& G = file.groupoid->groupoid.groupoid;
  std::size_t cocycles = 0;
  for (std::size_t c = 0; c < file.groupoid->covers.size(); ++c) {
    const auto& cover = file.groupoid->covers[c];
    const auto tc = tu_complex(G, cover, 3);
    for (int k = 0; k + 1 < 3; ++k)
      if (!(tc.chain.differential(k + 1) * tc.chain.differential(k)).is_zero())
        r.fail(Json{{"cover", c}, {"what", "d^2 != 0"}, {"degree", k}});
    for (const auto& phi : enumerate_onecocycles(G, cover, Integer(2))) {
      ++cocycles;
      if (!onecocycle_independent(phi))
        r.fail(Json{{"cover", c}, {"what", "1-cocycle depends on the arrow cell"}});
    }
  }
  r.detail = std::to_string(file.groupoid->covers.size()) + " covers, " +
             std::to_string(cocycles) + " (1/2)Z/Z 1-cocycles";
  return r;
}

const StandardSetup& require_setup(const Instance& in, const std::string& check) {
  if (!in.setup)
    throw Inapplicable("check '" + check + "' needs a standard setup in the instance");
  return *in.setup;
}

/// Setup problems, F on every spanning triple in every order, and agreement
/// with the instance twist.
void validate_setup(const Instance& in, CheckResult& r) {
  const auto& setup = *in.setup;
  for (const auto& p : setup_problems(setup))
    r.fail(Json{{"error", "SetupProblem"}, {"message", p}});
  for (const auto& t : spanning_tuples(setup.nerve, 3)) {
    try {
      setup.F_int(t[0], t[1], t[2]);
    } catch (const NonInteger& e) {
      r.fail(Json{{"error", "NonInteger"}, {"message", e.what()}});
    }
  }
  if (!r.passed) {
    r.detail = "invalid standard setup";
    return;
  }
  if (setup.n != in.twist.n || !(setup.twist().F == in.twist.F))
    r.fail(Json{{"error", "SetupMismatch"},
                {"message", "the boundary of s differs from the twist"}});
  if (!r.passed) r.detail = "invalid standard setup";
}

CheckResult check_surjectivity(const Instance& in, std::uint64_t seed) {
  CheckResult r{"surjectivity"};
  const auto& setup = require_setup(in, "surjectivity");
  validate_setup(in, r);
  if (!r.passed) return r;
  std::mt19937_64 rng(seed);
  BrauerTriple t(setup);
  t.add(random_g_term(setup, rng));
  t.add(random_pullback_term(setup, rng));
  t.add(random_coboundary_term(setup, rng));
  WLiftData w;
  w.seed = seed;
  constexpr std::size_t samples = 200;
  try {
    for (const auto& f : triple_invariant_failures(t)) r.fail(failure_json(f));
    for (const auto& f : check_m_data(setup, w, samples, seed).failures) r.fail(failure_json(f));
    for (const auto& f : check_tu_closure(t, w, closure_plan(setup, samples, seed + 1)).failures)
      r.fail(failure_json(f));
    for (const auto& f : tudimred_witnesses(t, w, samples, seed + 2).failures)
      r.fail(failure_json(f));
  } catch (const NonInteger& e) {
    r.fail(Json{{"error", "NonInteger"}, {"message", e.what()}});
  }
  r.detail = std::to_string(samples) +
             " samples each of m-data, Tu closure and the three identities";
  return r;
}

CheckResult check_lift(const Instance& in, std::uint64_t seed) {
  CheckResult r{"lift"};
  const auto& setup = require_setup(in, "lift");
  validate_setup(in, r);
  if (!r.passed) return r;
  std::mt19937_64 rng(seed);
  try {
    const auto image = bockstein_of_g_triple(setup, random_g_term(setup, rng).g);
    for (const auto& [s, v] : image.d30.entries())
      r.fail(Json{{"component", "30"}, {"simplex", s}, {"value", integer_to_json(v)}});
    for (const auto& [s, v] : image.d21.entries())
      r.fail(Json{{"component", "21"}, {"simplex", s}});
    for (const auto& [s, v] : image.d12.entries())
      r.fail(Json{{"component", "12"}, {"simplex", s}});
  } catch (const NonInteger& e) {
    r.fail(Json{{"error", "NonInteger"}, {"message", e.what()}});
  }
  r.detail = r.passed ? "all components zero" : "nonzero components";
  return r;
}

const std::vector<std::string>& all_checks() {
  static const std::vector<std::string> names{"d2",  "steenrod",     "les",
                                              "tu",  "surjectivity", "lift"};
  return names;
}

std::string text_failures(const CheckResult& c) {
  std::string s;
  std::size_t shown = 0;
  for (const auto& f : c.failures) {
    if (shown++ == kShownFailures) {
      s += "    ... " + std::to_string(c.failures.size() - kShownFailures) + " more\n";
      break;
    }
    s += "    " + f.dump() + "\n";
  }
  return s;
}

}  // namespace

CliResult run_compute(const std::string& input, const std::vector<int>& degrees,
                      ScalarKind scalar, Format format) {
  return guarded(format, [&]() {
    const auto file = instance_from_json(parse_json(input));
    const auto& in = file.instance;
    std::vector<int> ks = degrees;
    if (ks.empty())
      for (int k = 0; k <= top_degree(in.nerve); ++k) ks.push_back(k);
    for (int k : ks)
      if (k < 0) throw SchemaError("degree must be nonnegative");
    const int kmax = *std::max_element(ks.begin(), ks.end()) + 1;
    const auto cx = assemble_complex(in.nerve, in.twist, scalar, kmax);

    Json results = Json::array();
    std::string text;
    for (int k : ks) {
      const auto g = cohomology_group(cx, k);
      results.push_back(Json{{"degree", k}, {"group", group_to_json(g)}});
      text += "H^" + std::to_string(k) + "_F(" + to_string(scalar) + ") = " +
              to_string(g) + "\n";
    }
    CliResult r;
    if (format == Format::Json) {
      Json report{{"schema", kReportSchema},     {"command", "compute"},
                  {"instance", in.name},         {"coefficients", to_string(scalar)},
                  {"results", results},          {"provenance", provenance(input, std::nullopt)}};
      r.out = report.dump(2) + "\n";
    } else {
      r.out = in.name + "\n" + text;
    }
    return r;
  });
}

CliResult run_verify(const std::string& input,
                     const std::vector<std::string>& checks, std::uint64_t seed,
                     Format format) {
  return guarded(format, [&]() -> CliResult {
    const auto file = instance_from_json(parse_json(input));
    const auto& in = file.instance;
    std::vector<std::string> requested = checks;
    const bool explicit_checks = !requested.empty();
    if (!explicit_checks) requested = all_checks();
    for (const auto& c : requested)
      if (std::find(all_checks().begin(), all_checks().end(), c) == all_checks().end())
        throw SchemaError("unknown check '" + c + "'");

    std::vector<CheckResult> results;
    try {
      for (const auto& c : requested) {
        if (!explicit_checks && ((c == "tu" && !file.groupoid) ||
                                 ((c == "surjectivity" || c == "lift") && !in.setup)))
          continue;
        if (c == "d2") results.push_back(check_d2(in));
        if (c == "steenrod") results.push_back(check_steenrod(in));
        if (c == "les") results.push_back(check_les(in));
        if (c == "tu") results.push_back(check_tu(file));
        if (c == "surjectivity") results.push_back(check_surjectivity(in, seed));
        if (c == "lift") results.push_back(check_lift(in, seed));
      }
    } catch (const Inapplicable& e) {
      return failure(e, 2, format);
    }

    bool passed = true;
    for (const auto& c : results) passed = passed && c.passed;
    CliResult r;
    r.exit_code = passed ? 0 : 1;
    if (format == Format::Json) {
      Json list = Json::array();
      for (const auto& c : results)
        list.push_back(Json{{"check", c.name}, {"passed", c.passed},
                            {"detail", c.detail}, {"failures", c.failures}});
      Json report{{"schema", kReportSchema}, {"command", "verify"},
                  {"instance", in.name},     {"passed", passed},
                  {"checks", list},          {"provenance", provenance(input, seed)}};
      r.out = report.dump(2) + "\n";
    } else {
      r.out = in.name + "\n";
      for (const auto& c : results) {
        r.out += c.name + ": " + (c.passed ? "pass" : "FAIL") + " (" + c.detail + ")\n";
        if (!c.passed) r.out += text_failures(c);
      }
    }
    return r;
  });
}

CliResult run_example(const std::string& name, const ExampleParameters& params) {
  return guarded(Format::Text, [&]() {
    CliResult r;
    r.out = instance_to_json(make_example(name, params)).dump(2) + "\n";
    return r;
  });
}

}  // namespace twcech
