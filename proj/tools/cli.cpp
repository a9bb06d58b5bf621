#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "syzygy/betti.hpp"
#include "syzygy/constructions.hpp"
#include "syzygy/io.hpp"
#include "syzygy/verify.hpp"

namespace syzygy::cli {

namespace {

using Json = nlohmann::ordered_json;

const std::vector<std::string> kConstructions{
    "rnc",    "scroll",        "monomial-4.2",    "ex-4.3", "ex-4.4",  "ex-4.5",     "elliptic",
    "points", "points-on-rnc", "curve-on-scroll", "cone",   "section", "artinian", "inner-projection"};
const std::vector<std::string> kTheorems{"A",          "B",         "C",             "D",  "corollary-3.2",
                                         "inner-projection", "lefschetz", "broken-divisor", "all"};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ConstructArgs {
  std::string name;
  std::optional<unsigned> e, d, a, b, alpha, k;
  std::optional<int> twist;
  std::optional<std::uint64_t> seed;
  std::string blocks;
  std::string input;
  std::string point;
  std::string field = "32003";
  std::string out;
};

FieldSpec parse_field(const std::string& text) {
  if (text == "Q") return FieldSpec::rationals();
  try {
    std::size_t used = 0;
    unsigned long p = std::stoul(text, &used);
    if (used != text.size() || !is_prime_number(p) || p >= (1ul << 31)) throw UsageError("");
    return FieldSpec::prime_field(static_cast<std::uint32_t>(p));
  } catch (const std::exception&) {
    throw UsageError("--field must be Q or a prime below 2^31, got " + text);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

template <class T>
T need(const std::optional<T>& v, const std::string& flag, const std::string& name) {
  if (!v) throw UsageError(name + " requires " + flag);
  return *v;
}

template <class F>
Construction<F> from_file(const F& field, const IdealFile& file) {
  auto ring = ring_of(file, field);
  return Construction<F>{file.meta("construction").value_or("input"), ideal_of(file, ring), 0, file.metadata, {}};
}

template <class F>
Point<F> parse_point(const F& field, const std::string& text) {
  Point<F> p;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    mpq_class q;
    if (q.set_str(item, 10) != 0) throw UsageError("bad coordinate: " + item);
    q.canonicalize();
    p.push_back(field.from_ratio(q.get_num(), q.get_den()));
  }
  return p;
}

template <class F>
std::string construct(const F& field, const ConstructArgs& a) {
  const std::string& n = a.name;
  std::vector<std::pair<std::string, std::string>> meta{{"construction", n}};
  auto record = [&](const std::string& key, const auto& v) {
    if (v) meta.push_back({key, std::to_string(*v)});
  };
  record("e", a.e);
  record("d", a.d);
  record("a", a.a);
  record("b", a.b);
  record("alpha", a.alpha);
  record("k", a.twist);
  if (!a.blocks.empty()) meta.push_back({"blocks", a.blocks});
  record("seed", a.seed);
  std::optional<Construction<F>> c;
  auto seed = [&] { return need(a.seed, "--seed", n); };
  auto input = [&] {
    if (a.input.empty()) throw UsageError(n + " requires --in");
    auto file = parse_ideal_file(read_file(a.input));
    return from_file(field, file);
  };
  if (n == "rnc") {
    c = rational_normal_curve(field, need(a.d, "--d", n));
  } else if (n == "scroll") {
    if (a.blocks.empty()) throw UsageError("scroll requires --blocks");
    std::vector<unsigned> blocks;
    std::stringstream s(a.blocks);
    std::string item;
    while (std::getline(s, item, ',')) {
      try {
        blocks.push_back(static_cast<unsigned>(std::stoul(item)));
      } catch (const std::exception&) {
        throw UsageError("bad block: " + item);
      }
    }
    c = scroll(field, ScrollSpec(blocks));
  } else if (n == "monomial-4.2") {
    c = almost_minimal_curve(field, need(a.e, "--e", n));
  } else if (n == "ex-4.3") {
    c = almost_minimal_surface(field, need(a.e, "--e", n));
  } else if (n == "ex-4.4") {
    c = almost_minimal_threefold(field, need(a.e, "--e", n));
  } else if (n == "ex-4.5") {
    c = almost_minimal_fourfold(field, need(a.e, "--e", n));
  } else if (n == "elliptic") {
    c = elliptic_normal_curve(field, need(a.e, "--e", n));
  } else if (n == "points") {
    c = general_points(field, need(a.e, "--e", n), need(a.d, "--d", n), seed());
  } else if (n == "points-on-rnc") {
    c = points_on_rnc(field, need(a.e, "--e", n), need(a.d, "--d", n), seed());
  } else if (n == "curve-on-scroll") {
    c = curve_on_scroll(field, need(a.a, "--a", n), need(a.b, "--b", n), need(a.alpha, "--alpha", n),
                        need(a.twist, "--twist", n), seed());
  } else if (n == "cone") {
    c = cone(input(), need(a.k, "--k", n));
  } else if (n == "section") {
    c = geometric_linear_section(input(), need(a.k, "--k", n), seed());
  } else if (n == "artinian") {
    auto q = artinian_quotient(input(), need(a.k, "--k", n), seed());
    meta.push_back({"regular-sequence", q.regular ? "yes" : "no"});
    c = std::move(q.quotient);
  } else if (n == "inner-projection") {
    if (a.point.empty()) throw UsageError("inner-projection requires --point");
    auto base = input();
    c = inner_projection(base, parse_point(field, a.point));
  } else {
    throw UsageError("unknown construction " + n);
  }
  record("k", a.k);
  for (const auto& kv : c->metadata)
    if (std::none_of(meta.begin(), meta.end(), [&](const auto& m) { return m.first == kv.first; })) meta.push_back(kv);
  return render_ideal_file(c->ideal, meta);
}

template <class F>
BettiTable betti_of(const F& field, const IdealFile& file) {
  auto ring = ring_of(file, field);
  return betti_table(buchberger(ideal_of(file, ring)), {});
}

Json report_json(const std::vector<CheckResult>& results, const std::string& command, std::uint64_t seed) {
  Json items = Json::array();
  for (const auto& r : results) {
    Json item;
    item["check"] = r.check;
    item["instance"] = r.instance;
    item["expected"] = r.expected;
    item["actual"] = r.actual;
    item["pass"] = r.pass && !r.error;
    if (r.error) item["error"] = *r.error;
    item["millis"] = r.millis;
    items.push_back(std::move(item));
  }
  Json report;
  report["version"] = SYZYGY_VERSION;
  report["command"] = command;
  report["seed"] = seed;
  report["items"] = std::move(items);
  return report;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Betti tables and syzygy checks for projective varieties", "syzygy"};
  app.require_subcommand(1);
  app.set_version_flag("--version", SYZYGY_VERSION);

  ConstructArgs ca;
  auto* construct_cmd = app.add_subcommand("construct", "Write the ideal file of a construction");
  construct_cmd->add_option("name", ca.name, "Construction")->required()->check(CLI::IsMember(kConstructions));
  construct_cmd->add_option("--e", ca.e, "Codimension parameter");
  construct_cmd->add_option("--d", ca.d, "Degree or number of points");
  construct_cmd->add_option("--blocks", ca.blocks, "Scroll type, e.g. 0,1,3");
  construct_cmd->add_option("--a", ca.a, "Smaller scroll block");
  construct_cmd->add_option("--b", ca.b, "Larger scroll block");
  construct_cmd->add_option("--alpha", ca.alpha, "Coefficient of H");
  construct_cmd->add_option("--twist", ca.twist, "Coefficient of F")->allow_extra_args(false);
  construct_cmd->add_option("--k", ca.k, "Number of cone variables, forms or sections");
  construct_cmd->add_option("--in", ca.input, "Input ideal file (cone, section, artinian, inner-projection)");
  construct_cmd->add_option("--point", ca.point, "Projection center, comma separated");
  construct_cmd->add_option("--seed", ca.seed, "Seed for randomized constructions");
  construct_cmd->add_option("--field", ca.field, "Q or a prime (default 32003)");
  construct_cmd->add_option("--out", ca.out, "Output file (default stdout)");

  std::string betti_file, betti_field;
  bool betti_json = false;
  auto* betti_cmd = app.add_subcommand("betti", "Print the Betti table of an ideal file");
  betti_cmd->add_option("file", betti_file, "Ideal file")->required();
  betti_cmd->add_flag("--json", betti_json, "Emit JSON");
  betti_cmd->add_option("--field", betti_field, "Override the coefficient field (Q or a prime)");

  std::string theorem, verify_out;
  unsigned e_min = 3, e_max = 5;
  std::uint64_t verify_seed = 1;
  auto* verify_cmd = app.add_subcommand("verify", "Run the property checks and write a JSON report");
  verify_cmd->add_option("--theorem", theorem, "Which statement to check")->required()->check(CLI::IsMember(kTheorems));
  verify_cmd->add_option("--e-min", e_min, "Smallest codimension (>= 2)")->check(CLI::Range(2u, 30u));
  verify_cmd->add_option("--e-max", e_max, "Largest codimension")->check(CLI::Range(2u, 30u));
  verify_cmd->add_option("--seed", verify_seed, "Seed (default 1)");
  verify_cmd->add_option("--out", verify_out, "Report file (default stdout)");

  try {
    app.parse(argc, argv);
    if (verify_cmd->parsed() && e_max < e_min) throw CLI::ValidationError("--e-max", "must be >= --e-min");
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (construct_cmd->parsed()) {
      const auto spec = parse_field(ca.field);
      std::string text = spec.is_prime() ? construct(PrimeField(spec.prime), ca) : construct(RationalField(), ca);
      write_output(ca.out, text, out);
      return 0;
    }
    if (betti_cmd->parsed()) {
      auto file = parse_ideal_file(read_file(betti_file));
      if (!betti_field.empty()) file.field = parse_field(betti_field);
      auto t = file.field.is_prime() ? betti_of(PrimeField(file.field.prime), file) : betti_of(RationalField(), file);
      if (betti_json) {
        Json j;
        j["entries"] = Json::array();
        for (const auto& [key, v] : t.entries()) j["entries"].push_back({key.first, key.second, v});
        j["pd"] = t.pd();
        j["depth"] = t.depth();
        j["reg"] = t.reg();
        auto a = t.gl_index();
        j["aX"] = a ? Json(*a) : Json(nullptr);
        out << j.dump() << "\n";
      } else {
        out << render_betti_diagram(t);
      }
      return 0;
    }
    if (verify_cmd->parsed()) {
      SuiteConfig config;
      config.e_min = e_min;
      config.e_max = e_max;
      config.seed = verify_seed;
      config.checks = checks_for(theorem);
      auto results = run_suite(config);
      std::string command;
      for (int i = 1; i < argc; ++i) command += (i > 1 ? " " : "") + std::string(argv[i]);
      write_output(verify_out, report_json(results, command, verify_seed).dump(2) + "\n", out);
      std::size_t failed = 0;
      for (const auto& r : results)
        if (!r.pass || r.error) ++failed;
      err << results.size() << " checks, " << failed << " failed\n";
      return failed == 0 ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace syzygy::cli
