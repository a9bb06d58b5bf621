#include "syzygy/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>

namespace syzygy {

std::string to_string(Classification c) {
  switch (c) {
    case Classification::VMD: return "VMD";
    case Classification::DelPezzo: return "del-Pezzo";
    case Classification::VamdDepthNA0: return "VAMD-depth-n-a0";
    case Classification::AcmDegreeE3: return "ACM-d-e3";
    case Classification::Other: return "other";
  }
  return "other";
}

Classification classify(int e, std::int64_t d, int n, int depth, bool acm, std::optional<int> gl_index) {
  if (d == e + 1) return Classification::VMD;
  if (d == e + 2 && acm) return Classification::DelPezzo;
  if (d == e + 2 && depth == n && gl_index && *gl_index == 0) return Classification::VamdDepthNA0;
  if (d == e + 3 && acm) return Classification::AcmDegreeE3;
  return Classification::Other;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t extremal_strand(int e, int p) { return p * binomial(e + 1, p + 1) - 2 * binomial(e, p - 1); }

template <class F>
VarietyReport analyze(const Construction<F>& c, std::uint64_t seed, bool integral) {
  VarietyReport r;
  r.instance = c.name;
  r.integral = integral;
  auto g = buchberger(c.ideal);
  r.hilbert = hilbert_data(g);
  BettiOptions opts;
  opts.seed = seed;
  r.betti = betti_table(g, opts);
  auto d = derived_invariants(r.betti, r.hilbert);
  r.n = static_cast<int>(r.hilbert.dimension) - 1;
  r.e = static_cast<int>(r.hilbert.codimension());
  r.degree = r.hilbert.degree;
  r.depth = d.depth;
  r.acm = d.acm;
  r.gl_index = d.gl_index;
  if (r.n >= 1) r.sectional_genus = sectional_genus(g, seed);
  r.classification = classify(r.e, r.degree, r.n, r.depth, r.acm, r.gl_index);
  return r;
}

namespace {

std::string join(const std::vector<std::int64_t>& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
  out << ")";
  return out.str();
}

std::string index_string(std::optional<int> a) { return a ? std::to_string(*a) : "inf"; }

std::vector<std::int64_t> strand(const BettiTable& t, int from, int to, int q = 1) {
  std::vector<std::int64_t> out;
  for (int p = from; p <= to; ++p) out.push_back(t.at(p, q));
  return out;
}

CheckResult result(std::string check, const VarietyReport& r, std::string expected, std::string actual, bool pass) {
  CheckResult c;
  c.check = std::move(check);
  c.instance = r.instance;
  c.expected = std::move(expected);
  c.actual = std::move(actual);
  c.pass = pass;
  return c;
}

void require_not_extremal(const VarietyReport& r) {
  if (r.classification == Classification::VMD || r.classification == Classification::DelPezzo)
    throw PreconditionFailed("instance is of minimal degree or del Pezzo");
}

}  // namespace

CheckResult bound_A(const VarietyReport& r) {
  require_not_extremal(r);
  if (r.e < 2) throw PreconditionFailed("codimension must be >= 2");
  std::vector<std::int64_t> bound, actual;
  bool pass = true;
  for (int p = 1; p <= r.e; ++p) {
    bound.push_back(p <= r.e - 1 ? extremal_strand(r.e, p) : 0);
    actual.push_back(r.betti.at(p, 1));
    pass = pass && actual.back() <= bound.back();
  }
  for (int p = r.e + 1; p <= static_cast<int>(r.betti.nvars()); ++p) pass = pass && r.betti.at(p, 1) == 0;
  return result("quadratic-strand-bound", r, "<= " + join(bound), join(actual), pass);
}

CheckResult classify_extremal_B(const VarietyReport& r) {
  if (r.e < 3) throw PreconditionFailed("codimension must be >= 3");
  auto eq = [&](int p) { return r.betti.at(p, 1) == extremal_strand(r.e, p); };
  const bool i = r.classification == Classification::VamdDepthNA0 || r.classification == Classification::AcmDegreeE3;
  bool iii = true;
  for (int p = 1; p <= r.e - 1; ++p) iii = iii && eq(p);
  // every admissible single p must decide the same way
  bool ii_consistent = true;
  bool ii_any = false;
  const int lo = r.e == 3 ? 1 : 2;
  const int hi = r.e == 3 ? 1 : r.e - 2;
  for (int p = lo; p <= hi; ++p) {
    ii_any = ii_any || eq(p);
    ii_consistent = ii_consistent && eq(p) == i;
  }
  std::ostringstream actual;
  actual << "i=" << i << " ii=" << ii_any << " iii=" << iii;
  return result("extremal-characterization", r, "i = ii = iii", actual.str(), ii_consistent && i == iii && ii_any == i);
}

CheckResult dichotomy_beta_e_minus_1(const VarietyReport& r) {
  require_not_extremal(r);
  auto b = r.betti.at(r.e - 1, 1);
  return result("top-strand-dichotomy", r, "0 or " + std::to_string(r.e - 1), std::to_string(b),
                b == 0 || b == r.e - 1);
}

CheckResult alternating_sum_check(const VarietyReport& r) {
  auto sum = r.betti.alternating_sum();
  return result("alternating-sum", r, join(r.hilbert.numerator), join(sum), sum == r.hilbert.numerator);
}

CheckResult linear_strand_check(const VarietyReport& r) {
  bool pass = true;
  for (int p = r.e + 1; p <= static_cast<int>(r.betti.nvars()); ++p) pass = pass && r.betti.at(p, 1) == 0;
  const auto top = r.betti.at(r.e, 1);
  const bool vmd = r.degree == r.e + 1;
  pass = pass && (top == 0 || vmd);
  std::ostringstream actual;
  actual << "beta_{e,1}=" << top << " beyond_e=" << join(strand(r.betti, r.e + 1, static_cast<int>(r.betti.nvars())));
  return result("linear-strand", r, vmd ? "beyond_e zero" : "beta_{e,1}=0, beyond_e zero", actual.str(), pass);
}

CheckResult table_shape_check(const VarietyReport& r) {
  const int e = r.e;
  std::vector<std::int64_t> want;
  std::vector<std::int64_t> got;
  auto expect = [&](std::int64_t w, std::int64_t g) {
    want.push_back(w);
    got.push_back(g);
  };
  std::optional<std::int64_t> genus;
  switch (r.classification) {
    case Classification::VMD:
      for (int p = 1; p <= e; ++p) expect(p * binomial(e + 1, p + 1), r.betti.at(p, 1));
      expect(1, r.betti.reg());
      genus = 0;
      break;
    case Classification::DelPezzo:
      for (int p = 1; p <= e - 1; ++p) expect(p * binomial(e + 1, p + 1) - binomial(e, p - 1), r.betti.at(p, 1));
      expect(1, r.betti.at(e, 2));
      genus = 1;
      break;
    case Classification::VamdDepthNA0:
      for (int p = 1; p <= e - 1; ++p) expect(extremal_strand(e, p), r.betti.at(p, 1));
      for (int p = 1; p <= e - 2; ++p) expect(binomial(e, p - 1), r.betti.at(p, 2));
      for (int p = e - 1; p <= e + 1; ++p)
        expect(binomial(e + 2, p + 1) - (e + 1) * binomial(e, p + 1), r.betti.at(p, 2));
      genus = 0;
      break;
    case Classification::AcmDegreeE3:
      for (int p = 1; p <= e - 1; ++p) expect(extremal_strand(e, p), r.betti.at(p, 1));
      expect(e, r.betti.at(e - 1, 2));
      expect(2, r.betti.at(e, 2));
      genus = 2;
      break;
    case Classification::Other:
      if (r.degree != e + 2) throw PreconditionFailed("no closed-form table for this instance");
      break;
  }
  if (r.degree == e + 2 && r.classification != Classification::DelPezzo) {
    expect(binomial(e + 1, 2) + r.depth - r.n - 2, r.betti.at(1, 1));
    expect(e - 1, r.betti.at(e - 1, 1));
    if (!r.acm) genus = 0;
  }
  if (genus && r.integral && r.sectional_genus) expect(*genus, *r.sectional_genus);
  return result("table-shape", r, to_string(r.classification) + " " + join(want), join(got), want == got);
}

CheckResult quadric_count_check(const VarietyReport& r) {
  const bool extremal = (r.degree == r.e + 2 && r.depth == r.n) || (r.degree == r.e + 3 && r.acm);
  const auto b = r.betti.at(1, 1);
  const bool hit = b == binomial(r.e + 1, 2) - 2;
  return result("quadric-count", r, extremal ? "beta_{1,1} = C(e+1,2)-2" : "beta_{1,1} != C(e+1,2)-2",
                "beta_{1,1}=" + std::to_string(b), hit == extremal);
}

template <class F>
CheckResult inner_projection_inequality(const Construction<F>& c, const VarietyReport& r, std::uint64_t seed) {
  if (r.n < 1) throw PreconditionFailed("inner projection needs dimension >= 1");
  Rng rng(seed);
  auto q = smooth_point(c, rng);
  if (!q) throw DegenerateChoice("no smooth point found", seed);
  auto xq = inner_projection(c, *q);
  auto gq = buchberger(xq.ideal);
  BettiOptions opts;
  opts.seed = seed;
  const auto tq = betti_table(gq, opts);
  const auto hq = hilbert_data(gq);
  const int top = static_cast<int>(r.betti.nvars());
  std::vector<std::int64_t> lhs, rhs;
  bool pass = true;
  bool some_equal = false;
  for (int p = 1; p <= top; ++p) {
    lhs.push_back(r.betti.at(p, 1));
    rhs.push_back(tq.at(p, 1) + tq.at(p - 1, 1) + binomial(r.e, p));
    pass = pass && lhs.back() <= rhs.back();
    if (!r.gl_index || p <= *r.gl_index) pass = pass && lhs.back() == rhs.back();
    if (lhs.back() == rhs.back() && rhs.back() != 0) some_equal = true;
  }
  if (some_equal) pass = pass && r.betti.at(1, 1) == tq.at(1, 1) + r.e;
  pass = pass && hq.degree == r.degree - 1;
  bool quadric = r.betti.at(1, 1) > 0;
  for (const auto& [key, v] : r.betti.entries())
    if (key.first == 1 && key.second >= 2) quadric = false;
  if (quadric) pass = pass && tq.depth() == r.depth;
  std::ostringstream expected, actual;
  expected << "lhs <= rhs, equal for p <= " << index_string(r.gl_index) << ", degree " << r.degree - 1;
  if (quadric) expected << ", depth " << r.depth;
  actual << "lhs=" << join(lhs) << " rhs=" << join(rhs) << " degree " << hq.degree << " depth " << tq.depth();
  auto out = result("inner-projection", r, expected.str(), actual.str(), pass);
  out.seed = seed;
  return out;
}

template <class F>
CheckResult lefschetz_check(const Construction<F>& c, const VarietyReport& r, std::uint64_t seed) {
  if (r.n < 1) throw PreconditionFailed("hyperplane section needs dimension >= 1");
  auto y = geometric_linear_section(c, 1, seed);
  BettiOptions opts;
  opts.seed = seed;
  const auto ty = betti_table(buchberger(y.ideal), opts);
  const int top = static_cast<int>(r.betti.nvars());
  auto x1 = strand(r.betti, 1, top);
  auto y1 = strand(ty, 1, top);
  bool pass = true;
  for (std::size_t i = 0; i < x1.size(); ++i) pass = pass && x1[i] <= y1[i];
  if (r.depth >= 2) pass = pass && x1 == y1;
  auto out = result("lefschetz", r, r.depth >= 2 ? "X strand = section strand" : "X strand <= section strand",
                    "X " + join(x1) + " section " + join(y1), pass);
  out.seed = seed;
  return out;
}

template <class F>
DivisorClass infer_divisor_class(const Ideal<F>& x, const ScrollSpec& y, std::uint64_t seed) {
  const F& field = x.ring()->field();
  auto s = scroll(field, y);
  if (s.ideal.ring()->nvars() != x.ring()->nvars()) throw PreconditionFailed("scroll and X live in different spaces");
  auto gx = buchberger(x);
  std::vector<Polynomial<F>> moved;
  for (const auto& g : s.ideal.generators()) {
    std::vector<int> map(x.ring()->nvars());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = static_cast<int>(i);
    moved.push_back(g.rename(x.ring(), map));
  }
  if (!ideal_subset(Ideal<F>(x.ring(), std::move(moved)), gx)) throw PreconditionFailed("X does not lie on " + y.to_string());
  const auto h = hilbert_data(gx);
  const std::int64_t d = h.degree;
  if (y.blocks.size() >= 2 && y.blocks[y.blocks.size() - 2] == 0) return DivisorClass::r(static_cast<int>(d));
  const std::int64_t e = y.degree();
  const std::int64_t pi = sectional_genus(gx, seed);
  std::optional<DivisorClass> found;
  for (std::int64_t a = 1; a <= d; ++a) {
    const std::int64_t b = d - a * e;
    if (a * a * e + 2 * a * b - a * (e + 2) - 2 * b != 2 * pi - 2) continue;
    if (found) throw std::domain_error("divisor class is not determined by degree and genus");
    found = DivisorClass::hf(static_cast<int>(a), static_cast<int>(b));
  }
  if (!found) throw std::domain_error("no divisor class has degree " + std::to_string(d) + " and genus " + std::to_string(pi));
  return *found;
}

CheckResult broken_divisor_check(unsigned e, std::uint64_t seed) {
  if (e < 3) throw PreconditionFailed("codimension must be >= 3");
  PrimeField k;
  auto z = broken_divisor(k, e, seed);
  auto r = analyze(z, seed, false);
  const int ei = static_cast<int>(e);
  std::vector<std::int64_t> want;
  for (int p = 1; p <= ei - 1; ++p) want.push_back(extremal_strand(ei, p));
  auto got = strand(r.betti, 1, ei - 1);
  auto out = result("broken-divisor", r, join(want), join(got), want == got);
  out.instance = "broken-divisor e=" + std::to_string(e);
  out.seed = seed;
  return out;
}

CheckResult points_n2p_check(unsigned e, unsigned p, std::uint64_t seed) {
  if (e < 3 || p < 1 || p + 2 > e) throw PreconditionFailed("need e >= 3 and 1 <= p <= e-2");
  PrimeField k;
  const unsigned d = 2 * e + 1 - p;
  auto x = general_points(k, e, d, seed);
  BettiOptions opts;
  opts.seed = seed;
  auto t = betti_table(buchberger(x.ideal), opts);
  CheckResult c;
  c.check = "points-n2p";
  c.instance = "points e=" + std::to_string(e) + " d=" + std::to_string(d) + " p=" + std::to_string(p);
  c.seed = seed;
  c.expected = "a >= " + std::to_string(p);
  c.actual = "a = " + index_string(t.gl_index());
  c.pass = t.satisfies_n2p(static_cast<int>(p));
  return c;
}

std::vector<CorpusEntry> corpus(unsigned e, std::uint64_t seed) {
  PrimeField k;
  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, bool integral, std::set<std::string> tags,
                 std::function<Construction<PrimeField>()> build) {
    out.push_back({std::move(name), e, integral, std::move(tags), [name, build] {
                     auto c = build();
                     c.name = name;
                     return c;
                   }});
  };
  // scrolls of degree e+1, so codimension e
  std::vector<std::vector<unsigned>> scrolls{{e + 1}, {1, e}, {0, 1, e}, {0, 0, 1, e}, {1, 1, e - 1}};
  if (e >= 3) scrolls.push_back({(e + 1) / 2, e + 1 - (e + 1) / 2});
  for (const auto& b : scrolls) {
    ScrollSpec spec(b);
    std::set<std::string> tags{"scroll"};
    if (b.size() <= 3) tags.insert("projection");
    add(spec.to_string(), true, tags, [k, spec] { return scroll(k, spec); });
  }
  if (e >= 3) {
    add("monomial-4.2 e=" + std::to_string(e), true, {"almost-minimal", "projection"},
        [k, e] { return almost_minimal_curve(k, e); });
    add("ex-4.3 e=" + std::to_string(e), true, {"almost-minimal"}, [k, e] { return almost_minimal_surface(k, e); });
    add("ex-4.4 e=" + std::to_string(e), true, {"almost-minimal"}, [k, e] { return almost_minimal_threefold(k, e); });
    add("ex-4.5 e=" + std::to_string(e), true, {"almost-minimal"}, [k, e] { return almost_minimal_fourfold(k, e); });
  }
  if (e >= 4 && e % 3 == 1)
    add("elliptic e=" + std::to_string(e), true, {}, [k, e] { return elliptic_normal_curve(k, e); });
  for (unsigned d = e + 1; d <= e + 5; ++d) {
    const std::string suffix = " e=" + std::to_string(e) + " d=" + std::to_string(d);
    add("points" + suffix, false, {"points"}, [k, e, d, seed] { return general_points(k, e, d, seed); });
    add("points-on-rnc" + suffix, false, {"points"}, [k, e, d, seed] { return points_on_rnc(k, e, d, seed); });
  }
  const int k3 = 3 - static_cast<int>(e);
  for (unsigned a = 1; 2 * a <= e; ++a) {
    const unsigned b = e - a;
    const std::string scroll_name = ScrollSpec({a, b}).to_string();
    add("curve-on-scroll " + scroll_name + " H+2F", true, {"curve"},
        [k, a, b, seed] { return curve_on_scroll(k, a, b, 1, 2, seed); });
    if (2 * a + 3 >= e) {
      std::set<std::string> tags{"curve"};
      if (a == e / 2) tags.insert("genus-two");
      add("curve-on-scroll " + scroll_name + " " + DivisorClass::hf(2, k3).to_string(), true, tags,
          [k, a, b, k3, seed] { return curve_on_scroll(k, a, b, 2, k3, seed); });
    }
  }
  if (e == 3) add("quadric-ci", true, {"ci", "projection"}, [k, seed] { return quadric_complete_intersection(k, seed); });
  if (e >= 3)
    add("broken-divisor e=" + std::to_string(e), false, {"broken"}, [k, e, seed] { return broken_divisor(k, e, seed); });
  return out;
}

const std::vector<std::string>& all_checks() {
  static const std::vector<std::string> names{
      "almost-minimal-divisor-class", "alternating-sum", "broken-divisor",     "extremal-characterization",
      "genus-two-divisor-class",      "inner-projection", "lefschetz",         "linear-strand",
      "points-n2p",                   "quadratic-strand-bound", "quadric-count", "table-shape",
      "top-strand-dichotomy"};
  return names;
}

std::set<std::string> checks_for(const std::string& theorem) {
  static const std::map<std::string, std::string> single{
      {"A", "quadratic-strand-bound"},
      {"B", "extremal-characterization"},
      {"C", "almost-minimal-divisor-class"},
      {"D", "genus-two-divisor-class"},
      {"corollary-3.2", "top-strand-dichotomy"},
      {"inner-projection", "inner-projection"},
      {"lefschetz", "lefschetz"},
      {"broken-divisor", "broken-divisor"},
  };
  if (theorem == "all") return {all_checks().begin(), all_checks().end()};
  auto it = single.find(theorem);
  if (it == single.end()) throw std::invalid_argument("unknown theorem: " + theorem);
  return {it->second};
}

unsigned threads_from_env() {
  const char* v = std::getenv("SYZYGY_THREADS");
  if (!v) return 1;
  char* end = nullptr;
  long n = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || n < 1) return 1;
  return static_cast<unsigned>(n);
}

namespace {

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  for (auto& th : pool) th.join();
}

struct Analyzed {
  CorpusEntry entry;
  std::optional<Construction<PrimeField>> construction;
  std::optional<VarietyReport> report;
  std::string error;
};

CheckResult run_item(const std::string& check, const std::string& instance, std::uint64_t seed,
                     const std::function<CheckResult()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = fn();
  } catch (const std::exception& ex) {
    r = CheckResult{};
    r.error = ex.what();
    r.pass = false;
  }
  r.check = check;
  if (r.instance.empty()) r.instance = instance;
  r.seed = seed;
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

const std::set<std::string> kCorpusChecks{"alternating-sum", "extremal-characterization", "inner-projection",
                                          "lefschetz", "linear-strand", "quadratic-strand-bound",
                                          "quadric-count", "table-shape", "top-strand-dichotomy",
                                          "almost-minimal-divisor-class", "genus-two-divisor-class"};

unsigned minimum_e(const std::string& check) {
  static const std::set<std::string> three{"extremal-characterization", "almost-minimal-divisor-class",
                                           "genus-two-divisor-class", "broken-divisor", "points-n2p"};
  return three.count(check) ? 3 : 2;
}

// Which corpus entries a check looks at; inapplicable ones are skipped quietly.
bool wants(const std::string& check, const CorpusEntry& e) {
  if (check == "inner-projection") return e.tags.count("projection") > 0;
  if (check == "almost-minimal-divisor-class") return e.tags.count("almost-minimal") > 0;
  if (check == "genus-two-divisor-class") return e.tags.count("genus-two") > 0;
  return true;
}

}  // namespace

std::vector<CheckResult> run_suite(const SuiteConfig& config) {
  const unsigned threads = config.threads ? config.threads : threads_from_env();
  const std::uint64_t seed = config.seed;
  std::vector<CheckResult> results;
  std::vector<std::pair<std::string, std::function<CheckResult()>>> items;
  std::vector<std::string> item_instances;

  bool need_corpus = false;
  for (const auto& c : config.checks) {
    if (std::find(all_checks().begin(), all_checks().end(), c) == all_checks().end())
      throw std::invalid_argument("unknown check: " + c);
    need_corpus = need_corpus || kCorpusChecks.count(c) > 0;
  }

  std::vector<Analyzed> analyzed;
  for (unsigned e = config.e_min; e <= config.e_max; ++e) {
    if (e < 2) continue;
    if (need_corpus)
      for (auto& entry : corpus(e, seed)) analyzed.push_back({std::move(entry), {}, {}, {}});
  }
  parallel_for(analyzed.size(), threads, [&](std::size_t i) {
    auto& a = analyzed[i];
    try {
      a.construction = a.entry.build();
      a.report = analyze(*a.construction, seed, a.entry.integral);
      a.report->instance = a.entry.instance;
    } catch (const std::exception& ex) {
      a.error = ex.what();
    }
  });

  auto add = [&](const std::string& check, const std::string& instance, std::function<CheckResult()> fn) {
    items.push_back({check, std::move(fn)});
    item_instances.push_back(instance);
  };

  for (const auto& check : config.checks) {
    for (unsigned e = config.e_min; e <= config.e_max; ++e) {
      if (e < minimum_e(check)) {
        const std::string msg = "codimension must be >= " + std::to_string(minimum_e(check));
        add(check, "e=" + std::to_string(e), [msg]() -> CheckResult { throw PreconditionFailed(msg); });
        continue;
      }
      if (check == "broken-divisor") {
        add(check, "broken-divisor e=" + std::to_string(e), [e, seed] { return broken_divisor_check(e, seed); });
        continue;
      }
      if (check == "points-n2p") {
        for (unsigned p = 1; p + 2 <= e; ++p)
          add(check, "", [e, p, seed] { return points_n2p_check(e, p, seed); });
        continue;
      }
    }
    if (!kCorpusChecks.count(check)) continue;
    for (const auto& a : analyzed) {
      if (a.entry.e < minimum_e(check) || !wants(check, a.entry)) continue;
      const std::string instance = a.entry.instance;
      if (!a.report) {
        const std::string msg = a.error;
        add(check, instance, [msg]() -> CheckResult { throw std::runtime_error(msg); });
        continue;
      }
      const VarietyReport& r = *a.report;
      const Construction<PrimeField>& c = *a.construction;
      const bool extremal = r.classification == Classification::VMD || r.classification == Classification::DelPezzo;
      if (check == "alternating-sum") add(check, instance, [&r] { return alternating_sum_check(r); });
      if (check == "linear-strand") add(check, instance, [&r] { return linear_strand_check(r); });
      if (check == "quadric-count") add(check, instance, [&r] { return quadric_count_check(r); });
      if (check == "quadratic-strand-bound" && !extremal) add(check, instance, [&r] { return bound_A(r); });
      if (check == "top-strand-dichotomy" && !extremal)
        add(check, instance, [&r] { return dichotomy_beta_e_minus_1(r); });
      if (check == "extremal-characterization") add(check, instance, [&r] { return classify_extremal_B(r); });
      if (check == "table-shape" && (r.classification != Classification::Other || r.degree == r.e + 2))
        add(check, instance, [&r] { return table_shape_check(r); });
      if (check == "lefschetz" && r.n >= 1)
        add(check, instance, [&c, &r, seed] { return lefschetz_check(c, r, seed); });
      if (check == "inner-projection") add(check, instance, [&c, &r, seed] {
          return inner_projection_inequality(c, r, seed);
        });
      if (check == "almost-minimal-divisor-class")
        add(check, instance, [&c, &r, seed] {
          std::vector<unsigned> blocks(static_cast<std::size_t>(r.n - 1), 0);
          blocks.push_back(1);
          blocks.push_back(static_cast<unsigned>(r.e - 1));
          const ScrollSpec y(blocks);
          auto cls = infer_divisor_class(c.ideal, y, seed);
          const auto want = DivisorClass::hf(1, 2);
          std::ostringstream expected, actual;
          expected << "on " << y.to_string() << " class " << want.to_string() << ", d=" << r.e + 2 << ", depth "
                   << r.n << ", a=0";
          actual << "class " << cls.to_string() << ", d=" << r.degree << ", depth " << r.depth << ", a="
                 << index_string(r.gl_index);
          return result("almost-minimal-divisor-class", r, expected.str(), actual.str(),
                        cls == want && r.degree == r.e + 2 && r.depth == r.n && r.gl_index == 0);
        });
      if (check == "genus-two-divisor-class")
        add(check, instance, [&c, &r, seed] {
          const unsigned e = static_cast<unsigned>(r.e);
          const ScrollSpec y({e / 2, e - e / 2});
          auto cls = infer_divisor_class(c.ideal, y, seed);
          const auto want = DivisorClass::hf(2, 3 - r.e);
          std::ostringstream expected, actual;
          expected << "on " << y.to_string() << " class " << want.to_string() << ", ACM, d=" << r.e + 3 << ", genus 2";
          actual << "class " << cls.to_string() << ", " << (r.acm ? "ACM" : "not ACM") << ", d=" << r.degree
                 << ", genus " << (r.sectional_genus ? std::to_string(*r.sectional_genus) : "?");
          return result("genus-two-divisor-class", r, expected.str(), actual.str(),
                        cls == want && r.acm && r.degree == r.e + 3 && r.sectional_genus == 2);
        });
    }
  }

  results.resize(items.size());
  parallel_for(items.size(), threads, [&](std::size_t i) {
    results[i] = run_item(items[i].first, item_instances[i], seed, items[i].second);
  });
  std::stable_sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) {
    return std::tie(a.check, a.instance) < std::tie(b.check, b.instance);
  });
  return results;
}

template VarietyReport analyze(const Construction<PrimeField>&, std::uint64_t, bool);
template VarietyReport analyze(const Construction<RationalField>&, std::uint64_t, bool);
template CheckResult inner_projection_inequality(const Construction<PrimeField>&, const VarietyReport&,
                                                 std::uint64_t);
template CheckResult lefschetz_check(const Construction<PrimeField>&, const VarietyReport&, std::uint64_t);
template DivisorClass infer_divisor_class(const Ideal<PrimeField>&, const ScrollSpec&, std::uint64_t);
template DivisorClass infer_divisor_class(const Ideal<RationalField>&, const ScrollSpec&, std::uint64_t);

}  // namespace syzygy
