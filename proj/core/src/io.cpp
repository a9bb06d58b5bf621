#include "syzygy/io.hpp"

#include <cctype>
#include <sstream>
#include <unordered_map>

namespace syzygy {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

std::optional<std::string> IdealFile::meta(std::string_view key) const {
  for (const auto& [k, v] : metadata)
    if (k == key) return v;
  return std::nullopt;
}

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

template <class F>
class PolyParser {
 public:
  PolyParser(const RingPtr<F>& ring, std::string_view text, std::size_t line)
      : ring_(ring), text_(text), line_(line) {
    for (std::size_t i = 0; i < ring->nvars(); ++i) index_[ring->names()[i]] = i;
    // x0, x1, ... are accepted as aliases of the default names z0, z1, ...
    for (std::size_t i = 0; i < ring->nvars(); ++i)
      if (ring->names()[i] == "z" + std::to_string(i)) index_.emplace("x" + std::to_string(i), i);
  }

  Polynomial<F> parse() {
    skip();
    if (pos_ == text_.size()) fail("empty expression");
    auto p = expr();
    skip();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, pos_ + 1, msg); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial<F> expr() {
    Polynomial<F> acc(ring_);
    bool first = true;
    for (;;) {
      bool negative = false;
      if (accept('-'))
        negative = true;
      else if (accept('+'))
        ;
      else if (!first)
        break;
      auto t = term();
      acc = negative ? acc - t : acc + t;
      first = false;
      skip();
      if (pos_ == text_.size() || (text_[pos_] != '+' && text_[pos_] != '-')) break;
    }
    return acc;
  }

  Polynomial<F> term() {
    auto acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial<F> factor() {
    auto base = primary();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      mpz_class e = integer();
      if (e > 255) {
        pos_ = start;
        fail("exponent too large");
      }
      unsigned n = static_cast<unsigned>(e.get_ui());
      auto result = Polynomial<F>::constant(ring_, ring_->field().one());
      for (unsigned i = 0; i < n; ++i) result = result * base;
      return result;
    }
    return base;
  }

  mpz_class integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial<F> primary() {
    skip();
    if (pos_ == text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      mpz_class num = integer();
      mpz_class den = 1;
      if (accept('/')) {
        den = integer();
        if (den == 0) {
          pos_ = start;
          fail("zero denominator");
        }
      }
      try {
        return Polynomial<F>::constant(ring_, ring_->field().from_ratio(num, den));
      } catch (const DivisionByZero&) {
        pos_ = start;
        fail("denominator vanishes in the coefficient field");
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto it = index_.find(name);
      if (it == index_.end()) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial<F>::variable(ring_, it->second);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const RingPtr<F>& ring_;
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
  std::unordered_map<std::string, std::size_t> index_;
};

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto l = text.substr(start, end - start);
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    lines.push_back(l);
    start = end + 1;
  }
  return lines;
}

template <class F>
void check_generators(const IdealFile& file, F field) {
  auto ring = ring_of(file, std::move(field));
  ideal_of(file, ring);
}

}  // namespace

IdealFile parse_ideal_file(std::string_view text) {
  IdealFile file;
  auto lines = split_lines(text);
  bool have_ring = false, have_order = false, have_vars = false, seen_generator = false;
  std::size_t nvars = 0;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    std::size_t lineno = li + 1;
    std::string line = trim(lines[li]);
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string body = trim(std::string_view(line).substr(1));
      auto colon = body.find(':');
      if (colon != std::string::npos && is_identifier(trim(body.substr(0, colon))))
        file.metadata.emplace_back(trim(body.substr(0, colon)), trim(body.substr(colon + 1)));
      continue;
    }
    std::istringstream words(line);
    std::string head;
    words >> head;
    if (!have_ring) {
      std::string n, over, fld, extra;
      if (head != "ring" || !(words >> n >> over >> fld) || over != "over" || (words >> extra))
        throw ParseError(lineno, 1, "expected 'ring <N> over <Q|prime>'");
      try {
        std::size_t used = 0;
        long v = std::stol(n, &used);
        if (used != n.size() || v < 1 || v > static_cast<long>(kMaxVars)) throw std::out_of_range(n);
        nvars = static_cast<std::size_t>(v);
      } catch (const std::exception&) {
        throw ParseError(lineno, line.find(n) + 1, "number of variables must be in 1..32");
      }
      if (fld == "Q" || fld == "QQ") {
        file.field = FieldSpec::rationals();
      } else {
        std::size_t used = 0;
        unsigned long p = 0;
        try {
          p = std::stoul(fld, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != fld.size() || p >= (1ul << 31) || !is_prime_number(p))
          throw ParseError(lineno, line.rfind(fld) + 1, "field must be Q or a prime below 2^31");
        file.field = FieldSpec::prime_field(static_cast<std::uint32_t>(p));
      }
      have_ring = true;
      continue;
    }
    if (!seen_generator && head == "order") {
      std::string o, extra;
      if (have_order || !(words >> o) || (words >> extra) || (o != "grevlex" && o != "lex"))
        throw ParseError(lineno, 1, "expected 'order grevlex' or 'order lex'");
      file.order = o == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex();
      have_order = true;
      continue;
    }
    if (!seen_generator && head == "vars") {
      if (have_vars) throw ParseError(lineno, 1, "duplicate vars line");
      std::string rest = trim(std::string_view(line).substr(4));
      std::vector<std::string> names;
      std::size_t start = 0;
      while (start <= rest.size()) {
        std::size_t comma = rest.find(',', start);
        if (comma == std::string::npos) comma = rest.size();
        std::string name = trim(std::string_view(rest).substr(start, comma - start));
        if (!is_identifier(name))
          throw ParseError(lineno, 6 + start, "invalid variable name '" + name + "'");
        for (const auto& other : names)
          if (other == name) throw ParseError(lineno, 6 + start, "duplicate variable '" + name + "'");
        names.push_back(name);
        start = comma + 1;
      }
      if (names.size() != nvars)
        throw ParseError(lineno, 1, "expected " + std::to_string(nvars) + " variable names");
      file.names = std::move(names);
      have_vars = true;
      continue;
    }
    seen_generator = true;
    // keep the raw line so that columns in later errors match the file
    file.generators.emplace_back(lines[li]);
    file.generator_lines.push_back(lineno);
  }
  if (!have_ring) throw ParseError(1, 1, "missing 'ring' header");
  if (file.names.empty())
    for (std::size_t i = 0; i < nvars; ++i) file.names.push_back("z" + std::to_string(i));
  if (file.field.is_prime())
    check_generators(file, PrimeField(file.field.prime));
  else
    check_generators(file, RationalField());
  return file;
}

template <class F>
RingPtr<F> ring_of(const IdealFile& file, F field) {
  return make_ring(std::move(field), file.nvars(), file.order, file.names);
}

template <class F>
Ideal<F> ideal_of(const IdealFile& file, const RingPtr<F>& ring) {
  if (ring->nvars() != file.nvars()) throw std::invalid_argument("ring does not match ideal file");
  std::vector<Polynomial<F>> gens;
  for (std::size_t i = 0; i < file.generators.size(); ++i) {
    auto g = parse_polynomial(ring, file.generators[i], file.generator_lines[i]);
    if (!g.is_homogeneous())
      throw ParseError(file.generator_lines[i], 1,
                       "generator is not homogeneous: " + trim(file.generators[i]));
    gens.push_back(std::move(g));
  }
  return Ideal<F>(ring, std::move(gens));
}

template <class F>
Polynomial<F> parse_polynomial(const RingPtr<F>& ring, std::string_view text, std::size_t line) {
  return PolyParser<F>(ring, text, line).parse();
}

template <class F>
std::string render_ideal_file(const Ideal<F>& ideal,
                              const std::vector<std::pair<std::string, std::string>>& metadata) {
  const auto& ring = *ideal.ring();
  std::ostringstream out;
  out << "ring " << ring.nvars() << " over " << ring.field().spec().to_string() << "\n";
  if (ring.order().kind() == MonomialOrder::Kind::Lex) out << "order lex\n";
  bool default_names = true;
  for (std::size_t i = 0; i < ring.nvars(); ++i)
    default_names = default_names && ring.names()[i] == "z" + std::to_string(i);
  if (!default_names) {
    out << "vars ";
    for (std::size_t i = 0; i < ring.nvars(); ++i) out << (i ? "," : "") << ring.names()[i];
    out << "\n";
  }
  for (const auto& [k, v] : metadata) out << "# " << k << ": " << v << "\n";
  for (const auto& g : ideal.generators()) out << g.to_string() << "\n";
  return out.str();
}

template RingPtr<PrimeField> ring_of(const IdealFile&, PrimeField);
template RingPtr<RationalField> ring_of(const IdealFile&, RationalField);
template Ideal<PrimeField> ideal_of(const IdealFile&, const RingPtr<PrimeField>&);
template Ideal<RationalField> ideal_of(const IdealFile&, const RingPtr<RationalField>&);
template Polynomial<PrimeField> parse_polynomial(const RingPtr<PrimeField>&, std::string_view,
                                                 std::size_t);
template Polynomial<RationalField> parse_polynomial(const RingPtr<RationalField>&,
                                                    std::string_view, std::size_t);
template std::string render_ideal_file(const Ideal<PrimeField>&,
                                       const std::vector<std::pair<std::string, std::string>>&);
template std::string render_ideal_file(const Ideal<RationalField>&,
                                       const std::vector<std::pair<std::string, std::string>>&);

}  // namespace syzygy
