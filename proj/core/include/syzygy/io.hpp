// Plain-text ideal files.
//
//   ring <N> over <Q | prime>
//   order <grevlex | lex>          (optional)
//   vars a,b,c                     (optional; default z0..z{N-1})
//   # key: value                   (metadata / comments, anywhere)
//   <one generator per line>
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "syzygy/groebner.hpp"

namespace syzygy {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

struct IdealFile {
  FieldSpec field;
  MonomialOrder order = MonomialOrder::grevlex();
  std::vector<std::string> names;
  std::vector<std::string> generators;
  std::vector<std::size_t> generator_lines;
  std::vector<std::pair<std::string, std::string>> metadata;

  std::size_t nvars() const { return names.size(); }
  std::optional<std::string> meta(std::string_view key) const;
};

/// Parses and validates a file: header, names and every generator (over the
/// declared field). Errors carry line and column.
IdealFile parse_ideal_file(std::string_view text);

template <class F>
RingPtr<F> ring_of(const IdealFile& file, F field);

/// Generators of `file` as an ideal of `ring` (which must have file.nvars() variables).
template <class F>
Ideal<F> ideal_of(const IdealFile& file, const RingPtr<F>& ring);

/// Parses one polynomial; `line` is used for error positions only.
template <class F>
Polynomial<F> parse_polynomial(const RingPtr<F>& ring, std::string_view text, std::size_t line = 1);

template <class F>
std::string render_ideal_file(const Ideal<F>& ideal,
                              const std::vector<std::pair<std::string, std::string>>& metadata = {});

}  // namespace syzygy
