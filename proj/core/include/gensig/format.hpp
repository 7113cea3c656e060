#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gensig/signotope.hpp"

namespace gensig {

// Parse failure with the byte offset of the offending token.
class FormatError : public std::runtime_error {
 public:
  FormatError(std::string msg, std::size_t position)
      : std::runtime_error(std::move(msg)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_ = 0;
};

// Text format A (plus-triples): "n=<int> {<t1>,<t2>,...}". Each token is the
// concatenated digits of a sorted triple for n <= 9 (e.g. "235") and
// dash-separated "i-j-k" for n > 9. Absent triples are Minus.
// Text format B (sign string): "n=<int> <string over {+,-}>" of length
// C(n,3) in lex triple order.
std::string serialize_triples(const Signotope& s);
std::string serialize_signs(const Signotope& s);

// Accepts either format (dispatch on the first character after "n=<int> ").
Signotope parse_signotope(std::string_view text);

// JSON mirrors: {"n":N,"plus_triples":[[i,j,k],...]} and {"n":N,"signs":"..."}.
std::string to_json_triples(const Signotope& s);
std::string to_json_signs(const Signotope& s);
Signotope parse_signotope_json(std::string_view json_text);

// Reads every object from a stream: one signotope per line, blank lines and
// lines starting with '#' skipped.
std::vector<Signotope> read_signotopes(std::istream& in);

}  // namespace gensig
