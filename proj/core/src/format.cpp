#include "gensig/format.hpp"

#include <cctype>
#include <istream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace gensig {

namespace {

using json = nlohmann::json;

std::size_t skip_spaces(std::string_view s, std::size_t pos) {
  while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  return pos;
}

// parses "n=<int>" and returns (n, position after it)
std::pair<int, std::size_t> parse_header(std::string_view s) {
  std::size_t pos = skip_spaces(s, 0);
  if (s.substr(pos, 2) != "n=") throw FormatError("expected \"n=\"", pos);
  pos += 2;
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) throw FormatError("expected element count after \"n=\"", pos);
  int n = 0;
  for (std::size_t k = start; k < pos; ++k) n = n * 10 + (s[k] - '0');
  if (n < 3 || n > kMaxElements)
    throw FormatError("element count out of range [3," +
                          std::to_string(kMaxElements) + "]",
                      start);
  return {n, pos};
}

std::array<int, 3> parse_triple_token(std::string_view tok, int n,
                                      std::size_t pos) {
  std::array<int, 3> t{};
  if (n <= 9) {
    if (tok.size() != 3) throw FormatError("triple token must be 3 digits", pos);
    for (int k = 0; k < 3; ++k) {
      if (!std::isdigit(static_cast<unsigned char>(tok[k])))
        throw FormatError("triple token must be 3 digits", pos);
      t[k] = tok[k] - '0';
    }
  } else {
    int k = 0;
    std::size_t i = 0;
    while (k < 3) {
      std::size_t start = i;
      while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
      if (i == start) throw FormatError("expected digit in i-j-k token", pos);
      int v = 0;
      for (std::size_t m = start; m < i; ++m) v = v * 10 + (tok[m] - '0');
      t[k++] = v;
      if (k < 3) {
        if (i >= tok.size() || tok[i] != '-')
          throw FormatError("expected '-' in i-j-k token", pos + i);
        ++i;
      }
    }
    if (i != tok.size()) throw FormatError("trailing characters in triple token", pos + i);
  }
  if (!(1 <= t[0] && t[0] < t[1] && t[1] < t[2] && t[2] <= n))
    throw FormatError("triple must be sorted and within 1..n", pos);
  return t;
}

Signotope from_plus_triples(int n, const std::vector<std::array<int, 3>>& plus,
                            std::size_t err_pos) {
  const TripleTable& t = triple_table(n);
  std::vector<Sign> signs(t.triple_count, Sign::Minus);
  for (const auto& tr : plus) signs[triple_rank(n, tr[0], tr[1], tr[2])] = Sign::Plus;
  auto r = Signotope::validate(n, signs);
  if (auto* v = std::get_if<Violation>(&r)) {
    std::string msg = "sign pattern violates the 4-subset condition on {";
    for (int k = 0; k < 4; ++k)
      msg += std::to_string(v->subset[k]) + (k < 3 ? "," : "}");
    throw FormatError(msg, err_pos);
  }
  return std::get<Signotope>(r);
}

}  // namespace

std::string serialize_triples(const Signotope& s) {
  const TripleTable& t = triple_table(s.n());
  std::string out = "n=" + std::to_string(s.n()) + " {";
  bool sep = false;
  for (int r = 0; r < t.triple_count; ++r) {
    if (s.stored(r) != Sign::Plus) continue;
    if (sep) out += ',';
    sep = true;
    const auto [a, b, c] = t.triples[r];
    if (s.n() <= 9)
      out += std::to_string(a) + std::to_string(b) + std::to_string(c);
    else
      out += std::to_string(a) + "-" + std::to_string(b) + "-" + std::to_string(c);
  }
  out += '}';
  return out;
}

std::string serialize_signs(const Signotope& s) {
  std::string out = "n=" + std::to_string(s.n()) + " ";
  for (int r = 0; r < s.triple_count(); ++r) out += to_char(s.stored(r));
  return out;
}

Signotope parse_signotope(std::string_view text) {
  auto [n, pos] = parse_header(text);
  pos = skip_spaces(text, pos);
  if (pos >= text.size()) throw FormatError("expected sign data after count", pos);

  if (text[pos] == '{') {
    ++pos;
    std::vector<std::array<int, 3>> plus;
    std::vector<bool> seen(triple_table(n).triple_count, false);
    pos = skip_spaces(text, pos);
    if (pos < text.size() && text[pos] != '}') {
      for (;;) {
        pos = skip_spaces(text, pos);
        std::size_t start = pos;
        while (pos < text.size() && text[pos] != ',' && text[pos] != '}') ++pos;
        std::size_t end = pos;
        while (end > start && (text[end - 1] == ' ' || text[end - 1] == '\t')) --end;
        if (end == start) throw FormatError("empty triple token", start);
        const auto tr = parse_triple_token(text.substr(start, end - start), n, start);
        const int rank = triple_rank(n, tr[0], tr[1], tr[2]);
        if (seen[rank]) throw FormatError("duplicate triple", start);
        seen[rank] = true;
        plus.push_back(tr);
        if (pos >= text.size()) throw FormatError("unterminated triple set", pos);
        if (text[pos] == '}') break;
        ++pos;  // ','
      }
    }
    if (pos >= text.size() || text[pos] != '}')
      throw FormatError("expected '}'", pos);
    ++pos;
    if (skip_spaces(text, pos) != text.size())
      throw FormatError("trailing characters", pos);
    return from_plus_triples(n, plus, 0);
  }

  // format B
  const std::size_t start = pos;
  std::vector<Sign> signs;
  while (pos < text.size() && (text[pos] == '+' || text[pos] == '-'))
    signs.push_back(sign_from_char(text[pos++]));
  if (skip_spaces(text, pos) != text.size())
    throw FormatError("unexpected character in sign string", pos);
  if (static_cast<int>(signs.size()) != triple_table(n).triple_count)
    throw FormatError("sign string must have length C(n,3) = " +
                          std::to_string(triple_table(n).triple_count),
                      start);
  auto r = Signotope::validate(n, signs);
  if (auto* v = std::get_if<Violation>(&r)) {
    std::string msg = "sign pattern violates the 4-subset condition on {";
    for (int k = 0; k < 4; ++k)
      msg += std::to_string(v->subset[k]) + (k < 3 ? "," : "}");
    throw FormatError(msg, start);
  }
  return std::get<Signotope>(r);
}

std::string to_json_triples(const Signotope& s) {
  const TripleTable& t = triple_table(s.n());
  json plus = json::array();
  for (int r = 0; r < t.triple_count; ++r)
    if (s.stored(r) == Sign::Plus) plus.push_back(t.triples[r]);
  return json{{"n", s.n()}, {"plus_triples", plus}}.dump();
}

std::string to_json_signs(const Signotope& s) {
  std::string signs;
  for (int r = 0; r < s.triple_count(); ++r) signs += to_char(s.stored(r));
  return json{{"n", s.n()}, {"signs", signs}}.dump();
}

Signotope parse_signotope_json(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw FormatError(e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw FormatError("expected object with integer field \"n\"", 0);
  const int n = j["n"].get<int>();
  if (n < 3 || n > kMaxElements) throw FormatError("element count out of range", 0);
  if (j.contains("plus_triples")) {
    std::vector<std::array<int, 3>> plus;
    std::vector<bool> seen(triple_table(n).triple_count, false);
    for (const auto& e : j["plus_triples"]) {
      if (!e.is_array() || e.size() != 3)
        throw FormatError("plus_triples entries must be [i,j,k]", 0);
      std::array<int, 3> tr{e[0].get<int>(), e[1].get<int>(), e[2].get<int>()};
      if (!(1 <= tr[0] && tr[0] < tr[1] && tr[1] < tr[2] && tr[2] <= n))
        throw FormatError("triple must be sorted and within 1..n", 0);
      const int rank = triple_rank(n, tr[0], tr[1], tr[2]);
      if (seen[rank]) throw FormatError("duplicate triple", 0);
      seen[rank] = true;
      plus.push_back(tr);
    }
    return from_plus_triples(n, plus, 0);
  }
  if (j.contains("signs")) {
    const std::string str = j["signs"].get<std::string>();
    return parse_signotope("n=" + std::to_string(n) + " " + str);
  }
  throw FormatError("expected \"plus_triples\" or \"signs\"", 0);
}

std::vector<Signotope> read_signotopes(std::istream& in) {
  std::vector<Signotope> out;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t p = line.find_first_not_of(" \t\r");
    if (p == std::string::npos || line[p] == '#') continue;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    out.push_back(parse_signotope(line));
  }
  return out;
}

}  // namespace gensig
