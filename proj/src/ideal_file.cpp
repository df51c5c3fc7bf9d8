#include "modgin/ideal_file.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace modgin {

namespace {

struct Line {
  std::size_t number;
  std::size_t offset;  // column of text[0], 0-based
  std::string_view text;
};

std::string_view trim(std::string_view s, std::size_t& offset) {
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  offset += b;
  return s.substr(b, e - b);
}

std::vector<Line> meaningful_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t offset = 0;
    line = trim(line, offset);
    if (!line.empty()) out.push_back({number, offset, line});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

[[noreturn]] void fail(const Line& line, std::size_t col, const std::string& what) {
  throw SyntaxError(what, line.number, line.offset + col + 1);
}

// Whitespace-separated words with their columns.
std::vector<std::pair<std::string_view, std::size_t>> words(std::string_view s) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t b = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) && s[i] != '=') ++i;
    if (i > b) out.push_back({s.substr(b, i - b), b});
    if (i < s.size() && s[i] == '=') {
      out.push_back({s.substr(i, 1), i});
      ++i;
    }
  }
  return out;
}

template <class T>
T number(const Line& line, std::string_view w, std::size_t col) {
  T value{};
  auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
  if (ec != std::errc() || ptr != w.data() + w.size()) fail(line, col, "expected a non-negative integer, got '" + std::string(w) + "'");
  return value;
}

// "key = v1 v2 ..." -> values; checks the key and the '='.
std::vector<std::pair<std::string_view, std::size_t>> keyed(const Line& line, std::string_view key) {
  auto ws = words(line.text);
  if (ws.empty() || ws[0].first != key) fail(line, 0, "expected '" + std::string(key) + " ='");
  if (ws.size() < 2 || ws[1].first != "=") fail(line, ws[0].second + key.size(), "expected '='");
  ws.erase(ws.begin(), ws.begin() + 2);
  return ws;
}

}  // namespace

IdealFile parse_ideal_file(std::string_view text) {
  const auto lines = meaningful_lines(text);
  std::size_t at = 0;
  auto next = [&](const char* what) -> const Line& {
    if (at >= lines.size()) {
      std::size_t last = lines.empty() ? 1 : lines.back().number + 1;
      throw SyntaxError(std::string("missing ") + what, last, 1);
    }
    return lines[at++];
  };

  const Line& pline = next("'p =' line");
  auto pv = keyed(pline, "p");
  if (pv.size() != 1) fail(pline, pline.text.size(), "expected one value for p");
  const auto p = number<std::uint32_t>(pline, pv[0].first, pv[0].second);
  if (!is_prime(p)) throw InvalidCharacteristic("line " + std::to_string(pline.number) + ": " + std::to_string(p) + " is not prime");

  std::optional<ExtensionSpec> ext;
  FieldPtr field = Field::prime(p);
  if (at < lines.size() && lines[at].text.rfind("ext", 0) == 0) {
    const Line& eline = next("ext line");
    auto ev = keyed(eline, "ext");
    if (ev.size() != 4 || ev[1].first != "seed" || ev[2].first != "=")
      fail(eline, 0, "expected 'ext = <k> seed = <s>'");
    ExtensionSpec spec{number<std::uint32_t>(eline, ev[0].first, ev[0].second),
                       number<std::uint64_t>(eline, ev[3].first, ev[3].second)};
    if (spec.degree == 0) fail(eline, ev[0].second, "extension degree must be positive");
    try {
      field = Field::extension(p, spec.degree, spec.seed);
    } catch (const Error& e) {
      fail(eline, ev[0].second, e.what());
    }
    ext = spec;
  }

  const Line& vline = next("'vars =' line");
  auto vv = keyed(vline, "vars");
  if (vv.empty()) fail(vline, vline.text.size(), "no variables");
  std::vector<std::string> names;
  for (const auto& [w, col] : vv) {
    if (!std::isalpha(static_cast<unsigned char>(w[0])) && w[0] != '_') fail(vline, col, "bad variable name '" + std::string(w) + "'");
    for (char c : w)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') fail(vline, col, "bad variable name '" + std::string(w) + "'");
    for (const auto& n : names)
      if (n == w) fail(vline, col, "duplicate variable '" + std::string(w) + "'");
    names.emplace_back(w);
  }
  if (names.size() > kMaxVars) fail(vline, 0, "at most " + std::to_string(kMaxVars) + " variables");
  auto ring = RingContext::make(names, field);

  const Line& oline = next("'order =' line");
  auto ov = keyed(oline, "order");
  if (ov.empty()) fail(oline, oline.text.size(), "missing order kind");
  OrderKind kind;
  if (ov[0].first == "lex")
    kind = OrderKind::lex;
  else if (ov[0].first == "grevlex")
    kind = OrderKind::grevlex;
  else
    fail(oline, ov[0].second, "order must be lex or grevlex");
  Permutation perm = Permutation::identity(names.size());
  if (ov.size() > 1) {
    if (ov[1].first != "perm" || ov.size() < 3 || ov[2].first != "=") fail(oline, ov[1].second, "expected 'perm ='");
    std::vector<std::size_t> images;
    for (std::size_t i = 3; i < ov.size(); ++i) images.push_back(number<std::size_t>(oline, ov[i].first, ov[i].second));
    if (images.size() != names.size()) fail(oline, ov[1].second, "perm needs one entry per variable");
    try {
      perm = Permutation::from_one_based(images);
    } catch (const InvalidPermutation& e) {
      fail(oline, ov[1].second, e.what());
    }
  }

  const Line& gline = next("'gens:' line");
  if (gline.text != "gens:") fail(gline, 0, "expected 'gens:'");

  std::vector<Polynomial> gens;
  while (at < lines.size()) {
    const Line& l = lines[at++];
    Polynomial f(ring);
    try {
      f = parse_polynomial(l.text, ring, l.number);
    } catch (const SyntaxError& e) {
      throw SyntaxError(std::string(e.what()).substr(std::string(e.what()).find(": ") + 2), l.number,
                        l.offset + e.column());
    }
    if (f.is_zero()) fail(l, 0, "generator is zero");
    gens.push_back(std::move(f));
  }
  return IdealFile{ext, MonomialOrder(kind, perm), IdealPresentation(ring, std::move(gens))};
}

std::string format_ideal_file(const IdealPresentation& ideal, const MonomialOrder& order,
                              const std::optional<ExtensionSpec>& ext) {
  const auto& ring = ideal.ring();
  std::string out = "p = " + std::to_string(ring->characteristic()) + "\n";
  if (ext) out += "ext = " + std::to_string(ext->degree) + " seed = " + std::to_string(ext->seed) + "\n";
  out += "vars =";
  for (const auto& n : ring->names()) out += " " + n;
  out += "\norder = " + order.name() + "\ngens:\n";
  for (const auto& g : ideal.generators()) out += g.to_string(order) + "\n";
  return out;
}

}  // namespace modgin
