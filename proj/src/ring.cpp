#include "modgin/ring.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace modgin {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::size_t nvars) {
  if (nvars > kMaxVars)
    throw InvalidArgument("at most " + std::to_string(kMaxVars) + " variables are supported");
  n_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const unsigned> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned exponent) {
  if (i >= n_) throw InvalidArgument("variable index out of range");
  if (exponent > UINT16_MAX) throw DegreeOverflow("exponent exceeds 65535");
  deg_ = deg_ - e_[i] + exponent;
  e_[i] = static_cast<std::uint16_t>(exponent);
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (deg_ > other.deg_) return false;
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] && other.e_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < n_; ++i) {
    unsigned e = unsigned{e_[i]} + other.e_[i];
    if (e > UINT16_MAX) throw DegreeOverflow("exponent exceeds 65535");
    r.e_[i] = static_cast<std::uint16_t>(e);
  }
  r.deg_ = deg_ + other.deg_;
  return r;
}

Monomial Monomial::cofactor_in(const Monomial& other) const {
  Monomial r = other;
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = static_cast<std::uint16_t>(other.e_[i] - e_[i]);
  r.deg_ = other.deg_ - deg_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r = *this;
  r.deg_ = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    r.e_[i] = std::max(e_[i], other.e_[i]);
    r.deg_ += r.e_[i];
  }
  return r;
}

std::uint32_t Monomial::support_mask() const noexcept {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i]) mask |= 1u << i;
  return mask;
}

std::size_t Monomial::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < n_; ++i) {
    h ^= e_[i];
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  Monomial cur(nvars);
  // Depth-first, largest exponent of x1 first, which yields lex-decreasing output.
  auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var + 1 == nvars) {
      cur.set(var, left);
      out.push_back(cur);
      cur.set(var, 0);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      cur.set(var, e);
      self(self, var + 1, left - e);
    }
    cur.set(var, 0);
  };
  rec(rec, 0, degree);
  return out;
}

// ------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) throw InvalidPermutation("not a bijection: " + to_string());
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return Permutation(std::move(v));
}

Permutation Permutation::from_one_based(const std::vector<std::size_t>& images) {
  std::vector<std::size_t> v;
  v.reserve(images.size());
  for (auto i : images) {
    if (i == 0) throw InvalidPermutation("permutation entries are one-based");
    v.push_back(i - 1);
  }
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> v(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) v[images_[i]] = i;
  return Permutation(std::move(v));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw InvalidPermutation("permutation sizes differ");
  std::vector<std::size_t> v(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) v[i] = images_[other(i)];
  return Permutation(std::move(v));
}

Monomial Permutation::apply(const Monomial& m) const {
  if (m.size() != size()) throw InvalidPermutation("permutation size does not match the ring");
  Monomial r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r.set(images_[i], m[i]);
  return r;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(images_[i] + 1);
  }
  return out;
}

// ----------------------------------------------------------- MonomialOrder

MonomialOrder::MonomialOrder(OrderKind kind, std::size_t nvars)
    : MonomialOrder(kind, Permutation::identity(nvars)) {}

MonomialOrder::MonomialOrder(OrderKind kind, Permutation perm)
    : kind_(kind), perm_(std::move(perm)), rank_(perm_.size()), n_(perm_.size()) {
  for (std::size_t r = 0; r < n_; ++r) rank_[perm_(r)] = r;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != n_ || b.size() != n_) throw RingMismatch("monomial size does not match the order");
  return cmp(a, b);
}

MonomialOrder MonomialOrder::permuted(const Permutation& pi) const {
  return MonomialOrder(kind_, pi.compose(perm_));
}

std::string MonomialOrder::name() const {
  std::string out = kind_ == OrderKind::lex ? "lex" : "grevlex";
  if (!perm_.is_identity()) out += " perm = " + perm_.to_string();
  return out;
}

// ------------------------------------------------------------- RingContext

RingContext::RingContext(std::vector<std::string> names, FieldPtr field, std::uint32_t max_degree)
    : names_(std::move(names)), field_(std::move(field)), max_degree_(max_degree) {}

RingPtr RingContext::make(std::vector<std::string> names, FieldPtr field, std::uint32_t max_degree) {
  if (names.empty()) throw InvalidArgument("a ring needs at least one variable");
  if (names.size() > kMaxVars)
    throw InvalidArgument("at most " + std::to_string(kMaxVars) + " variables are supported");
  if (!field) throw InvalidArgument("ring without a field");
  if (max_degree > UINT16_MAX) throw InvalidArgument("max degree above 65535");
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto& s = names[i];
    bool ok = !s.empty() && std::isalpha(static_cast<unsigned char>(s[0]));
    for (char c : s) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
    if (!ok) throw InvalidArgument("invalid variable name '" + s + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names[j] == s) throw InvalidArgument("duplicate variable name '" + s + "'");
  }
  return std::make_shared<const RingContext>(std::move(names), std::move(field), max_degree);
}

RingPtr RingContext::standard(std::size_t nvars, FieldPtr field, std::string_view prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= nvars; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return make(std::move(names), std::move(field));
}

std::optional<std::size_t> RingContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

RingPtr RingContext::with_field(FieldPtr field) const {
  if (field->characteristic() != field_->characteristic())
    throw SpecMismatch("base change must preserve the characteristic");
  return make(names_, std::move(field), max_degree_);
}

bool RingContext::same_as(const RingContext& other) const noexcept {
  return this == &other || (names_ == other.names_ && field_->same_as(*other.field_));
}

std::string RingContext::monomial_to_string(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!out.empty()) out += '*';
    out += names_[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

// -------------------------------------------------------------- Polynomial

namespace {

bool term_desc(const Term& a, const Term& b) { return a.monomial > b.monomial; }

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw InvalidArgument("polynomial without a ring");
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
    : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t value) {
  Polynomial p(std::move(ring));
  auto c = p.field().from_int(value);
  if (c != Field::kZero) p.terms_.push_back({Monomial(p.ring_->nvars()), c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  auto n = ring->nvars();
  if (index >= n) throw InvalidArgument("variable index out of range");
  return from_monomial(std::move(ring), Monomial::variable(n, index));
}

Polynomial Polynomial::from_monomial(RingPtr ring, const Monomial& m) {
  auto one = ring->field()->one();
  return from_monomial(std::move(ring), m, one);
}

Polynomial Polynomial::from_monomial(RingPtr ring, const Monomial& m, Field::Elem coeff) {
  if (m.size() != ring->nvars()) throw RingMismatch("monomial size does not match the ring");
  if (m.degree() > ring->max_degree()) throw DegreeOverflow("degree exceeds the ring's max degree");
  Polynomial p(std::move(ring));
  if (coeff != Field::kZero) p.terms_.push_back({m, coeff});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& f = *ring->field();
  for (const auto& t : terms) {
    if (t.monomial.size() != ring->nvars()) throw RingMismatch("monomial size does not match the ring");
    if (t.monomial.degree() > ring->max_degree()) throw DegreeOverflow("degree exceeds the ring's max degree");
  }
  std::sort(terms.begin(), terms.end(), term_desc);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff = f.add(out.back().coeff, t.coeff);
      if (out.back().coeff == Field::kZero) out.pop_back();
    } else if (t.coeff != Field::kZero) {
      out.push_back(t);
    }
  }
  return Polynomial(std::move(ring), std::move(out));
}

std::uint32_t Polynomial::total_degree() const noexcept {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::is_homogeneous() const noexcept {
  for (const auto& t : terms_)
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  return true;
}

FieldElement Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.monomial > key; });
  if (it != terms_.end() && it->monomial == m) return {ring_->field(), it->coeff};
  return {ring_->field(), Field::kZero};
}

std::pair<Monomial, FieldElement> Polynomial::leading_term(const MonomialOrder& ord) const {
  if (terms_.empty()) throw ZeroPolynomial("leading term of the zero polynomial");
  if (ord.size() != ring_->nvars()) throw RingMismatch("order size does not match the ring");
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (ord.cmp(t.monomial, best->monomial) > 0) best = &t;
  return {best->monomial, FieldElement(ring_->field(), best->coeff)};
}

Monomial Polynomial::leading_monomial(const MonomialOrder& ord) const { return leading_term(ord).first; }

void Polynomial::require_same_ring(const Polynomial& o) const {
  if (ring_ != o.ring_ && !ring_->same_as(*o.ring_)) throw RingMismatch("polynomials from different rings");
}

Polynomial add_sorted(const Polynomial& a, const Polynomial& b, bool subtract) {
  a.require_same_ring(b);
  const auto& f = a.field();
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].monomial > b.terms_[j].monomial)) {
      out.push_back(a.terms_[i++]);
    } else {
      Term t = b.terms_[j++];
      if (subtract) t.coeff = f.neg(t.coeff);
      if (i < a.terms_.size() && a.terms_[i].monomial == t.monomial) {
        t.coeff = f.add(a.terms_[i++].coeff, t.coeff);
        if (t.coeff == Field::kZero) continue;
      }
      out.push_back(t);
    }
  }
  return Polynomial(a.ring_, std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& o) const { return add_sorted(*this, o, false); }
Polynomial Polynomial::operator-(const Polynomial& o) const { return add_sorted(*this, o, true); }

Polynomial Polynomial::operator-() const { return scale(field().neg(field().one())); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(o);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  if (total_degree() + o.total_degree() > ring_->max_degree())
    throw DegreeOverflow("product degree exceeds the ring's max degree");
  if (o.terms_.size() == 1) return mul_term(o.terms_[0].monomial, o.terms_[0].coeff);
  if (terms_.size() == 1) return o.mul_term(terms_[0].monomial, terms_[0].coeff);
  const auto& f = field();
  std::unordered_map<Monomial, Field::Elem, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& s : terms_)
    for (const auto& t : o.terms_) {
      auto [it, inserted] = acc.try_emplace(s.monomial * t.monomial, Field::kZero);
      it->second = f.add(it->second, f.mul(s.coeff, t.coeff));
    }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (const auto& [m, c] : acc)
    if (c != Field::kZero) out.push_back({m, c});
  std::sort(out.begin(), out.end(), term_desc);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::scale(Field::Elem c) const {
  if (c == Field::kZero) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = field().mul(t.coeff, c);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::scale(const FieldElement& c) const {
  if (!c.field()->same_as(field())) throw SpecMismatch("scalar from another field");
  return scale(c.raw());
}

Polynomial Polynomial::mul_term(const Monomial& m, Field::Elem c) const {
  if (c == Field::kZero || is_zero()) return Polynomial(ring_);
  if (total_degree() + m.degree() > ring_->max_degree())
    throw DegreeOverflow("product degree exceeds the ring's max degree");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.monomial * m, field().mul(t.coeff, c)});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic(const MonomialOrder& ord) const {
  auto [m, c] = leading_term(ord);
  return scale(field().inv(c.raw()));
}

Polynomial Polynomial::over(RingPtr target) const {
  if (target->names() != ring_->names()) throw RingMismatch("base change requires identical variables");
  const auto& src = field();
  const auto& dst = *target->field();
  if (src.characteristic() != dst.characteristic()) throw SpecMismatch("base change across characteristics");
  if (src.same_as(dst)) return Polynomial(std::move(target), terms_);
  if (src.degree() != 1) throw SpecMismatch("only prime-field coefficients can be embedded");
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = dst.from_int(*src.prime_residue(t.coeff));
  return Polynomial(std::move(target), std::move(out));
}

bool Polynomial::operator==(const Polynomial& o) const {
  require_same_ring(o);
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].monomial != o.terms_[i].monomial || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

std::string coefficient_to_string(const Field& field, Field::Elem c, bool& negative) {
  negative = false;
  if (auto r = field.prime_residue(c)) {
    std::uint32_t v = *r;
    if (field.characteristic() > 2 && v > field.characteristic() / 2) {
      negative = true;
      v = field.characteristic() - v;
    }
    return std::to_string(v);
  }
  return field.to_string(c);
}

std::string Polynomial::to_string(const MonomialOrder& ord) const {
  if (terms_.empty()) return "0";
  std::vector<Term> sorted = terms_;
  std::sort(sorted.begin(), sorted.end(),
            [&](const Term& a, const Term& b) { return ord.cmp(a.monomial, b.monomial) > 0; });
  std::string out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    bool negative = false;
    std::string coeff = coefficient_to_string(field(), sorted[i].coeff, negative);
    if (i == 0)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const bool unit = coeff == "1";
    if (sorted[i].monomial.is_one()) {
      out += coeff;
    } else {
      if (!unit) out += coeff + "*";
      out += ring_->monomial_to_string(sorted[i].monomial);
    }
  }
  return out;
}

// ------------------------------------------------------------------ parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring, std::size_t line)
      : text_(text), ring_(ring), line_(line), field_(*ring->field()) {}

  Polynomial run() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    terms.push_back(term(negative));
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail(std::string("expected '+' or '-', found '") + c + "'");
      ++pos_;
      terms.push_back(term(c == '-'));
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, line_, pos_ + 1); }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Term term(bool negative) {
    skip_ws();
    if (at_end()) fail("expected a term");
    Monomial m(ring_->nvars());
    Field::Elem coeff = field_.one();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = integer_mod_p();
      skip_ws();
      if (at_end() || peek() != '*') return finish(m, coeff, negative);
      ++pos_;
    }
    factor(m);
    for (;;) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
      factor(m);
    }
    return finish(m, coeff, negative);
  }

  Term finish(const Monomial& m, Field::Elem coeff, bool negative) const {
    return {m, negative ? field_.neg(coeff) : coeff};
  }

  Field::Elem integer_mod_p() {
    std::uint64_t r = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
      r = (r * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0')) % field_.characteristic();
    return field_.from_int(static_cast<std::int64_t>(r));
  }

  void factor(Monomial& m) {
    skip_ws();
    if (at_end()) fail("expected a variable");
    if (!std::isalpha(static_cast<unsigned char>(peek()))) fail(std::string("expected a variable, found '") + peek() + "'");
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    std::string_view name = text_.substr(start, pos_ - start);
    auto index = ring_->index_of(name);
    if (!index) throw UnknownVariable("line " + std::to_string(line_) + ", column " + std::to_string(start + 1) +
                                      ": unknown variable '" + std::string(name) + "'");
    unsigned power = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
      std::uint64_t e = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        e = e * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
        if (e > ring_->max_degree()) fail("exponent exceeds the ring's max degree");
      }
      if (e == 0) fail("exponent must be positive");
      power = static_cast<unsigned>(e);
    }
    unsigned total = m[*index] + power;
    if (m.degree() + power > ring_->max_degree()) fail("term degree exceeds the ring's max degree");
    m.set(*index, total);
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t line_;
  const Field& field_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t line) {
  return Parser(text, ring, line).run();
}

}  // namespace modgin
