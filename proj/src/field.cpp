#include "modgin/field.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace modgin {

namespace {

using UPoly = std::vector<std::uint64_t>;  // coefficients low to high, mod p

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

UPoly poly_rem(UPoly a, const UPoly& f, std::uint64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t lead_inv = inv_mod(f.back(), p);
  while (a.size() >= f.size()) {
    std::uint64_t c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - f.size();
    for (std::size_t i = 0; i <= df; ++i) a[shift + i] = (a[shift + i] + (p - c) * f[i]) % p;
    trim(a);
  }
  return a;
}

UPoly mul_mod(const UPoly& a, const UPoly& b, const UPoly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_rem(std::move(r), f, p);
}

UPoly pow_mod_poly(UPoly base, std::uint64_t e, const UPoly& f, std::uint64_t p) {
  UPoly r{1};
  base = poly_rem(std::move(base), f, p);
  while (e) {
    if (e & 1) r = mul_mod(r, base, f, p);
    base = mul_mod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

UPoly poly_gcd(UPoly a, UPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// gcd(x^{p^i} - x, f) = 1 for 1 <= i <= deg(f)/2
bool irreducible(const UPoly& f, std::uint64_t p) {
  const std::size_t k = f.size() - 1;
  UPoly x{0, 1};
  UPoly h = x;
  for (std::size_t i = 1; i <= k / 2; ++i) {
    h = pow_mod_poly(h, p, f, p);
    UPoly d = h;
    d.resize(std::max<std::size_t>(d.size(), 2), 0);
    d[1] = (d[1] + p - 1) % p;
    if (poly_gcd(d, f, p).size() > 1) return false;
  }
  return true;
}

bool x_is_primitive(const UPoly& f, std::uint64_t p, std::uint64_t q) {
  UPoly x{0, 1};
  for (auto r : prime_factors(q - 1)) {
    UPoly h = pow_mod_poly(x, (q - 1) / r, f, p);
    if (h.size() == 1 && h[0] == 1) return false;
  }
  return true;
}

std::uint32_t primitive_root(std::uint32_t p) {
  if (p == 2) return 1;
  auto factors = prime_factors(p - 1);
  for (std::uint32_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto r : factors)
      if (pow_mod(g, (p - 1) / r, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  return 1;
}

std::uint64_t checked_size(std::uint32_t p, std::uint32_t k) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > Field::kMaxSize)
      throw InvalidArgument("field of size " + std::to_string(p) + "^" + std::to_string(k) +
                            " exceeds the table limit 2^24");
  }
  return q;
}

std::mutex cache_mutex;
std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint64_t>, FieldPtr> cache;

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(Token, std::uint32_t p, std::uint32_t k, std::uint64_t seed, std::vector<std::uint32_t> modulus,
             std::uint32_t generator)
    : p_(p), k_(k), q_(checked_size(p, k)), seed_(seed), modulus_(std::move(modulus)) {
  order_ = static_cast<std::uint32_t>(q_ - 1);
  half_ = p_ == 2 ? 0 : order_ / 2;
  exp_.resize(order_);
  std::vector<std::uint32_t> log_of(q_, kZero);

  if (k_ == 1) {
    std::uint64_t cur = 1;
    for (std::uint32_t i = 0; i < order_; ++i) {
      exp_[i] = static_cast<std::uint32_t>(cur);
      log_of[cur] = i;
      cur = cur * generator % p_;
    }
  } else {
    // Powers of x modulo the primitive modulus, as digit vectors.
    std::vector<std::uint32_t> digits(k_, 0);
    digits[0] = 1;
    for (std::uint32_t i = 0; i < order_; ++i) {
      std::uint64_t enc = 0;
      for (std::uint32_t j = k_; j-- > 0;) enc = enc * p_ + digits[j];
      exp_[i] = static_cast<std::uint32_t>(enc);
      log_of[enc] = i;
      std::uint32_t top = digits[k_ - 1];
      for (std::uint32_t j = k_ - 1; j > 0; --j) digits[j] = digits[j - 1];
      digits[0] = 0;
      if (top)
        for (std::uint32_t j = 0; j < k_; ++j)
          digits[j] = static_cast<std::uint32_t>((digits[j] + std::uint64_t{p_ - top} * modulus_[j]) % p_);
    }
  }

  zech_.resize(order_);
  for (std::uint32_t n = 0; n < order_; ++n) {
    std::uint64_t enc = exp_[n];
    std::uint64_t d0 = enc % p_;
    std::uint64_t shifted = enc - d0 + (d0 + 1) % p_;
    zech_[n] = shifted == 0 ? kZero : log_of[shifted];
  }
  residue_log_.resize(p_);
  for (std::uint32_t c = 0; c < p_; ++c) residue_log_[c] = log_of[c];
}

FieldPtr Field::prime(std::uint32_t p) { return extension(p, 1, 0); }

FieldPtr Field::extension(std::uint32_t p, std::uint32_t k, std::uint64_t seed) {
  if (!is_prime(p)) throw InvalidCharacteristic(std::to_string(p) + " is not prime");
  if (k < 1) throw InvalidArgument("extension degree must be at least 1");
  if (k == 1) seed = 0;
  const auto key = std::make_tuple(p, k, seed);
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const std::uint64_t q = checked_size(p, k);

  FieldPtr field;
  if (k == 1) {
    field = std::make_shared<const Field>(Token{}, p, 1, 0, std::vector<std::uint32_t>{0, 1}, primitive_root(p));
  } else {
    Rng rng(seed);
    UPoly f;
    for (;;) {
      f.assign(k + 1, 0);
      f[k] = 1;
      for (std::uint32_t i = 0; i < k; ++i) f[i] = uniform_below(rng, p);
      if (f[0] == 0) continue;
      if (irreducible(f, p) && x_is_primitive(f, p, q)) break;
    }
    std::vector<std::uint32_t> modulus(f.begin(), f.end());
    field = std::make_shared<const Field>(Token{}, p, k, seed, std::move(modulus), 0);
  }

  std::lock_guard lock(cache_mutex);
  auto [it, inserted] = cache.emplace(key, field);
  return it->second;
}

std::uint32_t Field::degree_for_size(std::uint32_t p, std::uint64_t min_size) {
  std::uint32_t k = 1;
  std::uint64_t q = p;
  while (q < min_size) {
    q *= p;
    ++k;
  }
  return k;
}

FieldPtr Field::sampling(std::uint32_t p, std::uint64_t seed, std::uint64_t min_size) {
  if (!is_prime(p)) throw InvalidCharacteristic(std::to_string(p) + " is not prime");
  return extension(p, degree_for_size(p, min_size), seed);
}

bool Field::same_as(const Field& other) const noexcept {
  return this == &other || (p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_);
}

Field::Elem Field::from_int(std::int64_t n) const noexcept {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return residue_log_[static_cast<std::size_t>(r)];
}

Field::Elem Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > k_) throw InvalidArgument("too many coefficients for field element");
  Elem acc = kZero;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] >= p_) throw InvalidArgument("coefficient out of range [0, p)");
    Elem c = residue_log_[coeffs[i]];
    if (c == kZero) continue;
    // x is the generator for k > 1, so x^i has log i.
    Elem term = k_ == 1 ? c : mul(c, static_cast<Elem>(i % order_));
    acc = add(acc, term);
  }
  return acc;
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const {
  std::vector<std::uint32_t> out(k_, 0);
  if (a == kZero) return out;
  std::uint64_t enc = exp_[a];
  for (std::uint32_t i = 0; i < k_; ++i) {
    out[i] = static_cast<std::uint32_t>(enc % p_);
    enc /= p_;
  }
  return out;
}

std::optional<std::uint32_t> Field::prime_residue(Elem a) const noexcept {
  if (a == kZero) return 0u;
  std::uint32_t enc = exp_[a];
  if (enc < p_) return enc;
  return std::nullopt;
}

Field::Elem Field::inv(Elem a) const {
  if (a == kZero) throw DivisionByZero("inverse of zero");
  return a == 0 ? 0 : order_ - a;
}

Field::Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  if (e == 0) return one();
  if (a == kZero) return kZero;
  return static_cast<Elem>((std::uint64_t{a} * (e % order_)) % order_);
}

Field::Elem Field::random(Rng& rng) const {
  std::uint64_t r = uniform_below(rng, q_);
  return r == order_ ? kZero : static_cast<Elem>(r);
}

Field::Elem Field::random_nonzero(Rng& rng) const { return static_cast<Elem>(uniform_below(rng, order_)); }

std::string Field::to_string(Elem a) const {
  if (auto r = prime_residue(a)) return std::to_string(*r);
  auto c = coeffs(a);
  std::string out = "{";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c[i]);
  }
  return out + "}";
}

void FieldElement::require_same(const FieldElement& o) const {
  if (field_ != o.field_ && !field_->same_as(*o.field_))
    throw SpecMismatch("field elements belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same(o);
  return {field_, field_->add(raw_, o.raw_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same(o);
  return {field_, field_->sub(raw_, o.raw_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same(o);
  return {field_, field_->mul(raw_, o.raw_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  require_same(o);
  return {field_, field_->div(raw_, o.raw_)};
}

bool FieldElement::operator==(const FieldElement& o) const {
  require_same(o);
  return raw_ == o.raw_;
}

}  // namespace modgin
