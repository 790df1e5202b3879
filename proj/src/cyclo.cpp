#include "hopfclass/cyclo.hpp"

#include <array>
#include <cctype>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace hopfclass {

namespace {

using Poly = std::vector<Rational>;

void trim_poly(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Long division of integer polynomials by a monic divisor.
std::vector<long> exact_div(std::vector<long> num, const std::vector<long>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<long> quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const long c = num[k];
    quot[k - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  for (std::size_t j = 0; j < dn; ++j) {
    if (num[j] != 0) throw std::logic_error("cyclotomic division left a remainder");
  }
  return quot;
}

// (quotient, remainder) of a / b over Q.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim_poly(a);
  if (a.size() < b.size()) return {Poly{}, a};
  Poly quot(a.size() - b.size() + 1);
  const Rational lead = b.back();
  const std::size_t shift_max = a.size() - b.size();
  for (std::size_t s = shift_max + 1; s-- > 0;) {
    const std::size_t k = s + b.size() - 1;
    if (sgn(a[k]) == 0) continue;
    Rational c = a[k] / lead;
    quot[s] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[s + j] -= c * b[j];
  }
  trim_poly(a);
  trim_poly(quot);
  return {quot, a};
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim_poly(a);
  return a;
}

std::string rational_text(const Rational& r) { return r.get_str(); }

}  // namespace

std::vector<long> cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  std::vector<long> poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) poly = exact_div(poly, cyclotomic_polynomial(d));
  }
  return poly;
}

// ---------------------------------------------------------------------------
// CycloField

CycloField::CycloField(int n) : n_(n), phi_(cyclotomic_polynomial(n)) {
  powers_.reserve(static_cast<std::size_t>(n));
  powers_.push_back(one());
  std::vector<Rational> z(2);
  z[1] = 1;
  CycloNum zeta(*this, z);
  for (int k = 1; k < n; ++k) powers_.push_back(powers_.back() * zeta);
}

const CycloField& CycloField::get(int n) {
  if (n < 3) throw std::invalid_argument("cyclotomic field requires n >= 3, got " + std::to_string(n));
  constexpr int kMaxCached = 256;
  if (n >= kMaxCached) throw std::invalid_argument("cyclotomic field order too large");
  static std::array<std::unique_ptr<CycloField>, kMaxCached> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[static_cast<std::size_t>(n)];
  if (!slot) slot.reset(new CycloField(n));
  return *slot;
}

const CycloNum& CycloField::q_pow(long k) const {
  long r = k % n_;
  if (r < 0) r += n_;
  return powers_[static_cast<std::size_t>(r)];
}

int CycloField::q_log(const CycloNum& x) const {
  for (int k = 0; k < n_; ++k) {
    if (powers_[static_cast<std::size_t>(k)] == x) return k;
  }
  return -1;
}

void CycloField::reduce(std::vector<Rational>& poly) const {
  const std::size_t deg = phi_.size() - 1;
  for (std::size_t k = poly.size(); k-- > deg;) {
    if (sgn(poly[k]) == 0) continue;
    const Rational c = poly[k];
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi_[j] != 0) poly[k - deg + j] -= c * phi_[j];
    }
    poly[k] = 0;
  }
  if (poly.size() > deg) poly.resize(deg);
  trim_poly(poly);
}

CycloNum CycloField::parse(std::string_view text) const {
  std::vector<Rational> poly;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const char* why) {
    throw std::invalid_argument(std::string("cannot parse cyclotomic literal '") + std::string(text) +
                                "': " + why);
  };
  auto read_uint = [&]() -> std::string {
    std::string digits;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) digits += text[pos++];
    return digits;
  };
  skip_ws();
  if (pos == text.size()) fail("empty");
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    int sign = 1;
    bool saw_sep = false;
    while (pos < text.size() && (text[pos] == '+' || text[pos] == '-' || std::isspace(static_cast<unsigned char>(text[pos])))) {
      if (text[pos] == '-') sign = -sign;
      if (text[pos] == '+' || text[pos] == '-') saw_sep = true;
      ++pos;
    }
    if (!first && !saw_sep) fail("missing operator between terms");
    first = false;
    Rational coeff(1);
    bool have_coeff = false;
    std::string num = read_uint();
    if (!num.empty()) {
      have_coeff = true;
      std::string den = "1";
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = read_uint();
        if (den.empty()) fail("missing denominator");
      }
      coeff = Rational(BigInt(num), BigInt(den));
      if (sgn(coeff.get_den()) == 0) fail("zero denominator");
      coeff.canonicalize();
    }
    skip_ws();
    std::size_t power = 0;
    if (pos < text.size() && text[pos] == '*') {
      if (!have_coeff) fail("dangling '*'");
      ++pos;
      skip_ws();
    }
    if (pos < text.size() && (text[pos] == 'z' || text[pos] == 'q')) {
      ++pos;
      power = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_ws();
        std::string e = read_uint();
        if (e.empty()) fail("missing exponent");
        power = std::stoul(e);
      }
    } else if (!have_coeff) {
      fail("expected coefficient or z");
    }
    if (poly.size() <= power) poly.resize(power + 1);
    poly[power] += sign * coeff;
  }
  // z^k for k >= n folds back through z^n = 1 before reducing mod Phi_n.
  std::vector<Rational> folded(static_cast<std::size_t>(n_));
  for (std::size_t k = 0; k < poly.size(); ++k) folded[k % static_cast<std::size_t>(n_)] += poly[k];
  return CycloNum(*this, std::move(folded));
}

// ---------------------------------------------------------------------------
// CycloNum

CycloNum::CycloNum(const CycloField& field, Rational value) : field_(&field) {
  if (sgn(value) != 0) coeffs_.push_back(std::move(value));
}

CycloNum::CycloNum(const CycloField& field, std::vector<Rational> coeffs)
    : field_(&field), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  field.reduce(coeffs_);
}

int CycloNum::order() const { return field_ ? field_->n() : 0; }

bool CycloNum::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

Rational CycloNum::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

std::vector<Rational> CycloNum::coeffs() const {
  std::vector<Rational> out = coeffs_;
  if (field_) out.resize(static_cast<std::size_t>(field_->degree()));
  return out;
}

void CycloNum::trim() { trim_poly(coeffs_); }

void CycloNum::adopt(const CycloNum& o) {
  if (!field_) {
    field_ = o.field_;
  } else if (o.field_ && o.field_ != field_) {
    throw std::invalid_argument("cyclotomic arithmetic across different fields");
  }
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  adopt(o);
  if (o.coeffs_.empty()) return *this;
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
  adopt(o);
  if (o.coeffs_.empty()) return *this;
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

CycloNum& CycloNum::operator*=(const Rational& r) {
  if (sgn(r) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= r;
  return *this;
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  CycloNum out;
  out.field_ = a.field_ ? a.field_ : b.field_;
  if (a.field_ && b.field_ && a.field_ != b.field_)
    throw std::invalid_argument("cyclotomic arithmetic across different fields");
  if (a.coeffs_.empty() || b.coeffs_.empty()) return out;
  if (a.coeffs_.size() == 1) {
    out.coeffs_ = b.coeffs_;
    for (auto& c : out.coeffs_) c *= a.coeffs_[0];
    return out;
  }
  if (b.coeffs_.size() == 1) {
    out.coeffs_ = a.coeffs_;
    for (auto& c : out.coeffs_) c *= b.coeffs_[0];
    return out;
  }
  out.coeffs_ = poly_mul(a.coeffs_, b.coeffs_);
  out.field_->reduce(out.coeffs_);
  return out;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
  *this = *this * o;
  return *this;
}

void CycloNum::add_mul(const CycloNum& a, const CycloNum& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) {
    adopt(a);
    adopt(b);
    return;
  }
  if (a.coeffs_.size() == 1 && b.coeffs_.size() == 1) {
    adopt(a);
    if (coeffs_.empty()) coeffs_.resize(1);
    coeffs_[0] += a.coeffs_[0] * b.coeffs_[0];
    trim();
    return;
  }
  *this += a * b;
}

void CycloNum::sub_mul(const CycloNum& a, const CycloNum& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) {
    adopt(a);
    adopt(b);
    return;
  }
  if (a.coeffs_.size() == 1 && b.coeffs_.size() == 1) {
    adopt(a);
    if (coeffs_.empty()) coeffs_.resize(1);
    coeffs_[0] -= a.coeffs_[0] * b.coeffs_[0];
    trim();
    return;
  }
  *this -= a * b;
}

CycloNum CycloNum::operator-() const {
  CycloNum out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in cyclotomic field");
  if (coeffs_.size() == 1) {
    CycloNum out = *this;
    out.coeffs_[0] = 1 / coeffs_[0];
    return out;
  }
  // Extended Euclid: find s with s * a + t * Phi = 1.
  Poly phi(field_->cyclotomic_poly().begin(), field_->cyclotomic_poly().end());
  Poly r0 = phi, r1 = coeffs_;
  Poly s0{}, s1{Rational(1)};
  while (!r1.empty()) {
    auto [quot, rem] = divmod(r0, r1);
    Poly s2 = poly_sub(s0, poly_mul(quot, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since Phi_n is irreducible.
  if (r0.size() != 1) throw std::logic_error("cyclotomic inverse: gcd is not constant");
  const Rational inv_g = 1 / r0[0];
  for (auto& c : s0) c *= inv_g;
  return CycloNum(*field_, std::move(s0));
}

CycloNum CycloNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloNum base = *this;
  CycloNum acc = field_ ? field_->one() : CycloNum();
  if (!field_) throw std::logic_error("pow on field-less zero");
  while (e > 0) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

std::size_t CycloNum::height() const {
  std::size_t h = 0;
  for (const auto& c : coeffs_) {
    h += mpz_size(c.get_num_mpz_t()) + mpz_size(c.get_den_mpz_t());
  }
  return h;
}

std::string CycloNum::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    if (!first) out += " + ";
    first = false;
    out += rational_text(coeffs_[i]);
    if (i == 1) out += "*z";
    if (i > 1) out += "*z^" + std::to_string(i);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const CycloNum& x) { return os << x.to_string(); }

CycloNum q_factorial(int j, const CycloField& field) {
  if (j < 0) throw std::invalid_argument("q_factorial: negative argument");
  CycloNum acc = field.one();
  CycloNum partial = field.zero();  // 1 + q + ... + q^{k-1}
  for (int k = 1; k <= j; ++k) {
    partial += field.q_pow(k - 1);
    acc *= partial;
  }
  return acc;
}

}  // namespace hopfclass
