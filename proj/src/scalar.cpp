#include "compat/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <numbers>

namespace compat {

namespace {

std::vector<mpz_class> poly_div_exact(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
  // den is monic; the division is exact for cyclotomic factors of x^N - 1.
  const std::size_t dd = den.size() - 1;
  std::vector<mpz_class> quot(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    mpz_class c = num[k];
    if (c == 0) continue;
    quot[k - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
  }
  return quot;
}

// Solves a dense square system over Q; returns nullopt when singular.
std::optional<std::vector<mpq_class>> solve_rational(std::vector<std::vector<mpq_class>> a,
                                                     std::vector<mpq_class> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      mpq_class f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t r = 0; r < n; ++r) b[r] /= a[r][r];
  return b;
}

bool separates_terms(const std::string& s, std::size_t i) {
  if (i == 0) return false;
  char prev = s[i - 1];
  return prev != '^' && prev != '*' && prev != '/' && prev != 'e' && prev != 'E' && prev != '(';
}

std::vector<std::string> split_terms(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && separates_terms(s, i)) {
      out.push_back(s.substr(start, i - start));
      start = i;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

mpq_class parse_rational(const std::string& text) {
  if (text.empty() || text == "+") return 1;
  if (text == "-") return -1;
  std::string t = text[0] == '+' ? text.substr(1) : text;
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw std::invalid_argument("bad rational '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(int order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<int, std::vector<mpz_class>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(order); it != cache.end()) return it->second;
  }
  std::vector<mpz_class> poly(order + 1, 0);
  poly[0] = -1;
  poly[order] = 1;
  for (int d = 1; d < order; ++d) {
    if (order % d == 0) poly = poly_div_exact(poly, cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mutex);
  return cache.emplace(order, std::move(poly)).first->second;
}

Scalar root_of_unity(int order) {
  if (order < 1) throw std::invalid_argument("root_of_unity needs N >= 1");
  return Scalar::cyclotomic(order, {0, 1});
}

Scalar::Scalar(mpq_class value) : coeffs_{std::move(value)} {
  coeffs_[0].canonicalize();
  trim();
}

Scalar Scalar::fraction(long num, long den) {
  if (den == 0) throw DivisionByZero();
  return Scalar(mpq_class(num, den));
}

Scalar Scalar::cyclotomic(int order, std::vector<mpq_class> coeffs) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  Scalar s;
  s.order_ = order;
  s.coeffs_ = std::move(coeffs);
  for (auto& c : s.coeffs_) c.canonicalize();
  s.reduce();
  return s;
}

Scalar Scalar::complex(std::complex<double> value, double tol) {
  Scalar s;
  s.float_ = true;
  s.z_ = value;
  s.scale_ = std::abs(value);
  s.tol_ = tol;
  return s;
}

void Scalar::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.size() <= 1) order_ = 1;
}

void Scalar::reduce() {
  if (order_ > 1 && coeffs_.size() > static_cast<std::size_t>(order_)) {
    for (std::size_t k = order_; k < coeffs_.size(); ++k) coeffs_[k % order_] += coeffs_[k];
    coeffs_.resize(order_);
  }
  const auto& phi = cyclotomic_polynomial(order_);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = coeffs_.size(); k-- > deg;) {
    mpq_class c = coeffs_[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) coeffs_[k - deg + j] -= c * phi[j];
  }
  if (coeffs_.size() > deg) coeffs_.resize(deg);
  trim();
}

void Scalar::to_float(double tol) {
  if (float_) return;
  z_ = to_complex();
  scale_ = std::abs(z_);
  tol_ = tol;
  float_ = true;
  coeffs_.clear();
  order_ = 1;
}

bool Scalar::is_zero() const {
  if (!float_) return coeffs_.empty();
  double bound = std::max(kAbsoluteFloor, tol_ * std::max(1.0, scale_));
  return std::abs(z_) <= bound;
}

bool Scalar::is_one() const { return (*this - Scalar(1)).is_zero(); }

std::optional<mpq_class> Scalar::rational() const {
  if (float_ || coeffs_.size() > 1) return std::nullopt;
  return coeffs_.empty() ? mpq_class(0) : coeffs_[0];
}

std::complex<double> Scalar::to_complex() const {
  if (float_) return z_;
  std::complex<double> acc = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / order_;
    acc += coeffs_[k].get_d() * std::polar(1.0, angle);
  }
  return acc;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (float_) {
    r.z_ = -z_;
  } else {
    for (auto& c : r.coeffs_) c = -c;
  }
  return r;
}

namespace {
int common_order(const Scalar& a, const Scalar& b) {
  if (a.is_rational()) return b.order();
  if (b.is_rational()) return a.order();
  if (a.order() != b.order()) {
    throw std::invalid_argument("cyclotomic orders " + std::to_string(a.order()) + " and " +
                                std::to_string(b.order()) + " must be embedded explicitly");
  }
  return a.order();
}
}  // namespace

Scalar& Scalar::operator+=(const Scalar& other) {
  if (float_ || other.float_) {
    double tol = std::max(float_ ? tol_ : 0.0, other.float_ ? other.tol_ : 0.0);
    Scalar o = other;
    to_float(tol);
    o.to_float(tol);
    z_ += o.z_;
    scale_ = std::max(scale_, o.scale_);
    tol_ = tol;
    return *this;
  }
  int ord = common_order(*this, other);
  order_ = ord;
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  if (!coeffs_.empty() && coeffs_.size() > 1) order_ = ord;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  if (float_ || other.float_) {
    double tol = std::max(float_ ? tol_ : 0.0, other.float_ ? other.tol_ : 0.0);
    Scalar o = other;
    to_float(tol);
    o.to_float(tol);
    z_ *= o.z_;
    scale_ = std::max(scale_ * o.scale_, std::abs(z_));
    tol_ = tol;
    return *this;
  }
  if (coeffs_.empty() || other.coeffs_.empty()) {
    coeffs_.clear();
    order_ = 1;
    return *this;
  }
  if (other.coeffs_.size() == 1) {
    for (auto& c : coeffs_) c *= other.coeffs_[0];
    return *this;
  }
  if (coeffs_.size() == 1) {
    mpq_class f = coeffs_[0];
    *this = other;
    for (auto& c : coeffs_) c *= f;
    return *this;
  }
  int ord = common_order(*this, other);
  std::vector<mpq_class> prod(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  order_ = ord;
  coeffs_ = std::move(prod);
  reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) { return *this *= other.inverse(); }

std::optional<Scalar> Scalar::try_inverse() const {
  if (is_zero()) return std::nullopt;
  if (float_) {
    Scalar r = *this;
    r.z_ = 1.0 / z_;
    r.scale_ = std::abs(r.z_);
    return r;
  }
  if (coeffs_.size() == 1) return Scalar(mpq_class(1) / coeffs_[0]);
  // Columns of the multiplication-by-this matrix in the power basis.
  const std::size_t deg = cyclotomic_polynomial(order_).size() - 1;
  std::vector<std::vector<mpq_class>> m(deg, std::vector<mpq_class>(deg, 0));
  for (std::size_t j = 0; j < deg; ++j) {
    std::vector<mpq_class> shifted(j, 0);
    shifted.insert(shifted.end(), coeffs_.begin(), coeffs_.end());
    Scalar col = cyclotomic(order_, std::move(shifted));
    for (std::size_t i = 0; i < col.coeffs_.size(); ++i) m[i][j] = col.coeffs_[i];
  }
  std::vector<mpq_class> rhs(deg, 0);
  rhs[0] = 1;
  auto sol = solve_rational(std::move(m), std::move(rhs));
  if (!sol) return std::nullopt;
  return cyclotomic(order_, std::move(*sol));
}

Scalar Scalar::inverse() const {
  auto r = try_inverse();
  if (!r) throw DivisionByZero();
  return *r;
}

Scalar Scalar::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Scalar result(1), base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

Scalar Scalar::embed(int order) const {
  if (float_ || is_rational()) return *this;
  if (order % order_ != 0) throw std::invalid_argument("embedding needs the old order to divide the new one");
  const int step = order / order_;
  std::vector<mpq_class> c(coeffs_.size() * step, 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k * step] = coeffs_[k];
  return cyclotomic(order, std::move(c));
}

std::string Scalar::str() const {
  if (float_) {
    char buf[96];
    if (z_.imag() == 0.0) {
      std::snprintf(buf, sizeof buf, "%.17g", z_.real());
    } else {
      std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z_.real(), z_.imag());
    }
    return buf;
  }
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!out.empty()) out += " + ";
    out += coeffs_[k].get_str();
    if (k == 1) out += "*z";
    if (k > 1) out += "*z^" + std::to_string(k);
  }
  return out;
}

Scalar Field::lift(const Scalar& value) const {
  if (kind == Kind::floating && !value.is_float()) return Scalar::complex(value.to_complex(), tol);
  return value;
}

Scalar Field::root() const { return root(order); }

Scalar Field::root(int n) const {
  if (kind == Kind::floating) {
    return Scalar::complex(std::polar(1.0, 2.0 * std::numbers::pi / n), tol);
  }
  return root_of_unity(n);
}

Scalar Field::parse(const std::string& raw) const {
  std::string s;
  // Collapse sign runs such as "+ -" so that every term carries one sign.
  for (char ch : raw) {
    if (ch == ' ' || ch == '\t') continue;
    if ((ch == '+' || ch == '-') && !s.empty() && (s.back() == '+' || s.back() == '-')) {
      s.back() = (s.back() == ch) ? '+' : '-';
      continue;
    }
    s += ch;
  }
  if (s.empty()) throw std::invalid_argument("empty scalar");
  if (kind == Kind::floating) {
    std::complex<double> acc = 0;
    bool any_rational = false;
    mpq_class exact = 0;
    for (const auto& term : split_terms(s)) {
      std::size_t used = 0;
      if (term.find('/') != std::string::npos && term.find('i') == std::string::npos) {
        exact += parse_rational(term);
        any_rational = true;
        continue;
      }
      if (!term.empty() && term.back() == 'i') {
        std::string body = term.substr(0, term.size() - 1);
        double v = (body.empty() || body == "+") ? 1.0 : body == "-" ? -1.0 : std::stod(body, &used);
        if (used != 0 && used != body.size()) throw std::invalid_argument("bad float '" + raw + "'");
        acc += std::complex<double>(0, v);
      } else {
        double v = std::stod(term, &used);
        if (used != term.size()) throw std::invalid_argument("bad float '" + raw + "'");
        acc += v;
      }
    }
    if (any_rational) acc += exact.get_d();
    return Scalar::complex(acc, tol);
  }
  std::vector<mpq_class> coeffs;
  for (const auto& term : split_terms(s)) {
    auto zpos = term.find('z');
    if (zpos == std::string::npos) {
      if (coeffs.empty()) coeffs.resize(1, 0);
      coeffs[0] += parse_rational(term);
      continue;
    }
    std::string coef = term.substr(0, zpos);
    if (!coef.empty() && coef.back() == '*') coef.pop_back();
    std::size_t power = 1;
    std::string rest = term.substr(zpos + 1);
    if (!rest.empty()) {
      if (rest[0] != '^') throw std::invalid_argument("bad term '" + term + "'");
      power = std::stoul(rest.substr(1));
    }
    if (coeffs.size() <= power) coeffs.resize(power + 1, 0);
    coeffs[power] += parse_rational(coef);
  }
  return Scalar::cyclotomic(order, std::move(coeffs));
}

std::string Field::describe() const {
  if (kind == Kind::floating) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "float:%g", tol);
    return buf;
  }
  return "cyclotomic:" + std::to_string(order);
}

Field Field::from_spec(const std::string& spec) {
  auto colon = spec.find(':');
  std::string kind = spec.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "rational") return rationals();
  if (kind == "cyclotomic") {
    int n = arg.empty() ? 1 : std::stoi(arg);
    if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
    return cyclotomic(n);
  }
  if (kind == "float") return floating(arg.empty() ? kDefaultTolerance : std::stod(arg));
  throw std::invalid_argument("unknown field '" + spec + "'");
}

}  // namespace compat
