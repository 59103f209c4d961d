#include "bihamil/univariate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace bihamil {

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const UPoly& p) {
  UPoly q = p;
  trim(q);
  return static_cast<int>(q.size()) - 1;
}

UPoly monic(const UPoly& p) {
  UPoly q = p;
  trim(q);
  if (q.empty()) return q;
  GaussianRational inv = q.back().inverse();
  for (auto& c : q) c *= inv;
  return q;
}

UPoly derivative(const UPoly& p) {
  UPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * GaussianRational(static_cast<long>(k)));
  trim(d);
  return d;
}

UPoly multiply(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  UPoly r = a, d = b;
  trim(r);
  trim(d);
  if (d.empty()) throw std::domain_error("polynomial division by zero");
  if (r.size() < d.size()) return {{}, r};
  UPoly q(r.size() - d.size() + 1);
  GaussianRational lead_inv = d.back().inverse();
  while (r.size() >= d.size() && !r.empty()) {
    std::size_t shift = r.size() - d.size();
    GaussianRational f = r.back() * lead_inv;
    q[shift] = f;
    for (std::size_t k = 0; k < d.size(); ++k) r[shift + k] -= f * d[k];
    r.pop_back();
    trim(r);
  }
  trim(q);
  return {q, r};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  trim(x);
  trim(y);
  while (!y.empty()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

GaussianRational eval(const UPoly& p, const GaussianRational& x) {
  GaussianRational v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

std::complex<long double> eval(const UPoly& p, std::complex<long double> x) {
  std::complex<long double> v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    std::complex<long double> c(it->re().get_d(), it->im().get_d());
    v = v * x + c;
  }
  return v;
}

std::vector<std::pair<UPoly, unsigned>> squarefree_decomposition(const UPoly& p) {
  std::vector<std::pair<UPoly, unsigned>> out;
  UPoly f = monic(p);
  if (degree(f) < 1) return out;
  UPoly fp = derivative(f);
  UPoly a = gcd(f, fp);
  UPoly b = divmod(f, a).first;
  UPoly c = divmod(fp, a).first;
  UPoly d = c;
  {
    UPoly bp = derivative(b);
    d.resize(std::max(d.size(), bp.size()));
    for (std::size_t k = 0; k < bp.size(); ++k) d[k] -= bp[k];
    trim(d);
  }
  unsigned k = 1;
  while (degree(b) >= 1) {
    UPoly g = gcd(b, d);
    if (degree(g) >= 1) out.emplace_back(g, k);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    UPoly bp = derivative(b);
    d = c;
    d.resize(std::max(d.size(), bp.size()));
    for (std::size_t j = 0; j < bp.size(); ++j) d[j] -= bp[j];
    trim(d);
    ++k;
  }
  return out;
}

UPoly characteristic_polynomial(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  const std::size_t n = m.rows();
  UPoly c(n + 1);
  c[n] = 1;
  Matrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    Matrix amk = m * mk;
    GaussianRational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += amk(i, i);
    c[n - k] = -tr / GaussianRational(static_cast<long>(k));
  }
  return c;
}

Matrix evaluate_matrix(const UPoly& q, const Matrix& m) {
  const std::size_t n = m.rows();
  Matrix acc(n, n);
  for (auto it = q.rbegin(); it != q.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

std::vector<std::complex<long double>> approximate_roots(const UPoly& p) {
  using C = std::complex<long double>;
  UPoly f = monic(p);
  const int n = degree(f);
  if (n < 1) return {};
  std::vector<C> coef(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) coef[k] = C(f[k].re().get_d(), f[k].im().get_d());
  if (n == 1) return {-coef[0]};

  long double radius = 0;
  for (int k = 0; k < n; ++k) radius = std::max(radius, std::abs(coef[k]));
  radius = 1 + radius;
  auto val = [&](C x) {
    C v = 0;
    for (int k = n; k >= 0; --k) v = v * x + coef[k];
    return v;
  };
  auto dval = [&](C x) {
    C v = 0;
    for (int k = n; k >= 1; --k) v = v * x + coef[k] * static_cast<long double>(k);
    return v;
  };

  std::vector<C> z(n);
  for (int k = 0; k < n; ++k) {
    long double angle = 2 * std::numbers::pi_v<long double> * k / n + 0.4L;
    z[k] = std::polar(radius * 0.5L, angle);
  }
  for (int iter = 0; iter < 1000; ++iter) {
    long double worst = 0;
    for (int k = 0; k < n; ++k) {
      C pv = val(z[k]);
      C dv = dval(z[k]);
      if (std::abs(pv) == 0) continue;
      C ratio = pv / dv;
      C sum = 0;
      for (int j = 0; j < n; ++j)
        if (j != k) sum += 1.0L / (z[k] - z[j]);
      C w = ratio / (1.0L - ratio * sum);
      z[k] -= w;
      worst = std::max(worst, std::abs(w) / std::max(1.0L, std::abs(z[k])));
    }
    if (worst < 1e-17L) break;
  }
  std::sort(z.begin(), z.end(), [](C a, C b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return z;
}

namespace {

// Convergents of the continued fraction of x, smallest denominators first.
std::vector<Rational> convergents(long double x) {
  std::vector<Rational> out;
  mpz_class h2 = 0, h1 = 1, k2 = 1, k1 = 0;
  long double r = x;
  for (int step = 0; step < 24; ++step) {
    long double a = std::floor(r);
    if (std::fabs(a) > 1e15L) break;
    mpz_class ai(static_cast<long>(a));
    mpz_class h = ai * h1 + h2;
    mpz_class k = ai * k1 + k2;
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
    out.emplace_back(h, k);
    out.back().canonicalize();
    long double frac = r - a;
    if (frac < 1e-13L || k > mpz_class(1000000000L)) break;
    r = 1 / frac;
  }
  return out;
}

}  // namespace

std::optional<GaussianRational> recover_exact_root(const UPoly& p, std::complex<long double> approx) {
  auto re = convergents(approx.real());
  auto im = convergents(approx.imag());
  if (std::fabs(approx.imag()) < 1e-12L) im.insert(im.begin(), Rational(0));
  if (std::fabs(approx.real()) < 1e-12L) re.insert(re.begin(), Rational(0));
  const long double scale = std::max(1.0L, std::abs(approx));
  for (const auto& a : re)
    for (const auto& b : im) {
      GaussianRational g(a, b);
      std::complex<long double> gc(a.get_d(), b.get_d());
      if (std::abs(gc - approx) > 1e-6L * scale) continue;
      if (eval(p, g).is_zero()) return g;
    }
  return std::nullopt;
}

std::string to_string(const UPoly& p, const char* var) {
  UPoly q = p;
  trim(q);
  if (q.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = q.size(); k-- > 0;) {
    if (q[k].is_zero()) continue;
    std::string c = to_string(q[k]);
    if (!q[k].is_real() && sgn(q[k].re()) != 0) c = "(" + c + ")";
    bool neg = c.front() == '-';
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    if (neg) c.erase(0, 1);
    first = false;
    if (k == 0) {
      os << c;
    } else {
      if (c != "1") os << c << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace bihamil
