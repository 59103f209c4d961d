#include "bihamil/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bihamil {

namespace {

unsigned degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

}  // namespace

MultiPoly MultiPoly::constant(VarLayout layout, const GaussianRational& c) {
  MultiPoly p(layout);
  p.add_term(Exponents(layout.num_vars(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(VarLayout layout, std::size_t var) {
  if (var >= layout.num_vars()) throw std::out_of_range("variable index out of range");
  Exponents e(layout.num_vars(), 0);
  e[var] = 1;
  MultiPoly p(layout);
  p.add_term(e, 1);
  return p;
}

MultiPoly MultiPoly::conj_variable(VarLayout layout, std::size_t k) {
  if (!layout.mixed) throw std::invalid_argument("conjugate variables need a mixed layout");
  return variable(layout, layout.holo + k);
}

MultiPoly MultiPoly::monomial(VarLayout layout, const Exponents& e, const GaussianRational& c) {
  if (e.size() != layout.num_vars()) throw std::invalid_argument("exponent vector length mismatch");
  MultiPoly p(layout);
  if (degree_of(e) > p.degree_cap_) throw DegreeCapExceeded("monomial exceeds the degree cap");
  p.add_term(e, c);
  return p;
}

void MultiPoly::add_term(const Exponents& e, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_same_ring(const MultiPoly& o) const {
  if (!(layout_ == o.layout_)) throw std::invalid_argument("polynomials live in different rings");
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
  return d;
}

bool MultiPoly::is_holomorphic() const {
  if (!layout_.mixed) return true;
  for (const auto& [e, c] : terms_)
    for (std::size_t k = layout_.holo; k < e.size(); ++k)
      if (e[k] != 0) return false;
  return true;
}

bool MultiPoly::is_linear_homogeneous() const {
  for (const auto& [e, c] : terms_)
    if (degree_of(e) != 1) return false;
  return true;
}

GaussianRational MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? GaussianRational(0) : it->second;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_same_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  degree_cap_ = std::max(degree_cap_, o.degree_cap_);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_same_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  degree_cap_ = std::max(degree_cap_, o.degree_cap_);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_ring(b);
  MultiPoly p(a.layout_, std::max(a.degree_cap_, b.degree_cap_));
  if (a.is_zero() || b.is_zero()) return p;
  if (a.total_degree() + b.total_degree() > p.degree_cap_)
    throw DegreeCapExceeded("product degree " + std::to_string(a.total_degree() + b.total_degree()) +
                            " exceeds cap " + std::to_string(p.degree_cap_));
  Exponents e(a.num_vars());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = static_cast<std::uint16_t>(ea[k] + eb[k]);
      p.add_term(e, ca * cb);
    }
  return p;
}

MultiPoly MultiPoly::operator-() const { return scaled(-1); }

MultiPoly MultiPoly::scaled(const GaussianRational& s) const {
  MultiPoly p(layout_, degree_cap_);
  if (s.is_zero()) return p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, c * s);
  return p;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly p = constant(layout_, 1);
  p.degree_cap_ = degree_cap_;
  for (unsigned i = 0; i < k; ++i) p = p * *this;
  return p;
}

MultiPoly MultiPoly::diff(std::size_t var) const {
  if (var >= num_vars()) throw std::out_of_range("differentiation variable out of range");
  MultiPoly p(layout_, degree_cap_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    p.add_term(d, c * GaussianRational(static_cast<long>(e[var])));
  }
  return p;
}

GaussianRational MultiPoly::evaluate(std::span<const GaussianRational> point) const {
  if (point.size() != layout_.holo) throw std::invalid_argument("evaluation point has the wrong dimension");
  std::vector<GaussianRational> values(point.begin(), point.end());
  if (layout_.mixed)
    for (const auto& z : point) values.push_back(z.conj());
  return evaluate_formal(values);
}

GaussianRational MultiPoly::evaluate_formal(std::span<const GaussianRational> values) const {
  if (values.size() != num_vars()) throw std::invalid_argument("wrong number of variable values");
  GaussianRational sum = 0;
  for (const auto& [e, c] : terms_) {
    GaussianRational t = c;
    for (std::size_t k = 0; k < e.size(); ++k)
      for (unsigned j = 0; j < e[k]; ++j) t *= values[k];
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::conjugate() const {
  if (!layout_.mixed) throw std::invalid_argument("conjugation needs a mixed layout");
  MultiPoly p(layout_, degree_cap_);
  const std::size_t n = layout_.holo;
  for (const auto& [e, c] : terms_) {
    Exponents s(e.size());
    for (std::size_t k = 0; k < n; ++k) {
      s[k] = e[n + k];
      s[n + k] = e[k];
    }
    p.add_term(s, c.conj());
  }
  return p;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
  if (images.size() != num_vars()) throw std::invalid_argument("substitution needs one image per variable");
  if (images.empty()) return *this;
  const VarLayout target = images.front().layout();
  MultiPoly out(target, degree_cap_);
  for (const auto& [e, c] : terms_) {
    MultiPoly t = constant(target, c);
    t.degree_cap_ = degree_cap_;
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] != 0) t = t * images[k].pow(e[k]);
    out += t;
  }
  return out;
}

MultiPoly MultiPoly::to_mixed() const {
  if (layout_.mixed) return *this;
  VarLayout m{layout_.holo, true};
  MultiPoly p(m, degree_cap_);
  for (const auto& [e, c] : terms_) {
    Exponents x(m.num_vars(), 0);
    std::copy(e.begin(), e.end(), x.begin());
    p.add_term(x, c);
  }
  return p;
}

std::string variable_name(const VarLayout& layout, std::size_t var) {
  if (layout.mixed && var >= layout.holo) return "zb" + std::to_string(var - layout.holo + 1);
  return "z" + std::to_string(var + 1);
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first, then reverse-lexicographic on exponents, for readability.
  std::vector<std::pair<Exponents, GaussianRational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    unsigned da = degree_of(a.first);
    unsigned db = degree_of(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  for (const auto& [e, c] : ordered) {
    std::string coeff = bihamil::to_string(c);
    bool compound = !c.is_real() && sgn(c.re()) != 0;
    if (compound) coeff = "(" + coeff + ")";
    bool negative = !compound && !coeff.empty() && coeff.front() == '-';
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    if (negative) coeff.erase(0, 1);
    first = false;
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += variable_name(layout_, k);
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    if (mono.empty())
      os << coeff;
    else if (coeff == "1")
      os << mono;
    else
      os << coeff << "*" << mono;
  }
  return os.str();
}

}  // namespace bihamil
