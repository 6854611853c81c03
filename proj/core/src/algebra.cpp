#include "knotsig/algebra.hpp"

#include <numeric>
#include <sstream>

#include <fmt/format.h>

#include "knotsig/errors.hpp"

namespace knotsig {

int tier_bits(int requested) {
  for (int b : {64, 128, 256, 512})
    if (requested <= b) return b;
  return 1024;
}

LaurentPoly::LaurentPoly(int num_vars) : mu_(num_vars) {
  if (num_vars < 1) throw DimensionMismatch("LaurentPoly needs at least one variable");
}

LaurentPoly LaurentPoly::constant(int num_vars, Gaussian c) {
  LaurentPoly p(num_vars);
  p.add_term(Exponent(num_vars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(int num_vars, Exponent e, Gaussian c) {
  if (static_cast<int>(e.size()) != num_vars)
    throw DimensionMismatch("exponent length differs from variable count");
  LaurentPoly p(num_vars);
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(int num_vars, int var, int power) {
  if (var < 1 || var > num_vars) throw DimensionMismatch("variable index out of range");
  Exponent e(num_vars, 0);
  e[var - 1] = power;
  return monomial(num_vars, std::move(e));
}

Gaussian LaurentPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Gaussian() : it->second;
}

void LaurentPoly::add_term(const Exponent& e, Gaussian c) {
  if (static_cast<int>(e.size()) != mu_)
    throw DimensionMismatch("exponent length differs from variable count");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly out(mu_);
  for (const auto& [e, c] : terms_) {
    Exponent neg(e.size());
    for (size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
    out.terms_.emplace(std::move(neg), c.conj());
  }
  return out;
}

static void check_same_mu(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.num_vars() != b.num_vars())
    throw DimensionMismatch(
        fmt::format("Laurent polynomials in {} and {} variables", a.num_vars(), b.num_vars()));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_same_mu(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_same_mu(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  check_same_mu(a, b);
  LaurentPoly out(a.mu_);
  LaurentPoly::Exponent e(a.mu_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.mu_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly out(a.mu_);
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (int i = 0; i < mu_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += mu_ == 1 ? "t" : fmt::format("t{}", i + 1);
      if (e[i] != 1) mono += fmt::format("^{}", e[i]);
    }
    bool negative = false;
    std::string body;
    if (c.im == 0 || c.re == 0) {
      long long v = c.im == 0 ? c.re : c.im;
      negative = v < 0;
      long long m = negative ? -v : v;
      if (m != 1 || (mono.empty() && c.im == 0)) body = std::to_string(m);
      if (c.im != 0) body += "i";
    } else {
      body = fmt::format("({}{:+}i)", c.re, c.im);
    }
    if (out.empty())
      out = negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += body;
    if (!body.empty() && !mono.empty()) out += "*";
    out += mono;
  }
  return out;
}

LaurentPoly laurent_arith(const LaurentPoly& p, const LaurentPoly& q, LaurentOp op) {
  switch (op) {
    case LaurentOp::add:
      return p + q;
    case LaurentOp::sub:
      return p - q;
    case LaurentOp::mul:
      return p * q;
  }
  throw std::logic_error("unknown LaurentOp");
}

LaurentPoly laurent_bar(const LaurentPoly& p) { return p.bar(); }

TorusPoint::TorusPoint(std::vector<Rotation> rotations) : rot_(std::move(rotations)) {
  for (auto& r : rot_) {
    if (r.den < 1) throw ParseError("rotation denominator must be positive");
    r.num %= r.den;
    if (r.num < 0) r.num += r.den;
    long long g = std::gcd(r.num, r.den);
    r.num /= g;
    r.den /= g;
  }
}

TorusPoint TorusPoint::parse(const std::string& text) {
  std::vector<Rotation> rots;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto slash = item.find('/');
    try {
      size_t used = 0;
      if (slash == std::string::npos) {
        long long a = std::stoll(item, &used);
        if (item.find_first_not_of(" \t", used) != std::string::npos) throw ParseError(item);
        rots.push_back({a, 1});
      } else {
        std::string a = item.substr(0, slash), b = item.substr(slash + 1);
        long long num = std::stoll(a, &used);
        if (a.find_first_not_of(" \t", used) != std::string::npos) throw ParseError(item);
        long long den = std::stoll(b, &used);
        if (b.find_first_not_of(" \t", used) != std::string::npos) throw ParseError(item);
        rots.push_back({num, den});
      }
    } catch (const std::logic_error&) {
      throw ParseError(fmt::format("bad torus coordinate '{}'", item));
    }
  }
  if (rots.empty()) throw ParseError("empty torus point");
  return TorusPoint(std::move(rots));
}

long long TorusPoint::order(int i) const {
  const Rotation& r = rot_.at(i);
  return r.num == 0 ? 1 : r.den;
}

std::vector<long long> TorusPoint::orders() const {
  std::vector<long long> k;
  for (int i = 0; i < num_vars(); ++i) k.push_back(order(i));
  return k;
}

std::string TorusPoint::to_string() const {
  std::string s;
  for (size_t i = 0; i < rot_.size(); ++i) {
    if (i) s += ",";
    s += fmt::format("{}/{}", rot_[i].num, rot_[i].den);
  }
  return s;
}

bool is_in_TP(const TorusPoint& w) {
  auto k = w.orders();
  for (size_t i = 0; i < k.size(); ++i) {
    if (k[i] <= 1) return false;
    for (size_t j = i + 1; j < k.size(); ++j)
      if (std::gcd(k[i], k[j]) != 1) return false;
  }
  return true;
}

bool is_admissible(const TorusPoint& w, const std::vector<int>& ell) {
  if (static_cast<int>(ell.size()) != w.num_vars())
    throw DimensionMismatch("ell length differs from torus dimension");
  for (int i = 0; i < w.num_vars(); ++i) {
    if (ell[i] == 0) return false;
    if (std::gcd(w.order(i), static_cast<long long>(ell[i] < 0 ? -ell[i] : ell[i])) != 1)
      return false;
  }
  return true;
}

template <class S>
S evaluate(const LaurentPoly& p, const TorusPoint& w) {
  if (p.num_vars() != w.num_vars())
    throw DimensionMismatch("polynomial and torus point have different variable counts");
  long long lcm = 1;
  for (const auto& r : w.rotations()) lcm = std::lcm(lcm, r.den);
  S sum(0);
  for (const auto& [e, c] : p.terms()) {
    long long num = 0;
    for (int i = 0; i < p.num_vars(); ++i) {
      const auto& r = w.rotation(i);
      num = (num + static_cast<long long>(e[i]) % lcm * (r.num * (lcm / r.den) % lcm)) % lcm;
    }
    S z = unit_root<S>(num, lcm);
    sum += z * S(real_t<S>(c.re), real_t<S>(c.im));
  }
  return sum;
}

#define KNOTSIG_INST(S) template S evaluate<S>(const LaurentPoly&, const TorusPoint&);
KNOTSIG_FOR_EACH_TIER(KNOTSIG_INST)
#undef KNOTSIG_INST

}  // namespace knotsig
