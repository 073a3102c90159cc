#include "udeform/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace udeform {

namespace {

std::optional<int> combine_caps(std::optional<int> a, std::optional<int> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

int tdeg(const std::vector<std::string>& vars, const ExpVec& e) {
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == kDeformVar) return e[i];
  return 0;
}

}  // namespace

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.emplace(ExpVec{}, c);
}

Poly::Poly(const Rational& c, const std::string& var, int exp) {
  if (exp < 0) throw std::invalid_argument("negative exponent");
  if (c == 0) return;
  vars_ = {var};
  terms_.emplace(ExpVec{exp}, c);
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const ExpVec& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

Rational Poly::constant_term() const {
  ExpVec zero(vars_.size(), 0);
  auto it = terms_.find(zero);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

int Poly::degree_in(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return terms_.empty() ? -1 : 0;
  size_t idx = it - vars_.begin();
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
  return d;
}

void Poly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0 || (tcap_ && tdeg(vars_, it->first) > *tcap_))
      it = terms_.erase(it);
    else
      ++it;
  }
}

std::pair<Poly, Poly> align(const Poly& a, const Poly& b) {
  if (a.variables() == b.variables()) return {a, b};
  std::vector<std::string> u;
  std::set_union(a.variables().begin(), a.variables().end(),
                 b.variables().begin(), b.variables().end(),
                 std::back_inserter(u));
  auto lift = [&u](const Poly& p) {
    std::map<ExpVec, Rational> out;
    std::vector<int> pos(p.variables().size());
    for (size_t i = 0; i < p.variables().size(); ++i)
      pos[i] = std::lower_bound(u.begin(), u.end(), p.variables()[i]) -
               u.begin();
    for (const auto& [e, c] : p.terms()) {
      ExpVec ne(u.size(), 0);
      for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
      out.emplace(std::move(ne), c);
    }
    return Poly::from_terms(u, std::move(out), p.tcap());
  };
  return {lift(a), lift(b)};
}

Poly Poly::from_terms(std::vector<std::string> vars,
                      std::map<ExpVec, Rational> terms,
                      std::optional<int> tcap) {
  Poly p;
  p.vars_ = std::move(vars);
  p.tcap_ = tcap;
  bool sorted = std::is_sorted(p.vars_.begin(), p.vars_.end()) &&
                std::adjacent_find(p.vars_.begin(), p.vars_.end()) ==
                    p.vars_.end();
  if (sorted) {
    p.terms_ = std::move(terms);
  } else {
    std::vector<std::string> sv = p.vars_;
    std::sort(sv.begin(), sv.end());
    sv.erase(std::unique(sv.begin(), sv.end()), sv.end());
    std::vector<int> pos(p.vars_.size());
    for (size_t i = 0; i < p.vars_.size(); ++i)
      pos[i] = std::lower_bound(sv.begin(), sv.end(), p.vars_[i]) - sv.begin();
    std::map<ExpVec, Rational> nt;
    for (const auto& [e, c] : terms) {
      ExpVec ne(sv.size(), 0);
      for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] += e[i];
      nt[ne] += c;
    }
    p.vars_ = std::move(sv);
    p.terms_ = std::move(nt);
  }
  p.prune();
  return p;
}

Poly Poly::operator-() const { return scale(Rational(-1)); }

Poly Poly::operator+(const Poly& o) const {
  auto [a, b] = align(*this, o);
  std::map<ExpVec, Rational> out = a.terms_;
  for (const auto& [e, c] : b.terms_) out[e] += c;
  return from_terms(a.vars_, std::move(out), combine_caps(tcap_, o.tcap_));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  auto [a, b] = align(*this, o);
  std::optional<int> cap = combine_caps(tcap_, o.tcap_);
  int ti = -1;
  if (cap) {
    auto it = std::find(a.vars_.begin(), a.vars_.end(), kDeformVar);
    if (it != a.vars_.end()) ti = it - a.vars_.begin();
  }
  std::map<ExpVec, Rational> out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      if (ti >= 0 && ea[ti] + eb[ti] > *cap) continue;
      ExpVec e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[std::move(e)] += ca * cb;
    }
  }
  return from_terms(a.vars_, std::move(out), cap);
}

bool Poly::operator==(const Poly& o) const {
  auto [a, b] = align(*this, o);
  return a.terms_ == b.terms_;
}

bool Poly::operator<(const Poly& o) const {
  auto [a, b] = align(*this, o);
  if (a.terms_.size() != b.terms_.size())
    return a.terms_.size() < b.terms_.size();
  for (auto ia = a.terms_.begin(), ib = b.terms_.begin();
       ia != a.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return false;
}

Poly Poly::scale(const Rational& c) const {
  if (c == 0) return Poly();
  Poly p = *this;
  for (auto& [e, coeff] : p.terms_) coeff *= c;
  return p;
}

Poly operator*(const Rational& c, const Poly& p) { return p.scale(c); }

Poly Poly::pow(unsigned e) const {
  Poly r = Poly::one();
  r.tcap_ = tcap_;
  Poly base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    base = (e >>= 1) ? base * base : base;
  }
  return r;
}

Poly Poly::diff(const std::string& var, unsigned order) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) {
    if (order == 0) return *this;
    // Differentiating by a variable the polynomial never mentions is fine
    // only if the caller's universe contains it; we cannot see the universe,
    // so treat a completely unknown name as caller error.
    return Poly();
  }
  size_t idx = it - vars_.begin();
  Poly cur = *this;
  for (unsigned k = 0; k < order; ++k) {
    std::map<ExpVec, Rational> out;
    for (const auto& [e, c] : cur.terms_) {
      if (e[idx] == 0) continue;
      ExpVec ne = e;
      ne[idx] -= 1;
      out[std::move(ne)] += c * e[idx];
    }
    cur = from_terms(cur.vars_, std::move(out), tcap_);
    if (cur.is_zero()) break;
  }
  return cur;
}

Poly Poly::substitute(const std::map<std::string, Poly>& repl) const {
  Poly result;
  result.tcap_ = tcap_;
  for (const auto& [e, c] : terms_) {
    Poly term = Poly::constant(c).with_tcap(tcap_);
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = repl.find(vars_[i]);
      if (it == repl.end())
        term = term * Poly(Rational(1), vars_[i], e[i]).with_tcap(tcap_);
      else
        term = term * it->second.with_tcap(tcap_).pow(e[i]);
    }
    result = result + term;
  }
  return result.with_tcap(tcap_);
}

Poly Poly::rename(const std::map<std::string, std::string>& names) const {
  std::vector<std::string> nv = vars_;
  for (auto& v : nv) {
    auto it = names.find(v);
    if (it != names.end()) v = it->second;
  }
  return from_terms(std::move(nv), terms_, tcap_);
}

Poly Poly::eval(const std::map<std::string, Rational>& point) const {
  std::map<std::string, Poly> repl;
  for (const auto& [k, v] : point) repl.emplace(k, Poly::constant(v));
  return substitute(repl);
}

Poly Poly::coefficient_of(const std::string& var, int k) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return k == 0 ? *this : Poly();
  size_t idx = it - vars_.begin();
  std::map<ExpVec, Rational> out;
  for (const auto& [e, c] : terms_) {
    if (e[idx] != k) continue;
    ExpVec ne = e;
    ne[idx] = 0;
    out[std::move(ne)] += c;
  }
  return from_terms(vars_, std::move(out), std::nullopt);
}

Poly Poly::with_tcap(std::optional<int> cap) const {
  Poly p = *this;
  p.tcap_ = cap;
  p.prune();
  return p;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::vector<std::string> factors;
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      factors.push_back(e[i] == 1 ? vars_[i]
                                  : vars_[i] + "^" + std::to_string(e[i]));
    }
    if (factors.empty()) {
      os << to_string(a);
    } else {
      if (a != 1) os << to_string(a) << "*";
      for (size_t i = 0; i < factors.size(); ++i)
        os << (i ? "*" : "") << factors[i];
    }
  }
  return os.str();
}

}  // namespace udeform
