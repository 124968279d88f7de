#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

#include "klag/types.hpp"

namespace klag {

using Rational = boost::multiprecision::cpp_rational;
using Exponent = std::vector<int>;

/// Sparse multivariate polynomial; zero coefficients are never stored.
template <class T>
class Poly {
 public:
  explicit Poly(int dim = 1) : dim_(dim) {}

  static Poly monomial(int dim, const Exponent& e, const T& c = T(1)) {
    Poly p(dim);
    p.add_term(e, c);
    return p;
  }
  static Poly constant(int dim, const T& c) { return monomial(dim, Exponent(dim, 0), c); }
  /// The coordinate function x_i.
  static Poly coordinate(int dim, int i) {
    Exponent e(dim, 0);
    e[i] = 1;
    return monomial(dim, e);
  }

  int dim() const { return dim_; }
  const std::map<Exponent, T>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total(e));
    return d;
  }
  bool is_homogeneous(int m) const {
    for (const auto& [e, c] : terms_)
      if (total(e) != m) return false;
    return true;
  }

  void add_term(const Exponent& e, const T& c) {
    if (c == T(0)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == T(0)) terms_.erase(it);
    }
  }

  T coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? T(0) : it->second;
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, T(0) - c);
    return *this;
  }
  Poly& operator*=(const T& s) {
    if (s == T(0)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const T& s) { return a *= s; }
  friend Poly operator*(const T& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r(a.dim_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(ea);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  /// Multiplication by x_i.
  Poly times_coordinate(int i) const {
    Poly r(dim_);
    for (const auto& [e, c] : terms_) {
      Exponent f(e);
      ++f[i];
      r.terms_.emplace(f, c);
    }
    return r;
  }

  /// f ∘ σ_i where σ_i flips the sign of x_i.
  Poly reflect(int i) const {
    Poly r(dim_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, e[i] % 2 ? T(0) - c : c);
    return r;
  }

  /// Euler operator Σ x_j ∂_j.
  Poly euler() const {
    Poly r(dim_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * T(total(e)));
    return r;
  }

  template <class U>
  U eval(const std::vector<U>& x) const {
    U s(0);
    for (const auto& [e, c] : terms_) {
      U m = U(c);
      for (int i = 0; i < dim_; ++i)
        for (int q = 0; q < e[i]; ++q) m *= x[i];
      s += m;
    }
    return s;
  }

  /// Converts coefficients to another scalar type.
  template <class U>
  Poly<U> cast() const {
    Poly<U> r(dim_);
    for (const auto& [e, c] : terms_) r.add_term(e, static_cast<U>(c));
    return r;
  }

  static int total(const Exponent& e) {
    int s = 0;
    for (int v : e) s += v;
    return s;
  }

 private:
  int dim_;
  std::map<Exponent, T> terms_;
};

using PolyND = Poly<double>;
using PolyC = Poly<cplx>;
using PolyQ = Poly<Rational>;

/// All exponent tuples of total degree m in dim variables, lexicographic order.
std::vector<Exponent> monomials_of_degree(int dim, int m);

}  // namespace klag
