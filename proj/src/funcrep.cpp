#include "smoothlab/funcrep.hpp"

#include "smoothlab/chebyshev.hpp"
#include "smoothlab/errors.hpp"
#include "smoothlab/jacobi.hpp"

namespace smoothlab {

FuncRep::FuncRep() = default;

FuncRep FuncRep::callable(Fn f, std::string label) {
  if (!f) fail_validation("FuncRep::callable: empty function");
  FuncRep r;
  r.kind_ = Kind::Callable;
  r.fn_ = std::make_shared<const Fn>(std::move(f));
  r.coeffs_.clear();
  r.label_ = std::move(label);
  return r;
}

FuncRep FuncRep::cheb(std::vector<double> coeffs) {
  FuncRep r;
  r.kind_ = Kind::Cheb;
  if (coeffs.empty()) coeffs.push_back(0.0);
  r.coeffs_ = std::move(coeffs);
  r.label_ = "cheb";
  return r;
}

FuncRep FuncRep::jacobi(std::vector<double> coeffs, double nu, double mu) {
  if (!(nu > -1.0) || !(mu > -1.0)) fail_validation("FuncRep::jacobi: nu, mu must exceed -1");
  FuncRep r;
  r.kind_ = Kind::Jacobi;
  if (coeffs.empty()) coeffs.push_back(0.0);
  r.coeffs_ = std::move(coeffs);
  r.nu_ = nu;
  r.mu_ = mu;
  r.label_ = "jacobi";
  return r;
}

FuncRep FuncRep::constant(double c) { return cheb({c}); }

FuncRep FuncRep::monomial(const std::vector<double>& coeffs) {
  return cheb(cheb::from_monomial(coeffs));
}

double FuncRep::operator()(double x) const {
  switch (kind_) {
    case Kind::Callable: return (*fn_)(x);
    case Kind::Cheb: return cheb::eval(coeffs_, x);
    case Kind::Jacobi: return jacobi_series_eval(coeffs_, nu_, mu_, x);
  }
  return 0.0;
}

int FuncRep::degree() const {
  if (kind_ == Kind::Callable) return -1;
  return static_cast<int>(coeffs_.size()) - 1;
}

std::vector<double> FuncRep::cheb_coeffs(int degree_if_callable) const {
  if (kind_ == Kind::Cheb) return coeffs_;
  int n = (kind_ == Kind::Jacobi) ? degree() : degree_if_callable;
  if (n < 0) fail_validation("cheb_coeffs: negative degree");
  std::vector<double> x = cheb::lobatto_points(n), v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) v[i] = (*this)(x[i]);
  return cheb::interp_lobatto(v);
}

FuncRep FuncRep::as_cheb(int degree_if_callable) const {
  if (kind_ == Kind::Cheb) return *this;
  return cheb(cheb_coeffs(degree_if_callable));
}

FuncRep to_cheb(const FuncRep::Fn& f, int degree) {
  if (degree < 0) fail_validation("to_cheb: degree must be nonnegative");
  std::vector<double> x = cheb::lobatto_points(degree), v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) v[i] = f(x[i]);
  return FuncRep::cheb(cheb::interp_lobatto(v));
}

FuncRep operator+(const FuncRep& a, const FuncRep& b) {
  using K = FuncRep::Kind;
  if (a.kind() == K::Jacobi && b.kind() == K::Jacobi && a.nu() == b.nu() && a.mu() == b.mu()) {
    return FuncRep::jacobi(cheb::add(a.coefficients(), b.coefficients()), a.nu(), a.mu());
  }
  if (a.is_series() && b.is_series()) {
    return FuncRep::cheb(cheb::add(a.cheb_coeffs(), b.cheb_coeffs()));
  }
  return FuncRep::callable([a, b](double x) { return a(x) + b(x); }, a.label() + "+" + b.label());
}

FuncRep operator*(double s, const FuncRep& a) {
  using K = FuncRep::Kind;
  if (a.kind() == K::Jacobi) return FuncRep::jacobi(cheb::scale(a.coefficients(), s), a.nu(), a.mu());
  if (a.kind() == K::Cheb) return FuncRep::cheb(cheb::scale(a.coefficients(), s));
  return FuncRep::callable([a, s](double x) { return s * a(x); }, a.label());
}

FuncRep operator-(const FuncRep& a, const FuncRep& b) { return a + (-1.0) * b; }

}  // namespace smoothlab
