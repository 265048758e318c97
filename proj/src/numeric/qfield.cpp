#include <cmath>
#include <sstream>

#include "udk/numeric.h"

namespace udk {

namespace {

const double kSqrt3 = std::sqrt(3.0);

std::string rational_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

QField::QField(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

QField QField::from_parts(const mpz_class& a_num, const mpz_class& a_den,
                          const mpz_class& b_num, const mpz_class& b_den) {
  if (a_den == 0 || b_den == 0) throw DivisionByZero();
  return QField(mpq_class(a_num, a_den), mpq_class(b_num, b_den));
}

QField QField::ratio(long p, long q) {
  if (q == 0) throw DivisionByZero();
  return QField(mpq_class(p, q));
}

int QField::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sa == sb || sb == 0) return sa;
  if (sa == 0) return sb;
  // Opposite signs: compare a^2 with 3 b^2.
  mpq_class lhs = a_ * a_;
  mpq_class rhs = 3 * b_ * b_;
  int c = cmp(lhs, rhs);
  return c == 0 ? 0 : (c > 0 ? sa : sb);
}

double QField::to_double() const { return a_.get_d() + b_.get_d() * kSqrt3; }

std::string QField::to_string() const {
  if (sgn(b_) == 0) return rational_string(a_);
  std::string out;
  if (sgn(a_) != 0) {
    out = rational_string(a_);
    if (sgn(b_) > 0) out += "+";
  }
  return out + rational_string(b_) + "*sqrt3";
}

QField& QField::operator+=(const QField& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QField& QField::operator-=(const QField& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QField& QField::operator*=(const QField& o) {
  mpq_class a = a_ * o.a_ + 3 * b_ * o.b_;
  mpq_class b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QField& QField::operator/=(const QField& o) {
  if (o.is_zero()) throw DivisionByZero();
  // Multiply through by the conjugate; the norm c^2 - 3d^2 is nonzero
  // because sqrt3 is irrational.
  mpq_class norm = o.a_ * o.a_ - 3 * o.b_ * o.b_;
  mpq_class a = (a_ * o.a_ - 3 * b_ * o.b_) / norm;
  mpq_class b = (b_ * o.a_ - a_ * o.b_) / norm;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

std::strong_ordering operator<=>(const QField& x, const QField& y) {
  int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

int QField::rep_compare(const QField& x, const QField& y) {
  int c = cmp(x.a_, y.a_);
  if (c != 0) return c < 0 ? -1 : 1;
  c = cmp(x.b_, y.b_);
  return c == 0 ? 0 : (c < 0 ? -1 : 1);
}

QField qfield_arith(const QField& x, const QField& y, FieldOp op) {
  switch (op) {
    case FieldOp::add:
      return x + y;
    case FieldOp::sub:
      return x - y;
    case FieldOp::mul:
      return x * y;
    case FieldOp::div:
      return x / y;
  }
  throw Error("unknown field operation");
}

int qfield_sign(const QField& x) { return x.sign(); }

QField dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }

QField cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }

QField squared_norm(const Point& p) { return dot(p, p); }

QField squared_distance(const Point& p, const Point& q) { return squared_norm(p - q); }

int orientation(const Point& a, const Point& b, const Point& c) {
  return cross(b - a, c - a).sign();
}

Point rotate(const Point& p, const QField& c, const QField& s) {
  if (c * c + s * s != QField(1)) {
    throw PreconditionError("rotate: (" + c.to_string() + ", " + s.to_string() +
                            ") is not a unit vector");
  }
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

}  // namespace udk
