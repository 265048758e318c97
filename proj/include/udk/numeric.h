#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "udk/error.h"

namespace udk {

/// Exact number a + b*sqrt(3) with rational a, b.
///
/// Both parts are kept reduced with positive denominators after every
/// operation, so two values are equal exactly when their representations
/// are identical.
class QField {
 public:
  QField() = default;
  QField(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  QField(mpq_class a, mpq_class b = 0);

  /// (a_num/a_den) + (b_num/b_den)*sqrt3, reduced. Throws DivisionByZero
  /// when a denominator is zero.
  static QField from_parts(const mpz_class& a_num, const mpz_class& a_den,
                           const mpz_class& b_num, const mpz_class& b_den);
  static QField sqrt3() { return QField(0, 1); }
  /// p/q as a rational element.
  static QField ratio(long p, long q);

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& sqrt3_part() const { return b_; }

  int sign() const;
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  double to_double() const;
  /// Human readable form, e.g. "1/2+3/4*sqrt3".
  std::string to_string() const;
  /// Galois conjugate a - b*sqrt(3).
  QField conjugate() const { return QField(a_, -b_); }

  QField operator-() const { return QField(-a_, -b_); }
  QField& operator+=(const QField& o);
  QField& operator-=(const QField& o);
  QField& operator*=(const QField& o);
  QField& operator/=(const QField& o);

  friend QField operator+(QField x, const QField& y) { return x += y; }
  friend QField operator-(QField x, const QField& y) { return x -= y; }
  friend QField operator*(QField x, const QField& y) { return x *= y; }
  friend QField operator/(QField x, const QField& y) { return x /= y; }

  friend bool operator==(const QField& x, const QField& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  /// Numeric order (decided exactly).
  friend std::strong_ordering operator<=>(const QField& x, const QField& y);

  /// Representation order: cheaper than numeric order, used for map keys.
  static int rep_compare(const QField& x, const QField& y);

 private:
  mpq_class a_;
  mpq_class b_;
};

enum class FieldOp { add, sub, mul, div };

/// Dispatching form of the four field operations.
QField qfield_arith(const QField& x, const QField& y, FieldOp op);
/// Sign of the real value, in {-1, 0, +1}.
int qfield_sign(const QField& x);

/// Point of the plane with coordinates in Q(sqrt 3).
struct Point {
  QField x;
  QField y;

  friend bool operator==(const Point&, const Point&) = default;
  friend Point operator+(const Point& p, const Point& q) { return {p.x + q.x, p.y + q.y}; }
  friend Point operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
};

/// Strict weak order on representations, for exact deduplication maps.
struct PointRepLess {
  bool operator()(const Point& p, const Point& q) const {
    int c = QField::rep_compare(p.x, q.x);
    if (c != 0) return c < 0;
    return QField::rep_compare(p.y, q.y) < 0;
  }
};

QField dot(const Point& u, const Point& v);
QField cross(const Point& u, const Point& v);
QField squared_norm(const Point& p);
QField squared_distance(const Point& p, const Point& q);
/// Sign of (b - a) x (c - a).
int orientation(const Point& a, const Point& b, const Point& c);

/// Rotation (x, y) -> (c x - s y, s x + c y); requires c^2 + s^2 = 1 exactly.
Point rotate(const Point& p, const QField& c, const QField& s);

/// Predicates over a fixed point set, evaluated in scaled integer form.
///
/// All coordinates are brought to a common denominator D so that every
/// coordinate reads (p + q*sqrt3)/D with small integers p, q. Orientation,
/// cross and dot signs then reduce to 128-bit integer arithmetic. When the
/// point set does not fit the integer budget the frame falls back to
/// QField arithmetic; both routes are exact.
class ExactFrame {
 public:
  explicit ExactFrame(std::span<const Point> points);

  bool integral() const { return integral_; }
  std::size_t size() const { return points_.size(); }

  /// Sign of (p[j] - p[i]) x (p[k] - p[i]).
  int orient(int i, int j, int k) const;
  /// Sign of (p[b] - p[a]) x (p[d] - p[c]).
  int cross_sign(int a, int b, int c, int d) const;
  /// Sign of (p[b] - p[a]) . (p[d] - p[c]).
  int dot_sign(int a, int b, int c, int d) const;
  /// Signs of the coordinate differences of p[b] - p[a].
  int dx_sign(int a, int b) const;
  int dy_sign(int a, int b) const;
  /// Whether p[i] == p[j].
  bool same(int i, int j) const;

 private:
  struct Scaled {
    std::int64_t xa, xb, ya, yb;
  };
  std::span<const Point> points_;
  std::vector<Scaled> scaled_;
  bool integral_ = false;
};

}  // namespace udk
