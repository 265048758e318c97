#include "udk/numeric.h"

namespace udk {

namespace {

// Scaled coordinates stay below 2^26, so differences fit in 2^27, products
// of two differences in 2^56 and a cross or dot product in 2^57. Squaring
// that for the final sign test stays inside signed 128-bit range.
constexpr long kBudgetBits = 26;

using i128 = __int128;

struct Zs {  // p + q*sqrt3 with integer parts
  i128 p, q;
};

Zs mul(std::int64_t p1, std::int64_t q1, std::int64_t p2, std::int64_t q2) {
  return {i128(p1) * p2 + 3 * i128(q1) * q2, i128(p1) * q2 + i128(q1) * p2};
}

int sign_of(const Zs& z) {
  int sp = z.p > 0 ? 1 : (z.p < 0 ? -1 : 0);
  int sq = z.q > 0 ? 1 : (z.q < 0 ? -1 : 0);
  if (sp == sq || sq == 0) return sp;
  if (sp == 0) return sq;
  i128 lhs = z.p * z.p;
  i128 rhs = 3 * z.q * z.q;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sp : sq;
}

bool fits(const mpz_class& v) {
  return mpz_sizeinbase(v.get_mpz_t(), 2) < static_cast<size_t>(kBudgetBits);
}

}  // namespace

ExactFrame::ExactFrame(std::span<const Point> points) : points_(points) {
  mpz_class den = 1;
  for (const auto& p : points) {
    for (const QField* c : {&p.x, &p.y}) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c->rational_part().get_den_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c->sqrt3_part().get_den_mpz_t());
      if (!fits(den)) return;
    }
  }
  scaled_.reserve(points.size());
  auto scale = [&](const mpq_class& q, std::int64_t& out) {
    mpz_class v = q.get_num() * (den / q.get_den());
    if (!fits(v)) return false;
    out = v.get_si();
    return true;
  };
  for (const auto& p : points) {
    Scaled s{};
    if (!scale(p.x.rational_part(), s.xa) || !scale(p.x.sqrt3_part(), s.xb) ||
        !scale(p.y.rational_part(), s.ya) || !scale(p.y.sqrt3_part(), s.yb)) {
      scaled_.clear();
      return;
    }
    scaled_.push_back(s);
  }
  integral_ = true;
}

int ExactFrame::cross_sign(int a, int b, int c, int d) const {
  if (!integral_) {
    return cross(points_[b] - points_[a], points_[d] - points_[c]).sign();
  }
  const Scaled &A = scaled_[a], &B = scaled_[b], &C = scaled_[c], &D = scaled_[d];
  std::int64_t ux_p = B.xa - A.xa, ux_q = B.xb - A.xb;
  std::int64_t uy_p = B.ya - A.ya, uy_q = B.yb - A.yb;
  std::int64_t vx_p = D.xa - C.xa, vx_q = D.xb - C.xb;
  std::int64_t vy_p = D.ya - C.ya, vy_q = D.yb - C.yb;
  Zs l = mul(ux_p, ux_q, vy_p, vy_q);
  Zs r = mul(uy_p, uy_q, vx_p, vx_q);
  return sign_of({l.p - r.p, l.q - r.q});
}

int ExactFrame::dot_sign(int a, int b, int c, int d) const {
  if (!integral_) {
    return dot(points_[b] - points_[a], points_[d] - points_[c]).sign();
  }
  const Scaled &A = scaled_[a], &B = scaled_[b], &C = scaled_[c], &D = scaled_[d];
  Zs l = mul(B.xa - A.xa, B.xb - A.xb, D.xa - C.xa, D.xb - C.xb);
  Zs r = mul(B.ya - A.ya, B.yb - A.yb, D.ya - C.ya, D.yb - C.yb);
  return sign_of({l.p + r.p, l.q + r.q});
}

int ExactFrame::orient(int i, int j, int k) const { return cross_sign(i, j, i, k); }

int ExactFrame::dx_sign(int a, int b) const {
  if (!integral_) return (points_[b].x - points_[a].x).sign();
  return sign_of({i128(scaled_[b].xa) - scaled_[a].xa, i128(scaled_[b].xb) - scaled_[a].xb});
}

int ExactFrame::dy_sign(int a, int b) const {
  if (!integral_) return (points_[b].y - points_[a].y).sign();
  return sign_of({i128(scaled_[b].ya) - scaled_[a].ya, i128(scaled_[b].yb) - scaled_[a].yb});
}

bool ExactFrame::same(int i, int j) const {
  if (!integral_) return points_[i] == points_[j];
  const Scaled &A = scaled_[i], &B = scaled_[j];
  return A.xa == B.xa && A.xb == B.xb && A.ya == B.ya && A.yb == B.yb;
}

}  // namespace udk
