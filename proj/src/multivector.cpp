#include "cliff/multivector.hpp"

#include <algorithm>
#include <complex>
#include <stdexcept>
#include <vector>

#include "cliff/errors.hpp"
#include "qarith.hpp"

namespace cliff {

namespace {

void require_compatible(const Multivector& a, const Multivector& b) {
  if (!(a.sig() == b.sig()) || !compatible(a.kind(), b.kind())) {
    throw std::invalid_argument("multivector operands disagree on signature or field");
  }
}

}  // namespace

Multivector Multivector::unit(Signature sig, FieldKind kind) {
  Multivector u(sig, kind);
  u.set_coeff(0, Scalar::one(kind));
  return u;
}

Multivector Multivector::blade(Signature sig, FieldKind kind, BladeMask mask, Scalar coeff) {
  Multivector u(sig, kind);
  u.set_coeff(mask, std::move(coeff));
  return u;
}

Multivector Multivector::scalar_multiple(Signature sig, FieldKind kind, Scalar coeff) {
  return blade(sig, kind, 0, std::move(coeff));
}

Scalar Multivector::coeff(BladeMask mask) const {
  auto it = coeffs_.find(mask);
  return it == coeffs_.end() ? Scalar::zero(kind_) : it->second;
}

void Multivector::set_coeff(BladeMask mask, Scalar value) {
  if (mask > sig_.full_mask()) throw std::invalid_argument("blade mask exceeds dimension");
  if (kind_.tag == Field::RealExact && value.has_imaginary_part()) {
    throw FieldMismatch("imaginary coefficient in a real algebra");
  }
  if (value.structurally_zero()) {
    coeffs_.erase(mask);
  } else {
    coeffs_.insert_or_assign(mask, std::move(value));
  }
}

void Multivector::add_to_coeff(BladeMask mask, const Scalar& value) {
  auto it = coeffs_.find(mask);
  if (it == coeffs_.end()) {
    set_coeff(mask, value);
    return;
  }
  Scalar sum = it->second + value;
  if (sum.structurally_zero()) {
    coeffs_.erase(it);
  } else {
    it->second = std::move(sum);
  }
}

bool Multivector::is_zero() const {
  if (kind_.exact()) return coeffs_.empty();
  for (const auto& [mask, c] : coeffs_) {
    if (!cliff::is_zero(c, kind_)) return false;
  }
  return true;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  require_compatible(*this, o);
  for (const auto& [mask, c] : o.coeffs()) add_to_coeff(mask, c);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  require_compatible(*this, o);
  for (const auto& [mask, c] : o.coeffs()) add_to_coeff(mask, -c);
  return *this;
}

Multivector operator+(const Multivector& a, const Multivector& b) {
  Multivector out = a;
  out += b;
  return out;
}

Multivector operator-(const Multivector& a, const Multivector& b) {
  Multivector out = a;
  out -= b;
  return out;
}

Multivector operator-(const Multivector& a) {
  Multivector out(a.sig(), a.kind());
  for (const auto& [mask, c] : a.coeffs()) out.set_coeff(mask, -c);
  return out;
}

Multivector operator*(const Multivector& a, const Multivector& b) {
  require_compatible(a, b);
  const std::uint32_t dim = a.sig().dim();
  Multivector out(a.sig(), a.kind());

  // Accumulate densely, then compress. The dense pass keeps every sum in a
  // fixed ascending mask order, so float results are reproducible.
  if (a.kind().exact()) {
    std::vector<mpq_class> re(dim);
    std::vector<mpq_class> im(dim);
    mpq_class tmp;
    for (const auto& [ma, ca] : a.coeffs()) {
      const mpq_class& ar = ca.exact_re();
      const mpq_class& ai = ca.exact_im();
      for (const auto& [mb, cb] : b.coeffs()) {
        const auto [sign, mask] = blade_product(ma, mb, a.sig());
        detail::accumulate_product(re[mask], im[mask], ar, ai, cb.exact_re(),
                                   cb.exact_im(), sign, tmp);
      }
    }
    for (std::uint32_t m = 0; m < dim; ++m) {
      if (sgn(re[m]) != 0 || sgn(im[m]) != 0) {
        out.set_coeff(m, Scalar::gaussian(std::move(re[m]), std::move(im[m])));
      }
    }
    return out;
  }

  std::vector<double> re(dim, 0.0);
  std::vector<double> im(dim, 0.0);
  for (const auto& [ma, ca] : a.coeffs()) {
    const double ar = ca.float_re();
    const double ai = ca.float_im();
    for (const auto& [mb, cb] : b.coeffs()) {
      const auto [sign, mask] = blade_product(ma, mb, a.sig());
      const double br = cb.float_re();
      const double bi = cb.float_im();
      const double s = sign;
      re[mask] += s * (ar * br - ai * bi);
      im[mask] += s * (ar * bi + ai * br);
    }
  }
  for (std::uint32_t m = 0; m < dim; ++m) {
    if (re[m] != 0.0 || im[m] != 0.0) {
      out.set_coeff(m, Scalar::complex_float(re[m], im[m]));
    }
  }
  return out;
}

Multivector scale(const Multivector& a, const Scalar& s) {
  Multivector out(a.sig(), a.kind());
  for (const auto& [mask, c] : a.coeffs()) out.set_coeff(mask, c * s);
  return out;
}

Multivector grade_project(const Multivector& u, int k) {
  if (k < 0 || k > u.sig().n()) throw std::invalid_argument("grade out of range");
  Multivector out(u.sig(), u.kind());
  for (const auto& [mask, c] : u.coeffs()) {
    if (grade(mask) == k) out.set_coeff(mask, c);
  }
  return out;
}

Scalar trace(const Multivector& u) { return u.coeff(0); }

Scalar pi_project(const Multivector& u) { return u.coeff(u.sig().full_mask()); }

std::pair<Multivector, Multivector> parity_split(const Multivector& u) {
  Multivector even(u.sig(), u.kind());
  Multivector odd(u.sig(), u.kind());
  for (const auto& [mask, c] : u.coeffs()) {
    (even_grade(mask) ? even : odd).set_coeff(mask, c);
  }
  return {even, odd};
}

namespace {

// Gaussian integer, one matrix entry of the denominator-cleared system.
struct ZC {
  mpz_class re;
  mpz_class im;

  bool zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

struct ZcScratch {
  mpz_class t1, t2, t3, t4, norm;
};

// out = a * b (out must not alias a or b).
void zc_mul(ZC& out, const ZC& a, const ZC& b, ZcScratch& s) {
  if (sgn(a.im) == 0 && sgn(b.im) == 0) {
    mpz_mul(out.re.get_mpz_t(), a.re.get_mpz_t(), b.re.get_mpz_t());
    out.im = 0;
    return;
  }
  mpz_mul(s.t1.get_mpz_t(), a.re.get_mpz_t(), b.re.get_mpz_t());
  mpz_mul(s.t2.get_mpz_t(), a.im.get_mpz_t(), b.im.get_mpz_t());
  mpz_mul(s.t3.get_mpz_t(), a.re.get_mpz_t(), b.im.get_mpz_t());
  mpz_mul(s.t4.get_mpz_t(), a.im.get_mpz_t(), b.re.get_mpz_t());
  mpz_sub(out.re.get_mpz_t(), s.t1.get_mpz_t(), s.t2.get_mpz_t());
  mpz_add(out.im.get_mpz_t(), s.t3.get_mpz_t(), s.t4.get_mpz_t());
}

// out = z / w, exact in the Gaussian integers (Bareiss guarantees this).
void zc_divexact(ZC& out, const ZC& z, const ZC& w, ZcScratch& s) {
  if (sgn(w.im) == 0) {
    mpz_divexact(out.re.get_mpz_t(), z.re.get_mpz_t(), w.re.get_mpz_t());
    mpz_divexact(out.im.get_mpz_t(), z.im.get_mpz_t(), w.re.get_mpz_t());
    return;
  }
  // z / w = z * conj(w) / |w|^2
  mpz_mul(s.norm.get_mpz_t(), w.re.get_mpz_t(), w.re.get_mpz_t());
  mpz_addmul(s.norm.get_mpz_t(), w.im.get_mpz_t(), w.im.get_mpz_t());
  mpz_mul(s.t1.get_mpz_t(), z.re.get_mpz_t(), w.re.get_mpz_t());
  mpz_addmul(s.t1.get_mpz_t(), z.im.get_mpz_t(), w.im.get_mpz_t());
  mpz_mul(s.t2.get_mpz_t(), z.im.get_mpz_t(), w.re.get_mpz_t());
  mpz_submul(s.t2.get_mpz_t(), z.re.get_mpz_t(), w.im.get_mpz_t());
  mpz_divexact(out.re.get_mpz_t(), s.t1.get_mpz_t(), s.norm.get_mpz_t());
  mpz_divexact(out.im.get_mpz_t(), s.t2.get_mpz_t(), s.norm.get_mpz_t());
}

// Fraction-free (Bareiss) elimination on the denominator-cleared system,
// first-nonzero pivoting, rational back-substitution. Solves M x = e_0.
void solve_exact(std::vector<ZC>& m, std::vector<ZC>& rhs, std::vector<mpq_class>& xr,
                 std::vector<mpq_class>& xi, std::uint32_t dim) {
  const auto idx = [dim](std::uint32_t r, std::uint32_t c) { return std::size_t{r} * dim + c; };
  ZcScratch s;
  ZC prev{1, 0};
  ZC t_ac;
  ZC t_bd;
  ZC diff;

  for (std::uint32_t col = 0; col < dim; ++col) {
    std::uint32_t pivot = dim;
    for (std::uint32_t r = col; r < dim; ++r) {
      if (!m[idx(r, col)].zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot == dim) throw NotInvertible();
    if (pivot != col) {
      for (std::uint32_t c = col; c < dim; ++c) std::swap(m[idx(pivot, c)], m[idx(col, c)]);
      std::swap(rhs[pivot], rhs[col]);
    }
    const ZC& piv = m[idx(col, col)];
    for (std::uint32_t r = col + 1; r < dim; ++r) {
      ZC& lead = m[idx(r, col)];
      const bool lead_zero = lead.zero();
      for (std::uint32_t c = col + 1; c < dim; ++c) {
        zc_mul(t_ac, m[idx(r, c)], piv, s);
        if (lead_zero) {
          diff = t_ac;
        } else {
          zc_mul(t_bd, lead, m[idx(col, c)], s);
          mpz_sub(diff.re.get_mpz_t(), t_ac.re.get_mpz_t(), t_bd.re.get_mpz_t());
          mpz_sub(diff.im.get_mpz_t(), t_ac.im.get_mpz_t(), t_bd.im.get_mpz_t());
        }
        zc_divexact(m[idx(r, c)], diff, prev, s);
      }
      zc_mul(t_ac, rhs[r], piv, s);
      if (lead_zero) {
        diff = t_ac;
      } else {
        zc_mul(t_bd, lead, rhs[col], s);
        mpz_sub(diff.re.get_mpz_t(), t_ac.re.get_mpz_t(), t_bd.re.get_mpz_t());
        mpz_sub(diff.im.get_mpz_t(), t_ac.im.get_mpz_t(), t_bd.im.get_mpz_t());
      }
      zc_divexact(rhs[r], diff, prev, s);
      lead.re = 0;
      lead.im = 0;
    }
    prev = piv;
  }

  // Back-substitution over Gaussian rationals.
  mpq_class tmp;
  mpq_class norm;
  mpq_class wr;
  mpq_class wi;
  for (std::uint32_t r = dim; r-- > 0;) {
    mpq_class acc_r(rhs[r].re);
    mpq_class acc_i(rhs[r].im);
    for (std::uint32_t c = r + 1; c < dim; ++c) {
      const ZC& cell = m[idx(r, c)];
      if (cell.zero()) continue;
      detail::accumulate_product(acc_r, acc_i, mpq_class(cell.re), mpq_class(cell.im),
                                 xr[c], xi[c], -1, tmp);
    }
    wr = m[idx(r, r)].re;
    wi = m[idx(r, r)].im;
    detail::complex_div(xr[r], xi[r], acc_r, acc_i, wr, wi, tmp, norm);
  }
}

// Same system over complex doubles with partial pivoting; a pivot at or
// below the tolerance counts as singular.
void solve_float(std::vector<std::complex<double>>& m, std::vector<std::complex<double>>& x,
                 std::uint32_t dim, double tolerance) {
  std::vector<std::complex<double>> rhs(dim, 0.0);
  rhs[0] = 1.0;
  const auto idx = [dim](std::uint32_t r, std::uint32_t c) { return std::size_t{r} * dim + c; };

  for (std::uint32_t col = 0; col < dim; ++col) {
    std::uint32_t pivot = dim;
    double best = tolerance;
    for (std::uint32_t r = col; r < dim; ++r) {
      const double mag = std::abs(m[idx(r, col)]);
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    if (pivot == dim) throw NotInvertible();
    if (pivot != col) {
      for (std::uint32_t c = col; c < dim; ++c) std::swap(m[idx(pivot, c)], m[idx(col, c)]);
      std::swap(rhs[pivot], rhs[col]);
    }
    for (std::uint32_t r = col + 1; r < dim; ++r) {
      if (m[idx(r, col)] == 0.0) continue;
      const std::complex<double> factor = m[idx(r, col)] / m[idx(col, col)];
      m[idx(r, col)] = 0.0;
      for (std::uint32_t c = col + 1; c < dim; ++c) m[idx(r, c)] -= factor * m[idx(col, c)];
      rhs[r] -= factor * rhs[col];
    }
  }

  for (std::uint32_t r = dim; r-- > 0;) {
    std::complex<double> acc = rhs[r];
    for (std::uint32_t c = r + 1; c < dim; ++c) acc -= m[idx(r, c)] * x[c];
    x[r] = acc / m[idx(r, r)];
  }
}

}  // namespace

Multivector mv_inverse(const Multivector& u) {
  const std::uint32_t dim = u.sig().dim();
  const FieldKind kind = u.kind();
  Multivector inv(u.sig(), kind);

  if (kind.exact()) {
    // Clear denominators once: every matrix entry is a signed copy of a
    // coefficient of U, so one global lcm turns the system integral.
    mpz_class common(1);
    for (const auto& [mask, c] : u.coeffs()) {
      mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.exact_re().get_den().get_mpz_t());
      mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.exact_im().get_den().get_mpz_t());
    }
    std::vector<std::pair<BladeMask, ZC>> entries;
    entries.reserve(u.coeffs().size());
    for (const auto& [mask, c] : u.coeffs()) {
      ZC z;
      z.re = c.exact_re().get_num() * (common / c.exact_re().get_den());
      z.im = c.exact_im().get_num() * (common / c.exact_im().get_den());
      entries.emplace_back(mask, std::move(z));
    }

    std::vector<ZC> m(std::size_t{dim} * dim);
    for (std::uint32_t col = 0; col < dim; ++col) {
      for (const auto& [mask, z] : entries) {
        const auto [sign, row] = blade_product(mask, col, u.sig());
        ZC& cell = m[std::size_t{row} * dim + col];
        if (sign > 0) {
          cell.re = z.re;
          cell.im = z.im;
        } else {
          cell.re = -z.re;
          cell.im = -z.im;
        }
      }
    }
    std::vector<ZC> rhs(dim);
    rhs[0].re = common;

    std::vector<mpq_class> xr(dim);
    std::vector<mpq_class> xi(dim);
    solve_exact(m, rhs, xr, xi, dim);
    for (std::uint32_t mask = 0; mask < dim; ++mask) {
      if (sgn(xr[mask]) != 0 || sgn(xi[mask]) != 0) {
        inv.set_coeff(mask, Scalar::gaussian(std::move(xr[mask]), std::move(xi[mask])));
      }
    }
  } else {
    std::vector<std::complex<double>> m(std::size_t{dim} * dim, 0.0);
    for (std::uint32_t col = 0; col < dim; ++col) {
      for (const auto& [mask, c] : u.coeffs()) {
        const auto [sign, row] = blade_product(mask, col, u.sig());
        const std::complex<double> v{c.float_re(), c.float_im()};
        m[std::size_t{row} * dim + col] += (sign > 0) ? v : -v;
      }
    }
    std::vector<std::complex<double>> x(dim, 0.0);
    solve_float(m, x, dim, kind.tolerance);
    for (std::uint32_t mask = 0; mask < dim; ++mask) {
      if (x[mask] != 0.0) inv.set_coeff(mask, Scalar::complex_float(x[mask].real(), x[mask].imag()));
    }
  }

  const Multivector e = Multivector::unit(u.sig(), kind);
  if (!mv_equal(u * inv, e) || !mv_equal(inv * u, e)) {
    throw NotInvertible("inverse candidate failed the two-sided check");
  }
  return inv;
}

bool is_central(const Multivector& u) {
  for (int a = 1; a <= u.sig().n(); ++a) {
    const Multivector g =
        Multivector::blade(u.sig(), u.kind(), BladeMask{1} << (a - 1), Scalar::one(u.kind()));
    if (!mv_equal(u * g, g * u)) return false;
  }
  return true;
}

bool mv_equal(const Multivector& a, const Multivector& b) {
  require_compatible(a, b);
  if (a.kind().exact()) return a.coeffs() == b.coeffs();
  return distance(a, b) <= a.kind().tolerance;
}

double max_norm(const Multivector& u) {
  double best = 0.0;
  for (const auto& [mask, c] : u.coeffs()) best = std::max(best, abs_approx(c));
  return best;
}

double distance(const Multivector& a, const Multivector& b) { return max_norm(a - b); }

}  // namespace cliff
