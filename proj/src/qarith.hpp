#pragma once

// In-place complex-rational helpers for the hot loops (products, Gaussian
// elimination). mpq temporaries are reused through a caller-owned scratch.

#include <gmpxx.h>

namespace cliff::detail {

inline void addmul(mpq_class& acc, const mpq_class& x, const mpq_class& y, mpq_class& tmp) {
  mpq_mul(tmp.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
  mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), tmp.get_mpq_t());
}

inline void submul(mpq_class& acc, const mpq_class& x, const mpq_class& y, mpq_class& tmp) {
  mpq_mul(tmp.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
  mpq_sub(acc.get_mpq_t(), acc.get_mpq_t(), tmp.get_mpq_t());
}

// acc += sign * (a * b) over Gaussian rationals, skipping the imaginary
// lanes when both factors are real.
inline void accumulate_product(mpq_class& acc_re, mpq_class& acc_im, const mpq_class& ar,
                               const mpq_class& ai, const mpq_class& br,
                               const mpq_class& bi, int sign, mpq_class& tmp) {
  const bool both_real = sgn(ai) == 0 && sgn(bi) == 0;
  if (sign > 0) {
    addmul(acc_re, ar, br, tmp);
    if (!both_real) {
      submul(acc_re, ai, bi, tmp);
      addmul(acc_im, ar, bi, tmp);
      addmul(acc_im, ai, br, tmp);
    }
  } else {
    submul(acc_re, ar, br, tmp);
    if (!both_real) {
      addmul(acc_re, ai, bi, tmp);
      submul(acc_im, ar, bi, tmp);
      submul(acc_im, ai, br, tmp);
    }
  }
}

// (qr, qi) = (ar, ai) / (br, bi); the divisor must be nonzero.
inline void complex_div(mpq_class& qr, mpq_class& qi, const mpq_class& ar,
                        const mpq_class& ai, const mpq_class& br, const mpq_class& bi,
                        mpq_class& tmp, mpq_class& norm) {
  mpq_mul(norm.get_mpq_t(), br.get_mpq_t(), br.get_mpq_t());
  mpq_mul(tmp.get_mpq_t(), bi.get_mpq_t(), bi.get_mpq_t());
  mpq_add(norm.get_mpq_t(), norm.get_mpq_t(), tmp.get_mpq_t());

  mpq_class num_re;
  mpq_class num_im;
  mpq_mul(num_re.get_mpq_t(), ar.get_mpq_t(), br.get_mpq_t());
  mpq_mul(tmp.get_mpq_t(), ai.get_mpq_t(), bi.get_mpq_t());
  mpq_add(num_re.get_mpq_t(), num_re.get_mpq_t(), tmp.get_mpq_t());

  mpq_mul(num_im.get_mpq_t(), ai.get_mpq_t(), br.get_mpq_t());
  mpq_mul(tmp.get_mpq_t(), ar.get_mpq_t(), bi.get_mpq_t());
  mpq_sub(num_im.get_mpq_t(), num_im.get_mpq_t(), tmp.get_mpq_t());

  mpq_div(qr.get_mpq_t(), num_re.get_mpq_t(), norm.get_mpq_t());
  mpq_div(qi.get_mpq_t(), num_im.get_mpq_t(), norm.get_mpq_t());
}

}  // namespace cliff::detail
