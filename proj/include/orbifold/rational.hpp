#pragma once

#include <gmpxx.h>

#include <string>

namespace orbifold {

inline mpq_class make_rat(long num, long den = 1) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

// "p/q" with the "/q" part omitted for integers
inline std::string rat_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool rat_is_int(const mpq_class& q) { return q.get_den() == 1; }

inline bool rat_fits_long(const mpq_class& q) {
  return q.get_num().fits_slong_p() && q.get_den().fits_slong_p();
}

}  // namespace orbifold
