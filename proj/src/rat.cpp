#include "zonocut/rat.hpp"

namespace zono {

Rat Rat::from_string(std::string_view s) {
  mpq_class v;
  if (s.empty() || mpq_set_str(v.get_mpq_t(), std::string(s).c_str(), 10) != 0)
    throw std::invalid_argument("Rat: cannot parse '" + std::string(s) + "'");
  if (v.get_den() == 0) throw std::invalid_argument("Rat: zero denominator in '" + std::string(s) + "'");
  v.canonicalize();
  return Rat(v);
}

Rat Rat::pow(const Rat& base, unsigned long e) {
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), base.v_.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.v_.get_den_mpz_t(), e);
  // base is reduced, so num^e / den^e is reduced as well
  return Rat(r);
}

}  // namespace zono
