#include "qtors/rational.hpp"

#include <stdexcept>

namespace qtors {

std::optional<Int> sqrt_exact(const Int& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Rat> sqrt_exact(const Rat& r) {
  if (r < 0) return std::nullopt;
  auto n = sqrt_exact(rat_num(r));
  if (!n) return std::nullopt;
  auto d = sqrt_exact(rat_den(r));
  if (!d) return std::nullopt;
  return Rat(*n, *d);
}

Int square_free_kernel(const Int& n) {
  if (n == 0) return 0;
  Int m = abs(n);
  Int kernel = n < 0 ? -1 : 1;
  // trial division for the small part
  for (Int p = 2; p * p <= m && p < 100000; ++p) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e % 2 == 1) kernel *= p;
  }
  // leftover cofactor: strip it if it is a perfect square
  if (auto s = sqrt_exact(m)) {
    (void)s;
  } else {
    kernel *= m;
  }
  return kernel;
}

Rat parse_rational(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace qtors
