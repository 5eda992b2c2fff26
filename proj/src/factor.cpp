#include "qtors/factor.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

namespace qtors {

namespace {

// ---------------------------------------------------------------------------
// arithmetic in F_p[x], p an odd prime < 2^31, dense vectors of residues
// ---------------------------------------------------------------------------

using PVec = std::vector<long>;

void ptrim(PVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

int pdeg(const PVec& v) { return static_cast<int>(v.size()) - 1; }

long inv_mod(long a, long p) {
  long t = 0, nt = 1, r = p, nr = a % p;
  if (nr < 0) nr += p;
  while (nr != 0) {
    long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw std::domain_error("not invertible mod p");
  return t < 0 ? t + p : t;
}

PVec pmul(const PVec& a, const PVec& b, long p) {
  if (a.empty() || b.empty()) return {};
  std::vector<unsigned __int128> acc(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      acc[i + j] += (unsigned __int128)(a[i]) * (unsigned long)b[j];
  }
  PVec c(acc.size());
  for (size_t i = 0; i < acc.size(); ++i) c[i] = (long)(acc[i] % (unsigned long)p);
  ptrim(c);
  return c;
}

PVec psub(PVec a, const PVec& b, long p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) {
    a[i] -= b[i];
    if (a[i] < 0) a[i] += p;
  }
  ptrim(a);
  return a;
}

PVec pscale(PVec a, long s, long p) {
  for (auto& x : a) x = (long)(((__int128)x * s) % p);
  ptrim(a);
  return a;
}

PVec pmonic(const PVec& a, long p) {
  if (a.empty()) return a;
  return pscale(a, inv_mod(a.back(), p), p);
}

// remainder of a by b (b nonzero)
PVec pmod(PVec a, const PVec& b, long p) {
  long linv = inv_mod(b.back(), p);
  while (pdeg(a) >= pdeg(b) && !a.empty()) {
    long t = (long)(((__int128)a.back() * linv) % p);
    int shift = pdeg(a) - pdeg(b);
    for (int j = 0; j <= pdeg(b); ++j) {
      long& x = a[shift + j];
      x = (long)((x - (__int128)t * b[j]) % p);
      if (x < 0) x += p;
    }
    ptrim(a);
  }
  return a;
}

PVec pdiv(const PVec& a, const PVec& b, long p) {
  PVec r = a, q;
  long linv = inv_mod(b.back(), p);
  if (pdeg(a) < pdeg(b)) return {};
  q.assign(pdeg(a) - pdeg(b) + 1, 0);
  while (pdeg(r) >= pdeg(b) && !r.empty()) {
    long t = (long)(((__int128)r.back() * linv) % p);
    int shift = pdeg(r) - pdeg(b);
    q[shift] = t;
    for (int j = 0; j <= pdeg(b); ++j) {
      long& x = r[shift + j];
      x = (long)((x - (__int128)t * b[j]) % p);
      if (x < 0) x += p;
    }
    ptrim(r);
  }
  return q;
}

PVec pgcd(PVec a, PVec b, long p) {
  while (!b.empty()) {
    PVec r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return pmonic(a, p);
}

PVec pderiv(const PVec& a, long p) {
  if (pdeg(a) <= 0) return {};
  PVec d(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) d[i - 1] = (long)(((__int128)a[i] * (long)(i % p)) % p);
  ptrim(d);
  return d;
}

PVec ppowmod(PVec base, Int e, const PVec& mod, long p) {
  PVec result{1};
  base = pmod(std::move(base), mod, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = pmod(pmul(result, base, p), mod, p);
    e >>= 1;
    if (e > 0) base = pmod(pmul(base, base, p), mod, p);
  }
  return result;
}

PVec reduce_mod_p(const QPoly& f, long p) {
  PVec v(f.coeffs().size());
  Int P = p;
  for (size_t i = 0; i < f.coeffs().size(); ++i) {
    const Rat& r = f.coeffs()[i];
    Int den = rat_den(r) % P;
    if (den == 0) throw std::domain_error("denominator divisible by p");
    Int num = rat_num(r) % P;
    if (num < 0) num += P;
    long n = (long)num.get_si();
    long d = (long)den.get_si();
    if (d < 0) d += p;
    v[i] = (long)(((__int128)n * inv_mod(d, p)) % p);
  }
  ptrim(v);
  return v;
}

QPoly from_pvec(const PVec& v) {
  std::vector<Rat> c;
  c.reserve(v.size());
  for (long x : v) c.emplace_back(x);
  return QPoly(std::move(c));
}

std::uint64_t pvec_seed(const PVec& f, long p) {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ (std::uint64_t)p;
  for (long x : f) h = h * 0x100000001b3ull + (std::uint64_t)x + 1;
  return h;
}

// distinct-degree decomposition of a monic squarefree polynomial
std::vector<std::pair<PVec, int>> ddf(PVec f, long p) {
  std::vector<std::pair<PVec, int>> out;
  PVec x{0, 1};
  PVec h = x;  // x^(p^d) mod f as d advances
  int d = 0;
  while (pdeg(f) > 0) {
    ++d;
    if (2 * d > pdeg(f)) {
      out.emplace_back(f, pdeg(f));  // what is left is irreducible
      break;
    }
    h = ppowmod(h, p, f, p);
    PVec g = pgcd(psub(h, x, p), f, p);
    if (pdeg(g) > 0) {
      out.emplace_back(g, d);
      f = pdiv(f, g, p);
      h = pmod(h, f, p);
    }
  }
  return out;
}

// Cantor-Zassenhaus equal-degree splitting, deterministic seeding
void edf(const PVec& f, int d, long p, std::mt19937_64& rng, std::vector<PVec>& out) {
  if (pdeg(f) == d) {
    out.push_back(pmonic(f, p));
    return;
  }
  Int exp = 1;
  for (int i = 0; i < d; ++i) exp *= p;
  exp = (exp - 1) / 2;
  for (;;) {
    PVec a(pdeg(f));
    for (auto& x : a) x = (long)(rng() % (unsigned long)p);
    ptrim(a);
    if (pdeg(a) < 1) continue;
    PVec b = ppowmod(a, exp, f, p);
    if (b.empty()) {
      PVec g0 = pgcd(a, f, p);  // a not invertible mod f: free split
      if (pdeg(g0) > 0 && pdeg(g0) < pdeg(f)) {
        edf(g0, d, p, rng, out);
        edf(pdiv(f, g0, p), d, p, rng, out);
        return;
      }
      continue;
    }
    b[0] = (b[0] + p - 1) % p;
    ptrim(b);
    if (b.empty()) continue;
    PVec g = pgcd(b, f, p);
    if (pdeg(g) > 0 && pdeg(g) < pdeg(f)) {
      edf(g, d, p, rng, out);
      edf(pdiv(f, g, p), d, p, rng, out);
      return;
    }
  }
}

// irreducible factors of a monic squarefree polynomial, each once
std::vector<PVec> factor_squarefree_mod_p(const PVec& f, long p) {
  std::vector<PVec> out;
  std::mt19937_64 rng(pvec_seed(f, p));
  for (auto& [g, d] : ddf(f, p)) edf(g, d, p, rng, out);
  std::sort(out.begin(), out.end(), [](const PVec& a, const PVec& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

// exponents divided by p; valid when f' = 0 (so f = g(x^p) = g(x)^p over F_p)
PVec pth_root(const PVec& f, long p) {
  PVec g(pdeg(f) / p + 1);
  for (int i = 0; i * p <= pdeg(f); ++i) g[i] = f[i * p];
  ptrim(g);
  return g;
}

void distinct_factors_mod_p(const PVec& f, long p, std::vector<PVec>& out) {
  if (pdeg(f) <= 0) return;
  PVec d = pderiv(f, p);
  if (d.empty()) {
    distinct_factors_mod_p(pth_root(f, p), p, out);
    return;
  }
  PVec g = pgcd(f, d, p);
  PVec w = pdiv(f, g, p);
  for (auto& u : factor_squarefree_mod_p(pmonic(w, p), p)) out.push_back(u);
  distinct_factors_mod_p(pmonic(g, p), p, out);
}

bool is_prime_long(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// arithmetic in (Z/M)[x] for the Hensel lift, M = p^e
// ---------------------------------------------------------------------------

using ZVec = std::vector<Int>;

void ztrim(ZVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

int zdeg(const ZVec& v) { return static_cast<int>(v.size()) - 1; }

ZVec zreduce(ZVec v, const Int& M) {
  for (auto& x : v) {
    x %= M;
    if (x < 0) x += M;
  }
  ztrim(v);
  return v;
}

ZVec zmul(const ZVec& a, const ZVec& b, const Int& M) {
  if (a.empty() || b.empty()) return {};
  ZVec c(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return zreduce(std::move(c), M);
}

ZVec zadd(ZVec a, const ZVec& b, const Int& M) {
  if (a.size() < b.size()) a.resize(b.size(), Int(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return zreduce(std::move(a), M);
}

ZVec zsub(ZVec a, const ZVec& b, const Int& M) {
  if (a.size() < b.size()) a.resize(b.size(), Int(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return zreduce(std::move(a), M);
}

// division by a monic divisor
void zdivrem_monic(const ZVec& a, const ZVec& b, const Int& M, ZVec& q, ZVec& r) {
  r = a;
  q.clear();
  if (zdeg(a) >= zdeg(b)) q.assign(zdeg(a) - zdeg(b) + 1, Int(0));
  while (zdeg(r) >= zdeg(b) && !r.empty()) {
    Int t = r.back();
    int shift = zdeg(r) - zdeg(b);
    q[shift] = t;
    for (int j = 0; j <= zdeg(b); ++j) r[shift + j] -= t * b[j];
    r = zreduce(std::move(r), M);
  }
  q = zreduce(std::move(q), M);
}

struct HenselPair {
  ZVec g, h, s, t;  // f = g*h, s*g + t*h = 1 (mod m)
};

// one quadratic step m -> m^2, modulus capped at M
void hensel_step(const ZVec& f, HenselPair& P, const Int& m, const Int& M) {
  Int m2 = m * m;
  if (m2 > M) m2 = M;
  ZVec e = zsub(zreduce(f, m2), zmul(P.g, P.h, m2), m2);
  ZVec q, r;
  zdivrem_monic(zmul(P.s, e, m2), P.h, m2, q, r);
  ZVec gstar = zadd(zadd(P.g, zmul(P.t, e, m2), m2), zmul(q, P.g, m2), m2);
  ZVec hstar = zadd(P.h, r, m2);
  ZVec b = zsub(zadd(zmul(P.s, gstar, m2), zmul(P.t, hstar, m2), m2), ZVec{Int(1)}, m2);
  ZVec c, d;
  zdivrem_monic(zmul(P.s, b, m2), hstar, m2, c, d);
  ZVec sstar = zsub(P.s, d, m2);
  ZVec tstar = zsub(zsub(P.t, zmul(P.t, b, m2), m2), zmul(c, gstar, m2), m2);
  P = {std::move(gstar), std::move(hstar), std::move(sstar), std::move(tstar)};
}

ZVec pvec_to_zvec(const PVec& v) {
  ZVec z(v.size());
  for (size_t i = 0; i < v.size(); ++i) z[i] = v[i];
  return z;
}

// Lift the factorization f = lc(f) * prod(monic h_i) from mod p to mod M.
// factors enter mod p and leave mod M (still monic).
void hensel_tree(const ZVec& f, std::vector<PVec>::const_iterator begin,
                 std::vector<PVec>::const_iterator end, long p, const Int& M,
                 std::vector<ZVec>& out) {
  size_t n = end - begin;
  if (n == 1) {
    // f = lc * h mod M with h monic
    Int lc_inv;
    Int lc = f.back() % M;
    if (mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), M.get_mpz_t()) == 0)
      throw std::logic_error("leading coefficient not invertible in lift");
    ZVec h = f;
    for (auto& x : h) x *= lc_inv;
    out.push_back(zreduce(std::move(h), M));
    return;
  }
  auto mid = begin + n / 2;
  PVec g0{1}, h0{1};
  for (auto it = begin; it != mid; ++it) g0 = pmul(g0, *it, p);
  for (auto it = mid; it != end; ++it) h0 = pmul(h0, *it, p);
  Int lcf = f.back() % p;
  if (lcf < 0) lcf += p;
  long L = (long)lcf.get_si();
  g0 = pscale(g0, L, p);
  // Bezout over F_p via the extended Euclidean algorithm
  PVec r0 = g0, r1 = h0, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    PVec q = pdiv(r0, r1, p);
    PVec r2 = psub(r0, pmul(q, r1, p), p);
    PVec s2 = psub(s0, pmul(q, s1, p), p);
    PVec t2 = psub(t0, pmul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (pdeg(r0) != 0) throw std::logic_error("modular factors not coprime");
  long inv = inv_mod(r0[0], p);
  HenselPair P{pvec_to_zvec(g0), pvec_to_zvec(h0), pvec_to_zvec(pscale(s0, inv, p)),
               pvec_to_zvec(pscale(t0, inv, p))};
  Int m = p;
  while (m < M) {
    hensel_step(f, P, m, M);
    m = m * m;
    if (m > M) m = M;
  }
  hensel_tree(zreduce(P.g, M), begin, mid, p, M, out);
  hensel_tree(zreduce(P.h, M), mid, end, p, M, out);
}

Int sym_mod(Int x, const Int& M) {
  x %= M;
  if (x < 0) x += M;
  if (2 * x > M) x -= M;
  return x;
}

QPoly zvec_to_primitive(const ZVec& v, const Int& M) {
  std::vector<Rat> c;
  c.reserve(v.size());
  for (const Int& x : v) c.emplace_back(sym_mod(x, M));
  QPoly f{std::move(c)};
  return content_and_primitive(f).second;
}

bool int_divides_exactly(const QPoly& h, const QPoly& f) {
  // h primitive integral, f integral: Gauss, so the quotient is integral too
  return divides(h, f);
}

struct FactorOrder {
  bool operator()(const QPoly& a, const QPoly& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

long next_prime_from(long p) {
  do {
    p += 2;
  } while (!is_prime_long(p));
  return p;
}

// smallest usable prime >= 5: does not kill the leading coefficient and keeps
// the reduction squarefree of full degree
long find_good_prime(const QPoly& F, int max_tries) {
  long p = 5;
  for (int k = 0; k < max_tries; ++k, p = next_prime_from(p)) {
    try {
      PVec fp = reduce_mod_p(F, p);
      if (pdeg(fp) != F.degree()) continue;
      PVec d = pderiv(fp, p);
      if (d.empty()) continue;
      if (pdeg(pgcd(fp, d, p)) == 0) return p;
    } catch (const std::domain_error&) {
      continue;
    }
  }
  return 0;
}

}  // namespace

std::vector<std::pair<QPoly, int>> factor_mod_p(const QPoly& f, long p) {
  if (p < 3 || p >= (1L << 31) || !is_prime_long(p))
    throw std::invalid_argument("factor_mod_p needs an odd prime < 2^31");
  PVec fp = reduce_mod_p(f, p);
  if (fp.empty()) throw std::invalid_argument("polynomial vanishes mod p");
  std::vector<PVec> found;
  distinct_factors_mod_p(pmonic(fp, p), p, found);
  std::sort(found.begin(), found.end(), [](const PVec& a, const PVec& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<std::pair<QPoly, int>> out;
  for (auto& u : found) {
    int m = 0;
    PVec rem = fp;
    for (;;) {
      if (pdeg(rem) < pdeg(u)) break;
      PVec r = pmod(rem, u, p);
      if (!r.empty()) break;
      rem = pdiv(rem, u, p);
      ++m;
    }
    out.emplace_back(from_pvec(u), m);
  }
  return out;
}

std::vector<QPoly> bounded_factors(const QPoly& f, int max_degree) {
  if (f.is_zero()) throw std::invalid_argument("bounded_factors of 0");
  if (max_degree < 1) return {};
  std::vector<QPoly> result;
  QPoly F = content_and_primitive(f).second;
  if (F.degree() <= 0) return {};

  // strip powers of x
  if (F[0] == 0) {
    int e = 0;
    std::vector<Rat> c = F.coeffs();
    while (e < (int)c.size() && c[e] == 0) ++e;
    F = QPoly(std::vector<Rat>(c.begin() + e, c.end()));
    result.push_back(QPoly::x());
    if (F.degree() <= 0) return result;
  }

  // choose the working squarefree polynomial and a prime of good reduction
  QPoly W = F;
  long p = find_good_prime(W, 25);
  if (p == 0) {
    W = content_and_primitive(squarefree_part(F)).second;
    p = find_good_prime(W, 500);
    if (p == 0) throw std::logic_error("no good prime found");
  }

  std::vector<PVec> modular = factor_squarefree_mod_p(pmonic(reduce_mod_p(W, p), p), p);
  std::vector<int> participants;
  for (int i = 0; i < (int)modular.size(); ++i)
    if (pdeg(modular[i]) <= max_degree) participants.push_back(i);
  if (participants.empty()) {
    std::sort(result.begin(), result.end(), FactorOrder{});
    return result;
  }

  // Mignotte-style bound: any degree <= D divisor of W, rescaled to lc(W),
  // has coefficients bounded by 2^D * l2norm(W)
  Int norm2 = 0;
  for (const Int& x : integer_coeffs(W)) norm2 += x * x;
  Int B = (sqrt_exact(norm2).value_or(Int(0)) + 1) << max_degree;
  Int M = p;
  while (M < 2 * B + 1) M *= M;

  std::vector<ZVec> lifted;
  hensel_tree(zreduce(pvec_to_zvec(reduce_mod_p(W, p)), M), modular.cbegin(), modular.cend(),
              p, M, lifted);

  Int L = integer_coeffs(W).back();
  Int LW0 = L * integer_coeffs(W)[0];
  std::vector<bool> used(modular.size(), false);

  // subsets of total degree t, ascending, smallest index sets first
  std::vector<int> subset;
  auto try_subset = [&]() -> bool {
    Int cst = L;
    for (int i : subset) cst = (cst * lifted[i][0]) % M;
    cst = sym_mod(cst, M);
    if (cst == 0 || LW0 % cst != 0) return false;
    ZVec prod{L};
    for (int i : subset) prod = zmul(prod, lifted[i], M);
    QPoly cand = zvec_to_primitive(prod, M);
    if (cand.degree() < 1) return false;
    if (!int_divides_exactly(cand, F)) return false;
    result.push_back(cand);
    for (int i : subset) used[i] = true;
    return true;
  };

  std::function<void(int, int)> search = [&](int start, int remaining) {
    if (remaining == 0) {
      try_subset();
      return;
    }
    for (size_t k = (size_t)start; k < participants.size(); ++k) {
      // abandon this branch if a found factor consumed part of the prefix
      for (int j : subset)
        if (used[j]) return;
      int i = participants[k];
      if (used[i] || pdeg(modular[i]) > remaining) continue;
      subset.push_back(i);
      search((int)k + 1, remaining - pdeg(modular[i]));
      subset.pop_back();
    }
  };
  for (int t = 1; t <= max_degree; ++t) search(0, t);

  std::sort(result.begin(), result.end(), FactorOrder{});
  return result;
}

std::vector<Rat> rational_roots(const QPoly& f) {
  std::vector<Rat> roots;
  for (const QPoly& g : bounded_factors(f, 1)) {
    if (g.degree() != 1) continue;
    roots.push_back(-g[0] / g[1]);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

bool is_irreducible(const QPoly& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  auto fs = bounded_factors(f, f.degree());
  return fs.size() == 1 && fs[0].degree() == f.degree();
}

}  // namespace qtors
