#include "tropdeg/rational.hpp"

#include <stdexcept>

namespace tropdeg {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Int& z) { return z.get_str(); }

Rat parse_rat(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    Int z;
    if (s.empty() || z.set_str(s, 10) != 0)
      throw std::invalid_argument("not a rational number: '" + text + "'");
    return z;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_int(text));
  return make_rat(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

IntVec make_int_vec(std::initializer_list<long> values) {
  IntVec out;
  out.reserve(values.size());
  for (long x : values) out.emplace_back(x);
  return out;
}

RatVec make_rat_vec(std::initializer_list<long> values) {
  RatVec out;
  out.reserve(values.size());
  for (long x : values) out.emplace_back(x);
  return out;
}

RatVec to_rat_vec(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

Int content(const IntVec& v) {
  Int g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntVec primitive(const IntVec& v) {
  const Int g = content(v);
  if (g == 0 || g == 1) return v;
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(out[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  return out;
}

Int common_denominator(const RatVec& v) {
  Int l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

bool is_zero(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace tropdeg
