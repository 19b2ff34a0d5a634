#include "rational.hpp"

#include <numeric>

#include "errors.hpp"

namespace kmchar {

Rat rat(long num, long den) {
  if (den == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat rat(const Int& num, const Int& den) {
  if (den == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_fraction_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Int parse_int(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty()) fail(ErrorCode::InvalidArgument, "empty integer literal");
  std::size_t start = s.front() == '-' ? 1 : 0;
  if (start == s.size()) fail(ErrorCode::InvalidArgument, "bad integer: " + s);
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      fail(ErrorCode::InvalidArgument, "bad integer: " + s);
  return Int(s, 10);
}

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den <= 0) fail(ErrorCode::InvalidArgument, "denominator must be positive");
  return rat(num, den);
}

Int floor_rat(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

std::int64_t to_i64(const Int& v) {
  if (!v.fits_slong_p()) fail(ErrorCode::InvalidArgument, "integer out of range: " + v.get_str());
  return v.get_si();
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::int64_t denominator_i64(const Rat& r) { return to_i64(r.get_den()); }

}  // namespace kmchar
