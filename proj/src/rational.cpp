#include "tenspec/rational.hpp"

#include <cmath>
#include <cstdlib>

namespace tenspec {

Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Int binomial(const Int& n, unsigned k) {
  Int r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rat_from_string: empty string");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rat_from_string: zero denominator");
    return Rat(num) / Rat(den);
  }
  std::string body = s;
  long exp10 = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    exp10 = std::strtol(s.c_str() + epos + 1, nullptr, 10);
    body = s.substr(0, epos);
  }
  auto dot = body.find('.');
  if (dot != std::string::npos) {
    exp10 -= static_cast<long>(body.size() - dot - 1);
    body.erase(dot, 1);
  }
  if (body.empty() || body == "-" || body == "+")
    throw std::invalid_argument("rat_from_string: bad numeral '" + s + "'");
  // strip leading zeros so the big-int parser cannot read the digits as octal
  std::string sign;
  if (body[0] == '-' || body[0] == '+') {
    sign = body.substr(0, 1);
    body.erase(0, 1);
  }
  std::size_t nz = body.find_first_not_of('0');
  body = (nz == std::string::npos) ? "0" : body.substr(nz);
  Rat q{Int(sign + body)};
  Int shift = 1;
  for (long i = 0; i < std::labs(exp10); ++i) shift *= 10;
  if (exp10 >= 0)
    q *= Rat(shift);
  else
    q /= Rat(shift);
  return q;
}

Rat rat_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rat_from_double: non-finite");
  Rat q;
  mpq_set_d(q.backend().data(), x);
  return q;
}

double rat_to_double(const Rat& q) { return q.convert_to<double>(); }

std::string rat_num_string(const Rat& q) { return numerator(q).str(); }
std::string rat_den_string(const Rat& q) { return denominator(q).str(); }

std::string CRat::str() const {
  std::string s = re.str();
  if (im != 0) {
    s += (im > 0) ? " + " : " - ";
    s += Rat(abs(im)).str() + "*i";
  }
  return s;
}

}  // namespace tenspec
