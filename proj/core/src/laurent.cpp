#include "knotkit/laurent.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "knotkit/error.hpp"

namespace knotkit {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_[0] = constant;
}

LaurentPoly LaurentPoly::monomial(const mpz_class& coeff, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

void LaurentPoly::add_term(int exponent, const mpz_class& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class LaurentPoly::coefficient(int exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

int LaurentPoly::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPoly::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
  *this = std::move(out);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative power of a Laurent polynomial");
  LaurentPoly result(1), base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_[e + k] = c;
  return out;
}

LaurentPoly LaurentPoly::substitute_power(int factor) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.add_term(e * factor, c);
  return out;
}

LaurentPoly LaurentPoly::compress_exponents(int divisor) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) {
    if (e % divisor != 0)
      throw Error(ErrorKind::InvalidArgument, "exponent " + std::to_string(e) +
                                                  " not divisible by " + std::to_string(divisor));
    out.terms_[e / divisor] = c;
  }
  return out;
}

std::string LaurentPoly::to_string(std::string_view var, int exponent_scale) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << var;
    if (e % exponent_scale == 0) {
      if (e / exponent_scale != 1) out << '^' << e / exponent_scale;
    } else {
      const int g = std::gcd(e, exponent_scale);
      out << "^(" << e / g << '/' << exponent_scale / g << ')';
    }
  }
  return out.str();
}

LaurentPoly LaurentPoly::parse(std::string_view text, std::string_view var) {
  LaurentPoly out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const char* what) {
    throw Error(ErrorKind::MalformedCode, std::string("polynomial: ") + what + " at offset " +
                                              std::to_string(i));
  };
  skip();
  if (text.substr(i) == "0") return out;
  bool first = true;
  while (true) {
    skip();
    if (i >= text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      fail("expected sign");
    }
    first = false;
    mpz_class coeff = 1;
    bool has_number = false;
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) {
      coeff = mpz_class(std::string(text.substr(start, i - start)));
      has_number = true;
    }
    int exponent = 0;
    if (has_number && i < text.size() && text[i] == '*') ++i;
    if (text.substr(i, var.size()) == var) {
      i += var.size();
      exponent = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        const std::size_t es = i;
        if (i < text.size() && text[i] == '-') ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == es) fail("expected exponent");
        exponent = std::stoi(std::string(text.substr(es, i - es)));
      }
    } else if (!has_number) {
      fail("expected term");
    }
    out.add_term(exponent, sign * coeff);
  }
  return out;
}

bool LaurentPoly::lex_less(const LaurentPoly& o) const {
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
    if (a->first != b->first) return a->first < b->first;
    if (a->second != b->second) return a->second < b->second;
  }
  return a == terms_.end() && b != o.terms_.end();
}

}  // namespace knotkit
