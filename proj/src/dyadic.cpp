#include "surreal/dyadic.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace surreal {

namespace {

BigInt parseInteger(std::string_view digits) {
  if (digits.empty()) throw std::invalid_argument("empty number");
  BigInt value = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad digit in number");
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

Dyadic::Dyadic(long long value) : num_(value), exp_(0) {}

Dyadic::Dyadic(BigInt numerator, std::uint32_t exponent)
    : num_(std::move(numerator)), exp_(exponent) {
  normalize();
}

void Dyadic::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  if (exp_ == 0) return;
  const auto twos = static_cast<std::uint32_t>(boost::multiprecision::lsb(abs(num_)));
  const auto shift = std::min(twos, exp_);
  num_ >>= shift;
  exp_ -= shift;
}

Dyadic Dyadic::parse(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  BigInt num;
  std::uint32_t exp = 0;
  if (auto slash = text.find('/'); slash == std::string_view::npos) {
    num = parseInteger(text);
  } else {
    num = parseInteger(text.substr(0, slash));
    BigInt den = parseInteger(text.substr(slash + 1));
    if (den <= 0 || (den & (den - 1)) != 0) {
      throw std::invalid_argument("denominator must be a power of two");
    }
    exp = static_cast<std::uint32_t>(boost::multiprecision::msb(den));
  }
  if (negative) num = -num;
  return Dyadic(std::move(num), exp);
}

Dyadic Dyadic::operator-() const {
  Dyadic r = *this;
  r.num_ = -r.num_;
  return r;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  const auto e = std::max(a.exp_, b.exp_);
  BigInt n = (a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_));
  return Dyadic(std::move(n), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.num_ * b.num_, a.exp_ + b.exp_);
}

Dyadic Dyadic::midpoint(const Dyadic& a, const Dyadic& b) {
  Dyadic s = a + b;
  return Dyadic(std::move(s.num_), s.exp_ + 1);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const auto e = std::max(a.exp_, b.exp_);
  const BigInt lhs = a.num_ << (e - a.exp_);
  const BigInt rhs = b.num_ << (e - b.exp_);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Dyadic::toString() const {
  std::string s = num_.str();
  if (exp_ > 0) {
    BigInt den = BigInt(1) << exp_;
    s += '/';
    s += den.str();
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Dyadic& d) { return os << d.toString(); }

}  // namespace surreal
