#include "localspec/exact_scalar.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace localspec {

namespace {

bool monomial_less(const Term& x, const Term& y) {
  return x.a != y.a ? x.a < y.a : x.b < y.b;
}

std::string rational_string(const mpq_class& v) { return v.get_str(10); }

}  // namespace

ExactScalar::ExactScalar(GaussianRational c, int a, int b) {
  if (a < 0) throw std::invalid_argument("ExactScalar: negative power of L");
  c.re.canonicalize();
  c.im.canonicalize();
  if (!c.is_zero()) terms_.push_back({std::move(c), a, b});
}

void ExactScalar::normalize() {
  std::sort(terms_.begin(), terms_.end(), monomial_less);
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().a == t.a && merged.back().b == t.b) {
      merged.back().c = merged.back().c + t.c;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.c.is_zero(); });
  terms_ = std::move(merged);
}

ExactScalar ExactScalar::conj() const {
  ExactScalar out = *this;
  for (auto& t : out.terms_) t.c.im = -t.c.im;
  return out;
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar out = *this;
  for (auto& t : out.terms_) {
    t.c.re = -t.c.re;
    t.c.im = -t.c.im;
  }
  return out;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& other) {
  if (other.terms_.empty()) return *this;
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  normalize();
  return *this;
}

ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
  ExactScalar out;
  if (x.is_zero() || y.is_zero()) return out;
  out.terms_.reserve(x.terms_.size() * y.terms_.size());
  for (const auto& s : x.terms_) {
    for (const auto& t : y.terms_) out.terms_.push_back({s.c * t.c, s.a + t.a, s.b + t.b});
  }
  out.normalize();
  return out;
}

std::complex<double> ExactScalar::evaluate(double q) const {
  const double log_q = std::log(q);
  std::complex<double> acc{0.0, 0.0};
  for (const auto& t : terms_) {
    acc += t.c.to_complex() * std::pow(log_q, t.a) * std::pow(q, 0.5 * t.b);
  }
  return acc;
}

std::string ExactScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    if (i > 0) out << " + ";
    out << "(" << rational_string(t.c.re);
    if (sgn(t.c.im) != 0) {
      out << (sgn(t.c.im) > 0 ? "+" : "") << rational_string(t.c.im) << "i";
    }
    out << ")";
    if (t.a != 0) out << "*L^" << t.a;
    if (t.b != 0) out << "*R^" << t.b;
  }
  return out.str();
}

nlohmann::json ExactScalar::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : terms_) {
    out.push_back({{"c_re_num", t.c.re.get_num().get_str()},
                   {"c_re_den", t.c.re.get_den().get_str()},
                   {"c_im_num", t.c.im.get_num().get_str()},
                   {"c_im_den", t.c.im.get_den().get_str()},
                   {"a", std::to_string(t.a)},
                   {"b", std::to_string(t.b)}});
  }
  return out;
}

ExactScalar ExactScalar::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("ExactScalar::from_json: expected an array");
  ExactScalar out;
  for (const auto& item : j) {
    auto field = [&item](const char* key) { return item.at(key).get<std::string>(); };
    if (mpz_class(field("c_re_den")) == 0 || mpz_class(field("c_im_den")) == 0) {
      throw std::invalid_argument("ExactScalar::from_json: zero denominator");
    }
    GaussianRational c{mpq_class(mpz_class(field("c_re_num")), mpz_class(field("c_re_den"))),
                       mpq_class(mpz_class(field("c_im_num")), mpz_class(field("c_im_den")))};
    out += ExactScalar(std::move(c), std::stoi(field("a")), std::stoi(field("b")));
  }
  return out;
}

}  // namespace localspec
