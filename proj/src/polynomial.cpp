#include "spsolve/polynomial.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace spsolve {

bool Coefficient::is_zero() const {
  if (is_exact()) return exact() == 0;
  return numeric() == std::complex<double>(0.0, 0.0);
}

std::complex<double> Coefficient::numeric() const {
  if (is_exact()) return to_complex(exact());
  return std::get<std::complex<double>>(value_);
}

Coefficient Coefficient::operator+(const Coefficient& o) const {
  if (is_exact() && o.is_exact()) return Coefficient(exact() + o.exact());
  return Coefficient(numeric() + o.numeric());
}

Coefficient Coefficient::operator*(const Coefficient& o) const {
  if (is_exact() && o.is_exact()) return Coefficient(exact() * o.exact());
  return Coefficient(numeric() * o.numeric());
}

Coefficient Coefficient::operator-() const {
  if (is_exact()) return Coefficient(Rational(-exact()));
  return Coefficient(-numeric());
}

void SparsePoly::add_term(const Exponent& e, const Coefficient& c) {
  if (e.dim() != nvars_)
    throw std::invalid_argument("exponent length does not match nvars");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(e, c);
    return;
  }
  Coefficient s = it->second + c;
  if (s.is_zero())
    terms_.erase(it);
  else
    it->second = s;
}

Coefficient SparsePoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Coefficient() : it->second;
}

std::set<Exponent> SparsePoly::support() const {
  std::set<Exponent> s;
  for (const auto& [e, c] : terms_) s.insert(e);
  return s;
}

std::complex<double> SparsePoly::evaluate(
    const std::vector<std::complex<double>>& p) const {
  std::complex<double> acc = 0.0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> mono = 1.0;
    for (std::size_t i = 0; i < nvars_; ++i) {
      std::int64_t k = e[i];
      if (k == 0) continue;
      if (p[i] == std::complex<double>(0.0, 0.0) && k < 0)
        throw std::domain_error("negative exponent at zero coordinate");
      std::complex<double> base = k > 0 ? p[i] : 1.0 / p[i];
      for (std::int64_t j = 0; j < std::abs(k); ++j) mono *= base;
    }
    acc += c.numeric() * mono;
  }
  return acc;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  SparsePoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
  SparsePoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  SparsePoly r(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

SparsePoly SparsePoly::scaled(const Rational& c) const {
  SparsePoly r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, co] : terms_) r.add_term(e, co * Coefficient(c));
  return r;
}

SparsePoly SparsePoly::shifted(const Exponent& beta) const {
  SparsePoly r(nvars_);
  for (const auto& [e, c] : terms_) r.add_term(e + beta, c);
  return r;
}

std::int64_t SparsePoly::total_degree() const {
  std::int64_t d = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::int64_t t = e.total_degree();
    if (first || t > d) d = t;
    first = false;
  }
  return d;
}

namespace {

struct Parser {
  const std::string& text;
  const std::vector<std::string>& vars;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at position " +
                                std::to_string(pos) + ": " + what);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  bool peek_digit() {
    skip_ws();
    return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
  }

  std::string read_number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.'))
      ++pos;
    if (pos == start) fail("expected a number");
    return text.substr(start, pos - start);
  }

  std::int64_t read_integer() {
    skip_ws();
    bool neg = eat('-');
    if (!neg) eat('+');
    if (!peek_digit()) fail("expected an integer exponent");
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    std::int64_t v = std::stoll(text.substr(start, pos - start));
    return neg ? -v : v;
  }

  int read_var() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected a variable name");
    std::string name = text.substr(start, pos - start);
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return static_cast<int>(i);
    pos = start;
    fail("unknown variable '" + name + "'");
  }

  // one term: [coeff][*var^e]*
  void read_term(SparsePoly& out, bool negate) {
    Rational coeff(1);
    Exponent e = zero_exponent(vars.size());
    bool saw_factor = false;

    if (peek_digit()) {
      std::string num = read_number();
      if (eat('/')) {
        std::string den = read_number();
        coeff = rational_from_string(num + "/" + den);
      } else {
        coeff = rational_from_string(num);
      }
      saw_factor = true;
      if (!eat('*')) {
        if (negate) coeff = -coeff;
        out.add_term(e, Coefficient(coeff));
        return;
      }
    }

    while (true) {
      int v = read_var();
      std::int64_t ex = 1;
      if (eat('^')) ex = read_integer();
      e[static_cast<std::size_t>(v)] += ex;
      saw_factor = true;
      if (!eat('*')) break;
    }

    if (!saw_factor) fail("empty term");
    if (negate) coeff = -coeff;
    out.add_term(e, Coefficient(coeff));
  }
};

}  // namespace

SparsePoly parse_polynomial(const std::string& text,
                            const std::vector<std::string>& vars) {
  Parser p{text, vars};
  SparsePoly out(vars.size());
  p.skip_ws();
  if (p.pos == text.size()) p.fail("empty input");
  bool neg = false;
  if (p.eat('-'))
    neg = true;
  else
    p.eat('+');
  p.read_term(out, neg);
  while (true) {
    p.skip_ws();
    if (p.pos == text.size()) break;
    if (p.eat('+'))
      p.read_term(out, false);
    else if (p.eat('-'))
      p.read_term(out, true);
    else
      p.fail("expected '+' or '-'");
  }
  return out;
}

std::string print_polynomial(const SparsePoly& f,
                             const std::vector<std::string>& vars) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    Rational q = c.exact();
    bool neg = q < 0;
    Rational mag = neg ? Rational(-q) : q;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;

    bool has_vars = e.total_degree() != 0 ||
                    e != zero_exponent(e.dim());
    bool unit = (mag == 1);
    if (!unit || !has_vars) os << mag.get_str();
    bool need_star = !unit || !has_vars;
    for (std::size_t i = 0; i < e.dim(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << vars[i];
      if (e[i] != 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace spsolve
