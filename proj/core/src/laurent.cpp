#include "braidrot/laurent.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace braidrot {

LaurentPoly LaurentPoly::monomial(Int coeff, Int exponent) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace(std::move(exponent), std::move(coeff));
  return p;
}

Int LaurentPoly::coeff(const Int& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(const Int& exponent, const Int& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Int LaurentPoly::derivative_at_one() const {
  Int sum = 0;
  for (const auto& [e, c] : terms_) sum += c * e;
  return sum;
}

Int LaurentPoly::value_at_one() const {
  Int sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // std::map iterates ascending; we want descending exponents.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Int& e = it->first;
    Int c = it->second;
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (e == 0) {
      out << c;
    } else {
      if (c != 1) out << c << "*";
      out << "x";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

namespace {

// One term of the canonical form: [coeff *] x [^ exp], or a bare integer.
struct TermToken {
  Int coeff;
  Int exp;
};

Int parse_int(const std::string& s, const std::string& context) {
  std::size_t start = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
  if (start == s.size())
    throw std::invalid_argument("malformed integer in " + context);
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("malformed integer in " + context);
  return Int(s);
}

TermToken parse_term(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty()) throw std::invalid_argument("empty polynomial term");

  auto xpos = t.find('x');
  if (xpos == std::string::npos) return {parse_int(t, "term '" + s + "'"), 0};

  std::string coeff_part = t.substr(0, xpos);
  Int coeff = 1;
  if (coeff_part == "-") {
    coeff = -1;
  } else if (!coeff_part.empty() && coeff_part != "+") {
    if (coeff_part.back() != '*')
      throw std::invalid_argument("malformed term: " + s);
    coeff_part.pop_back();
    coeff = parse_int(coeff_part, "term '" + s + "'");
  }

  std::string exp_part = t.substr(xpos + 1);
  Int exp = 1;
  if (!exp_part.empty()) {
    if (exp_part[0] != '^') throw std::invalid_argument("malformed term: " + s);
    exp = parse_int(exp_part.substr(1), "term '" + s + "'");
  }
  return {coeff, exp};
}

}  // namespace

LaurentPoly LaurentPoly::from_string(const std::string& text) {
  // Split on top-level "+" / "-" separators (a sign directly before a digit or
  // 'x' with no preceding term content binds to the term).
  LaurentPoly out;
  std::string current;
  bool any = false;
  auto flush = [&](bool negate) {
    std::string trimmed;
    for (char ch : current)
      if (!std::isspace(static_cast<unsigned char>(ch))) trimmed.push_back(ch);
    if (!trimmed.empty()) {
      TermToken tt = parse_term(trimmed);
      out.add_term(tt.exp, negate ? -tt.coeff : tt.coeff);
      any = true;
    }
    current.clear();
  };

  bool pending_negate = false;
  for (size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if ((ch == '+' || ch == '-') && i > 0) {
      // "^-2" keeps its sign as part of the exponent; likewise a leading sign.
      char prev = 0;
      for (size_t j = i; j-- > 0;) {
        if (!std::isspace(static_cast<unsigned char>(text[j]))) {
          prev = text[j];
          break;
        }
      }
      if (prev != '^' && prev != 0) {
        flush(pending_negate);
        pending_negate = (ch == '-');
        continue;
      }
    }
    current.push_back(ch);
  }
  flush(pending_negate);
  if (!any) throw std::invalid_argument("empty polynomial text");
  // "0" parses to a zero-coefficient term which add_term drops; that is the
  // zero polynomial.
  return out;
}

}  // namespace braidrot
