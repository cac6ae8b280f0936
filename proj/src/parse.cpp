#include "jsyz/parse.hpp"

#include <cctype>

namespace jsyz {

namespace {

// Mixed-degree polynomial used while parsing; homogeneity is checked at the end.
template <class S>
struct Sparse {
  std::map<Exponent, S, GrlexDescending> terms;

  void add(const Exponent& e, const S& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms.erase(it);
    }
  }
};

template <class S>
Sparse<S> mul(const Sparse<S>& a, const Sparse<S>& b) {
  Sparse<S> r;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) r.add(ea + eb, ca * cb);
  return r;
}

template <class S>
class Parser {
 public:
  Parser(std::string_view text, const field_t<S>& field) : text_(text), field_(field) {}

  Sparse<S> run() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("empty expression", pos_);
    Sparse<S> r = expr();
    skip();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return r;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Sparse<S> expr() {
    Sparse<S> acc;
    bool negate = false;
    if (peek('-')) {
      negate = true;
      ++pos_;
    } else if (peek('+')) {
      ++pos_;
    }
    accumulate(acc, term(), negate);
    while (true) {
      if (peek('+')) {
        ++pos_;
        accumulate(acc, term(), false);
      } else if (peek('-')) {
        ++pos_;
        accumulate(acc, term(), true);
      } else {
        break;
      }
    }
    return acc;
  }

  void accumulate(Sparse<S>& acc, const Sparse<S>& t, bool negate) {
    for (const auto& [e, c] : t.terms) acc.add(e, negate ? -c : c);
  }

  Sparse<S> term() {
    Sparse<S> acc = factor();
    while (peek('*')) {
      ++pos_;
      acc = mul(acc, factor());
    }
    return acc;
  }

  Sparse<S> factor() {
    Sparse<S> base = atom();
    if (peek('^')) {
      ++pos_;
      skip();
      std::size_t start = pos_;
      long n = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        n = n * 10 + (text_[pos_] - '0');
        if (n > 10000) throw ParseError("exponent too large", start);
        ++pos_;
      }
      if (pos_ == start) throw ParseError("expected exponent", start);
      Sparse<S> r;
      r.add(Exponent{}, field_.one());
      for (long i = 0; i < n; ++i) r = mul(r, base);
      return r;
    }
    return base;
  }

  Sparse<S> atom() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    Sparse<S> r;
    if (c == '(') {
      ++pos_;
      r = expr();
      if (!peek(')')) throw ParseError("expected ')'", pos_);
      ++pos_;
      return r;
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      r.add(Exponent{c == 'x', c == 'y', c == 'z'}, field_.one());
      return r;
    }
    if (c == '-') {
      ++pos_;
      Sparse<S> inner = factor();
      for (const auto& [e, v] : inner.terms) r.add(e, -v);
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::size_t end = pos_;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::size_t dstart = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == dstart) throw ParseError("expected denominator", dstart);
        end = pos_;
      }
      Rational q;
      try {
        q = parse_rational(text_.substr(start, end - start));
      } catch (const InputError&) {
        throw ParseError("bad literal", start);
      }
      try {
        r.add(Exponent{}, field_.from_rational(q));
      } catch (const std::domain_error&) {
        throw ParseError("literal has no image in " + field_.tag(), start);
      }
      return r;
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  field_t<S> field_;
  std::size_t pos_ = 0;
};

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  s = s.substr(b);
  if (!s.empty() && s[0] == '+') s = s.substr(1);
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw InputError("bad rational literal '" + std::string(text) + "'");
  if (q.get_den() == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

template <class S>
HomogPoly<S> parse_poly(std::string_view text, const field_t<S>& field) {
  Sparse<S> sp = Parser<S>(text, field).run();
  if (sp.terms.empty()) return HomogPoly<S>(field, 0);
  const int deg = sp.terms.begin()->first.degree();
  HomogPoly<S> out(field, deg);
  for (const auto& [e, c] : sp.terms) {
    if (e.degree() != deg) throw HomogeneityError(deg, e.degree());
    out.add_term(e, c);
  }
  return out;
}

template QPoly parse_poly<Rational>(std::string_view, const RationalField&);
template PPoly parse_poly<ModP>(std::string_view, const PrimeField&);

AnyPoly poly_parse(std::string_view text, const FieldTag& tag) {
  if (tag.is_rational()) return parse_poly<Rational>(text, RationalField{});
  return parse_poly<ModP>(text, PrimeField(tag.prime));
}

}  // namespace jsyz
