#include "klsum/chars.hpp"

#include <numbers>

#include "klsum/error.hpp"

namespace klsum::chars {

namespace {

cplx unit_root(std::uint64_t num, std::uint64_t den) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(num % den) / static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::string strip_prefix(const std::string& text, const std::string& prefix) {
  if (text.rfind(prefix, 0) == 0) return text.substr(prefix.size());
  return text;
}

}  // namespace

AdditiveCharacter::AdditiveCharacter(gf::FieldPtr field, gf::Elem twist) : field_(std::move(field)), twist_(twist) {
  if (twist_ == 0) throw Error(ErrorCode::ZeroElement, "additive twist must be nonzero");
  if (!field_->is_valid(twist_)) throw Error(ErrorCode::FieldMismatch, "twist outside field");
  const std::uint32_t p = field_->characteristic();
  roots_.reserve(p);
  for (std::uint32_t j = 0; j < p; ++j) roots_.push_back(unit_root(j, p));
}

cplx AdditiveCharacter::operator()(gf::Elem x) const {
  return roots_[field_->absolute_trace(field_->mul(twist_, x))];
}

cplx AdditiveCharacter::eval(const gf::FieldElement& x) const {
  if (x.field().get() != field_.get()) throw Error(ErrorCode::FieldMismatch, "additive character on another field");
  return (*this)(x.index());
}

AdditiveCharacter AdditiveCharacter::lift(const gf::FieldPtr& ext) const {
  if (!ext->has_subfield(*field_)) {
    throw Error(ErrorCode::NotASubfield, field_->descriptor() + " is not a subfield of " + ext->descriptor());
  }
  return AdditiveCharacter(ext, twist_);
}

MultiplicativeCharacter::MultiplicativeCharacter(gf::FieldPtr field, std::int64_t exponent) : field_(std::move(field)) {
  const auto m = static_cast<std::int64_t>(field_->size() - 1);
  std::int64_t c = exponent % m;
  if (c < 0) c += m;
  c_ = static_cast<std::uint64_t>(c);
}

cplx MultiplicativeCharacter::operator()(gf::Elem x) const {
  if (x == 0) throw Error(ErrorCode::ZeroElement, "multiplicative character at zero");
  if (c_ == 0) return {1.0, 0.0};
  const std::uint64_t m = order_modulus();
  return unit_root(mulmod(c_, field_->dlog(x), m), m);
}

cplx MultiplicativeCharacter::eval(const gf::FieldElement& x) const {
  if (x.field().get() != field_.get()) {
    throw Error(ErrorCode::FieldMismatch, "multiplicative character on another field");
  }
  return (*this)(x.index());
}

MultiplicativeCharacter MultiplicativeCharacter::frobenius(const gf::Field& base, std::uint64_t i) const {
  const int d = field_->degree_over(base);
  const std::uint64_t m = order_modulus();
  std::uint64_t c = c_;
  for (std::uint64_t s = 0; s < i % static_cast<std::uint64_t>(d); ++s) c = mulmod(c, base.size(), m);
  return MultiplicativeCharacter(field_, static_cast<std::int64_t>(c));
}

MultiplicativeCharacter compose_with_norm(const MultiplicativeCharacter& theta, const gf::FieldPtr& ext) {
  const gf::FieldPtr& F = theta.field();
  if (!ext->has_subfield(*F)) {
    throw Error(ErrorCode::NotASubfield, F->descriptor() + " is not a subfield of " + ext->descriptor());
  }
  // theta(N(G^e)) = exp(2 pi i c dlog(N G) e / (Q-1)) = exp(2 pi i c' e / (Q^b-1)).
  const std::uint64_t big = ext->size() - 1;
  const std::uint64_t small = F->size() - 1;
  const std::uint64_t lg = F->dlog(ext->norm_to(ext->generator(), *F));
  const std::uint64_t c = mulmod(mulmod(theta.exponent(), lg, big), big / small, big);
  return MultiplicativeCharacter(ext, static_cast<std::int64_t>(c));
}

CharacterTuple::CharacterTuple(std::vector<MultiplicativeCharacter> chars) : chars_(std::move(chars)) {
  if (chars_.empty()) throw Error(ErrorCode::IndexOutOfRange, "character tuple needs k >= 1");
  for (const auto& c : chars_) {
    if (c.field().get() != chars_.front().field().get()) {
      throw Error(ErrorCode::FieldMismatch, "character tuple spans several fields");
    }
  }
}

CharacterTuple CharacterTuple::trivial(const gf::FieldPtr& field, int k) {
  return from_exponents(field, std::vector<std::int64_t>(k > 0 ? k : 0, 0));
}

CharacterTuple CharacterTuple::from_exponents(const gf::FieldPtr& field, const std::vector<std::int64_t>& exps) {
  std::vector<MultiplicativeCharacter> v;
  v.reserve(exps.size());
  for (auto e : exps) v.emplace_back(field, e);
  return CharacterTuple(std::move(v));
}

std::vector<std::int64_t> CharacterTuple::exponents() const {
  std::vector<std::int64_t> out;
  for (const auto& c : chars_) out.push_back(static_cast<std::int64_t>(c.exponent()));
  return out;
}

cplx gauss_sum(const MultiplicativeCharacter& theta, const MultiplicativeCharacter& chi, const AdditiveCharacter& psi) {
  const gf::FieldPtr& E = theta.field();
  const gf::FieldPtr& F = chi.field();
  if (psi.field().get() != F.get() || !E->has_subfield(*F)) {
    throw Error(ErrorCode::TowerMismatch, "gauss sum needs theta over an extension of the field of chi and psi");
  }
  const AdditiveCharacter psi_n = psi.lift(E);
  cplx s = 0.0;
  for (std::uint64_t t = 1; t < E->size(); ++t) {
    const auto x = static_cast<gf::Elem>(t);
    s += theta(x) * chi(E->norm_to(x, *F)) * psi_n(x);
  }
  return -s;
}

AdditiveCharacter parse_additive(const gf::FieldPtr& field, const std::string& text) {
  const std::string body = strip_prefix(strip_prefix(text, "psi:"), "b=");
  return AdditiveCharacter(field, gf::parse_element(field, body).index());
}

MultiplicativeCharacter parse_multiplicative(const gf::FieldPtr& field, const std::string& text) {
  const std::string body = strip_prefix(strip_prefix(text, "chi:"), "c=");
  try {
    std::size_t pos = 0;
    const long long c = std::stoll(body, &pos);
    if (pos != body.size()) throw std::invalid_argument(body);
    return MultiplicativeCharacter(field, c);
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::ParseError, "bad character exponent '" + text + "'");
  }
}

CharacterTuple parse_tuple(const gf::FieldPtr& field, const std::string& text) {
  const std::string body = strip_prefix(text, "alpha=");
  std::vector<std::int64_t> exps;
  std::size_t start = 0;
  while (start <= body.size()) {
    const auto comma = body.find(',', start);
    const std::string tok = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      std::size_t pos = 0;
      exps.push_back(std::stoll(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "bad character tuple '" + text + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return CharacterTuple::from_exponents(field, exps);
}

}  // namespace klsum::chars
