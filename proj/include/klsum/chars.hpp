#pragma once

#include <complex>
#include <string>
#include <vector>

#include "klsum/gf.hpp"

namespace klsum::chars {

using cplx = std::complex<double>;

/// x -> exp(2 pi i lift(Tr_{F/F_p}(b x)) / p) for a fixed twist b != 0.
class AdditiveCharacter {
 public:
  AdditiveCharacter(gf::FieldPtr field, gf::Elem twist = 1);

  const gf::FieldPtr& field() const { return field_; }
  gf::Elem twist() const { return twist_; }

  cplx operator()(gf::Elem x) const;
  cplx eval(const gf::FieldElement& x) const;

  /// psi_m = psi o Tr_{ext/F}. The result is again an additive character of
  /// `ext` whose twist is b viewed inside ext.
  AdditiveCharacter lift(const gf::FieldPtr& ext) const;

 private:
  gf::FieldPtr field_;
  gf::Elem twist_;
  std::vector<cplx> roots_;  // p-th roots of unity
};

/// x -> exp(2 pi i c dlog(x) / (q - 1)) against the field's cached generator.
class MultiplicativeCharacter {
 public:
  MultiplicativeCharacter(gf::FieldPtr field, std::int64_t exponent);

  const gf::FieldPtr& field() const { return field_; }
  std::uint64_t exponent() const { return c_; }
  std::uint64_t order_modulus() const { return field_->size() - 1; }
  bool is_trivial() const { return c_ == 0; }

  cplx operator()(gf::Elem x) const;
  cplx eval(const gf::FieldElement& x) const;

  /// Exponent of theta^(|base|^i) (the Frobenius twist over `base`).
  MultiplicativeCharacter frobenius(const gf::Field& base, std::uint64_t i) const;

 private:
  gf::FieldPtr field_;
  std::uint64_t c_;
};

/// theta o N_{ext/F}, expressed as an exponent against ext's generator.
MultiplicativeCharacter compose_with_norm(const MultiplicativeCharacter& theta, const gf::FieldPtr& ext);

class CharacterTuple {
 public:
  explicit CharacterTuple(std::vector<MultiplicativeCharacter> chars);
  /// All-trivial tuple of length k.
  static CharacterTuple trivial(const gf::FieldPtr& field, int k);
  static CharacterTuple from_exponents(const gf::FieldPtr& field, const std::vector<std::int64_t>& exps);

  int size() const { return static_cast<int>(chars_.size()); }
  const gf::FieldPtr& field() const { return chars_.front().field(); }
  const MultiplicativeCharacter& operator[](int i) const { return chars_[i]; }
  const std::vector<MultiplicativeCharacter>& chars() const { return chars_; }
  std::vector<std::int64_t> exponents() const;

 private:
  std::vector<MultiplicativeCharacter> chars_;
};

/// tau_n(theta, chi, psi) = - sum_{t != 0} theta(t) chi(N(t)) psi_n(t), with
/// theta on the extension and chi, psi on the base.
cplx gauss_sum(const MultiplicativeCharacter& theta, const MultiplicativeCharacter& chi,
               const AdditiveCharacter& psi);

/// `psi:b=<element>` / `chi:c=<int>` / `alpha=c1,...,ck` (prefix optional).
AdditiveCharacter parse_additive(const gf::FieldPtr& field, const std::string& text);
MultiplicativeCharacter parse_multiplicative(const gf::FieldPtr& field, const std::string& text);
CharacterTuple parse_tuple(const gf::FieldPtr& field, const std::string& text);

}  // namespace klsum::chars
