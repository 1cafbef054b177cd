#ifndef ZAPPA_FIELD_HPP
#define ZAPPA_FIELD_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "zappa/errors.hpp"
#include "zappa/numeric.hpp"

namespace zappa {

/// GF(q) as dense add/mul tables for tiny q. Elements are labeled 0..q-1;
/// 0 and 1 are the additive and multiplicative identities. Non-prime q uses
/// polynomial arithmetic over GF(p) with a fixed reduction polynomial,
/// labels encoding coefficient vectors in base p.
class FieldTable {
 public:
  using elem = std::uint8_t;

  static FieldTable build(unsigned q) { return FieldTable(q); }

  unsigned size() const { return q_; }
  unsigned characteristic() const { return p_; }
  const std::string& reduction_polynomial() const { return poly_text_; }

  elem add(elem a, elem b) const { return add_[a * q_ + b]; }
  elem mul(elem a, elem b) const { return mul_[a * q_ + b]; }
  elem neg(elem a) const { return neg_[a]; }
  elem inv(elem a) const {
    if (a == 0) throw error("FieldTable: zero has no inverse");
    return inv_[a];
  }

 private:
  explicit FieldTable(unsigned q) : q_(q) {
    static constexpr std::array<unsigned, 10> supported{2, 3, 4, 5, 7, 8, 9, 11, 13, 16};
    bool ok = false;
    for (unsigned s : supported) ok |= (s == q);
    if (!ok) throw error("FieldTable: unsupported field size " + std::to_string(q));

    unsigned p = 2;
    while (q % p != 0) ++p;
    p_ = p;
    unsigned e = 0;
    for (unsigned m = q; m > 1; m /= p) ++e;

    // Reduction polynomials (coefficients of x^0..x^e, all monic):
    // GF(4): x^2+x+1, GF(8): x^3+x+1, GF(9): x^2+1, GF(16): x^4+x+1.
    std::vector<unsigned> modulus;
    if (e == 1) {
      poly_text_ = "prime";
    } else if (q == 4) {
      modulus = {1, 1, 1};
      poly_text_ = "x^2+x+1";
    } else if (q == 8) {
      modulus = {1, 1, 0, 1};
      poly_text_ = "x^3+x+1";
    } else if (q == 9) {
      modulus = {1, 0, 1};
      poly_text_ = "x^2+1";
    } else {  // q == 16
      modulus = {1, 1, 0, 0, 1};
      poly_text_ = "x^4+x+1";
    }

    auto to_digits = [&](unsigned v) {
      std::vector<unsigned> d(e, 0);
      for (unsigned i = 0; i < e; ++i) {
        d[i] = v % p;
        v /= p;
      }
      return d;
    };
    auto from_digits = [&](const std::vector<unsigned>& d) {
      unsigned v = 0;
      for (unsigned i = e; i-- > 0;) v = v * p + d[i];
      return v;
    };

    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (unsigned a = 0; a < q_; ++a) {
      for (unsigned b = 0; b < q_; ++b) {
        if (e == 1) {
          add_[a * q_ + b] = static_cast<elem>((a + b) % p);
          mul_[a * q_ + b] = static_cast<elem>((a * b) % p);
        } else {
          auto da = to_digits(a), db = to_digits(b);
          std::vector<unsigned> sum(e);
          for (unsigned i = 0; i < e; ++i) sum[i] = (da[i] + db[i]) % p;
          add_[a * q_ + b] = static_cast<elem>(from_digits(sum));
          std::vector<unsigned> prod(2 * e - 1, 0);
          for (unsigned i = 0; i < e; ++i)
            for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
          // Reduce modulo the monic reduction polynomial.
          for (unsigned d = 2 * e - 2; d + 1 > e; --d) {
            unsigned c = prod[d];
            if (c == 0) continue;
            prod[d] = 0;
            for (unsigned i = 0; i < e; ++i)
              prod[d - e + i] = (prod[d - e + i] + c * (p - modulus[i] % p)) % p;
          }
          prod.resize(e);
          mul_[a * q_ + b] = static_cast<elem>(from_digits(prod));
        }
      }
    }
    for (unsigned a = 0; a < q_; ++a)
      for (unsigned b = 0; b < q_; ++b) {
        if (add(static_cast<elem>(a), static_cast<elem>(b)) == 0) neg_[a] = static_cast<elem>(b);
        if (mul(static_cast<elem>(a), static_cast<elem>(b)) == 1) inv_[a] = static_cast<elem>(b);
      }
    validate();
  }

  /// Exhaustive field-axiom check; tables are tiny, so this runs at build.
  void validate() const {
    auto fail = [&](const char* what) {
      throw error("FieldTable: axiom check failed for q=" + std::to_string(q_) + ": " + what);
    };
    for (unsigned a = 0; a < q_; ++a) {
      elem ea = static_cast<elem>(a);
      if (add(ea, 0) != ea) fail("additive identity");
      if (mul(ea, 1) != ea) fail("multiplicative identity");
      if (add(ea, neg(ea)) != 0) fail("additive inverse");
      if (a != 0 && mul(ea, inv(ea)) != 1) fail("multiplicative inverse");
      for (unsigned b = 0; b < q_; ++b) {
        elem eb = static_cast<elem>(b);
        if (add(ea, eb) != add(eb, ea)) fail("commutative addition");
        if (mul(ea, eb) != mul(eb, ea)) fail("commutative multiplication");
        for (unsigned c = 0; c < q_; ++c) {
          elem ec = static_cast<elem>(c);
          if (add(add(ea, eb), ec) != add(ea, add(eb, ec))) fail("associative addition");
          if (mul(mul(ea, eb), ec) != mul(ea, mul(eb, ec))) fail("associative multiplication");
          if (mul(ea, add(eb, ec)) != add(mul(ea, eb), mul(ea, ec))) fail("distributivity");
        }
      }
    }
  }

  unsigned q_;
  unsigned p_;
  std::string poly_text_;
  std::vector<elem> add_, mul_, neg_, inv_;
};

inline FieldTable build_field(unsigned q) { return FieldTable::build(q); }

}  // namespace zappa

#endif
