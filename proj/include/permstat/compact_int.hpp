#ifndef PERMSTAT_COMPACT_INT_HPP
#define PERMSTAT_COMPACT_INT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>

namespace permstat {

// Nonnegative integer that lives in a plain uint64 until it overflows, then
// promotes to a heap mpz. The engine holds tens of millions of these, almost
// all of which fit inline; exactness is preserved across the boundary.
class CompactZ {
public:
  CompactZ() = default;
  explicit CompactZ(std::uint64_t v) : small_(v) {}

  CompactZ(CompactZ&&) noexcept = default;
  CompactZ& operator=(CompactZ&&) noexcept = default;
  CompactZ(const CompactZ& o) : small_(o.small_) {
    if (o.big_) big_ = std::make_unique<mpz_class>(*o.big_);
  }
  CompactZ& operator=(const CompactZ& o) {
    small_ = o.small_;
    big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
    return *this;
  }

  bool is_zero() const { return !big_ && small_ == 0; }

  void add(const CompactZ& o) {
    if (!big_ && !o.big_) {
      std::uint64_t s;
      if (!__builtin_add_overflow(small_, o.small_, &s)) {
        small_ = s;
        return;
      }
    }
    promote();
    *big_ += o.big_ ? *o.big_ : mpz_class_from_u64(o.small_);
  }

  // this += o * m, m >= 0
  void add_product(const CompactZ& o, const mpz_class& m) {
    if (!big_ && !o.big_ && m.fits_ulong_p()) {
      unsigned long ml = m.get_ui();
      unsigned __int128 t = static_cast<unsigned __int128>(o.small_) * ml + small_;
      if ((t >> 64) == 0) {
        small_ = static_cast<std::uint64_t>(t);
        return;
      }
    }
    promote();
    mpz_class ov = o.to_mpz();
    mpz_addmul(big_->get_mpz_t(), ov.get_mpz_t(), m.get_mpz_t());
  }

  mpz_class to_mpz() const { return big_ ? *big_ : mpz_class_from_u64(small_); }

  bool operator==(const CompactZ& o) const { return to_mpz() == o.to_mpz(); }

private:
  void promote() {
    if (!big_) big_ = std::make_unique<mpz_class>(mpz_class_from_u64(small_));
  }

  static mpz_class mpz_class_from_u64(std::uint64_t v) {
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return z;
  }

  std::uint64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

}  // namespace permstat

#endif
