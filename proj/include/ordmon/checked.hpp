#ifndef ORDMON_CHECKED_HPP_
#define ORDMON_CHECKED_HPP_

#include <cstdint>  // for int64_t, uint64_t

#include "error.hpp"

namespace ordmon::detail {

  template <typename T>
  T checked_add(T x, T y) {
    T r;
    if (__builtin_add_overflow(x, y, &r)) {
      throw Error(ErrorKind::overflow, "integer overflow in addition");
    }
    return r;
  }

  template <typename T>
  T checked_sub(T x, T y) {
    T r;
    if (__builtin_sub_overflow(x, y, &r)) {
      throw Error(ErrorKind::overflow, "integer overflow in subtraction");
    }
    return r;
  }

  template <typename T>
  T checked_mul(T x, T y) {
    T r;
    if (__builtin_mul_overflow(x, y, &r)) {
      throw Error(ErrorKind::overflow, "integer overflow in multiplication");
    }
    return r;
  }

}  // namespace ordmon::detail

#endif  // ORDMON_CHECKED_HPP_
