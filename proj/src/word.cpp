#include "ordmon/word.hpp"

#include <utility>  // for move

namespace ordmon {

  bool subword_le(std::string_view v, std::string_view w) {
    std::size_t i = 0;
    for (std::size_t j = 0; j < w.size() && i < v.size(); ++j) {
      if (v[i] == w[j]) {
        ++i;
      }
    }
    return i == v.size();
  }

  CollapsedElement CollapsedElement::of(Word w, std::string_view pivot) {
    if (subword_le(pivot, w)) {
      return top();
    }
    CollapsedElement x;
    x._word = std::move(w);
    return x;
  }

  CollapsedElement collapsed_add(CollapsedElement const& x,
                                 CollapsedElement const& y,
                                 std::string_view        pivot) {
    if (x.is_top() || y.is_top()) {
      return CollapsedElement::top();
    }
    return CollapsedElement::of(x.word() + y.word(), pivot);
  }

  bool collapsed_le(CollapsedElement const& x, CollapsedElement const& y) {
    if (y.is_top()) {
      return true;
    }
    return !x.is_top() && subword_le(x.word(), y.word());
  }

  std::string to_string(CollapsedElement const& x) {
    return x.is_top() ? std::string("T") : x.word();
  }

}  // namespace ordmon
