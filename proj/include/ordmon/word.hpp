#ifndef ORDMON_WORD_HPP_
#define ORDMON_WORD_HPP_

#include <string>       // for string
#include <string_view>  // for string_view

namespace ordmon {

  //! A word over a lowercase alphabet; the empty word is the unit of
  //! concatenation.
  using Word = std::string;

  //! v is a subword of w: it arises from w by deleting letters, keeping
  //! the order of the rest.
  bool subword_le(std::string_view v, std::string_view w);

  //! An element of the free monoid with the upper cone of a pivot word
  //! collapsed to a single point Top.
  class CollapsedElement {
   public:
    //! The empty word.
    CollapsedElement() = default;

    static CollapsedElement top() {
      CollapsedElement x;
      x._top = true;
      return x;
    }

    //! Normal(w), or Top when w contains the pivot as a subword.
    static CollapsedElement of(Word w, std::string_view pivot);

    bool is_top() const noexcept {
      return _top;
    }

    //! Only meaningful when !is_top().
    Word const& word() const noexcept {
      return _word;
    }

    friend bool operator==(CollapsedElement const&,
                           CollapsedElement const&) = default;

   private:
    Word _word;
    bool _top = false;
  };

  CollapsedElement collapsed_add(CollapsedElement const& x,
                                 CollapsedElement const& y,
                                 std::string_view        pivot);

  //! Subword order on normal words, with Top above everything.
  bool collapsed_le(CollapsedElement const& x, CollapsedElement const& y);

  //! The word itself, or "T" for Top.
  std::string to_string(CollapsedElement const& x);

}  // namespace ordmon

#endif  // ORDMON_WORD_HPP_
