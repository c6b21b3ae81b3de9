#ifndef ORDMON_ORDERABILITY_HPP_
#define ORDMON_ORDERABILITY_HPP_

// The canonical minimal positive compatible preorder on a finite monoid,
// computed as the reflexive-transitive closure of single augmentation
// steps, and the orderability test built on it.

#include <cstddef>   // for size_t
#include <cstdint>   // for uint64_t
#include <optional>  // for optional
#include <utility>   // for pair
#include <vector>    // for vector

#include "cayley.hpp"
#include "core.hpp"

namespace ordmon {

  //! A square boolean matrix over carrier indices.
  class Relation {
   public:
    Relation() = default;
    explicit Relation(std::size_t n) : _n(n), _bits(n * n, 0) {}

    std::size_t size() const noexcept {
      return _n;
    }
    bool operator()(std::size_t i, std::size_t j) const {
      return _bits[i * _n + j] != 0;
    }
    void set(std::size_t i, std::size_t j, bool value = true) {
      _bits[i * _n + j] = value;
    }

    bool is_antisymmetric() const;
    bool is_total() const;
    bool contains(Relation const& other) const;

    friend bool operator==(Relation const&, Relation const&) = default;

   private:
    std::size_t       _n = 0;
    std::vector<char> _bits;
  };

  //! One augmentation step at the level of weights: x + y = from and
  //! x + c + y = to.
  struct Step {
    std::size_t x;
    std::size_t y;
    std::size_t c;
  };

  //! All (u, w) reachable by one step, sorted. A vector (a1..ak | ak+1..an)
  //! with c inserted at the bar collapses to the pair (x, y) of its two
  //! partial sums, and (x, y) is itself a two-entry vector, so pairs are
  //! enough.
  std::vector<std::pair<std::size_t, std::size_t>>
  step_relation(CayleyMonoid const& t);

  //! The first step from u to w in (x, y, c) order, if any.
  std::optional<Step> step_witness(CayleyMonoid const& t,
                                   std::size_t         u,
                                   std::size_t         w);

  //! A finite sequence of rows, each a vector of carrier indices.
  struct MonotoneTable {
    std::vector<std::vector<std::size_t>> rows;
  };

  std::size_t weight(CayleyMonoid const& t, std::vector<std::size_t> const& v);

  //! Each row has the weight of some augmentation of the previous row.
  bool is_monotone(CayleyMonoid const& t, MonotoneTable const& table);

  struct ClosureResult {
    struct Link {
      std::size_t from;
      std::size_t to;
      Step        step;
    };

    Relation reachable;
    //! parents[u * n + w]: the last step of a shortest chain from u to w.
    std::vector<std::optional<Link>> parents;

    //! The steps of a shortest chain from u to w (empty when u == w).
    std::vector<Link> chain(std::size_t u, std::size_t w) const;
  };

  //! Breadth-first closure from every source; reflexive and transitive by
  //! construction, with a step witness for every related pair.
  ClosureResult preceq_min(CayleyMonoid const& t);

  //! A monotone table whose first row weighs u and last row weighs w,
  //! assembled from the closure's step witnesses. Requires u related to w.
  MonotoneTable certificate(CayleyMonoid const&  t,
                            ClosureResult const& closure,
                            std::size_t          u,
                            std::size_t          w);

  //! a != b with a <= b <= a, and tables certifying both directions.
  struct OrderabilityWitness {
    std::size_t   a;
    std::size_t   b;
    MonotoneTable up;
    MonotoneTable down;
  };

  //! Holds iff the minimal preorder is antisymmetric.
  Verdict<OrderabilityWitness> is_orderable(CayleyMonoid const& t);

  //! Brute force: is there an explicit monotone table with at most
  //! max_rows rows, each of length at most max_len, from weight a to
  //! weight b?
  bool naive_table_search(CayleyMonoid const& t,
                          std::size_t         a,
                          std::size_t         b,
                          std::size_t         max_rows,
                          std::size_t         max_len);

  struct StabilizationViolation {
    std::size_t   a;
    std::uint64_t n1;
    std::uint64_t n2;
    std::uint64_t n3;
  };

  //! For every a and 1 <= n1 < n2 < n3 <= 2 * size: n1 a = n3 a implies
  //! n2 a = n1 a.
  Verdict<StabilizationViolation> stabilization_check(CayleyMonoid const& t);

  //! The table ordered by its minimal preorder. Flags are (O), (P), (C),
  //! plus (A) when orderable and (T) when the preorder is total.
  OrderedMonoid<std::size_t> cayley_ordered(CayleyMonoid const& t);

}  // namespace ordmon

#endif  // ORDMON_ORDERABILITY_HPP_
