#include "ordmon/orderability.hpp"

#include <algorithm>  // for reverse
#include <deque>      // for deque
#include <memory>     // for make_shared

#include "ordmon/instances.hpp"

namespace ordmon {

  bool Relation::is_antisymmetric() const {
    for (std::size_t i = 0; i < _n; ++i) {
      for (std::size_t j = i + 1; j < _n; ++j) {
        if ((*this)(i, j) && (*this)(j, i)) {
          return false;
        }
      }
    }
    return true;
  }

  bool Relation::is_total() const {
    for (std::size_t i = 0; i < _n; ++i) {
      for (std::size_t j = i + 1; j < _n; ++j) {
        if (!(*this)(i, j) && !(*this)(j, i)) {
          return false;
        }
      }
    }
    return true;
  }

  bool Relation::contains(Relation const& other) const {
    for (std::size_t i = 0; i < _bits.size(); ++i) {
      if (other._bits[i] && !_bits[i]) {
        return false;
      }
    }
    return true;
  }

  namespace {
    // witness[u * n + w] = first step from u to w
    std::vector<std::optional<Step>> step_table(CayleyMonoid const& t) {
      std::size_t const                n = t.size();
      std::vector<std::optional<Step>> steps(n * n);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          std::size_t u = t.add(x, y);
          for (std::size_t c = 0; c < n; ++c) {
            std::size_t w = t.add(t.add(x, c), y);
            if (!steps[u * n + w]) {
              steps[u * n + w] = Step{x, y, c};
            }
          }
        }
      }
      return steps;
    }
  }  // namespace

  std::vector<std::pair<std::size_t, std::size_t>>
  step_relation(CayleyMonoid const& t) {
    std::size_t const n     = t.size();
    auto const        steps = step_table(t);
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t w = 0; w < n; ++w) {
        if (steps[u * n + w]) {
          out.emplace_back(u, w);
        }
      }
    }
    return out;
  }

  std::optional<Step> step_witness(CayleyMonoid const& t,
                                   std::size_t         u,
                                   std::size_t         w) {
    for (std::size_t x = 0; x < t.size(); ++x) {
      for (std::size_t y = 0; y < t.size(); ++y) {
        if (t.add(x, y) != u) {
          continue;
        }
        for (std::size_t c = 0; c < t.size(); ++c) {
          if (t.add(t.add(x, c), y) == w) {
            return Step{x, y, c};
          }
        }
      }
    }
    return std::nullopt;
  }

  std::size_t weight(CayleyMonoid const&             t,
                     std::vector<std::size_t> const& v) {
    std::size_t w = t.unit();
    for (auto x : v) {
      w = t.add(w, x);
    }
    return w;
  }

  bool is_monotone(CayleyMonoid const& t, MonotoneTable const& table) {
    for (std::size_t r = 1; r < table.rows.size(); ++r) {
      auto const& prev   = table.rows[r - 1];
      std::size_t target = weight(t, table.rows[r]);
      bool        found  = false;
      for (std::size_t k = 0; k <= prev.size() && !found; ++k) {
        for (std::size_t c = 0; c < t.size() && !found; ++c) {
          auto aug = prev;
          aug.insert(aug.begin() + k, c);
          found = weight(t, aug) == target;
        }
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  std::vector<ClosureResult::Link> ClosureResult::chain(std::size_t u,
                                                        std::size_t w) const {
    std::size_t const n = reachable.size();
    std::vector<Link> links;
    while (w != u) {
      auto const& link = parents[u * n + w];
      links.push_back(*link);
      w = link->from;
    }
    std::reverse(links.begin(), links.end());
    return links;
  }

  ClosureResult preceq_min(CayleyMonoid const& t) {
    std::size_t const n     = t.size();
    auto const        steps = step_table(t);
    ClosureResult     result{Relation(n), {}};
    result.parents.resize(n * n);
    for (std::size_t u = 0; u < n; ++u) {
      result.reachable.set(u, u);
      std::deque<std::size_t> queue{u};
      while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t w = 0; w < n; ++w) {
          auto const& step = steps[v * n + w];
          if (step && !result.reachable(u, w)) {
            result.reachable.set(u, w);
            result.parents[u * n + w] = ClosureResult::Link{v, w, *step};
            queue.push_back(w);
          }
        }
      }
    }
    return result;
  }

  MonotoneTable certificate(CayleyMonoid const&  t,
                            ClosureResult const& closure,
                            std::size_t          u,
                            std::size_t          w) {
    MonotoneTable table;
    auto          links = closure.chain(u, w);
    if (links.empty()) {
      if (u == t.unit()) {
        table.rows.emplace_back();
      } else {
        table.rows.push_back({u});
      }
      return table;
    }
    for (auto const& link : links) {
      table.rows.push_back({link.step.x, link.step.y});
    }
    auto const& last = links.back().step;
    table.rows.push_back({last.x, last.c, last.y});
    return table;
  }

  Verdict<OrderabilityWitness> is_orderable(CayleyMonoid const& t) {
    auto const closure = preceq_min(t);
    for (std::size_t a = 0; a < t.size(); ++a) {
      for (std::size_t b = a + 1; b < t.size(); ++b) {
        if (closure.reachable(a, b) && closure.reachable(b, a)) {
          return {OrderabilityWitness{a,
                                      b,
                                      certificate(t, closure, a, b),
                                      certificate(t, closure, b, a)}};
        }
      }
    }
    return {};
  }

  bool naive_table_search(CayleyMonoid const& t,
                          std::size_t         a,
                          std::size_t         b,
                          std::size_t         max_rows,
                          std::size_t         max_len) {
    std::size_t const n = t.size();
    if (a == b) {
      return true;
    }
    // grow[w * n + v]: some row of weight w and length <= max_len has an
    // augmentation of weight v. Every vector is enumerated explicitly.
    std::vector<char>        grow(n * n, 0);
    std::vector<std::size_t> v;
    std::vector<std::size_t> suffix;
    for (std::size_t len = 0; len <= max_len; ++len) {
      v.assign(len, 0);
      while (true) {
        suffix.assign(len + 1, t.unit());
        for (std::size_t k = len; k-- > 0;) {
          suffix[k] = t.add(v[k], suffix[k + 1]);
        }
        std::size_t prefix = t.unit();
        for (std::size_t k = 0; k <= len; ++k) {
          for (std::size_t c = 0; c < n; ++c) {
            grow[suffix[0] * n + t.add(t.add(prefix, c), suffix[k])] = 1;
          }
          if (k < len) {
            prefix = t.add(prefix, v[k]);
          }
        }
        std::size_t pos = 0;
        while (pos < len && ++v[pos] == n) {
          v[pos++] = 0;
        }
        if (pos == len) {
          break;
        }
      }
    }
    // rows[r]: weights of rows reachable as row r + 1 of a monotone table
    std::vector<char> seen(n, 0);
    std::vector<char> frontier(n, 0);
    seen[a] = frontier[a] = 1;
    for (std::size_t r = 1; r < max_rows; ++r) {
      std::vector<char> next(n, 0);
      for (std::size_t w = 0; w < n; ++w) {
        if (!frontier[w]) {
          continue;
        }
        for (std::size_t x = 0; x < n; ++x) {
          if (grow[w * n + x]) {
            next[x] = 1;
          }
        }
      }
      for (std::size_t x = 0; x < n; ++x) {
        seen[x] = seen[x] || next[x];
      }
      frontier = std::move(next);
    }
    return seen[b] != 0;
  }

  Verdict<StabilizationViolation> stabilization_check(CayleyMonoid const& t) {
    std::uint64_t const limit = 2 * t.size();
    for (std::size_t a = 0; a < t.size(); ++a) {
      std::vector<std::size_t> mult(limit + 1, t.unit());
      for (std::uint64_t k = 1; k <= limit; ++k) {
        mult[k] = t.add(mult[k - 1], a);
      }
      for (std::uint64_t n1 = 1; n1 <= limit; ++n1) {
        for (std::uint64_t n3 = n1 + 2; n3 <= limit; ++n3) {
          if (mult[n1] != mult[n3]) {
            continue;
          }
          for (std::uint64_t n2 = n1 + 1; n2 < n3; ++n2) {
            if (mult[n2] != mult[n1]) {
              return {StabilizationViolation{a, n1, n2, n3}};
            }
          }
        }
      }
    }
    return {};
  }

  OrderedMonoid<std::size_t> cayley_ordered(CayleyMonoid const& t) {
    auto closure = std::make_shared<ClosureResult const>(preceq_min(t));
    OrderedMonoid<std::size_t> inst;
    inst.monoid = cayley_contract(t);
    inst.order.le
        = [closure](std::size_t x, std::size_t y) {
            return closure->reachable(x, y);
          };
    inst.order.flags = {Postulate::O, Postulate::P, Postulate::C};
    if (closure->reachable.is_antisymmetric()) {
      inst.order.flags.insert(Postulate::A);
    }
    if (closure->reachable.is_total()) {
      inst.order.flags.insert(Postulate::T);
    }
    inst.carrier_size = t.size();
    auto shared       = std::make_shared<CayleyMonoid const>(t);
    inst.print = [shared](std::size_t x) { return shared->label(x); };
    return inst;
  }

}  // namespace ordmon
