#ifndef HALOBRAID_RAAG_HPP_
#define HALOBRAID_RAAG_HPP_

// Right-angled Artin groups G(Delta): generators are the vertices of Delta,
// and two generators commute iff they are adjacent.
//
// The word problem is solved by shuffle cancellation: a letter x^e and a
// later x^-e cancel whenever every letter between them commutes with x. A
// word without such a pair is geodesic, and two geodesics spell the same
// element iff they differ by swaps of adjacent commuting letters. The
// canonical form picks the lexicographically least such rearrangement.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "halobraid/errors.hpp"
#include "halobraid/graph.hpp"

namespace halobraid {

struct Letter {
  std::size_t generator;
  bool inverse = false;

  Letter inverted() const noexcept {
    return {generator, !inverse};
  }

  // Ordered by generator, then x before x^-1.
  friend auto operator<=>(Letter const&, Letter const&) = default;
};

struct GroupWord {
  std::vector<Letter> letters;

  GroupWord() = default;
  GroupWord(std::initializer_list<Letter> l) : letters(l) {}
  explicit GroupWord(std::vector<Letter> l) : letters(std::move(l)) {}

  std::size_t size() const noexcept {
    return letters.size();
  }

  bool empty() const noexcept {
    return letters.empty();
  }

  Letter const& operator[](std::size_t i) const {
    return letters[i];
  }

  // Formal inverse: reversed with every letter inverted.
  GroupWord inverse() const {
    GroupWord out;
    out.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      out.letters.push_back(it->inverted());
    }
    return out;
  }

  GroupWord& operator*=(GroupWord const& other) {
    letters.insert(letters.end(), other.letters.begin(), other.letters.end());
    return *this;
  }

  friend GroupWord operator*(GroupWord a, GroupWord const& b) {
    a *= b;
    return a;
  }

  friend auto operator<=>(GroupWord const&, GroupWord const&) = default;
};

// w^k by concatenation; negative k uses the formal inverse.
inline GroupWord power(GroupWord const& w, long k) {
  GroupWord base = k < 0 ? w.inverse() : w;
  GroupWord out;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) {
    out *= base;
  }
  return out;
}

class RaagPresentation {
 public:
  RaagPresentation() = default;

  explicit RaagPresentation(SimpleGraph graph)
      : graph_(std::move(graph)), commute_(graph_.order() * graph_.order(), 0) {
    std::size_t const n = graph_.order();
    for (std::size_t i = 0; i < n; ++i) {
      commute_[i * n + i] = 1;
      for (std::size_t j : graph_.neighbors(i)) {
        commute_[i * n + j] = 1;
      }
    }
  }

  SimpleGraph const& graph() const noexcept {
    return graph_;
  }

  std::size_t rank() const noexcept {
    return graph_.order();
  }

  Vertex const& generator_name(std::size_t i) const {
    return graph_.vertex(i);
  }

  std::size_t generator(Vertex const& name) const {
    if (!graph_.contains(name)) {
      throw unknown_generator_error(name);
    }
    return graph_.index_of(name);
  }

  // True for equal generators as well as adjacent ones.
  bool commute(std::size_t a, std::size_t b) const noexcept {
    return commute_[a * graph_.order() + b] != 0;
  }

  std::vector<std::size_t> const& link(std::size_t v) const {
    return graph_.neighbors(v);
  }

 private:
  SimpleGraph graph_;
  std::vector<char> commute_;
};

inline Letter letter(RaagPresentation const& p, Vertex const& name, bool inverse = false) {
  return {p.generator(name), inverse};
}

// [x, y] = x y x^-1 y^-1.
inline GroupWord commutator(GroupWord const& x, GroupWord const& y) {
  return x * y * x.inverse() * y.inverse();
}

inline GroupWord free_reduce(GroupWord const& w) {
  GroupWord out;
  for (Letter const& x : w.letters) {
    if (!out.letters.empty() && out.letters.back() == x.inverted()) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(x);
    }
  }
  return out;
}

// Geodesic representative, not yet canonical. Letters are appended to a
// reduced prefix; a new letter cancels the nearest earlier inverse that it
// can shuffle back to, which keeps the prefix reduced.
inline GroupWord shuffle_reduce(GroupWord const& w, RaagPresentation const& p) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter const& x : w.letters) {
    bool cancelled = false;
    for (std::size_t k = out.size(); k-- > 0;) {
      Letter const& y = out[k];
      if (y.generator == x.generator) {
        if (y.inverse != x.inverse) {
          out.erase(out.begin() + static_cast<std::ptrdiff_t>(k));
          cancelled = true;
        }
        break;
      }
      if (!p.commute(y.generator, x.generator)) {
        break;
      }
    }
    if (!cancelled) {
      out.push_back(x);
    }
  }
  return GroupWord(std::move(out));
}

namespace detail {

  // Lexicographically least rearrangement of a geodesic under swaps of
  // adjacent commuting letters: repeatedly emit the smallest letter that no
  // remaining earlier letter blocks.
  inline GroupWord lex_normal_form(GroupWord const& w, RaagPresentation const& p) {
    std::size_t const n = w.size();
    auto blocks = [&](Letter const& a, Letter const& b) {
      return a.generator == b.generator || !p.commute(a.generator, b.generator);
    };
    std::vector<std::size_t> blockers(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (blocks(w[i], w[j])) {
          ++blockers[j];
        }
      }
    }
    std::vector<bool> emitted(n, false);
    GroupWord out;
    out.letters.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (!emitted[i] && blockers[i] == 0 && (best == n || w[i] < w[best])) {
          best = i;
        }
      }
      emitted[best] = true;
      out.letters.push_back(w[best]);
      for (std::size_t j = best + 1; j < n; ++j) {
        if (!emitted[j] && blocks(w[best], w[j])) {
          --blockers[j];
        }
      }
    }
    return out;
  }

}  // namespace detail

// Canonical geodesic: equal elements give identical words.
inline GroupWord raag_reduce(GroupWord const& w, RaagPresentation const& p) {
  return detail::lex_normal_form(shuffle_reduce(w, p), p);
}

inline bool is_trivial(GroupWord const& w, RaagPresentation const& p) {
  return shuffle_reduce(w, p).empty();
}

inline bool equal(GroupWord const& a, GroupWord const& b, RaagPresentation const& p) {
  return is_trivial(a * b.inverse(), p);
}

// Membership in the special subgroup generated by `gens`: the geodesic uses
// only those generators.
inline bool in_special_subgroup(GroupWord const& w,
                                std::vector<std::size_t> const& gens,
                                RaagPresentation const& p) {
  std::vector<bool> allowed(p.rank(), false);
  for (std::size_t g : gens) {
    allowed.at(g) = true;
  }
  GroupWord r = shuffle_reduce(w, p);
  return std::all_of(r.letters.begin(), r.letters.end(), [&](Letter const& x) {
    return allowed[x.generator];
  });
}

// Signed exponent sum per generator.
inline std::vector<long> abelianization(GroupWord const& w, RaagPresentation const& p) {
  std::vector<long> sums(p.rank(), 0);
  for (Letter const& x : w.letters) {
    sums.at(x.generator) += x.inverse ? -1 : 1;
  }
  return sums;
}

////////////////////////////////////////////////////////////////////////////////
// HNN structure over a vertex v: stable letter v, base G(Delta - v),
// associated subgroup G(link(v)).
////////////////////////////////////////////////////////////////////////////////

// v^e g v^-e with g in G(link(v)), found at letters[first] and letters[last].
struct PinchWitness {
  std::size_t stable;
  std::size_t first;
  std::size_t last;
  bool first_inverse;
  GroupWord inner;

  friend bool operator==(PinchWitness const&, PinchWitness const&) = default;
};

// Scans w as w_0 v^e1 w_1 v^e2 ... and returns the leftmost pair of
// consecutive v-letters of opposite sign whose inner word lies in
// G(link(v)).
inline std::optional<PinchWitness> detect_pinch(GroupWord const& w,
                                                std::size_t v,
                                                RaagPresentation const& p) {
  std::optional<std::size_t> prev;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].generator != v) {
      continue;
    }
    if (prev && w[*prev].inverse != w[i].inverse) {
      GroupWord inner(std::vector<Letter>(w.letters.begin() + static_cast<std::ptrdiff_t>(*prev) + 1,
                                          w.letters.begin() + static_cast<std::ptrdiff_t>(i)));
      if (in_special_subgroup(inner, p.link(v), p)) {
        return PinchWitness{v, *prev, i, w[*prev].inverse, std::move(inner)};
      }
    }
    prev = i;
  }
  return std::nullopt;
}

// Replaces the pinch v^e g v^-e by g.
inline GroupWord apply_pinch(GroupWord const& w, PinchWitness const& pinch) {
  GroupWord out;
  out.letters.reserve(w.size() - 2);
  out.letters.insert(out.letters.end(), w.letters.begin(),
                     w.letters.begin() + static_cast<std::ptrdiff_t>(pinch.first));
  out.letters.insert(out.letters.end(), pinch.inner.letters.begin(),
                     pinch.inner.letters.end());
  out.letters.insert(out.letters.end(),
                     w.letters.begin() + static_cast<std::ptrdiff_t>(pinch.last) + 1,
                     w.letters.end());
  return out;
}

inline GroupWord pinch_reduce(GroupWord w, std::size_t v, RaagPresentation const& p) {
  while (auto pinch = detect_pinch(w, v, p)) {
    w = apply_pinch(w, *pinch);
  }
  return w;
}

////////////////////////////////////////////////////////////////////////////////
// Text format: whitespace-separated generator names; an inverse is written
// "x^-1" or "~x". Output always uses "^-1".
////////////////////////////////////////////////////////////////////////////////

inline GroupWord parse_word(std::string const& text, RaagPresentation const& p) {
  std::istringstream in(text);
  std::string tok;
  GroupWord w;
  while (in >> tok) {
    bool inverse = false;
    if (tok.size() > 1 && tok.front() == '~') {
      tok.erase(0, 1);
      inverse = true;
    } else if (tok.size() > 3 && tok.ends_with("^-1")) {
      tok.resize(tok.size() - 3);
      inverse = true;
    }
    w.letters.push_back({p.generator(tok), inverse});
  }
  return w;
}

inline std::string format_word(GroupWord const& w, RaagPresentation const& p) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) {
      out += ' ';
    }
    out += p.generator_name(w[i].generator);
    if (w[i].inverse) {
      out += "^-1";
    }
  }
  return out;
}

}  // namespace halobraid

#endif  // HALOBRAID_RAAG_HPP_
