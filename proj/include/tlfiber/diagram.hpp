#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tlfiber/errors.hpp"

namespace tlfiber {

/// A morphism m -> n of the Temperley-Lieb category: a noncrossing perfect
/// matching of the m + n boundary points together with a count of closed
/// loops. Bottom points are 1..m left to right, top points m+1..m+n left to
/// right. Pairs are stored as (a, b) with a < b, sorted by a.
class PlanarDiagram {
 public:
  using Pair = std::pair<std::size_t, std::size_t>;

  PlanarDiagram() = default;
  /// Validates and canonicalizes; throws InvalidDiagram.
  PlanarDiagram(std::size_t source, std::size_t target, std::vector<Pair> pairs,
                std::size_t loops = 0);

  std::size_t source() const { return source_; }
  std::size_t target() const { return target_; }
  const std::vector<Pair>& pairs() const { return pairs_; }
  std::size_t loops() const { return loops_; }

  /// Partner of a boundary point (1-based).
  std::size_t partner(std::size_t point) const;
  std::size_t through_strands() const;

  PlanarDiagram with_loops(std::size_t loops) const;

  /// Same pairing, loops ignored.
  bool same_pairing(const PlanarDiagram& o) const;
  bool operator==(const PlanarDiagram& o) const = default;

  std::string to_string() const;

 private:
  std::size_t source_ = 0;
  std::size_t target_ = 0;
  std::vector<Pair> pairs_;
  std::size_t loops_ = 0;
};

enum class LetterOp { Cap, Cup };

/// Cap(i) joins strands i, i+1 (object shrinks by 2); Cup(i) inserts a new
/// pair at positions i, i+1 (object grows by 2).
struct Letter {
  LetterOp op;
  std::size_t index;

  bool operator==(const Letter&) const = default;
};

struct TLWord {
  std::size_t source = 0;
  std::vector<Letter> letters;

  /// Strand count after the whole word; throws InvalidWord.
  std::size_t target() const;
  bool operator==(const TLWord&) const = default;
};

PlanarDiagram identity_diagram(std::size_t n);
PlanarDiagram generator_h(std::size_t n, std::size_t i);
/// Cap(i) on k strands, Hom(k, k-2).
PlanarDiagram cap_diagram(std::size_t k, std::size_t i);
/// Cup(i) on k strands, Hom(k, k+2).
PlanarDiagram cup_diagram(std::size_t k, std::size_t i);

/// g after f: f is stacked below g. Throws ShapeMismatch.
PlanarDiagram compose(const PlanarDiagram& g, const PlanarDiagram& f);
/// f to the left of g.
PlanarDiagram tensor(const PlanarDiagram& f, const PlanarDiagram& g);

PlanarDiagram word_to_diagram(const TLWord& w);
/// Caps first (innermost adjacent bottom pairs), then cups. The loop count
/// of D is not encoded in the word.
TLWord diagram_to_word(const PlanarDiagram& d);

/// Loop-free basis of Hom(m, n); Catalan((m+n)/2) diagrams, empty if m+n odd.
std::vector<PlanarDiagram> enumerate_basis(std::size_t m, std::size_t n);

}  // namespace tlfiber
