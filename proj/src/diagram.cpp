#include "tlfiber/diagram.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace tlfiber {

namespace {

// Position on the boundary circle: bottom left to right, then top right to left.
std::size_t cyclic_position(std::size_t point, std::size_t m, std::size_t n) {
  return point <= m ? point - 1 : m + (n - (point - m));
}

}  // namespace

PlanarDiagram::PlanarDiagram(std::size_t source, std::size_t target, std::vector<Pair> pairs,
                             std::size_t loops)
    : source_(source), target_(target), loops_(loops) {
  const std::size_t total = source + target;
  if (total % 2 != 0)
    throw InvalidDiagram("odd number of boundary points " + std::to_string(total));
  if (pairs.size() * 2 != total)
    throw InvalidDiagram("expected " + std::to_string(total / 2) + " pairs, got " +
                         std::to_string(pairs.size()));
  std::vector<bool> seen(total + 1, false);
  for (auto& [a, b] : pairs) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > total || a == b)
      throw InvalidDiagram("pair (" + std::to_string(a) + "," + std::to_string(b) +
                           ") out of range");
    if (seen[a] || seen[b]) throw InvalidDiagram("point used twice");
    seen[a] = seen[b] = true;
  }
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      auto x1 = cyclic_position(pairs[i].first, source, target);
      auto y1 = cyclic_position(pairs[i].second, source, target);
      auto x2 = cyclic_position(pairs[j].first, source, target);
      auto y2 = cyclic_position(pairs[j].second, source, target);
      if (x1 > y1) std::swap(x1, y1);
      if (x2 > y2) std::swap(x2, y2);
      if ((x1 < x2 && x2 < y1 && y1 < y2) || (x2 < x1 && x1 < y2 && y2 < y1))
        throw InvalidDiagram("pairs cross");
    }
  std::sort(pairs.begin(), pairs.end());
  pairs_ = std::move(pairs);
}

std::size_t PlanarDiagram::partner(std::size_t point) const {
  for (const auto& [a, b] : pairs_) {
    if (a == point) return b;
    if (b == point) return a;
  }
  throw IndexOutOfRange("no boundary point " + std::to_string(point));
}

std::size_t PlanarDiagram::through_strands() const {
  return static_cast<std::size_t>(std::count_if(pairs_.begin(), pairs_.end(), [&](const Pair& p) {
    return p.first <= source_ && p.second > source_;
  }));
}

PlanarDiagram PlanarDiagram::with_loops(std::size_t loops) const {
  PlanarDiagram d = *this;
  d.loops_ = loops;
  return d;
}

bool PlanarDiagram::same_pairing(const PlanarDiagram& o) const {
  return source_ == o.source_ && target_ == o.target_ && pairs_ == o.pairs_;
}

std::string PlanarDiagram::to_string() const {
  std::ostringstream os;
  os << "Hom(" << source_ << "," << target_ << ") {";
  for (std::size_t i = 0; i < pairs_.size(); ++i)
    os << (i ? "," : "") << "{" << pairs_[i].first << "," << pairs_[i].second << "}";
  os << "} loops " << loops_;
  return os.str();
}

std::size_t TLWord::target() const {
  std::size_t k = source;
  for (std::size_t pos = 0; pos < letters.size(); ++pos) {
    const auto& l = letters[pos];
    if (l.op == LetterOp::Cap) {
      if (k < 2 || l.index < 1 || l.index > k - 1)
        throw InvalidWord("Cap(" + std::to_string(l.index) + ") on " + std::to_string(k) +
                          " strands at letter " + std::to_string(pos + 1));
      k -= 2;
    } else {
      if (l.index < 1 || l.index > k + 1)
        throw InvalidWord("Cup(" + std::to_string(l.index) + ") on " + std::to_string(k) +
                          " strands at letter " + std::to_string(pos + 1));
      k += 2;
    }
  }
  return k;
}

PlanarDiagram identity_diagram(std::size_t n) {
  std::vector<PlanarDiagram::Pair> pairs;
  for (std::size_t i = 1; i <= n; ++i) pairs.emplace_back(i, n + i);
  return PlanarDiagram(n, n, std::move(pairs));
}

PlanarDiagram generator_h(std::size_t n, std::size_t i) {
  if (n < 2 || i < 1 || i > n - 1)
    throw IndexOutOfRange("h_" + std::to_string(i) + " in End(" + std::to_string(n) + ")");
  std::vector<PlanarDiagram::Pair> pairs{{i, i + 1}, {n + i, n + i + 1}};
  for (std::size_t j = 1; j <= n; ++j)
    if (j != i && j != i + 1) pairs.emplace_back(j, n + j);
  return PlanarDiagram(n, n, std::move(pairs));
}

PlanarDiagram cap_diagram(std::size_t k, std::size_t i) {
  if (k < 2 || i < 1 || i > k - 1)
    throw IndexOutOfRange("Cap(" + std::to_string(i) + ") on " + std::to_string(k) + " strands");
  const std::size_t top0 = k;
  std::vector<PlanarDiagram::Pair> pairs{{i, i + 1}};
  for (std::size_t j = 1; j <= k; ++j) {
    if (j < i) pairs.emplace_back(j, top0 + j);
    if (j > i + 1) pairs.emplace_back(j, top0 + j - 2);
  }
  return PlanarDiagram(k, k - 2, std::move(pairs));
}

PlanarDiagram cup_diagram(std::size_t k, std::size_t i) {
  if (i < 1 || i > k + 1)
    throw IndexOutOfRange("Cup(" + std::to_string(i) + ") on " + std::to_string(k) + " strands");
  const std::size_t top0 = k;
  std::vector<PlanarDiagram::Pair> pairs{{top0 + i, top0 + i + 1}};
  for (std::size_t j = 1; j <= k; ++j) pairs.emplace_back(j, top0 + (j < i ? j : j + 2));
  return PlanarDiagram(k, k + 2, std::move(pairs));
}

PlanarDiagram compose(const PlanarDiagram& g, const PlanarDiagram& f) {
  if (f.target() != g.source())
    throw ShapeMismatch("compose: f ends at " + std::to_string(f.target()) +
                        " but g starts at " + std::to_string(g.source()));
  const std::size_t m = f.source(), k = f.target(), n = g.target();
  std::vector<std::size_t> pf(m + k + 1), pg(k + n + 1);
  for (const auto& [a, b] : f.pairs()) pf[a] = b, pf[b] = a;
  for (const auto& [a, b] : g.pairs()) pg[a] = b, pg[b] = a;

  std::vector<bool> middle_seen(k + 1, false);
  std::vector<PlanarDiagram::Pair> pairs;

  // Walks from a middle point j entering through the given side until the
  // path exits; returns the endpoint in the composite's numbering.
  auto walk = [&](std::size_t j, bool into_g) {
    while (true) {
      middle_seen[j] = true;
      if (into_g) {
        const std::size_t q = pg[j];
        if (q > k) return m + (q - k);
        j = q;
      } else {
        const std::size_t p = pf[m + j];
        if (p <= m) return p;
        j = p - m;
      }
      middle_seen[j] = true;
      into_g = !into_g;
    }
  };

  for (std::size_t i = 1; i <= m; ++i) {
    const std::size_t p = pf[i];
    if (p <= m) {
      if (i < p) pairs.emplace_back(i, p);
      continue;
    }
    const std::size_t end = walk(p - m, true);
    if (end > m || i < end) pairs.emplace_back(i, end);
  }
  for (std::size_t t = 1; t <= n; ++t) {
    const std::size_t q = pg[k + t];
    if (q > k) {
      if (k + t < q) pairs.emplace_back(m + t, m + (q - k));
      continue;
    }
    const std::size_t end = walk(q, false);
    if (end > m && m + t < end) pairs.emplace_back(m + t, end);
  }

  std::size_t loops = f.loops() + g.loops();
  for (std::size_t j = 1; j <= k; ++j) {
    if (middle_seen[j]) continue;
    ++loops;
    std::size_t x = j;
    do {
      middle_seen[x] = true;
      x = pf[m + x] - m;
      middle_seen[x] = true;
      x = pg[x];
    } while (x != j);
  }
  return PlanarDiagram(m, n, std::move(pairs), loops);
}

PlanarDiagram tensor(const PlanarDiagram& f, const PlanarDiagram& g) {
  const std::size_t m1 = f.source(), n1 = f.target(), m2 = g.source(), n2 = g.target();
  auto from_f = [&](std::size_t p) { return p <= m1 ? p : m1 + m2 + (p - m1); };
  auto from_g = [&](std::size_t p) { return p <= m2 ? m1 + p : m1 + m2 + n1 + (p - m2); };
  std::vector<PlanarDiagram::Pair> pairs;
  for (const auto& [a, b] : f.pairs()) pairs.emplace_back(from_f(a), from_f(b));
  for (const auto& [a, b] : g.pairs()) pairs.emplace_back(from_g(a), from_g(b));
  return PlanarDiagram(m1 + m2, n1 + n2, std::move(pairs), f.loops() + g.loops());
}

PlanarDiagram word_to_diagram(const TLWord& w) {
  w.target();
  PlanarDiagram d = identity_diagram(w.source);
  std::size_t k = w.source;
  for (const auto& l : w.letters) {
    if (l.op == LetterOp::Cap) {
      d = compose(cap_diagram(k, l.index), d);
      k -= 2;
    } else {
      d = compose(cup_diagram(k, l.index), d);
      k += 2;
    }
  }
  return d;
}

TLWord diagram_to_word(const PlanarDiagram& d) {
  const std::size_t m = d.source(), n = d.target();
  TLWord w{m, {}};

  auto peel = [&](std::vector<std::size_t> points) {
    std::vector<std::size_t> positions;
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t p = 0; p + 1 < points.size(); ++p)
        if (d.partner(points[p]) == points[p + 1]) {
          positions.push_back(p + 1);
          points.erase(points.begin() + static_cast<std::ptrdiff_t>(p),
                       points.begin() + static_cast<std::ptrdiff_t>(p + 2));
          progress = true;
          break;
        }
    }
    return positions;
  };

  std::vector<std::size_t> bottom(m), top(n);
  for (std::size_t i = 0; i < m; ++i) bottom[i] = i + 1;
  for (std::size_t i = 0; i < n; ++i) top[i] = m + i + 1;
  for (std::size_t p : peel(bottom)) w.letters.push_back({LetterOp::Cap, p});
  const auto cups = peel(top);
  for (auto it = cups.rbegin(); it != cups.rend(); ++it)
    w.letters.push_back({LetterOp::Cup, *it});
  return w;
}

std::vector<PlanarDiagram> enumerate_basis(std::size_t m, std::size_t n) {
  const std::size_t total = m + n;
  if (total % 2 != 0) return {};
  // cyclic position -> boundary point
  std::vector<std::size_t> point(total);
  for (std::size_t p = 1; p <= total; ++p) point[cyclic_position(p, m, n)] = p;

  std::vector<PlanarDiagram> out;
  std::vector<PlanarDiagram::Pair> current;
  // Noncrossing matchings of the cyclic interval [lo, hi) followed by `rest`.
  std::function<void(std::vector<std::pair<std::size_t, std::size_t>>)> fill =
      [&](std::vector<std::pair<std::size_t, std::size_t>> intervals) {
        while (!intervals.empty() && intervals.back().first == intervals.back().second)
          intervals.pop_back();
        if (intervals.empty()) {
          out.emplace_back(m, n, current);
          return;
        }
        const auto [lo, hi] = intervals.back();
        intervals.pop_back();
        for (std::size_t j = lo + 1; j < hi; j += 2) {
          current.emplace_back(point[lo], point[j]);
          auto next = intervals;
          next.emplace_back(j + 1, hi);
          next.emplace_back(lo + 1, j);
          fill(std::move(next));
          current.pop_back();
        }
      };
  fill({{0, total}});
  return out;
}

}  // namespace tlfiber
