#include "tlfiber/multiplicity.hpp"

#include <algorithm>
#include <sstream>

namespace tlfiber {

std::size_t JordanData::total() const {
  std::size_t t = 0;
  for (std::size_t k = 0; k < sizes.size(); ++k) t += (k + 1) * sizes[k];
  return t;
}

MultiplicityFunction::MultiplicityFunction(std::vector<JordanData> entries) {
  for (auto& e : entries) {
    if (e.eigenvalue.is_zero())
      throw InvalidParameter("multiplicity function with eigenvalue 0");
    while (!e.sizes.empty() && e.sizes.back() == 0) e.sizes.pop_back();
    if (e.sizes.empty()) continue;
    if (!entries_.empty() && entries_.front().eigenvalue.field() != e.eigenvalue.field())
      throw FieldMismatch("multiplicity function mixes scalar fields");
    entries_.push_back(std::move(e));
  }
  std::sort(entries_.begin(), entries_.end(), [](const JordanData& a, const JordanData& b) {
    return Scalar::canonical_less(a.eigenvalue, b.eigenvalue);
  });
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i].eigenvalue == entries_[i - 1].eigenvalue)
      throw InvalidParameter("duplicate eigenvalue " + entries_[i].eigenvalue.to_string() +
                             " in multiplicity function");
}

const std::vector<std::size_t>* MultiplicityFunction::find(const Scalar& z,
                                                           double radius) const {
  for (const auto& e : entries_) {
    if (e.eigenvalue.field() == z.field() && e.eigenvalue == z) return &e.sizes;
    if (radius > 0 && std::abs(e.eigenvalue.to_complex() - z.to_complex()) <= radius)
      return &e.sizes;
  }
  return nullptr;
}

std::size_t MultiplicityFunction::count(const Scalar& z, std::size_t k,
                                        double radius) const {
  const auto* sizes = find(z, radius);
  if (!sizes || k == 0 || k > sizes->size()) return 0;
  return (*sizes)[k - 1];
}

std::size_t MultiplicityFunction::total() const {
  std::size_t t = 0;
  for (const auto& e : entries_) t += e.total();
  return t;
}

Field MultiplicityFunction::field() const {
  return entries_.empty() ? Field::Rational : entries_.front().eigenvalue.field();
}

bool MultiplicityFunction::equals(const MultiplicityFunction& o, double radius) const {
  if (entries_.size() != o.entries_.size()) return false;
  if (radius <= 0) {
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (!(entries_[i].eigenvalue == o.entries_[i].eigenvalue) ||
          entries_[i].sizes != o.entries_[i].sizes)
        return false;
    return true;
  }
  // Greedy pairing in canonical order; each entry of `o` is used once.
  std::vector<bool> used(o.entries_.size(), false);
  for (const auto& e : entries_) {
    bool matched = false;
    for (std::size_t j = 0; j < o.entries_.size() && !matched; ++j) {
      if (used[j]) continue;
      const auto& f = o.entries_[j];
      if (std::abs(e.eigenvalue.to_complex() - f.eigenvalue.to_complex()) <= radius &&
          e.sizes == f.sizes) {
        used[j] = true;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

std::string MultiplicityFunction::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    os << (i ? ", " : "") << entries_[i].eigenvalue.to_string() << ": (";
    for (std::size_t k = 0; k < entries_[i].sizes.size(); ++k)
      os << (k ? "," : "") << entries_[i].sizes[k];
    os << ")";
  }
  os << "}";
  return os.str();
}

}  // namespace tlfiber
