#pragma once

// DimTable: (homological index, optional internal degree) -> dimension, with
// an explicit validity window.  Queries outside the window are rejected, so
// an unknown entry can never masquerade as zero.

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "hlab/errors.hpp"

namespace hlab {

struct DimKey {
  int i = 0;
  std::optional<int> internal;
  bool operator<(const DimKey& o) const {
    return std::tie(i, internal) < std::tie(o.i, o.internal);
  }
  bool operator==(const DimKey& o) const { return i == o.i && internal == o.internal; }
};

class DimTable {
 public:
  struct Window {
    int min_i = 0;
    int max_i = -1;  // empty by default
    std::optional<std::pair<int, int>> internal;  // inclusive degree range when graded
    bool graded() const { return internal.has_value(); }
    bool empty() const { return max_i < min_i; }
  };

  Window window;

  void set(int i, long value) { entries_[DimKey{i, std::nullopt}] = value; }
  void set(int i, int d, long value) { entries_[DimKey{i, d}] = value; }

  long at(int i) const { return lookup(DimKey{i, std::nullopt}); }
  long at(int i, int d) const { return lookup(DimKey{i, d}); }

  const std::map<DimKey, long>& entries() const { return entries_; }

  // Ungraded row min_i..max_i as a vector (handy in tests and printing).
  std::vector<long> row() const {
    std::vector<long> out;
    for (int i = window.min_i; i <= window.max_i; ++i) out.push_back(at(i));
    return out;
  }

  enum class Compare { kEqual, kDiffer, kNoOverlap };

  // Exact comparison over the intersection of the two validity windows.
  static Compare compare(const DimTable& a, const DimTable& b, std::string* detail = nullptr) {
    if (a.window.graded() != b.window.graded()) return Compare::kNoOverlap;
    int lo = std::max(a.window.min_i, b.window.min_i);
    int hi = std::min(a.window.max_i, b.window.max_i);
    if (hi < lo) return Compare::kNoOverlap;
    if (!a.window.graded()) {
      for (int i = lo; i <= hi; ++i)
        if (a.at(i) != b.at(i)) {
          if (detail)
            *detail = "i=" + std::to_string(i) + ": " + std::to_string(a.at(i)) + " vs " +
                      std::to_string(b.at(i));
          return Compare::kDiffer;
        }
      return Compare::kEqual;
    }
    int dlo = std::max(a.window.internal->first, b.window.internal->first);
    int dhi = std::min(a.window.internal->second, b.window.internal->second);
    if (dhi < dlo) return Compare::kNoOverlap;
    for (int i = lo; i <= hi; ++i)
      for (int d = dlo; d <= dhi; ++d)
        if (a.at(i, d) != b.at(i, d)) {
          if (detail)
            *detail = "(i=" + std::to_string(i) + ",d=" + std::to_string(d) + "): " +
                      std::to_string(a.at(i, d)) + " vs " + std::to_string(b.at(i, d));
          return Compare::kDiffer;
        }
    return Compare::kEqual;
  }

  std::string str() const {
    std::ostringstream os;
    if (!window.graded()) {
      os << "(";
      for (int i = window.min_i; i <= window.max_i; ++i)
        os << (i > window.min_i ? ", " : "") << at(i);
      os << ")";
    } else {
      for (int d = window.internal->first; d <= window.internal->second; ++d) {
        os << (d > window.internal->first ? "; " : "") << "d=" << d << ": (";
        for (int i = window.min_i; i <= window.max_i; ++i) os << (i > window.min_i ? ", " : "") << at(i, d);
        os << ")";
      }
    }
    return os.str();
  }

 private:
  long lookup(const DimKey& k) const {
    if (k.i < window.min_i || k.i > window.max_i || window.graded() != k.internal.has_value())
      throw InsufficientPrecisionError("dim table query outside validity window");
    if (k.internal &&
        (*k.internal < window.internal->first || *k.internal > window.internal->second))
      throw InsufficientPrecisionError("dim table query outside internal-degree window");
    auto it = entries_.find(k);
    return it == entries_.end() ? 0 : it->second;
  }

  std::map<DimKey, long> entries_;
};

// Per-degree dimensions of a graded object, complete = exhausted (all higher
// degrees are genuinely zero, not merely unknown).
struct HilbertSeries {
  std::vector<long> dims;
  bool complete = false;

  long dim(int d) const {
    if (d < 0) return 0;
    if (d < static_cast<int>(dims.size())) return dims[static_cast<std::size_t>(d)];
    if (complete) return 0;
    throw InsufficientPrecisionError("Hilbert function query beyond truncation");
  }
  int truncation() const { return static_cast<int>(dims.size()) - 1; }
  long total() const {
    long t = 0;
    for (long v : dims) t += v;
    return t;
  }
  std::string str() const {
    std::string s = "(";
    for (std::size_t k = 0; k < dims.size(); ++k)
      s += (k ? ", " : "") + std::to_string(dims[k]);
    return s + (complete ? ")" : ", ...)");
  }
};

}  // namespace hlab
