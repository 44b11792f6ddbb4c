#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qems {

/// Ordered tensor-product factorization of the system Hilbert space.
/// Subsystem order is fixed project-wide: (transmon, cavity, nanoresonator).
/// The first subsystem varies slowest in the composite basis index, matching
/// the Kronecker-product convention kron(A, B)(i*rB + j, ...) used throughout.
struct HilbertLayout {
  std::vector<int> dims;
  std::vector<std::string> labels;

  HilbertLayout() = default;
  HilbertLayout(std::vector<int> d, std::vector<std::string> names)
      : dims(std::move(d)), labels(std::move(names)) {
    if (dims.size() != labels.size())
      throw std::invalid_argument("HilbertLayout: dims/labels size mismatch");
    for (int dim : dims)
      if (dim < 2)
        throw std::invalid_argument("HilbertLayout: every dim must be >= 2");
  }

  /// Default truncation: 3 transmon levels, 4 cavity photons, 5 phonons.
  static HilbertLayout standard() {
    return HilbertLayout({3, 4, 5}, {"transmon", "cavity", "nanoresonator"});
  }

  int total() const {
    int d = 1;
    for (int dim : dims) d *= dim;
    return d;
  }

  int subsystems() const { return static_cast<int>(dims.size()); }

  bool operator==(const HilbertLayout& other) const {
    return dims == other.dims;
  }
};

}  // namespace qems
