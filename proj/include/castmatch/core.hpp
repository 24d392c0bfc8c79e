#pragma once

#include <cstddef>
#include <vector>

namespace castmatch {

// One face appearance as a fixed-dimension real vector. Descriptors are
// L2-normalized at ingestion; the math below does not require unit norm.
struct FaceDescriptor {
  std::vector<double> values;

  std::size_t dim() const { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
  double& operator[](std::size_t i) { return values[i]; }
  bool operator==(const FaceDescriptor&) const = default;
};

// Returns v / ||v||. Throws ZeroVector if ||v|| < 1e-12. If expected_dim is
// nonzero, throws DimensionMismatch unless v has that length.
FaceDescriptor l2_normalize(const std::vector<double>& v, std::size_t expected_dim = 0);

double dot(const FaceDescriptor& a, const FaceDescriptor& b);
double sq_euclidean(const FaceDescriptor& a, const FaceDescriptor& b);
double euclidean(const FaceDescriptor& a, const FaceDescriptor& b);

// Sufficient statistics of a face set: count n, vector sum and sum of squared
// norms. They are additive over disjoint sets and make the mean pairwise
// squared distance between two sets an O(dim) computation instead of
// O(n_a * n_b * dim).
class FaceSetStats {
 public:
  FaceSetStats() = default;
  explicit FaceSetStats(std::size_t dim) : vector_sum_(dim, 0.0) {}

  static FaceSetStats from_faces(std::size_t dim, const std::vector<FaceDescriptor>& faces);

  void add(const FaceDescriptor& f);
  void merge(const FaceSetStats& other);

  std::size_t count() const { return count_; }
  std::size_t dim() const { return vector_sum_.size(); }
  const std::vector<double>& vector_sum() const { return vector_sum_; }
  double sqnorm_sum() const { return sqnorm_sum_; }

 private:
  std::size_t count_ = 0;
  std::vector<double> vector_sum_;
  double sqnorm_sum_ = 0.0;
};

// Mean of ||a - b||^2 over all pairs (a in A, b in B), computed in closed form
// from the sets' statistics. Throws EmptySet if either count is zero.
double mean_pairwise_sqdist(const FaceSetStats& a, const FaceSetStats& b);

}  // namespace castmatch
