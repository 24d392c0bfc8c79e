#include "castmatch/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "castmatch/errors.hpp"

namespace castmatch {

FaceDescriptor l2_normalize(const std::vector<double>& v, std::size_t expected_dim) {
  if (expected_dim != 0 && v.size() != expected_dim) {
    throw DimensionMismatch("l2_normalize: vector has length " + std::to_string(v.size()) +
                            ", expected " + std::to_string(expected_dim));
  }
  double sq = 0.0;
  for (double x : v) sq += x * x;
  const double norm = std::sqrt(sq);
  if (norm < 1e-12) {
    throw ZeroVector("l2_normalize: vector norm below 1e-12");
  }
  FaceDescriptor out;
  out.values.resize(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.values[i] = v[i] / norm;
  return out;
}

namespace {

void require_same_dim(const FaceDescriptor& a, const FaceDescriptor& b, const char* where) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(std::string(where) + ": dims " + std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
  }
}

}  // namespace

double dot(const FaceDescriptor& a, const FaceDescriptor& b) {
  require_same_dim(a, b, "dot");
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a.values[i] * b.values[i];
  return s;
}

double sq_euclidean(const FaceDescriptor& a, const FaceDescriptor& b) {
  require_same_dim(a, b, "sq_euclidean");
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double d = a.values[i] - b.values[i];
    s += d * d;
  }
  return s;
}

double euclidean(const FaceDescriptor& a, const FaceDescriptor& b) {
  return std::sqrt(sq_euclidean(a, b));
}

FaceSetStats FaceSetStats::from_faces(std::size_t dim, const std::vector<FaceDescriptor>& faces) {
  FaceSetStats stats(dim);
  for (const FaceDescriptor& f : faces) stats.add(f);
  return stats;
}

void FaceSetStats::add(const FaceDescriptor& f) {
  if (f.dim() != dim()) {
    throw DimensionMismatch("FaceSetStats::add: face dim " + std::to_string(f.dim()) +
                            " vs stats dim " + std::to_string(dim()));
  }
  double sq = 0.0;
  for (std::size_t i = 0; i < f.dim(); ++i) {
    vector_sum_[i] += f.values[i];
    sq += f.values[i] * f.values[i];
  }
  sqnorm_sum_ += sq;
  ++count_;
}

void FaceSetStats::merge(const FaceSetStats& other) {
  if (other.dim() != dim()) {
    throw DimensionMismatch("FaceSetStats::merge: dims " + std::to_string(other.dim()) + " vs " +
                            std::to_string(dim()));
  }
  for (std::size_t i = 0; i < vector_sum_.size(); ++i) vector_sum_[i] += other.vector_sum_[i];
  sqnorm_sum_ += other.sqnorm_sum_;
  count_ += other.count_;
}

double mean_pairwise_sqdist(const FaceSetStats& a, const FaceSetStats& b) {
  if (a.count() == 0 || b.count() == 0) {
    throw EmptySet("mean_pairwise_sqdist: empty face set");
  }
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("mean_pairwise_sqdist: dims " + std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
  }
  const double na = static_cast<double>(a.count());
  const double nb = static_cast<double>(b.count());
  double cross = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) cross += a.vector_sum()[i] * b.vector_sum()[i];
  const double value = a.sqnorm_sum() / na + b.sqnorm_sum() / nb - 2.0 * cross / (na * nb);
  // Cancellation can leave a tiny negative residue for near-identical sets.
  return std::max(value, 0.0);
}

}  // namespace castmatch
