#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fedkm/error.hpp"

namespace fedkm {

// Dense row-major matrix of doubles.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  std::span<const double> row(std::size_t i) const { return {data.data() + i * cols, cols}; }
  std::span<double> row(std::size_t i) { return {data.data() + i * cols, cols}; }
  double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  bool empty() const { return rows == 0; }

  void append_row(std::span<const double> v);
};

enum class Label : std::uint8_t { benign = 0, attack = 1 };

// Preprocessed feature table. Row ids are stable across every transform so
// that shards and splits can always be traced back to source rows.
struct Dataset {
  Matrix features;  // all values in [0,1]
  std::optional<std::vector<Label>> labels;
  std::vector<std::int64_t> row_ids;
  std::vector<std::string> feature_names;

  std::size_t rows() const { return features.rows; }
  std::size_t dim() const { return features.cols; }
  bool labeled() const { return labels.has_value(); }

  // Throws ContractError when an invariant does not hold.
  void validate() const;

  Dataset take_rows(std::span<const std::size_t> idx) const;
};

enum class PartitionScheme : std::uint8_t { by_class, by_key, by_hash };

std::string to_string(PartitionScheme s);
PartitionScheme parse_partition_scheme(const std::string& s);

struct FederatedDataset {
  std::vector<Dataset> shards;
  std::vector<std::string> shard_names;
  PartitionScheme scheme = PartitionScheme::by_hash;

  std::size_t clients() const { return shards.size(); }
  std::size_t total_rows() const;
};

struct CentroidSet {
  Matrix centroids;  // k x dim

  std::size_t k() const { return centroids.rows; }
  std::size_t dim() const { return centroids.cols; }
};

struct Assignment {
  std::vector<int> cluster;        // per row, in [0, k)
  std::vector<std::size_t> sizes;  // row count per cluster
};

}  // namespace fedkm
